#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "wsets/qsqrt2.hpp"
#include "wsets/step_fn.hpp"

using namespace wsets;

TEST_CASE("RPi stays canonical and prints in pi units") {
  CHECK(RPi(-48, 14) == RPi(-24, 7));
  CHECK(RPi(-48, 14).den() == 7);
  CHECK(RPi(-24, 7).str() == "-24pi/7");
  CHECK(RPi(1).str() == "pi");
  CHECK(RPi().str() == "0");
  CHECK(RPi(-1, 2) < RPi(-3, 7));
  CHECK((RPi(24, 7) / RPi(2)) == make_rational(12, 7));
  CHECK(reduce_symmetric(RPi(7)) == RPi(-1));
  CHECK(reduce_symmetric(RPi(48, 7)) == RPi(6, 7));
  CHECK(wrap_index(RPi(-8, 7), RPi()) == -1);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("RPi survives numbers beyond 64 bits") {
  const Integer big = ipow(5, 40);
  RPi x(big, big + 1);
  RPi y = x * Rational(big + 1);
  CHECK(y == RPi(big, 1));
  CHECK(y.str() == big.get_str() + "pi");
}

TEST_CASE("Q(sqrt2) arithmetic is exact") {
  const QSqrt2 r = QSqrt2::inv_sqrt2();
  CHECK(r * r == QSqrt2(make_rational(1, 2)));
  CHECK(QSqrt2::sqrt2() * r == QSqrt2(1));
  CHECK(QSqrt2(3, -2).sign() == 1);   // 3 - 2√2 ≈ 0.17
  CHECK(QSqrt2(-3, 2).sign() == -1);
  CHECK(QSqrt2(1, -1).sign() == -1);  // 1 - √2
  CHECK(QSqrt2(0).sign() == 0);
  const QSqrt2 x(make_rational(2, 3), make_rational(-5, 7));
  CHECK(x * x.inverse() == QSqrt2(1));
  CHECK(r.str() == "1/2*sqrt2");
  const QSqrt2Complex z(r, r);
  CHECK(z.norm() == QSqrt2(1));
  CHECK(z * z.conj() == QSqrt2Complex(1));
}

TEST_CASE("interval sets normalize and compare by representation") {
  IntervalSet a{{RPi(0), RPi(1)}, {RPi(1), RPi(2)}, {RPi(5), RPi(3)}};
  CHECK(a == IntervalSet{{RPi(0), RPi(2)}});
  CHECK(a.size() == 1);
  IntervalSet b{{RPi(-1), RPi(1, 2)}, {RPi(3, 2), RPi(3)}};
  CHECK((a | b) == IntervalSet{{RPi(-1), RPi(3)}});
  CHECK((a & b) == IntervalSet{{RPi(0), RPi(1, 2)}, {RPi(3, 2), RPi(2)}});
  CHECK((a - b) == IntervalSet{{RPi(1, 2), RPi(3, 2)}});
  CHECK((a ^ b) == IntervalSet{{RPi(-1), RPi(0)}, {RPi(1, 2), RPi(3, 2)}, {RPi(2), RPi(3)}});
  CHECK(dilate(b, Rational(-2)) == IntervalSet{{RPi(-6), RPi(-3)}, {RPi(-1), RPi(2)}});
  CHECK(translate(a, RPi(-2)) == IntervalSet{{RPi(-2), RPi(0)}});
  CHECK(a.contains(RPi(0)));
  CHECK_FALSE(a.contains(RPi(2)));
  CHECK_THROWS_AS(Interval(RPi(1), RPi(1)), std::invalid_argument);
  CHECK_THROWS_AS(dilate(a, Rational(0)), std::invalid_argument);
}

TEST_CASE("set algebra agrees with the midpoint-grid oracle on random inputs") {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto ra = oracle::random_raw(rng, 5, 6, 4);
    const auto rb = oracle::random_raw(rng, 5, 6, 4);
    const IntervalSet a = IntervalSet::from_pairs(ra);
    const IntervalSet b = IntervalSet::from_pairs(rb);
    const auto g = oracle::grid_of({&ra, &rb});
    auto in_a = [&](const RPi& x) { return oracle::member(ra, x); };
    auto in_b = [&](const RPi& x) { return oracle::member(rb, x); };

    CHECK(a.measure() == oracle::measure_on_grid(g, in_a));
    CHECK((a | b).measure() == oracle::measure_on_grid(g, [&](const RPi& x) { return in_a(x) || in_b(x); }));
    CHECK((a & b).measure() == oracle::measure_on_grid(g, [&](const RPi& x) { return in_a(x) && in_b(x); }));
    CHECK((a - b).measure() == oracle::measure_on_grid(g, [&](const RPi& x) { return in_a(x) && !in_b(x); }));
    // inclusion-exclusion and the symmetric-difference identity
    CHECK((a | b).measure() + (a & b).measure() == a.measure() + b.measure());
    CHECK((a ^ b) == ((a - b) | (b - a)));
    CHECK((a & b).subset_of(a));
    CHECK(a.subset_of(a | b));
    CHECK(((a - b) & b).empty());
    // membership at grid points and midpoints
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK((a | b).contains(g[i]) == (in_a(g[i]) || in_b(g[i])));
      if (i + 1 < g.size()) {
        const RPi m = oracle::midpoint(g[i], g[i + 1]);
        CHECK((a & b).contains(m) == (in_a(m) && in_b(m)));
      }
    }
    // normalized: sorted, disjoint, never adjacent
    const IntervalSet u = a | b;
    const auto& ps = u.pieces();
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].hi() < ps[i].lo());
    // dilation scales measure
    CHECK(dilate(a, Rational(-3)).measure() == a.measure() * Rational(3));
  }
}

TEST_CASE("step functions stay normalized") {
  auto f = StepFn<Count>::from_weighted({{Interval(RPi(0), RPi(2)), 1}, {Interval(RPi(1), RPi(3)), 1}});
  CHECK(f(RPi(-1)) == 0);
  CHECK(f(RPi(1, 2)) == 1);
  CHECK(f(RPi(3, 2)) == 2);
  CHECK(f(RPi(3)) == 0);
  CHECK(f.breaks().size() == 4);
  auto g = StepFn<Count>::from_weighted({{Interval(RPi(0), RPi(1)), 1}, {Interval(RPi(1), RPi(2)), 1}});
  CHECK(g.breaks().size() == 2);
  CHECK(g.support() == IntervalSet{{RPi(0), RPi(2)}});
  CHECK(g.shifted(RPi(1)).support() == IntervalSet{{RPi(1), RPi(3)}});
  CHECK(g.dilated(Rational(3)).support() == IntervalSet{{RPi(0), RPi(6)}});
  CHECK((f + g)(RPi(1, 2)) == 2);
  CHECK((f * g)(RPi(5, 2)) == 0);
  CHECK_THROWS_AS(StepFn<Count>::from_cells({RPi(1), RPi(0)}, {0, 1, 0}), std::invalid_argument);
}
