#include <doctest.h>

#include <random>

#include "wsets/constructions.hpp"

using namespace wsets;

namespace {

const QSqrt2Complex kHalfRoot(QSqrt2::inv_sqrt2());

RPi random_point_in(const IntervalSet& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> piece(0, s.size() - 1);
  std::uniform_int_distribution<long> t(1, 1008);
  const Interval& p = s.pieces()[piece(rng)];
  return p.lo() + p.length() * make_rational(t(rng), 1009);
}

}  // namespace

TEST_CASE("symbolic scalars keep powers of pi apart") {
  const SymbolicScalar h(Coefficient{kHalfRoot, 1});  // 1/sqrt(2 pi)
  const SymbolicScalar sq = h * h.conj();
  CHECK(sq.str() == "1/2/pi");
  CHECK((sq + sq).str() == "1/pi");
  CHECK_FALSE((sq + sq).as_constant().has_value());
  CHECK_FALSE((sq + sq) == SymbolicScalar(1));
  const SymbolicScalar r(kHalfRoot);
  CHECK((r * r + r * r) == SymbolicScalar(1));
  CHECK((r * r + r * r).as_constant() == QSqrt2Complex(1));
  CHECK((SymbolicScalar(1) + SymbolicScalar(-1)).is_zero());
}

TEST_CASE("dilation-periodic extension") {
  const DilationPeriodicFn h =
      DilationPeriodicFn::constant_on(IntervalSet{{RPi(1), RPi(3, 2)}}, Coefficient{QSqrt2Complex(5), 0}, 2);
  CHECK(h.eval(RPi(5, 4))->scale == QSqrt2Complex(5));
  CHECK(h.eval(RPi(5, 2))->scale == QSqrt2Complex(5));
  CHECK(h.eval(RPi(5, 1024))->scale == QSqrt2Complex(5));
  CHECK_FALSE(h.eval(RPi(7, 4)).has_value());
  CHECK_FALSE(h.eval(RPi(-5, 4)).has_value());
}

TEST_CASE("involutivity agrees with pointwise evaluation of sigma twice") {
  std::mt19937_64 rng(99);
  for (int d = 2; d <= 5; ++d) {
    for (int k = 2; k <= 6; ++k) {
      const TranslationMap s = family_sigma(d, k);
      CHECK(is_involutive(s).passed());
      for (int i = 0; i < 40; ++i) {
        const RPi x = random_point_in(s.source, rng);
        const RPi y = sigma_eval(s, x);
        CHECK(s.target.contains(y));
        CHECK(sigma_eval(s, y) == x);
      }
    }
  }
  // [π, 2π) pushed to [3π, 4π): σ² shifts by 4π there
  const IntervalSet src{{RPi(-2), RPi(-1)}, {RPi(1), RPi(2)}};
  const IntervalSet dst{{RPi(-2), RPi(-1)}, {RPi(3), RPi(4)}};
  const TranslationMap bad{{{IntervalSet{{RPi(-2), RPi(-1)}}, 0}, {IntervalSet{{RPi(1), RPi(2)}}, 1}}, src, dst, 2};
  const auto r = is_involutive(bad);
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->witness.has_value());
  const RPi x(3, 2);
  CHECK_FALSE(sigma_eval(bad, sigma_eval(bad, x)) == x);
}

TEST_CASE("unitarity under the three coefficient conventions") {
  for (int d = 2; d <= 5; ++d) {
    for (int k = 2; k <= 6; ++k) {
      CAPTURE(d);
      CAPTURE(k);
      const TranslationMap s = family_sigma(d, k);
      const auto c = family_coefficients(d, k);
      CHECK(check_unitary(c.h1, c.h2, s).passed());

      const auto pm = family_coefficients(d, k, CoefficientConvention::printed_magnitude);
      const auto rm = check_unitary(pm.h1, pm.h2, s);
      CHECK_FALSE(rm.passed());
      REQUIRE(rm.first_failure());
      CHECK(rm.first_failure()->detail.rfind("|h1|^2 + |h2|^2 = 1/pi on ", 0) == 0);

      const auto pr = family_coefficients(d, k, CoefficientConvention::printed);
      const auto rp = check_unitary(pr.h1, pr.h2, s);
      CHECK_FALSE(rp.passed());
      bool saw_two = false;
      for (const auto& ch : rp.checks()) saw_two = saw_two || ch.detail.rfind("|h1|^2 + |h2|^2 = 2 on ", 0) == 0;
      CHECK(saw_two);
    }
  }
}

TEST_CASE("interpolated wavelet for the Journe pair") {
  const TranslationMap s = family_sigma(2, 3);
  const auto c = family_coefficients(2, 3);
  const PiecewiseWavelet psi = interpolate(s.source, s.target, c.h1, c.h2, s);
  CHECK(psi.support() == (s.source | s.target));
  CHECK(psi(RPi(5, 7)) == QSqrt2Complex(1));
  CHECK(psi(RPi(-15, 14)) == kHalfRoot);         // A1
  CHECK(psi(RPi(97, 28)) == kHalfRoot);          // A2
  CHECK(psi(RPi(-15, 28)) == kHalfRoot);         // B1
  CHECK(psi(RPi(97, 14)) == -kHalfRoot);          // B2
  const auto pieces = psi.pieces();
  CHECK(pieces.size() == 3);
  // ||ψ̂||² = 2π, as for an MSF wavelet
  RPi energy;
  for (const auto& p : pieces) {
    const QSqrt2 n = p.value.norm();
    REQUIRE(n.b() == 0);
    energy += p.domain.measure() * n.a();
  }
  CHECK(energy == RPi(2));
}

TEST_CASE("interpolation refuses failing preconditions") {
  const TranslationMap s = family_sigma(3, 4);
  const auto pm = family_coefficients(3, 4, CoefficientConvention::printed_magnitude);
  try {
    interpolate(s.source, s.target, pm.h1, pm.h2, s);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    const Check* c = e.report().first_failure();
    REQUIRE(c);
    CHECK(c->name == "matrix.unitary");
  }
  const auto c = family_coefficients(3, 4);
  CHECK_THROWS_AS(interpolate(s.target, s.source, c.h1, c.h2, s), std::invalid_argument);
}

TEST_CASE("piecewise wavelets reject overlapping pieces") {
  CHECK_THROWS_AS(PiecewiseWavelet::from_pieces({{IntervalSet{{RPi(0), RPi(2)}}, QSqrt2Complex(1)},
                                                 {IntervalSet{{RPi(1), RPi(3)}}, QSqrt2Complex(1)}},
                                                2),
                  std::invalid_argument);
  const auto psi = PiecewiseWavelet::from_pieces(
      {{IntervalSet{{RPi(0), RPi(1)}}, QSqrt2Complex(1)}, {IntervalSet{{RPi(1), RPi(2)}}, QSqrt2Complex(1)}}, 2);
  CHECK(psi == PiecewiseWavelet::indicator(IntervalSet{{RPi(0), RPi(2)}}, 2));
}
