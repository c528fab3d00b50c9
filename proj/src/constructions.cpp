#include "wsets/constructions.hpp"

#include <stdexcept>
#include <tuple>

namespace wsets {

namespace {

// Everything below is in units of π: q stands for q·π.
RPi P(const Rational& q) { return RPi(q); }

Rational pw(int d, long e) { return Rational(ipow(d, static_cast<unsigned long>(e))); }

}  // namespace

std::string to_string(Variant v) { return v == Variant::base ? "base" : "shifted"; }

Variant parse_variant(const std::string& s) {
  if (s == "base") return Variant::base;
  if (s == "shifted") return Variant::shifted;
  throw std::invalid_argument("unknown variant '" + s + "' (expected base or shifted)");
}

std::string to_string(CoefficientConvention c) {
  switch (c) {
    case CoefficientConvention::corrected: return "corrected";
    case CoefficientConvention::printed_magnitude: return "printed_magnitude";
    case CoefficientConvention::printed: return "printed";
  }
  return "?";
}

void FamilyParams::validate() const {
  if (d < 2) throw std::invalid_argument("dilation factor d must be >= 2 (got " + std::to_string(d) + ")");
  if (k < 2) throw std::invalid_argument("family index k must be >= 2 (got " + std::to_string(k) + ")");
}

RPi periodic_point(int d, int k, long j) {
  FamilyParams{d, k}.validate();
  return RPi(Integer(2 * j), ipow(d, static_cast<unsigned long>(k)) - 1);
}

MultiplicityFn multiplicity_closed_form(int d, int k) {
  FamilyParams{d, k}.validate();
  std::vector<std::tuple<RPi, RPi, Count>> rows;
  const Rational n = pw(d, k) - 1;
  if (d == 2) {
    const Rational top = (pw(2, k) - 2) / n;
    const Rational half = pw(2, k - 1) / n;
    rows.emplace_back(P(-1), P(-top), 1);
    rows.emplace_back(P(-top), P(-half), 0);
    for (int j = 2; j <= k - 1; ++j) {
      rows.emplace_back(P(-pw(2, j) / n), P(-pw(2, j - 1) / n), k - j);
      rows.emplace_back(P(pw(2, j - 1) / n), P(pw(2, j) / n), k - j);
    }
    rows.emplace_back(P(-2 / n), P(2 / n), k - 1);
    rows.emplace_back(P(half), P(top), 0);
    rows.emplace_back(P(top), P(1), 1);
  } else {
    const Rational u = 2 / n;
    const Rational dm1 = d - 1;
    const Rational i6_lo = Rational(2) / d - dm1 * u / d;
    const Rational i6_hi = Rational(2) / d + u / d;
    rows.emplace_back(P(-1), P(-pw(d, k - 2) * dm1 * u), 0);                       // I1
    for (int j = 2; j <= k - 1; ++j) {
      rows.emplace_back(P(-pw(d, j - 1) * dm1 * u), P(-pw(d, j - 2) * dm1 * u), k - j);  // I2
      rows.emplace_back(P(pw(d, j - 2) * u), P(pw(d, j - 1) * u), k - j);                // I4
    }
    rows.emplace_back(P(-dm1 * u), P(u), k - 1);                                   // I3
    rows.emplace_back(P(pw(d, k - 2) * u), P(i6_lo), 0);                           // I5
    rows.emplace_back(P(i6_lo), P(i6_hi), 1);                                      // I6
    rows.emplace_back(P(i6_hi), P(1), 0);                                          // I7
  }
  return MultiplicityFn::from_rows(FundamentalDomain::symmetric, std::move(rows));
}

IntervalSet scaling_set(const FamilyParams& p) {
  p.validate();
  const int d = p.d;
  const int k = p.k;
  const Rational n = pw(d, k) - 1;
  std::vector<std::pair<RPi, RPi>> raw;
  if (d == 2) {
    const Rational top = (pw(2, k) - 2) / n;
    const Rational half = pw(2, k - 1) / n;
    for (int j = 1; j <= k - 2; ++j) {
      const Rational s = pw(2, j);
      raw.emplace_back(P(-s), P(-s + s / n));
      raw.emplace_back(P(s - s / n), P(s));
    }
    raw.emplace_back(P(-1), P(-top));
    raw.emplace_back(P(top), P(1));
    if (p.variant == Variant::base) {
      raw.emplace_back(P(-half), P(half));
    } else {
      // [-2^{k-1}π/N, -π/2) moved right by 2^{k-1}π
      const Rational shift = pw(2, k - 1);
      raw.emplace_back(P(make_rational(-1, 2)), P(half));
      raw.emplace_back(P(shift - half), P(shift - make_rational(1, 2)));
    }
  } else {
    const Rational u = 2 / n;
    const Rational dm1 = d - 1;
    const Rational lo = -pw(d, k - 2) * dm1 * u;
    raw.emplace_back(P(Rational(2) / d - dm1 * u / d), P(Rational(2) / d + u / d));
    for (int j = 1; j <= k - 2; ++j) {
      const Rational c = 2 * pw(d, j - 1);
      raw.emplace_back(P(c - pw(d, j - 1) * dm1 * u), P(c + pw(d, j - 1) * u));
    }
    if (p.variant == Variant::base) {
      raw.emplace_back(P(lo), P(pw(d, k - 2) * u));
    } else {
      // [lo, -2π/d²) moved right by 2π·d^{k-2}
      const Rational cut = Rational(-2) / (d * d);
      const Rational shift = 2 * pw(d, k - 2);
      raw.emplace_back(P(cut), P(pw(d, k - 2) * u));
      raw.emplace_back(P(shift + lo), P(shift + cut));
    }
  }
  return IntervalSet::from_pairs(raw);
}

IntervalSet wavelet_set_family(const FamilyParams& p) {
  const IntervalSet e = scaling_set(p);
  return dilate(e, Rational(p.d)) - e;
}

SwapPieces family_swap_pieces(int d, int k) {
  FamilyParams{d, k}.validate();
  const Rational n = pw(d, k) - 1;
  if (d == 2) {
    return SwapPieces{
        Interval(P(-pw(2, k) / n), P(-1)),
        Interval(P((pw(2, 2 * k - 1) - pw(2, k)) / n), P(pw(2, k - 1) - make_rational(1, 2))),
        Interval(P(-pw(2, k - 1) / n), P(make_rational(-1, 2))),
        Interval(P(pw(2, k) - pw(2, k) / n), P(pw(2, k) - 1)),
    };
  }
  const Rational u = 2 / n;
  const Rational dm1 = d - 1;
  const Rational inv_d = Rational(2) / d;
  const Rational inv_d2 = Rational(2) / (d * d);
  return SwapPieces{
      Interval(P(-pw(d, k - 1) * dm1 * u), P(-inv_d)),
      Interval(P(2 * pw(d, k - 2) - pw(d, k - 2) * dm1 * u), P(2 * pw(d, k - 2) - inv_d2)),
      Interval(P(-pw(d, k - 2) * dm1 * u), P(-inv_d2)),
      Interval(P(2 * pw(d, k - 1) - pw(d, k - 1) * dm1 * u), P(2 * pw(d, k - 1) - inv_d)),
  };
}

TranslationMap family_sigma(int d, int k) {
  const IntervalSet w1 = wavelet_set_family({d, k, Variant::base});
  const IntervalSet w2 = wavelet_set_family({d, k, Variant::shifted});
  const SwapPieces sw = family_swap_pieces(d, k);
  const Integer up = ipow(d, static_cast<unsigned long>(k - 1));
  const Integer down = ipow(d, static_cast<unsigned long>(k - 2));
  TranslationMap m{{}, w1, w2, d};
  m.branches.push_back({IntervalSet(sw.a2), -down.get_si()});
  m.branches.push_back({w1 & w2, 0});
  m.branches.push_back({IntervalSet(sw.a1), up.get_si()});
  return m;
}

namespace {

Coefficient swap_magnitude(CoefficientConvention c) {
  // 1/√2, or 1/√(2π) = (1/√2)·π^{-1/2}
  return Coefficient{QSqrt2Complex(QSqrt2::inv_sqrt2()), c == CoefficientConvention::corrected ? 0 : 1};
}

Coefficient overlap_h2(CoefficientConvention c) {
  return Coefficient{QSqrt2Complex(c == CoefficientConvention::printed ? 1 : 0), 0};
}

Coefficient negated(Coefficient c) {
  c.scale = -c.scale;
  return c;
}

void push_nonempty(DilationPeriodicFn& h, IntervalSet dom, const Coefficient& v) {
  if (!dom.empty()) h.pieces.push_back({std::move(dom), v});
}

}  // namespace

CoefficientPair family_coefficients(int d, int k, CoefficientConvention c) {
  const IntervalSet w1 = wavelet_set_family({d, k, Variant::base});
  const IntervalSet w2 = wavelet_set_family({d, k, Variant::shifted});
  const SwapPieces sw = family_swap_pieces(d, k);
  const IntervalSet overlap = w1 & w2;
  const Coefficient mag = swap_magnitude(c);
  CoefficientPair out{DilationPeriodicFn{{}, d}, DilationPeriodicFn{{}, d}};
  push_nonempty(out.h1, overlap, Coefficient{QSqrt2Complex(1), 0});
  push_nonempty(out.h1, IntervalSet(sw.a2), mag);
  push_nonempty(out.h1, IntervalSet(sw.a1), mag);
  push_nonempty(out.h2, overlap, overlap_h2(c));
  push_nonempty(out.h2, IntervalSet(sw.b1), mag);
  push_nonempty(out.h2, IntervalSet(sw.b2), negated(mag));
  return out;
}

CoefficientPair swap_coefficients(const IntervalSet& w1, const IntervalSet& w2, int d, CoefficientConvention c) {
  const IntervalSet overlap = w1 & w2;
  const IntervalSet only2 = w2 - w1;
  const Coefficient mag = swap_magnitude(c);
  CoefficientPair out{DilationPeriodicFn{{}, d}, DilationPeriodicFn{{}, d}};
  push_nonempty(out.h1, overlap, Coefficient{QSqrt2Complex(1), 0});
  push_nonempty(out.h1, w1 - w2, mag);
  push_nonempty(out.h2, overlap, overlap_h2(c));
  if (!only2.empty()) {
    push_nonempty(out.h2, only2 & IntervalSet::span(min(only2.inf(), RPi()), RPi()), mag);
    push_nonempty(out.h2, only2 & IntervalSet::span(RPi(), max(only2.sup(), RPi())), negated(mag));
  }
  return out;
}

std::pair<IntervalSet, IntervalSet> convergence_family(const RPi& a) {
  const RPi lo(-4, 7);
  const RPi hi(-1, 2);
  if (a < lo || hi < a) throw std::invalid_argument("parameter a = " + a.str() + " outside [-4pi/7, -pi/2]");
  const RPi two_a = a * Rational(2);
  IntervalSet e{{RPi(-2), RPi(-12, 7)}, {RPi(-1), RPi(-6, 7)}, {a, RPi(4, 7)},
                {RPi(6, 7), RPi(1)},    {RPi(12, 7), RPi(2)},   {RPi(24, 7), RPi(4) + a}};
  IntervalSet w{{RPi(-4), RPi(-24, 7)}, {two_a, RPi(-1)},      {RPi(-6, 7), a},
                {RPi(4, 7), RPi(6, 7)}, {RPi(1), RPi(8, 7)},   {RPi(4) + a, RPi(4)},
                {RPi(48, 7), RPi(8) + two_a}};
  return {std::move(e), std::move(w)};
}

RPi convergence_parameter(long n) {
  if (n < 0) throw std::invalid_argument("step index must be >= 0");
  return RPi(-4, 7) + RPi(make_rational(Integer(1), Integer(14) * ipow(2, static_cast<unsigned long>(n))));
}

}  // namespace wsets
