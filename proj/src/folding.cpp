#include "wsets/folding.hpp"

#include <algorithm>
#include <stdexcept>

namespace wsets {

std::vector<std::pair<std::int64_t, Interval>> wrap_fragments(const Interval& piece, const RPi& start) {
  std::vector<std::pair<std::int64_t, Interval>> out;
  Integer k = wrap_index(piece.lo(), start);
  for (;; ++k) {
    const RPi cell_lo = start + two_pi_times(k);
    if (!(cell_lo < piece.hi())) break;
    const RPi cell_hi = cell_lo + RPi(2);
    const RPi lo = max(piece.lo(), cell_lo);
    const RPi hi = min(piece.hi(), cell_hi);
    if (lo < hi) {
      if (!k.fits_slong_p()) throw std::overflow_error("translation offset out of range");
      const RPi shift = two_pi_times(k);
      out.emplace_back(k.get_si(), Interval(lo - shift, hi - shift));
    }
  }
  return out;
}

long shell_floor(const Rational& m, int d) {
  if (m <= 0) throw std::invalid_argument("shell_floor needs a positive argument");
  long j = 0;
  Rational p(1);
  while (p > m) {
    p /= d;
    --j;
  }
  while (p * d <= m) {
    p *= d;
    ++j;
  }
  return j;
}

Rational dpow(int d, long j) {
  const Integer p = ipow(d, static_cast<unsigned long>(j < 0 ? -j : j));
  return j < 0 ? make_rational(Integer(1), p) : Rational(p);
}

IntervalSet dilation_domain(int d) {
  return IntervalSet{{RPi(-d), RPi(-1)}, {RPi(1), RPi(d)}};
}

std::vector<std::pair<long, Interval>> shell_fragments(const Interval& piece, int d) {
  if (piece.lo() <= RPi() && RPi() <= piece.hi()) {
    throw std::invalid_argument("shell_fragments: piece " + piece.str() + " touches 0");
  }
  const Rational a = abs(piece.lo()).coeff();
  const Rational b = abs(piece.hi()).coeff();
  const long j_lo = shell_floor(a < b ? a : b, d) - 1;
  const long j_hi = shell_floor(a < b ? b : a, d) + 1;
  const IntervalSet domain = dilation_domain(d);
  const IntervalSet p(piece);
  std::vector<std::pair<long, Interval>> out;
  for (long j = j_lo; j <= j_hi; ++j) {
    const Rational scale = dpow(d, j);
    const IntervalSet hit = p & dilate(domain, scale);
    const Rational back = 1 / scale;
    for (const auto& h : hit.pieces()) out.emplace_back(j, Interval(h.lo() * back, h.hi() * back));
  }
  return out;
}

std::vector<RPi> dilation_orbit_in(const RPi& x, int d, const RPi& lo, const RPi& hi, long bound) {
  if (x.is_zero()) throw std::invalid_argument("dilation orbit of 0");
  std::vector<RPi> out;
  // magnitudes of the same-sign part of [lo, hi]
  RPi m_lo;
  RPi m_hi;
  if (x.sign() > 0) {
    if (hi.sign() <= 0) return out;
    m_lo = max(lo, RPi());
    m_hi = hi;
  } else {
    if (lo.sign() >= 0) return out;
    m_lo = max(-hi, RPi());
    m_hi = -lo;
  }
  const Rational ax = abs(x).coeff();
  long j_lo = m_lo.is_zero() ? -bound : shell_floor(m_lo.coeff() / ax, d) - 1;
  long j_hi = shell_floor(m_hi.coeff() / ax, d) + 1;
  j_lo = std::max(j_lo, -bound);
  j_hi = std::min(j_hi, bound);
  for (long j = j_lo; j <= j_hi; ++j) {
    RPi y = x * dpow(d, j);
    if (lo <= y && y <= hi) out.push_back(std::move(y));
  }
  return out;
}

std::optional<long> dilation_exponent_into(const IntervalSet& target, const RPi& x, int d, long bound) {
  if (x.is_zero()) throw std::invalid_argument("dilation exponent of 0");
  if (target.empty()) return std::nullopt;
  // magnitude range of the target
  std::optional<Rational> m_min;
  Rational m_max(0);
  for (const auto& p : target.pieces()) {
    const bool straddles = p.lo() <= RPi() && RPi() <= p.hi();
    const Rational a = abs(p.lo()).coeff();
    const Rational b = abs(p.hi()).coeff();
    const Rational lo_mag = straddles ? Rational(0) : (a < b ? a : b);
    if (!m_min || lo_mag < *m_min) m_min = lo_mag;
    if (a > m_max) m_max = a;
    if (b > m_max) m_max = b;
  }
  const Rational ax = abs(x).coeff();
  long n_lo = *m_min == 0 ? -bound : shell_floor(Rational(*m_min / ax), d) - 1;
  long n_hi = shell_floor(Rational(m_max / ax), d) + 1;
  n_lo = std::max(n_lo, -bound);
  n_hi = std::min(n_hi, bound);
  for (long n = n_lo; n <= n_hi; ++n) {
    if (target.contains(x * dpow(d, n))) return n;
  }
  return std::nullopt;
}

}  // namespace wsets
