#include "wsets/rpi.hpp"

#include <numbers>
#include <stdexcept>

namespace wsets {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ipow(long base, unsigned long exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
  if (base < 0 && (exp % 2 == 1)) out = -out;
  return out;
}

RPi::RPi(Rational coeff) : coeff_(std::move(coeff)) { coeff_.canonicalize(); }
RPi::RPi(long num, long den) : coeff_(make_rational(num, den)) {}
RPi::RPi(const Integer& num, const Integer& den) : coeff_(make_rational(num, den)) {}

double RPi::to_double() const { return coeff_.get_d() * std::numbers::pi; }

RPi& RPi::operator+=(const RPi& o) {
  coeff_ += o.coeff_;
  return *this;
}

RPi& RPi::operator-=(const RPi& o) {
  coeff_ -= o.coeff_;
  return *this;
}

RPi& RPi::operator*=(const Rational& s) {
  coeff_ *= s;
  return *this;
}

RPi operator/(const RPi& a, const Rational& s) {
  if (s == 0) throw std::domain_error("division of RPi by zero");
  return RPi(Rational(a.coeff_ / s));
}

Rational operator/(const RPi& a, const RPi& b) {
  if (b.is_zero()) throw std::domain_error("ratio with zero RPi denominator");
  return Rational(a.coeff_ / b.coeff_);
}

std::string RPi::str() const {
  if (is_zero()) return "0";
  Integer n = num();
  Integer d = den();
  std::string out;
  if (n < 0) {
    out = "-";
    n = -n;
  }
  if (n != 1) out += n.get_str();
  out += "pi";
  if (d != 1) out += "/" + d.get_str();
  return out;
}

RPi abs(const RPi& x) { return x.sign() < 0 ? -x : x; }
RPi min(const RPi& a, const RPi& b) { return b < a ? b : a; }
RPi max(const RPi& a, const RPi& b) { return a < b ? b : a; }

Integer wrap_index(const RPi& x, const RPi& start) {
  // (x - start) / 2π, floored
  return floor_of(Rational((x.coeff() - start.coeff()) / 2));
}

RPi reduce_symmetric(const RPi& x) {
  const RPi start(-1);
  return x - two_pi_times(wrap_index(x, start));
}

}  // namespace wsets
