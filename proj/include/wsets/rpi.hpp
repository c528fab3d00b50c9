#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace wsets {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical num/den rational. Throws on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Largest integer not exceeding q.
Integer floor_of(const Rational& q);

/// d^e for e >= 0.
Integer ipow(long base, unsigned long exp);

/// Exact scalar q·π. Every interval endpoint in the library lives here.
///
/// The coefficient is kept canonical (gcd(num, den) = 1, den > 0), so
/// equality of values is equality of representations.
class RPi {
 public:
  RPi() = default;
  explicit RPi(Rational coeff);
  RPi(long num, long den = 1);
  RPi(const Integer& num, const Integer& den);

  const Rational& coeff() const { return coeff_; }
  Integer num() const { return coeff_.get_num(); }
  Integer den() const { return coeff_.get_den(); }

  int sign() const { return sgn(coeff_); }
  bool is_zero() const { return sign() == 0; }
  double to_double() const;

  RPi operator-() const { return RPi(Rational(-coeff_)); }
  RPi& operator+=(const RPi& o);
  RPi& operator-=(const RPi& o);
  RPi& operator*=(const Rational& s);

  friend RPi operator+(RPi a, const RPi& b) { return a += b; }
  friend RPi operator-(RPi a, const RPi& b) { return a -= b; }
  friend RPi operator*(RPi a, const Rational& s) { return a *= s; }
  friend RPi operator*(const Rational& s, RPi a) { return a *= s; }
  friend RPi operator/(const RPi& a, const Rational& s);
  /// Ratio of two multiples of π is rational.
  friend Rational operator/(const RPi& a, const RPi& b);

  friend bool operator==(const RPi& a, const RPi& b) { return a.coeff_ == b.coeff_; }
  friend std::strong_ordering operator<=>(const RPi& a, const RPi& b) {
    int c = cmp(a.coeff_, b.coeff_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Human-readable form such as "-24pi/7", "pi", "0".
  std::string str() const;

 private:
  Rational coeff_{0};
};

inline RPi two_pi_times(const Integer& k) { return RPi(Rational(k * 2)); }
inline RPi two_pi_times(std::int64_t k) { return RPi(make_rational(2 * k)); }

RPi abs(const RPi& x);
RPi min(const RPi& a, const RPi& b);
RPi max(const RPi& a, const RPi& b);

/// Representative of x modulo 2π in [-π, π).
RPi reduce_symmetric(const RPi& x);
/// Integer k with x - 2πk in [start, start + 2π).
Integer wrap_index(const RPi& x, const RPi& start);

}  // namespace wsets
