#pragma once

#include <string>

#include "wsets/rpi.hpp"

namespace wsets {

/// a + b·√2 with rational a, b. Zero iff a = b = 0 since √2 is irrational.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational a, Rational b = Rational(0));
  QSqrt2(long a) : QSqrt2(Rational(a)) {}

  static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }
  /// 1/√2 = √2/2.
  static QSqrt2 inv_sqrt2() { return QSqrt2(Rational(0), make_rational(1, 2)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// Exact sign of a + b√2.
  int sign() const;
  /// Galois conjugate a - b√2.
  QSqrt2 galois() const { return QSqrt2(a_, Rational(-b_)); }
  /// a² - 2b²
  Rational field_norm() const { return Rational(a_ * a_ - 2 * b_ * b_); }
  QSqrt2 inverse() const;
  double to_double() const;

  QSqrt2 operator-() const { return QSqrt2(Rational(-a_), Rational(-b_)); }
  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  /// "1", "-1/2*sqrt2", "1/3+2*sqrt2".
  std::string str() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

/// re + i·im with both parts in Q(√2).
class QSqrt2Complex {
 public:
  QSqrt2Complex() = default;
  QSqrt2Complex(QSqrt2 re, QSqrt2 im = QSqrt2()) : re_(std::move(re)), im_(std::move(im)) {}
  QSqrt2Complex(long re) : re_(re) {}

  const QSqrt2& re() const { return re_; }
  const QSqrt2& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  QSqrt2Complex conj() const { return QSqrt2Complex(re_, -im_); }
  /// |z|², which lies in Q(√2).
  QSqrt2 norm() const { return re_ * re_ + im_ * im_; }

  QSqrt2Complex operator-() const { return QSqrt2Complex(-re_, -im_); }
  QSqrt2Complex& operator+=(const QSqrt2Complex& o);
  QSqrt2Complex& operator-=(const QSqrt2Complex& o);
  QSqrt2Complex& operator*=(const QSqrt2Complex& o);

  friend QSqrt2Complex operator+(QSqrt2Complex x, const QSqrt2Complex& y) { return x += y; }
  friend QSqrt2Complex operator-(QSqrt2Complex x, const QSqrt2Complex& y) { return x -= y; }
  friend QSqrt2Complex operator*(QSqrt2Complex x, const QSqrt2Complex& y) { return x *= y; }
  friend bool operator==(const QSqrt2Complex& x, const QSqrt2Complex& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

  std::string str() const;

 private:
  QSqrt2 re_;
  QSqrt2 im_;
};

}  // namespace wsets
