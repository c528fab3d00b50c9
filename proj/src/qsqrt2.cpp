#include "wsets/qsqrt2.hpp"

#include <cmath>
#include <stdexcept>

namespace wsets {

QSqrt2::QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

int QSqrt2::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // opposite signs: compare a² with 2b²
  const int c = cmp(Rational(a_ * a_), Rational(2 * b_ * b_));
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

QSqrt2 QSqrt2::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt2)");
  const Rational n = field_norm();
  return QSqrt2(Rational(a_ / n), Rational(-b_ / n));
}

double QSqrt2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace

std::string QSqrt2::str() const {
  if (b_ == 0) return rational_str(a_);
  std::string sqrt_part;
  if (b_ == 1) {
    sqrt_part = "sqrt2";
  } else if (b_ == -1) {
    sqrt_part = "-sqrt2";
  } else {
    sqrt_part = rational_str(b_) + "*sqrt2";
  }
  if (a_ == 0) return sqrt_part;
  return rational_str(a_) + (b_ > 0 ? "+" : "") + sqrt_part;
}

QSqrt2Complex& QSqrt2Complex::operator+=(const QSqrt2Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

QSqrt2Complex& QSqrt2Complex::operator-=(const QSqrt2Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

QSqrt2Complex& QSqrt2Complex::operator*=(const QSqrt2Complex& o) {
  QSqrt2 re = re_ * o.re_ - im_ * o.im_;
  QSqrt2 im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string QSqrt2Complex::str() const {
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return "i*(" + im_.str() + ")";
  return re_.str() + "+i*(" + im_.str() + ")";
}

}  // namespace wsets
