#pragma once

/// @file complex.hpp
/// @brief Complex numbers over Real, with principal square and cube roots.

#include "bring/real.hpp"

namespace bring {

class Complex {
 public:
  explicit Complex(int bits = ambient_precision()) : re_(bits), im_(bits) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(const mpq_class& re, int bits) : re_(re, bits), im_(bits) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  int precision() const { return std::max(re_.precision(), im_.precision()); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  Complex operator-() const { return {-re_, -im_}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    if (b.is_zero()) throw std::domain_error("complex division by zero");
    // Smith's scaling keeps intermediate magnitudes bounded.
    if (abs(b.re_) >= abs(b.im_)) {
      Real t = b.im_ / b.re_;
      Real den = b.re_ + b.im_ * t;
      return {(a.re_ + a.im_ * t) / den, (a.im_ - a.re_ * t) / den};
    }
    Real t = b.re_ / b.im_;
    Real den = b.re_ * t + b.im_;
    return {(a.re_ * t + a.im_) / den, (a.im_ * t - a.re_) / den};
  }
  Complex& operator+=(const Complex& b) { return *this = *this + b; }
  Complex& operator-=(const Complex& b) { return *this = *this - b; }
  Complex& operator*=(const Complex& b) { return *this = *this * b; }
  Complex& operator/=(const Complex& b) { return *this = *this / b; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  friend Real abs(const Complex& a) { return hypot(a.re_, a.im_); }
  friend Complex conj(const Complex& a) { return {a.re_, -a.im_}; }

  /// Principal square root (branch cut on the negative real axis).
  friend Complex sqrt(const Complex& a) {
    const int bits = a.precision();
    if (a.is_zero()) return Complex(bits);
    Real two(2, bits);
    Real r = abs(a);
    if (a.re_.sign() >= 0) {
      Real t = sqrt((r + a.re_) / two);
      return {t, a.im_ / (two * t)};
    }
    Real t = sqrt((r - a.re_) / two);
    return {abs(a.im_) / (two * t), copysign(t, a.im_)};
  }

  /// Principal cube root, arg in (-pi/3, pi/3].
  friend Complex cbrt(const Complex& a) {
    const int bits = a.precision();
    if (a.is_zero()) return Complex(bits);
    if (a.im_.is_zero() && a.re_.sign() > 0) return {cbrt(a.re_), Real(bits)};
    Real mod = cbrt(abs(a));
    Real theta = atan2(a.im_, a.re_) / Real(3, bits);
    auto [s, c] = sin_cos(theta);
    return {mod * c, mod * s};
  }

  /// exp(2*pi*i*k/n)
  static Complex unit_root(long k, long n, int bits) {
    Real theta = Real::pi(bits) * Real(2 * k, bits) / Real(n, bits);
    auto [s, c] = sin_cos(theta);
    return {std::move(c), std::move(s)};
  }

 private:
  Real re_;
  Real im_;
};

}  // namespace bring
