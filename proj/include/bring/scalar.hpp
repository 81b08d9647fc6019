#pragma once

/**
 * @file scalar.hpp
 * @brief The number type every polynomial coefficient lives in.
 *
 * A Scalar is either an exact rational (always canonical: lowest terms,
 * positive denominator) or a complex float at some precision. Rational op
 * rational stays rational; anything touching a complex value becomes complex
 * at the larger precision in play. Root extraction stays exact only when the
 * result is itself rational.
 */

#include "bring/complex.hpp"

#include <cmath>
#include <concepts>
#include <string>
#include <variant>

namespace bring {

enum class ScalarMode { ExactRational, ComplexFloat };

class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  template <std::integral I>
  Scalar(I x) : v_(mpq_class(static_cast<long>(x))) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class q) : v_(canonical(std::move(q))) {}  // NOLINT
  Scalar(Complex c) : v_(std::move(c)) {}               // NOLINT

  static Scalar rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return Scalar(mpq_class(num, den));
  }
  static Scalar rational(long num, long den) { return rational(mpz_class(num), mpz_class(den)); }
  static Scalar complex(const Real& re, const Real& im) { return Scalar(Complex(re, im)); }
  /// Imaginary unit at the ambient precision.
  static Scalar i() {
    const int bits = ambient_precision();
    return Scalar(Complex(Real(bits), Real(1, bits)));
  }

  ScalarMode mode() const {
    return std::holds_alternative<mpq_class>(v_) ? ScalarMode::ExactRational : ScalarMode::ComplexFloat;
  }
  bool is_rational() const { return mode() == ScalarMode::ExactRational; }
  const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }
  /// 0 for exact values.
  int precision() const { return is_rational() ? 0 : std::get<Complex>(v_).precision(); }

  /// The value as a complex float; rationals are rounded at `bits`.
  Complex to_complex(int bits = ambient_precision()) const {
    if (is_rational()) return Complex(as_rational(), bits);
    return std::get<Complex>(v_);
  }

  bool is_zero() const {
    return is_rational() ? as_rational() == 0 : std::get<Complex>(v_).is_zero();
  }
  bool is_one() const { return is_rational() && as_rational() == 1; }

  /// Real-valued: rational, or complex with an exactly zero imaginary part.
  bool is_real() const { return is_rational() || std::get<Complex>(v_).im().is_zero(); }

  double real_part() const {
    return is_rational() ? as_rational().get_d() : std::get<Complex>(v_).re().to_double();
  }
  double imag_part() const { return is_rational() ? 0.0 : std::get<Complex>(v_).im().to_double(); }
  double magnitude() const {
    return is_rational() ? std::fabs(as_rational().get_d()) : abs(std::get<Complex>(v_)).to_double();
  }

  Scalar operator-() const {
    if (is_rational()) return Scalar(mpq_class(-as_rational()));
    return Scalar(-std::get<Complex>(v_));
  }

#define BRING_SCALAR_BINOP(op)                                            \
  friend Scalar operator op(const Scalar& a, const Scalar& b) {           \
    if (a.is_rational() && b.is_rational())                               \
      return Scalar(mpq_class(a.as_rational() op b.as_rational()));       \
    const int bits = std::max(a.precision(), b.precision());              \
    return Scalar(a.to_complex(bits) op b.to_complex(bits));              \
  }                                                                       \
  Scalar& operator op##=(const Scalar& b) { return *this = *this op b; }
  BRING_SCALAR_BINOP(+)
  BRING_SCALAR_BINOP(-)
  BRING_SCALAR_BINOP(*)
#undef BRING_SCALAR_BINOP

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("Scalar division by zero");
    if (a.is_rational() && b.is_rational()) return Scalar(mpq_class(a.as_rational() / b.as_rational()));
    const int bits = std::max(a.precision(), b.precision());
    return Scalar(a.to_complex(bits) / b.to_complex(bits));
  }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  /// Structural equality: exact rationals compare exactly, complex values
  /// compare bit-for-bit after promotion. Use `close()` for tolerances.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return a.as_rational() == b.as_rational();
    const int bits = std::max(a.precision(), b.precision());
    return a.to_complex(bits) == b.to_complex(bits);
  }

  friend Scalar conj(const Scalar& a) {
    return a.is_rational() ? a : Scalar(conj(std::get<Complex>(a.v_)));
  }

  /// Principal square root; exact when the argument is the square of a
  /// rational.
  friend Scalar sqrt(const Scalar& a) {
    if (a.is_rational()) {
      const mpq_class& q = a.as_rational();
      if (q >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
        return Scalar(mpq_class(n, d));
      }
      const int bits = ambient_precision();
      if (q >= 0) return Scalar(Complex(sqrt(Real(q, bits)), Real(bits)));
      return Scalar(Complex(Real(bits), sqrt(Real(mpq_class(-q), bits))));
    }
    return Scalar(sqrt(std::get<Complex>(a.v_)));
  }

  /// Cube root. Rational arguments take the real branch (exact when the
  /// argument is a rational cube); complex arguments take the principal one.
  friend Scalar cbrt(const Scalar& a) {
    if (a.is_rational()) {
      const mpq_class& q = a.as_rational();
      mpz_class n, d;
      const bool exact = mpz_root(n.get_mpz_t(), q.get_num_mpz_t(), 3) != 0 &&
                         mpz_root(d.get_mpz_t(), q.get_den_mpz_t(), 3) != 0;
      if (exact) return Scalar(mpq_class(n, d));
      const int bits = ambient_precision();
      return Scalar(Complex(cbrt(Real(q, bits)), Real(bits)));
    }
    return Scalar(cbrt(std::get<Complex>(a.v_)));
  }

  /// Human-readable form: "p/q" for rationals, "re+imi" for complex.
  std::string to_string() const {
    if (is_rational()) return as_rational().get_str();
    const Complex& c = std::get<Complex>(v_);
    std::string s = c.re().to_string();
    if (!c.im().is_zero()) {
      std::string im = c.im().to_string();
      s += (im.front() == '-' ? "" : "+") + im + "i";
    }
    return s;
  }

  const Complex& as_complex() const { return std::get<Complex>(v_); }

 private:
  static mpq_class canonical(mpq_class q) {
    q.canonicalize();
    return q;
  }

  std::variant<mpq_class, Complex> v_;
};

/// |a - b| <= tol * max(1, scale)
inline bool close(const Scalar& a, const Scalar& b, double tol, double scale = 1.0) {
  return (a - b).magnitude() <= tol * std::max(1.0, scale);
}

}  // namespace bring
