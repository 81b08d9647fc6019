#pragma once

/**
 * @file real.hpp
 * @brief Arbitrary-precision real numbers (RAII over MPFR) and the ambient
 *        working precision.
 *
 * Every Real carries its own precision. Binary operations round to the
 * larger of the two operand precisions, so mixing 256- and 512-bit values
 * promotes rather than truncates.
 */

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace bring {

inline constexpr int default_precision_bits = 256;
inline constexpr int min_precision_bits = 64;

namespace detail {
inline int& ambient_precision_ref() {
  thread_local int bits = default_precision_bits;
  return bits;
}
}  // namespace detail

/// Precision used when a rational value has to be promoted on its own.
inline int ambient_precision() { return detail::ambient_precision_ref(); }

/// Scoped override of the ambient precision (restored on destruction).
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int bits) : saved_(ambient_precision()) {
    if (bits < min_precision_bits)
      throw std::invalid_argument("precision_bits must be >= 64");
    detail::ambient_precision_ref() = bits;
  }
  ~PrecisionGuard() { detail::ambient_precision_ref() = saved_; }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  int saved_;
};

class Real {
 public:
  explicit Real(int bits = ambient_precision()) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(long x, int bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(const mpq_class& q, int bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  static Real from_double(double x, int bits) {
    Real r(bits);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  /// Parses a decimal string ("1.25e-3", "-7", "@NaN@" is rejected).
  Real(const std::string& text, int bits) {
    mpfr_init2(v_, bits);
    if (mpfr_set_str(v_, text.c_str(), 10, MPFR_RNDN) != 0 || mpfr_nan_p(v_)) {
      mpfr_clear(v_);
      throw std::invalid_argument("not a decimal number: '" + text + "'");
    }
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Shortest decimal that round-trips at this precision.
  std::string to_string() const {
    if (is_zero()) return "0";
    const auto digits = mpfr_get_str_ndigits(10, mpfr_get_prec(v_));
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits) - 1, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

#define BRING_REAL_BINOP(op, fn)                                 \
  friend Real operator op(const Real& a, const Real& b) {        \
    Real r(std::max(a.precision(), b.precision()));              \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                             \
    return r;                                                    \
  }                                                              \
  Real& operator op##=(const Real& b) { return *this = *this op b; }
  BRING_REAL_BINOP(+, mpfr_add)
  BRING_REAL_BINOP(-, mpfr_sub)
  BRING_REAL_BINOP(*, mpfr_mul)
  BRING_REAL_BINOP(/, mpfr_div)
#undef BRING_REAL_BINOP

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }

  friend Real abs(const Real& a) {
    Real r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  /// Real cube root (negative in, negative out).
  friend Real cbrt(const Real& a) {
    Real r(a.precision());
    mpfr_cbrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& a, const Real& b) {
    Real r(std::max(a.precision(), b.precision()));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real atan2(const Real& y, const Real& x) {
    Real r(std::max(x.precision(), y.precision()));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend std::pair<Real, Real> sin_cos(const Real& a) {
    Real s(a.precision()), c(a.precision());
    mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
    return {std::move(s), std::move(c)};
  }
  friend Real copysign(const Real& mag, const Real& sgn) {
    Real r(mag.precision());
    mpfr_copysign(r.v_, mag.v_, sgn.v_, MPFR_RNDN);
    return r;
  }

  static Real pi(int bits) {
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  /// 2^-bits, the unit roundoff scale for a given precision.
  static Real epsilon(int bits) {
    Real r(bits);
    mpfr_set_ui_2exp(r.v_, 1, -bits, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

}  // namespace bring
