#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over a commutative ring.
 *
 * Poly<R> stores coefficients in ascending degree (index k multiplies x^k).
 * R is Scalar for ordinary equations; nesting (Poly<Poly<Scalar>>) gives the
 * two-variable objects needed during elimination, e.g. a subsidiary equation
 * B(z, y) or a condition in two unknown Tschirnhaus coefficients.
 *
 * The zero polynomial has degree -1. Leading zeros are trimmed only when they
 * are exactly zero; tolerance-based cleanup is explicit (see `snap_small`).
 */

#include "bring/scalar.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace bring {

template <class R>
class Poly;

template <class T>
struct is_poly : std::false_type {};
template <class R>
struct is_poly<Poly<R>> : std::true_type {};
template <class T>
inline constexpr bool is_poly_v = is_poly<T>::value;

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

/// Lifts a Scalar into a (possibly nested) coefficient ring.
template <class R>
struct ring_traits;
template <>
struct ring_traits<Scalar> {
  static Scalar from_scalar(const Scalar& s) { return s; }
};
template <class R>
struct ring_traits<Poly<R>> {
  static Poly<R> from_scalar(const Scalar& s) { return Poly<R>(ring_traits<R>::from_scalar(s)); }
};
template <class R>
R lift(const Scalar& s) {
  return ring_traits<R>::from_scalar(s);
}

template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  explicit Poly(R constant) {
    if (!bring::is_zero(constant)) c_.push_back(std::move(constant));
  }
  Poly(std::initializer_list<R> cs) : c_(cs) { trim(); }
  explicit Poly(std::vector<R> cs) : c_(std::move(cs)) { trim(); }

  static Poly monomial(R coeff, std::size_t k) {
    std::vector<R> cs(k + 1);
    cs[k] = std::move(coeff);
    return Poly(std::move(cs));
  }
  /// The variable itself.
  static Poly x() { return monomial(lift<R>(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R{}; }
  const R& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  /// Overwrites one coefficient (growing or trimming as needed).
  void set_coeff(std::size_t k, R value) {
    if (k >= c_.size()) c_.resize(k + 1);
    c_[k] = std::move(value);
    trim();
  }

  /// Horner evaluation. X may be a point of R, or anything R-coefficients
  /// can multiply into (e.g. a Poly, for composition).
  template <class X>
  auto operator()(const X& x) const {
    using Out = std::remove_cvref_t<decltype(std::declval<R>() * std::declval<X>() + std::declval<R>())>;
    Out acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
    return Poly(std::move(d));
  }

  Poly operator-() const {
    std::vector<R> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return Poly(std::move(r));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> r(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k < a.size() && k < b.size())
        r[k] = a.c_[k] + b.c_[k];
      else
        r[k] = k < a.size() ? a.c_[k] : b.c_[k];
    }
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (bring::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend Poly operator+(const Poly& a, const std::type_identity_t<R>& c) { return a + Poly(c); }
  friend Poly operator-(const Poly& a, const std::type_identity_t<R>& c) { return a - Poly(c); }
  friend Poly operator*(const Poly& a, const std::type_identity_t<R>& c) {
    std::vector<R> r;
    r.reserve(a.size());
    for (const auto& x : a.c_) r.push_back(x * c);
    return Poly(std::move(r));
  }
  friend Poly operator*(const std::type_identity_t<R>& c, const Poly& a) { return a * c; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && bring::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

/// Scalar multiple of a nested polynomial (coefficient-wise, recursively).
template <class R>
  requires is_poly_v<R>
Poly<R> operator*(const Poly<R>& p, const Scalar& s) {
  std::vector<R> r;
  r.reserve(p.size());
  for (const auto& c : p.coeffs()) r.push_back(c * s);
  return Poly<R>(std::move(r));
}
template <class R>
  requires is_poly_v<R>
Poly<R> operator*(const Scalar& s, const Poly<R>& p) {
  return p * s;
}

template <class R>
Poly<R> operator/(const Poly<R>& p, const Scalar& s) {
  std::vector<R> r;
  r.reserve(p.size());
  for (const auto& c : p.coeffs()) r.push_back(c / s);
  return Poly<R>(std::move(r));
}

using UniPoly = Poly<Scalar>;

/// Builds a UniPoly from integer coefficients given in ascending order.
inline UniPoly make_poly(std::initializer_list<long> ascending) {
  std::vector<Scalar> cs;
  for (long c : ascending) cs.emplace_back(c);
  return UniPoly(std::move(cs));
}

inline bool is_monic(const UniPoly& p) { return !p.is_zero() && p.leading().is_one(); }

inline UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
  return p.leading().is_one() ? p : p / p.leading();
}

inline bool all_rational(const UniPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Scalar& c) { return c.is_rational(); });
}

inline double max_coeff_magnitude(const UniPoly& p) {
  double m = 0.0;
  for (const auto& c : p.coeffs()) m = std::max(m, c.magnitude());
  return m;
}

/// |coeff(k)| relative to the largest coefficient magnitude.
inline double relative_coeff(const UniPoly& p, std::size_t k) {
  const double scale = max_coeff_magnitude(p);
  return scale == 0.0 ? 0.0 : p.coeff(k).magnitude() / scale;
}

/// Sets the listed coefficients to exact zero after checking each is within
/// `tol` relative to the largest coefficient. Returns false (and leaves `p`
/// unchanged) if any of them is too large.
inline bool snap_small(UniPoly& p, std::initializer_list<std::size_t> ks, double tol) {
  for (auto k : ks)
    if (relative_coeff(p, k) > tol) return false;
  std::vector<Scalar> cs = p.coeffs();
  for (auto k : ks)
    if (k < cs.size()) cs[k] = Scalar(0);
  p = UniPoly(std::move(cs));
  return true;
}

/// Quotient and remainder over a field of coefficients.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quo(a.size() - b.size() + 1);
  const Scalar& lead = b.leading();
  for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
    Scalar t = rem[k + b.size() - 1] / lead;
    quo[k] = t;
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= t * b.coeffs()[j];
  }
  rem.resize(b.size() - 1);
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

// ---------------------------------------------------------------------------
// Operations on equations

inline Scalar eval(const UniPoly& p, const Scalar& x) { return p(x); }

/// C(y) = A(y - a): the linear substitution z = y - a.
inline UniPoly shift_substitute(const UniPoly& p, const Scalar& a) {
  if (a.is_zero()) return p;
  const UniPoly arg{-a, Scalar(1)};
  return p(arg);
}

/// Coefficient reversal: the polynomial whose roots are the reciprocals.
inline UniPoly reversed(const UniPoly& p) {
  std::vector<Scalar> cs(p.coeffs().rbegin(), p.coeffs().rend());
  return UniPoly(std::move(cs));
}

/// Power sums s_k = sum_i z_i^k over the roots of a polynomial.
struct PowerSums {
  /// s[0] is the root count; s[k] for 1 <= k <= k_max.
  std::vector<Scalar> s;
  int source_degree = 0;

  const Scalar& operator[](std::size_t k) const { return s.at(k); }
  int k_max() const { return static_cast<int>(s.size()) - 1; }
};

/// Newton's identities from the coefficients (no root finding).
inline PowerSums power_sums(const UniPoly& poly, int k_max) {
  if (poly.degree() < 1) throw std::domain_error("power sums need a polynomial of degree >= 1");
  const UniPoly p = monic(poly);
  const int n = p.degree();
  // e-side coefficient: a(j) is the coefficient of z^(n-j)
  auto a = [&](int j) { return p.coeff(static_cast<std::size_t>(n - j)); };
  PowerSums out;
  out.source_degree = n;
  out.s.resize(static_cast<std::size_t>(k_max) + 1);
  out.s[0] = Scalar(n);
  for (int k = 1; k <= k_max; ++k) {
    Scalar acc = k <= n ? a(k) * Scalar(k) : Scalar(0);
    for (int j = 1; j < k && j <= n; ++j) acc += a(j) * out.s[k - j];
    out.s[k] = -acc;
  }
  return out;
}

/// Elementary symmetric functions e_1..e_n from power sums s_1..s_n over any
/// coefficient ring that admits scalar division by small integers.
template <class R>
std::vector<R> elementary_from_power_sums(const std::vector<R>& s, int n) {
  std::vector<R> e(static_cast<std::size_t>(n) + 1);
  e[0] = lift<R>(1);
  for (int k = 1; k <= n; ++k) {
    R acc{};
    for (int i = 1; i <= k; ++i) {
      R term = e[k - i] * s[i];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[k] = acc * Scalar::rational(1, k);
  }
  return e;
}

/// Monic degree-n polynomial with the given power sums (s[0] is ignored).
template <class R>
Poly<R> monic_from_power_sums(const std::vector<R>& s, int n) {
  const auto e = elementary_from_power_sums(s, n);
  std::vector<R> cs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) cs[n - k] = (k % 2 == 0) ? e[k] : R(-e[k]);
  return Poly<R>(std::move(cs));
}

inline UniPoly poly_from_power_sums(const PowerSums& ps) {
  const int n = ps.k_max();
  if (n < 1) throw std::domain_error("need at least s_1");
  return monic_from_power_sums(ps.s, n);
}

}  // namespace bring
