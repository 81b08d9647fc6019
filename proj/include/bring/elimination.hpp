#pragma once

/**
 * @file elimination.hpp
 * @brief Eliminating z between A(z) = 0 and a subsidiary B(z, y) = 0.
 *
 * Two independent routes produce the transformed equation C(y):
 *
 *  - the Sylvester resultant Res_z(A, B), a determinant whose entries are
 *    polynomials in y (fraction-free Bareiss over Q[y] when every entry is
 *    exact, a division-free Laplace expansion otherwise);
 *  - symmetric-function transport: with y = T(z), the power sums of the
 *    images T(z_i) are linear combinations of the power sums of A, which
 *    Newton's identities turn back into coefficients.
 *
 * The transport route is generic in the coefficient ring of T, which is how
 * conditions on still-unknown Tschirnhaus coefficients are derived: give T
 * coefficients that are polynomials in the unknown and read off C's
 * coefficients as polynomials in it.
 */

#include "bring/errors.hpp"
#include "bring/poly.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace bring {

/// B(z, y): outer variable z, coefficients are polynomials in y.
using BiPoly = Poly<UniPoly>;

template <class R>
using Matrix = std::vector<std::vector<R>>;

inline bool is_exact(const Scalar& s) { return s.is_rational(); }
inline bool is_exact(const UniPoly& p) { return all_rational(p); }

inline Scalar exact_div(const Scalar& a, const Scalar& b) { return a / b; }
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ConsistencyError("Bareiss step left a nonzero remainder");
  return q;
}

/// Fraction-free Gaussian elimination. Every division is exact in an
/// integral domain; requires exact entries.
template <class R>
R bareiss_determinant(Matrix<R> m) {
  const std::size_t n = m.size();
  if (n == 0) return lift<R>(1);
  bool negate = false;
  R prev = lift<R>(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t i = k + 1;
      while (i < n && is_zero(m[i][k])) ++i;
      if (i == n) return R{};
      std::swap(m[k], m[i]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(num, prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? R(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Laplace expansion row by row, memoized over column subsets: O(n 2^n) ring
/// operations and no divisions, so it is safe for floating coefficients.
template <class R>
R laplace_determinant(const Matrix<R>& m) {
  const std::size_t n = m.size();
  if (n == 0) return lift<R>(1);
  if (n > 20) throw std::invalid_argument("laplace_determinant: matrix too large");
  std::vector<R> minors(std::size_t{1} << n);
  std::vector<bool> live(minors.size(), false);
  minors[0] = lift<R>(1);
  live[0] = true;
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<R> next(minors.size());
    std::vector<bool> next_live(minors.size(), false);
    for (std::uint32_t mask = 0; mask < minors.size(); ++mask) {
      if (!live[mask] || static_cast<std::size_t>(std::popcount(mask)) != row) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1u << c) || is_zero(m[row][c])) continue;
        const std::uint32_t above = mask & ~((2u << c) - 1u);
        R term = m[row][c] * minors[mask];
        const std::uint32_t to = mask | (1u << c);
        if (std::popcount(above) % 2)
          next[to] -= term;
        else
          next[to] += term;
        next_live[to] = true;
      }
    }
    minors = std::move(next);
    live = std::move(next_live);
  }
  return minors.back();
}

template <class R>
R determinant(const Matrix<R>& m) {
  bool exact = true;
  for (const auto& row : m)
    for (const auto& e : row) exact = exact && is_exact(e);
  return exact ? bareiss_determinant(m) : laplace_determinant(m);
}

/// The (deg f + deg g) square Sylvester matrix, f's rows first.
template <class R>
Matrix<R> sylvester_matrix(const Poly<R>& f, const Poly<R>& g) {
  const int df = f.degree(), dg = g.degree();
  if (df < 0 || dg < 0) throw std::invalid_argument("sylvester_matrix: zero polynomial");
  const std::size_t size = static_cast<std::size_t>(df + dg);
  Matrix<R> m(size, std::vector<R>(size));
  for (int i = 0; i < dg; ++i)
    for (int k = 0; k <= df; ++k) m[i][i + k] = f.coeff(static_cast<std::size_t>(df - k));
  for (int i = 0; i < df; ++i)
    for (int k = 0; k <= dg; ++k) m[dg + i][i + k] = g.coeff(static_cast<std::size_t>(dg - k));
  return m;
}

/// Res(f, g) over the coefficient ring R.
template <class R>
R resultant(const Poly<R>& f, const Poly<R>& g) {
  if (f.degree() == 0 && g.degree() == 0) return lift<R>(1);
  return determinant(sylvester_matrix(f, g));
}

/// Lifts A(z) into the ring of polynomials in y (constant coefficients).
inline BiPoly lift_to_bipoly(const UniPoly& a) {
  std::vector<UniPoly> cs;
  for (const auto& c : a.coeffs()) cs.emplace_back(c);
  return BiPoly(std::move(cs));
}

struct Eliminant {
  UniPoly monic;          // C(y), normalized
  Scalar normalization;   // leading coefficient of the raw resultant
};

/// Res_z(A, B) and the factor it was divided by to make it monic.
inline Eliminant eliminate(const UniPoly& a, const BiPoly& b) {
  const int n = a.degree();
  const int k = b.degree();
  if (n < 1 || !is_monic(a)) throw std::invalid_argument("eliminate: A must be monic of degree >= 1");
  if (k < 1 || k >= n) throw std::invalid_argument("eliminate: subsidiary degree must satisfy 1 <= k < deg A");
  if (b.leading().degree() != 0) throw std::invalid_argument("eliminate: leading z-coefficient of B must be constant");
  for (int j = 1; j <= k; ++j)
    if (b.coeff(static_cast<std::size_t>(j)).degree() > 0)
      throw std::invalid_argument("eliminate: y may appear only in the z^0 coefficient of B");
  if (b.coeff(0).degree() != 1) throw std::invalid_argument("eliminate: B must be linear in y");

  UniPoly raw = resultant(lift_to_bipoly(a), b);
  if (raw.degree() != n) throw ConsistencyError("resultant has unexpected degree");
  Scalar lead = raw.leading();
  return {raw / lead, lead};
}

inline UniPoly sylvester_resultant_in_z(const UniPoly& a, const BiPoly& b) { return eliminate(a, b).monic; }

/// Power sums S_m = sum_i T(z_i)^m, m = 0..m_max, for T with coefficients in
/// any ring R. `s` must reach index m_max * deg T.
template <class R>
std::vector<R> transported_power_sums(const PowerSums& s, const Poly<R>& t, int m_max) {
  const int k = std::max(t.degree(), 0);
  if (s.k_max() < m_max * k) throw std::invalid_argument("transported_power_sums: not enough power sums");
  std::vector<R> out(static_cast<std::size_t>(m_max) + 1);
  out[0] = lift<R>(s.source_degree);
  Poly<R> power(lift<R>(1));
  for (int m = 1; m <= m_max; ++m) {
    power = power * t;
    R acc{};
    for (std::size_t j = 0; j < power.size(); ++j) acc += power.coeffs()[j] * s[j];
    out[m] = std::move(acc);
  }
  return out;
}

/// The top coefficients of C(y) = prod_i (y - T(z_i)): entry j is the
/// coefficient of y^(n-j), for j = 0..upto.
template <class R>
std::vector<R> transformed_top_coeffs(const PowerSums& s, const Poly<R>& t, int upto) {
  const auto sums = transported_power_sums(s, t, upto);
  const auto e = elementary_from_power_sums(sums, upto);
  std::vector<R> out(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) out[j] = (j % 2 == 0) ? e[j] : R(-e[j]);
  return out;
}

/// The monic polynomial whose roots are T(z_i) over the roots z_i of A.
inline UniPoly transform_by_power_sums(const UniPoly& a, const UniPoly& t) {
  const int n = a.degree();
  const int k = t.degree();
  if (n < 1) throw std::invalid_argument("transform_by_power_sums: A must have degree >= 1");
  if (k >= n) throw std::invalid_argument("transform_by_power_sums: deg T must be < deg A");
  const PowerSums s = power_sums(a, n * std::max(k, 1));
  return monic_from_power_sums(transported_power_sums(s, t, n), n);
}

}  // namespace bring
