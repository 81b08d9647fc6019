#pragma once

/**
 * @file solvers.hpp
 * @brief Closed-form solvers for degrees 1 to 3.
 *
 * Quadratics use the half-discriminant formula obtained from the linear shift
 * z = y - m/2; cubics are depressed by z = y - m/3 and solved by Cardano.
 * Everything stays exact when the radicals involved are rational.
 *
 * The quartic solver lives in quartic.hpp because it is built from the
 * Tschirnhaus steps rather than from a resolvent.
 */

#include "bring/config.hpp"
#include "bring/poly.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace bring {

struct SolveResult {
  std::vector<Scalar> roots;  // with multiplicity
  std::string method;
  std::vector<double> residuals;  // |A(root)|

  bool exact() const {
    return std::all_of(roots.begin(), roots.end(), [](const Scalar& r) { return r.is_rational(); });
  }
  double max_residual() const {
    return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
  }
};

/// Orders roots by (real part, imaginary part). Comparison is exact, so the
/// output is deterministic for a given input.
inline void sort_roots(std::vector<Scalar>& roots) {
  const int bits = ambient_precision();
  std::sort(roots.begin(), roots.end(), [bits](const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return a.as_rational() < b.as_rational();
    const int p = std::max({a.precision(), b.precision(), bits});
    const Complex ca = a.to_complex(p), cb = b.to_complex(p);
    if (!(ca.re() == cb.re())) return ca.re() < cb.re();
    return ca.im() < cb.im();
  });
}

/// Index of the preferred root among alternatives: smallest |Im|, then
/// smallest |value|, then lexicographic (Re, Im). Values within `tol` of each
/// other (relative to max(1, |value|)) count as ties at the first two levels.
inline std::size_t choose_root(const std::vector<Scalar>& roots, double tol) {
  if (roots.empty()) throw std::invalid_argument("choose_root: no candidates");
  auto within = [tol](double x, double y) { return std::fabs(x - y) <= tol * std::max({1.0, std::fabs(x), std::fabs(y)}); };
  std::size_t best = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    const Scalar& a = roots[i];
    const Scalar& b = roots[best];
    const double ia = std::fabs(a.imag_part()), ib = std::fabs(b.imag_part());
    if (!within(ia, ib)) {
      if (ia < ib) best = i;
      continue;
    }
    const double ma = a.magnitude(), mb = b.magnitude();
    if (!within(ma, mb)) {
      if (ma < mb) best = i;
      continue;
    }
    std::vector<Scalar> pair{a, b};
    sort_roots(pair);
    if (pair.front() == a && !(a == b)) best = i;
  }
  return best;
}

inline std::vector<double> residuals_of(const UniPoly& p, const std::vector<Scalar>& roots) {
  std::vector<double> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(p(r).magnitude());
  return out;
}

/// A few guarded Newton steps on inexact roots; a step is kept only if it
/// lowers |p|.
inline Scalar polish_root(const UniPoly& p, Scalar root, int steps = 3) {
  if (root.is_rational()) return root;
  const UniPoly dp = p.derivative();
  Scalar val = p(root);
  for (int i = 0; i < steps && !val.is_zero(); ++i) {
    const Scalar slope = dp(root);
    if (slope.is_zero()) break;
    Scalar next = root - val / slope;
    Scalar next_val = p(next);
    if (!(next_val.magnitude() < val.magnitude())) break;
    root = std::move(next);
    val = std::move(next_val);
  }
  return root;
}

inline SolveResult finish(const UniPoly& p, std::vector<Scalar> roots, std::string method) {
  for (auto& r : roots) r = polish_root(p, r);
  sort_roots(roots);
  SolveResult out;
  out.residuals = residuals_of(p, roots);
  out.roots = std::move(roots);
  out.method = std::move(method);
  return out;
}

/// Root of z + a0.
inline SolveResult solve_linear(const Scalar& a0) {
  return finish(UniPoly{a0, Scalar(1)}, {-a0}, "linear");
}

/// Both roots of z^2 + m z + n: z = -m/2 +- sqrt(m^2/4 - n).
inline SolveResult solve_quadratic(const Scalar& m, const Scalar& n) {
  const UniPoly p{n, m, Scalar(1)};
  const Scalar half_m = m / Scalar(2);
  const Scalar r = sqrt(half_m * half_m - n);
  return finish(p, {-half_m + r, -half_m - r}, "quadratic");
}

namespace detail {
/// Cube roots of unity times a seed: w + conj-partner, arranged so the
/// imaginary parts cancel whenever u and v are conjugate.
inline std::vector<Scalar> cardano_combinations(const Scalar& u, const Scalar& v) {
  const Scalar s = u + v;
  const Scalar d = u - v;
  const Scalar mid = -s / Scalar(2);
  if (d.is_zero()) return {s, mid, mid};
  const Scalar i_sqrt3_half = sqrt(Scalar(-3)) / Scalar(2);
  return {s, mid + i_sqrt3_half * d, mid - i_sqrt3_half * d};
}
}  // namespace detail

/**
 * Roots of the depressed cubic z^3 + p z + q.
 *
 * z = u + v with u^3 = -q/2 +- sqrt(q^2/4 + p^3/27) and uv = -p/3. The
 * radicand sign is chosen to maximize |u^3| (the other choice loses digits to
 * cancellation), u is its principal cube root, and v = -p/(3u). Tying v to u
 * this way is what makes the complex parts of u and v cancel when all three
 * roots are real and the radicand is negative.
 */
inline SolveResult solve_cubic_cardano(const Scalar& p, const Scalar& q) {
  const UniPoly poly{q, p, Scalar(0), Scalar(1)};
  if (q.is_zero()) {
    // z (z^2 + p)
    const Scalar r = sqrt(-p);
    return finish(poly, {Scalar(0), r, -r}, "cardano");
  }
  if (p.is_zero()) {
    const Scalar u = cbrt(-q);
    return finish(poly, detail::cardano_combinations(u, Scalar(0)), "cardano");
  }
  const Scalar half_q = q / Scalar(2);
  const Scalar radicand = half_q * half_q + p * p * p / Scalar(27);
  const Scalar root = sqrt(radicand);
  Scalar u3 = -half_q + root;
  const Scalar alt = -half_q - root;
  if (alt.magnitude() > u3.magnitude()) u3 = alt;
  const Scalar u = cbrt(u3);
  const Scalar v = -p / (Scalar(3) * u);
  return finish(poly, detail::cardano_combinations(u, v), "cardano");
}

/// Roots of z^3 + m z^2 + n z + p via z = y - m/3 and Cardano on y.
inline SolveResult solve_cubic_general(const Scalar& m, const Scalar& n, const Scalar& p) {
  const UniPoly poly{p, n, m, Scalar(1)};
  const Scalar shift = m / Scalar(3);
  const UniPoly depressed = shift_substitute(poly, shift);
  const SolveResult y = solve_cubic_cardano(depressed.coeff(1), depressed.coeff(0));
  std::vector<Scalar> roots;
  for (const auto& r : y.roots) roots.push_back(r - shift);
  return finish(poly, std::move(roots), "cardano");
}

/// Groups roots closer than `radius` into (representative, multiplicity).
inline std::vector<std::pair<Scalar, int>> cluster_multiplicities(const std::vector<Scalar>& roots, double radius) {
  std::vector<std::pair<Scalar, int>> out;
  for (const auto& r : roots) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& c) { return close(c.first, r, radius, r.magnitude()); });
    if (it == out.end())
      out.emplace_back(r, 1);
    else
      ++it->second;
  }
  return out;
}

}  // namespace bring
