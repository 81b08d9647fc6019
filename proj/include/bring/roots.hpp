#pragma once

/**
 * @file roots.hpp
 * @brief Arbitrary-precision root finding (Aberth-Ehrlich) and root-set
 *        comparison.
 *
 * Used only to verify transformations and to solve the final Bring-Jerrard
 * quintic; the reduction itself never depends on it.
 */

#include "bring/config.hpp"
#include "bring/solvers.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace bring {

struct RootSet {
  std::vector<Scalar> roots;      // with multiplicity, sorted
  std::vector<double> residuals;  // |A(root)|
  int iterations = 0;
  bool converged = false;

  double max_residual() const {
    return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
  }
};

namespace detail {

struct HornerOut {
  Complex value, slope;
  double bound;  // sum |c_k| |z|^k, the rounding-error scale of `value`
};

inline HornerOut horner_with_slope(const std::vector<Complex>& c, const std::vector<double>& mags, const Complex& z,
                                   int bits) {
  const std::size_t n = c.size() - 1;
  Complex v = c[n];
  Complex d(bits);
  const double az = abs(z).to_double();
  double bound = mags[n];
  for (std::size_t k = n; k-- > 0;) {
    d = d * z + v;
    v = v * z + c[k];
    bound = bound * az + mags[k];
  }
  return {v, d, bound};
}

inline std::vector<Complex> derivative(const std::vector<Complex>& c, int bits) {
  std::vector<Complex> out;
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * Complex(Real(static_cast<long>(k), bits), Real(bits)));
  return out;
}

inline Complex horner(const std::vector<Complex>& c, const Complex& z, double& bound) {
  Complex v = c.back();
  const double az = abs(z).to_double();
  bound = abs(c.back()).to_double();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    v = v * z + c[k];
    bound = bound * az + abs(c[k]).to_double();
  }
  return v;
}

/// Uniform double in [0, 1) from the raw engine output, so the sequence does
/// not depend on the standard library's distribution implementation.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/**
 * Collapses clusters of approximations that are numerically one multiple
 * root. Aberth converges to a ring of radius ~eps^(1/nu) around a root of
 * multiplicity nu; the centroid of the ring is accurate to full precision.
 * A cluster is accepted only if p and its first nu-1 derivatives all vanish
 * at the centroid up to a loose rounding bound.
 */
inline void merge_clusters(std::vector<Complex>& z, const std::vector<Complex>& coeffs, int bits) {
  const std::size_t n = z.size();
  const double radius = std::ldexp(1.0, -bits / 16);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = std::max(1.0, abs(z[i]).to_double());
      if (abs(z[i] - z[j]).to_double() <= radius * scale) parent[find(i)] = find(j);
    }
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

  const double loose = std::ldexp(1.0, -bits / 3);
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    Complex c(bits);
    for (auto i : g) c = c + z[i];
    c = c / Complex(Real(static_cast<long>(g.size()), bits), Real(bits));
    // Newton on the (nu-1)-th derivative, where the root is simple
    std::vector<Complex> d = coeffs;
    for (std::size_t j = 1; j < g.size(); ++j) d = derivative(d, bits);
    for (int it = 0; it < 8 && d.size() >= 2; ++it) {
      double b = 0;
      const Complex v = horner(d, c, b);
      double bd = 0;
      const Complex s = horner(derivative(d, bits), c, bd);
      if (s.is_zero()) break;
      c = c - v / s;
    }
    bool ok = true;
    std::vector<Complex> e = coeffs;
    for (std::size_t j = 0; j < g.size() && ok; ++j) {
      double b = 0;
      const Complex v = horner(e, c, b);
      ok = abs(v).to_double() <= loose * std::max(b, std::numeric_limits<double>::min());
      e = derivative(e, bits);
    }
    if (!ok) continue;
    for (auto i : g) z[i] = c;
  }
}

}  // namespace detail

/**
 * All roots of `a` (degree >= 1) with multiplicity, by simultaneous
 * Aberth-Ehrlich iteration at cfg.precision_bits.
 *
 * Zero roots are split off exactly. Starting points lie on a circle about the
 * root centroid whose radius comes from the coefficient sizes, at angles
 * 2 pi j / n plus a small perturbation drawn from cfg.seed. Each
 * approximation freezes once its correction or its residual reaches the
 * rounding level; converged is false if some never did within
 * cfg.max_iterations sweeps.
 */
inline RootSet find_roots(const UniPoly& a, const Config& cfg = {}) {
  if (a.degree() < 1) throw std::invalid_argument("find_roots: polynomial of degree >= 1 required");
  PrecisionGuard guard(cfg.precision_bits);
  const int bits = cfg.precision_bits;
  const UniPoly p = monic(a);

  std::size_t zeros = 0;
  while (p.coeff(zeros).is_zero()) ++zeros;
  std::vector<Complex> c;
  for (std::size_t k = zeros; k < p.size(); ++k) c.push_back(p.coeff(k).to_complex(bits));
  const std::size_t n = c.size() - 1;

  RootSet out;
  out.converged = true;
  std::vector<Complex> z;
  if (n == 1) {
    z.push_back(-c[0]);
  } else if (n >= 2) {
    std::vector<double> mags;
    for (const auto& x : c) mags.push_back(abs(x).to_double());
    const Complex nn(Real(static_cast<long>(n), bits), Real(bits));
    const Complex center = -c[n - 1] / nn;
    // coefficients about the centroid give the ring radius
    UniPoly shifted = shift_substitute(UniPoly([&] {
                                         std::vector<Scalar> s;
                                         for (const auto& x : c) s.emplace_back(x);
                                         return s;
                                       }()),
                                       -Scalar(center));
    double radius = 0;
    for (std::size_t k = 1; k <= n; ++k)
      radius = std::max(radius, std::pow(shifted.coeff(n - k).magnitude(), 1.0 / static_cast<double>(k)));
    if (radius == 0) {
      z.assign(n, center);
    } else {
      std::mt19937_64 rng(cfg.seed);
      const double two_pi = 2.0 * std::acos(-1.0);
      for (std::size_t j = 0; j < n; ++j) {
        const double theta = two_pi * (static_cast<double>(j) + 0.25 + 0.5 * detail::unit_draw(rng)) / static_cast<double>(n);
        const Complex ray(Real::from_double(radius * std::cos(theta), bits), Real::from_double(radius * std::sin(theta), bits));
        z.push_back(center + ray);
      }
      const Real eps = Real::epsilon(bits);
      const double eps_d = std::ldexp(1.0, -bits);
      std::vector<bool> done(n, false);
      out.converged = false;
      int it = 0;
      for (; it < cfg.max_iterations; ++it) {
        bool active = false;
        for (std::size_t j = 0; j < n; ++j) {
          if (done[j]) continue;
          const auto h = detail::horner_with_slope(c, mags, z[j], bits);
          if (abs(h.value).to_double() <= 4.0 * static_cast<double>(n) * eps_d * h.bound) {
            done[j] = true;
            continue;
          }
          active = true;
          Complex sum(bits);
          for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            Complex diff = z[j] - z[k];
            if (diff.is_zero()) diff = Complex(eps, eps);
            sum = sum + Complex(Real(1, bits), Real(bits)) / diff;
          }
          if (h.slope.is_zero()) {
            z[j] = z[j] + Complex(eps, eps);
            continue;
          }
          const Complex ratio = h.value / h.slope;
          const Complex denom = Complex(Real(1, bits), Real(bits)) - ratio * sum;
          const Complex step = denom.is_zero() ? ratio : ratio / denom;
          z[j] = z[j] - step;
          if (abs(step).to_double() <= 4.0 * eps_d * std::max(1.0, abs(z[j]).to_double())) done[j] = true;
        }
        if (!active) {
          out.converged = true;
          break;
        }
      }
      out.iterations = it;
      detail::merge_clusters(z, c, bits);
    }
  }
  for (std::size_t i = 0; i < zeros; ++i) out.roots.emplace_back(0);
  for (auto& r : z) out.roots.emplace_back(std::move(r));
  sort_roots(out.roots);
  out.residuals = residuals_of(a, out.roots);
  return out;
}

/// Smallest achievable max over pairs of |a_i - b_j| / max(1, |a_i|) across
/// all bijections (bottleneck assignment by DP over subsets). Infinite when
/// the sizes differ.
inline double match_distance(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::numeric_limits<double>::infinity();
  if (n == 0) return 0.0;
  if (n > 20) throw std::invalid_argument("match_distance: too many roots");
  std::vector<std::vector<double>> dist(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = (a[i] - b[j]).magnitude() / std::max(1.0, a[i].magnitude());
  const std::size_t full = std::size_t{1} << n;
  std::vector<double> best(full, std::numeric_limits<double>::infinity());
  best[0] = 0.0;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (best[mask] == std::numeric_limits<double>::infinity()) continue;
    const auto i = static_cast<std::size_t>(std::popcount(mask));
    if (i == n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      const std::size_t to = mask | (std::size_t{1} << j);
      best[to] = std::min(best[to], std::max(best[mask], dist[i][j]));
    }
  }
  return best[full - 1];
}

inline bool roots_match(const std::vector<Scalar>& a, const std::vector<Scalar>& b, double tol) {
  return match_distance(a, b) <= tol;
}

/// (|s1|, |s2|, |s3|) for five roots; all three vanish exactly on the
/// roots of a Bring-Jerrard quintic.
inline std::array<double, 3> bring_curve_residual(const std::vector<Scalar>& roots) {
  if (roots.size() != 5) throw std::invalid_argument("bring_curve_residual: exactly five roots required");
  Scalar s1, s2, s3;
  for (const auto& r : roots) {
    const Scalar r2 = r * r;
    s1 += r;
    s2 += r2;
    s3 += r2 * r;
  }
  return {s1.magnitude(), s2.magnitude(), s3.magnitude()};
}

}  // namespace bring
