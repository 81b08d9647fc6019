#pragma once

/**
 * @file steps.hpp
 * @brief Tschirnhaus steps: subsidiary equations, one elimination step, and
 *        the linear and quadratic transformations (depress, principal form,
 *        pure cubic, reciprocal).
 *
 * Sign convention for the subsidiary B(z, y):
 *   k = 1:   z + a - y = 0,                  so y = T(z) = z + a
 *   k >= 2:  z^k + ... + b z + a + y = 0,    so y = T(z) = -(z^k + ... + a)
 *
 * Coefficient conditions are never transcribed: each step computes the
 * transformed equation's top coefficients as polynomials in the unknown
 * Tschirnhaus coefficient (power-sum transport over Q[unknown]) and solves
 * what comes out.
 */

#include "bring/config.hpp"
#include "bring/elimination.hpp"
#include "bring/errors.hpp"
#include "bring/roots.hpp"
#include "bring/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace bring {

class Subsidiary {
 public:
  Subsidiary() : Subsidiary(linear(Scalar(0))) {}

  /// y = z + a.
  static Subsidiary linear(const Scalar& a) { return Subsidiary(1, {a}); }
  /// y = -(z^k + lower[k-1] z^(k-1) + ... + lower[0]), k = lower.size() >= 2.
  /// In the naming used throughout: lower = {a, b, c, d}.
  static Subsidiary polynomial(std::vector<Scalar> lower) {
    if (lower.size() < 2) throw std::invalid_argument("polynomial subsidiary needs degree >= 2");
    const int k = static_cast<int>(lower.size());
    return Subsidiary(k, std::move(lower));
  }

  int k() const { return k_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// a, b, c, d by position; zero past the degree.
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const UniPoly& map() const { return map_; }
  bool is_identity() const { return k_ == 1 && coeffs_[0].is_zero(); }

  /// B(z, y) as a polynomial in z with coefficients in y.
  BiPoly equation() const {
    std::vector<UniPoly> cs(static_cast<std::size_t>(k_) + 1);
    cs[k_] = UniPoly(Scalar(1));
    if (k_ == 1) {
      cs[0] = UniPoly{coeffs_[0], Scalar(-1)};
    } else {
      for (int j = 0; j < k_; ++j) cs[j] = UniPoly(coeffs_[j]);
      cs[0] = cs[0] + UniPoly::x();
    }
    return BiPoly(std::move(cs));
  }

  /// B(z, y0) as a polynomial in z.
  UniPoly at(const Scalar& y) const {
    const BiPoly b = equation();
    std::vector<Scalar> cs;
    for (const auto& c : b.coeffs()) cs.push_back(c(y));
    return UniPoly(std::move(cs));
  }

 private:
  Subsidiary(int k, std::vector<Scalar> coeffs) : k_(k), coeffs_(std::move(coeffs)) {
    if (k_ == 1) {
      map_ = UniPoly{coeffs_[0], Scalar(1)};
    } else {
      std::vector<Scalar> t(static_cast<std::size_t>(k_) + 1);
      for (int j = 0; j < k_; ++j) t[j] = -coeffs_[j];
      t[k_] = Scalar(-1);
      map_ = UniPoly(std::move(t));
    }
  }

  int k_;
  std::vector<Scalar> coeffs_;
  UniPoly map_;
};

/// One auxiliary equation solved while building a step.
struct AuxSolve {
  std::string unknown;  // "a", "b", "alpha", "zeta", "gamma", "d"
  UniPoly equation;     // in the unknown
  std::vector<Scalar> roots;
  std::size_t chosen = 0;

  int degree() const { return equation.degree(); }
  std::string kind() const {
    switch (degree()) {
      case 1: return "linear";
      case 2: return "quadratic";
      case 3: return "cubic";
      default: return "degree-" + std::to_string(degree());
    }
  }
  const Scalar& value() const { return roots.at(chosen); }
};

struct TransformStep {
  std::string kind;
  UniPoly input;
  Subsidiary subsidiary;
  UniPoly output;
  std::vector<AuxSolve> aux;
  Scalar normalization{1};
  std::optional<Scalar> rescue_lambda;
  bool identity = false;
};

/// Drops leading coefficients that are negligible relative to the largest
/// one (exact zeros only, for exact polynomials).
inline UniPoly trim_relative(const UniPoly& p, double tol) {
  if (all_rational(p)) return p;
  std::vector<Scalar> cs = p.coeffs();
  const double scale = max_coeff_magnitude(p);
  while (!cs.empty() && cs.back().magnitude() <= tol * scale) cs.pop_back();
  return UniPoly(std::move(cs));
}

inline bool negligible(const Scalar& x, double scale, double tol) {
  return x.is_rational() ? x.is_zero() : x.magnitude() <= tol * std::max(1.0, scale);
}

/// Solves an auxiliary equation of degree 1..3 and picks a root by the
/// deterministic preference of `choose_root`.
inline AuxSolve solve_aux(std::string unknown, const UniPoly& equation, const Config& cfg) {
  AuxSolve out;
  out.unknown = std::move(unknown);
  out.equation = equation;
  const UniPoly m = equation.degree() >= 1 ? monic(equation) : equation;
  switch (equation.degree()) {
    case 1: out.roots = {-m.coeff(0)}; break;
    case 2: out.roots = solve_quadratic(m.coeff(1), m.coeff(0)).roots; break;
    case 3: out.roots = solve_cubic_general(m.coeff(2), m.coeff(1), m.coeff(0)).roots; break;
    default:
      throw std::invalid_argument("auxiliary equation for " + out.unknown + " has degree " +
                                  std::to_string(equation.degree()));
  }
  if (!all_rational(m) && m.degree() >= 2) {
    // a multiple root comes out of the radicals as a small cluster; its
    // validated centroid is accurate to working precision
    const int bits = ambient_precision();
    std::vector<Complex> zs, cs;
    for (const auto& r : out.roots) zs.push_back(r.to_complex(bits));
    for (const auto& c : m.coeffs()) cs.push_back(c.to_complex(bits));
    detail::merge_clusters(zs, cs, bits);
    for (std::size_t i = 0; i < zs.size(); ++i)
      if (!out.roots[i].is_rational()) out.roots[i] = Scalar(zs[i]);
  }
  out.chosen = choose_root(out.roots, cfg.tol);
  return out;
}

inline TransformStep identity_step(std::string kind, const UniPoly& input) {
  TransformStep s;
  s.kind = std::move(kind);
  s.input = input;
  s.output = input;
  s.identity = true;
  return s;
}

/// Eliminates z, normalizes, and snaps the coefficients the step claims to
/// annihilate (after checking they are within tolerance).
inline TransformStep make_step(std::string kind, const UniPoly& input, Subsidiary sub, std::vector<AuxSolve> aux,
                               std::initializer_list<std::size_t> targets, const Config& cfg) {
  Eliminant el = eliminate(input, sub.equation());
  if (!snap_small(el.monic, targets, cfg.tol)) {
    std::string which;
    for (auto t : targets) which += " y^" + std::to_string(t) + "=" + std::to_string(relative_coeff(el.monic, t));
    throw ConsistencyError(kind + ": targeted coefficients not annihilated:" + which);
  }
  if (!all_rational(el.monic)) {
    // lower coefficients at the rounding level are zero as well
    std::vector<Scalar> cs = el.monic.coeffs();
    const double scale = max_coeff_magnitude(el.monic);
    for (std::size_t k = 0; k + 1 < cs.size(); ++k)
      if (!cs[k].is_zero() && cs[k].magnitude() <= cfg.tol * scale) cs[k] = Scalar(0);
    el.monic = UniPoly(std::move(cs));
  }
  TransformStep s;
  s.kind = std::move(kind);
  s.input = input;
  s.subsidiary = std::move(sub);
  s.output = std::move(el.monic);
  s.aux = std::move(aux);
  s.normalization = std::move(el.normalization);
  return s;
}

// ---------------------------------------------------------------------------

/// Linear shift y = z + m/n removing the y^(n-1) term.
inline TransformStep depress(const UniPoly& a, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  if (!is_monic(a) || a.degree() < 2) throw std::invalid_argument("depress: need a monic polynomial of degree >= 2");
  const int n = a.degree();
  const Scalar m = a.coeff(static_cast<std::size_t>(n - 1));
  if (m.is_zero()) return identity_step("depress", a);
  AuxSolve shift;
  shift.unknown = "a";
  shift.equation = UniPoly{-m, Scalar(n)};  // n a - m = 0
  shift.roots = {m / Scalar(n)};
  Subsidiary sub = Subsidiary::linear(shift.value());
  return make_step("depress", a, std::move(sub), {std::move(shift)}, {static_cast<std::size_t>(n - 1)}, cfg);
}

namespace detail {

/// For a quadratic subsidiary T = -(z^2 + b z + a): the y^(n-1) and y^(n-2)
/// coefficients of C. Returns (a as a polynomial in b, the b-equation).
inline std::pair<UniPoly, UniPoly> principal_conditions(const UniPoly& a_poly) {
  const int n = a_poly.degree();
  const PowerSums s = power_sums(a_poly, 4);
  const UniPoly b = UniPoly::x();
  // T without its constant: -(z^2 + b z), coefficients in Q[b]
  const Poly<UniPoly> t0{UniPoly{}, -b, UniPoly(Scalar(-1))};
  const UniPoly c_top0 = transformed_top_coeffs(s, t0, 1)[1];
  // lowering T by a raises that coefficient by n a
  const UniPoly a_of_b = -c_top0 / Scalar(n);
  const Poly<UniPoly> t = t0 - Poly<UniPoly>(a_of_b);
  const UniPoly b_equation = transformed_top_coeffs(s, t, 2)[2];
  return {a_of_b, b_equation};
}

inline TransformStep quadratic_principal_step(std::string kind, const UniPoly& a, const Config& cfg,
                                              const std::string& degenerate_name) {
  const int n = a.degree();
  auto [a_of_b, b_equation] = principal_conditions(a);
  b_equation = trim_relative(b_equation, cfg.tol);
  AuxSolve b_solve;
  if (b_equation.degree() >= 1) {
    b_solve = solve_aux("b", b_equation, cfg);
  } else if (b_equation.is_zero()) {
    b_solve.unknown = "b";
    b_solve.roots = {Scalar(0)};
  } else {
    throw DegenerateDenominator(degenerate_name, "the condition on b reduces to a nonzero constant");
  }
  const Scalar& b = b_solve.value();
  AuxSolve a_solve;
  a_solve.unknown = "a";
  a_solve.roots = {a_of_b(b)};
  a_solve.equation = UniPoly{-a_solve.roots[0], Scalar(1)};
  Subsidiary sub = Subsidiary::polynomial({a_solve.value(), b});
  return make_step(std::move(kind), a, std::move(sub), {std::move(b_solve), std::move(a_solve)},
                   {static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 2)}, cfg);
}

}  // namespace detail

/// Quadratic subsidiary removing the y^(n-1) and y^(n-2) terms of any monic
/// polynomial of degree >= 3. The constant a solves a linear condition, b a
/// quadratic one.
inline TransformStep to_principal(const UniPoly& a, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  if (!is_monic(a) || a.degree() < 3) throw std::invalid_argument("to_principal: need a monic polynomial of degree >= 3");
  const auto n = static_cast<std::size_t>(a.degree());
  if (a.coeff(n - 1).is_zero() && a.coeff(n - 2).is_zero()) return identity_step("principal", a);
  return detail::quadratic_principal_step("principal", a, cfg, "leading coefficient of the b-equation");
}

/**
 * The condition on b for the cubic z^3 + m z^2 + n z + p with subsidiary
 * z^2 + b z + a + y, after a has been fixed by the y^2 coefficient. Returned
 * monic:
 *
 *   b^2 + (-7mn + 9p + 2m^3)/(3n - m^2) b + (-n^2 - 6mp - m^4 + 4m^2 n)/(3n - m^2)
 *
 * (derived by transport; the tests compare it with this closed form).
 */
inline UniPoly cubic_b_quadratic(const Scalar& m, const Scalar& n, const Scalar& p, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  const Scalar denom = Scalar(3) * n - m * m;
  if (negligible(denom, std::max(n.magnitude(), m.magnitude() * m.magnitude()), cfg.tol))
    throw DegenerateDenominator("3n - m^2");
  const UniPoly b_equation = detail::principal_conditions(UniPoly{p, n, m, Scalar(1)}).second;
  if (b_equation.degree() != 2) throw ConsistencyError("b-condition for a cubic is not quadratic");
  return monic(b_equation);
}

/// Removes both intermediate terms of a monic cubic, leaving y^3 + K. Uses
/// the quadratic subsidiary with a = (m b - m^2 + 2n)/3; when 3n = m^2 the
/// plain shift y = z + m/3 already gives the pure form and is used instead.
inline TransformStep cubic_to_pure(const UniPoly& a, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  if (!is_monic(a) || a.degree() != 3) throw std::invalid_argument("cubic_to_pure: need a monic cubic");
  const Scalar m = a.coeff(2), n = a.coeff(1), p = a.coeff(0);
  UniPoly b_equation;
  try {
    b_equation = cubic_b_quadratic(m, n, p, cfg);
  } catch (const DegenerateDenominator&) {
    TransformStep shift = depress(a, cfg);
    if (!shift.output.coeff(1).is_zero() && !snap_small(shift.output, {1}, cfg.tol))
      throw ConsistencyError("cubic_to_pure: shift fallback left a linear term");
    return shift;
  }
  AuxSolve b_solve = solve_aux("b", b_equation, cfg);
  const Scalar& b = b_solve.value();
  AuxSolve a_solve;
  a_solve.unknown = "a";
  a_solve.roots = {(m * b - m * m + Scalar(2) * n) / Scalar(3)};
  a_solve.equation = UniPoly{-a_solve.roots[0], Scalar(1)};
  Subsidiary sub = Subsidiary::polynomial({a_solve.value(), b});
  return make_step("cubic_pure", a, std::move(sub), {std::move(b_solve), std::move(a_solve)}, {2, 1}, cfg);
}

/// z -> 1/z: coefficient reversal, normalized monic.
inline UniPoly reciprocal_transform(const UniPoly& a) {
  if (a.is_zero() || a.coeff(0).is_zero())
    throw std::domain_error("reciprocal_transform: zero root has no reciprocal");
  return monic(reversed(a));
}

// ---------------------------------------------------------------------------
// Back-solving: from a root y of C to the roots z of A with T(z) = y.

/// Residual |A(z)| / sum_k |a_k| max(1, |z|)^k. The max keeps exact roots
/// near zero from looking large when A has a vanishing constant term.
inline double relative_residual(const UniPoly& a, const Scalar& z) {
  double scale = 0.0, zk = 1.0;
  const double mag = std::max(1.0, z.magnitude());
  for (const auto& c : a.coeffs()) {
    scale += c.magnitude() * zk;
    zk *= mag;
  }
  const double r = a(z).magnitude();
  return scale == 0.0 ? r : r / scale;
}

/// Candidates z of B(z, y) = 0 that are also roots of A. `solve` maps a monic
/// polynomial in z (degree k) to its roots.
template <class Solve>
std::vector<Scalar> back_solve_with(const TransformStep& step, const Scalar& y, const Config& cfg, Solve&& solve) {
  if (step.identity) return {y};
  const UniPoly bz = monic(step.subsidiary.at(y));
  std::vector<Scalar> candidates = bz.degree() == 1 ? std::vector<Scalar>{-bz.coeff(0)} : solve(bz);
  std::vector<Scalar> out;
  for (auto& z : candidates)
    if (relative_residual(step.input, z) <= cfg.root_tol) out.push_back(std::move(z));
  if (out.empty())
    throw ConsistencyError(step.kind + ": no candidate of the subsidiary is a root of the input (y = " + y.to_string() + ")");
  return out;
}

/// Multiplicity of z as a root of a, judged by how many successive
/// derivatives nearly vanish there.
inline int apparent_multiplicity(const UniPoly& a, const Scalar& z, double tol) {
  int m = 1;
  UniPoly d = a.derivative();
  while (d.degree() >= 1 && relative_residual(d, z) <= tol) {
    ++m;
    d = d.derivative();
  }
  return m;
}

/// Lifts the full root multiset of a step's output to the root multiset of
/// its input. Roots of C shared by several z (a multiple root of C) hand out
/// one z each; any shortfall goes first to candidates that are multiple roots
/// of A, then to those with the smallest |A'|.
template <class Solve>
std::vector<Scalar> back_solve_roots_with(const TransformStep& step, const std::vector<Scalar>& c_roots, const Config& cfg,
                                          Solve&& solve) {
  if (step.identity) return c_roots;
  const auto clusters = cluster_multiplicities(c_roots, cfg.root_tol);
  const UniPoly da = step.input.derivative();
  const double loose = std::sqrt(cfg.root_tol);
  std::vector<Scalar> out;
  for (const auto& [y, mult] : clusters) {
    std::vector<Scalar> cands;
    for (auto& z : back_solve_with(step, y, cfg, solve)) {
      const bool dup = std::any_of(cands.begin(), cands.end(), [&](const Scalar& w) { return close(w, z, cfg.root_tol, z.magnitude()); });
      if (!dup) cands.push_back(std::move(z));
    }
    std::sort(cands.begin(), cands.end(), [&](const Scalar& u, const Scalar& v) {
      return relative_residual(step.input, u) < relative_residual(step.input, v);
    });
    if (static_cast<int>(cands.size()) > mult) cands.resize(static_cast<std::size_t>(mult));
    const std::size_t distinct = cands.size();
    std::vector<int> spare(distinct), count(distinct, 1);
    std::vector<double> slope(distinct);
    for (std::size_t i = 0; i < distinct; ++i) {
      spare[i] = apparent_multiplicity(step.input, cands[i], loose) - 1;
      slope[i] = da(cands[i]).magnitude();
    }
    for (int total = static_cast<int>(distinct); total < mult; ++total) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < distinct; ++i) {
        const bool more = spare[i] > spare[best] || (spare[i] == spare[best] && slope[i] < slope[best]);
        if (more) best = i;
      }
      --spare[best];
      ++count[best];
    }
    for (std::size_t i = 0; i < distinct; ++i)
      for (int c = 0; c < count[i]; ++c) out.push_back(cands[i]);
  }
  if (out.size() != static_cast<std::size_t>(step.input.degree()))
    throw ConsistencyError(step.kind + ": back-solve recovered " + std::to_string(out.size()) + " roots, expected " +
                           std::to_string(step.input.degree()));
  return out;
}

}  // namespace bring
