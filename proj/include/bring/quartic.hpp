#pragma once

/**
 * @file quartic.hpp
 * @brief Quartics by two successive quadratic transformations, and the
 *        resultant G(c) that blocks the analogous one-step cubic
 *        transformation.
 *
 * For z^4 + n z^2 + p z + q: a quadratic subsidiary first removes the z^3
 * and z^2 terms (a quadratic condition on b), a second one then removes the
 * z^3 and z^1 terms (a cubic condition on b), which leaves a quadratic in
 * y^2.
 */

#include "bring/roots.hpp"
#include "bring/steps.hpp"

namespace bring {

inline UniPoly depressed_quartic(const Scalar& n, const Scalar& p, const Scalar& q) {
  return UniPoly{q, p, n, Scalar(0), Scalar(1)};
}

/// Quadratic subsidiary taking z^4 + n z^2 + p z + q to y^4 + P y + Q. The
/// constant is a = n/2 and b solves n b^2 + 3p b + 2q - n^2/2 = 0 (linear when
/// n = 0).
inline TransformStep quartic_remove_2_3(const Scalar& n, const Scalar& p, const Scalar& q, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  return detail::quadratic_principal_step("quartic_2_3", depressed_quartic(n, p, q), cfg,
                                          "n and p (the b-condition is the constant 2q)");
}

/// Quadratic subsidiary taking z^4 + p z + q to y^4 + N y^2 + Q. Here a = 0
/// and b is a root of the cubic -p b^3 - 4q b^2 + p^2.
inline TransformStep quartic_remove_2_4(const Scalar& p, const Scalar& q, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  const UniPoly a = depressed_quartic(Scalar(0), p, q);
  if (p.is_zero()) return identity_step("quartic_2_4", a);

  const PowerSums s = power_sums(a, 6);
  const UniPoly b = UniPoly::x();
  const Poly<UniPoly> t0{UniPoly{}, -b, UniPoly(Scalar(-1))};
  const UniPoly a_of_b = -transformed_top_coeffs(s, t0, 1)[1] / Scalar(4);
  const Poly<UniPoly> t = t0 - Poly<UniPoly>(a_of_b);
  const UniPoly d_cubic = trim_relative(transformed_top_coeffs(s, t, 3)[3], cfg.tol);
  if (d_cubic.degree() < 1) throw ConsistencyError("quartic_remove_2_4: the condition on b is constant");

  AuxSolve b_solve = solve_aux("b", d_cubic, cfg);
  AuxSolve a_solve;
  a_solve.unknown = "a";
  a_solve.roots = {a_of_b(b_solve.value())};
  a_solve.equation = UniPoly{-a_solve.roots[0], Scalar(1)};
  Subsidiary sub = Subsidiary::polynomial({a_solve.value(), b_solve.value()});
  return make_step("quartic_2_4", a, std::move(sub), {std::move(b_solve), std::move(a_solve)}, {3, 1}, cfg);
}

namespace detail {
/// Degree <= 3 solves for back-substitution through quadratic subsidiaries.
inline std::vector<Scalar> solve_low_degree(const UniPoly& m) {
  switch (m.degree()) {
    case 1: return {-m.coeff(0)};
    case 2: return solve_quadratic(m.coeff(1), m.coeff(0)).roots;
    case 3: return solve_cubic_general(m.coeff(2), m.coeff(1), m.coeff(0)).roots;
    default: throw std::invalid_argument("solve_low_degree: degree out of range");
  }
}
}  // namespace detail

/// All four roots of z^4 + n z^2 + p z + q, by the two transformations above
/// and back-substitution through each subsidiary.
inline SolveResult solve_quartic(const Scalar& n, const Scalar& p, const Scalar& q, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  const UniPoly a = depressed_quartic(n, p, q);
  std::vector<TransformStep> steps;
  UniPoly cur = a;
  if (!p.is_zero()) {
    if (!n.is_zero()) {
      steps.push_back(quartic_remove_2_3(n, p, q, cfg));
      cur = steps.back().output;
    }
    steps.push_back(quartic_remove_2_4(cur.coeff(1), cur.coeff(0), cfg));
    cur = steps.back().output;
  }
  // cur = w^4 + N w^2 + Q
  std::vector<Scalar> roots;
  for (const auto& u : solve_quadratic(cur.coeff(2), cur.coeff(0)).roots) {
    const Scalar w = sqrt(u);
    roots.push_back(w);
    roots.push_back(-w);
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    roots = back_solve_roots_with(*it, roots, cfg, detail::solve_low_degree);
  return finish(a, std::move(roots), "quartic");
}

/// Roots of z^4 + m z^3 + n z^2 + p z + q via z = w - m/4.
inline SolveResult solve_quartic_general(const UniPoly& monic_quartic, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  const Scalar shift = monic_quartic.coeff(3) / Scalar(4);
  const UniPoly w = shift_substitute(monic_quartic, shift);
  std::vector<Scalar> roots;
  for (const auto& r : solve_quartic(w.coeff(2), w.coeff(1), w.coeff(0), cfg).roots) roots.push_back(r - shift);
  return finish(monic_quartic, std::move(roots), "quartic");
}

/// Closed-form roots of any polynomial of degree 1 to 4.
inline SolveResult solve_polynomial(const UniPoly& a, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  if (a.degree() < 1 || a.degree() > 4) throw std::invalid_argument("solve_polynomial: degree must be 1..4");
  const UniPoly m = monic(a);
  switch (m.degree()) {
    case 1: return solve_linear(m.coeff(0));
    case 2: return solve_quadratic(m.coeff(1), m.coeff(0));
    case 3: return solve_cubic_general(m.coeff(2), m.coeff(1), m.coeff(0));
    default: return solve_quartic_general(m, cfg);
  }
}

// ---------------------------------------------------------------------------

/// Polynomials in b whose coefficients are polynomials in c.
using BCPoly = Poly<UniPoly>;

struct ObstructionResult {
  Scalar a;   // forced by the y^3 coefficient
  BCPoly e;   // y^2 coefficient of C, in (b, c)
  BCPoly f;   // y^1 coefficient of C, in (b, c)
  UniPoly g;  // Res_b(E, F)
  bool degenerate = false;
};

/**
 * Conditions for a cubic subsidiary z^3 + c z^2 + b z + a + y to remove the
 * y^3, y^2 and y^1 terms of z^4 + p z + q at once. a is fixed at 3p/4; E is
 * linear in b and F cubic, so eliminating b leaves G(c) of degree 6 in
 * general. Degenerate when p = 0 or G drops below degree 6.
 */
inline ObstructionResult quartic_obstruction_G(const Scalar& p, const Scalar& q, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  const UniPoly a = depressed_quartic(Scalar(0), p, q);
  const PowerSums s = power_sums(a, 9);
  using R = Poly<UniPoly>;  // b outer, c inner
  const R b = R::x();
  const R c(UniPoly::x());
  const R one(UniPoly(Scalar(1)));
  const Poly<R> t0{R{}, -b, -c, -one};
  const R top = transformed_top_coeffs(s, t0, 1)[1];
  if (top.degree() > 0 || top.coeff(0).degree() > 0)
    throw ConsistencyError("quartic_obstruction_G: y^3 coefficient depends on b or c");
  ObstructionResult out;
  out.a = -top.coeff(0).coeff(0) / Scalar(4);
  const Poly<R> t = t0 - Poly<R>(R(UniPoly(out.a)));
  const auto cs = transformed_top_coeffs(s, t, 3);
  out.e = cs[2];
  out.f = cs[3];
  if (out.e.is_zero() || out.f.is_zero()) {
    out.degenerate = true;
    return out;
  }
  out.g = resultant(out.e, out.f);
  out.degenerate = p.is_zero() || out.g.degree() < 6;
  return out;
}

struct ObstructionPoint {
  Scalar b, c;
  double e_residual, f_residual;
};

/// Each root c of G extended to (b, c) with b from E (linear in b).
inline std::vector<ObstructionPoint> obstruction_points(const ObstructionResult& r, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  std::vector<ObstructionPoint> out;
  if (r.g.degree() < 1) return out;
  for (const auto& c : find_roots(r.g, cfg).roots) {
    const Scalar e1 = r.e.coeff(1)(c), e0 = r.e.coeff(0)(c);
    ObstructionPoint pt;
    pt.c = c;
    if (e1.is_zero()) {
      pt.b = Scalar(0);
    } else {
      pt.b = -e0 / e1;
    }
    pt.e_residual = r.e(UniPoly(pt.b))(c).magnitude();
    pt.f_residual = r.f(UniPoly(pt.b))(c).magnitude();
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace bring
