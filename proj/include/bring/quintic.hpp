#pragma once

/**
 * @file quintic.hpp
 * @brief The quartic Tschirnhaus transformation taking a principal quintic
 *        to Bring-Jerrard form, and the full reduction with back-solving.
 *
 * For z^5 + p z^2 + q z + r and T(z) = -(z^4 + d z^3 + c z^2 + b z + a):
 *
 *  - the y^4 coefficient of C is linear in a, fixing a(d) = (3pd + 4q)/5;
 *  - the ansatz b = alpha d + zeta, c = d + gamma makes the y^3 coefficient
 *    a polynomial in d whose d^2 coefficient fixes alpha (linear), whose d^1
 *    coefficient fixes zeta as an affine function of gamma, and whose d^0
 *    coefficient is then a quadratic in gamma;
 *  - the y^2 coefficient is then a polynomial of degree <= 3 in d.
 *
 * No auxiliary equation above degree 3 appears anywhere. All of the above is
 * computed, not transcribed: each coefficient of C comes from power-sum
 * transport with the unknown carried as a polynomial variable.
 */

#include "bring/quartic.hpp"

#include <array>

namespace bring {

struct BringAnsatz {
  Scalar alpha, zeta, gamma, d;
  UniPoly d_cubic;   // y^2 coefficient of C as a polynomial in d
  UniPoly a_of_d;    // (3pd + 4q)/5
  UniPoly gamma_equation;
  Scalar zeta0, zeta1;  // zeta = zeta0 + zeta1 gamma
  std::vector<AuxSolve> aux;
  /// The subsidiary coefficients {a, b, c, d} in the variable the ansatz ran in.
  std::array<Scalar, 4> subsidiary_coeffs() const {
    return {a_of_d(d), alpha * d + zeta, d + gamma, d};
  }
};

namespace detail {

/// T(z) = -(z^4 + d z^3 + c z^2 + b z + a) with coefficients in some ring.
template <class R>
Poly<R> quartic_map(const R& a, const R& b, const R& c, const R& d) {
  return Poly<R>{-a, -b, -c, -d, lift<R>(-1)};
}

inline UniPoly d_affine(const Scalar& slope, const Scalar& offset) { return UniPoly{offset, slope}; }

inline double max_magnitude(std::initializer_list<Scalar> xs) {
  double m = 0;
  for (const auto& x : xs) m = std::max(m, x.magnitude());
  return m;
}

}  // namespace detail

/// The Bring-Jerrard ansatz for z^5 + p z^2 + q z + r, without rescue. Throws
/// DegenerateDenominator when a linear or quadratic condition collapses.
inline BringAnsatz quintic_bring_ansatz(const Scalar& p, const Scalar& q, const Scalar& r, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  const UniPoly a_poly{r, q, p, Scalar(0), Scalar(0), Scalar(1)};
  const PowerSums s = power_sums(a_poly, 12);
  const UniPoly dvar = UniPoly::x();
  const UniPoly zero;
  BringAnsatz out;

  // a(d) from the y^4 coefficient
  const UniPoly c4_0 = transformed_top_coeffs(s, detail::quartic_map(zero, zero, zero, dvar), 1)[1];
  out.a_of_d = -c4_0 / Scalar(5);
  const UniPoly c4 = transformed_top_coeffs(s, detail::quartic_map(out.a_of_d, zero, zero, dvar), 1)[1];
  if (!c4.is_zero() && !all_rational(c4) && max_coeff_magnitude(c4) > cfg.tol * std::max(1.0, max_coeff_magnitude(c4_0)))
    throw ConsistencyError("y^4 coefficient does not vanish identically in d");
  if (!c4.is_zero() && all_rational(c4)) throw ConsistencyError("y^4 coefficient does not vanish identically in d");

  auto y3 = [&](const UniPoly& b, const UniPoly& c) {
    return transformed_top_coeffs(s, detail::quartic_map(out.a_of_d, b, c, dvar), 2)[2];
  };

  // alpha: the d^2 coefficient of the y^3 coefficient is affine in alpha
  const Scalar f0 = y3(detail::d_affine(0, 0), dvar).coeff(2);
  const Scalar f1 = y3(detail::d_affine(1, 0), dvar).coeff(2);
  const Scalar f2 = y3(detail::d_affine(2, 0), dvar).coeff(2);
  const double f_scale = detail::max_magnitude({f0, f1, f2});
  if (!negligible(f0 - Scalar(2) * f1 + f2, f_scale, cfg.tol)) throw ConsistencyError("d^2 condition is not affine in alpha");
  const Scalar f_slope = f1 - f0;
  if (negligible(f_slope, f_scale, cfg.tol)) throw DegenerateDenominator("15p + 20q", "alpha is undetermined");
  out.alpha = -f0 / f_slope;
  out.aux.push_back({"alpha", UniPoly{f0, f_slope}, {out.alpha}, 0});

  // zeta = zeta0 + zeta1 gamma from the d^1 coefficient
  auto lin = [&](long zeta, long gamma) {
    return y3(detail::d_affine(out.alpha, Scalar(zeta)), dvar + UniPoly(Scalar(gamma))).coeff(1);
  };
  const Scalar l00 = lin(0, 0), l10 = lin(1, 0), l01 = lin(0, 1), l11 = lin(1, 1);
  const double l_scale = detail::max_magnitude({l00, l10, l01, l11});
  if (!negligible(l11 - l10 - l01 + l00, l_scale, cfg.tol)) throw ConsistencyError("d^1 condition is not affine in (zeta, gamma)");
  const Scalar l_zeta = l10 - l00, l_gamma = l01 - l00;
  if (negligible(l_zeta, l_scale, cfg.tol)) throw DegenerateDenominator("15p + 20q", "zeta is undetermined");
  out.zeta0 = -l00 / l_zeta;
  out.zeta1 = -l_gamma / l_zeta;

  // gamma from the d^0 coefficient, carried as a polynomial in gamma
  {
    const UniPoly g = UniPoly::x();
    const UniPoly a0(out.a_of_d(Scalar(0)));
    const UniPoly b0 = UniPoly{out.zeta0, out.zeta1};
    out.gamma_equation = trim_relative(transformed_top_coeffs(s, detail::quartic_map(a0, b0, g, zero), 2)[2], cfg.tol);
  }
  if (out.gamma_equation.degree() > 2) throw ConsistencyError("gamma condition has degree above 2");
  if (out.gamma_equation.degree() >= 1) {
    out.aux.push_back(solve_aux("gamma", out.gamma_equation, cfg));
    out.gamma = out.aux.back().value();
  } else if (out.gamma_equation.is_zero()) {
    out.gamma = Scalar(0);
  } else {
    throw DegenerateDenominator("gamma equation", "10q and the linear gamma coefficient vanish");
  }
  out.zeta = out.zeta0 + out.zeta1 * out.gamma;
  out.aux.push_back({"zeta", UniPoly{-out.zeta, Scalar(1)}, {out.zeta}, 0});

  // the y^3 coefficient must now vanish identically in d
  const UniPoly b_of_d = detail::d_affine(out.alpha, out.zeta);
  const UniPoly c_of_d = dvar + UniPoly(out.gamma);
  {
    const UniPoly c3 = y3(b_of_d, c_of_d);
    const UniPoly raw = y3(UniPoly{}, dvar);
    const double scale = std::max(1.0, max_coeff_magnitude(raw));
    for (const auto& x : c3.coeffs())
      if (!negligible(x, scale, cfg.tol)) throw ConsistencyError("y^3 coefficient does not vanish identically in d");
  }

  // d from the y^2 coefficient
  const UniPoly c2 = transformed_top_coeffs(s, detail::quartic_map(out.a_of_d, b_of_d, c_of_d, dvar), 3)[3];
  if (c2.degree() > 3 && !all_rational(c2)) {
    const double scale = max_coeff_magnitude(c2);
    for (std::size_t k = 4; k < c2.size(); ++k)
      if (c2.coeff(k).magnitude() > cfg.tol * scale) throw ConsistencyError("y^2 coefficient has degree above 3 in d");
  } else if (c2.degree() > 3) {
    throw ConsistencyError("y^2 coefficient has degree above 3 in d");
  }
  out.d_cubic = trim_relative(UniPoly(std::vector<Scalar>(c2.coeffs().begin(), c2.coeffs().begin() + std::min<std::size_t>(c2.size(), 4))), cfg.tol);
  if (out.d_cubic.degree() >= 1) {
    out.aux.push_back(solve_aux("d", out.d_cubic, cfg));
    out.d = out.aux.back().value();
  } else if (out.d_cubic.is_zero()) {
    out.d = Scalar(0);
  } else {
    throw DegenerateDenominator("d equation", "the y^2 coefficient is a nonzero constant in d");
  }
  out.aux.push_back({"a", UniPoly{-out.a_of_d(out.d), Scalar(1)}, {out.a_of_d(out.d)}, 0});
  return out;
}

/// The fixed sequence of scalings tried when the ansatz degenerates.
inline constexpr std::array<long, 5> rescue_sequence{2, 3, 5, 7, 11};

/// Ansatz with rescue: on a degenerate denominator, retries with z = lambda w,
/// i.e. (p, q, r) -> (p/lambda^3, q/lambda^4, r/lambda^5). Returns the ansatz
/// in the scaled variable and lambda (1 when no rescue was needed).
inline std::pair<BringAnsatz, long> quintic_bring_ansatz_rescued(const Scalar& p, const Scalar& q, const Scalar& r,
                                                                 const Config& cfg = {}) {
  std::string log;
  try {
    return {quintic_bring_ansatz(p, q, r, cfg), 1};
  } catch (const DegenerateDenominator& e) {
    log = "lambda=1: " + std::string(e.what());
  }
  for (long lambda : rescue_sequence) {
    const Scalar l(lambda);
    const Scalar l3 = l * l * l, l4 = l3 * l, l5 = l4 * l;
    try {
      return {quintic_bring_ansatz(p / l3, q / l4, r / l5, cfg), lambda};
    } catch (const DegenerateDenominator& e) {
      log += "; lambda=" + std::to_string(lambda) + ": " + e.what();
    }
  }
  throw RescueExhausted("no rescue scaling escapes the degeneracy for p=" + p.to_string() + ", q=" + q.to_string() +
                        ", r=" + r.to_string() + " (" + log + ")");
}

/// Quartic subsidiary taking z^5 + p z^2 + q z + r to y^5 + P y + Q.
inline TransformStep quintic_to_bring_jerrard(const Scalar& p, const Scalar& q, const Scalar& r, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  const UniPoly a{r, q, p, Scalar(0), Scalar(0), Scalar(1)};
  if (p.is_zero()) return identity_step("bring_jerrard", a);
  auto [ansatz, lambda] = quintic_bring_ansatz_rescued(p, q, r, cfg);
  auto k = ansatz.subsidiary_coeffs();
  // undo the scaling: y' = lambda^4 T(z / lambda)
  Scalar l(lambda), factor(1);
  for (int i = 3; i >= 0; --i) {
    factor *= l;
    k[static_cast<std::size_t>(i)] *= factor;
  }
  Subsidiary sub = Subsidiary::polynomial({k[0], k[1], k[2], k[3]});
  TransformStep step = make_step("bring_jerrard", a, std::move(sub), std::move(ansatz.aux), {4, 3, 2}, cfg);
  if (lambda != 1) step.rescue_lambda = Scalar(lambda);
  return step;
}

inline TransformStep quintic_to_bring_jerrard(const UniPoly& principal, const Config& cfg = {}) {
  if (principal.degree() != 5 || !is_monic(principal) || !principal.coeff(4).is_zero() || !principal.coeff(3).is_zero())
    throw std::invalid_argument("quintic_to_bring_jerrard: need z^5 + p z^2 + q z + r");
  return quintic_to_bring_jerrard(principal.coeff(2), principal.coeff(1), principal.coeff(0), cfg);
}

// ---------------------------------------------------------------------------

struct ReductionTrace {
  UniPoly original;
  std::vector<TransformStep> steps;  // identity steps elided
  UniPoly final;
  Scalar bring_p, bring_q;
  int precision_bits = default_precision_bits;
};

/// Depress, move to principal form, then to Bring-Jerrard form.
inline ReductionTrace reduce_general_quintic(const UniPoly& a, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  if (a.degree() != 5 || !is_monic(a)) throw std::invalid_argument("reduce_general_quintic: need a monic quintic");
  ReductionTrace trace;
  trace.original = a;
  trace.precision_bits = cfg.precision_bits;
  UniPoly cur = a;
  auto push = [&](TransformStep step) {
    cur = step.output;
    if (!step.identity) trace.steps.push_back(std::move(step));
  };
  push(depress(cur, cfg));
  push(to_principal(cur, cfg));
  push(quintic_to_bring_jerrard(cur, cfg));
  trace.final = cur;
  trace.bring_p = cur.coeff(1);
  trace.bring_q = cur.coeff(0);
  return trace;
}

/// Candidate roots of a step's input lying over the root y of its output.
inline std::vector<Scalar> back_solve(const TransformStep& step, const Scalar& y, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  return back_solve_with(step, y, cfg, [&](const UniPoly& m) { return solve_polynomial(m, cfg).roots; });
}

/// Root multiset of a step's input from the root multiset of its output.
inline std::vector<Scalar> back_solve_roots(const TransformStep& step, const std::vector<Scalar>& c_roots,
                                            const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  return back_solve_roots_with(step, c_roots, cfg, [&](const UniPoly& m) { return solve_polynomial(m, cfg).roots; });
}

/// All roots of the original quintic: numeric roots of the Bring-Jerrard
/// form, carried back through every step.
inline std::vector<Scalar> recover_roots(const ReductionTrace& trace, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  std::vector<Scalar> roots = find_roots(trace.final, cfg).roots;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) roots = back_solve_roots(*it, roots, cfg);
  sort_roots(roots);
  return roots;
}

}  // namespace bring
