#pragma once

/// @file verify.hpp
/// @brief Numeric checks of transformation steps and whole reductions.

#include "bring/quintic.hpp"

#include <array>
#include <optional>
#include <vector>

namespace bring {

struct VerifyReport {
  double max_forward_residual = 0.0;  // max |C(T(z_i))| over the roots z_i of A
  double match_distance = 0.0;        // bottleneck distance between {T(z_i)} and the roots of C
  bool matched = true;
  std::optional<std::array<double, 3>> bring_residuals;  // (|s1|, |s2|, |s3|) of C's roots, degree 5 only
};

/**
 * Numeric check of one step: the images T(z_i) of A's roots must be roots of
 * C and must pair off with C's own roots. Identity steps are reported
 * trivially clean.
 */
inline VerifyReport verify_transform(const TransformStep& step, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  VerifyReport rep;
  const bool quintic = step.output.degree() == 5;
  if (step.identity) {
    rep.matched = step.output == step.input;
    if (quintic && step.output.coeff(4).is_zero() && step.output.coeff(3).is_zero() && step.output.coeff(2).is_zero())
      rep.bring_residuals = bring_curve_residual(find_roots(step.output, cfg).roots);
    return rep;
  }
  const RootSet in = find_roots(step.input, cfg);
  std::vector<Scalar> images;
  for (const auto& z : in.roots) {
    Scalar y = step.subsidiary.map()(z);
    rep.max_forward_residual = std::max(rep.max_forward_residual, step.output(y).magnitude());
    images.push_back(std::move(y));
  }
  const RootSet out = find_roots(step.output, cfg);
  rep.match_distance = match_distance(images, out.roots);
  rep.matched = rep.match_distance <= cfg.root_tol;
  if (quintic) rep.bring_residuals = bring_curve_residual(out.roots);
  return rep;
}

/// Largest relative coefficient difference between two polynomials.
inline double coeff_distance(const UniPoly& a, const UniPoly& b) {
  const double scale = std::max({1.0, max_coeff_magnitude(a), max_coeff_magnitude(b)});
  double worst = 0.0;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k)
    worst = std::max(worst, (a.coeff(k) - b.coeff(k)).magnitude() / scale);
  return worst;
}

struct TraceVerification {
  std::vector<VerifyReport> steps;
  bool chain_ok = true;   // each step's input is the previous output
  bool replay_ok = true;  // re-eliminating every step reproduces its output
  bool final_ok = true;   // final is y^5 + P y + Q and matches the last step
  std::string failure;

  bool passed() const {
    if (!chain_ok || !replay_ok || !final_ok) return false;
    for (const auto& s : steps)
      if (!s.matched) return false;
    return true;
  }
};

/// Replays and numerically checks every step of a reduction.
inline TraceVerification verify_trace(const ReductionTrace& trace, const Config& cfg = {}) {
  PrecisionGuard guard(cfg.precision_bits);
  TraceVerification v;
  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    if (v.failure.empty()) v.failure = why;
  };
  const UniPoly* prev = &trace.original;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TransformStep& s = trace.steps[i];
    const std::string tag = "step " + std::to_string(i) + " (" + s.kind + ")";
    if (coeff_distance(s.input, *prev) > cfg.tol) fail(v.chain_ok, tag + ": input is not the previous output");
    if (s.identity) {
      if (!(s.output == s.input)) fail(v.replay_ok, tag + ": identity step changes the polynomial");
    } else {
      try {
        const UniPoly replayed = eliminate(s.input, s.subsidiary.equation()).monic;
        if (coeff_distance(replayed, s.output) > cfg.tol) fail(v.replay_ok, tag + ": replayed elimination differs from output");
      } catch (const std::exception& e) {
        fail(v.replay_ok, tag + ": replay failed: " + e.what());
      }
    }
    v.steps.push_back(verify_transform(s, cfg));
    if (!v.steps.back().matched && v.failure.empty()) v.failure = tag + ": transported roots do not match the output's roots";
    prev = &s.output;
  }
  const UniPoly& f = trace.final;
  if (coeff_distance(f, *prev) > cfg.tol) fail(v.final_ok, "final polynomial is not the last step's output");
  const bool shape = f.degree() == 5 && is_monic(f) && relative_coeff(f, 4) <= cfg.tol && relative_coeff(f, 3) <= cfg.tol &&
                     relative_coeff(f, 2) <= cfg.tol;
  if (!shape) fail(v.final_ok, "final polynomial is not in Bring-Jerrard form");
  if (!(f.coeff(1) == trace.bring_p) || !(f.coeff(0) == trace.bring_q))
    fail(v.final_ok, "bring_p/bring_q disagree with the final polynomial");
  return v;
}

}  // namespace bring
