#pragma once

/// @file config.hpp
/// @brief Numeric configuration shared by the pipeline, solvers and verifier.

#include "bring/real.hpp"

#include <cstdint>

namespace bring {

struct Config {
  int precision_bits = default_precision_bits;
  /// Annihilated coefficients must be this small relative to the largest
  /// coefficient of their polynomial.
  double tol = 1e-30;
  /// Two root multisets match when every paired distance is at most
  /// root_tol * max(1, |root|).
  double root_tol = 1e-25;
  /// Seeds the angular perturbation of the root finder's starting points.
  std::uint64_t seed = 0;
  int max_iterations = 2000;
};

}  // namespace bring
