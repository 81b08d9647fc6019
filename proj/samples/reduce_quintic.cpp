// Reduces z^5 + z^2 + z + 1 to Bring-Jerrard form, checks every step and
// recovers the original roots from the reduced quintic.

#include "bring/bring.hpp"

#include <cstdio>
#include <iostream>
#include <string>

namespace {

std::string show(const bring::Scalar& x) {
  if (x.is_rational()) return x.to_string();
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", x.real_part(), x.imag_part());
  return buf;
}

}  // namespace

int main() {
  using namespace bring;
  const UniPoly a = make_poly({1, 1, 1, 0, 0, 1});
  const ReductionTrace trace = reduce_general_quintic(a);

  for (const auto& step : trace.steps) {
    std::cout << step.kind << ": subsidiary of degree " << step.subsidiary.k() << "\n";
    for (const auto& aux : step.aux) std::cout << "  " << aux.unknown << " from a " << aux.kind() << " equation\n";
  }
  std::cout << "y^5 + P y + Q with\n  P = " << show(trace.bring_p) << "\n  Q = " << show(trace.bring_q)
            << "\n";

  const TraceVerification v = verify_trace(trace);
  std::cout << "verified: " << (v.passed() ? "yes" : "no") << "\n";

  std::cout << "roots:\n";
  for (const auto& z : recover_roots(trace)) std::cout << "  " << show(z) << "\n";
  return v.passed() ? 0 : 1;
}
