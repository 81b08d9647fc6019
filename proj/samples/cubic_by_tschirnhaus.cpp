// Solves z^3 - 6z^2 + 11z - 6 by a quadratic substitution that turns it into
// a pure cubic y^3 + K, then carries the three cube roots back.

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
  const UniPoly a = make_poly({-6, 11, -6, 1});
  const TransformStep step = cubic_to_pure(a);
  std::cout << "y = -(z^2 + b z + a) with a = " << show(step.subsidiary.coeff(0))
            << ", b = " << show(step.subsidiary.coeff(1)) << "\n";
  std::cout << "pure cubic constant: " << show(step.output.coeff(0)) << "\n";

  const std::vector<Scalar> ys = solve_cubic_cardano(step.output.coeff(1), step.output.coeff(0)).roots;
  for (const auto& z : back_solve_roots(step, ys)) std::cout << "z = " << show(z) << "\n";
}
