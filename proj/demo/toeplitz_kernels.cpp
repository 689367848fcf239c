// Finite-section kernel dimensions of T(t^k) and its companion for a few k.
#include <cstdio>

#include "hardy/toeplitz.hpp"

int main() {
  using namespace hardy;
  for (long k = -2; k <= 2; ++k) {
    const Symbol a = Symbol::monomial(k);
    const CoefficientTable table = *a.exact_coefficients(8);
    const auto t = numerical_kernel(finite_section(table, 40, 32, SectionKind::toeplitz));
    const auto c = numerical_kernel(finite_section(table, 40, 32, SectionKind::companion));
    std::printf("%-6s dim ker T = %zu  dim ker companion = %zu\n", a.name().c_str(), t.dim, c.dim);
  }
}
