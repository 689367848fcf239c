// Boundary values of the Cauchy integral of 1/(tau - 3) on an ellipse,
// compared with P f and Q f from the quadrature singular integral.
#include <cstdio>

#include "hardy/cauchy.hpp"

int main() {
  using namespace hardy;
  const JordanCurve curve = make_ellipse(1.5, 1.0, 2048);
  Eigen::VectorXcd f(static_cast<Eigen::Index>(curve.size()));
  for (Eigen::Index j = 0; j < f.size(); ++j) f[j] = 1.0 / (curve.nodes()[j] - 3.0);
  const PlemeljResidual r = plemelj_residual(curve, f, {1e-2, 8e-3, 6e-3, 4e-3}, 64);
  for (std::size_t k = 0; k < r.offsets.size(); ++k)
    std::printf("offset %.0e  interior %.3e  exterior %.3e\n", r.offsets[k], r.interior[k], r.exterior[k]);
  std::printf("extrapolated  interior %.3e  exterior %.3e\n", r.interior_limit, r.exterior_limit);
}
