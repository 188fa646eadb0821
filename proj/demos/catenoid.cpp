// Residuals of the catenoid in the truncated Fock representation.
#include <cstdio>

#include "weylmin/fock.hpp"

int main() {
  using namespace weylmin;
  std::printf("%5s %12s %12s %12s %12s %12s\n", "dim", "X1", "X2", "X3", "isotropy", "tail");
  for (int dim : {48, 64, 96, 128}) {
    const ResidualReport r = residual_report({dim, 1.0, 20});
    std::printf("%5d %12.3e %12.3e %12.3e %12.3e %12.3e\n", dim, r.x1, r.x2, r.x3, r.phi_isotropy, r.tail_bound);
  }
}
