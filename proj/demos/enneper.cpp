// Builds the Enneper surface, prints it in both orderings and checks it.
#include <iostream>

#include "weylmin/weylmin.hpp"

int main() {
  using namespace weylmin;
  const Surface s = surface_from_Ftilde(parse_poly_lambda("L^3/6"));
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::cout << "X" << i + 1 << " = " << render_uv_text(s.components[i]) << "\n";
    std::cout << "   = " << render_text(s.components[i]) << "\n";
  }
  const VerificationReport rep = verify_minimal(s);
  const WeylVector n = normal_element();
  std::cout << "minimal: " << (rep.passes() ? "yes" : "no") << "\n";
  std::cout << "H0 = " << render_text(mean_curvature_H0(s, n)) << "\n";

  const Surface c = conjugate_surface(s);
  std::cout << "conjugate X3 = " << render_uv_text(c.components[2]) << "\n";
  return rep.passes() ? 0 : 1;
}
