// Transported kernel coefficients for z^(m-1) on the disc, for the three standard weights.

#include <iostream>

#include "cstkit/cstkit.hpp"

int main() {
  using namespace cstkit;
  for (int m = 2; m <= 4; ++m) {
    const auto G = group_builtin("Z" + std::to_string(m));
    const Hsop h = inv_hsop(*G);
    const Poly p = Poly::variable(1, 0).pow(m - 1);
    std::size_t block = 0;
    while (iso_project(p, {block, std::nullopt}, *G).is_zero()) ++block;
    for (const std::string name : {"hardy", "bergman:2", "dirichlet"}) {
      const auto t = ker_transported(parse_kernel_spec(name, 1), *G, h, block, p, 6 * m - 1);
      std::cout << "m=" << m << " " << name << ":";
      for (const auto& c : t.coeffs) std::cout << " " << c.get_str();
      std::cout << "\n";
    }
  }
}
