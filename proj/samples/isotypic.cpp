// Splits a polynomial into isotypic components and counts module generators per irrep.

#include <iostream>

#include "cstkit/cstkit.hpp"

int main(int argc, char** argv) {
  using namespace cstkit;
  const std::string spec = argc > 1 ? argv[1] : "D4";
  const std::string text = argc > 2 ? argv[2] : "z1^4 + z1*z2 + z1";
  try {
    const auto G = group_builtin(spec);
    const Hsop h = inv_hsop(*G);
    const Poly f = parse_poly(text, G->dimension());
    for (const auto& [label, part] : iso_decompose(f, *G)) std::cout << label << ": " << part << "\n";
    const int D = static_cast<int>(G->pseudoreflection_count()) + 2;
    for (std::size_t k = 0; k < G->irreps().size(); ++k)
      std::cout << "rank of " << G->irreps()[k].label << " = " << iso_module_rank(*G, h, {k, std::nullopt}, D).rank << "\n";
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
