// Writes a polynomial as sum_j p_j (q_j o theta) over the invariants of a reflection group.
//
//   decompose S3 "z1^3*z2 + z3"

#include <iostream>

#include "cstkit/cstkit.hpp"

int main(int argc, char** argv) {
  using namespace cstkit;
  if (argc != 3) {
    std::cerr << "usage: decompose <group> <polynomial>\n";
    return 2;
  }
  try {
    const auto G = group_builtin(argv[1]);
    const CstContext ctx = cst_context(*G);
    const Poly f = parse_poly(argv[2], G->dimension());
    const auto dec = cst_decompose(f, *G, ctx.hsop, ctx.basis, ctx.lambda);
    const auto u = variable_names(ctx.hsop.thetas.size(), "u");
    for (std::size_t i = 0; i < ctx.hsop.thetas.size(); ++i) std::cout << u[i] << " = " << ctx.hsop.thetas[i] << "\n";
    for (std::size_t j = 0; j < ctx.basis.size(); ++j) {
      if (dec.coefficients[j].is_zero()) continue;
      std::cout << "(" << ctx.basis.polys[j] << ") * (" << to_string(dec.theta_forms[j], u) << ")\n";
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
