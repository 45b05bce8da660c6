#pragma once

// Isotypic blocks of G-invariant diagonal kernels, transported kernels on theta(Omega),
// and the disc / polydisc reducing-subspace checks.

#include <numeric>
#include <string>
#include <vector>

#include "cstkit/isotypic.hpp"

namespace cstkit {

struct KernelTruncation {
  Poly poly2n;  // z block, then wbar block
  int D = 0;
};

/// Sum_I a_I (P_rho z^I) wbar^I over |I| <= D, which equals
/// (deg rho / |G|) sum_sigma conj(chi(sigma)) K(sigma^{-1} z, w) truncated.
inline KernelTruncation ker_block(const DiagonalKernel& K, const PseudoreflectionGroup& G, std::size_t irrep, int D) {
  if (!ker_check_invariance(K, G, D)) fail(ErrorKind::KernelNotInvariant, K.name() + " is not invariant under " + G.name());
  const std::size_t n = G.dimension();
  const ActionTable table(G, D);
  const MonomialOperator P = table.projection({irrep, std::nullopt});
  Poly out(2 * n);
  for (std::size_t k = 0; k < P.basis().size(); ++k) {
    const Monomial& m = P.basis()[k];
    Monomial wbar;
    for (std::size_t i = 0; i < n; ++i) wbar.set(n + i, m[i]);
    const Cyclotomic a(K.coefficient(m));
    for (const auto& [mz, c] : P.image(k).terms()) out.add_term(mz * wbar, a * c);
  }
  return {std::move(out), D};
}

enum class TransportNormalization {
  GroupOrderSquared,  // |G|^2 p(z) KK(theta(z), theta(w)) conj(p(w)) = K_rho(z, w)
  Unit,               // p(z) KK(theta(z), theta(w)) conj(p(w)) = K_rho(z, w)
};

struct TransportedKernel {
  Poly kernel;                    // KK(u, vbar) in 2k theta-variables
  std::vector<Rational> coeffs;   // one theta-variable: coefficient of (u vbar)^j
  std::string irrep;
  Poly generator;
  Rational scale;                 // |G|^2 or 1
};

/// Theta in both blocks: theta(z) and conj(theta)(wbar).
inline Hsop doubled_hsop(const Hsop& h) {
  const std::size_t n = h.nvars();
  Hsop out;
  for (const auto& t : h.thetas) out.thetas.push_back(t.embed(2 * n, 0));
  for (const auto& t : h.thetas) out.thetas.push_back(t.conj_coefficients().embed(2 * n, n));
  out.degrees = h.degrees;
  out.degrees.insert(out.degrees.end(), h.degrees.begin(), h.degrees.end());
  return out;
}

/// Solves scale * p(z) KK(theta(z), theta(w)) conj(p(w)) = K_rho(z, w) for KK.
inline TransportedKernel ker_transported(const DiagonalKernel& K, const PseudoreflectionGroup& G, const Hsop& h,
                                         std::size_t irrep, const Poly& p, int D,
                                         TransportNormalization norm = TransportNormalization::GroupOrderSquared) {
  const Irrep& r = G.irreps().at(irrep);
  if (r.degree != 1) fail(ErrorKind::Unsupported, "transported kernels are built for one-dimensional irreps only");
  const std::size_t n = G.dimension();
  if (p.nvars() != n) fail(ErrorKind::ArityMismatch, "generator lives in the wrong ring");
  const KernelTruncation block = ker_block(K, G, irrep, D);
  const Poly divisor = p.embed(2 * n, 0) * p.conj_coefficients().embed(2 * n, n);
  const Poly quotient = poly_exact_divide(block.poly2n, divisor);
  TransportedKernel out;
  out.irrep = r.label;
  out.generator = p;
  out.scale = norm == TransportNormalization::GroupOrderSquared ? Rational(static_cast<long>(G.order() * G.order())) : Rational(1);
  out.kernel = Cyclotomic(Rational(1 / out.scale)) * inv_rewrite(quotient, doubled_hsop(h)).q;
  if (h.thetas.size() == 1) {
    const Poly& k = out.kernel;
    if (!k.is_zero())
      for (int j = 0; 2 * j <= *k.degree(); ++j) {
        const Cyclotomic c = k.coefficient(Monomial{j, j});
        if (!c.is_rational()) fail(ErrorKind::InternalInconsistency, "transported coefficient is not rational");
        out.coeffs.push_back(c.rational_part());
      }
  }
  return out;
}

/// scale * p(z) KK(theta(z), theta(w)) conj(p(w)), for round-trip checks.
inline Poly ker_reconstruct(const TransportedKernel& t, const Hsop& h) {
  const std::size_t n = h.nvars();
  const Hsop dh = doubled_hsop(h);
  const Poly pz = t.generator.embed(2 * n, 0);
  const Poly pw = t.generator.conj_coefficients().embed(2 * n, n);
  return Cyclotomic(t.scale) * (pz * poly_compose(t.kernel, dh.thetas) * pw);
}

/// Index of the irrep whose character is sigma -> det(sigma): the isotype of J_theta
/// under sigma . f = f o sigma^{-1}.
inline std::size_t jacobian_irrep(const PseudoreflectionGroup& G) { return find_irrep(G, "det"); }

/// J(z) KK_mu(theta(z), theta(w)) conj(J(w)) = (1/|G|) sum_sigma conj(chi_mu(sigma)) K(sigma^{-1} z, w),
/// checked on the degree-D truncation with KK_mu obtained by exact division.
inline Report ker_jacobian_block(const DiagonalKernel& K, const PseudoreflectionGroup& G, const Hsop& h, int D) {
  Report rep{"kernel-jacobian", {}, {}};
  const std::size_t mu = jacobian_irrep(G);
  const Poly J = poly_jacobian_det(h.thetas);
  const std::size_t n = G.dimension();
  auto& inv = rep.add("J spans the mu-isotypic line");
  for (std::size_t s = 0; s < G.order(); ++s)
    record(inv, G.act(s, J) == G.irreps()[mu].character[s] * J, "element " + std::to_string(s));
  const KernelTruncation block = ker_block(K, G, mu, D);
  // the same block written with the group sum
  auto& sum = rep.add("K_mu = (1/|G|) sum conj(chi_mu) K(sigma^-1 z, w)");
  Poly direct(2 * n);
  const Poly Kt = K.truncation(D);
  for (std::size_t s = 0; s < G.order(); ++s) {
    const CycMatrix& inv_m = G.element(G.inverse(s)).matrix;
    const CycMatrix act = CycMatrix::block_diagonal(inv_m, CycMatrix::identity(n));
    direct += G.irreps()[mu].character[s].conj() * substitute_linear(Kt, act);
  }
  direct = Cyclotomic(ratio(1, static_cast<long>(G.order()))) * direct;
  record(sum, direct == block.poly2n, "block differs from the group average");
  auto& cross = rep.add("J KK_mu conj(J) = K_mu");
  try {
    const TransportedKernel t = ker_transported(K, G, h, mu, J, D, TransportNormalization::Unit);
    record(cross, ker_reconstruct(t, h) == block.poly2n, "reconstruction differs");
  } catch (const Error& e) {
    record(cross, false, e.what());
  }
  return rep;
}

struct ReducingBlock {
  std::vector<int> residue;   // j with block span{z^(m k + j)}
  std::vector<Poly> basis;    // echelon basis of the projected block
  std::size_t rank = 0;       // generators over C[z1^m1, ..., zn^mn]
};

struct ReducingReport {
  Report report;
  std::vector<ReducingBlock> blocks;
};

/// Reducing subspaces of H_K over C[z1^m1, ..., zn^mn] at truncation D.
inline ReducingReport ker_polydisc_reducing(const std::vector<int>& ms, const DiagonalKernel& K, int D) {
  const std::size_t n = ms.size();
  if (n == 0 || K.nvars() != n) fail(ErrorKind::ArityMismatch, "one exponent per kernel variable is required");
  for (int m : ms)
    if (m < 1) fail(ErrorKind::InvalidParameter, "exponents must be positive");
  for (const auto& mono : monomials_up_to(n, D))
    if (K.coefficient(mono) <= 0) fail(ErrorKind::InvalidParameter, "kernel coefficients must be positive up to D");
  // deck group: diagonal roots of unity
  int N = 1;
  for (int m : ms) N = std::lcm(N, m);
  std::vector<CycMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (ms[i] == 1) continue;
    std::vector<Cyclotomic> d(n, Cyclotomic::rational(1, N));
    d[i] = Cyclotomic::zeta_power(ms[i], 1).lift(N);
    gens.push_back(CycMatrix::diagonal(d));
  }
  if (gens.empty()) gens.push_back(CycMatrix::identity(n));
  const PseudoreflectionGroup G = group_generate(gens, kDefaultGroupCap);
  Hsop h;
  for (std::size_t i = 0; i < n; ++i) {
    h.thetas.push_back(Poly::term(n, Monomial::variable(i, ms[i])));
    h.degrees.push_back(ms[i]);
  }

  ReducingReport out;
  out.report.suite = "kernel-reducing";
  auto& count = out.report.add("block count = prod m_i = |Deck|");
  auto& spans = out.report.add("P_j C[z] = span{z^(mk+j)}");
  auto& orth = out.report.add("blocks mutually orthogonal");
  auto& complete = out.report.add("blocks sum to C[z]_{<=D}");
  auto& rank = out.report.add("each block has rank 1");

  std::vector<int> j(n, 0);
  std::size_t total_dim = 0;
  EchelonSpan all(n);
  while (true) {
    const Poly zj = Poly::term(n, Monomial(std::span<const int>(j)));
    // eigenvalue of each sigma on z^j
    std::vector<Cyclotomic> lambda;
    for (std::size_t s = 0; s < G.order(); ++s) lambda.push_back(G.act(s, zj).coefficient(zj.leading_monomial()));
    auto project = [&](const Poly& f) {
      Poly acc(n);
      for (std::size_t s = 0; s < G.order(); ++s) acc += lambda[s].conj() * G.act(s, f);
      return Cyclotomic(ratio(1, static_cast<long>(G.order()))) * acc;
    };
    ReducingBlock b;
    b.residue = j;
    EchelonSpan image(n);
    std::vector<Poly> expected;
    for (const auto& m : monomials_up_to(n, D)) {
      image.add(project(Poly::term(n, m)));
      bool match = true;
      for (std::size_t i = 0; i < n; ++i) match = match && m[i] % ms[i] == j[i];
      if (match) expected.push_back(Poly::term(n, m));
    }
    b.basis = image.basis();
    std::string name = "j=(";
    for (std::size_t i = 0; i < n; ++i) name += (i ? "," : "") + std::to_string(j[i]);
    name += ")";
    record(spans, same_span(n, b.basis, expected), name);
    total_dim += b.basis.size();
    all.add_all(b.basis);
    for (const auto& prev : out.blocks)
      for (const auto& x : prev.basis)
        for (const auto& y : b.basis) record(orth, K.inner(x, y).is_zero(), name + " vs earlier block");
    // generators over C[theta]
    EchelonSpan multiples(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : b.basis)
        if (*v.degree() + ms[i] <= D) multiples.add(h.thetas[i] * v);
    for (const auto& v : b.basis)
      if (multiples.add(v)) ++b.rank;
    const bool present = *zj.degree() <= D;
    record(rank, present ? b.rank == 1 && image.contains(zj) : b.basis.empty(), name);
    out.blocks.push_back(std::move(b));
    std::size_t pos = n;
    while (pos-- > 0) {
      if (++j[pos] < ms[pos]) break;
      j[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  const std::size_t expect_blocks = static_cast<std::size_t>(std::accumulate(ms.begin(), ms.end(), 1, std::multiplies<>()));
  record(count, out.blocks.size() == expect_blocks && G.order() == expect_blocks, std::to_string(out.blocks.size()) + " blocks");
  const std::size_t full = monomials_up_to(n, D).size();
  record(complete, total_dim == full && all.dim() == full, std::to_string(total_dim) + " of " + std::to_string(full));
  return out;
}

inline ReducingReport ker_disc_reducing(int m, const DiagonalKernel& K, int D) { return ker_polydisc_reducing({m}, K, D); }

}  // namespace cstkit
