#pragma once

// Verification batteries: lambda, cst, isotypic, kernels. Deterministic for a given seed.

#include <Eigen/Eigenvalues>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cstkit/catalog.hpp"
#include "cstkit/cst.hpp"
#include "cstkit/kernels.hpp"
#include "cstkit/report.hpp"

namespace cstkit {

struct VerifyOptions {
  int degree = 6;
  std::uint64_t seed = 1;
  int samples = 20;  // random polynomials per randomized check
};

/// The objects every CST check starts from.
struct CstContext {
  Hsop hsop;
  ModuleBasis basis;
  LambdaMatrix lambda;
};

/// Monomials available to det Lambda, which is homogeneous of degree d m / 2.
inline double lambda_det_size(const PseudoreflectionGroup& G) {
  const double k = static_cast<double>(G.order() * G.pseudoreflection_count()) / 2;
  double c = 1;
  for (std::size_t i = 1; i < G.dimension(); ++i) c = c * (k + static_cast<double>(i)) / static_cast<double>(i);
  return c;
}

inline constexpr double kMaxLambdaDetSize = 5000;
inline constexpr std::size_t kMaxLambdaOrder = 16;

inline CstContext cst_context(const PseudoreflectionGroup& G) {
  if (G.order() > kMaxLambdaOrder || lambda_det_size(G) > kMaxLambdaDetSize)
    fail(ErrorKind::GroupTooLarge, "Lambda for " + G.name() + " is " + std::to_string(G.order()) + " x " +
                                       std::to_string(G.order()) + " with det of degree " +
                                       std::to_string(G.order() * G.pseudoreflection_count() / 2) +
                                       " in " + std::to_string(G.dimension()) + " variables");
  CstContext c;
  c.hsop = inv_hsop(G);
  c.basis = inv_module_basis(G, c.hsop);
  c.lambda = cst_lambda(G, c.basis);
  return c;
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return ratio(num(rng), den(rng));
}

/// `terms` random monomials of degree <= D with random nonzero rational coefficients.
inline Poly random_poly(std::mt19937_64& rng, std::size_t nvars, int D, int terms, bool homogeneous = false) {
  const auto monos = homogeneous ? monomials_of_degree(nvars, D) : monomials_up_to(nvars, D);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  Poly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Rational c = random_rational(rng);
    if (c == 0) c = 1;
    p.add_term(monos[pick(rng)], c);
  }
  return p;
}

namespace detail {

inline void note_constant(Check& c, const std::string& name, const std::function<Cyclotomic()>& compute) {
  try {
    const Cyclotomic v = compute();
    record(c, true, {});
    c.note = name + " = " + v.to_string();
  } catch (const Error& e) {
    record(c, false, e.what());
  }
}

// Fixed sample points inside the unit polydisc.
inline std::vector<std::vector<std::complex<double>>> sample_grid(std::size_t n) {
  static const double xs[] = {0.3, -0.5, 0.1, -0.2, 0.45};
  static const double ys[] = {-0.2, 0.1, 0.6, -0.4, 0.25};
  std::vector<std::vector<std::complex<double>>> out;
  for (std::size_t a = 0; a < 5; ++a) {
    std::vector<std::complex<double>> z;
    for (std::size_t i = 0; i < n; ++i) z.emplace_back(xs[(a + i) % 5], ys[(a + 2 * i) % 5]);
    out.push_back(std::move(z));
  }
  return out;
}

/// Smallest eigenvalue of the Gram matrix (K(z_a, z_b)) over the sample grid.
inline double gram_min_eigenvalue(const Poly& kernel2n, std::size_t n) {
  const auto pts = sample_grid(n);
  Eigen::MatrixXcd g(pts.size(), pts.size());
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b) {
      std::vector<std::complex<double>> zw = pts[a];
      for (const auto& w : pts[b]) zw.push_back(std::conj(w));
      g(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = kernel2n.approx_eval(zw);
    }
  // K(z, w) = conj(K(w, z)); symmetrize away rounding before solving
  const Eigen::MatrixXcd h = (g + g.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// coefficient of z^I wbar^J equals conj of the coefficient of z^J wbar^I
inline bool is_hermitian(const Poly& k, std::size_t n) {
  for (const auto& [m, c] : k.terms()) {
    Monomial swapped;
    for (std::size_t i = 0; i < n; ++i) {
      swapped.set(i, m[n + i]);
      swapped.set(n + i, m[i]);
    }
    if (k.coefficient(swapped) != c.conj()) return false;
  }
  return true;
}

}  // namespace detail

namespace detail {

inline std::optional<CstContext> context_or_skip(const PseudoreflectionGroup& G, Report& rep) {
  try {
    return cst_context(G);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::GroupTooLarge) throw;
    rep.skipped = e.what();
    return std::nullopt;
  }
}

}  // namespace detail

inline Report verify_lambda(const PseudoreflectionGroup& G, const VerifyOptions& = {}) {
  Report rep{"lambda", {}, {}};
  const auto maybe = detail::context_or_skip(G, rep);
  if (!maybe) return rep;
  const CstContext& ctx = *maybe;
  const Hsop& h = ctx.hsop;
  const LambdaMatrix& L = ctx.lambda;
  const int d = static_cast<int>(G.order());
  const int m = static_cast<int>(G.pseudoreflection_count());

  auto& hs_deg = rep.add("prod d_i = |G| and sum (d_i - 1) = #pseudoreflections");
  int prod = 1, sum = 0;
  for (int di : h.degrees) prod *= di, sum += di - 1;
  record(hs_deg, prod == d && sum == m, "degrees " + poincare_string(h.degrees));

  auto& poincare = rep.add("Poincare degrees = module basis degrees");
  auto expect = inv_basis_degrees(h);
  auto got = ctx.basis.degrees;
  std::sort(got.begin(), got.end());
  record(poincare, expect == got, "multisets differ");

  auto& esum = rep.add("sum e_j = d m / 2");
  int e = 0;
  for (int x : ctx.basis.degrees) e += x;
  record(esum, 2 * e == d * m, "sum e_j = " + std::to_string(e));

  auto& degree = rep.add("deg det Lambda = d m / 2");
  record(degree, 2 * *L.det.degree() == d * m, "degree " + std::to_string(*L.det.degree()));
  degree.note = "deg = " + std::to_string(*L.det.degree());

  const auto hyper = group_hyperplanes(G);
  auto& fact = rep.add("det Lambda = c prod L_i^{d(m_i-1)/2}");
  detail::note_constant(fact, "c", [&] { return cst_det_factorization(L, hyper); });

  auto& stein = rep.add("J = c1 prod L_i^{m_i-1}");
  auto& power = rep.add(d % 2 == 0 ? "det Lambda = c2 J^{d/2}" : "det Lambda = c2 (prod L_i^{(m_i-1)/2})^d");
  try {
    const auto r = cst_jacobian_relations(G, h, L);
    record(stein, true, {});
    stein.note = "c1 = " + r.steinberg_constant.to_string();
    record(power, true, {});
    power.note = "c2 = " + r.power_constant.to_string();
  } catch (const Error& err) {
    record(stein, false, err.what());
    record(power, false, err.what());
  }

  auto& cof = rep.add("cofactor det = Bareiss det on leading minors");
  for (std::size_t k = 1; k <= std::min<std::size_t>(4, G.order()); ++k) {
    PolyMatrix minor(k, k, G.dimension());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = L.matrix(i, j);
    record(cof, poly_det_cofactor(minor) == poly_det(minor), "minor of size " + std::to_string(k));
  }

  // Rows v, rho(v), ..., rho^j(v) on the first j + 1 basis columns; cyclic groups only.
  if (G.spec() && G.spec()->family == GroupSpec::Family::Cyclic) {
    auto& ladder = rep.add("det(v, rho v, ..., rho^j v) divisible by z^{j(j+1)/2}");
    const std::size_t rho = G.generators().front();
    for (std::size_t j = 0; j < G.order(); ++j) {
      PolyMatrix M(j + 1, j + 1, 1);
      for (std::size_t c = 0; c <= j; ++c) {
        Poly row = ctx.basis.polys[c];
        for (std::size_t r = 0; r <= j; ++r) {
          M(r, c) = row;
          row = G.act(rho, row);
        }
      }
      const Poly det = poly_det(M);
      const Poly z = Poly::variable(1, 0).pow(static_cast<int>(j * (j + 1) / 2));
      bool ok = !det.is_zero();
      try {
        (void)poly_exact_divide(det, z);
      } catch (const Error&) {
        ok = false;
      }
      record(ladder, ok, "j = " + std::to_string(j));
    }
  }
  return rep;
}

inline Report verify_cst(const PseudoreflectionGroup& G, const VerifyOptions& opt = {}) {
  Report rep{"cst", {}, {}};
  const auto maybe = detail::context_or_skip(G, rep);
  if (!maybe) return rep;
  const CstContext& ctx = *maybe;
  const Hsop& h = ctx.hsop;
  const std::size_t n = G.dimension();
  const std::size_t d = G.order();
  std::mt19937_64 rng(opt.seed);
  const int D = opt.degree;

  auto& round = rep.add("f = sum p_j (q_j o theta)");
  auto& recompose = rep.add("q_j o theta = f_j");
  auto& bookkeeping = rep.add("homogeneous f of degree e gives f_j of degree e - e_j");
  // column replacement costs d Bareiss eliminations per input; cross-check it only while small
  Check scratch;
  auto& modes = d <= 8 ? rep.add("adjugate numerators = column-replacement determinants") : scratch;
  auto& linear = rep.add("decomposition is linear");
  auto& unique = rep.add("adding p_k (q o theta) changes only coefficient k");
  auto& series = rep.add("series decomposition reproduces f_{<=D}");
  auto& coherence = rep.add("det Lambda_j / det Lambda is invariant (cross-multiplied)");

  auto decompose = [&](const Poly& f) { return cst_decompose(f, G, h, ctx.basis, ctx.lambda); };
  auto compare = [](const CstDecomposition& a, const CstDecomposition& b) { return a.coefficients == b.coefficients; };

  for (int s = 0; s < opt.samples; ++s) {
    const Poly f = random_poly(rng, n, D, 6);
    const std::string tag = "f = " + to_string(f);
    CstDecomposition dec;
    try {
      dec = decompose(f);
    } catch (const Error& e) {
      record(round, false, tag + ": " + e.what());
      continue;
    }
    Poly sum(n);
    for (std::size_t j = 0; j < d; ++j) sum += ctx.basis.polys[j] * poly_compose(dec.theta_forms[j], h.thetas);
    record(round, sum == f, tag);
    for (std::size_t j = 0; j < d; ++j)
      record(recompose, poly_compose(dec.theta_forms[j], h.thetas) == dec.coefficients[j], tag);

    if (s < 2 && d <= 8) {
      const auto col = cst_decompose(f, G, h, ctx.basis, ctx.lambda, CramerMode::ColumnReplacement);
      record(modes, compare(col, dec), tag);
    }

    const Poly g = random_poly(rng, n, D, 6);
    const Rational alpha = random_rational(rng), beta = random_rational(rng);
    const auto dg = decompose(g);
    const auto dc = decompose(Cyclotomic(alpha) * f + Cyclotomic(beta) * g);
    bool lin = true;
    for (std::size_t j = 0; j < d; ++j)
      lin = lin && dc.coefficients[j] == Cyclotomic(alpha) * dec.coefficients[j] + Cyclotomic(beta) * dg.coefficients[j];
    record(linear, lin, tag);

    // q: random polynomial in the theta variables of weighted degree <= D
    const std::size_t k = static_cast<std::size_t>(s) % d;
    Poly q(h.thetas.size());
    for (int t = 0; t < 3; ++t) {
      const Poly term = random_poly(rng, h.thetas.size(), 2, 1);
      q += term;
    }
    const Poly qt = poly_compose(q, h.thetas);
    const auto dp = decompose(f + ctx.basis.polys[k] * qt);
    bool uniq = true;
    for (std::size_t j = 0; j < d; ++j)
      uniq = uniq && dp.coefficients[j] == (j == k ? dec.coefficients[j] + qt : dec.coefficients[j]);
    record(unique, uniq, tag + ", k = " + std::to_string(k + 1));

    const int e = s % (D + 1);
    const Poly fh = random_poly(rng, n, e, 4, true);
    const auto dh = decompose(fh);
    for (std::size_t j = 0; j < d; ++j) {
      const Poly& fj = dh.coefficients[j];
      const bool ok = fj.is_zero() || (fj.is_homogeneous() && *fj.degree() == e - ctx.basis.degrees[j]);
      record(bookkeeping, ok, "f = " + to_string(fh) + ", j = " + std::to_string(j + 1));
    }

    const Poly big = random_poly(rng, n, D + 2, 8);
    const auto ds = cst_decompose_series(big, D, G, h, ctx.basis, ctx.lambda);
    Poly back(n);
    for (std::size_t j = 0; j < d; ++j) back += ctx.basis.polys[j] * ds.coefficients[j];
    record(series, back == big.truncate(D), "f = " + to_string(big));

    // det Lambda_j(rho^-1 z) det Lambda(z) = det Lambda_j(z) det Lambda(rho^-1 z)
    if (s < (d <= 8 ? 3 : 1) && ctx.lambda.adjugate) {
      std::vector<Poly> x;
      for (std::size_t i = 0; i < d; ++i) x.push_back(G.act(i, f));
      for (std::size_t j = 0; j < d; ++j) {
        Poly num(n);
        for (std::size_t i = 0; i < d; ++i) num += (*ctx.lambda.adjugate)(j, i) * x[i];
        for (std::size_t r = 0; r < d; ++r)
          record(coherence, G.act(r, num) * ctx.lambda.det == num * G.act(r, ctx.lambda.det),
                 tag + ", j = " + std::to_string(j + 1) + ", element " + std::to_string(r));
      }
    }
  }
  return rep;
}

inline Report verify_isotypic(const PseudoreflectionGroup& G, const VerifyOptions& opt = {}) {
  Report rep{"isotypic", {}, {}};
  const Hsop h = inv_hsop(G);
  const ModuleBasis basis = inv_module_basis(G, h);
  rep.merge(iso_verify_algebra(G, opt.degree));
  rep.merge(iso_commute_with_mtheta(G, h, opt.degree));
  const DiagonalKernel K = parse_kernel_spec("bergman:2", G.dimension());
  rep.merge(iso_adjoint_identities(G, K, std::min(opt.degree, 5)));

  const int D = *std::max_element(basis.degrees.begin(), basis.degrees.end()) + 2;
  auto& ranks = rep.add("rank of P_rho C[z] over C[theta] = (deg rho)^2");
  std::size_t total = 0;
  for (std::size_t k = 0; k < G.irreps().size(); ++k) {
    const auto r = iso_module_rank(G, h, {k, std::nullopt}, D);
    const std::size_t deg = static_cast<std::size_t>(G.irreps()[k].degree);
    record(ranks, r.rank == deg * deg, G.irreps()[k].label + " has rank " + std::to_string(r.rank));
    total += r.rank;
  }
  auto& sum = rep.add("sum of ranks = |G|");
  record(sum, total == G.order(), "total " + std::to_string(total));
  auto& joint = rep.add("dim of the joint kernel of M_theta* = |G|");
  const auto jk = iso_joint_kernel_dim(G, h, K, D);
  record(joint, jk.dim == G.order(), "dim " + std::to_string(jk.dim));
  return rep;
}

namespace detail {

inline std::vector<DiagonalKernel> named_kernels(std::size_t n) {
  return {parse_kernel_spec("hardy", n), parse_kernel_spec("bergman:2", n), parse_kernel_spec("dirichlet", n)};
}

/// The transported coefficients the disc identities predict for the block generated by z^(m-1).
inline Rational disc_closed_form(const std::string& kernel, int m, int j) {
  if (kernel == "hardy") return ratio(1, m * m);
  if (kernel == "bergman:2") return ratio(j + 1, m);
  return ratio(1, m * m * m * (j + 1));
}

}  // namespace detail

inline Report verify_kernels(const PseudoreflectionGroup& G, const VerifyOptions& opt = {}) {
  Report rep{"kernels", {}, {}};
  const Hsop h = inv_hsop(G);
  const std::size_t n = G.dimension();
  const int D = opt.degree;
  auto& complete = rep.add("sum_rho K_rho = K");
  auto& herm = rep.add("K_rho is Hermitian");
  auto& psd = rep.add("Gram matrix of K_rho on the sample grid is PSD (min eig >= -1e-9)");
  auto& trans = rep.add("|G|^2 p KK(theta, theta) conj(p) = K_rho");
  std::vector<std::vector<Poly>> generators(G.irreps().size());
  for (std::size_t k = 0; k < G.irreps().size(); ++k)
    if (G.irreps()[k].degree == 1) generators[k] = iso_module_rank(G, h, {k, std::nullopt}, D).generators;
  for (const auto& K : detail::named_kernels(n)) {
    const Poly full = K.truncation(D);
    Poly total(2 * n);
    for (std::size_t k = 0; k < G.irreps().size(); ++k) {
      const std::string tag = K.name() + ", " + G.irreps()[k].label;
      const auto block = ker_block(K, G, k, D);
      total += block.poly2n;
      record(herm, detail::is_hermitian(block.poly2n, n), tag);
      const double ev = detail::gram_min_eigenvalue(block.poly2n, n);
      record(psd, ev >= -1e-9, tag + ": " + std::to_string(ev));
      if (G.irreps()[k].degree != 1) continue;
      const auto& gens = generators[k];
      if (gens.size() != 1) {
        record(trans, false, tag + ": " + std::to_string(gens.size()) + " generators");
        continue;
      }
      try {
        const auto t = ker_transported(K, G, h, k, gens.front(), D);
        record(trans, ker_reconstruct(t, h) == block.poly2n, tag);
      } catch (const Error& e) {
        record(trans, false, tag + ": " + e.what());
      }
    }
    record(complete, total == full, K.name());
  }
  rep.merge(ker_jacobian_block(parse_kernel_spec("hardy", n), G, h, D));

  if (!G.spec()) return rep;
  const auto family = G.spec()->family;
  if (family == GroupSpec::Family::Cyclic) {
    const int m = G.spec()->params.front();
    auto& golden = rep.add("KK for z^(m-1): Hardy 1/m^2, Bergman (j+1)/m, Dirichlet 1/(m^3 (j+1))");
    const Poly p = Poly::variable(1, 0).pow(m - 1);
    std::size_t k = 0;
    while (iso_project(p, {k, std::nullopt}, G).is_zero()) ++k;
    const int Dm = m * 10 + m - 1;  // ten transported coefficients
    for (const auto& K : detail::named_kernels(1)) {
      const auto t = ker_transported(K, G, h, k, p, Dm);
      bool ok = t.coeffs.size() >= 10;
      for (int j = 0; ok && j < 10; ++j) ok = t.coeffs[static_cast<std::size_t>(j)] == detail::disc_closed_form(K.name(), m, j);
      record(golden, ok, K.name());
    }
    for (const auto& K : detail::named_kernels(1)) rep.merge(ker_disc_reducing(m, K, D).report);
  } else if (family == GroupSpec::Family::ProductCyclic) {
    rep.merge(ker_polydisc_reducing(G.spec()->params, parse_kernel_spec("hardy", n), D).report);
  }
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lambda", "cst", "isotypic", "kernels", "all"};
  return names;
}

/// One report per module battery; `all` runs the four in order.
inline std::vector<Report> verify_suite(const PseudoreflectionGroup& G, const std::string& suite, const VerifyOptions& opt = {}) {
  if (suite == "lambda") return {verify_lambda(G, opt)};
  if (suite == "cst") return {verify_cst(G, opt)};
  if (suite == "isotypic") return {verify_isotypic(G, opt)};
  if (suite == "kernels") return {verify_kernels(G, opt)};
  if (suite == "all") return {verify_lambda(G, opt), verify_cst(G, opt), verify_isotypic(G, opt), verify_kernels(G, opt)};
  fail(ErrorKind::InvalidParameter, "unknown suite '" + suite + "'");
}

}  // namespace cstkit
