#include <gtest/gtest.h>

#include "support.hpp"

using namespace cstkit;
using namespace testing_support;

namespace {

const std::vector<std::string> kGroups{"Z2", "Z3", "Z4", "S2", "S3", "D3", "D4", "D5", "Z2xZ3", "Z2*S2"};

ProjectionSpec coarse(const PseudoreflectionGroup& G, const std::string& label) { return {find_irrep(G, label), std::nullopt}; }
ProjectionSpec fine(const PseudoreflectionGroup& G, const std::string& label, int i, int j) {
  return {find_irrep(G, label), std::make_pair(i, j)};
}

std::vector<Cyclotomic> image(const CycMatrix& g, const std::vector<Cyclotomic>& x) {
  std::vector<Cyclotomic> y(x.size(), Cyclotomic(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += g(i, j) * x[j];
  return y;
}

void expect_report(const Report& r) {
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << r.suite << ": " << c.relation << " -- " << c.witness;
  EXPECT_FALSE(r.checks.empty()) << r.suite;
}

}  // namespace

TEST(Projection, StandardOfS3) {
  const auto G = builtin("S3");
  EXPECT_EQ(iso_project(P("z1", 3), coarse(*G, "std"), *G), P("z1 - (z1 + z2 + z3)/3", 3));
  EXPECT_EQ(iso_project(P("z1", 3), coarse(*G, "triv"), *G), P("(z1 + z2 + z3)/3", 3));
  EXPECT_TRUE(iso_project(P("z1", 3), coarse(*G, "sign"), *G).is_zero());
}

TEST(Projection, FineProjectionsOfD3) {
  const auto G = builtin("D3");
  EXPECT_EQ(iso_project(P("z1", 2), fine(*G, "std", 2, 2), *G), P("z1", 2));
  EXPECT_TRUE(iso_project(P("z1", 2), fine(*G, "std", 1, 1), *G).is_zero());
  EXPECT_EQ(iso_project(P("z1", 2), fine(*G, "std", 1, 2), *G), P("z2", 2));
}

// (P_rho f)(x) = (deg/|G|) sum_sigma chi(sigma^-1) f(sigma^-1 x), evaluated point by point
TEST(Projection, EvaluationOracle) {
  std::mt19937_64 r(23);
  for (const auto& spec : kGroups) {
    const auto G = builtin(spec);
    const std::size_t n = G->dimension();
    const Poly f = random_poly(n, 4, 5, 1, r);
    const auto x = random_point(n, r);
    for (std::size_t k = 0; k < G->irreps().size(); ++k) {
      const Irrep& rep = G->irreps()[k];
      Cyclotomic s;
      for (std::size_t g = 0; g < G->order(); ++g) {
        const std::size_t gi = G->inverse(g);
        s += rep.character[gi] * eval_exact(f, image(G->element(gi).matrix, x));
      }
      s = Cyclotomic(ratio(rep.degree, static_cast<long>(G->order()))) * s;
      EXPECT_EQ(eval_exact(iso_project(f, {k, std::nullopt}, *G), x), s) << spec << " " << rep.label;
    }
  }
}

TEST(Projection, OrthogonalIdempotentsOnRandomPolys) {
  std::mt19937_64 r(29);
  for (const auto& spec : kGroups) {
    const auto G = builtin(spec);
    const Poly f = random_poly(G->dimension(), 5, 6, 1, r);
    Poly total(G->dimension());
    const std::size_t k = G->irreps().size();
    for (std::size_t a = 0; a < k; ++a) {
      const Poly pa = iso_project(f, {a, std::nullopt}, *G);
      total += pa;
      for (std::size_t b = 0; b < k; ++b) {
        const Poly pba = iso_project(pa, {b, std::nullopt}, *G);
        if (a == b) {
          EXPECT_EQ(pba, pa) << spec;
        } else {
          EXPECT_TRUE(pba.is_zero()) << spec;
        }
      }
    }
    EXPECT_EQ(total, f) << spec;
  }
}

// P^ij P^kl = delta_jk P^il
TEST(Projection, MatrixUnitRelations) {
  std::mt19937_64 r(31);
  for (const std::string spec : {"S3", "D3", "D4", "Z2*S2"}) {
    const auto G = builtin(spec);
    const Poly f = random_poly(G->dimension(), 4, 6, 1, r);
    for (std::size_t k = 0; k < G->irreps().size(); ++k) {
      const int deg = G->irreps()[k].degree;
      for (int i = 1; i <= deg; ++i)
        for (int j = 1; j <= deg; ++j)
          for (int a = 1; a <= deg; ++a)
            for (int b = 1; b <= deg; ++b) {
              const Poly lhs = iso_project(iso_project(f, {k, std::make_pair(a, b)}, *G), {k, std::make_pair(i, j)}, *G);
              const Poly rhs = j == a ? iso_project(f, {k, std::make_pair(i, b)}, *G) : Poly(G->dimension());
              EXPECT_EQ(lhs, rhs) << spec << " " << i << j << a << b;
            }
    }
  }
}

TEST(Projection, ErrorsAreTyped) {
  const auto G = builtin("D3");
  try {
    (void)iso_project(P("z1", 2), fine(*G, "std", 3, 1), *G);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
  }
  EXPECT_THROW((void)iso_project(P("z1", 3), coarse(*G, "triv"), *G), Error);
  EXPECT_THROW((void)find_irrep(*G, "rho9"), Error);
}

TEST(Operators, AlgebraReports) {
  for (const std::string spec : {"S2", "Z3", "S3", "D3", "D4"}) expect_report(iso_verify_algebra(*builtin(spec), 4));
}

TEST(Operators, CommutationWithInvariantMultipliers) {
  const auto S2 = builtin("S2");
  const auto sign = coarse(*S2, "sign");
  const Poly theta1 = P("z1 + z2", 2);
  EXPECT_EQ(iso_project(theta1 * P("z1", 2), sign, *S2), theta1 * iso_project(P("z1", 2), sign, *S2));
  // the guard: a non-invariant multiplier does not commute
  EXPECT_NE(iso_project(P("z1^2", 2), sign, *S2), P("z1", 2) * iso_project(P("z1", 2), sign, *S2));
  for (const std::string spec : {"S2", "Z3", "S3", "D3"}) {
    const auto G = builtin(spec);
    expect_report(iso_commute_with_mtheta(*G, inv_hsop(*G), 3));
  }
}

TEST(Operators, AdjointIdentities) {
  expect_report(iso_adjoint_identities(*builtin("Z3"), ker_bergman(2), 5));
  expect_report(iso_adjoint_identities(*builtin("S2"), ker_ball(2, 2), 4));
  expect_report(iso_adjoint_identities(*builtin("D3"), parse_kernel_spec("hardy", 2), 4));
  expect_report(iso_adjoint_identities(*builtin("S3"), parse_kernel_spec("bergman:3", 3), 3));
}

TEST(Operators, NonInvariantKernelIsRejected) {
  const auto K = ker_custom(2, [](const Monomial& m) { return Rational(1 + m[0]); }, "lopsided");
  try {
    (void)iso_adjoint_identities(*builtin("S2"), K, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::KernelNotInvariant);
  }
}

TEST(ModuleRank, SignOfS2) {
  const auto G = builtin("S2");
  const auto r = iso_module_rank(*G, inv_hsop(*G), coarse(*G, "sign"), 4);
  EXPECT_EQ(r.rank, 1u);
  ASSERT_EQ(r.generators.size(), 1u);
  const Poly& g = r.generators[0];
  const Cyclotomic c = g.coefficient(Monomial{1, 0});
  EXPECT_EQ(g, c * P("z1 - z2", 2));
}

TEST(ModuleRank, StandardOfS3) {
  const auto G = builtin("S3");
  EXPECT_EQ(iso_module_rank(*G, inv_hsop(*G), coarse(*G, "std"), 4).rank, 4u);
}

TEST(ModuleRank, DegreeSquaredAndTotal) {
  for (const auto& spec : kGroups) {
    const auto G = builtin(spec);
    const auto h = inv_hsop(*G);
    const auto basis = inv_module_basis(*G, h);
    const int D = *std::max_element(basis.degrees.begin(), basis.degrees.end()) + 1;
    std::size_t total = 0;
    for (std::size_t k = 0; k < G->irreps().size(); ++k) {
      const auto r = iso_module_rank(*G, h, {k, std::nullopt}, D);
      const int deg = G->irreps()[k].degree;
      EXPECT_EQ(r.rank, static_cast<std::size_t>(deg * deg)) << spec << " " << G->irreps()[k].label;
      total += r.rank;
      EXPECT_GT(r.rank, 0u);
    }
    EXPECT_EQ(total, G->order()) << spec;
  }
}

TEST(JointKernel, Examples) {
  const auto Z3 = builtin("Z3");
  EXPECT_EQ(iso_joint_kernel_dim(*Z3, inv_hsop(*Z3), ker_hardy(), 4).dim, 3u);
  const auto S2 = builtin("S2");
  EXPECT_EQ(iso_joint_kernel_dim(*S2, inv_hsop(*S2), ker_ball(2, 2), 3).dim, 2u);
  const auto D3 = builtin("D3");
  EXPECT_EQ(iso_joint_kernel_dim(*D3, inv_hsop(*D3), parse_kernel_spec("hardy", 2), 6).dim, 6u);
}

// every vector of the complement is K-orthogonal to theta_i z^I
TEST(JointKernel, OrthogonalityOracle) {
  for (const std::string spec : {"S2", "Z3", "D3", "S3"}) {
    const auto G = builtin(spec);
    const auto h = inv_hsop(*G);
    const auto K = parse_kernel_spec("bergman:2", G->dimension());
    const int D = 5;
    const auto jk = iso_joint_kernel_dim(*G, h, K, D);
    EXPECT_EQ(jk.dim, G->order()) << spec;
    for (const auto& v : jk.basis)
      for (std::size_t i = 0; i < h.thetas.size(); ++i)
        for (const auto& m : monomials_up_to(G->dimension(), D - h.degrees[i]))
          EXPECT_TRUE(K.inner(v, h.thetas[i] * Poly::term(G->dimension(), m)).is_zero()) << spec;
  }
}
