#include <gtest/gtest.h>

#include "support.hpp"

using namespace cstkit;
using namespace testing_support;

namespace {

struct Setup {
  std::shared_ptr<const PseudoreflectionGroup> G;
  Hsop h;
  ModuleBasis basis;
  LambdaMatrix L;

  explicit Setup(std::string_view spec) : G(builtin(spec)), h(inv_hsop(*G)), basis(inv_module_basis(*G, h)), L(cst_lambda(*G, basis)) {}

  CstDecomposition decompose(const Poly& f, CramerMode mode = CramerMode::Adjugate) const {
    return cst_decompose(f, *G, h, basis, L, mode);
  }
};

const Setup& setup(const std::string& spec) {
  static std::map<std::string, std::unique_ptr<Setup>> cache;
  auto& slot = cache[spec];
  if (!slot) slot = std::make_unique<Setup>(spec);
  return *slot;
}

const std::vector<std::string> kSmall{"Z2", "Z3", "Z4", "Z5", "S2", "S3", "D3", "D4", "D5", "Z2xZ3", "Z2xZ2", "Z2*S2"};

std::vector<Cyclotomic> image(const CycMatrix& g, const std::vector<Cyclotomic>& x) {
  std::vector<Cyclotomic> y(x.size(), Cyclotomic(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += g(i, j) * x[j];
  return y;
}

std::string U(const Poly& q) { return to_string(q, variable_names(q.nvars(), "u")); }

}  // namespace

TEST(Lambda, S2) {
  const auto& s = setup("S2");
  EXPECT_EQ(s.L.det, P("z2 - z1", 2));
  EXPECT_EQ(s.L.matrix(0, 0), P("1", 2));
  EXPECT_EQ(s.L.matrix(1, 1), P("z2", 2));
}

TEST(Lambda, Z2) { EXPECT_EQ(setup("Z2").L.det, P("-2*z", 1)); }

// Lambda for Z_m is z^{m(m-1)/2} times the Vandermonde matrix of the scalars of the g_i^{-1}
TEST(Lambda, CyclicVandermonde) {
  for (int m = 2; m <= 6; ++m) {
    const auto& s = setup("Z" + std::to_string(m));
    CycMatrix V(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < s.G->order(); ++i) {
      const Cyclotomic lam = s.G->element(s.G->inverse(i)).matrix(0, 0);
      Cyclotomic p(1);
      for (int j = 0; j < m; ++j) {
        V(i, static_cast<std::size_t>(j)) = p;
        p = p * lam;
      }
    }
    const Poly expect = Poly::term(1, Monomial{m * (m - 1) / 2}, V.det());
    EXPECT_EQ(s.L.det, expect) << "m = " << m;
  }
  EXPECT_EQ(setup("Z3").L.det, Poly::term(1, Monomial{3}, parse_cyclotomic("3 + 6*z(3)^1")));
}

TEST(Lambda, DegreeIsHalfOrderTimesReflections) {
  for (const auto& spec : kSmall) {
    const auto& s = setup(spec);
    EXPECT_EQ(2 * *s.L.det.degree(), static_cast<int>(s.G->order() * s.G->pseudoreflection_count())) << spec;
    EXPECT_TRUE(s.L.det.is_homogeneous()) << spec;
  }
}

TEST(Lambda, AdjugateIdentity) {
  for (const std::string spec : {"S2", "Z3", "S3", "D3"}) {
    const auto& s = setup(spec);
    const PolyMatrix prod = s.L.matrix * *s.L.adjugate;
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) EXPECT_EQ(prod(i, j), i == j ? s.L.det : Poly(s.G->dimension())) << spec;
  }
}

TEST(Lambda, PinnedConstants) {
  struct Row {
    std::string spec, c, c1, c2;
  };
  const std::vector<Row> rows{{"S2", "-1", "1", "-1"}, {"D3", "-27", "-3", "1"}, {"Z4", "16*z(4)^1", "4", "z(4)^1"}};
  for (const auto& r : rows) {
    const auto& s = setup(r.spec);
    EXPECT_EQ(cst_det_factorization(s.L, group_hyperplanes(*s.G)), parse_cyclotomic(r.c)) << r.spec;
    const auto rel = cst_jacobian_relations(*s.G, s.h, s.L);
    EXPECT_EQ(rel.steinberg_constant, parse_cyclotomic(r.c1)) << r.spec;
    EXPECT_EQ(rel.power_constant, parse_cyclotomic(r.c2)) << r.spec;
  }
}

// det Lambda, J, and prod L_i agree up to nonzero constants on every small group
TEST(Lambda, FactorizationHoldsAcrossGroups) {
  for (const auto& spec : kSmall) {
    const auto& s = setup(spec);
    const auto hs = group_hyperplanes(*s.G);
    EXPECT_FALSE(cst_det_factorization(s.L, hs).is_zero()) << spec;
    const auto rel = cst_jacobian_relations(*s.G, s.h, s.L);
    EXPECT_FALSE(rel.steinberg_constant.is_zero()) << spec;
    EXPECT_FALSE(rel.power_constant.is_zero()) << spec;
    // g.J = J o g^{-1} = det(g) J
    for (std::size_t g = 0; g < s.G->order(); ++g)
      EXPECT_EQ(s.G->act(g, rel.jacobian), s.G->element(g).matrix.det() * rel.jacobian) << spec;
  }
}

TEST(Lambda, LeadingSubmatrixLadderForCyclic) {
  for (int m = 2; m <= 5; ++m) {
    const auto& s = setup("Z" + std::to_string(m));
    const std::size_t rho = s.G->generators().front();
    for (int j = 0; j < m; ++j) {
      PolyMatrix M(j + 1, j + 1, 1);
      for (int c = 0; c <= j; ++c) {
        Poly v = s.basis.polys[c];
        for (int r = 0; r <= j; ++r) {
          M(r, c) = v;
          v = s.G->act(rho, v);
        }
      }
      const Poly det = poly_det(M);
      ASSERT_FALSE(det.is_zero());
      EXPECT_EQ(*det.min_degree(), j * (j + 1) / 2) << "m = " << m << " j = " << j;
    }
  }
}

TEST(Decompose, S2Example) {
  const auto& s = setup("S2");
  const auto d = s.decompose(P("z1^2", 2));
  EXPECT_EQ(d.coefficients[0], P("-z1*z2", 2));
  EXPECT_EQ(d.coefficients[1], P("z1 + z2", 2));
  EXPECT_EQ(U(d.theta_forms[0]), "-u2");
  EXPECT_EQ(U(d.theta_forms[1]), "u1");
  EXPECT_TRUE(d.reconstructed);
}

TEST(Decompose, Z3FifthPower) {
  const auto d = setup("Z3").decompose(P("z^5", 1));
  EXPECT_TRUE(d.coefficients[0].is_zero());
  EXPECT_TRUE(d.coefficients[1].is_zero());
  EXPECT_EQ(d.coefficients[2], P("z^3", 1));
  EXPECT_EQ(U(d.theta_forms[2]), "u");
}

TEST(Decompose, Z2Series) {
  const auto& s = setup("Z2");
  const auto d = cst_decompose_series(P("1 + z + z^2 + z^3 + z^4 + z^5", 1), 5, *s.G, s.h, s.basis, s.L);
  EXPECT_EQ(d.coefficients[0], P("1 + z^2 + z^4", 1));
  EXPECT_EQ(d.coefficients[1], P("1 + z^2 + z^4", 1));
}

TEST(Decompose, EvaluationOracle) {
  std::mt19937_64 r(3);
  for (const auto& spec : kSmall) {
    const auto& s = setup(spec);
    const std::size_t n = s.G->dimension();
    for (int t = 0; t < 5; ++t) {
      const Poly f = random_poly(n, 6, 5, 1, r);
      const auto d = s.decompose(f);
      const auto x = random_point(n, r);
      Cyclotomic sum;
      for (std::size_t j = 0; j < s.basis.size(); ++j) sum += eval_exact(s.basis.polys[j], x) * eval_exact(d.coefficients[j], x);
      EXPECT_EQ(sum, eval_exact(f, x)) << spec;
      // each f_j takes equal values along the orbit of x
      for (std::size_t j = 0; j < s.basis.size(); ++j)
        for (const auto& e : s.G->elements()) EXPECT_EQ(eval_exact(d.coefficients[j], image(e.matrix, x)), eval_exact(d.coefficients[j], x)) << spec;
    }
  }
}

TEST(Decompose, ThetaFormsRecompose) {
  for (const auto& spec : kSmall) {
    const auto& s = setup(spec);
    const Poly f = random_poly(s.G->dimension(), 7, 6);
    const auto d = s.decompose(f);
    Poly sum(s.G->dimension());
    for (std::size_t j = 0; j < s.basis.size(); ++j) {
      const Poly fj = poly_compose(d.theta_forms[j], s.h.thetas);
      EXPECT_EQ(fj, d.coefficients[j]) << spec;
      sum += s.basis.polys[j] * fj;
    }
    EXPECT_EQ(sum, f) << spec;
  }
}

TEST(Decompose, DegreeBookkeeping) {
  for (const auto& spec : kSmall) {
    const auto& s = setup(spec);
    for (int e = 0; e <= 6; ++e) {
      Poly f(s.G->dimension());
      for (const auto& m : monomials_of_degree(s.G->dimension(), e)) f.add_term(m, small_rational());
      const auto d = s.decompose(f);
      for (std::size_t j = 0; j < s.basis.size(); ++j) {
        const Poly& fj = d.coefficients[j];
        if (fj.is_zero()) continue;
        EXPECT_TRUE(fj.is_homogeneous()) << spec;
        EXPECT_EQ(*fj.degree(), e - s.basis.degrees[j]) << spec;
      }
    }
  }
}

TEST(Decompose, LinearityAndUniqueness) {
  std::mt19937_64 r(5);
  for (const auto& spec : kSmall) {
    const auto& s = setup(spec);
    const std::size_t n = s.G->dimension();
    const Poly f = random_poly(n, 6, 5, 1, r), g = random_poly(n, 6, 5, 1, r);
    const Cyclotomic a(small_rational(r)), b(small_rational(r));
    const auto df = s.decompose(f), dg = s.decompose(g), dc = s.decompose(a * f + b * g);
    for (std::size_t j = 0; j < s.basis.size(); ++j) EXPECT_EQ(dc.coefficients[j], a * df.coefficients[j] + b * dg.coefficients[j]) << spec;
    for (std::size_t k = 0; k < s.basis.size(); ++k) {
      const Poly q = random_poly(s.h.thetas.size(), 2, 3, 1, r);
      const Poly qt = poly_compose(q, s.h.thetas);
      const auto dk = s.decompose(f + s.basis.polys[k] * qt);
      for (std::size_t j = 0; j < s.basis.size(); ++j)
        EXPECT_EQ(dk.coefficients[j], j == k ? df.coefficients[j] + qt : df.coefficients[j]) << spec << " k = " << k;
    }
  }
}

TEST(Decompose, AdjugateMatchesColumnReplacement) {
  for (const std::string spec : {"S2", "Z3", "S3", "D3", "Z2xZ2"}) {
    const auto& s = setup(spec);
    const Poly f = random_poly(s.G->dimension(), 5, 5);
    EXPECT_EQ(s.decompose(f).coefficients, s.decompose(f, CramerMode::ColumnReplacement).coefficients) << spec;
  }
}

// det Lambda_j(sigma z) det Lambda(z) = det Lambda_j(z) det Lambda(sigma z)
TEST(Decompose, CramerQuotientsAreCoherent) {
  std::mt19937_64 r(17);
  for (const std::string spec : {"S2", "Z2", "Z3", "Z4", "S3", "D3"}) {
    const auto& s = setup(spec);
    const std::size_t d = s.G->order();
    const int samples = d <= 4 ? 20 : 6;
    for (int t = 0; t < samples; ++t) {
      const Poly f = random_poly(s.G->dimension(), 5, 4, 1, r);
      std::vector<Poly> x;
      for (std::size_t i = 0; i < d; ++i) x.push_back(s.G->act(i, f));
      for (std::size_t j = 0; j < d; ++j) {
        const Poly num = poly_det(s.L.matrix.with_column(j, x));
        for (std::size_t g = 0; g < d; ++g) EXPECT_EQ(s.G->act(g, num) * s.L.det, num * s.G->act(g, s.L.det)) << spec;
      }
    }
  }
}

TEST(Decompose, ZeroAndArity) {
  const auto& s = setup("S3");
  const auto z = s.decompose(Poly(3));
  for (const auto& c : z.coefficients) EXPECT_TRUE(c.is_zero());
  try {
    (void)s.decompose(P("z1", 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
  }
}

TEST(Decompose, CyclotomicInputOnDihedral) {
  const auto& s = setup("D5");
  const Poly f = random_poly(2, 5, 4, 5);
  const auto d = s.decompose(f);
  Poly sum(2);
  for (std::size_t j = 0; j < s.basis.size(); ++j) sum += s.basis.polys[j] * d.coefficients[j];
  EXPECT_EQ(sum, f);
}

TEST(Decompose, LargeGroupsAreDeclinedForLambda) {
  EXPECT_THROW((void)cst_context(*builtin("S4")), Error);
  EXPECT_NO_THROW((void)cst_context(*builtin("S3*Z2")));
}
