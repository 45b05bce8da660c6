#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace cstkit;
using namespace testing_support;

namespace {

const std::vector<std::string> kCatalog{"Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ3", "Z2xZ2", "S2", "S3", "S4",
                                        "D3", "D4", "D5", "D6", "Z2*S2", "S3*Z2"};

Cyclotomic z(int N, int k) { return Cyclotomic::zeta_power(N, k); }

// rank(I - g) = 1, computed independently of the group's own flags
bool fixes_hyperplane(const CycMatrix& g) {
  CycMatrix d = CycMatrix::identity(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) d(i, j) -= g(i, j);
  return d.rank() == 1;
}

}  // namespace

TEST(Groups, GenerateCyclic) {
  const auto G = group_generate({CycMatrix::diagonal({z(3, 1)})}, 100);
  EXPECT_EQ(G.order(), 3u);
  EXPECT_EQ(G.pseudoreflection_count(), 2u);
  EXPECT_TRUE(G.reflection_generated());
}

TEST(Groups, GenerateDihedralOfOrderSix) {
  const CycMatrix rot = CycMatrix::diagonal({z(3, 1), z(3, -1)});
  const CycMatrix swap(2, 2, {0, 1, 1, 0});
  const auto G = group_generate({rot, swap}, 100);
  EXPECT_EQ(G.order(), 6u);
  EXPECT_EQ(G.pseudoreflection_count(), 3u);
}

TEST(Groups, GenerationCapIsEnforced) {
  EXPECT_THROW(group_generate({CycMatrix::diagonal({z(7, 1)})}, 5), Error);
  EXPECT_THROW(group_generate({CycMatrix::diagonal({Cyclotomic(2)})}, 100), Error);
}

TEST(Groups, PseudoreflectionPredicate) {
  EXPECT_TRUE(group_is_pseudoreflection(CycMatrix::diagonal({z(3, 1)})));
  EXPECT_FALSE(group_is_pseudoreflection(CycMatrix::diagonal({z(3, 1), z(3, -1)})));
  EXPECT_FALSE(group_is_pseudoreflection(CycMatrix::identity(2)));
}

TEST(Groups, HyperplanesOfS2AndZ3) {
  const auto s2 = group_hyperplanes(*builtin("S2"));
  ASSERT_EQ(s2.size(), 1u);
  EXPECT_EQ(s2[0].linear_form, P("z1 - z2", 2));
  EXPECT_EQ(s2[0].order, 2);
  const auto z3 = group_hyperplanes(*builtin("Z3"));
  ASSERT_EQ(z3.size(), 1u);
  EXPECT_EQ(z3[0].linear_form, P("z", 1));
  EXPECT_EQ(z3[0].order, 3);
}

TEST(Groups, HyperplanesOfD3) {
  // {z1 = zeta^-j z2}: with L = z1 + c z2 the slopes -c run over the cube roots of unity
  const auto hs = group_hyperplanes(*builtin("D3"));
  ASSERT_EQ(hs.size(), 3u);
  std::set<std::string> slopes, expected;
  for (const auto& h : hs) {
    EXPECT_EQ(h.order, 2);
    EXPECT_EQ(h.linear_form.coefficient(Monomial{1, 0}), Cyclotomic(1));
    slopes.insert((-h.linear_form.coefficient(Monomial{0, 1})).lift(6).to_string());
  }
  for (int j = 0; j < 3; ++j) expected.insert(z(3, j).lift(6).to_string());
  EXPECT_EQ(slopes, expected);
  const auto cls = hyperplane_classes(*builtin("D3"), hs);
  EXPECT_EQ(std::set<std::size_t>(cls.begin(), cls.end()).size(), 1u);
  // D4 has two orbits of mirrors
  const auto G4 = builtin("D4");
  const auto c4 = hyperplane_classes(*G4, group_hyperplanes(*G4));
  EXPECT_EQ(std::set<std::size_t>(c4.begin(), c4.end()).size(), 2u);
}

TEST(Groups, OrdersAndReflectionCounts) {
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> table{
      {"Z4", 4, 3}, {"S3", 6, 3}, {"D5", 10, 5}, {"S4", 24, 6}, {"Z2xZ3", 6, 3}, {"D4", 8, 4}, {"S3*Z2", 12, 4}};
  for (const auto& [spec, order, refl] : table) {
    const auto G = builtin(spec);
    EXPECT_EQ(G->order(), order) << spec;
    EXPECT_EQ(G->pseudoreflection_count(), refl) << spec;
    std::size_t count = 0;
    for (const auto& e : G->elements()) count += fixes_hyperplane(e.matrix);
    EXPECT_EQ(count, refl) << spec;
  }
}

TEST(Groups, CatalogClosureInversesAndGeneration) {
  for (const auto& spec : kCatalog) {
    const auto G = builtin(spec);
    const std::size_t n = G->order();
    std::vector<CycMatrix> refl;
    for (std::size_t a = 0; a < n; ++a) {
      EXPECT_TRUE(G->element(G->multiply(a, G->inverse(a))).matrix.is_identity()) << spec;
      EXPECT_TRUE(G->element(a).matrix.is_unitary()) << spec;
      for (std::size_t b = 0; b < n; ++b) {
        const auto found = G->find(G->element(a).matrix * G->element(b).matrix);
        ASSERT_TRUE(found.has_value()) << spec;
        EXPECT_EQ(*found, G->multiply(a, b));
      }
      if (G->is_pseudoreflection(a)) refl.push_back(G->element(a).matrix);
    }
    if (n == 1) continue;
    EXPECT_EQ(group_generate(refl, 1000).order(), n) << spec;
  }
}

TEST(Groups, IrrepDegrees) {
  auto degrees = [](const std::string& spec) {
    std::multiset<int> d;
    for (const auto& r : builtin(spec)->irreps()) d.insert(r.degree);
    return d;
  };
  EXPECT_EQ(degrees("S3"), (std::multiset<int>{1, 1, 2}));
  EXPECT_EQ(degrees("D4"), (std::multiset<int>{1, 1, 1, 1, 2}));
  EXPECT_EQ(degrees("D5"), (std::multiset<int>{1, 1, 2, 2}));
  EXPECT_EQ(degrees("S4"), (std::multiset<int>{1, 1, 2, 3, 3}));
}

TEST(Groups, CyclicCharacters) {
  const auto G = builtin("Z3");
  const auto g = G->find(CycMatrix::diagonal({z(3, 1)}));
  ASSERT_TRUE(g.has_value());
  std::set<int> seen;
  for (const auto& r : G->irreps()) {
    int j = -1;
    for (int c = 0; c < 3; ++c)
      if (r.character[*g] == z(3, c)) j = c;
    ASSERT_GE(j, 0);
    seen.insert(j);
    std::size_t power = 0;  // sigma^k
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(r.character[power], z(3, j * k));
      power = G->multiply(power, *g);
    }
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(Groups, CharacterOrthogonality) {
  for (const auto& spec : kCatalog) {
    const auto G = builtin(spec);
    const auto& irr = G->irreps();
    int sum_sq = 0;
    for (std::size_t a = 0; a < irr.size(); ++a) {
      sum_sq += irr[a].degree * irr[a].degree;
      for (std::size_t b = 0; b < irr.size(); ++b) {
        Cyclotomic s;
        for (std::size_t g = 0; g < G->order(); ++g) s += irr[a].character[g] * irr[b].character[g].conj();
        EXPECT_EQ(s, Cyclotomic(a == b ? static_cast<int>(G->order()) : 0)) << spec << " " << irr[a].label << " " << irr[b].label;
      }
    }
    EXPECT_EQ(sum_sq, static_cast<int>(G->order())) << spec;
  }
}

TEST(Groups, MatrixModels) {
  std::mt19937_64 r(7);
  for (const auto& spec : kCatalog) {
    const auto G = builtin(spec);
    const std::size_t n = G->order();
    for (const auto& rep : G->irreps()) {
      ASSERT_TRUE(rep.model.has_value()) << spec << " " << rep.label;
      const auto& M = *rep.model;
      for (std::size_t g = 0; g < n; ++g) {
        EXPECT_TRUE(M[g].is_unitary());
        EXPECT_EQ(M[g].trace(), rep.character[g]);
      }
      auto check = [&](std::size_t a, std::size_t b) { EXPECT_EQ(M[a] * M[b], M[G->multiply(a, b)]) << spec << " " << rep.label; };
      if (n <= 12) {
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) check(a, b);
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int t = 0; t < 200; ++t) check(pick(r), pick(r));
      }
    }
  }
}

TEST(Groups, MatrixEntryOrthogonality) {
  // sum_sigma pi^ij(sigma^-1) pi'^lm(sigma) = (|G| / deg) delta(pi, pi') delta_im delta_jl
  for (const std::string spec : {"S3", "D4", "D5", "S4", "Z2*S2"}) {
    const auto G = builtin(spec);
    const auto& irr = G->irreps();
    for (std::size_t a = 0; a < irr.size(); ++a)
      for (std::size_t b = 0; b < irr.size(); ++b) {
        const int da = irr[a].degree, db = irr[b].degree;
        for (int i = 0; i < da; ++i)
          for (int j = 0; j < da; ++j)
            for (int l = 0; l < db; ++l)
              for (int m = 0; m < db; ++m) {
                Cyclotomic s;
                for (std::size_t g = 0; g < G->order(); ++g)
                  s += (*irr[a].model)[G->inverse(g)](i, j) * (*irr[b].model)[g](l, m);
                const bool hit = a == b && i == m && j == l;
                EXPECT_EQ(s, hit ? Cyclotomic(ratio(static_cast<long>(G->order()), da)) : Cyclotomic(0)) << spec;
              }
      }
  }
}

TEST(Groups, SpecParsing) {
  for (const auto& spec : kCatalog) EXPECT_EQ(parse_group_spec(spec).to_string(), spec);
  EXPECT_EQ(builtin("D3")->order(), 6u);
  EXPECT_EQ(builtin("Z2xZ3")->dimension(), 2u);
  EXPECT_EQ(builtin("S3*Z2")->dimension(), 4u);
  for (const std::string bad : {"", "Q3", "Z", "Z0", "D1", "S0", "Zx", "S3*"}) EXPECT_THROW(parse_group_spec(bad), Error) << bad;
  // the trivial group has no reflecting hyperplanes
  EXPECT_THROW(builtin("Z1"), Error);
}

TEST(Groups, IrrepAliases) {
  const auto G = builtin("S3");
  EXPECT_EQ(G->irreps()[find_irrep(*G, "trivial")].label, "triv");
  EXPECT_EQ(G->irreps()[find_irrep(*G, "det")].label, "sign");
  const auto D = builtin("D3");
  EXPECT_EQ(D->irreps()[find_irrep(*D, "std")].label, "rho1");
  // on Z3, "sign" means the determinant character
  const auto C = builtin("Z3");
  const std::size_t k = find_irrep(*C, "sign");
  for (std::size_t g = 0; g < C->order(); ++g) EXPECT_EQ(C->irreps()[k].character[g], C->element(g).matrix.det());
  EXPECT_THROW(find_irrep(*G, "nonsense"), Error);
}

TEST(Groups, NonReflectionGroupIsFlagged) {
  const auto G = group_generate({CycMatrix::diagonal({z(3, 1), z(3, -1)})}, 100);
  EXPECT_FALSE(G.reflection_generated());
  try {
    (void)inv_hsop(G);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotReflectionGroup);
  }
}
