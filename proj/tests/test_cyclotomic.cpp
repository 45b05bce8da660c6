#include <gtest/gtest.h>

#include "support.hpp"

using namespace cstkit;
using namespace testing_support;

TEST(Cyclotomic, CubeRootInsideConductorTwelve) {
  const Cyclotomic x = cyc_root_of_unity(3, 12);
  EXPECT_EQ(x * x * x, Cyclotomic(1));
  EXPECT_NE(x, Cyclotomic(1));
  EXPECT_TRUE((Cyclotomic(1) + x + x * x).is_zero());
}

TEST(Cyclotomic, RootOfUnityRejectsNonDivisor) {
  EXPECT_THROW(cyc_root_of_unity(5, 12), Error);
}

TEST(Cyclotomic, DivisionByZetaFour) {
  const Cyclotomic i = Cyclotomic::zeta_power(4, 1);
  const Cyclotomic q = Cyclotomic(1) / i;
  EXPECT_EQ(q, -i);
  EXPECT_EQ(q * i, Cyclotomic(1));
}

TEST(Cyclotomic, SquareRootOfTwo) {
  const Cyclotomic z = Cyclotomic::zeta_power(8, 1);
  const Cyclotomic s = z + z.inverse();
  EXPECT_EQ(s * s, Cyclotomic(2));
  EXPECT_EQ(s.conj(), s);
}

TEST(Cyclotomic, LiftZetaThreeToSix) {
  const Cyclotomic z3 = Cyclotomic::zeta_power(3, 1);
  const Cyclotomic l = z3.lift(6);
  EXPECT_EQ(l.conductor(), 6);
  EXPECT_EQ(l, Cyclotomic::zeta_power(6, 2));
  EXPECT_EQ(l * l * l, Cyclotomic(1));
  EXPECT_FALSE(l.is_one());
  EXPECT_THROW(z3.lift(4), Error);
}

TEST(Cyclotomic, MismatchedConductorsAreRejected) {
  EXPECT_THROW(Cyclotomic::zeta_power(3, 1) * Cyclotomic::zeta_power(4, 1), Error);
  // rationals mix with every field
  EXPECT_EQ(Cyclotomic(ratio(1, 2)) * Cyclotomic::zeta_power(4, 2), Cyclotomic(ratio(-1, 2)));
}

TEST(Cyclotomic, ConductorCap) {
  set_conductor_cap(60);
  EXPECT_THROW(Cyclotomic::zeta_power(61, 1), Error);
  set_conductor_cap(360);
  EXPECT_NO_THROW(Cyclotomic::zeta_power(61, 1));
}

TEST(Cyclotomic, TextRoundTrip) {
  for (int N : {3, 5, 8, 12}) {
    for (int t = 0; t < 10; ++t) {
      const Cyclotomic x = random_cyclotomic(N);
      EXPECT_EQ(parse_cyclotomic(x.to_string()), x) << x.to_string();
    }
  }
  EXPECT_EQ(Cyclotomic(ratio(1, 2)).to_string(), "1/2");
  EXPECT_EQ((Cyclotomic(ratio(1, 2)) + ratio(1, 2) * Cyclotomic::zeta_power(3, 1)).to_string(), "1/2 + 1/2*z(3)^1");
}

TEST(Cyclotomic, FieldAxiomsRandomized) {
  for (int N = 1; N <= 60; N += 7) {
    for (int t = 0; t < 6; ++t) {
      const Cyclotomic a = random_cyclotomic(N), b = random_cyclotomic(N), c = random_cyclotomic(N);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
      }
      EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
      EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Cyclotomic, ArithmeticAgreesWithComplexNumbers) {
  for (int N : {5, 7, 9, 12, 15, 16}) {
    for (int t = 0; t < 10; ++t) {
      const Cyclotomic a = random_cyclotomic(N), b = random_cyclotomic(N);
      EXPECT_TRUE(close((a * b).approx(), a.approx() * b.approx(), 1e-8));
      EXPECT_TRUE(close((a + b).approx(), a.approx() + b.approx(), 1e-8));
      EXPECT_TRUE(close(a.conj().approx(), std::conj(a.approx()), 1e-8));
      if (!b.is_zero()) {
        EXPECT_TRUE(close((a / b).approx(), a.approx() / b.approx(), 1e-6));
      }
    }
  }
}

TEST(Cyclotomic, ApproxOfRootsOfUnity) {
  for (int N = 1; N <= 60; ++N)
    for (int k = 0; k < N; ++k)
      EXPECT_LE(std::abs(Cyclotomic::zeta_power(N, k).approx() - root(N, k)), 1e-12) << N << " " << k;
}

TEST(Cyclotomic, PowerBasisReduction) {
  // sum of all N-th roots of unity vanishes
  for (int N = 2; N <= 30; ++N) {
    Cyclotomic s = Cyclotomic::zero(N);
    for (int k = 0; k < N; ++k) s += Cyclotomic::zeta_power(N, k);
    EXPECT_TRUE(s.is_zero()) << N;
  }
  // primitive roots sum to the Moebius function
  const std::vector<std::pair<int, int>> mu{{1, 1}, {2, -1}, {3, -1}, {4, 0}, {6, 1}, {9, 0}, {10, 1}, {12, 0}, {30, -1}};
  for (const auto& [N, m] : mu) {
    Cyclotomic s = Cyclotomic::zero(N);
    for (int k = 0; k < N; ++k)
      if (std::gcd(k, N) == 1) s += Cyclotomic::zeta_power(N, k);
    EXPECT_EQ(s, Cyclotomic(m)) << N;
  }
}

TEST(Cyclotomic, CyclotomicPolynomialDegrees) {
  for (int N = 1; N <= 60; ++N) {
    int phi = 0;
    for (int k = 1; k <= N; ++k) phi += std::gcd(k, N) == 1;
    EXPECT_EQ(Cyclotomic::zero(N).degree(), phi);
  }
}

TEST(Rational, RatioIsCanonical) {
  EXPECT_EQ(ratio(3, 3), Rational(1));
  EXPECT_EQ(ratio(2, -4).get_str(), "-1/2");
  EXPECT_EQ(parse_rational("-6/4"), ratio(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}
