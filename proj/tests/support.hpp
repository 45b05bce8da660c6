#pragma once

// Shared helpers for the unit suites: seeded generators and evaluation oracles that
// only read coefficients, never call library arithmetic on polynomials.

#include <complex>
#include <random>
#include <vector>

#include "cstkit/cstkit.hpp"

namespace testing_support {

using namespace cstkit;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20260419);
  return r;
}

inline Rational small_rational(std::mt19937_64& r = rng()) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  return ratio(num(r), den(r));
}

/// Random element of Q(zeta_N): rational coefficients on the power basis.
inline Cyclotomic random_cyclotomic(int N, std::mt19937_64& r = rng()) {
  const int deg = Cyclotomic::zero(N).degree();
  std::vector<Rational> c;
  for (int i = 0; i < deg; ++i) c.push_back(small_rational(r));
  return Cyclotomic::from_coefficients(N, c);
}

inline Poly random_poly(std::size_t nvars, int D, int terms, int N = 1, std::mt19937_64& r = rng()) {
  const auto monos = monomials_up_to(nvars, D);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  Poly p(nvars);
  for (int t = 0; t < terms; ++t) p.add_term(monos[pick(r)], N == 1 ? Cyclotomic(small_rational(r)) : random_cyclotomic(N, r));
  return p;
}

/// sum_I c_I x^I, computed with Cyclotomic arithmetic on the coefficients only.
inline Cyclotomic eval_exact(const Poly& p, const std::vector<Cyclotomic>& x) {
  Cyclotomic s;
  for (const auto& [m, c] : p.terms()) {
    Cyclotomic t = c;
    for (std::size_t i = 0; i < p.nvars(); ++i)
      for (int e = 0; e < m[i]; ++e) t = t * x[i];
    s += t;
  }
  return s;
}

inline std::vector<Cyclotomic> random_point(std::size_t n, std::mt19937_64& r = rng()) {
  std::vector<Cyclotomic> x;
  for (std::size_t i = 0; i < n; ++i) x.emplace_back(small_rational(r));
  return x;
}

inline std::complex<double> root(int N, int k) { return std::polar(1.0, 2.0 * std::numbers::pi * k / N); }

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

inline Poly P(std::string_view text, std::size_t n) { return parse_poly(text, n); }

inline std::shared_ptr<const PseudoreflectionGroup> builtin(std::string_view spec) { return group_builtin(spec); }

}  // namespace testing_support
