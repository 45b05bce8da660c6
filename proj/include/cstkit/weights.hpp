#pragma once

// Diagonal kernels K(z, w) = sum_I a_I z^I conj(w)^I and the inner products they induce.

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cstkit/poly.hpp"
#include "cstkit/rational.hpp"

namespace cstkit {

class DiagonalKernel {
 public:
  using Rule = std::function<Rational(const Monomial&)>;

  DiagonalKernel(std::size_t nvars, Rule rule, std::string name)
      : nvars_(nvars), rule_(std::move(rule)), name_(std::move(name)) {}

  std::size_t nvars() const { return nvars_; }
  const std::string& name() const { return name_; }
  Rational coefficient(const Monomial& m) const { return rule_(m); }

  /// sum_{|I| <= D} a_I z^I wbar^I in 2n variables (z block, then wbar block).
  Poly truncation(int D) const {
    Poly out(2 * nvars_);
    for (const auto& m : monomials_up_to(nvars_, D)) {
      Monomial both = m;
      for (std::size_t i = 0; i < nvars_; ++i) both.set(nvars_ + i, m[i]);
      out.add_term(both, coefficient(m));
    }
    return out;
  }

  /// <f, g> = sum_I f_I conj(g_I) / a_I
  Cyclotomic inner(const Poly& f, const Poly& g) const {
    Cyclotomic s;
    auto it = g.terms().begin();
    for (const auto& [m, c] : f.terms()) {
      while (it != g.terms().end() && m < it->first) ++it;
      if (it == g.terms().end()) break;
      if (it->first == m) s += c * it->second.conj() * Cyclotomic(Rational(1 / weight(m)));
    }
    return s;
  }
  Cyclotomic norm2(const Poly& f) const { return inner(f, f); }

  Rational weight(const Monomial& m) const {
    Rational a = coefficient(m);
    if (a <= 0) fail(ErrorKind::InvalidParameter, "kernel " + name_ + " has a non-positive coefficient");
    return a;
  }

 private:
  std::size_t nvars_;
  Rule rule_;
  std::string name_;
};

inline DiagonalKernel ker_hardy() {
  return {1, [](const Monomial&) { return Rational(1); }, "hardy"};
}

/// a_k = (lambda)_k / k!
inline DiagonalKernel ker_bergman(const Rational& lambda) {
  if (lambda <= 0) fail(ErrorKind::InvalidParameter, "bergman weight must be positive");
  return {1,
          [lambda](const Monomial& m) {
            const unsigned k = static_cast<unsigned>(m.degree());
            return Rational(rising_factorial(lambda, k) / Rational(factorial(k)));
          },
          "bergman:" + lambda.get_str()};
}

/// a_k = 1 / (k + 1)
inline DiagonalKernel ker_dirichlet() {
  return {1, [](const Monomial& m) { return ratio(1, m.degree() + 1); }, "dirichlet"};
}

/// Product of one-variable kernels, one per coordinate.
inline DiagonalKernel ker_polydisc(const std::vector<DiagonalKernel>& factors) {
  if (factors.empty()) fail(ErrorKind::InvalidParameter, "polydisc needs at least one factor");
  std::string name = "polydisc(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].nvars() != 1) fail(ErrorKind::InvalidParameter, "polydisc factors must be one-variable kernels");
    name += (i ? "," : "") + factors[i].name();
  }
  auto fs = std::make_shared<std::vector<DiagonalKernel>>(factors);
  return {factors.size(),
          [fs](const Monomial& m) {
            Rational a = 1;
            for (std::size_t i = 0; i < fs->size(); ++i) a *= (*fs)[i].coefficient(Monomial::variable(0, m[i]));
            return a;
          },
          name + ")"};
}

/// sum_k (lambda)_k / k! <z, w>^k, so a_I = (lambda)_{|I|} / I!.
inline DiagonalKernel ker_ball(const Rational& lambda, std::size_t n) {
  if (lambda <= 0) fail(ErrorKind::InvalidParameter, "ball weight must be positive");
  return {n,
          [lambda, n](const Monomial& m) {
            Rational a = rising_factorial(lambda, static_cast<unsigned>(m.degree()));
            for (std::size_t i = 0; i < n; ++i) a /= Rational(factorial(m[i]));
            return a;
          },
          "ball:" + lambda.get_str()};
}

inline DiagonalKernel ker_custom(std::size_t nvars, DiagonalKernel::Rule rule, std::string name = "custom") {
  return {nvars, std::move(rule), std::move(name)};
}

/// `hardy`, `bergman:L`, `dirichlet` (extended to the n-fold polydisc when n > 1),
/// `polydisc:k1,k2,...`, `ball:L`.
inline DiagonalKernel parse_kernel_spec(std::string_view text, std::size_t n) {
  auto one = [](std::string_view s) -> DiagonalKernel {
    if (s == "hardy") return ker_hardy();
    if (s == "dirichlet") return ker_dirichlet();
    if (s.starts_with("bergman:")) return ker_bergman(parse_rational(s.substr(8)));
    if (s == "bergman") return ker_bergman(2);
    fail(ErrorKind::ParseError, "unknown kernel '" + std::string(s) + "'");
  };
  if (text.starts_with("ball:")) return ker_ball(parse_rational(text.substr(5)), n);
  std::vector<DiagonalKernel> parts;
  if (text.starts_with("polydisc:")) {
    std::string_view rest = text.substr(9);
    while (true) {
      const auto comma = rest.find(',');
      parts.push_back(one(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (parts.size() != n)
      fail(ErrorKind::ArityMismatch, "polydisc has " + std::to_string(parts.size()) + " factors, group acts on C^" + std::to_string(n));
    return ker_polydisc(parts);
  }
  DiagonalKernel k = one(text);
  if (n == 1) return k;
  parts.assign(n, k);
  return ker_polydisc(parts);
}

}  // namespace cstkit
