#pragma once

// Sparse multivariate polynomials over the cyclotomic field.

#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cstkit/cyclotomic.hpp"
#include "cstkit/matrix.hpp"
#include "cstkit/monomial.hpp"

namespace cstkit {

class Poly {
 public:
  // Descending graded-lex: begin() is the leading term.
  using TermMap = std::map<Monomial, Cyclotomic, std::greater<Monomial>>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {
    if (nvars > kMaxVars) fail(ErrorKind::ArityMismatch, "too many variables");
  }

  static Poly constant(std::size_t nvars, const Cyclotomic& c) {
    Poly p(nvars);
    p.add_term(Monomial{}, c);
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) fail(ErrorKind::ArityMismatch, "variable index out of range");
    Poly p(nvars);
    p.terms_.emplace(Monomial::variable(i), Cyclotomic(1));
    return p;
  }
  static Poly term(std::size_t nvars, const Monomial& m, const Cyclotomic& c = 1) {
    if (m.support_size() > nvars) fail(ErrorKind::ArityMismatch, "monomial uses too many variables");
    Poly p(nvars);
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; nullopt for the zero polynomial.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
  }
  std::optional<int> min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
  }
  bool is_homogeneous() const { return terms_.empty() || *degree() == *min_degree(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

  Cyclotomic coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyclotomic() : it->second;
  }
  Cyclotomic constant_term() const { return coefficient(Monomial{}); }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Cyclotomic& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int conductor() const {
    int n = 1;
    for (const auto& [m, c] : terms_) n = std::lcm(n, c.conductor());
    return n;
  }
  Poly lift(int m) const {
    Poly out(nvars_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, c.lift(m));
    return out;
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  Poly& operator+=(const Poly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_arity(b);
    Poly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  friend Poly operator*(const Cyclotomic& s, const Poly& p) {
    Poly out(p.nvars_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), m, s * c);
    return out;
  }
  friend Poly operator*(const Poly& p, const Cyclotomic& s) { return s * p; }

  /// Multiplication by a single term c*z^m.
  Poly times_term(const Monomial& m, const Cyclotomic& c) const {
    Poly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono * m, coeff * c);
    return out;
  }

  Poly pow(int k) const {
    if (k < 0) fail(ErrorKind::InvalidParameter, "negative power");
    Poly result = constant(nvars_, 1);
    Poly base = *this;
    while (k) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (!(m == it->first) || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

  Poly homogeneous_component(int k) const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
  }

  /// Terms of total degree <= k.
  Poly truncate(int k) const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() <= k) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
  }

  Poly derivative(std::size_t i) const {
    if (i >= nvars_) fail(ErrorKind::ArityMismatch, "derivative variable out of range");
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) {
      const int e = m[i];
      if (e == 0) continue;
      Monomial d = m;
      d.set(i, e - 1);
      out.add_term(d, Cyclotomic(e) * c);
    }
    return out;
  }

  /// Entrywise conjugate of the coefficients (the polynomial z -> conj(p(conj z))).
  Poly conj_coefficients() const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c.conj());
    return out;
  }

  /// Re-embeds into a ring with `nvars` variables, shifting variable i to i + offset.
  Poly embed(std::size_t nvars, std::size_t offset = 0) const {
    if (nvars_ + offset > nvars) fail(ErrorKind::ArityMismatch, "embedding does not fit");
    Poly out(nvars);
    for (const auto& [m, c] : terms_) {
      Monomial moved;
      for (std::size_t i = 0; i < nvars_; ++i) moved.set(i + offset, m[i]);
      out.terms_.emplace(moved, c);
    }
    return out;
  }

  std::complex<double> approx_eval(std::span<const std::complex<double>> point) const {
    std::complex<double> acc{0, 0};
    for (const auto& [m, c] : terms_) {
      std::complex<double> t = c.approx();
      for (std::size_t i = 0; i < nvars_; ++i)
        for (int e = 0; e < m[i]; ++e) t *= point[i];
      acc += t;
    }
    return acc;
  }

 private:
  void check_arity(const Poly& o) const {
    if (o.nvars_ != nvars_)
      fail(ErrorKind::ArityMismatch,
           "polynomials in " + std::to_string(nvars_) + " and " + std::to_string(o.nvars_) + " variables");
  }

  std::size_t nvars_;
  TermMap terms_;
};

/// Default variable names: `z` for one variable, otherwise `z1..zn`.
inline std::vector<std::string> variable_names(std::size_t nvars, const std::string& prefix = "z") {
  std::vector<std::string> names;
  if (nvars == 1) return {prefix};
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(prefix + std::to_string(i + 1));
  return names;
}

/// Names for a 2n-variable kernel ring: z-block then conjugate w-block.
inline std::vector<std::string> kernel_variable_names(std::size_t n, const std::string& a = "z",
                                                      const std::string& b = "w") {
  auto names = variable_names(n, a);
  auto second = variable_names(n, b);
  names.insert(names.end(), second.begin(), second.end());
  return names;
}

inline std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

/// Canonical rendering: terms in descending graded-lex order.
inline std::string to_string(const Poly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const std::string mono = monomial_string(m, names);
    std::string coeff;
    bool neg = false;
    if (c.is_rational()) {
      Rational q = c.rational_part();
      neg = q < 0;
      if (neg) q = -q;
      if (q != 1 || mono.empty()) coeff = q.get_str();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

inline std::string to_string(const Poly& p) { return to_string(p, variable_names(p.nvars())); }

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

/// q(subs_1, ..., subs_m).
inline Poly poly_compose(const Poly& q, std::span<const Poly> subs) {
  if (subs.size() != q.nvars())
    fail(ErrorKind::ArityMismatch, "composition needs " + std::to_string(q.nvars()) + " substitutions");
  const std::size_t n = subs.empty() ? 0 : subs[0].nvars();
  for (const auto& s : subs)
    if (s.nvars() != n) fail(ErrorKind::ArityMismatch, "substitutions live in different rings");
  std::vector<std::vector<Poly>> powers(subs.size());
  auto power = [&](std::size_t i, int e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(n, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * subs[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Poly out(n);
  for (const auto& [m, c] : q.terms()) {
    Poly t = Poly::constant(n, c);
    for (std::size_t i = 0; i < q.nvars(); ++i)
      if (m[i]) t = t * power(i, m[i]);
    out += t;
  }
  return out;
}

inline Poly poly_compose(const Poly& q, std::initializer_list<Poly> subs) {
  return poly_compose(q, std::span<const Poly>(subs.begin(), subs.size()));
}

/// Exact quotient f / g by leading-term reduction; throws NotDivisible when a remainder appears.
inline Poly poly_exact_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (f.nvars() != g.nvars()) fail(ErrorKind::ArityMismatch, "division across rings");
  const Monomial& lm = g.leading_monomial();
  const Cyclotomic lc_inv = g.leading_coefficient().inverse();
  Poly r = f;
  Poly q(f.nvars());
  while (!r.is_zero()) {
    const Monomial& rm = r.leading_monomial();
    if (!lm.divides(rm)) fail(ErrorKind::NotDivisible, "remainder term " + to_string(Poly::term(f.nvars(), rm)));
    const Monomial t = lm.quotient_of(rm);
    const Cyclotomic c = r.leading_coefficient() * lc_inv;
    q.add_term(t, c);
    r -= g.times_term(t, c);
  }
  return q;
}

/// f(M z): each variable z_k is replaced by the linear form sum_j M[k][j] z_j.
/// Coefficients and entries are lifted to the lcm of the two conductors.
inline Poly substitute_linear(const Poly& f_in, const CycMatrix& m_in) {
  const std::size_t n = f_in.nvars();
  if (m_in.rows() != n || m_in.cols() != n) fail(ErrorKind::ArityMismatch, "substitution matrix shape mismatch");
  const int N = std::lcm(f_in.conductor(), m_in.conductor());
  const Poly f = f_in.conductor() == N || f_in.conductor() == 1 ? f_in : f_in.lift(N);
  const CycMatrix m = m_in.conductor() == N || m_in.conductor() == 1 ? m_in : m_in.lift(N);
  Poly out(n);
  if (m.is_monomial()) {
    std::vector<std::size_t> target(n);
    std::vector<Cyclotomic> scale(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!m(k, j).is_zero()) {
          target[k] = j;
          scale[k] = m(k, j);
        }
    std::vector<std::vector<Cyclotomic>> scale_pows(n);
    for (const auto& [mono, c] : f.terms()) {
      Monomial image;
      Cyclotomic coeff = c;
      for (std::size_t k = 0; k < n; ++k) {
        const int e = mono[k];
        if (!e) continue;
        image.set(target[k], e);
        auto& sp = scale_pows[k];
        if (sp.empty()) sp.push_back(1);
        while (static_cast<int>(sp.size()) <= e) sp.push_back(sp.back() * scale[k]);
        coeff *= sp[static_cast<std::size_t>(e)];
      }
      out.add_term(image, coeff);
    }
    return out;
  }
  std::vector<Poly> forms;
  for (std::size_t k = 0; k < n; ++k) {
    Poly l(n);
    for (std::size_t j = 0; j < n; ++j) l.add_term(Monomial::variable(j), m(k, j));
    forms.push_back(std::move(l));
  }
  return poly_compose(f.embed(n), forms);
}

/// The group action g.f = f o g^{-1}.
inline Poly poly_act(const CycMatrix& g, const Poly& f) {
  if (!g.is_square() || g.rows() != f.nvars()) fail(ErrorKind::ArityMismatch, "matrix does not act on this ring");
  return substitute_linear(f, g.inverse());
}

}  // namespace cstkit
