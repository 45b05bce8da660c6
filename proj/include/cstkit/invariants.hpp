#pragma once

// Basic invariants, Poincare bookkeeping, module bases over the invariant ring,
// and rewriting invariants as polynomials in theta.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cstkit/catalog.hpp"
#include "cstkit/poly_matrix.hpp"
#include "cstkit/span.hpp"

namespace cstkit {

struct Hsop {
  std::vector<Poly> thetas;
  std::vector<int> degrees;

  std::size_t nvars() const { return thetas.empty() ? 0 : thetas[0].nvars(); }
};

struct ModuleBasis {
  std::vector<Poly> polys;  // p_1 = 1 first
  std::vector<int> degrees;

  std::size_t size() const { return polys.size(); }
};

/// q(u_1..u_n) with f = q o theta.
struct InvariantExpression {
  Poly q;
};

namespace detail {

inline Poly elementary_symmetric(std::size_t n, std::size_t k, std::size_t offset, std::size_t nvars) {
  Poly out(nvars);
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - static_cast<long>(k), pick.end(), 1);
  do {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) m.set(i + offset, 1);
    out.add_term(m, 1);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

inline Hsop hsop_for(const GroupSpec& s, std::size_t nvars, std::size_t offset) {
  using F = GroupSpec::Family;
  Hsop h;
  auto power = [&](std::size_t var, int e) { return Poly::term(nvars, Monomial::variable(var + offset, e)); };
  switch (s.family) {
    case F::Cyclic:
      h.thetas.push_back(power(0, s.params[0]));
      h.degrees.push_back(s.params[0]);
      break;
    case F::ProductCyclic:
      for (std::size_t i = 0; i < s.params.size(); ++i) {
        h.thetas.push_back(power(i, s.params[i]));
        h.degrees.push_back(s.params[i]);
      }
      break;
    case F::Symmetric: {
      const auto n = static_cast<std::size_t>(s.params[0]);
      for (std::size_t k = 1; k <= n; ++k) {
        h.thetas.push_back(elementary_symmetric(n, k, offset, nvars));
        h.degrees.push_back(static_cast<int>(k));
      }
      break;
    }
    case F::Dihedral: {
      const int k = s.params[0];
      h.thetas.push_back(power(0, 1) * power(1, 1));
      h.thetas.push_back(power(0, k) + power(1, k));
      h.degrees = {2, k};
      break;
    }
    case F::DirectProduct: {
      const Hsop a = hsop_for(s.factors[0], nvars, offset);
      const std::size_t na = a.thetas.size();
      const Hsop b = hsop_for(s.factors[1], nvars, offset + na);
      h = a;
      h.thetas.insert(h.thetas.end(), b.thetas.begin(), b.thetas.end());
      h.degrees.insert(h.degrees.end(), b.degrees.begin(), b.degrees.end());
      break;
    }
    case F::Generic:
      fail(ErrorKind::Unsupported, "no canonical basic invariants for a generic group");
  }
  return h;
}

inline bool is_invariant_under(const Poly& f, const PseudoreflectionGroup& G) {
  for (auto g : G.generators())
    if (!(G.act(g, f) == f)) return false;
  return true;
}

}  // namespace detail

inline bool inv_is_invariant(const Poly& f, const PseudoreflectionGroup& G) { return detail::is_invariant_under(f, G); }

/// Coefficients of prod_i (1 + t + ... + t^{d_i - 1}); entry e counts basis elements of degree e.
inline std::vector<int> poincare_coefficients(const std::vector<int>& degrees) {
  std::vector<int> c{1};
  for (int d : degrees) {
    std::vector<int> next(c.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int k = 0; k < d; ++k) next[i + static_cast<std::size_t>(k)] += c[i];
    c = std::move(next);
  }
  return c;
}

inline std::vector<int> inv_basis_degrees(const Hsop& h) {
  const auto c = poincare_coefficients(h.degrees);
  std::vector<int> out;
  for (std::size_t e = 0; e < c.size(); ++e) out.insert(out.end(), static_cast<std::size_t>(c[e]), static_cast<int>(e));
  return out;
}

/// "1 + 2*t + 2*t^2 + t^3"
inline std::string poincare_string(const std::vector<int>& degrees) {
  const auto c = poincare_coefficients(degrees);
  std::string s;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    if (!s.empty()) s += " + ";
    std::string t = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
    if (t.empty()) s += std::to_string(c[e]);
    else s += (c[e] == 1 ? "" : std::to_string(c[e]) + "*") + t;
  }
  return s;
}

/// The canonical basic invariants; the invariance, degree product, degree sum and
/// jacobian conditions are checked before returning.
inline Hsop inv_hsop(const PseudoreflectionGroup& G) {
  if (!G.reflection_generated()) fail(ErrorKind::NotReflectionGroup, G.name() + " is not generated by pseudoreflections");
  if (!G.spec()) fail(ErrorKind::Unsupported, "no canonical basic invariants for " + G.name());
  Hsop h = detail::hsop_for(*G.spec(), G.dimension(), 0);
  long prod = 1;
  long sum = 0;
  for (int d : h.degrees) {
    prod *= d;
    sum += d - 1;
  }
  for (const auto& t : h.thetas)
    if (!detail::is_invariant_under(t, G)) fail(ErrorKind::InternalInconsistency, "theta " + to_string(t) + " is not invariant");
  if (prod != static_cast<long>(G.order()))
    fail(ErrorKind::InternalInconsistency, "degree product differs from the group order");
  if (sum != static_cast<long>(G.pseudoreflection_count()))
    fail(ErrorKind::InternalInconsistency, "degree sum differs from the pseudoreflection count");
  if (poly_jacobian_det(h.thetas).is_zero()) fail(ErrorKind::InternalInconsistency, "basic invariants are dependent");
  return h;
}

namespace detail {

inline ModuleBasis sorted_basis(std::vector<Poly> ps) {
  std::sort(ps.begin(), ps.end(), [](const Poly& a, const Poly& b) { return a.leading_monomial() < b.leading_monomial(); });
  ModuleBasis b;
  for (auto& p : ps) {
    b.degrees.push_back(*p.degree());
    b.polys.push_back(std::move(p));
  }
  return b;
}

// Monomials selected greedily in ascending graded-lex order outside the ideal (theta).
inline ModuleBasis coinvariant_basis(const Hsop& h) {
  const std::size_t n = h.nvars();
  const auto counts = poincare_coefficients(h.degrees);
  std::vector<Poly> picked;
  for (int delta = 0; delta < static_cast<int>(counts.size()); ++delta) {
    EchelonSpan span(n);
    for (std::size_t i = 0; i < h.thetas.size(); ++i) {
      const int rest = delta - h.degrees[i];
      if (rest < 0) continue;
      for (const auto& m : monomials_of_degree(n, rest)) span.add(h.thetas[i].times_term(m, 1));
    }
    int found = 0;
    for (const auto& m : monomials_of_degree(n, delta)) {
      Poly p = Poly::term(n, m);
      if (span.add(p)) {
        picked.push_back(std::move(p));
        ++found;
      }
    }
    if (found != counts[static_cast<std::size_t>(delta)])
      fail(ErrorKind::InternalInconsistency, "coinvariant count " + std::to_string(found) + " in degree " +
                                                 std::to_string(delta) + ", expected " +
                                                 std::to_string(counts[static_cast<std::size_t>(delta)]));
  }
  return sorted_basis(std::move(picked));
}

inline std::vector<Poly> closed_form_basis(const GroupSpec& s, std::size_t nvars, std::size_t offset) {
  using F = GroupSpec::Family;
  std::vector<Poly> out;
  auto mono = [&](const std::vector<int>& e) {
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m.set(i + offset, e[i]);
    return Poly::term(nvars, m);
  };
  // all exponent vectors with 0 <= e_i < bound_i
  auto box = [&](const std::vector<int>& bound) {
    std::vector<int> e(bound.size(), 0);
    while (true) {
      out.push_back(mono(e));
      std::size_t i = 0;
      while (i < e.size() && ++e[i] == bound[i]) e[i++] = 0;
      if (i == e.size()) break;
    }
  };
  switch (s.family) {
    case F::Cyclic: box({s.params[0]}); break;
    case F::ProductCyclic: box(s.params); break;
    case F::Symmetric: {
      // z_1^{k_1} ... z_{n-1}^{k_{n-1}}, 0 <= k_i <= i
      std::vector<int> bound;
      for (int i = 1; i < s.params[0]; ++i) bound.push_back(i + 1);
      if (bound.empty()) out.push_back(Poly::constant(nvars, 1));
      else box(bound);
      break;
    }
    case F::DirectProduct: {
      const std::size_t na = static_cast<std::size_t>(hsop_for(s.factors[0], nvars, offset).thetas.size());
      const auto a = closed_form_basis(s.factors[0], nvars, offset);
      const auto b = closed_form_basis(s.factors[1], nvars, offset + na);
      if (a.empty() || b.empty()) return {};
      for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
      break;
    }
    case F::Dihedral:
    case F::Generic:
      return {};
  }
  return out;
}

}  // namespace detail

/// Homogeneous basis of C[z] over C[z]^G, p_1 = 1, sorted by ascending graded-lex.
/// Closed forms for cyclic, product and symmetric families (and products of those);
/// the coinvariant algorithm otherwise.
inline ModuleBasis inv_module_basis(const PseudoreflectionGroup& G, const Hsop& h) {
  ModuleBasis b;
  std::vector<Poly> closed;
  if (G.spec()) closed = detail::closed_form_basis(*G.spec(), G.dimension(), 0);
  if (!closed.empty()) b = detail::sorted_basis(std::move(closed));
  else b = detail::coinvariant_basis(h);
  std::vector<int> got = b.degrees;
  std::sort(got.begin(), got.end());
  if (got != inv_basis_degrees(h)) fail(ErrorKind::InternalInconsistency, "module basis degrees disagree with the Poincare series");
  if (b.size() != G.order()) fail(ErrorKind::InternalInconsistency, "module basis size differs from |G|");
  return b;
}

/// Exponent vectors K with sum K_i d_i = delta.
inline std::vector<std::vector<int>> weighted_exponents(const std::vector<int>& d, int delta) {
  std::vector<std::vector<int>> out;
  std::vector<int> k(d.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == d.size()) {
      if (left == 0) out.push_back(k);
      return;
    }
    for (int v = 0; v * d[i] <= left; ++v) {
      k[i] = v;
      self(self, i + 1, left - v * d[i]);
    }
    k[i] = 0;
  };
  rec(rec, 0, delta);
  return out;
}

namespace detail {

/// Leading-term subduction. Complete when the leading monomials of theta are multiplicatively
/// independent: then distinct theta^K have distinct leading monomials and nothing cancels.
/// Returns nullopt when those monomials are dependent and the caller must solve instead.
inline std::optional<Poly> subduct(const Poly& f, const Hsop& h, int N) {
  const std::size_t n = h.nvars();
  const std::size_t k = h.thetas.size();
  CycMatrix lead(n, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t v = 0; v < n; ++v) lead(v, i) = Cyclotomic(Rational(h.thetas[i].leading_monomial()[v]));
  if (lead.rank() != k) return std::nullopt;
  std::map<std::vector<int>, Poly> cache;
  Poly r = f.lift(N);
  Poly q(k);
  while (!r.is_zero()) {
    const Monomial& lm = r.leading_monomial();
    std::vector<Cyclotomic> rhs;
    for (std::size_t v = 0; v < n; ++v) rhs.emplace_back(Rational(lm[v]));
    const auto x = solve(lead, rhs);
    std::vector<int> K(k, 0);
    bool ok = x.has_value();
    for (std::size_t i = 0; ok && i < k; ++i) {
      ok = (*x)[i].is_rational() && (*x)[i].rational_part().get_den() == 1 && (*x)[i].rational_part() >= 0;
      if (ok) K[i] = static_cast<int>((*x)[i].rational_part().get_num().get_si());
    }
    if (!ok) fail(ErrorKind::NotInvariant, "leading term " + to_string(Poly::term(n, lm)) + " is not a leading term of C[theta]");
    auto it = cache.find(K);
    if (it == cache.end()) {
      Poly t = Poly::constant(n, 1);
      for (std::size_t i = 0; i < k; ++i)
        if (K[i]) t = t * h.thetas[i].pow(K[i]);
      it = cache.emplace(K, t.lift(std::lcm(N, t.conductor()))).first;
    }
    const Cyclotomic c = r.leading_coefficient() * it->second.leading_coefficient().inverse();
    q.add_term(Monomial(std::span<const int>(K)), c);
    r -= c * it->second;
  }
  return q;
}

}  // namespace detail

/// Solves f = q o theta, one weighted degree at a time. NotInvariant when f is not a
/// polynomial in theta (for a genuine hsop this is exactly failure of invariance).
inline InvariantExpression inv_rewrite(const Poly& f, const Hsop& h) {
  const std::size_t n = h.nvars();
  const std::size_t k = h.thetas.size();
  if (f.nvars() != n) fail(ErrorKind::ArityMismatch, "polynomial ring does not match the basic invariants");
  for (int d : h.degrees)
    if (d < 1) fail(ErrorKind::InvalidParameter, "basic invariants must have positive degree");
  std::vector<std::vector<Poly>> powers(k);
  auto theta_pow = [&](std::size_t i, int e) -> const Poly& {
    auto& c = powers[i];
    if (c.empty()) c.push_back(Poly::constant(n, 1));
    while (static_cast<int>(c.size()) <= e) c.push_back(c.back() * h.thetas[i]);
    return c[static_cast<std::size_t>(e)];
  };
  Poly q(k);
  if (f.is_zero()) return {q};
  int N = f.conductor();
  for (const auto& t : h.thetas) N = std::lcm(N, t.conductor());
  if (auto sub = detail::subduct(f, h, N)) return {std::move(*sub)};
  for (int delta = *f.min_degree(); delta <= *f.degree(); ++delta) {
    const Poly fd = f.homogeneous_component(delta);
    if (fd.is_zero()) continue;
    const auto ks = weighted_exponents(h.degrees, delta);
    std::vector<Poly> cols;
    for (const auto& e : ks) {
      Poly t = Poly::constant(n, 1);
      for (std::size_t i = 0; i < k; ++i)
        if (e[i]) t = t * theta_pow(i, e[i]);
      cols.push_back(std::move(t));
    }
    std::map<Monomial, std::size_t, std::greater<>> rows;
    for (const auto& [m, c] : fd.terms()) rows.emplace(m, 0);
    for (const auto& t : cols)
      for (const auto& [m, c] : t.terms()) rows.emplace(m, 0);
    std::size_t r = 0;
    for (auto& [m, idx] : rows) idx = r++;
    CycMatrix a(rows.size(), cols.size());
    std::vector<Cyclotomic> rhs(rows.size(), Cyclotomic::zero(N));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [m, c] : cols[j].terms()) a(rows.at(m), j) = c.lift(N);
    for (const auto& [m, c] : fd.terms()) rhs[rows.at(m)] = c.lift(N);
    auto x = solve(a, rhs);
    if (!x) fail(ErrorKind::NotInvariant, "degree-" + std::to_string(delta) + " part is not a polynomial in theta");
    for (std::size_t j = 0; j < ks.size(); ++j) q.add_term(Monomial(std::span<const int>(ks[j])), (*x)[j]);
  }
  return {q};
}

/// Checks invariance under G first, then rewrites.
inline InvariantExpression inv_rewrite(const Poly& f, const Hsop& h, const PseudoreflectionGroup& G) {
  if (!detail::is_invariant_under(f, G)) fail(ErrorKind::NotInvariant, to_string(f) + " is not invariant under " + G.name());
  return inv_rewrite(f, h);
}

}  // namespace cstkit
