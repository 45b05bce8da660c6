#pragma once

// Isotypic projections P_rho, P_rho^{ij}, their operator algebra on C[z]_{<=D},
// adjoints for kernel-weighted inner products, and module-rank counts.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cstkit/invariants.hpp"
#include "cstkit/report.hpp"
#include "cstkit/span.hpp"
#include "cstkit/weights.hpp"

namespace cstkit {

struct ProjectionSpec {
  std::size_t irrep = 0;
  std::optional<std::pair<int, int>> fine;  // (i, j), 1-based
};

namespace detail {

inline Cyclotomic projection_weight(const PseudoreflectionGroup& G, const ProjectionSpec& s, std::size_t sigma) {
  const Irrep& r = G.irreps().at(s.irrep);
  const std::size_t inv = G.inverse(sigma);
  if (!s.fine) return r.character[inv];
  const auto [i, j] = *s.fine;
  if (!r.has_model()) fail(ErrorKind::NoMatrixModel, "irrep " + r.label + " has no matrix model");
  if (i < 1 || j < 1 || i > r.degree || j > r.degree)
    fail(ErrorKind::InvalidParameter, "fine index out of range for " + r.label);
  return (*r.model)[inv](static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1));
}

}  // namespace detail

inline std::string spec_label(const PseudoreflectionGroup& G, const ProjectionSpec& s) {
  std::string l = "P[" + G.irreps().at(s.irrep).label;
  if (s.fine) l += "," + std::to_string(s.fine->first) + std::to_string(s.fine->second);
  return l + "]";
}

/// (deg rho / |G|) sum_sigma w(sigma^{-1}) sigma . f with w = chi_rho or pi_rho^{ji}.
inline Poly iso_project(const Poly& f, const ProjectionSpec& s, const PseudoreflectionGroup& G) {
  if (f.nvars() != G.dimension()) fail(ErrorKind::ArityMismatch, "polynomial ring does not match the group");
  const Irrep& r = G.irreps().at(s.irrep);
  Poly out(f.nvars());
  for (std::size_t sigma = 0; sigma < G.order(); ++sigma) {
    const Cyclotomic w = detail::projection_weight(G, s, sigma);
    if (w.is_zero()) continue;
    out += w * G.act(sigma, f);
  }
  return Cyclotomic(ratio(r.degree, static_cast<long>(G.order()))) * out;
}

/// Components P_rho f for every irrep, in catalog order.
inline std::vector<std::pair<std::string, Poly>> iso_decompose(const Poly& f, const PseudoreflectionGroup& G) {
  std::vector<std::pair<std::string, Poly>> out;
  for (std::size_t k = 0; k < G.irreps().size(); ++k) out.emplace_back(G.irreps()[k].label, iso_project(f, {k, std::nullopt}, G));
  return out;
}

/// Linear maps on C[z]_{<=D}, stored as images of the monomial basis.
class MonomialOperator {
 public:
  MonomialOperator() = default;
  MonomialOperator(std::size_t nvars, int D) : nvars_(nvars), D_(D), basis_(monomials_up_to(nvars, D)) {
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
    images_.assign(basis_.size(), Poly(nvars));
  }

  static MonomialOperator identity(std::size_t nvars, int D) {
    MonomialOperator op(nvars, D);
    for (std::size_t k = 0; k < op.basis_.size(); ++k) op.images_[k] = Poly::term(nvars, op.basis_[k]);
    return op;
  }
  static MonomialOperator zero(std::size_t nvars, int D) { return MonomialOperator(nvars, D); }

  std::size_t nvars() const { return nvars_; }
  int degree() const { return D_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  const Poly& image(std::size_t k) const { return images_[k]; }
  Poly& image(std::size_t k) { return images_[k]; }
  std::optional<std::size_t> index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Poly apply(const Poly& f) const {
    Poly out(nvars_);
    for (const auto& [m, c] : f.terms()) {
      auto k = index(m);
      if (!k) fail(ErrorKind::InvalidParameter, "operator applied above its truncation degree");
      if (!images_[*k].is_zero()) out += c * images_[*k];
    }
    return out;
  }

  friend MonomialOperator operator*(const MonomialOperator& a, const MonomialOperator& b) {
    MonomialOperator out(a.nvars_, a.D_);
    for (std::size_t k = 0; k < b.images_.size(); ++k) out.images_[k] = a.apply(b.images_[k]);
    return out;
  }
  friend MonomialOperator operator+(MonomialOperator a, const MonomialOperator& b) {
    for (std::size_t k = 0; k < a.images_.size(); ++k) a.images_[k] += b.images_[k];
    return a;
  }
  friend bool operator==(const MonomialOperator& a, const MonomialOperator& b) {
    return a.D_ == b.D_ && a.nvars_ == b.nvars_ && a.images_ == b.images_;
  }
  bool is_zero() const {
    for (const auto& p : images_)
      if (!p.is_zero()) return false;
    return true;
  }

  /// Adjoint for <z^I, z^J> = delta_IJ / a_I: (A*)_{IJ} = a_I conj(A_{JI}) / a_J.
  MonomialOperator adjoint(const DiagonalKernel& K) const {
    MonomialOperator out(nvars_, D_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Rational ai = K.weight(basis_[i]);
      for (const auto& [mj, c] : images_[i].terms()) {
        const std::size_t j = index_.at(mj);
        out.images_[j].add_term(basis_[i], c.conj() * Cyclotomic(Rational(ai / K.weight(mj))));
      }
    }
    return out;
  }

 private:
  std::size_t nvars_ = 0;
  int D_ = 0;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<Poly> images_;
};

/// sigma . z^I for every sigma and every monomial of degree <= D.
class ActionTable {
 public:
  ActionTable(const PseudoreflectionGroup& G, int D) : G_(&G), basis_(monomials_up_to(G.dimension(), D)), D_(D) {
    images_.resize(G.order());
    for (std::size_t s = 0; s < G.order(); ++s)
      for (const auto& m : basis_) images_[s].push_back(G.act(s, Poly::term(G.dimension(), m)));
  }

  MonomialOperator projection(const ProjectionSpec& spec) const {
    const Irrep& r = G_->irreps().at(spec.irrep);
    const Cyclotomic scale(ratio(r.degree, static_cast<long>(G_->order())));
    std::vector<Cyclotomic> w;
    for (std::size_t s = 0; s < G_->order(); ++s) w.push_back(scale * detail::projection_weight(*G_, spec, s));
    MonomialOperator op(G_->dimension(), D_);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      Poly img(G_->dimension());
      for (std::size_t s = 0; s < G_->order(); ++s)
        if (!w[s].is_zero()) img += w[s] * images_[s][k];
      op.image(k) = std::move(img);
    }
    return op;
  }

 private:
  const PseudoreflectionGroup* G_;
  std::vector<Monomial> basis_;
  int D_;
  std::vector<std::vector<Poly>> images_;
};

/// Every character projection, plus every fine projection when all irreps carry models.
inline std::vector<ProjectionSpec> all_specs(const PseudoreflectionGroup& G, bool include_fine = true) {
  std::vector<ProjectionSpec> out;
  for (std::size_t k = 0; k < G.irreps().size(); ++k) {
    out.push_back({k, std::nullopt});
    const Irrep& r = G.irreps()[k];
    if (!include_fine || !r.has_model()) continue;
    for (int i = 1; i <= r.degree; ++i)
      for (int j = 1; j <= r.degree; ++j) out.push_back({k, std::make_pair(i, j)});
  }
  return out;
}

inline bool all_models(const PseudoreflectionGroup& G) {
  for (const auto& r : G.irreps())
    if (!r.has_model()) return false;
  return true;
}

/// Composition relations of the projections as exact identities on C[z]_{<=D}.
inline Report iso_verify_algebra(const PseudoreflectionGroup& G, int D) {
  Report rep{"isotypic-algebra", {}, {}};
  const std::size_t n = G.dimension();
  const ActionTable table(G, D);
  const auto& irreps = G.irreps();
  const auto id = MonomialOperator::identity(n, D);
  const auto zero = MonomialOperator::zero(n, D);

  std::vector<MonomialOperator> coarse;
  for (std::size_t k = 0; k < irreps.size(); ++k) coarse.push_back(table.projection({k, std::nullopt}));

  auto& orth = rep.add("P_rho P_rho' = delta P_rho");
  for (std::size_t a = 0; a < coarse.size(); ++a)
    for (std::size_t b = 0; b < coarse.size(); ++b)
      record(orth, coarse[a] * coarse[b] == (a == b ? coarse[a] : zero), irreps[a].label + " x " + irreps[b].label);
  auto& sum = rep.add("sum_rho P_rho = id");
  MonomialOperator total = zero;
  for (const auto& p : coarse) total = total + p;
  record(sum, total == id, "sum differs from identity");

  // fine projections, for irreps with models
  std::vector<std::pair<ProjectionSpec, MonomialOperator>> fine;
  for (std::size_t k = 0; k < irreps.size(); ++k) {
    if (!irreps[k].has_model()) continue;
    for (int i = 1; i <= irreps[k].degree; ++i)
      for (int j = 1; j <= irreps[k].degree; ++j) {
        ProjectionSpec s{k, std::make_pair(i, j)};
        fine.emplace_back(s, table.projection(s));
      }
  }
  if (fine.empty()) return rep;
  auto fine_of = [&](std::size_t k, int i, int j) -> const MonomialOperator& {
    for (const auto& [s, op] : fine)
      if (s.irrep == k && s.fine->first == i && s.fine->second == j) return op;
    fail(ErrorKind::InternalInconsistency, "missing fine projection");
  };
  auto& prod = rep.add("P^ij P'^lm = delta delta P^im");
  for (const auto& [s1, a] : fine)
    for (const auto& [s2, b] : fine) {
      const bool same = s1.irrep == s2.irrep && s1.fine->second == s2.fine->first;
      const MonomialOperator expect = same ? fine_of(s1.irrep, s1.fine->first, s2.fine->second) : zero;
      record(prod, a * b == expect, spec_label(G, s1) + " x " + spec_label(G, s2));
    }
  auto& diag = rep.add("P_rho = sum_i P^ii");
  MonomialOperator all_diag = zero;
  for (std::size_t k = 0; k < irreps.size(); ++k) {
    if (!irreps[k].has_model()) continue;
    MonomialOperator s = zero;
    for (int i = 1; i <= irreps[k].degree; ++i) s = s + fine_of(k, i, i);
    record(diag, s == coarse[k], irreps[k].label);
    all_diag = all_diag + s;
  }
  if (all_models(G)) {
    auto& comp = rep.add("sum_rho sum_i P^ii = id");
    record(comp, all_diag == id, "sum differs from identity");
  }
  return rep;
}

/// P(theta_k f) = theta_k P(f) for all monomials f of degree <= D, every spec and every theta_k.
inline Report iso_commute_with_mtheta(const PseudoreflectionGroup& G, const Hsop& h, int D) {
  Report rep{"isotypic-commutation", {}, {}};
  int top = D;
  for (int d : h.degrees) top = std::max(top, D + d);
  const ActionTable table(G, top);
  auto& c = rep.add("P M_theta = M_theta P");
  for (const auto& spec : all_specs(G)) {
    const MonomialOperator P = table.projection(spec);
    for (std::size_t t = 0; t < h.thetas.size(); ++t)
      for (const auto& m : monomials_up_to(G.dimension(), D)) {
        const Poly f = Poly::term(G.dimension(), m);
        record(c, P.apply(h.thetas[t] * f) == h.thetas[t] * P.apply(f),
               spec_label(G, spec) + " theta" + std::to_string(t + 1) + " on " + to_string(f));
      }
  }
  return rep;
}

/// K(sigma z, sigma w) = K(z, w) on the degree-D truncation, for the generators.
inline bool ker_check_invariance(const DiagonalKernel& K, const PseudoreflectionGroup& G, int D) {
  if (K.nvars() != G.dimension()) fail(ErrorKind::ArityMismatch, "kernel and group dimensions differ");
  const Poly t = K.truncation(D);
  for (auto g : G.generators()) {
    const CycMatrix& m = G.element(g).matrix;
    if (!(substitute_linear(t, CycMatrix::block_diagonal(m, m.conj())) == t)) return false;
  }
  return true;
}

/// (P^ij)* P^ij = P^jj, isometry of P^ij on the range of P^jj, and self-adjointness of
/// P_rho and P^ii, in the inner product induced by K.
inline Report iso_adjoint_identities(const PseudoreflectionGroup& G, const DiagonalKernel& K, int D) {
  if (!ker_check_invariance(K, G, D)) fail(ErrorKind::KernelNotInvariant, K.name() + " is not invariant under " + G.name());
  Report rep{"isotypic-adjoint", {}, {}};
  const ActionTable table(G, D);
  auto& adj = rep.add("(P^ij)* P^ij = P^jj");
  auto& iso = rep.add("|P^ij x| = |x| on range P^jj");
  auto& self = rep.add("P_rho* = P_rho");
  auto& self_fine = rep.add("(P^ii)* = P^ii");
  for (std::size_t k = 0; k < G.irreps().size(); ++k) {
    const MonomialOperator P = table.projection({k, std::nullopt});
    record(self, P.adjoint(K) == P, G.irreps()[k].label);
    const Irrep& r = G.irreps()[k];
    if (!r.has_model()) continue;
    for (int i = 1; i <= r.degree; ++i)
      for (int j = 1; j <= r.degree; ++j) {
        const ProjectionSpec s{k, std::make_pair(i, j)};
        const MonomialOperator Pij = table.projection(s);
        const MonomialOperator Pjj = table.projection({k, std::make_pair(j, j)});
        record(adj, Pij.adjoint(K) * Pij == Pjj, spec_label(G, s));
        if (i == j) record(self_fine, Pij.adjoint(K) == Pij, spec_label(G, s));
        for (std::size_t b = 0; b < Pjj.basis().size(); ++b) {
          const Poly& x = Pjj.image(b);
          if (x.is_zero()) continue;
          record(iso, K.norm2(Pij.apply(x)) == K.norm2(x), spec_label(G, s) + " on " + to_string(x));
        }
      }
  }
  return rep;
}

struct ModuleRank {
  std::size_t rank = 0;
  std::vector<Poly> generators;  // representatives outside sum_i theta_i V
};

/// Minimal generator count of P C[z]_{<=D} over C[theta]: dim V_delta minus
/// dim sum_i theta_i V_{delta - d_i}, summed over degrees delta <= D.
inline ModuleRank iso_module_rank(const PseudoreflectionGroup& G, const Hsop& h, const ProjectionSpec& spec, int D) {
  const std::size_t n = G.dimension();
  std::vector<std::vector<Poly>> V(static_cast<std::size_t>(D) + 1);
  ModuleRank out;
  for (int delta = 0; delta <= D; ++delta) {
    EchelonSpan vs(n);
    for (const auto& m : monomials_of_degree(n, delta)) vs.add(iso_project(Poly::term(n, m), spec, G));
    V[static_cast<std::size_t>(delta)] = vs.basis();
    EchelonSpan ws(n);
    for (std::size_t i = 0; i < h.thetas.size(); ++i) {
      const int lower = delta - h.degrees[i];
      if (lower < 0) continue;
      for (const auto& v : V[static_cast<std::size_t>(lower)]) ws.add(h.thetas[i] * v);
    }
    for (const auto& v : V[static_cast<std::size_t>(delta)])
      if (ws.add(v)) out.generators.push_back(v);
    if (ws.dim() != vs.dim()) fail(ErrorKind::InternalInconsistency, "theta multiples leave the isotypic component");
  }
  out.rank = out.generators.size();
  return out;
}

struct JointKernel {
  std::size_t dim = 0;
  std::vector<Poly> basis;
};

/// Orthogonal complement in C[z]_{<=D}, for the K-inner product, of sum_i theta_i C[z]_{<=D-d_i}.
inline JointKernel iso_joint_kernel_dim(const PseudoreflectionGroup& G, const Hsop& h, const DiagonalKernel& K, int D) {
  if (!ker_check_invariance(K, G, D)) fail(ErrorKind::KernelNotInvariant, K.name() + " is not invariant under " + G.name());
  const std::size_t n = G.dimension();
  JointKernel out;
  // the inner product is diagonal, so the complement splits by degree
  for (int delta = 0; delta <= D; ++delta) {
    const auto monos = monomials_of_degree(n, delta);
    EchelonSpan ideal(n);
    for (std::size_t i = 0; i < h.thetas.size(); ++i) {
      const int lower = delta - h.degrees[i];
      if (lower < 0) continue;
      for (const auto& m : monomials_of_degree(n, lower)) ideal.add(h.thetas[i].times_term(m, 1));
    }
    const auto rows = ideal.basis();
    if (rows.empty()) {
      for (const auto& m : monos) out.basis.push_back(Poly::term(n, m));
      continue;
    }
    // <v, g> = sum_I v_I conj(g_I) / a_I = 0 for every row g
    CycMatrix a(rows.size(), monos.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < monos.size(); ++c)
        a(r, c) = rows[r].coefficient(monos[c]).conj() * Cyclotomic(Rational(1 / K.weight(monos[c])));
    for (const auto& v : null_space(a)) {
      Poly p(n);
      for (std::size_t c = 0; c < monos.size(); ++c) p.add_term(monos[c], v[c]);
      out.basis.push_back(std::move(p));
    }
  }
  out.dim = out.basis.size();
  return out;
}

}  // namespace cstkit
