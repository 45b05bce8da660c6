#pragma once

// Finite unitary matrix groups over a cyclotomic field, enumerated by closure.

#include <algorithm>
#include <map>
#include <numeric>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cstkit/matrix.hpp"
#include "cstkit/poly.hpp"

namespace cstkit {

struct GroupElement {
  CycMatrix matrix;
  int order = 1;
  std::size_t index = 0;
};

/// Irreducible representation: character always, unitary matrix model when available.
struct Irrep {
  std::string label;
  int degree = 1;
  std::vector<Cyclotomic> character;  // indexed by element
  std::optional<std::vector<CycMatrix>> model;

  bool has_model() const { return model.has_value(); }
};

/// Builtin family descriptor, kept so invariant-theoretic data can be looked up.
struct GroupSpec {
  enum class Family { Generic, Cyclic, ProductCyclic, Symmetric, Dihedral, DirectProduct };
  Family family = Family::Generic;
  std::vector<int> params;
  std::vector<GroupSpec> factors;  // DirectProduct only

  std::string to_string() const {
    switch (family) {
      case Family::Cyclic: return "Z" + std::to_string(params[0]);
      case Family::ProductCyclic: {
        std::string s;
        for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "xZ" : "Z") + std::to_string(params[i]);
        return s;
      }
      case Family::Symmetric: return "S" + std::to_string(params[0]);
      case Family::Dihedral: return "D" + std::to_string(params[0]);
      case Family::DirectProduct: return factors[0].to_string() + "*" + factors[1].to_string();
      case Family::Generic: break;
    }
    return "generic";
  }
};

struct ReflectingHyperplane {
  Poly linear_form;                    // normalized: leading graded-lex coefficient 1
  int order = 2;                       // m_i, size of the pointwise stabilizer
  std::vector<std::size_t> stabilizer;  // element indices, identity included
};

class PseudoreflectionGroup {
 public:
  std::size_t dimension() const { return n_; }
  int conductor() const { return conductor_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  bool is_pseudoreflection(std::size_t i) const { return reflection_flags_[i]; }
  std::size_t pseudoreflection_count() const {
    return static_cast<std::size_t>(std::count(reflection_flags_.begin(), reflection_flags_.end(), true));
  }
  /// Whether the pseudoreflections generate the whole group.
  bool reflection_generated() const { return reflection_generated_; }

  const std::optional<GroupSpec>& spec() const { return spec_; }
  bool has_irreps() const { return irreps_.has_value(); }
  const std::vector<Irrep>& irreps() const {
    if (!irreps_) fail(ErrorKind::Unsupported, "no irreducible representation catalog for " + name_);
    return *irreps_;
  }
  /// Factor groups of a direct product, in variable order.
  const std::vector<std::shared_ptr<const PseudoreflectionGroup>>& factors() const { return factors_; }

  /// sigma . f = f o sigma^{-1}
  Poly act(std::size_t i, const Poly& f) const {
    if (f.nvars() != n_) fail(ErrorKind::ArityMismatch, "polynomial ring does not match group dimension");
    return substitute_linear(f, elements_[inverse_[i]].matrix);
  }

  std::optional<std::size_t> find(const CycMatrix& m) const {
    if (m.rows() != n_ || m.cols() != n_) return std::nullopt;
    const int common = std::lcm(conductor_, m.conductor());
    if (common == conductor_) {
      auto it = lookup_.find(m.lift(conductor_).key());
      if (it == lookup_.end()) return std::nullopt;
      return it->second;
    }
    const CycMatrix target = m.lift(common);
    for (const auto& e : elements_)
      if (e.matrix.lift(common) == target) return e.index;
    return std::nullopt;
  }

  // catalog construction hooks
  void set_name(std::string name) { name_ = std::move(name); }
  void set_spec(GroupSpec spec) { spec_ = std::move(spec); }
  void set_irreps(std::vector<Irrep> irreps) { irreps_ = std::move(irreps); }
  void set_factors(std::vector<std::shared_ptr<const PseudoreflectionGroup>> f) { factors_ = std::move(f); }

  friend PseudoreflectionGroup group_generate(std::vector<CycMatrix> generators, std::size_t cap);

 private:
  std::size_t n_ = 0;
  int conductor_ = 1;
  std::string name_ = "generic";
  std::vector<GroupElement> elements_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<bool> reflection_flags_;
  bool reflection_generated_ = false;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::optional<GroupSpec> spec_;
  std::optional<std::vector<Irrep>> irreps_;
  std::vector<std::shared_ptr<const PseudoreflectionGroup>> factors_;
};

/// True iff g is not the identity and rank(I - g) = 1.
inline bool group_is_pseudoreflection(const CycMatrix& g) {
  if (!g.is_square() || g.is_identity()) return false;
  CycMatrix d = CycMatrix::identity(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) d(i, j) -= g(i, j);
  return d.rank() == 1;
}

inline bool group_is_pseudoreflection(const GroupElement& g) { return group_is_pseudoreflection(g.matrix); }

/// Breadth-first closure of the generators. Identity first, then discovery order from the
/// generators sorted by their text form.
inline PseudoreflectionGroup group_generate(std::vector<CycMatrix> generators, std::size_t cap) {
  if (generators.empty()) fail(ErrorKind::InvalidParameter, "no generators");
  const std::size_t n = generators[0].rows();
  int conductor = 1;
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != n) fail(ErrorKind::ShapeError, "generators must be square of equal size");
    conductor = std::lcm(conductor, g.conductor());
  }
  for (auto& g : generators) {
    g = g.lift(conductor);
    if (!g.is_unitary()) fail(ErrorKind::InvalidParameter, "generator is not unitary: " + g.key());
    CycMatrix p = g;
    std::size_t k = 1;
    while (!p.is_identity()) {
      if (++k > cap) fail(ErrorKind::NotFiniteOrder, "generator order exceeds " + std::to_string(cap));
      p = p * g;
    }
  }
  std::sort(generators.begin(), generators.end(), [](const CycMatrix& a, const CycMatrix& b) { return a.key() < b.key(); });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  PseudoreflectionGroup G;
  G.n_ = n;
  G.conductor_ = conductor;
  auto add = [&](CycMatrix m) -> std::size_t {
    std::string key = m.key();
    auto it = G.lookup_.find(key);
    if (it != G.lookup_.end()) return it->second;
    if (G.elements_.size() >= cap) fail(ErrorKind::GroupTooLarge, "closure exceeds cap " + std::to_string(cap));
    const std::size_t idx = G.elements_.size();
    G.elements_.push_back({std::move(m), 1, idx});
    G.lookup_.emplace(std::move(key), idx);
    return idx;
  };
  add(CycMatrix::identity(n).lift(conductor));
  for (std::size_t head = 0; head < G.elements_.size(); ++head)
    for (const auto& g : generators) add(G.elements_[head].matrix * g);
  for (const auto& g : generators) G.generators_.push_back(G.lookup_.at(g.key()));

  const std::size_t d = G.elements_.size();
  G.table_.assign(d * d, 0);
  G.inverse_.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t k = G.lookup_.at((G.elements_[i].matrix * G.elements_[j].matrix).key());
      G.table_[i * d + j] = k;
      if (k == 0) G.inverse_[i] = j;
    }
  for (std::size_t i = 0; i < d; ++i) {
    int ord = 1;
    for (std::size_t p = i; p != 0; p = G.table_[p * d + i]) ++ord;
    G.elements_[i].order = ord;
  }
  G.reflection_flags_.assign(d, false);
  for (std::size_t i = 1; i < d; ++i) G.reflection_flags_[i] = group_is_pseudoreflection(G.elements_[i].matrix);

  // closure of the pseudoreflections through the table
  std::vector<bool> seen(d, false);
  std::vector<std::size_t> reached{0};
  seen[0] = true;
  for (std::size_t head = 0; head < reached.size(); ++head)
    for (std::size_t r = 0; r < d; ++r)
      if (G.reflection_flags_[r]) {
        const std::size_t k = G.table_[reached[head] * d + r];
        if (!seen[k]) {
          seen[k] = true;
          reached.push_back(k);
        }
      }
  G.reflection_generated_ = reached.size() == d;
  return G;
}

/// Distinct reflecting hyperplanes with their pointwise stabilizers.
inline std::vector<ReflectingHyperplane> group_hyperplanes(const PseudoreflectionGroup& G) {
  const std::size_t n = G.dimension();
  std::map<std::string, ReflectingHyperplane> by_form;
  std::vector<std::string> order;
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (!G.is_pseudoreflection(i)) continue;
    const CycMatrix& m = G.element(i).matrix;
    std::vector<Cyclotomic> row;
    for (std::size_t r = 0; r < n && row.empty(); ++r) {
      std::vector<Cyclotomic> cand(n);
      bool nonzero = false;
      for (std::size_t j = 0; j < n; ++j) {
        cand[j] = (r == j ? Cyclotomic(1) : Cyclotomic(0)) - m(r, j);
        nonzero = nonzero || !cand[j].is_zero();
      }
      if (nonzero) row = std::move(cand);
    }
    std::size_t lead = 0;
    while (row[lead].is_zero()) ++lead;
    const Cyclotomic inv = row[lead].inverse();
    Poly form(n);
    for (std::size_t j = 0; j < n; ++j) form.add_term(Monomial::variable(j), (row[j] * inv).lift(G.conductor()));
    const std::string key = to_string(form);
    auto [it, inserted] = by_form.try_emplace(key);
    if (inserted) {
      it->second.linear_form = form;
      it->second.stabilizer = {0};
      order.push_back(key);
    }
    it->second.stabilizer.push_back(i);
  }
  std::vector<ReflectingHyperplane> out;
  std::size_t total = 0;
  for (const auto& key : order) {
    auto h = by_form.at(key);
    h.order = static_cast<int>(h.stabilizer.size());
    bool cyclic = false;
    for (auto s : h.stabilizer) cyclic = cyclic || G.element(s).order == h.order;
    if (!cyclic) fail(ErrorKind::InternalInconsistency, "stabilizer of " + key + " is not cyclic");
    total += h.stabilizer.size() - 1;
    out.push_back(std::move(h));
  }
  if (total != G.pseudoreflection_count())
    fail(ErrorKind::InternalInconsistency, "hyperplane stabilizers do not account for all pseudoreflections");
  return out;
}

/// Orbits of the hyperplanes under the group; returns the orbit id of each hyperplane.
inline std::vector<std::size_t> hyperplane_classes(const PseudoreflectionGroup& G,
                                                   const std::vector<ReflectingHyperplane>& hs) {
  std::vector<std::size_t> which(G.order(), hs.size());
  for (std::size_t h = 0; h < hs.size(); ++h)
    for (auto s : hs[h].stabilizer)
      if (s != 0) which[s] = h;
  std::vector<std::size_t> cls(hs.size(), hs.size());
  std::size_t next = 0;
  for (std::size_t h = 0; h < hs.size(); ++h) {
    if (cls[h] != hs.size()) continue;
    const std::size_t r = hs[h].stabilizer[1];
    for (std::size_t g = 0; g < G.order(); ++g) {
      const std::size_t conj = G.multiply(G.multiply(g, r), G.inverse(g));
      cls[which[conj]] = next;
    }
    ++next;
  }
  return cls;
}

}  // namespace cstkit
