#pragma once

// Linear spans of polynomials, kept in echelon form keyed by leading monomial.

#include <map>
#include <vector>

#include "cstkit/poly.hpp"

namespace cstkit {

class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t nvars) : nvars_(nvars) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t nvars() const { return nvars_; }

  /// Residue of p after subtracting its projection onto the pivots; zero iff p lies in the span.
  Poly reduce(const Poly& p) const {
    Poly r = p;
    Poly out(nvars_);
    while (!r.is_zero()) {
      const Monomial lead = r.leading_monomial();
      const Cyclotomic c = r.leading_coefficient();
      auto it = rows_.find(lead);
      if (it != rows_.end()) {
        r -= c * it->second;
      } else {
        out.add_term(lead, c);
        r.add_term(lead, -c);
      }
    }
    return out;
  }

  bool contains(const Poly& p) const { return reduce(p).is_zero(); }

  /// Adds p; returns false when p was already in the span.
  bool add(const Poly& p) {
    Poly r = reduce(p);
    if (r.is_zero()) return false;
    const Cyclotomic inv = r.leading_coefficient().inverse();
    const Monomial lead = r.leading_monomial();
    rows_.emplace(lead, inv * r);
    return true;
  }

  std::size_t add_all(const std::vector<Poly>& ps) {
    std::size_t added = 0;
    for (const auto& p : ps) added += add(p) ? 1 : 0;
    return added;
  }

  /// Echelon rows, leading coefficient 1, in descending pivot order.
  std::vector<Poly> basis() const {
    std::vector<Poly> out;
    for (const auto& [m, p] : rows_) out.push_back(p);
    return out;
  }

 private:
  std::size_t nvars_;
  std::map<Monomial, Poly, std::greater<>> rows_;
};

inline std::size_t span_dim(std::size_t nvars, const std::vector<Poly>& ps) {
  EchelonSpan s(nvars);
  return s.add_all(ps);
}

inline bool same_span(std::size_t nvars, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  EchelonSpan sa(nvars), sb(nvars);
  sa.add_all(a);
  sb.add_all(b);
  if (sa.dim() != sb.dim()) return false;
  for (const auto& p : b)
    if (!sa.contains(p)) return false;
  return true;
}

}  // namespace cstkit
