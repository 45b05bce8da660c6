#pragma once

// The matrix Lambda = (rho_i(p_j)), its determinant identities, and the Cramer-rule
// decomposition f = sum_j p_j f_j with G-invariant f_j.

#include <optional>
#include <string>
#include <vector>

#include "cstkit/invariants.hpp"
#include "cstkit/poly_matrix.hpp"

namespace cstkit {

struct LambdaMatrix {
  PolyMatrix matrix;  // (i, j) = rho_i(p_j), elements in canonical order
  Poly det;
  std::optional<PolyMatrix> adjugate;
  int pseudoreflections = 0;
};

/// Builds Lambda and checks det != 0 and deg det = d m / 2.
inline LambdaMatrix cst_lambda(const PseudoreflectionGroup& G, const ModuleBasis& basis, bool with_adjugate = true) {
  const std::size_t d = G.order();
  if (basis.size() != d) fail(ErrorKind::ShapeError, "basis size differs from the group order");
  LambdaMatrix L;
  L.matrix = PolyMatrix(d, d, G.dimension());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) L.matrix(i, j) = G.act(i, basis.polys[j]);
  if (with_adjugate) {
    auto da = poly_det_adjugate(L.matrix);
    L.det = std::move(da.det);
    L.adjugate = std::move(da.adjugate);
  } else {
    L.det = poly_det(L.matrix);
  }
  L.pseudoreflections = static_cast<int>(G.pseudoreflection_count());
  if (L.det.is_zero()) fail(ErrorKind::InternalInconsistency, "det Lambda vanishes");
  const int expected = static_cast<int>(d) * L.pseudoreflections / 2;
  if (!L.det.is_homogeneous() || *L.det.degree() != expected)
    fail(ErrorKind::InternalInconsistency, "det Lambda has degree " + std::to_string(*L.det.degree()) + ", expected " +
                                               std::to_string(expected));
  return L;
}

namespace detail {

inline Cyclotomic constant_quotient(const Poly& num, const Poly& den, const std::string& what) {
  Poly q;
  try {
    q = poly_exact_divide(num, den);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDivisible) throw;
    fail(ErrorKind::FactorizationFailure, what + ": " + e.what());
  }
  if (!q.is_constant() || q.is_zero()) fail(ErrorKind::FactorizationFailure, what + ": quotient " + to_string(q) + " is not a nonzero constant");
  return q.constant_term();
}

inline Poly hyperplane_product(const std::vector<ReflectingHyperplane>& hs, std::size_t nvars, auto exponent) {
  Poly p = Poly::constant(nvars, 1);
  for (const auto& h : hs) p = p * h.linear_form.pow(exponent(h.order));
  return p;
}

}  // namespace detail

/// c with det Lambda = c prod L_i^{d (m_i - 1) / 2}.
inline Cyclotomic cst_det_factorization(const LambdaMatrix& L, const std::vector<ReflectingHyperplane>& hs) {
  const int d = static_cast<int>(L.matrix.rows());
  for (const auto& h : hs)
    if ((d * (h.order - 1)) % 2 != 0) fail(ErrorKind::FactorizationFailure, "odd exponent d(m_i - 1)/2");
  const Poly p = detail::hyperplane_product(hs, L.matrix.nvars(), [&](int m) { return d * (m - 1) / 2; });
  return detail::constant_quotient(L.det, p, "det Lambda / prod L_i^{d(m_i-1)/2}");
}

struct JacobianRelations {
  Poly jacobian;
  Cyclotomic steinberg_constant;  // J = c1 prod L_i^{m_i - 1}
  Cyclotomic power_constant;      // det Lambda = c2 J^{d/2}, or c2 (prod L_i^{(m_i-1)/2})^d for odd d
  bool even_order = true;
};

inline JacobianRelations cst_jacobian_relations(const PseudoreflectionGroup& G, const Hsop& h, const LambdaMatrix& L) {
  const auto hs = group_hyperplanes(G);
  const std::size_t n = G.dimension();
  const int d = static_cast<int>(G.order());
  JacobianRelations r;
  r.jacobian = poly_jacobian_det(h.thetas);
  r.steinberg_constant = detail::constant_quotient(r.jacobian, detail::hyperplane_product(hs, n, [](int m) { return m - 1; }),
                                                   "J / prod L_i^{m_i-1}");
  r.even_order = d % 2 == 0;
  if (r.even_order) {
    r.power_constant = detail::constant_quotient(L.det, r.jacobian.pow(d / 2), "det Lambda / J^{d/2}");
  } else {
    for (const auto& hp : hs)
      if ((hp.order - 1) % 2 != 0) fail(ErrorKind::FactorizationFailure, "odd |G| with even m_i");
    const Poly half = detail::hyperplane_product(hs, n, [](int m) { return (m - 1) / 2; });
    r.power_constant = detail::constant_quotient(L.det, half.pow(d), "det Lambda / (prod L_i^{(m_i-1)/2})^d");
  }
  return r;
}

struct CstDecomposition {
  std::vector<Poly> coefficients;  // f_j, G-invariant
  std::vector<Poly> theta_forms;   // q_j with f_j = q_j o theta
  bool reconstructed = false;
};

enum class CramerMode { Adjugate, ColumnReplacement };

/// f = sum_j p_j f_j. Each f_j = det(Lambda_j) / det(Lambda) where Lambda_j has column j
/// replaced by (rho_1(f), ..., rho_d(f)); the adjugate mode forms the same numerators as adj(Lambda) x.
inline CstDecomposition cst_decompose(const Poly& f, const PseudoreflectionGroup& G, const Hsop& h, const ModuleBasis& basis,
                                      const LambdaMatrix& L, CramerMode mode = CramerMode::Adjugate) {
  const std::size_t d = G.order();
  const std::size_t n = G.dimension();
  if (f.nvars() != n) fail(ErrorKind::ArityMismatch, "polynomial ring does not match the group");
  CstDecomposition out;
  if (f.is_zero()) {
    out.coefficients.assign(d, Poly(n));
    out.theta_forms.assign(d, Poly(h.thetas.size()));
    out.reconstructed = true;
    return out;
  }
  std::vector<Poly> x;
  for (std::size_t i = 0; i < d; ++i) x.push_back(G.act(i, f));
  std::vector<Poly> numer(d, Poly(n));
  if (mode == CramerMode::Adjugate && L.adjugate) {
    const PolyMatrix& adj = *L.adjugate;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i)
        if (!adj(j, i).is_zero() && !x[i].is_zero()) numer[j] += adj(j, i) * x[i];
  } else {
    for (std::size_t j = 0; j < d; ++j) numer[j] = poly_det(L.matrix.with_column(j, x));
  }
  Poly sum(n);
  for (std::size_t j = 0; j < d; ++j) {
    Poly fj;
    try {
      fj = poly_exact_divide(numer[j], L.det);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotDivisible) throw;
      fail(ErrorKind::InternalInconsistency, "det Lambda does not divide numerator " + std::to_string(j + 1));
    }
    if (!inv_is_invariant(fj, G)) fail(ErrorKind::InternalInconsistency, "coefficient " + std::to_string(j + 1) + " is not invariant");
    out.theta_forms.push_back(inv_rewrite(fj, h).q);
    sum += basis.polys[j] * fj;
    out.coefficients.push_back(std::move(fj));
  }
  out.reconstructed = sum == f;
  if (!out.reconstructed) fail(ErrorKind::InternalInconsistency, "decomposition does not reconstruct the input");
  return out;
}

/// Degree-by-degree decomposition of the truncation f_{<= D}; coefficient j comes out
/// truncated to degree D - e_j.
inline CstDecomposition cst_decompose_series(const Poly& f, int D, const PseudoreflectionGroup& G, const Hsop& h,
                                             const ModuleBasis& basis, const LambdaMatrix& L) {
  const std::size_t d = G.order();
  CstDecomposition out;
  out.coefficients.assign(d, Poly(G.dimension()));
  out.theta_forms.assign(d, Poly(h.thetas.size()));
  out.reconstructed = true;
  const Poly t = f.truncate(D);
  if (t.is_zero()) return out;
  for (int k = *t.min_degree(); k <= *t.degree(); ++k) {
    const Poly part = t.homogeneous_component(k);
    if (part.is_zero()) continue;
    auto piece = cst_decompose(part, G, h, basis, L);
    for (std::size_t j = 0; j < d; ++j) {
      out.coefficients[j] += piece.coefficients[j];
      out.theta_forms[j] += piece.theta_forms[j];
    }
  }
  return out;
}

}  // namespace cstkit
