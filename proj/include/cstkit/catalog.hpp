#pragma once

// Builtin pseudoreflection groups and their irreducible representation catalogs.
//
//   Zm          cyclic, generated by diag(zeta_m) on C^1
//   Zm1xZm2x..  product of cyclics acting diagonally on C^n
//   Sn          symmetric group (n <= 4) by permutation matrices
//   Dk          dihedral group of order 2k: diag(zeta_k, zeta_k^-1) and the swap
//   A*B         direct product acting on disjoint coordinate blocks

#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "cstkit/group.hpp"

namespace cstkit {

inline constexpr std::size_t kDefaultGroupCap = 5000;

namespace detail {

inline CycMatrix permutation_matrix(const std::vector<int>& perm) {
  // column j carries e_{perm[j]}
  const std::size_t n = perm.size();
  CycMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(static_cast<std::size_t>(perm[j]), j) = 1;
  return m;
}

inline std::vector<int> matrix_permutation(const CycMatrix& m) {
  std::vector<int> perm(m.cols(), -1);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j).is_one()) perm[j] = static_cast<int>(i);
  return perm;
}

inline int permutation_sign(std::vector<int> perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    while (perm[i] != static_cast<int>(i)) {
      std::swap(perm[i], perm[static_cast<std::size_t>(perm[i])]);
      sign = -sign;
    }
  return sign;
}

// Exponent k with x == zeta_m^k, or -1.
inline int root_exponent(const Cyclotomic& x, int m) {
  for (int k = 0; k < m; ++k)
    if (x == Cyclotomic::zeta_power(m, k)) return k;
  return -1;
}

// Linear map sending v[i] to v[perm[i]]; the first dim vectors must be a basis.
inline CycMatrix vertex_model(const std::vector<std::vector<Cyclotomic>>& v, const std::vector<int>& perm) {
  const std::size_t dim = v[0].size();
  CycMatrix base(dim, dim), image(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) {
      base(i, j) = v[j][i];
      image(i, j) = v[static_cast<std::size_t>(perm[j])][i];
    }
  return image * base.inverse();
}

inline Irrep one_dimensional(std::string label, std::vector<Cyclotomic> chi) {
  Irrep r;
  r.label = std::move(label);
  r.degree = 1;
  std::vector<CycMatrix> model;
  for (const auto& c : chi) model.push_back(CycMatrix(1, 1, {c}));
  r.character = std::move(chi);
  r.model = std::move(model);
  return r;
}

inline Irrep from_model(std::string label, std::vector<CycMatrix> model) {
  Irrep r;
  r.label = std::move(label);
  r.degree = static_cast<int>(model.at(0).rows());
  for (const auto& m : model) r.character.push_back(m.trace());
  r.model = std::move(model);
  return r;
}

inline std::vector<Irrep> cyclic_irreps(const PseudoreflectionGroup& G, int m) {
  const int N = G.conductor();
  std::vector<int> k(G.order());
  for (std::size_t e = 0; e < G.order(); ++e) k[e] = root_exponent(G.element(e).matrix(0, 0), m);
  std::vector<Irrep> out;
  for (int j = 0; j < m; ++j) {
    std::vector<Cyclotomic> chi;
    for (std::size_t e = 0; e < G.order(); ++e) chi.push_back(Cyclotomic::zeta_power(m, static_cast<long long>(j) * k[e]).lift(N));
    out.push_back(one_dimensional("chi" + std::to_string(j), std::move(chi)));
  }
  return out;
}

inline std::vector<Irrep> product_cyclic_irreps(const PseudoreflectionGroup& G, const std::vector<int>& ms) {
  const int N = G.conductor();
  const std::size_t n = ms.size();
  std::vector<std::vector<int>> k(G.order(), std::vector<int>(n));
  for (std::size_t e = 0; e < G.order(); ++e)
    for (std::size_t i = 0; i < n; ++i) k[e][i] = root_exponent(G.element(e).matrix(i, i), ms[i]);
  std::vector<Irrep> out;
  std::vector<int> j(n, 0);
  while (true) {
    std::vector<Cyclotomic> chi;
    for (std::size_t e = 0; e < G.order(); ++e) {
      Cyclotomic c = Cyclotomic::rational(1, N);
      for (std::size_t i = 0; i < n; ++i)
        c = c * Cyclotomic::zeta_power(ms[i], static_cast<long long>(j[i]) * k[e][i]).lift(N);
      chi.push_back(c);
    }
    std::string label = "chi(";
    for (std::size_t i = 0; i < n; ++i) label += (i ? "," : "") + std::to_string(j[i]);
    out.push_back(one_dimensional(label + ")", std::move(chi)));
    std::size_t pos = n;
    while (pos-- > 0) {
      if (++j[pos] < ms[pos]) break;
      j[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

inline std::vector<Irrep> symmetric_irreps(const PseudoreflectionGroup& G, int n) {
  const int N = G.conductor();
  std::vector<std::vector<int>> perms;
  for (const auto& e : G.elements()) perms.push_back(matrix_permutation(e.matrix));
  std::vector<Cyclotomic> triv(G.order(), Cyclotomic::rational(1, N)), sign;
  for (const auto& p : perms) sign.push_back(Cyclotomic::rational(permutation_sign(p), N));
  std::vector<Irrep> out;
  out.push_back(one_dimensional("triv", triv));
  out.push_back(one_dimensional("sign", sign));
  if (n < 3) return out;

  // triangle vertices (zeta^k, zeta^-k), k = 0, 1, 2, carry the two-dimensional irrep of S3
  std::vector<std::vector<Cyclotomic>> triangle;
  for (int k = 0; k < 3; ++k)
    triangle.push_back({Cyclotomic::zeta_power(3, k).lift(N), Cyclotomic::zeta_power(3, -k).lift(N)});
  auto s3_model = [&](const std::vector<int>& p3) { return vertex_model(triangle, p3); };

  if (n == 3) {
    std::vector<CycMatrix> model;
    for (const auto& p : perms) model.push_back(s3_model(p));
    out.push_back(from_model("std", std::move(model)));
    return out;
  }
  // n == 4: S4 -> S3 through the three pairings {01|23}, {02|13}, {03|12}
  // pairing index = (partner of 0) - 1
  auto pairing_of = [](int a, int b) { return a == 0 || b == 0 ? a + b - 1 : 5 - a - b; };
  const int pairs[3][2] = {{0, 1}, {0, 2}, {0, 3}};
  std::vector<CycMatrix> two, three, three_sign;
  // tetrahedron vertices: the standard representation by signed permutation matrices
  std::vector<std::vector<Cyclotomic>> tetra = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (auto& v : tetra)
    for (auto& x : v) x = x.lift(N);
  for (std::size_t e = 0; e < perms.size(); ++e) {
    const auto& p = perms[e];
    std::vector<int> p3(3);
    for (int q = 0; q < 3; ++q) p3[static_cast<std::size_t>(q)] = pairing_of(p[static_cast<std::size_t>(pairs[q][0])], p[static_cast<std::size_t>(pairs[q][1])]);
    two.push_back(s3_model(p3));
    CycMatrix t = vertex_model(tetra, p);
    three.push_back(t);
    three_sign.push_back(sign[e] * t);
  }
  out.push_back(from_model("std2", std::move(two)));
  out.push_back(from_model("std", std::move(three)));
  out.push_back(from_model("std_sign", std::move(three_sign)));
  return out;
}

inline std::vector<Irrep> dihedral_irreps(const PseudoreflectionGroup& G, int k) {
  const int N = G.conductor();
  std::vector<int> a(G.order()), b(G.order());
  for (std::size_t e = 0; e < G.order(); ++e) {
    const CycMatrix& m = G.element(e).matrix;
    if (m(0, 1).is_zero()) {
      a[e] = root_exponent(m(0, 0), k);
      b[e] = 0;
    } else {
      a[e] = root_exponent(m(0, 1), k);
      b[e] = 1;
    }
  }
  auto chi = [&](auto f) {
    std::vector<Cyclotomic> c;
    for (std::size_t e = 0; e < G.order(); ++e) c.push_back(Cyclotomic::rational(f(a[e], b[e]), N));
    return c;
  };
  std::vector<Irrep> out;
  out.push_back(one_dimensional("triv", chi([](int, int) { return 1; })));
  out.push_back(one_dimensional("sign", chi([](int, int bb) { return bb ? -1 : 1; })));
  if (k % 2 == 0) {
    out.push_back(one_dimensional("eps", chi([](int aa, int) { return aa % 2 ? -1 : 1; })));
    out.push_back(one_dimensional("eps_sign", chi([](int aa, int bb) { return (aa + bb) % 2 ? -1 : 1; })));
  }
  CycMatrix swap(2, 2, {0, 1, 1, 0});
  for (int h = 1; 2 * h < k; ++h) {
    std::vector<CycMatrix> model;
    for (std::size_t e = 0; e < G.order(); ++e) {
      CycMatrix rot = CycMatrix::diagonal({Cyclotomic::zeta_power(k, static_cast<long long>(h) * a[e]).lift(N),
                                           Cyclotomic::zeta_power(k, -static_cast<long long>(h) * a[e]).lift(N)});
      model.push_back(b[e] ? rot * swap.lift(N) : rot);
    }
    out.push_back(from_model("rho" + std::to_string(h), std::move(model)));
  }
  return out;
}

inline std::vector<Irrep> product_irreps(const PseudoreflectionGroup& G, const PseudoreflectionGroup& A,
                                         const PseudoreflectionGroup& B) {
  const int N = G.conductor();
  const std::size_t na = A.dimension(), nb = B.dimension();
  std::vector<std::size_t> ia(G.order()), ib(G.order());
  for (std::size_t e = 0; e < G.order(); ++e) {
    const CycMatrix& m = G.element(e).matrix;
    auto fa = A.find(m.sub_block(0, 0, na, na).lift(std::lcm(N, A.conductor())));
    auto fb = B.find(m.sub_block(na, na, nb, nb).lift(std::lcm(N, B.conductor())));
    if (!fa || !fb) fail(ErrorKind::InternalInconsistency, "direct product element does not split");
    ia[e] = *fa;
    ib[e] = *fb;
  }
  std::vector<Irrep> out;
  for (const auto& ra : A.irreps())
    for (const auto& rb : B.irreps()) {
      Irrep r;
      r.label = ra.label + "*" + rb.label;
      r.degree = ra.degree * rb.degree;
      for (std::size_t e = 0; e < G.order(); ++e)
        r.character.push_back((ra.character[ia[e]] * rb.character[ib[e]]).lift(N));
      if (ra.has_model() && rb.has_model()) {
        std::vector<CycMatrix> model;
        for (std::size_t e = 0; e < G.order(); ++e)
          model.push_back(CycMatrix::kron((*ra.model)[ia[e]].lift(N), (*rb.model)[ib[e]].lift(N)));
        r.model = std::move(model);
      }
      out.push_back(std::move(r));
    }
  return out;
}

inline int family_conductor(const GroupSpec& s) {
  using F = GroupSpec::Family;
  switch (s.family) {
    case F::Cyclic: return s.params[0];
    case F::ProductCyclic: return std::accumulate(s.params.begin(), s.params.end(), 1, [](int a, int b) { return std::lcm(a, b); });
    case F::Symmetric: return s.params[0] == 2 ? 2 : (s.params[0] == 3 ? 6 : 12);  // exponent of S_n
    case F::Dihedral: return std::lcm(s.params[0], 2);
    case F::DirectProduct: return std::lcm(family_conductor(s.factors[0]), family_conductor(s.factors[1]));
    case F::Generic: break;
  }
  return 1;
}

}  // namespace detail

/// Builds a builtin group with its irrep catalog.
inline std::shared_ptr<const PseudoreflectionGroup> group_builtin(const GroupSpec& spec) {
  using F = GroupSpec::Family;
  for (int p : spec.params)
    if (p < 1) fail(ErrorKind::Unsupported, "group parameters must be positive");
  const int N = detail::family_conductor(spec);
  std::vector<CycMatrix> gens;
  std::shared_ptr<const PseudoreflectionGroup> fa, fb;
  switch (spec.family) {
    case F::Cyclic:
      gens.push_back(CycMatrix(1, 1, {Cyclotomic::zeta_power(spec.params[0], 1)}));
      break;
    case F::ProductCyclic: {
      const std::size_t n = spec.params.size();
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Cyclotomic> d(n, Cyclotomic(1));
        d[i] = Cyclotomic::zeta_power(spec.params[i], 1);
        gens.push_back(CycMatrix::diagonal(d));
      }
      break;
    }
    case F::Symmetric: {
      const int n = spec.params[0];
      if (n < 2 || n > 4) fail(ErrorKind::Unsupported, "symmetric groups are catalogued for 2 <= n <= 4");
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
        gens.push_back(detail::permutation_matrix(p));
      }
      break;
    }
    case F::Dihedral: {
      const int k = spec.params[0];
      if (k < 2) fail(ErrorKind::Unsupported, "dihedral groups need k >= 2");
      gens.push_back(CycMatrix::diagonal({Cyclotomic::zeta_power(k, 1), Cyclotomic::zeta_power(k, -1)}));
      gens.push_back(CycMatrix(2, 2, {0, 1, 1, 0}));
      break;
    }
    case F::DirectProduct: {
      fa = group_builtin(spec.factors.at(0));
      fb = group_builtin(spec.factors.at(1));
      const std::size_t na = fa->dimension(), nb = fb->dimension();
      for (auto g : fa->generators())
        gens.push_back(CycMatrix::block_diagonal(fa->element(g).matrix.lift(N), CycMatrix::identity(nb)));
      for (auto g : fb->generators())
        gens.push_back(CycMatrix::block_diagonal(CycMatrix::identity(na), fb->element(g).matrix.lift(N)));
      break;
    }
    case F::Generic:
      fail(ErrorKind::Unsupported, "generic groups are not builtin");
  }
  for (auto& g : gens) g = g.lift(N);
  auto G = std::make_shared<PseudoreflectionGroup>(group_generate(std::move(gens), kDefaultGroupCap));
  G->set_name(spec.to_string());
  G->set_spec(spec);
  switch (spec.family) {
    case F::Cyclic: G->set_irreps(detail::cyclic_irreps(*G, spec.params[0])); break;
    case F::ProductCyclic: G->set_irreps(detail::product_cyclic_irreps(*G, spec.params)); break;
    case F::Symmetric: G->set_irreps(detail::symmetric_irreps(*G, spec.params[0])); break;
    case F::Dihedral: G->set_irreps(detail::dihedral_irreps(*G, spec.params[0])); break;
    case F::DirectProduct:
      G->set_factors({fa, fb});
      G->set_irreps(detail::product_irreps(*G, *fa, *fb));
      break;
    case F::Generic: break;
  }
  return G;
}

inline GroupSpec cyclic_spec(int m) { return {GroupSpec::Family::Cyclic, {m}, {}}; }
inline GroupSpec product_cyclic_spec(std::vector<int> ms) { return {GroupSpec::Family::ProductCyclic, std::move(ms), {}}; }
inline GroupSpec symmetric_spec(int n) { return {GroupSpec::Family::Symmetric, {n}, {}}; }
inline GroupSpec dihedral_spec(int k) { return {GroupSpec::Family::Dihedral, {k}, {}}; }
inline GroupSpec direct_product_spec(GroupSpec a, GroupSpec b) {
  return {GroupSpec::Family::DirectProduct, {}, {std::move(a), std::move(b)}};
}

/// Parses `Zm`, `Zm1xZm2x...`, `Sn`, `Dk`, `A*B` (left-associative).
inline GroupSpec parse_group_spec(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (auto star = text.rfind('*'); star != std::string_view::npos)
    return direct_product_spec(parse_group_spec(text.substr(0, star)), parse_group_spec(text.substr(star + 1)));
  auto number = [&](std::string_view s) {
    if (s.empty() || s.size() > 6) fail(ErrorKind::ParseError, "bad group spec '" + std::string(text) + "'");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') fail(ErrorKind::ParseError, "bad group spec '" + std::string(text) + "'");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (text.empty()) fail(ErrorKind::ParseError, "empty group spec");
  const char head = text[0];
  if (head == 'Z') {
    std::vector<int> ms;
    std::string_view rest = text;
    while (true) {
      if (rest.empty() || rest[0] != 'Z') fail(ErrorKind::ParseError, "bad group spec '" + std::string(text) + "'");
      rest.remove_prefix(1);
      const auto x = rest.find('x');
      ms.push_back(number(rest.substr(0, x)));
      if (x == std::string_view::npos) break;
      rest.remove_prefix(x + 1);
    }
    for (int m : ms)
      if (m < 2) fail(ErrorKind::Unsupported, "cyclic factors need m >= 2");
    if (ms.size() == 1) return cyclic_spec(ms[0]);
    return product_cyclic_spec(ms);
  }
  if (head == 'S') {
    const int n = number(text.substr(1));
    if (n < 2) fail(ErrorKind::Unsupported, "symmetric groups need n >= 2");
    return symmetric_spec(n);
  }
  if (head == 'D') {
    const int k = number(text.substr(1));
    if (k < 2) fail(ErrorKind::Unsupported, "dihedral groups need k >= 2");
    return dihedral_spec(k);
  }
  fail(ErrorKind::Unsupported, "unknown group family in '" + std::string(text) + "'");
}

inline std::shared_ptr<const PseudoreflectionGroup> group_builtin(std::string_view text) {
  return group_builtin(parse_group_spec(text));
}

/// Index of the irrep with the given label. Aliases: `trivial`, `det` (the character of
/// the jacobian, sigma -> det(sigma)), `sign` (det when no irrep carries that label),
/// `std` (rho1 on dihedral groups).
inline std::size_t find_irrep(const PseudoreflectionGroup& G, std::string_view label) {
  const auto& irreps = G.irreps();
  for (std::size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].label == label) return i;
  auto matching = [&](auto pred) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < irreps.size(); ++i)
      if (irreps[i].degree == 1 && pred(irreps[i])) return i;
    return std::nullopt;
  };
  std::optional<std::size_t> hit;
  if (label == "triv" || label == "trivial")
    hit = matching([&](const Irrep& r) {
      for (const auto& c : r.character)
        if (!c.is_one()) return false;
      return true;
    });
  if (label == "det" || label == "sign")
    hit = matching([&](const Irrep& r) {
      for (std::size_t e = 0; e < G.order(); ++e)
        if (!(r.character[e] == G.element(e).matrix.det())) return false;
      return true;
    });
  if (label == "std")
    for (std::size_t i = 0; i < irreps.size(); ++i)
      if (irreps[i].label == "rho1") hit = i;
  if (!hit) fail(ErrorKind::InvalidParameter, "no irrep labelled '" + std::string(label) + "' in " + G.name());
  return *hit;
}

}  // namespace cstkit
