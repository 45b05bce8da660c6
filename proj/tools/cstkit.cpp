// cstkit command-line front end.
//
//   cstkit group S3
//   cstkit decompose --group S2 --poly "z1^2" --json
//   cstkit kernel --spec bergman:2 --group Z3 --block sign --degree 8
//   cstkit verify --group D3 --suite all --degree 6
//
// Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cstkit/cstkit.hpp"

namespace {

using json = nlohmann::json;
using namespace cstkit;

struct CliConfig {
  int degree_cap = 8;
  int conductor_cap = 360;
  bool json = false;
  bool approx = false;
  std::uint64_t seed = 1;
};

// Everything needed to render one command, text and JSON side by side.
struct Output {
  json doc = json::object();
  std::ostringstream text;
};

std::vector<std::string> theta_names(std::size_t k) { return variable_names(k, "u"); }

json approx_terms(const Poly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::array();
    for (std::size_t i = 0; i < p.nvars(); ++i) exps.push_back(m[i]);
    const auto v = c.approx();
    out.push_back({exps, v.real(), v.imag()});
  }
  return out;
}

void check_degree(const CliConfig& cfg, int D, const char* what) {
  if (D < 0) fail(ErrorKind::InvalidParameter, std::string(what) + " must be non-negative");
  if (D > cfg.degree_cap)
    fail(ErrorKind::InvalidParameter, std::string(what) + " " + std::to_string(D) + " exceeds the degree cap " +
                                          std::to_string(cfg.degree_cap));
}

std::shared_ptr<const PseudoreflectionGroup> load_group(const std::string& spec) { return group_builtin(std::string_view(spec)); }

void cmd_group(const std::string& spec, const CliConfig& cfg, Output& out) {
  const auto Gp = load_group(spec);
  const auto& G = *Gp;
  const auto hs = group_hyperplanes(G);
  const auto cls = hyperplane_classes(G, hs);
  const std::size_t nclasses = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  const auto names = variable_names(G.dimension());

  auto& t = out.text;
  t << "group " << G.name() << "\n";
  t << "order: " << G.order() << "\n";
  t << "dimension: " << G.dimension() << "\n";
  t << "conductor: " << G.conductor() << "\n";
  t << "pseudoreflections: " << G.pseudoreflection_count() << "\n";
  t << "hyperplanes: " << hs.size() << " (" << nclasses << (nclasses == 1 ? " class" : " classes") << ")\n";
  json jh = json::array();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string form = to_string(hs[i].linear_form, names);
    t << "  " << form << "  m=" << hs[i].order << "  class " << cls[i] + 1 << "\n";
    jh.push_back({{"form", form}, {"order", hs[i].order}, {"class", cls[i] + 1}});
  }
  t << "irreps:\n";
  json ji = json::array();
  for (const auto& r : G.irreps()) {
    t << "  " << r.label << "  degree " << r.degree << "  chi = [";
    json chi = json::array(), chi_approx = json::array();
    for (std::size_t s = 0; s < r.character.size(); ++s) {
      t << (s ? ", " : "") << r.character[s].to_string();
      chi.push_back(r.character[s].to_string());
      const auto v = r.character[s].approx();
      chi_approx.push_back({v.real(), v.imag()});
    }
    t << "]\n";
    json entry = {{"label", r.label}, {"degree", r.degree}, {"character", chi}, {"model", r.model.has_value()}};
    if (cfg.approx) entry["character_approx"] = chi_approx;
    ji.push_back(entry);
  }
  out.doc = {{"group", G.name()},
             {"order", G.order()},
             {"dimension", G.dimension()},
             {"conductor", G.conductor()},
             {"pseudoreflections", G.pseudoreflection_count()},
             {"hyperplanes", jh},
             {"hyperplane_classes", nclasses},
             {"irreps", ji}};
}

void cmd_hsop(const std::string& spec, bool with_basis, Output& out) {
  const auto Gp = load_group(spec);
  const auto& G = *Gp;
  const Hsop h = inv_hsop(G);
  const auto names = variable_names(G.dimension());
  auto& t = out.text;
  t << "group " << G.name() << "\n";
  json thetas = json::array();
  for (std::size_t i = 0; i < h.thetas.size(); ++i) {
    const std::string s = to_string(h.thetas[i], names);
    t << "theta" << i + 1 << " = " << s << "  (degree " << h.degrees[i] << ")\n";
    thetas.push_back(s);
  }
  const std::string poincare = poincare_string(h.degrees);
  t << "poincare: " << poincare << "\n";
  out.doc = {{"group", G.name()}, {"thetas", thetas}, {"degrees", h.degrees}, {"poincare", poincare}};
  if (!with_basis) return;
  const ModuleBasis b = inv_module_basis(G, h);
  json polys = json::array();
  for (std::size_t j = 0; j < b.size(); ++j) {
    const std::string s = to_string(b.polys[j], names);
    t << "p" << j + 1 << " = " << s << "  (degree " << b.degrees[j] << ")\n";
    polys.push_back(s);
  }
  out.doc["basis"] = polys;
  out.doc["basis_degrees"] = b.degrees;
}

void cmd_decompose(const std::string& spec, const std::string& text, std::optional<int> series, const CliConfig& cfg,
                   Output& out) {
  const auto Gp = load_group(spec);
  const auto& G = *Gp;
  const CstContext ctx = cst_context(G);
  const Poly f = parse_poly(text, G.dimension());
  if (series) check_degree(cfg, *series, "series degree");
  else if (!f.is_zero()) check_degree(cfg, *f.degree(), "polynomial degree");
  const CstDecomposition dec = series ? cst_decompose_series(f, *series, G, ctx.hsop, ctx.basis, ctx.lambda)
                                      : cst_decompose(f, G, ctx.hsop, ctx.basis, ctx.lambda);
  const auto names = variable_names(G.dimension());
  const auto unames = theta_names(ctx.hsop.thetas.size());
  // independent of the decomposition routine's own check
  Poly back(G.dimension());
  for (std::size_t j = 0; j < ctx.basis.size(); ++j) back += ctx.basis.polys[j] * poly_compose(dec.theta_forms[j], ctx.hsop.thetas);
  const bool ok = back == (series ? f.truncate(*series) : f);

  auto& t = out.text;
  t << "group " << G.name() << "\n";
  t << "f = " << to_string(f, names) << "\n";
  if (series) t << "truncated to degree " << *series << "\n";
  json basis = json::array(), coeffs = json::array(), forms = json::array(), approx = json::array();
  for (std::size_t j = 0; j < ctx.basis.size(); ++j) {
    const std::string p = to_string(ctx.basis.polys[j], names);
    const std::string fj = to_string(dec.coefficients[j], names);
    const std::string qj = to_string(dec.theta_forms[j], unames);
    t << "p_" << j + 1 << " = " << p << "\n";
    t << "  f_" << j + 1 << " = " << fj << "\n";
    t << "  q_" << j + 1 << " = " << qj << "\n";
    basis.push_back(p);
    coeffs.push_back(fj);
    forms.push_back(qj);
    approx.push_back(approx_terms(dec.coefficients[j]));
  }
  t << "reconstructed: " << (ok ? "yes" : "no") << "\n";
  out.doc = {{"group", G.name()}, {"basis", basis}, {"coefficients", coeffs}, {"theta_forms", forms}, {"reconstructed", ok}};
  if (series) out.doc["series"] = *series;
  if (cfg.approx) out.doc["coefficients_approx"] = approx;
  if (!ok) fail(ErrorKind::InternalInconsistency, "decomposition does not reconstruct the input");
}

std::pair<int, int> parse_fine(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) fail(ErrorKind::ParseError, "--fine expects i,j");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "--fine expects two integers, got '" + s + "'");
  }
}

void cmd_project(const std::string& spec, const std::string& irrep, const std::optional<std::string>& fine, const std::string& text,
                 const CliConfig& cfg, Output& out) {
  const auto Gp = load_group(spec);
  const auto& G = *Gp;
  ProjectionSpec ps{find_irrep(G, irrep), std::nullopt};
  const Irrep& r = G.irreps()[ps.irrep];
  if (fine) {
    const auto [i, j] = parse_fine(*fine);
    if (i < 1 || j < 1 || i > r.degree || j > r.degree)
      fail(ErrorKind::InvalidParameter, "indices out of range for " + r.label + " of degree " + std::to_string(r.degree));
    ps.fine = std::make_pair(i, j);
  }
  const Poly f = parse_poly(text, G.dimension());
  if (!f.is_zero()) check_degree(cfg, *f.degree(), "polynomial degree");
  const Poly p = iso_project(f, ps, G);
  const auto names = variable_names(G.dimension());
  out.text << "group " << G.name() << "\n";
  out.text << "projection " << spec_label(G, ps) << "\n";
  out.text << "f = " << to_string(f, names) << "\n";
  out.text << "P f = " << to_string(p, names) << "\n";
  out.doc = {{"group", G.name()}, {"irrep", r.label}, {"input", to_string(f, names)}, {"projection", to_string(p, names)}};
  if (ps.fine) out.doc["fine"] = {ps.fine->first, ps.fine->second};
  if (cfg.approx) out.doc["projection_approx"] = approx_terms(p);
}

void cmd_kernel(const std::string& kspec, const std::string& spec, const std::string& block, int D, const CliConfig& cfg, Output& out) {
  check_degree(cfg, D, "degree");
  const auto Gp = load_group(spec);
  const auto& G = *Gp;
  const std::size_t n = G.dimension();
  const DiagonalKernel K = parse_kernel_spec(kspec, n);
  const std::size_t k = find_irrep(G, block);
  const Irrep& r = G.irreps()[k];
  const KernelTruncation b = ker_block(K, G, k, D);
  const auto names = kernel_variable_names(n);

  auto& t = out.text;
  t << "kernel " << K.name() << " on " << G.name() << ", block " << r.label << ", degree <= " << D << "\n";
  t << "K_rho(z, w) = " << to_string(b.poly2n, names) << "   (w^J stands for conj(w)^J)\n";
  json coeffs = json::array();
  for (const auto& [m, c] : b.poly2n.terms()) {
    json I = json::array(), J = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      I.push_back(m[i]);
      J.push_back(m[n + i]);
    }
    coeffs.push_back({I, J, c.to_string()});
  }
  json transported = json::array();
  out.doc = {{"kernel", K.name()}, {"group", G.name()}, {"irrep", r.label}, {"degree", D}, {"block_coeffs", coeffs}};
  if (cfg.approx) out.doc["block_coeffs_approx"] = approx_terms(b.poly2n);
  if (r.degree == 1) {
    const Hsop h = inv_hsop(G);
    const auto gens = iso_module_rank(G, h, {k, std::nullopt}, D).generators;
    if (gens.size() == 1) {
      const TransportedKernel tk = ker_transported(K, G, h, k, gens.front(), D);
      t << "generator p = " << to_string(tk.generator, variable_names(n)) << "\n";
      t << "KK(u, v) = " << to_string(tk.kernel, kernel_variable_names(h.thetas.size(), "u", "v")) << "\n";
      t << "with K_rho = " << tk.scale.get_str() << " p(z) KK(theta(z), theta(w)) conj(p(w))\n";
      if (!tk.coeffs.empty()) {
        t << "transported coefficients:";
        for (const auto& c : tk.coeffs) {
          t << " " << c.get_str();
          transported.push_back(c.get_str());
        }
        t << "\n";
      }
      out.doc["generator"] = to_string(tk.generator, variable_names(n));
      out.doc["transported_kernel"] = to_string(tk.kernel, kernel_variable_names(h.thetas.size(), "u", "v"));
      out.doc["scale"] = tk.scale.get_str();
    } else {
      t << "no single generator below degree " << D << "; transported kernel not built\n";
    }
  }
  out.doc["transported"] = transported;
}

bool cmd_verify(const std::string& spec, const std::string& suite, int D, const CliConfig& cfg, Output& out) {
  check_degree(cfg, D, "degree");
  const auto Gp = load_group(spec);
  const auto& G = *Gp;
  VerifyOptions opt;
  opt.degree = D;
  opt.seed = cfg.seed;
  const auto reports = verify_suite(G, suite, opt);
  bool all_ok = true;
  json suites = json::array();
  auto& t = out.text;
  t << "group " << G.name() << ", degree " << D << ", seed " << cfg.seed << "\n";
  for (const auto& rep : reports) {
    all_ok = all_ok && rep.ok();
    if (!rep.skipped.empty()) {
      t << "suite " << rep.suite << ": skipped (" << rep.skipped << ")\n";
      suites.push_back({{"suite", rep.suite}, {"skipped", rep.skipped}});
      continue;
    }
    t << "suite " << rep.suite << ": " << rep.passed() << "/" << rep.checks.size() << " passed\n";
    json checks = json::array();
    for (const auto& c : rep.checks) {
      t << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.relation << "  [" << c.instances << "]";
      if (!c.note.empty()) t << "  " << c.note;
      if (!c.pass) t << "  witness: " << c.witness;
      t << "\n";
      json jc = {{"relation", c.relation}, {"status", c.pass ? "pass" : "fail"}, {"instances", c.instances}};
      if (!c.note.empty()) jc["note"] = c.note;
      if (!c.pass) jc["witness"] = c.witness;
      checks.push_back(jc);
    }
    suites.push_back({{"suite", rep.suite}, {"passed", rep.passed()}, {"total", rep.checks.size()}, {"checks", checks}});
  }
  t << (all_ok ? "ok" : "FAILED") << "\n";
  out.doc = {{"group", G.name()}, {"degree", D}, {"seed", cfg.seed}, {"suites", suites}, {"ok", all_ok}};
  return all_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Chevalley-Shephard-Todd decompositions, isotypic projections and kernel blocks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  CliConfig cfg;
  app.add_flag("--json", cfg.json, "Emit a single JSON object");
  app.add_flag("--approx", cfg.approx, "Add floating-point approximations of exact values");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--degree-cap", cfg.degree_cap, "Largest accepted degree")->check(CLI::PositiveNumber);
  app.add_option("--conductor-cap", cfg.conductor_cap, "Largest cyclotomic conductor")->check(CLI::PositiveNumber);

  std::string group_spec, poly, irrep, kspec, block, suite;
  std::optional<std::string> fine;
  std::optional<int> series;
  int degree = 0;

  auto* group = app.add_subcommand("group", "Group report");
  group->add_option("spec", group_spec, "Group spec: Zm, Zm1xZm2, Sn, Dk, A*B")->required();
  auto* hsop = app.add_subcommand("hsop", "Basic invariants and the Poincare polynomial");
  hsop->add_option("spec", group_spec)->required();
  auto* basis = app.add_subcommand("basis", "Module basis over the invariant ring");
  basis->add_option("spec", group_spec)->required();

  auto* decompose = app.add_subcommand("decompose", "f = sum p_j (q_j o theta)");
  decompose->add_option("--group", group_spec)->required();
  decompose->add_option("--poly", poly)->required();
  decompose->add_option("--series", series, "Decompose the truncation to this degree");

  auto* project = app.add_subcommand("project", "Isotypic projection");
  project->add_option("--group", group_spec)->required();
  project->add_option("--irrep", irrep)->required();
  project->add_option("--fine", fine, "Matrix-entry projection i,j (1-based)");
  project->add_option("--poly", poly)->required();

  auto* kernel = app.add_subcommand("kernel", "Isotypic block of a diagonal kernel");
  kernel->add_option("--spec", kspec, "hardy, bergman:L, dirichlet, polydisc:k1,k2,..., ball:L")->required();
  kernel->add_option("--group", group_spec)->required();
  kernel->add_option("--block", block)->required();
  kernel->add_option("--degree", degree)->required();

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--group", group_spec)->required();
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--degree", degree)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out;
  bool ok = true;
  try {
    set_conductor_cap(cfg.conductor_cap);
    if (*group) cmd_group(group_spec, cfg, out);
    else if (*hsop) cmd_hsop(group_spec, false, out);
    else if (*basis) cmd_hsop(group_spec, true, out);
    else if (*decompose) cmd_decompose(group_spec, poly, series, cfg, out);
    else if (*project) cmd_project(group_spec, irrep, fine, poly, cfg, out);
    else if (*kernel) cmd_kernel(kspec, group_spec, block, degree, cfg, out);
    else if (*verify) ok = cmd_verify(group_spec, suite, degree, cfg, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (cfg.json)
    std::cout << out.doc.dump(2) << "\n";
  else
    std::cout << out.text.str();
  return ok ? 0 : 1;
}
