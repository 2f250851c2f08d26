#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke/verify.hpp"

namespace {

using namespace hecke;

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(path);
  os << text;
}

std::string map_sparse_text(const ModuleMap& f) {
  std::ostringstream os;
  for (int c = 0; c < f.mat.cols; ++c) {
    os << f.src->basis[c] << " |-> ";
    if (f.mat.col[c].zero()) {
      os << "0";
    } else {
      bool first = true;
      for (const auto& [r, v] : f.mat.col[c].e) {
        if (!first) os << " + ";
        first = false;
        if (v != 1) os << v.get_str() << "*";
        os << f.tgt->basis[r];
      }
    }
    os << '\n';
  }
  return os.str();
}

int cmd_enumerate(const std::string& srt_shape, const std::string& sit_shape,
                  const std::string& out) {
  std::ostringstream os;
  if (!srt_shape.empty()) {
    auto gc = parse_generalized(srt_shape);
    auto P = projective_module(gc);
    os << "SRT(" << to_string(gc) << "): " << P.tabs.size() << " tableaux\n";
    for (const auto& t : P.tabs) os << "  " << to_string(P.shape, t) << '\n';
  }
  if (!sit_shape.empty()) {
    auto a = parse_composition(sit_shape);
    auto V = dual_immaculate_module(a);
    os << "SIT(" << to_string(a) << "): " << V.tabs.size() << " tableaux\n";
    for (const auto& t : V.tabs) os << "  " << to_string(t) << '\n';
  }
  write_out(out, os.str());
  return 0;
}

int cmd_presentation(const std::string& alpha_s, bool projective, bool injective,
                     const std::string& format, const std::string& out) {
  auto alpha = parse_composition(alpha_s);
  std::ostringstream os;
  bool ok = true;
  if (projective) {
    auto pres = projective_presentation(alpha);
    auto bad = verify_projective(pres);
    ok = ok && bad.empty();
    os << "projective presentation of V_" << to_string(alpha) << "\n";
    os << "  dim P0 = " << pres.P0.rep->dim() << ", dim V = " << pres.V.rep->dim()
       << ", dim P1 = " << pres.P1.rep->dim() << "\n";
    os << "  dim ker(phi) = Omega(V) = " << pres.P0.rep->dim() - rank(pres.phi.mat)
       << ", dim ker(partial1) = "
       << pres.P1.rep->dim() - rank(pres.partial1.mat) << "\n";
    if (format != "json") {
      os << "phi (tableau-labeled):\n" << map_sparse_text(pres.phi);
      os << "phi matrix:\n" << to_string(pres.phi.mat);
      os << "partial1 (tableau-labeled):\n" << map_sparse_text(pres.partial1);
      os << "partial1 matrix:\n" << to_string(pres.partial1.mat);
    }
    os << (bad.empty() ? "  all invariants PASS\n" : "  invariant FAILURES:\n");
    for (auto& b : bad) os << "    " << b << '\n';
  }
  if (injective) {
    auto pres = injective_presentation(alpha);
    auto bad = verify_injective(pres);
    ok = ok && bad.empty();
    os << "injective presentation of V_" << to_string(alpha) << "\n";
    os << "  alpha-hat = " << to_string(alpha_hat(alpha)) << "\n";
    for (int j = 1; j <= pres.m; ++j)
      os << "  alpha-hat^(" << j << ") = " << to_string(alpha_hat_j(alpha, j))
         << "\n";
    os << "  dim I0 = " << pres.I0.rep->dim() << ", dim V = " << pres.V.rep->dim()
       << ", dim I1 = " << pres.I1.rep->dim() << "\n";
    os << "  |Theta| = " << theta_basis(alpha).size() << "\n";
    if (format != "json") {
      os << "iota (tableau-labeled):\n" << map_sparse_text(pres.iota);
      os << "partial^1 (tableau-labeled):\n" << map_sparse_text(pres.partial_super1);
    }
    os << (bad.empty() ? "  all invariants PASS\n" : "  invariant FAILURES:\n");
    for (auto& b : bad) os << "    " << b << '\n';
  }
  write_out(out, os.str());
  return ok ? 0 : 1;
}

int cmd_ext_table(int n, const std::string& kind_s, const std::string& format,
                  const std::string& out, int jobs) {
  auto kind = ext_kind_from_string(kind_s);
  auto cells = ext_table(n, kind, jobs);
  bool ok = true;
  for (const auto& c : cells) ok = ok && c.agree();
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json j;
    j["n"] = n;
    j["kind"] = to_string(kind);
    auto arr = nlohmann::json::array();
    for (const auto& c : cells)
      arr.push_back({{"alpha", to_string(c.alpha)},
                     {"beta", to_string(c.beta)},
                     {"formula", c.formula},
                     {"oracle", c.oracle},
                     {"agree", c.agree()}});
    j["cells"] = arr;
    os << j.dump(2);
  } else {
    auto comps = compositions_of(n);
    std::vector<Composition> cols(comps.rbegin(), comps.rend());  // lex desc
    std::map<std::pair<Composition, Composition>, ExtReport> cell;
    for (const auto& c : cells) cell[{c.alpha, c.beta}] = c;
    const char* sep = format == "csv" ? "," : "  ";
    os << "alpha\\beta";
    for (const auto& b : cols) os << sep << '(' << to_string(b) << ')';
    os << '\n';
    for (const auto& a : comps) {
      os << '(' << to_string(a) << ')';
      for (const auto& b : cols) {
        const auto& c = cell[{a, b}];
        os << sep << c.formula;
        if (!c.agree()) os << "!=" << c.oracle;
      }
      os << '\n';
    }
  }
  write_out(out, os.str());
  return ok ? 0 : 1;
}

int cmd_dump(const std::string& which, const std::string& shape_s,
             const std::string& out) {
  std::string text;
  if (which == "P") {
    auto P = projective_module(parse_generalized(shape_s));
    text = module_to_json(*P.rep);
  } else if (which == "V") {
    auto V = dual_immaculate_module(parse_composition(shape_s));
    text = module_to_json(*V.rep);
  } else if (which == "F") {
    text = module_to_json(*simple_module(parse_composition(shape_s)));
  } else {
    throw CLI::ValidationError("--module must be P, V, or F");
  }
  write_out(out, text);
  return 0;
}

int cmd_verify(const VerifyConfig& cfg, const std::string& alpha_s,
               const std::string& format, const std::string& out) {
  std::vector<SuiteReport> reports;
  if (!alpha_s.empty()) {
    auto alpha = parse_composition(alpha_s);
    auto want = [&](const std::string& s) {
      if (cfg.suites.empty()) return true;
      for (const auto& x : cfg.suites)
        if (x == "all" || x == s) return true;
      return false;
    };
    if (want("projective")) {
      SuiteReport r;
      r.name = "projective";
      r.cases = 1;
      r.failures = verify_projective(projective_presentation(alpha));
      reports.push_back(std::move(r));
    }
    if (want("injective")) {
      SuiteReport r;
      r.name = "injective";
      r.cases = 1;
      r.failures = verify_injective(injective_presentation(alpha));
      reports.push_back(std::move(r));
      if (cfg.slow && alpha == Composition{2, 1, 2, 3})
        reports.push_back(suite_slow_injective());
    }
  } else {
    reports = run_suites(cfg);
  }
  std::ostringstream os;
  if (format == "json") {
    os << report_json(reports, cfg);
  } else {
    for (const auto& r : reports) {
      os << (r.ok() ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.cases
         << " cases";
      if (!r.ok()) os << ", " << r.failures.size() << " failures";
      os << ")\n";
      for (const auto& f : r.failures) os << "    " << f << '\n';
    }
  }
  write_out(out, os.str());
  return all_ok(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"0-Hecke algebra modules: dual immaculate presentations and Ext"};
  app.require_subcommand(1);

  std::string out, format = "text";

  auto* en = app.add_subcommand("enumerate", "list tableaux of a shape");
  std::string en_srt, en_sit;
  en->add_option("--srt", en_srt, "generalized composition, e.g. 2,1|1");
  en->add_option("--sit", en_sit, "composition, e.g. 1,2,2");
  en->add_option("--out", out);

  auto* pr = app.add_subcommand("presentation", "build and check presentations");
  std::string pr_alpha;
  bool pr_proj = false, pr_inj = false;
  pr->add_option("--alpha", pr_alpha, "composition")->required();
  pr->add_flag("--projective", pr_proj);
  pr->add_flag("--injective", pr_inj);
  pr->add_option("--format", format, "text|json");
  pr->add_option("--out", out);

  auto* ex = app.add_subcommand("ext-table", "formula/oracle tables over all pairs");
  int ex_n = 4, jobs = 1;
  std::string ex_kind = "ext1_V_F";
  ex->add_option("n", ex_n, "size of the compositions")->required();
  ex->add_option("--kind", ex_kind, "ext1_V_F|ext1_F_V|hom_V_V|hom_radP_V");
  ex->add_option("--format", format, "text|json|csv");
  ex->add_option("--out", out);
  ex->add_option("--jobs", jobs, "worker threads");

  auto* du = app.add_subcommand("dump", "module dump as JSON");
  std::string du_module = "P", du_shape;
  du->add_option("--module", du_module, "P|V|F");
  du->add_option("--shape", du_shape, "shape or composition")->required();
  du->add_option("--out", out);

  auto* ve = app.add_subcommand("verify", "run verification suites");
  VerifyConfig cfg;
  std::string ve_alpha;
  ve->add_option("--suite", cfg.suites,
                 "projective|injective|ext-example|rigidity|hombasis|"
                 "corollary|structural|slow-injective|all");
  ve->add_option("--max-n", cfg.max_n, "largest n in sweeps");
  ve->add_option("--alpha", ve_alpha, "restrict to one composition");
  ve->add_flag("--slow", cfg.slow, "include the n = 8 example");
  ve->add_option("--jobs", cfg.jobs, "worker threads");
  ve->add_option("--format", format, "text|json");
  ve->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (en->parsed()) return cmd_enumerate(en_srt, en_sit, out);
    if (pr->parsed()) {
      if (!pr_proj && !pr_inj) pr_proj = pr_inj = true;
      return cmd_presentation(pr_alpha, pr_proj, pr_inj, format, out);
    }
    if (ex->parsed()) return cmd_ext_table(ex_n, ex_kind, format, out, jobs);
    if (du->parsed()) return cmd_dump(du_module, du_shape, out);
    if (ve->parsed()) return cmd_verify(cfg, ve_alpha, format, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
