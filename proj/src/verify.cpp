#include "hecke/verify.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "hecke/parallel.hpp"
#include "json.hpp"

namespace hecke {

namespace {

struct Collector {
  std::mutex mu;
  SuiteReport rep;
  void add_case(int k = 1) {
    std::lock_guard<std::mutex> lock(mu);
    rep.cases += k;
  }
  void fail(std::string msg) {
    std::lock_guard<std::mutex> lock(mu);
    rep.failures.push_back(std::move(msg));
  }
};

std::vector<Composition> comps_between(int lo, int hi) {
  std::vector<Composition> out;
  for (int n = lo; n <= hi; ++n) {
    auto c = compositions_of(n);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

}  // namespace

SuiteReport suite_projective(int max_n, int jobs) {
  Collector col;
  col.rep.name = "projective";
  auto alphas = comps_between(2, max_n);
  parallel_for(static_cast<int>(alphas.size()), jobs, [&](int k) {
    auto pres = projective_presentation(alphas[k]);
    auto bad = verify_projective(pres);
    col.add_case();
    for (auto& b : bad) col.fail(b);
  });
  return col.rep;
}

SuiteReport suite_injective(int max_n, int jobs) {
  Collector col;
  col.rep.name = "injective";
  auto alphas = comps_between(2, max_n);
  parallel_for(static_cast<int>(alphas.size()), jobs, [&](int k) {
    auto pres = injective_presentation(alphas[k]);
    auto bad = verify_injective(pres);
    col.add_case();
    for (auto& b : bad) col.fail(b);
  });
  return col.rep;
}

SuiteReport suite_ext_example() {
  SuiteReport rep;
  rep.name = "ext-example";
  Composition alpha{1, 2, 1};
  auto pres = projective_presentation(alpha);
  for (const auto& beta : compositions_of(4)) {
    int want = (beta == Composition{2, 2} || beta == Composition{2, 1, 1}) ? 1 : 0;
    int formula = ext1_V_F_formula(alpha, beta);
    int oracle = ext1_oracle(pres, simple_module(beta));
    ++rep.cases;
    if (formula != want)
      rep.failures.push_back("ext1_V_F formula wrong at beta=" + to_string(beta));
    if (oracle != want)
      rep.failures.push_back("ext1_V_F oracle wrong at beta=" + to_string(beta));
  }
  return rep;
}

SuiteReport suite_slow_injective() {
  SuiteReport rep;
  rep.name = "slow-injective";
  Composition alpha{2, 1, 2, 3};
  auto check = [&](bool ok, const std::string& what) {
    ++rep.cases;
    if (!ok) rep.failures.push_back("alpha=(2,1,2,3): " + what);
  };
  check(to_string(alpha_hat(alpha)) == "1|1|3,1,1,1", "alpha-hat mismatch");
  check(to_string(alpha_hat_j(alpha, 1)) == "1|3,1,1,1,1", "alpha-hat^(1) mismatch");
  check(to_string(alpha_hat_j(alpha, 2)) == "1|3,1,1|1,1", "alpha-hat^(2) mismatch");
  check(to_string(alpha_hat_j(alpha, 3)) == "1|1|2,2,1,1", "alpha-hat^(3) mismatch");

  auto L = cal_L(alpha);
  Composition d1{1, 3, 1, 1, 1, 1}, d2{4, 1, 1, 1, 1};
  check(L.size() == 8, "calL should have 8 distinct members");
  check(L[d1] == 2 && L[d2] == 2, "multiplicity-2 members wrong");
  int singles = 0;
  for (auto& [c, m] : L)
    if (m == 1) ++singles;
  check(singles == 6, "multiplicity-1 member count wrong");

  auto oracle = cosyzygy_socle_character(alpha);
  for (const auto& beta : compositions_of(8)) {
    int formula = ext1_F_V_formula(beta, alpha);
    auto it = oracle.find(beta);
    int orc = it == oracle.end() ? 0 : it->second;
    ++rep.cases;
    if (formula != orc)
      rep.failures.push_back("formula/oracle disagree at beta=" + to_string(beta));
    int want = 0;
    auto br = reverse(beta);
    if (br == d1 || br == d2)
      want = 2;
    else if (L.count(br))
      want = 1;
    if (formula != want)
      rep.failures.push_back("paper table mismatch at beta=" + to_string(beta));
  }
  return rep;
}

SuiteReport suite_rigidity(int max_n_pairs, int max_n_essrigid, int jobs) {
  Collector col;
  col.rep.name = "rigidity";
  auto alphas = comps_between(2, max_n_pairs);
  parallel_for(static_cast<int>(alphas.size()), jobs, [&](int k) {
    const auto& alpha = alphas[k];
    auto pres = projective_presentation(alpha);
    auto V = dual_immaculate_module(alpha);
    int vsrc = V.index.at(sit_source(alpha));
    for (const auto& beta : compositions_of(alpha.size())) {
      if (!lex_leq(beta, alpha)) continue;
      auto W = dual_immaculate_module(beta);
      int ext = ext1_oracle(pres, W.rep);
      int hom =
          static_cast<int>(hom_from_generators(V.rep, {vsrc}, W.rep).size());
      col.add_case();
      if (ext != 0)
        col.fail("Ext1(V,V) nonzero at alpha=" + to_string(alpha) +
                 " beta=" + to_string(beta));
      if (hom != (alpha == beta ? 1 : 0))
        col.fail("Hom(V,V) wrong at alpha=" + to_string(alpha) +
                 " beta=" + to_string(beta));
    }
  });
  auto alphas2 = comps_between(2, max_n_essrigid);
  parallel_for(static_cast<int>(alphas2.size()), jobs, [&](int k) {
    const auto& alpha = alphas2[k];
    auto pres = projective_presentation(alpha);
    auto omega = omega_module(pres);
    int hom = 0;
    if (omega.sub.rep->dim() > 0)
      hom = static_cast<int>(
          hom_from_generators(omega.sub.rep, omega.generator_index, pres.V.rep)
              .size());
    col.add_case();
    if (hom != 0)
      col.fail("essential rigidity fails at alpha=" + to_string(alpha));
  });
  return col.rep;
}

SuiteReport suite_hombasis(int max_n, int jobs) {
  Collector col;
  col.rep.name = "hombasis";
  auto alphas = comps_between(2, max_n);
  parallel_for(static_cast<int>(alphas.size()), jobs, [&](int k) {
    const auto& alpha = alphas[k];
    auto P = projective_module(alpha);
    int src = P.index.at(source_tableau(P.shape));
    auto V = dual_immaculate_module(alpha);
    int vsrc = V.index.at(sit_source(alpha));
    for (const auto& beta : compositions_of(alpha.size())) {
      auto fu = f_U_basis(alpha, beta);
      auto W = fu.Vb;
      int homPV = static_cast<int>(hom_from_generators(P.rep, {src}, W.rep).size());
      int lba = L_coeff(beta, alpha);
      col.add_case();
      if (static_cast<int>(fu.Bset.size()) != homPV ||
          homPV != lba)
        col.fail("|B| = dim Hom(P,V) = L mismatch at alpha=" + to_string(alpha) +
                 " beta=" + to_string(beta));
      int general = hom_V_V_general(alpha, beta);
      int general_rev = hom_V_V_general(alpha, beta, true);
      int oracle =
          static_cast<int>(hom_from_generators(V.rep, {vsrc}, W.rep).size());
      if (general != oracle || general_rev != oracle)
        col.fail("hom_V_V_general vs oracle mismatch at alpha=" +
                 to_string(alpha) + " beta=" + to_string(beta));
    }
  });
  {
    col.add_case();
    if (hom_V_V_general(Composition{1, 1, 2, 1}, Composition{1, 2, 2}) != 1)
      col.fail("worked example (1,1,2,1)/(1,2,2) != 1");
    col.add_case();
    int got = hom_V_V_general(Composition{1, 1, 3, 2}, Composition{2, 3, 2});
    auto V = dual_immaculate_module(Composition{1, 1, 3, 2});
    int oracle = hom_dim(V.rep, dual_immaculate_module(Composition{2, 3, 2}).rep);
    if (got != 1)
      col.fail("worked example (1,1,3,2)/(2,3,2): expected reference value 1 "
               "is not reproduced; the f_U system gives " + std::to_string(got) +
               " and the independent intertwiner solver gives " +
               std::to_string(oracle) +
               " (each f_U carries the same tail tableau 1,7/2,5,6/3,4, "
               "which pi_[3,5] fixes, so the second constraint cancels)");
  }
  return col.rep;
}

SuiteReport suite_corollary(int max_n, int jobs) {
  Collector col;
  col.rep.name = "corollary";
  auto alphas = comps_between(2, max_n);
  parallel_for(static_cast<int>(alphas.size()), jobs, [&](int k) {
    const auto& alpha = alphas[k];
    for (const auto& beta : compositions_of(alpha.size())) {
      int formula = hom_radP_V_formula(beta, alpha);
      int oracle = hom_radP_V_oracle(beta, alpha);
      col.add_case();
      if (formula != oracle)
        col.fail("corollary mismatch at alpha=" + to_string(alpha) +
                 " beta=" + to_string(beta) + ": formula=" +
                 std::to_string(formula) + " oracle=" + std::to_string(oracle));
    }
  });
  return col.rep;
}

namespace {

std::vector<std::string> check_chi_isomorphism(const GeneralizedComposition& gc) {
  std::vector<std::string> bad;
  try {
    auto iso = chi_isomorphism(gc);
    if (iso.P.rep->dim() != iso.sum.rep->dim() ||
        rank(iso.map.mat) != iso.P.rep->dim())
      bad.push_back("chi-led map not bijective for shape " + to_string(gc));
    if (!is_intertwiner(iso.map))
      bad.push_back("chi-led map not an intertwiner for shape " + to_string(gc));
  } catch (const std::exception& e) {
    bad.push_back("chi isomorphism failed for shape " + to_string(gc) + ": " +
                  e.what());
  }
  return bad;
}

}  // namespace

SuiteReport suite_structural(int max_n, int jobs) {
  Collector col;
  col.rep.name = "structural";
  auto alphas = comps_between(1, max_n);
  parallel_for(static_cast<int>(alphas.size()), jobs, [&](int k) {
    const auto& alpha = alphas[k];
    auto P = projective_module(alpha);
    auto V = dual_immaculate_module(alpha);
    col.add_case();
    for (auto& b : check_relations(*P.rep))
      col.fail("relations P_" + to_string(alpha) + ": " + b);
    for (auto& b : check_relations(*V.rep))
      col.fail("relations V_" + to_string(alpha) + ": " + b);
    for (auto& b : check_relations(*simple_module(alpha)))
      col.fail("relations F_" + to_string(alpha) + ": " + b);
    // chi isomorphism for every generalized shape used by the presentations
    for (int i : cal_I(alpha))
      for (auto& b : check_chi_isomorphism(alpha_gen_i(alpha, i))) col.fail(b);
    auto K = cal_K(alpha);
    int m = static_cast<int>(K.size()) - 1;
    for (auto& b : check_chi_isomorphism(alpha_hat(alpha))) col.fail(b);
    for (int j = 1; j <= m; ++j) {
      auto hj = alpha_hat_j(alpha, j);
      for (auto& b : check_relations(*projective_module(hj).rep))
        col.fail("relations P_" + to_string(hj) + ": " + b);
      for (auto& b : check_chi_isomorphism(hj)) col.fail(b);
    }
    // characteristic cross-check
    if (composition_multiplicities(V.rep) != dual_immaculate_expansion(alpha))
      col.fail("characteristic mismatch for V_" + to_string(alpha));
  });
  // pi_sigma pibar_rho = 0 iff l(sigma rho) != l(sigma) + l(rho), n <= 4
  for (int n = 2; n <= std::min(max_n, 4); ++n) {
    auto reg = regular_module(n);
    int id = reg.index.at(Permutation::identity(n));
    for (const auto& sigma : reg.perms)
      for (const auto& rho : reg.perms) {
        auto v = apply_pibar_word(*reg.rep, reduced_word(rho),
                                  SparseVec::unit(id));
        v = apply_word(*reg.rep, reduced_word(sigma), v);
        bool zero = v.zero();
        bool additive = length(sigma * rho) == length(sigma) + length(rho);
        col.add_case();
        if (zero == additive)
          col.fail("zero characterization fails at sigma=" + to_string(sigma) +
                   " rho=" + to_string(rho));
      }
  }
  return col.rep;
}

std::vector<SuiteReport> run_suites(const VerifyConfig& cfg) {
  auto want = [&](const std::string& s) {
    if (cfg.suites.empty()) return true;
    for (const auto& x : cfg.suites)
      if (x == "all" || x == s) return true;
    return false;
  };
  std::vector<SuiteReport> out;
  if (want("projective")) out.push_back(suite_projective(cfg.max_n, cfg.jobs));
  if (want("ext-example")) out.push_back(suite_ext_example());
  if (want("injective")) out.push_back(suite_injective(cfg.max_n, cfg.jobs));
  if (want("rigidity"))
    out.push_back(suite_rigidity(std::min(cfg.max_n, 5), cfg.max_n, cfg.jobs));
  if (want("hombasis")) out.push_back(suite_hombasis(std::min(cfg.max_n, 5), cfg.jobs));
  if (want("corollary"))
    out.push_back(suite_corollary(std::min(cfg.max_n, 5), cfg.jobs));
  if (want("structural")) out.push_back(suite_structural(cfg.max_n, cfg.jobs));
  if (cfg.slow && (want("slow-injective") || want("injective")))
    out.push_back(suite_slow_injective());
  return out;
}

std::string report_json(const std::vector<SuiteReport>& reports,
                        const VerifyConfig& cfg) {
  nlohmann::json j;
  j["version"] = 1;
  j["config"] = {{"max_n", cfg.max_n},
                 {"slow", cfg.slow},
                 {"jobs", cfg.jobs},
                 {"suites", cfg.suites}};
  auto arr = nlohmann::json::array();
  for (const auto& r : reports)
    arr.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}});
  j["suites"] = arr;
  return j.dump(2);
}

bool all_ok(const std::vector<SuiteReport>& reports) {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

}  // namespace hecke
