#pragma once

#include <string>
#include <vector>

#include "hecke/ext.hpp"

namespace hecke {

struct SuiteReport {
  std::string name;
  int cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Projective presentation invariants for every alpha of 2 <= n <= max_n.
SuiteReport suite_projective(int max_n, int jobs);
/// Injective presentation invariants for every alpha of 2 <= n <= max_n.
SuiteReport suite_injective(int max_n, int jobs);
/// The worked Ext^1(V_(1,2,1), F_beta) table, formula and oracle.
SuiteReport suite_ext_example();
/// The n = 8 example alpha = (2,1,2,3): shapes, multiset, and the
/// Ext^1(F_beta, V_alpha) table by formula and socle oracle.
SuiteReport suite_slow_injective();
/// Rigidity: Ext^1(V_a,V_b) = 0 and Hom(V_a,V_b) = delta for b <=_lex a
/// (n <= max_n_pairs), plus Hom(Omega(V_a), V_a) = 0 for n <= max_n_essrigid.
SuiteReport suite_rigidity(int max_n_pairs, int max_n_essrigid, int jobs);
/// Hom bases: |B| = dim Hom(P_a, V_b) = L_{b,a}; hom_V_V_general vs oracle
/// on all pairs; the two worked examples.
SuiteReport suite_hombasis(int max_n, int jobs);
/// dim Hom(rad P_b, V_a) closed form vs oracle on all pairs.
SuiteReport suite_corollary(int max_n, int jobs);
/// Algebra relations, chi isomorphisms, characteristic cross-checks, and the
/// pi pibar vanishing law in the regular representation.
SuiteReport suite_structural(int max_n, int jobs);

struct VerifyConfig {
  std::vector<std::string> suites;  // empty or {"all"} = every fast suite
  int max_n = 5;
  bool slow = false;  // adds the n = 8 example
  int jobs = 1;
};

std::vector<SuiteReport> run_suites(const VerifyConfig& cfg);
std::string report_json(const std::vector<SuiteReport>& reports,
                        const VerifyConfig& cfg);
bool all_ok(const std::vector<SuiteReport>& reports);

}  // namespace hecke
