#pragma once

#include <string>
#include <vector>

#include "hecke/presentations.hpp"

namespace hecke {

/// Fundamental expansion of the dual immaculate function: beta -> L_{alpha,beta},
/// the number of SITs of shape alpha with descent composition beta.
Character dual_immaculate_expansion(const Composition& a);
int L_coeff(const Composition& a, const Composition& b);

/// Closed forms from the minimal presentations.
int ext1_V_F_formula(const Composition& a, const Composition& b);
int ext1_F_V_formula(const Composition& b, const Composition& a);

/// Closed forms valid for beta <=_lex alpha only.
int hom_V_V_lex(const Composition& a, const Composition& b);
int ext1_V_V_lex(const Composition& a, const Composition& b);

/// dim Hom by the generic intertwiner solver.
int hom_oracle(const ModulePtr& m, const ModulePtr& n);

/// Ext^1(V_alpha, N) from the minimal projective presentation:
/// dim Hom(Omega, N) - dim Hom(P_alpha, N) + dim Hom(V_alpha, N).
int ext1_oracle(const ProjectivePresentation& pres, const ModulePtr& n);
int ext1_oracle(const Composition& a, const ModulePtr& n);

/// Ext^1(F_beta, V_alpha) = [soc(Omega^{-1}(V_alpha)) : F_beta].
int ext1_F_V_oracle(const Composition& b, const Composition& a);
/// Socle character of the cosyzygy (the full oracle table for fixed alpha).
Character cosyzygy_socle_character(const Composition& a);

/// The f_U basis of Hom(P_alpha, V_beta), echelonized against a linear
/// extension of the reachability order on SIT(beta).
struct FuBasis {
  Composition alpha, beta;
  SitModule Vb;
  std::vector<int> Bset;          // SIT indices with Des(U) = set(alpha)
  std::vector<ModuleMap> maps;    // f_U, aligned with Bset
  std::vector<SparseVec> values;  // f_U(T_alpha) in V_beta coordinates
};
FuBasis f_U_basis(const Composition& a, const Composition& b,
                  bool reversed_tiebreak = false);

/// Linear extension of the reachability order on SIT(beta), largest first.
std::vector<int> sit_linear_extension(const SitModule& v, bool reversed_tiebreak);

/// dim Hom(V_alpha, V_beta) via the f_U linear system.
int hom_V_V_general(const Composition& a, const Composition& b,
                    bool reversed_tiebreak = false);

/// Corollary: dim Hom(rad P_beta, V_alpha), closed form and oracle.
int hom_radP_V_formula(const Composition& b, const Composition& a);
int hom_radP_V_oracle(const Composition& b, const Composition& a);

struct ExtReport {
  Composition alpha, beta;
  int formula = 0, oracle = 0;
  bool agree() const { return formula == oracle; }
};

/// Table kinds understood by the CLI and the verify suites.
enum class ExtKind { Ext1VF, Ext1FV, HomVV, HomRadPV };
ExtKind ext_kind_from_string(const std::string& s);
std::string to_string(ExtKind k);

/// Full (alpha, beta) table over compositions of n; jobs > 1 parallelizes
/// over alpha rows.
std::vector<ExtReport> ext_table(int n, ExtKind kind, int jobs = 1);

}  // namespace hecke
