#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/module.hpp"

namespace hecke {

/// The transpose relabeling behind phi: row i of the candidate SIT is
/// column i of the SRT. Returns nullopt when the result is not an SIT.
std::optional<Sit> sit_from_srt(const Composition& a, const Srt& t);

/// Minimal projective presentation data for V_alpha.
struct ProjectivePresentation {
  Composition alpha;
  SitModule V;
  SrtModule P0;
  std::vector<int> Is;  // calI(alpha), ascending
  std::vector<SrtModule> P1blocks;
  DirectSum P1;          // zero module when calI is empty
  ModuleMap phi;         // P0 -> V
  ModuleMap partial1;    // P1 -> P0
};

ProjectivePresentation projective_presentation(const Composition& a);

/// phi alone (also available from the presentation).
ModuleMap phi_map(const SrtModule& P0, const SitModule& V);

/// T_alpha^(i) = pi_{[m_{i-1}+1, m_i]} . T_alpha for i in calI(alpha).
std::vector<Srt> syzygy_generators(const Composition& a);

/// Minimal injective presentation data for V_alpha.
struct InjectivePresentation {
  Composition alpha;
  SitModule V;
  SrtModule I0;  // P_{alpha-hat}
  int m = 0;
  std::vector<SrtModule> I1blocks;  // P_{alpha-hat^(j)}, j = 1..m
  DirectSum I1;
  ModuleMap iota;            // V -> I0
  ModuleMap partial_super1;  // I0 -> I1
};

InjectivePresentation injective_presentation(const Composition& a);

/// Theta(V_alpha): SRTs of shape alpha-hat outside the iota image region.
std::vector<Srt> theta_basis(const Composition& a);

/// Cosyzygy Omega^{-1}(V_alpha) = coker(iota), as a coordinate quotient of
/// P_{alpha-hat}; basis corresponds to theta_basis.
struct Cosyzygy {
  ModulePtr rep;
  std::vector<int> theta_index;  // rep basis -> I0 basis index
};
Cosyzygy cosyzygy(const InjectivePresentation& pres);

/// Structured verification. Each failure is one human-readable line naming
/// the invariant, the shape, and the offending data.
std::vector<std::string> verify_projective(const ProjectivePresentation& p);
std::vector<std::string> verify_injective(const InjectivePresentation& p);

/// Omega(V_alpha) = ker(phi) as a coordinate submodule of P_alpha, together
/// with the syzygy generator positions.
struct OmegaModule {
  CoordSubmodule sub;
  std::vector<int> generator_index;  // indices in sub.rep basis
};
OmegaModule omega_module(const ProjectivePresentation& p);

// --- proof-level checks reused by tests and the verify suites ---

/// chi_b^{-1}(sink of beta) for beta in [gc].
Srt sink_pullback(const RibbonShape& sh, const Composition& beta);

/// J(beta, gc) = { i : pi_i kills the sink of beta but not its pullback }.
std::set<int> J_set(const RibbonShape& sh, const Composition& beta);

/// Socle vector pibar_{w0(J)} . sink_pullback for beta in [alpha-hat];
/// spans a simple with the pattern of the sink of beta.
SparseVec socle_vector_hat(const SrtModule& I0, const Composition& beta);

/// Lemma-level socle vector for beta in [alpha-hat^(j)], using the
/// bi-increasing longest element when min J <= l(alpha).
SparseVec socle_vector_hatj(const Composition& a, int j, const SrtModule& Pj,
                            const Composition& beta);

/// Checks that v spans a one-dimensional submodule with pi-pattern des:
/// pi_i v = 0 for i in des, = v otherwise. Returns failures.
std::vector<std::string> check_simple_span(const ModuleRep& m, const SparseVec& v,
                                           const std::set<int>& des,
                                           const std::string& what);

/// Explicit isomorphism direct-sum of P_beta -> P_gc realizing the
/// reading-word bijection. The naive basis bijection chi is not equivariant
/// (the zero-versus-move case depends on the row geometry), so each block is
/// the unique intertwiner P_beta -> P_gc whose value at the source tableau
/// has lead coefficient 1 at chi^{-1}(T_beta), leads taken in increasing
/// reading-word length.
struct ChiIsomorphism {
  SrtModule P;
  DirectSum sum;  // over [gc] in expansion order
  ModuleMap map;  // sum -> P
};
ChiIsomorphism chi_isomorphism(const GeneralizedComposition& gc);

}  // namespace hecke
