#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecke/composition.hpp"
#include "hecke/linalg.hpp"
#include "hecke/tableaux.hpp"

namespace hecke {

/// An H_n(0)-module given by an ordered basis and one exact-rational matrix
/// per generator pi_1..pi_{n-1}.
struct ModuleRep {
  int n = 0;
  std::vector<std::string> basis;
  std::vector<SparseMat> act;  // act[i-1] = matrix of pi_i

  int dim() const { return static_cast<int>(basis.size()); }
  /// True when every action column is zero or a standard basis vector.
  bool is_combinatorial() const;
};

using ModulePtr = std::shared_ptr<const ModuleRep>;

/// Intertwiner between two modules; mat maps src coordinates to tgt ones.
struct ModuleMap {
  ModulePtr src, tgt;
  SparseMat mat;
};

bool is_intertwiner(const ModuleMap& f);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g o f

using Character = std::map<Composition, int>;

/// P_gc: basis = SRTs of the shape in canonical order.
struct SrtModule {
  RibbonShape shape;
  std::vector<Srt> tabs;
  std::map<Srt, int> index;
  ModulePtr rep;
};
SrtModule projective_module(const GeneralizedComposition& gc);
SrtModule projective_module(const Composition& a);

/// V_alpha: basis = SITs of shape alpha.
struct SitModule {
  Composition alpha;
  std::vector<Sit> tabs;
  std::map<Sit, int> index;
  ModulePtr rep;
};
SitModule dual_immaculate_module(const Composition& a);

ModulePtr simple_module(const Composition& beta);

/// Left regular representation of H_n(0); basis = pi_sigma, sigma in S_n
/// sorted by one-line notation.
struct RegularModule {
  std::vector<Permutation> perms;
  std::map<Permutation, int> index;
  ModulePtr rep;
};
RegularModule regular_module(int n);

struct DirectSum {
  ModulePtr rep;
  std::vector<ModulePtr> parts;
  std::vector<int> offset;  // offset of each part in the sum basis
};
DirectSum direct_sum(const std::vector<ModulePtr>& parts);

SparseVec apply_word(const ModuleRep& m, const std::vector<int>& word,
                     const SparseVec& v);
SparseVec apply_pibar(const ModuleRep& m, int i, const SparseVec& v);
SparseVec apply_pibar_word(const ModuleRep& m, const std::vector<int>& word,
                           const SparseVec& v);

/// Basis of Hom(M, N) as intertwiners (generic exact solver).
std::vector<ModuleMap> hom_space(const ModulePtr& m, const ModulePtr& n);
int hom_dim(const ModulePtr& m, const ModulePtr& n);

/// Hom(M, N) for combinatorial M generated by the given basis elements:
/// unknowns are only the images of the generators. Throws if the generators
/// fail to generate.
std::vector<ModuleMap> hom_from_generators(const ModulePtr& m,
                                           const std::vector<int>& gens,
                                           const ModulePtr& n);

/// Submodule spanned by a subset of basis vectors of a combinatorial module;
/// throws if the subset is not action-closed.
struct CoordSubmodule {
  ModulePtr rep;
  std::vector<int> parent_index;  // rep basis k -> parent basis index
  ModuleMap inclusion;
};
CoordSubmodule coordinate_submodule(const ModulePtr& m, std::vector<int> keep);

/// The zero module of rank n.
ModulePtr zero_module(int n);

/// Covector basis of Hom(M, F_beta).
std::vector<SparseVec> simple_covectors(const ModuleRep& m, const Composition& beta);
/// Joint eigenspace { v : pi_i v = chi_beta(i) v }; basis of Hom(F_beta, M).
std::vector<SparseVec> socle_pattern(const ModuleRep& m, const Composition& beta);
/// Same dimensions computed by the union-find shortcut; combinatorial
/// modules only.
int socle_pattern_dim_fast(const ModuleRep& m, const Composition& beta);
/// Basis vectors of the joint eigenspace via the same shortcut.
std::vector<SparseVec> socle_pattern_fast(const ModuleRep& m,
                                          const Composition& beta);

/// Vectors spanning rad(M) = intersection of kernels of all maps to simples.
Span radical(const ModuleRep& m);
/// soc(M) decomposed by pattern; only nonzero patterns are listed.
std::vector<std::pair<Composition, std::vector<SparseVec>>> socle(const ModuleRep& m);
Span socle_span(const ModuleRep& m);
Character socle_character(const ModuleRep& m);

struct SubModule {
  ModulePtr rep;
  ModuleMap inclusion;  // rep -> parent
  Span span;
};
/// Smallest submodule containing the given vectors.
SubModule submodule(const ModulePtr& m, std::vector<SparseVec> gens);

struct QuotientModule {
  ModulePtr rep;
  ModuleMap projection;  // parent -> rep
};
/// Quotient by a submodule span (must be action-closed).
QuotientModule quotient(const ModulePtr& m, const Span& sub);

SubModule kernel_module(const ModuleMap& f);
SubModule image_module(const ModuleMap& f);
QuotientModule cokernel_module(const ModuleMap& f);

Character composition_multiplicities(const ModulePtr& m);
std::vector<Character> radical_filtration(const ModulePtr& m);

/// Structured relation check: returns human-readable violations, empty if
/// the generator matrices satisfy the 0-Hecke relations.
std::vector<std::string> check_relations(const ModuleRep& m);

std::string module_to_json(const ModuleRep& m);

}  // namespace hecke
