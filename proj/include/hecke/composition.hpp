#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

/// A composition of n: an ordered list of positive parts. The empty
/// composition is the unique composition of 0.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  Composition(std::initializer_list<int> p) : parts(p) { validate(); }
  explicit Composition(std::vector<int> p) : parts(std::move(p)) { validate(); }

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  int operator[](int i) const { return parts.at(i); }  // 0-based

  auto operator<=>(const Composition&) const = default;

  void validate() const;
};

/// A generalized composition: a formal sum of nonempty compositions.
struct GeneralizedComposition {
  std::vector<Composition> blocks;

  GeneralizedComposition() = default;
  explicit GeneralizedComposition(std::vector<Composition> b);
  GeneralizedComposition(std::initializer_list<Composition> b);

  int size() const;
  int num_blocks() const { return static_cast<int>(blocks.size()); }

  auto operator<=>(const GeneralizedComposition&) const = default;
};

// set(alpha): proper partial sums of the parts.
std::set<int> descent_set(const Composition& a);
// comp(I): inverse of descent_set on subsets of [n-1].
Composition composition_from_set(const std::set<int>& I, int n);

Composition reverse(const Composition& a);
Composition concat(const Composition& a, const Composition& b);
Composition near_concat(const Composition& a, const Composition& b);

/// All 2^(p-1) resolutions of the p-1 block junctions into concatenation or
/// near concatenation. Order: binary counter over junctions, concatenation
/// first (bit 0), junction 0 least significant.
std::vector<Composition> bracket_expansion(const GeneralizedComposition& gc);

/// Lexicographic comparison of two compositions of the same size.
/// Throws std::invalid_argument on size mismatch.
int lex_compare(const Composition& a, const Composition& b);
bool lex_less(const Composition& a, const Composition& b);
bool lex_leq(const Composition& a, const Composition& b);

/// calI(alpha) = { 1 <= i <= l-1 : alpha_{i+1} != 1 }, 1-based.
std::set<int> cal_I(const Composition& a);

/// alpha^(i) for i in calI(alpha): two blocks, the tail block dropped when
/// i = l(alpha)-1.
GeneralizedComposition alpha_gen_i(const Composition& a, int i);

/// calJ(alpha) = union of [alpha^(i)] over i in calI(alpha), as a set.
std::set<Composition> cal_J(const Composition& a);

/// calK(alpha) = {0} u { i : alpha_i > 1 }, returned sorted (k_0 = 0 first).
std::vector<int> cal_K(const Composition& a);

/// alpha-hat. For all-ones alpha (m = 0) this degenerates to the single
/// block (1^l).
GeneralizedComposition alpha_hat(const Composition& a);

/// alpha-hat^(j) for 1 <= j <= m. Length-0 blocks are dropped.
GeneralizedComposition alpha_hat_j(const Composition& a, int j);

/// calL(alpha): multiset union of [alpha-hat^(j)] over 1 <= j <= m.
std::map<Composition, int> cal_L(const Composition& a);

/// True when every part after the first equals 1 (hook shape (a,1^k)).
/// For these alpha the module V_alpha is projective-injective: iota is an
/// isomorphism and the cosyzygy vanishes.
bool is_hook(const Composition& a);

/// All compositions of n, sorted lexicographically ascending.
std::vector<Composition> compositions_of(int n);

// Text formats: "2,1,3" for compositions, "2,1|1" for generalized ones.
std::string to_string(const Composition& a);
std::string to_string(const GeneralizedComposition& gc);
Composition parse_composition(const std::string& s);
GeneralizedComposition parse_generalized(const std::string& s);

}  // namespace hecke
