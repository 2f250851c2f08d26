#pragma once

#include <set>
#include <string>
#include <vector>

namespace hecke {

/// A permutation of [n] in one-line notation; w[i] = sigma(i+1).
struct Permutation {
  std::vector<int> w;

  Permutation() = default;
  explicit Permutation(std::vector<int> oneline);
  static Permutation identity(int n);
  static Permutation simple(int i, int n);  // s_i, 1 <= i <= n-1
  static Permutation from_word(const std::vector<int>& word, int n);

  int n() const { return static_cast<int>(w.size()); }
  int operator()(int i) const { return w.at(i - 1); }  // 1-based

  Permutation operator*(const Permutation& rhs) const;  // (this o rhs)(i)
  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;
};

int length(const Permutation& s);
std::set<int> left_descents(const Permutation& s);
std::set<int> right_descents(const Permutation& s);

/// sigma <=_L rho in left weak Bruhat order: l(rho sigma^-1) + l(sigma) = l(rho).
bool leq_left_weak(const Permutation& s, const Permutation& r);

/// Bruhat order.
bool bruhat_leq(const Permutation& s, const Permutation& r);

/// Canonical reduced word: repeatedly extract the smallest left descent.
/// sigma = s_{w[0]} s_{w[1]} ... s_{w[p-1]}.
std::vector<int> reduced_word(const Permutation& s);

/// Longest element of the parabolic subgroup generated by {s_i : i in I}.
Permutation longest_parabolic(const std::set<int>& I, int n);

/// Longest element of the bi-increasing set (S_n)_{[k1,k2]}^{(c)}:
/// sigma in the parabolic on [k1,k2] with sigma(k1)<...<sigma(c) and
/// sigma(c+1)<...<sigma(k2+1).
Permutation longest_bi_increasing(int k1, int k2, int c, int n);

/// All elements of (S_n)_{[k1,k2]}^{(c)} (brute force; small intervals only).
std::vector<Permutation> bi_increasing_set(int k1, int k2, int c, int n);

std::vector<Permutation> all_permutations(int n);

std::string to_string(const Permutation& s);        // "3 1 2"
std::string word_string(const std::vector<int>& w); // "s2 s1"
Permutation parse_permutation(const std::string& s);

}  // namespace hecke
