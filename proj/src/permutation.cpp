#include "hecke/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

Permutation::Permutation(std::vector<int> oneline) : w(std::move(oneline)) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int v : w) {
    if (v < 1 || v > n() || seen[v])
      throw std::invalid_argument("not a permutation of [n]");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("simple: i out of range");
  auto p = identity(n);
  std::swap(p.w[i - 1], p.w[i]);
  return p;
}

Permutation Permutation::from_word(const std::vector<int>& word, int n) {
  auto p = identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    p = simple(*it, n) * p;
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (n() != rhs.n()) throw std::invalid_argument("rank mismatch");
  std::vector<int> v(w.size());
  for (int i = 1; i <= n(); ++i) v[i - 1] = (*this)(rhs(i));
  return Permutation(v);
}

Permutation Permutation::inverse() const {
  std::vector<int> v(w.size());
  for (int i = 1; i <= n(); ++i) v[w[i - 1] - 1] = i;
  return Permutation(v);
}

int length(const Permutation& s) {
  int inv = 0;
  for (int i = 0; i < s.n(); ++i)
    for (int j = i + 1; j < s.n(); ++j)
      if (s.w[i] > s.w[j]) ++inv;
  return inv;
}

std::set<int> left_descents(const Permutation& s) {
  // i is a left descent iff i+1 appears before i in one-line notation.
  std::vector<int> pos(s.n() + 1);
  for (int i = 1; i <= s.n(); ++i) pos[s.w[i - 1]] = i;
  std::set<int> out;
  for (int i = 1; i <= s.n() - 1; ++i)
    if (pos[i] > pos[i + 1]) out.insert(i);
  return out;
}

std::set<int> right_descents(const Permutation& s) {
  std::set<int> out;
  for (int i = 1; i <= s.n() - 1; ++i)
    if (s(i) > s(i + 1)) out.insert(i);
  return out;
}

bool leq_left_weak(const Permutation& s, const Permutation& r) {
  return length(r * s.inverse()) + length(s) == length(r);
}

bool bruhat_leq(const Permutation& s, const Permutation& r) {
  if (length(s) > length(r)) return false;
  if (s == r) return true;
  auto dl = left_descents(r);
  if (dl.empty()) return s == r;
  int i = *dl.begin();
  auto si = Permutation::simple(i, r.n());
  auto r2 = si * r;
  if (left_descents(s).count(i)) return bruhat_leq(si * s, r2);
  return bruhat_leq(s, r2);
}

std::vector<int> reduced_word(const Permutation& s) {
  std::vector<int> word;
  Permutation cur = s;
  for (;;) {
    auto d = left_descents(cur);
    if (d.empty()) break;
    int i = *d.begin();
    word.push_back(i);
    cur = Permutation::simple(i, cur.n()) * cur;
  }
  return word;
}

Permutation longest_parabolic(const std::set<int>& I, int n) {
  auto p = Permutation::identity(n);
  // reverse each maximal run of positions spanned by consecutive generators
  int i = 1;
  while (i <= n - 1) {
    if (!I.count(i)) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= n - 1 && I.count(j + 1)) ++j;
    std::reverse(p.w.begin() + (i - 1), p.w.begin() + (j + 1));
    i = j + 2;
  }
  return p;
}

Permutation longest_bi_increasing(int k1, int k2, int c, int n) {
  if (!(1 <= k1 && k1 <= c && c <= k2 && k2 <= n - 1))
    throw std::invalid_argument("longest_bi_increasing: bad interval");
  auto p = Permutation::identity(n);
  // positions k1..k2+1 permute values {k1..k2+1}; the first run takes the
  // top values, the second run the remaining ones, both increasing.
  int first_len = c - k1 + 1;
  int total = k2 + 2 - k1;
  for (int t = 0; t < first_len; ++t)
    p.w[k1 - 1 + t] = k1 + (total - first_len) + t;
  for (int t = 0; t < total - first_len; ++t)
    p.w[c + t] = k1 + t;
  return p;
}

std::vector<Permutation> bi_increasing_set(int k1, int k2, int c, int n) {
  std::vector<int> vals(k2 + 2 - k1);
  std::iota(vals.begin(), vals.end(), k1);
  std::vector<Permutation> out;
  std::sort(vals.begin(), vals.end());
  do {
    bool ok = true;
    for (int i = k1; i < c && ok; ++i)
      if (vals[i - k1] > vals[i - k1 + 1]) ok = false;
    for (int i = c + 1; i < k2 + 1 && ok; ++i)
      if (vals[i - k1] > vals[i - k1 + 1]) ok = false;
    if (ok) {
      auto p = Permutation::identity(n);
      for (int i = 0; i < static_cast<int>(vals.size()); ++i)
        p.w[k1 - 1 + i] = vals[i];
      out.push_back(p);
    }
  } while (std::next_permutation(vals.begin(), vals.end()));
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation(v));
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string to_string(const Permutation& s) {
  std::ostringstream os;
  for (int i = 0; i < s.n(); ++i) {
    if (i) os << ' ';
    os << s.w[i];
  }
  return os.str();
}

std::string word_string(const std::vector<int>& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 's' << w[i];
  }
  return os.str();
}

Permutation parse_permutation(const std::string& s) {
  std::istringstream is(s);
  std::vector<int> v;
  int x;
  while (is >> x) v.push_back(x);
  return Permutation(v);
}

}  // namespace hecke
