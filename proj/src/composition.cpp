#include "hecke/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hecke {

int Composition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

void Composition::validate() const {
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
}

GeneralizedComposition::GeneralizedComposition(std::vector<Composition> b)
    : blocks(std::move(b)) {
  for (const auto& c : blocks)
    if (c.empty())
      throw std::invalid_argument("generalized composition blocks must be nonempty");
}

GeneralizedComposition::GeneralizedComposition(std::initializer_list<Composition> b)
    : GeneralizedComposition(std::vector<Composition>(b)) {}

int GeneralizedComposition::size() const {
  int s = 0;
  for (const auto& c : blocks) s += c.size();
  return s;
}

std::set<int> descent_set(const Composition& a) {
  std::set<int> out;
  int acc = 0;
  for (int i = 0; i + 1 < a.length(); ++i) {
    acc += a[i];
    out.insert(acc);
  }
  return out;
}

Composition composition_from_set(const std::set<int>& I, int n) {
  std::vector<int> parts;
  int prev = 0;
  for (int i : I) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("descent outside [n-1]");
    parts.push_back(i - prev);
    prev = i;
  }
  if (n - prev > 0) parts.push_back(n - prev);
  return Composition(parts);
}

Composition reverse(const Composition& a) {
  std::vector<int> p(a.parts.rbegin(), a.parts.rend());
  return Composition(p);
}

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> p = a.parts;
  p.insert(p.end(), b.parts.begin(), b.parts.end());
  return Composition(p);
}

Composition near_concat(const Composition& a, const Composition& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("near concatenation needs nonempty operands");
  std::vector<int> p = a.parts;
  p.back() += b[0];
  p.insert(p.end(), b.parts.begin() + 1, b.parts.end());
  return Composition(p);
}

std::vector<Composition> bracket_expansion(const GeneralizedComposition& gc) {
  const int p = gc.num_blocks();
  if (p == 0) return {Composition{}};
  std::vector<Composition> out;
  const int junctions = p - 1;
  for (int mask = 0; mask < (1 << junctions); ++mask) {
    Composition cur = gc.blocks[0];
    for (int j = 0; j < junctions; ++j)
      cur = (mask >> j & 1) ? near_concat(cur, gc.blocks[j + 1])
                            : concat(cur, gc.blocks[j + 1]);
    out.push_back(std::move(cur));
  }
  return out;
}

int lex_compare(const Composition& a, const Composition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("lex_compare needs compositions of equal size");
  if (a.parts < b.parts) return -1;
  if (b.parts < a.parts) return 1;
  return 0;
}

bool lex_less(const Composition& a, const Composition& b) { return lex_compare(a, b) < 0; }
bool lex_leq(const Composition& a, const Composition& b) { return lex_compare(a, b) <= 0; }

std::set<int> cal_I(const Composition& a) {
  std::set<int> out;
  for (int i = 1; i <= a.length() - 1; ++i)
    if (a[i] != 1) out.insert(i);  // a[i] is alpha_{i+1}, 1-based
  return out;
}

GeneralizedComposition alpha_gen_i(const Composition& a, int i) {
  auto I = cal_I(a);
  if (!I.count(i)) throw std::invalid_argument("alpha_gen_i: i not in calI(alpha)");
  std::vector<int> head(a.parts.begin(), a.parts.begin() + (i - 1));
  head.push_back(a[i - 1] + 1);
  head.push_back(a[i] - 1);
  std::vector<Composition> blocks{Composition(head)};
  if (i + 1 < a.length()) {
    std::vector<int> tail(a.parts.begin() + (i + 1), a.parts.end());
    blocks.push_back(Composition(tail));
  }
  return GeneralizedComposition(blocks);
}

std::set<Composition> cal_J(const Composition& a) {
  std::set<Composition> out;
  for (int i : cal_I(a))
    for (const auto& b : bracket_expansion(alpha_gen_i(a, i))) out.insert(b);
  return out;
}

std::vector<int> cal_K(const Composition& a) {
  std::vector<int> out{0};
  for (int i = 1; i <= a.length(); ++i)
    if (a[i - 1] > 1) out.push_back(i);
  return out;
}

GeneralizedComposition alpha_hat(const Composition& a) {
  if (a.empty()) throw std::invalid_argument("alpha_hat: empty composition");
  auto K = cal_K(a);
  const int m = static_cast<int>(K.size()) - 1;
  const int l = a.length();
  if (m == 0) {
    // all parts equal 1: single block (1^l)
    return GeneralizedComposition{Composition(std::vector<int>(l, 1))};
  }
  std::vector<Composition> blocks;
  for (int j = 1; j < m; ++j)
    blocks.push_back(Composition{a[K[j] - 1] - 1});
  std::vector<int> last{a[K[m] - 1]};
  last.insert(last.end(), l - 1, 1);
  blocks.push_back(Composition(last));
  return GeneralizedComposition(blocks);
}

GeneralizedComposition alpha_hat_j(const Composition& a, int j) {
  auto K = cal_K(a);
  const int m = static_cast<int>(K.size()) - 1;
  const int l = a.length();
  if (j < 1 || j > m) throw std::invalid_argument("alpha_hat_j: j out of range");
  const int kj = K[j];
  std::vector<Composition> blocks;
  if (j < m) {
    for (int r = 1; r < m; ++r) {
      int part = a[K[r] - 1] - 1 - (r == j ? 1 : 0);
      if (part > 0) blocks.push_back(Composition{part});
    }
    std::vector<int> big{a[K[m] - 1]};
    big.insert(big.end(), l - kj + 1, 1);
    blocks.push_back(Composition(big));
    if (kj - 1 > 0)
      blocks.push_back(Composition(std::vector<int>(kj - 1, 1)));
  } else {
    for (int r = 1; r < m; ++r)
      blocks.push_back(Composition{a[K[r] - 1] - 1});
    // (alpha_{k_m}-1, 1^{l-k_m+1}) near-concatenated with (1^{k_m-1});
    // the paper's own example and strip picture force the near concatenation.
    std::vector<int> big{a[K[m] - 1] - 1};
    big.insert(big.end(), l - kj + 1, 1);
    Composition head(big);
    if (kj - 1 > 0)
      head = near_concat(head, Composition(std::vector<int>(kj - 1, 1)));
    blocks.push_back(head);
  }
  return GeneralizedComposition(blocks);
}

std::map<Composition, int> cal_L(const Composition& a) {
  std::map<Composition, int> out;
  auto K = cal_K(a);
  const int m = static_cast<int>(K.size()) - 1;
  for (int j = 1; j <= m; ++j)
    for (const auto& b : bracket_expansion(alpha_hat_j(a, j))) out[b]++;
  return out;
}

bool is_hook(const Composition& a) {
  for (int i = 1; i < a.length(); ++i)
    if (a[i] != 1) return false;
  return !a.empty();
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = 1; k <= rem; ++k) {
      cur.push_back(k);
      self(self, rem - k);
      cur.pop_back();
    }
  };
  rec(rec, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Composition& a) {
  std::ostringstream os;
  for (int i = 0; i < a.length(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  return os.str();
}

std::string to_string(const GeneralizedComposition& gc) {
  std::ostringstream os;
  for (int b = 0; b < gc.num_blocks(); ++b) {
    if (b) os << '|';
    os << to_string(gc.blocks[b]);
  }
  return os.str();
}

Composition parse_composition(const std::string& s) {
  std::vector<int> parts;
  if (s.empty()) return Composition{};
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad composition: " + s);
    parts.push_back(v);
  }
  return Composition(parts);
}

GeneralizedComposition parse_generalized(const std::string& s) {
  std::vector<Composition> blocks;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, '|')) blocks.push_back(parse_composition(tok));
  if (blocks.empty()) throw std::invalid_argument("empty generalized composition");
  return GeneralizedComposition(blocks);
}

}  // namespace hecke
