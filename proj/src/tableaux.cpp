#include "hecke/tableaux.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

GeneralizedComposition wrap(const Composition& a) {
  if (a.empty()) return GeneralizedComposition{};
  return GeneralizedComposition{a};
}

}  // namespace

RibbonShape::RibbonShape(GeneralizedComposition g) : gc(std::move(g)) {
  n = gc.size();
  for (const auto& b : gc.blocks) ncols += b.length();
  col_height.assign(ncols + 1, 0);
  col_top.assign(ncols + 1, 0);
  block_of_col.assign(ncols + 1, 0);

  // per-block local row layout, then stack blocks (last block on top)
  const int p = gc.num_blocks();
  std::vector<int> block_rows(p), col0(p);
  int c = 1;
  for (int b = 0; b < p; ++b) {
    const auto& parts = gc.blocks[b].parts;
    int q = static_cast<int>(parts.size());
    block_rows[b] = std::accumulate(parts.begin(), parts.end(), 0) - (q - 1);
    col0[b] = c;
    c += q;
  }
  std::vector<int> offset(p, 0);  // rows above the block
  for (int b = p - 2; b >= 0; --b) offset[b] = offset[b + 1] + block_rows[b + 1];
  for (int b = 0; b < p; ++b) {
    const auto& parts = gc.blocks[b].parts;
    int top = block_rows[b] - parts[0] + 1;  // local top row of column 1
    for (int j = 0; j < static_cast<int>(parts.size()); ++j) {
      if (j > 0) top = top - parts[j] + 1;
      int col = col0[b] + j;
      col_height[col] = parts[j];
      col_top[col] = offset[b] + top;
      block_of_col[col] = b + 1;
    }
  }
  nrows = 0;
  for (int col = 1; col <= ncols; ++col)
    nrows = std::max(nrows, col_top[col] + col_height[col] - 1);
}

std::vector<std::pair<int, int>> RibbonShape::row_boxes(int row) const {
  std::vector<std::pair<int, int>> out;
  for (int col = 1; col <= ncols; ++col) {
    if (col_top[col] <= row && row <= col_top[col] + col_height[col] - 1)
      out.emplace_back(col, row - col_top[col] + 1);
  }
  return out;
}

bool is_valid_srt(const RibbonShape& sh, const Srt& t) {
  if (static_cast<int>(t.cols.size()) != sh.ncols) return false;
  std::vector<bool> seen(sh.n + 1, false);
  for (int c = 1; c <= sh.ncols; ++c) {
    if (static_cast<int>(t.cols[c - 1].size()) != sh.col_height[c]) return false;
    for (size_t k = 0; k < t.cols[c - 1].size(); ++k) {
      int v = t.cols[c - 1][k];
      if (v < 1 || v > sh.n || seen[v]) return false;
      seen[v] = true;
      if (k > 0 && t.cols[c - 1][k - 1] >= v) return false;  // columns increase
    }
  }
  for (int r = 1; r <= sh.nrows; ++r) {
    int prev = 0;
    for (auto [c, k] : sh.row_boxes(r)) {
      int v = t.entry(c, k);
      if (v <= prev) return false;  // rows increase
      prev = v;
    }
  }
  return true;
}

bool is_valid_sit(const Composition& a, const Sit& t) {
  if (static_cast<int>(t.rows.size()) != a.length()) return false;
  int n = a.size();
  std::vector<bool> seen(n + 1, false);
  int prev_first = 0;
  for (int r = 0; r < a.length(); ++r) {
    if (static_cast<int>(t.rows[r].size()) != a[r]) return false;
    for (size_t j = 0; j < t.rows[r].size(); ++j) {
      int v = t.rows[r][j];
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
      if (j > 0 && t.rows[r][j - 1] >= v) return false;
    }
    if (t.rows[r][0] <= prev_first) return false;  // first column increases
    prev_first = t.rows[r][0];
  }
  return true;
}

std::vector<Srt> enumerate_srt(const RibbonShape& sh) {
  // boxes in linear-extension order: a box becomes available once its upper
  // and left neighbors are filled
  struct Box {
    int col, idx;
    int above = -1, left = -1;  // indices into boxes
  };
  std::vector<Box> boxes;
  std::vector<std::vector<int>> box_id(sh.ncols + 1);
  for (int c = 1; c <= sh.ncols; ++c) {
    box_id[c].assign(sh.col_height[c] + 1, -1);
    for (int k = 1; k <= sh.col_height[c]; ++k) {
      box_id[c][k] = static_cast<int>(boxes.size());
      boxes.push_back({c, k, -1, -1});
    }
  }
  for (auto& b : boxes) {
    if (b.idx > 1) b.above = box_id[b.col][b.idx - 1];
    int row = sh.row_of(b.col, b.idx);
    int lc = b.col - 1;
    if (lc >= 1 && sh.col_top[lc] <= row &&
        row <= sh.col_top[lc] + sh.col_height[lc] - 1)
      b.left = box_id[lc][row - sh.col_top[lc] + 1];
  }
  std::vector<Srt> out;
  std::vector<int> fill(boxes.size(), 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v > sh.n) {
      Srt t;
      t.cols.assign(sh.ncols, {});
      for (int c = 1; c <= sh.ncols; ++c)
        for (int k = 1; k <= sh.col_height[c]; ++k)
          t.cols[c - 1].push_back(fill[box_id[c][k]]);
      out.push_back(std::move(t));
      return;
    }
    for (size_t b = 0; b < boxes.size(); ++b) {
      if (fill[b]) continue;
      if (boxes[b].above >= 0 && !fill[boxes[b].above]) continue;
      if (boxes[b].left >= 0 && !fill[boxes[b].left]) continue;
      fill[b] = v;
      self(self, v + 1);
      fill[b] = 0;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [&](const Srt& x, const Srt& y) {
    return reading_word(sh, x) < reading_word(sh, y);
  });
  return out;
}

std::vector<Sit> enumerate_sit(const Composition& a) {
  const int n = a.size();
  const int rows = a.length();
  std::vector<Sit> out;
  Sit cur;
  cur.rows.assign(rows, {});
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.push_back(cur);
      return;
    }
    for (int r = 0; r < rows; ++r) {
      int len = static_cast<int>(cur.rows[r].size());
      if (len == 0) {
        // first-column box: rows above must have started
        bool ok = true;
        for (int q = 0; q < r; ++q)
          if (cur.rows[q].empty()) ok = false;
        if (ok) {
          cur.rows[r].push_back(v);
          self(self, v + 1);
          cur.rows[r].pop_back();
        }
        break;  // cannot start a lower row before this one
      } else if (len < a[r]) {
        cur.rows[r].push_back(v);
        self(self, v + 1);
        cur.rows[r].pop_back();
      }
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const Sit& x, const Sit& y) {
    return sit_row_word(x) < sit_row_word(y);
  });
  return out;
}

namespace {

// value -> (col 1-based, idx 1-based)
std::vector<std::pair<int, int>> srt_positions(const RibbonShape& sh, const Srt& t) {
  std::vector<std::pair<int, int>> pos(sh.n + 1);
  for (int c = 1; c <= sh.ncols; ++c)
    for (int k = 1; k <= sh.col_height[c]; ++k) pos[t.entry(c, k)] = {c, k};
  return pos;
}

// value -> (row 1-based, col 1-based) within cd(a)
std::vector<std::pair<int, int>> sit_positions(const Composition& a, const Sit& t) {
  std::vector<std::pair<int, int>> pos(a.size() + 1);
  for (size_t r = 0; r < t.rows.size(); ++r)
    for (size_t j = 0; j < t.rows[r].size(); ++j)
      pos[t.rows[r][j]] = {static_cast<int>(r + 1), static_cast<int>(j + 1)};
  return pos;
}

}  // namespace

std::set<int> srt_descents(const RibbonShape& sh, const Srt& t) {
  auto pos = srt_positions(sh, t);
  std::set<int> out;
  for (int i = 1; i <= sh.n - 1; ++i) {
    int ri = sh.row_of(pos[i].first, pos[i].second);
    int rj = sh.row_of(pos[i + 1].first, pos[i + 1].second);
    if (ri >= rj) out.insert(i);  // i weakly below i+1
  }
  return out;
}

std::set<int> sit_descents(const Composition& a, const Sit& t) {
  auto pos = sit_positions(a, t);
  std::set<int> out;
  for (int i = 1; i <= a.size() - 1; ++i)
    if (pos[i].first < pos[i + 1].first) out.insert(i);  // i strictly above
  return out;
}

Composition descent_composition(const std::set<int>& des, int n) {
  return composition_from_set(des, n);
}

PiSrt pi_on_srt(const RibbonShape& sh, int i, const Srt& t) {
  if (i < 1 || i > sh.n - 1) throw std::invalid_argument("pi_on_srt: bad i");
  auto pos = srt_positions(sh, t);
  int ri = sh.row_of(pos[i].first, pos[i].second);
  int rj = sh.row_of(pos[i + 1].first, pos[i + 1].second);
  if (ri < rj) return {PiKind::Fixed, {}};
  if (ri == rj) return {PiKind::Zero, {}};
  Srt s = t;
  s.cols[pos[i].first - 1][pos[i].second - 1] = i + 1;
  s.cols[pos[i + 1].first - 1][pos[i + 1].second - 1] = i;
  return {PiKind::Moved, std::move(s)};
}

PiSit pi_on_sit(const Composition& a, int i, const Sit& t) {
  if (i < 1 || i > a.size() - 1) throw std::invalid_argument("pi_on_sit: bad i");
  auto pos = sit_positions(a, t);
  if (pos[i].first >= pos[i + 1].first) return {PiKind::Fixed, {}};
  if (pos[i].second == 1 && pos[i + 1].second == 1) return {PiKind::Zero, {}};
  Sit s = t;
  s.rows[pos[i].first - 1][pos[i].second - 1] = i + 1;
  s.rows[pos[i + 1].first - 1][pos[i + 1].second - 1] = i;
  return {PiKind::Moved, std::move(s)};
}

Srt source_tableau(const RibbonShape& sh) {
  Srt t;
  t.cols.assign(sh.ncols, {});
  int v = 1;
  for (int c = 1; c <= sh.ncols; ++c)
    for (int k = 1; k <= sh.col_height[c]; ++k) t.cols[c - 1].push_back(v++);
  return t;
}

Srt sink_tableau(const RibbonShape& sh) {
  Srt t;
  t.cols.assign(sh.ncols, {});
  for (int c = 1; c <= sh.ncols; ++c) t.cols[c - 1].assign(sh.col_height[c], 0);
  int v = 1;
  for (int r = 1; r <= sh.nrows; ++r)
    for (auto [c, k] : sh.row_boxes(r)) t.cols[c - 1][k - 1] = v++;
  return t;
}

Sit sit_source(const Composition& a) {
  Sit t;
  int v = 1;
  for (int r = 0; r < a.length(); ++r) {
    std::vector<int> row;
    for (int j = 0; j < a[r]; ++j) row.push_back(v++);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<int> reading_word(const RibbonShape& sh, const Srt& t) {
  std::vector<int> w;
  for (int r = sh.nrows; r >= 1; --r)
    for (auto [c, k] : sh.row_boxes(r)) w.push_back(t.entry(c, k));
  return w;
}

std::vector<int> sit_row_word(const Sit& t) {
  std::vector<int> w;
  for (const auto& row : t.rows) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::optional<Srt> srt_from_reading_word(const RibbonShape& sh,
                                         const std::vector<int>& word) {
  if (static_cast<int>(word.size()) != sh.n) return std::nullopt;
  Srt t;
  t.cols.assign(sh.ncols, {});
  for (int c = 1; c <= sh.ncols; ++c) t.cols[c - 1].assign(sh.col_height[c], 0);
  size_t p = 0;
  for (int r = sh.nrows; r >= 1; --r)
    for (auto [c, k] : sh.row_boxes(r)) t.cols[c - 1][k - 1] = word[p++];
  if (!is_valid_srt(sh, t)) return std::nullopt;
  return t;
}

std::pair<Composition, Srt> chi(const RibbonShape& sh, const Srt& t) {
  auto word = reading_word(sh, t);
  for (const auto& beta : bracket_expansion(sh.gc)) {
    RibbonShape bsh(wrap(beta));
    if (auto r = srt_from_reading_word(bsh, word)) return {beta, *r};
  }
  throw std::logic_error("chi: no matching composition (should be impossible)");
}

LResult L_map(const Composition& a, int i, const Srt& tau) {
  RibbonShape target(a);
  Srt f;
  f.cols.assign(a.length(), {});
  for (int p = 1; p <= a.length(); ++p) {
    std::vector<int> content;
    if (p == i) {
      content.assign(tau.cols[i - 1].begin() + 1, tau.cols[i - 1].end());
    } else if (p == i + 1) {
      content = tau.cols[i];
      content.push_back(tau.cols[i - 1][0]);
      std::sort(content.begin(), content.end());
    } else {
      content = tau.cols[p - 1];
    }
    f.cols[p - 1] = std::move(content);
  }
  bool ok = is_valid_srt(target, f);
  return {ok, std::move(f)};
}

Srt tau_T(const Composition& a, int i, const Srt& t) {
  if (t.cols[i - 1][0] <= t.cols[i][0])
    throw std::invalid_argument("tau_T: requires T_i^1 > T_{i+1}^1");
  Srt f;
  f.cols.assign(a.length(), {});
  for (int p = 1; p <= a.length(); ++p) {
    std::vector<int> content;
    if (p == i) {
      content = t.cols[i - 1];
      content.push_back(t.cols[i][0]);
      std::sort(content.begin(), content.end());
    } else if (p == i + 1) {
      content.assign(t.cols[i].begin() + 1, t.cols[i].end());
    } else {
      content = t.cols[p - 1];
    }
    f.cols[p - 1] = std::move(content);
  }
  return f;
}

StripData strips(const Composition& a, const RibbonShape& hat_shape) {
  StripData sd;
  sd.K = cal_K(a);
  sd.m = static_cast<int>(sd.K.size()) - 1;
  const int l = a.length();
  sd.hat_boxes.assign(sd.m + 1, {});
  if (sd.m == 0) {
    for (int c = 1; c <= l; ++c) sd.hat_boxes[0].emplace_back(c, 1);
    return sd;
  }
  for (int j = 1; j < sd.m; ++j)
    for (int k = 1; k <= hat_shape.col_height[j]; ++k)
      sd.hat_boxes[j].emplace_back(j, k);
  const int cm = sd.m;  // global column of the big block's vertical bar
  for (int k = 2; k <= hat_shape.col_height[cm]; ++k)
    sd.hat_boxes[sd.m].emplace_back(cm, k);
  for (int c = cm; c <= cm + l - 1; ++c)
    sd.hat_boxes[0].emplace_back(c, 1);
  return sd;
}

Srt iota_tableau(const Composition& a, const RibbonShape& hat_shape,
                 const Sit& t) {
  auto sd = strips(a, hat_shape);
  Srt out;
  out.cols.assign(hat_shape.ncols, {});
  for (int c = 1; c <= hat_shape.ncols; ++c)
    out.cols[c - 1].assign(hat_shape.col_height[c], 0);
  // strip contents of the SIT
  std::vector<std::vector<int>> content(sd.m + 1);
  for (int r = 0; r < a.length(); ++r) content[0].push_back(t.rows[r][0]);
  for (int j = 1; j <= sd.m; ++j) {
    int kj = sd.K[j];
    for (int q = 1; q < a[kj - 1]; ++q) content[j].push_back(t.rows[kj - 1][q]);
  }
  for (int j = 0; j <= sd.m; ++j) {
    assert(content[j].size() == sd.hat_boxes[j].size());
    for (size_t q = 0; q < content[j].size(); ++q) {
      auto [c, k] = sd.hat_boxes[j][q];
      out.cols[c - 1][k - 1] = content[j][q];
    }
  }
  return out;
}

bool in_iota_image_region(const Composition& a, const RibbonShape& hat_shape,
                          const Srt& t) {
  auto K = cal_K(a);
  const int m = static_cast<int>(K.size()) - 1;
  for (int j = 1; j <= m; ++j) {
    int lhs = (j < m) ? t.entry(j, 1) : t.entry(m, 2);
    int rhs = t.entry(m + K[j] - 1, 1);
    if (!(lhs > rhs)) return false;
  }
  (void)hat_shape;
  return true;
}

std::vector<int> word_wTj(const Composition& a, const RibbonShape& hat_shape,
                          const Srt& t, int j) {
  auto K = cal_K(a);
  const int m = static_cast<int>(K.size()) - 1;
  if (j < 1 || j > m) throw std::invalid_argument("word_wTj: j out of range");
  auto w = reading_word(hat_shape, t);
  const int n = hat_shape.n;
  const int bound = n - a.length();
  int u = 0;
  for (int r = 1; r <= j; ++r) u += a[K[r] - 1] - 1;  // u_1(j), 1-based
  std::vector<int> out{w[u - 1]};
  for (;;) {
    int next = 0;
    for (int v = u + 1; v <= bound; ++v) {
      if (w[v - 1] < w[u - 1]) {
        next = v;
        break;
      }
    }
    if (!next) break;
    u = next;
    out.push_back(w[u - 1]);
  }
  return out;
}

CandidateSets candidate_sets(const Composition& a, const RibbonShape& hat_shape,
                             const Srt& t, int j) {
  auto sd = strips(a, hat_shape);
  auto w = word_wTj(a, hat_shape, t, j);
  int endw = w.back();
  CandidateSets cs;
  for (auto [c, k] : sd.hat_boxes[0]) {
    int v = t.entry(c, k);
    if (v > endw) cs.A.push_back(v);
  }
  std::sort(cs.A.begin(), cs.A.end());
  int want = a.length() - sd.K[j] + 1;
  if (want >= 0 && want <= static_cast<int>(cs.A.size())) {
    std::vector<int> idx(want);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::vector<int> sub;
      for (int q : idx) sub.push_back(cs.A[q]);
      cs.subsets.push_back(std::move(sub));
      int p = want - 1;
      while (p >= 0 && idx[p] == static_cast<int>(cs.A.size()) - want + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < want; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  if (want == 0) cs.subsets = {{}};  // degenerate, not used in practice
  return cs;
}

int sign_of_subset(const std::vector<int>& A_all, const std::vector<int>& A) {
  const int s = static_cast<int>(A.size());
  const int q = static_cast<int>(A_all.size()) - s;
  long disp = 0;
  for (int tpos = 1; tpos <= s; ++tpos) {
    auto it = std::lower_bound(A_all.begin(), A_all.end(), A[tpos - 1]);
    if (it == A_all.end() || *it != A[tpos - 1])
      throw std::invalid_argument("sign_of_subset: A not contained in A_all");
    int i_t = static_cast<int>(it - A_all.begin()) + 1;
    disp += (q + tpos) - i_t;
  }
  return disp % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<std::pair<int, int>>> strips_hatj(
    const Composition& a, int j, const RibbonShape& hatj_shape) {
  auto K = cal_K(a);
  const int m = static_cast<int>(K.size()) - 1;
  const int l = a.length();
  const int kj = K[j];
  // result[r+1] = boxes of S'_{k_r}, r = -1..m
  std::vector<std::vector<std::pair<int, int>>> out(m + 2);
  int col = 1;
  if (j < m) {
    for (int r = 1; r < m; ++r) {
      int sz = a[K[r] - 1] - 1 - (r == j ? 1 : 0);
      for (int k = 1; k <= sz; ++k) out[r + 1].emplace_back(col, k);
      if (sz > 0) ++col;
    }
    // big block (alpha_{k_m}, 1^{l-kj+1})
    for (int k = 2; k <= a[K[m] - 1]; ++k) out[m + 1].emplace_back(col, k);
    for (int c = col; c <= col + l - kj + 1; ++c) out[0 + 1].emplace_back(c, 1);
    col += l - kj + 2;
    for (int c = col; c <= col + kj - 2; ++c) out[-1 + 1].emplace_back(c, 1);
  } else {
    for (int r = 1; r < m; ++r) {
      for (int k = 1; k <= a[K[r] - 1] - 1; ++k) out[r + 1].emplace_back(col, k);
      ++col;
    }
    // last block: (alpha_{k_m}-1, 1^{l-k_m}) then a height-2 column bridging
    // to the top row, then 1^{k_m-2}; degenerates to (alpha_{k_m}-1, 1^l)
    // when k_m = 1.
    for (int k = 2; k <= a[K[m] - 1] - 1; ++k) out[m + 1].emplace_back(col, k);
    if (kj == 1) {
      for (int c = col; c <= col + l; ++c) out[0 + 1].emplace_back(c, 1);
    } else {
      for (int c = col; c <= col + l - kj; ++c) out[0 + 1].emplace_back(c, 1);
      out[0 + 1].emplace_back(col + l - kj + 1, 2);
      out[-1 + 1].emplace_back(col + l - kj + 1, 1);
      for (int c = col + l - kj + 2; c <= col + l - 1; ++c)
        out[-1 + 1].emplace_back(c, 1);
    }
  }
  (void)hatj_shape;
  return out;
}

Srt tau_TjA(const Composition& a, const RibbonShape& hat_shape,
            const RibbonShape& hatj_shape, const Srt& t, int j,
            const std::vector<int>& A) {
  auto sd = strips(a, hat_shape);
  auto w = word_wTj(a, hat_shape, t, j);
  auto boxes = strips_hatj(a, j, hatj_shape);

  auto strip_content = [&](int r) {
    std::vector<int> v;
    for (auto [c, k] : sd.hat_boxes[r]) v.push_back(t.entry(c, k));
    std::sort(v.begin(), v.end());
    return v;
  };

  std::vector<std::vector<int>> content(sd.m + 2);
  // (i) S'_{k_-1} = T(S_{k_0}) \ A
  {
    auto s0 = strip_content(0);
    for (int v : s0)
      if (!std::binary_search(A.begin(), A.end(), v)) content[-1 + 1].push_back(v);
  }
  // (ii) S'_{k_0} = {end(w)} u A
  {
    std::vector<int> v = A;
    v.push_back(w.back());
    std::sort(v.begin(), v.end());
    content[0 + 1] = std::move(v);
  }
  // (iii) r < j unchanged
  for (int r = 1; r < j; ++r) content[r + 1] = strip_content(r);
  // (iv) strip j loses w_{u_1}
  {
    auto v = strip_content(j);
    v.erase(std::find(v.begin(), v.end(), w.front()));
    content[j + 1] = std::move(v);
  }
  // (v) r > j: substitute w_{u_i} -> w_{u_{i-1}}
  for (int r = j + 1; r <= sd.m; ++r) {
    auto v = strip_content(r);
    for (size_t i = 1; i < w.size(); ++i) {
      auto it = std::find(v.begin(), v.end(), w[i]);
      if (it != v.end()) *it = w[i - 1];
    }
    std::sort(v.begin(), v.end());
    content[r + 1] = std::move(v);
  }

  Srt out;
  out.cols.assign(hatj_shape.ncols, {});
  for (int c = 1; c <= hatj_shape.ncols; ++c)
    out.cols[c - 1].assign(hatj_shape.col_height[c], 0);
  for (int r = -1; r <= sd.m; ++r) {
    if (content[r + 1].size() != boxes[r + 1].size())
      throw std::logic_error("tau_TjA: strip size mismatch");
    for (size_t q = 0; q < boxes[r + 1].size(); ++q) {
      auto [c, k] = boxes[r + 1][q];
      out.cols[c - 1][k - 1] = content[r + 1][q];
    }
  }
  if (!is_valid_srt(hatj_shape, out))
    throw std::logic_error("tau_TjA: result is not a valid SRT");
  return out;
}

std::string to_string(const RibbonShape& sh, const Srt& t) {
  std::ostringstream os;
  for (int b = 1; b <= sh.gc.num_blocks(); ++b) {
    if (b > 1) os << '|';
    int top = sh.nrows + 1, bot = 0;
    for (int c = 1; c <= sh.ncols; ++c) {
      if (sh.block_of_col[c] != b) continue;
      top = std::min(top, sh.col_top[c]);
      bot = std::max(bot, sh.col_top[c] + sh.col_height[c] - 1);
    }
    bool first_row = true;
    for (int r = top; r <= bot; ++r) {
      if (!first_row) os << '/';
      first_row = false;
      bool first = true;
      for (auto [c, k] : sh.row_boxes(r)) {
        if (sh.block_of_col[c] != b) continue;
        if (!first) os << ',';
        first = false;
        os << t.entry(c, k);
      }
    }
  }
  return os.str();
}

std::string to_string(const Sit& t) {
  std::ostringstream os;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (r) os << '/';
    for (size_t j = 0; j < t.rows[r].size(); ++j) {
      if (j) os << ',';
      os << t.rows[r][j];
    }
  }
  return os.str();
}

Srt parse_srt(const RibbonShape& sh, const std::string& s) {
  Srt t;
  t.cols.assign(sh.ncols, {});
  for (int c = 1; c <= sh.ncols; ++c) t.cols[c - 1].assign(sh.col_height[c], 0);
  std::istringstream bs(s);
  std::string blk;
  int b = 0;
  while (std::getline(bs, blk, '|')) {
    ++b;
    int top = sh.nrows + 1, bot = 0;
    for (int c = 1; c <= sh.ncols; ++c) {
      if (sh.block_of_col[c] != b) continue;
      top = std::min(top, sh.col_top[c]);
      bot = std::max(bot, sh.col_top[c] + sh.col_height[c] - 1);
    }
    std::istringstream rs(blk);
    std::string row;
    int r = top;
    while (std::getline(rs, row, '/')) {
      std::istringstream es(row);
      std::string tok;
      auto boxes = sh.row_boxes(r);
      size_t q = 0;
      while (q < boxes.size() && sh.block_of_col[boxes[q].first] != b) ++q;
      while (std::getline(es, tok, ',')) {
        if (q >= boxes.size() || sh.block_of_col[boxes[q].first] != b)
          throw std::invalid_argument("parse_srt: too many entries in row");
        t.cols[boxes[q].first - 1][boxes[q].second - 1] = std::stoi(tok);
        ++q;
      }
      ++r;
    }
    if (r != bot + 1) throw std::invalid_argument("parse_srt: row count mismatch");
  }
  if (b != sh.gc.num_blocks())
    throw std::invalid_argument("parse_srt: block count mismatch");
  if (!is_valid_srt(sh, t)) throw std::invalid_argument("parse_srt: invalid SRT");
  return t;
}

Sit parse_sit(const Composition& a, const std::string& s) {
  Sit t;
  std::istringstream rs(s);
  std::string row;
  while (std::getline(rs, row, '/')) {
    std::vector<int> vals;
    std::istringstream es(row);
    std::string tok;
    while (std::getline(es, tok, ',')) vals.push_back(std::stoi(tok));
    t.rows.push_back(std::move(vals));
  }
  if (!is_valid_sit(a, t)) throw std::invalid_argument("parse_sit: invalid SIT");
  return t;
}

}  // namespace hecke
