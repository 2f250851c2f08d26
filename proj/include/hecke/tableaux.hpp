#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke/composition.hpp"
#include "hecke/permutation.hpp"

namespace hecke {

/// Geometry of the generalized ribbon diagram rd(gc). Columns are numbered
/// globally left to right across blocks; rows from the top, consecutive
/// blocks stacked with no gap (block k+1 strictly northeast of block k).
struct RibbonShape {
  GeneralizedComposition gc;
  int n = 0;
  int ncols = 0;
  int nrows = 0;
  std::vector<int> col_height;    // 1-based column -> height
  std::vector<int> col_top;       // 1-based column -> top row (1 = top)
  std::vector<int> block_of_col;  // 1-based column -> block (1-based)

  RibbonShape() = default;
  explicit RibbonShape(GeneralizedComposition g);
  explicit RibbonShape(const Composition& a)
      : RibbonShape(a.empty() ? GeneralizedComposition{}
                              : GeneralizedComposition{a}) {}

  int row_of(int col, int idx) const { return col_top[col] + idx - 1; }
  // Boxes of a row as (col, idx), left to right.
  std::vector<std::pair<int, int>> row_boxes(int row) const;
};

/// A standard ribbon tableau: per global column, entries top to bottom.
struct Srt {
  std::vector<std::vector<int>> cols;  // cols[c-1] has col_height[c] entries

  auto operator<=>(const Srt&) const = default;
  int entry(int col, int idx) const { return cols[col - 1][idx - 1]; }
};

/// A standard immaculate tableau: per row, entries left to right.
struct Sit {
  std::vector<std::vector<int>> rows;

  auto operator<=>(const Sit&) const = default;
};

bool is_valid_srt(const RibbonShape& sh, const Srt& t);
bool is_valid_sit(const Composition& a, const Sit& t);

/// All SRTs of the shape, sorted lexicographically by reading word.
std::vector<Srt> enumerate_srt(const RibbonShape& sh);
/// All SITs of shape a, sorted lexicographically by row reading word.
std::vector<Sit> enumerate_sit(const Composition& a);

// Descents.
std::set<int> srt_descents(const RibbonShape& sh, const Srt& t);
std::set<int> sit_descents(const Composition& a, const Sit& t);
Composition descent_composition(const std::set<int>& des, int n);

/// Result of a generator acting on a tableau basis element.
enum class PiKind { Zero, Fixed, Moved };
struct PiSrt {
  PiKind kind;
  Srt moved;  // valid iff kind == Moved
};
struct PiSit {
  PiKind kind;
  Sit moved;
};

PiSrt pi_on_srt(const RibbonShape& sh, int i, const Srt& t);
PiSit pi_on_sit(const Composition& a, int i, const Sit& t);

/// Source tableau: fill columns left to right, top to bottom in each column.
Srt source_tableau(const RibbonShape& sh);
/// Sink tableau: fill rows top to bottom, left to right in each row.
Srt sink_tableau(const RibbonShape& sh);
/// Row filling of cd(a).
Sit sit_source(const Composition& a);

/// Reading word: rows bottom to top, left to right within each row.
std::vector<int> reading_word(const RibbonShape& sh, const Srt& t);
std::vector<int> sit_row_word(const Sit& t);

/// chi: the unique (beta in [gc], T' in SRT(beta)) with the same reading word.
std::pair<Composition, Srt> chi(const RibbonShape& sh, const Srt& t);
/// Inverse direction: the SRT of shape gc with the given reading word, if any.
std::optional<Srt> srt_from_reading_word(const RibbonShape& sh,
                                         const std::vector<int>& word);

/// L(tau) for tau in SRT(alpha^(i)): candidate filling of rd(alpha) plus
/// validity flag.
struct LResult {
  bool valid;
  Srt filling;  // meaningful iff valid
};
LResult L_map(const Composition& a, int i, const Srt& tau);

/// Section of L on { T : T_i^1 > T_{i+1}^1 }.
Srt tau_T(const Composition& a, int i, const Srt& t);

/// Strip data for the injective-hull constructions: boxes of S_{k_j} in
/// cd(alpha) transfer to rd(alpha-hat) as (col, idx) lists.
struct StripData {
  std::vector<int> K;  // cal_K(alpha), K[0] = 0
  int m = 0;
  // boxes of each strip in rd(alpha-hat), j = 0..m: list of (col, idx),
  // sorted in increasing entry order (top-to-bottom / left-to-right).
  std::vector<std::vector<std::pair<int, int>>> hat_boxes;
};
StripData strips(const Composition& a, const RibbonShape& hat_shape);

/// iota: SIT of shape alpha -> SRT of shape alpha-hat (strip-wise transfer).
Srt iota_tableau(const Composition& a, const RibbonShape& hat_shape,
                 const Sit& t);

/// Membership test for the iota image region:
/// T_j^{1+d_{j,m}} > T^1_{m+k_j-1} for all 1 <= j <= m.
bool in_iota_image_region(const Composition& a, const RibbonShape& hat_shape,
                          const Srt& t);

/// w_{T;j}: the greedy decreasing subword of the reading word.
std::vector<int> word_wTj(const Composition& a, const RibbonShape& hat_shape,
                          const Srt& t, int j);

/// A_{T;j} and the list of its subsets of size l(alpha)-k_j+1 (lex order).
struct CandidateSets {
  std::vector<int> A;                      // increasing
  std::vector<std::vector<int>> subsets;   // each increasing, lex order
};
CandidateSets candidate_sets(const Composition& a, const RibbonShape& hat_shape,
                             const Srt& t, int j);

/// sgn(A): parity of any minimal-length permutation carrying A^1_{T;j} to A.
int sign_of_subset(const std::vector<int>& A_all, const std::vector<int>& A);

/// tau_{T;j;A}: SRT of shape alpha-hat^(j) per conditions (i)-(v).
Srt tau_TjA(const Composition& a, const RibbonShape& hat_shape,
            const RibbonShape& hatj_shape, const Srt& t, int j,
            const std::vector<int>& A);

/// Strip boxes of rd(alpha-hat^(j)): r = -1..m shifted to index r+1.
std::vector<std::vector<std::pair<int, int>>> strips_hatj(
    const Composition& a, int j, const RibbonShape& hatj_shape);

// Serialization: rows comma-separated, "/" between rows, "|" between blocks.
std::string to_string(const RibbonShape& sh, const Srt& t);
std::string to_string(const Sit& t);
Srt parse_srt(const RibbonShape& sh, const std::string& s);
Sit parse_sit(const Composition& a, const std::string& s);

}  // namespace hecke
