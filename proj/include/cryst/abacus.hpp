#pragma once
// Multirow bead configurations and the affine crystal structure on them.
//
// A configuration has l rows of beads and n gap colors. Rows are indexed
// bottom-up; the gap between stored positions g-1 and g has color g mod n.
// Strand k collects the k-th bead of every row and extends to all integers j
// by psi^k_{j+l} = psi^k_j - n, which wraps the rows onto a cylinder.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <cryst/crystal.hpp>
#include <cryst/partition.hpp>
#include <cryst/weights.hpp>

namespace cryst {

class AbacusConfig {
 public:
  AbacusConfig(Int n, std::vector<BeadRow> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ < 2) throw std::invalid_argument("need at least two gap colors");
    if (rows_.empty()) throw std::invalid_argument("need at least one row");
  }

  Int n() const { return n_; }
  Int levels() const { return (Int)rows_.size(); }
  const std::vector<BeadRow>& rows() const { return rows_; }
  const BeadRow& row(Int j) const { return rows_.at((std::size_t)j); }

  // Position of the k-th bead in row j, for any integer j.
  Int strand(Int k, Int j) const {
    Int l = levels();
    return rows_[(std::size_t)floor_mod(j, l)].bead(k) - n_ * floor_div(j, l);
  }

  Int weight() const {
    Int w = 0;
    for (const BeadRow& r : rows_) w += r.partition().total();
    return w;
  }

  bool is_compact() const {
    for (const BeadRow& r : rows_)
      if (r.partition().rows() != 0) return false;
    return true;
  }

  // Deepest bead index displaced from its pushed-left position, in any row.
  Int max_depth() const {
    Int k = 0;
    for (const BeadRow& r : rows_) k = std::max(k, (Int)r.partition().rows());
    return k;
  }

  AbacusConfig compactified() const {
    std::vector<BeadRow> rows;
    rows.reserve(rows_.size());
    for (const BeadRow& r : rows_) rows.push_back(r.compactified());
    return AbacusConfig(n_, std::move(rows));
  }

  AbacusConfig shifted(Int d) const {
    std::vector<BeadRow> rows;
    rows.reserve(rows_.size());
    for (const BeadRow& r : rows_) rows.push_back(r.shifted(d));
    return AbacusConfig(n_, std::move(rows));
  }

  AbacusConfig with_row(Int j, BeadRow r) const {
    AbacusConfig out = *this;
    out.rows_.at((std::size_t)j) = std::move(r);
    return out;
  }

  bool operator==(const AbacusConfig&) const = default;

  std::string str() const {
    std::string s = "n=" + std::to_string(n_);
    for (const BeadRow& r : rows_)
      s += "|" + std::to_string(r.charge()) + ":" + r.partition().str();
    return s;
  }

 private:
  Int n_;
  std::vector<BeadRow> rows_;
};

// Every row dominates the one above it beadwise, cyclically.
inline bool is_descending(const AbacusConfig& a) {
  Int l = a.levels();
  for (Int j = 0; j + 1 < l; ++j)
    if (!beadwise_leq(a.row(j + 1), a.row(j))) return false;
  return beadwise_leq(a.row(0).shifted(-a.n()), a.row(l - 1));
}

namespace detail {

struct GapBracket {
  Int gap;    // bead enters this gap ("(") or leaves it (")")
  Int row;
  bool open;
};

// One bracket per gap of color i where a bead may move in or out, ordered by
// gap position and then bottom-up by row. Gaps outside [solid_below,
// last_bead+1] are either fully occupied or fully empty on both sides and
// contribute nothing.
inline std::vector<GapBracket> gap_brackets(const AbacusConfig& a, int i) {
  std::vector<GapBracket> out;
  for (Int j = 0; j < a.levels(); ++j) {
    const BeadRow& r = a.row(j);
    Int lo = r.solid_below(), hi = r.last_bead() + 1;
    for (Int g = lo + floor_mod((Int)i - lo, a.n()); g <= hi; g += a.n()) {
      bool below = r.occupied(g - 1), here = r.occupied(g);
      if (below && !here)
        out.push_back({g, j, true});
      else if (here && !below)
        out.push_back({g, j, false});
    }
  }
  std::sort(out.begin(), out.end(), [](const GapBracket& x, const GapBracket& y) {
    return x.gap != y.gap ? x.gap < y.gap : x.row < y.row;
  });
  return out;
}

inline std::vector<std::pair<Int, Int>> bracket_word(const std::vector<GapBracket>& items) {
  std::vector<std::pair<Int, Int>> word;
  word.reserve(items.size());
  for (const GapBracket& it : items)
    word.push_back(it.open ? std::pair<Int, Int>{0, 1} : std::pair<Int, Int>{1, 0});
  return word;
}

}  // namespace detail

inline std::optional<AbacusConfig> abacus_f(const AbacusConfig& a, int i) {
  auto items = detail::gap_brackets(a, i);
  SignatureScan s = scan_signature(detail::bracket_word(items));
  if (s.first_open < 0) return std::nullopt;
  const auto& it = items[(std::size_t)s.first_open];
  return a.with_row(it.row, a.row(it.row).moved(it.gap - 1, +1));
}

inline std::optional<AbacusConfig> abacus_e(const AbacusConfig& a, int i) {
  auto items = detail::gap_brackets(a, i);
  SignatureScan s = scan_signature(detail::bracket_word(items));
  if (s.last_close < 0) return std::nullopt;
  const auto& it = items[(std::size_t)s.last_close];
  return a.with_row(it.row, a.row(it.row).moved(it.gap, -1));
}

inline Int abacus_phi(const AbacusConfig& a, int i) {
  return scan_signature(detail::bracket_word(detail::gap_brackets(a, i))).unmatched_open;
}

inline Int abacus_epsilon(const AbacusConfig& a, int i) {
  return scan_signature(detail::bracket_word(detail::gap_brackets(a, i))).unmatched_close;
}

namespace detail {

// Per-strand bracket counts for a descending configuration: strand k yields
// the word ")"^a "("^b with a = #{beads of strand k at position = i mod n}
// and b = #{at i-1 mod n}. Strands are scanned deepest first; everything
// below the deepest displaced bead telescopes away except the opens of
// strand K+1, which survive as a single leading item.
struct StrandScan {
  std::vector<std::pair<Int, Int>> word;  // word[0] = strand K+1, word[t] = strand K+1-t
  Int depth;                              // K
};

inline StrandScan strand_word(const AbacusConfig& a, int i) {
  Int n = a.n(), l = a.levels(), K = a.max_depth();
  StrandScan out;
  out.depth = K;
  Int tail_open = 0;
  for (Int j = 0; j < l; ++j)
    if (floor_mod(a.row(j).charge() - K - i, n) == 0) ++tail_open;
  out.word.push_back({0, tail_open});
  for (Int k = K; k >= 1; --k) {
    Int close = 0, open = 0;
    for (Int j = 0; j < l; ++j) {
      Int d = floor_mod(a.strand(k, j) - i, n);
      if (d == 0) ++close;
      else if (d == n - 1) ++open;
    }
    out.word.push_back({close, open});
  }
  return out;
}

}  // namespace detail

// Crystal operators evaluated strand by strand; valid only on descending
// configurations, where they agree with abacus_f/abacus_e.
inline std::optional<AbacusConfig> abacus_f_descending(const AbacusConfig& a, int i) {
  if (!is_descending(a)) throw std::invalid_argument("configuration is not descending");
  detail::StrandScan sc = detail::strand_word(a, i);
  SignatureScan s = scan_signature(sc.word);
  if (s.first_open < 0) return std::nullopt;
  Int k = sc.depth + 1 - s.first_open;
  Int n = a.n(), best_j = -1, best_p = 0;
  for (Int j = 0; j < a.levels(); ++j) {
    Int p = a.strand(k, j);
    if (floor_mod(p - i + 1, n) != 0) continue;
    if (best_j < 0 || p < best_p) { best_j = j; best_p = p; }
  }
  return a.with_row(best_j, a.row(best_j).moved(best_p, +1));
}

inline std::optional<AbacusConfig> abacus_e_descending(const AbacusConfig& a, int i) {
  if (!is_descending(a)) throw std::invalid_argument("configuration is not descending");
  detail::StrandScan sc = detail::strand_word(a, i);
  SignatureScan s = scan_signature(sc.word);
  if (s.last_close < 0) return std::nullopt;
  Int k = sc.depth + 1 - s.last_close;
  Int n = a.n(), best_j = -1, best_p = 0;
  for (Int j = 0; j < a.levels(); ++j) {
    Int p = a.strand(k, j);
    if (floor_mod(p - i, n) != 0) continue;
    if (best_j < 0 || p >= best_p) { best_j = j; best_p = p; }
  }
  return a.with_row(best_j, a.row(best_j).moved(best_p, -1));
}

// Strand k may drop one slot along the cylinder when it stays above the next
// strand after the move.
inline bool can_tighten(const AbacusConfig& a, Int k) {
  if (k < 1) throw std::invalid_argument("strand index must be >= 1");
  for (Int j = 0; j < a.levels(); ++j)
    if (a.strand(k, j + 1) <= a.strand(k + 1, j)) return false;
  return true;
}

inline AbacusConfig tighten(const AbacusConfig& a, Int k) {
  if (!can_tighten(a, k)) throw std::invalid_argument("strand cannot shift down");
  std::vector<BeadRow> rows;
  rows.reserve((std::size_t)a.levels());
  for (Int j = 0; j < a.levels(); ++j)
    rows.push_back(a.row(j).with_bead(k, a.strand(k, j + 1)));
  return AbacusConfig(a.n(), std::move(rows));
}

inline bool can_untighten(const AbacusConfig& a, Int k) {
  if (k < 1) throw std::invalid_argument("strand index must be >= 1");
  if (k == 1) return true;
  for (Int j = 0; j < a.levels(); ++j)
    if (a.strand(k, j - 1) >= a.strand(k - 1, j)) return false;
  return true;
}

inline AbacusConfig untighten(const AbacusConfig& a, Int k) {
  if (!can_untighten(a, k)) throw std::invalid_argument("strand cannot shift up");
  std::vector<BeadRow> rows;
  rows.reserve((std::size_t)a.levels());
  for (Int j = 0; j < a.levels(); ++j)
    rows.push_back(a.row(j).with_bead(k, a.strand(k, j - 1)));
  return AbacusConfig(a.n(), std::move(rows));
}

inline bool is_tight(const AbacusConfig& a) {
  if (!is_descending(a)) throw std::invalid_argument("configuration is not descending");
  for (Int k = 1; k <= a.max_depth(); ++k)
    if (can_tighten(a, k)) return false;
  return true;
}

struct Decomposition {
  AbacusConfig tight;
  Partition shifts;  // part k = number of slots strand k dropped
};

// Tightens strands deepest-first until none can move. One pass suffices:
// shifting strand k can only re-enable strands above it, which are visited
// later. The shift counts always form a partition.
inline Decomposition decompose(const AbacusConfig& a) {
  if (!is_descending(a)) throw std::invalid_argument("configuration is not descending");
  AbacusConfig g = a;
  std::vector<Int> counts((std::size_t)a.max_depth(), 0);
  for (Int k = (Int)counts.size(); k >= 1; --k)
    while (can_tighten(g, k)) {
      g = tighten(g, k);
      ++counts[(std::size_t)(k - 1)];
    }
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return {std::move(g), Partition(std::move(counts))};
}

inline AbacusConfig recompose(const AbacusConfig& tight_config, const Partition& shifts) {
  if (!is_tight(tight_config)) throw std::invalid_argument("configuration is not tight");
  AbacusConfig a = tight_config;
  for (Int k = 1; k <= (Int)shifts.rows(); ++k)
    for (Int t = 0; t < shifts.part(k); ++t) a = untighten(a, k);
  return a;
}

// Highest-weight label of a compact configuration: one fundamental weight per
// row, indexed by the charge mod n.
inline DominantWeight lambda_of(const AbacusConfig& a) {
  if (!a.is_compact()) throw std::invalid_argument("configuration is not compact");
  std::vector<Int> m((std::size_t)a.n(), 0);
  for (const BeadRow& r : a.rows()) m[(std::size_t)floor_mod(r.charge(), a.n())] += 1;
  return DominantWeight{std::move(m)};
}

// Move the bottom row to the top, translated one full color cycle left.
inline AbacusConfig shift(const AbacusConfig& a) {
  std::vector<BeadRow> rows(a.rows().begin() + 1, a.rows().end());
  rows.push_back(a.row(0).shifted(-a.n()));
  return AbacusConfig(a.n(), std::move(rows));
}

struct AbacusModel {
  Int n;
  bool descending_rule = false;  // strand-by-strand scan; input must be descending

  using Elem = AbacusConfig;

  int colors() const { return (int)n; }
  Int cartan(int i, int j) const { return affine_cartan(n, i, j); }
  std::optional<Elem> f(const Elem& b, int i) const {
    return descending_rule ? abacus_f_descending(b, i) : abacus_f(b, i);
  }
  std::optional<Elem> e(const Elem& b, int i) const {
    return descending_rule ? abacus_e_descending(b, i) : abacus_e(b, i);
  }
  std::string key(const Elem& b) const { return b.str(); }
};

// Ribbon moves on a single partition. The column of boxes above content k is
// colored (floor(k / l) + offset) mod n; f_i adds an l-ribbon whose rightmost
// box has color i, choosing the first surviving "(" scanning contents left to
// right. Equivalent to the l-strand transport of abacus_f at charge 0.
inline std::optional<Partition> partition_f(const Partition& p, Int n, Int l, int i,
                                            Int offset = 0) {
  if (n < 2 || l < 1) throw std::invalid_argument("need n >= 2 colors and l >= 1");
  BeadRow r = partition_to_beads(p, 0);
  std::vector<Int> at;
  std::vector<std::pair<Int, Int>> word;
  for (Int k = r.solid_below(); k <= r.last_bead() + l; ++k) {
    if (floor_mod(floor_div(k, l) + offset - i, n) != 0) continue;
    bool tail = r.occupied(k - l), head = r.occupied(k);
    if (tail == head) continue;
    at.push_back(k);
    word.push_back(tail ? std::pair<Int, Int>{0, 1} : std::pair<Int, Int>{1, 0});
  }
  SignatureScan s = scan_signature(word);
  if (s.first_open < 0) return std::nullopt;
  Int k = at[(std::size_t)s.first_open];
  return r.moved(k - l, l).partition();
}

inline std::optional<Partition> partition_e(const Partition& p, Int n, Int l, int i,
                                            Int offset = 0) {
  if (n < 2 || l < 1) throw std::invalid_argument("need n >= 2 colors and l >= 1");
  BeadRow r = partition_to_beads(p, 0);
  std::vector<Int> at;
  std::vector<std::pair<Int, Int>> word;
  for (Int k = r.solid_below(); k <= r.last_bead() + l; ++k) {
    if (floor_mod(floor_div(k, l) + offset - i, n) != 0) continue;
    bool tail = r.occupied(k - l), head = r.occupied(k);
    if (tail == head) continue;
    at.push_back(k);
    word.push_back(tail ? std::pair<Int, Int>{0, 1} : std::pair<Int, Int>{1, 0});
  }
  SignatureScan s = scan_signature(word);
  if (s.last_close < 0) return std::nullopt;
  Int k = at[(std::size_t)s.last_close];
  return r.moved(k, -l).partition();
}

struct RibbonModel {
  Int n, l;
  Int offset = 0;

  using Elem = Partition;

  int colors() const { return (int)n; }
  Int cartan(int i, int j) const { return affine_cartan(n, i, j); }
  std::optional<Elem> f(const Elem& b, int i) const { return partition_f(b, n, l, i, offset); }
  std::optional<Elem> e(const Elem& b, int i) const { return partition_e(b, n, l, i, offset); }
  std::string key(const Elem& b) const { return b.str(); }
};

}  // namespace cryst
