#pragma once
// Cylindric plane partitions: cylindrically periodic arrays of box piles, in
// weight-preserving bijection with descending multirow bead configurations.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <cryst/abacus.hpp>
#include <cryst/crystal.hpp>
#include <cryst/partition.hpp>
#include <cryst/weights.hpp>

namespace cryst {

// Type (n, l): l diagonal slices pi_0, ..., pi_{l-1}, where slice i is a
// charged partition with entries pi(i, j) on diagonals j >= charge(i).
// Entries decrease weakly along each slice and from slice i to slice i+1,
// and the cylinder closes up via pi(i + l, j) = pi(i, j + n), so charges
// never increase and wrap around with charge(l) = charge(0) - n.
class CylindricPartition {
 public:
  CylindricPartition(Int n, std::vector<ChargedPartition> rows)
      : n_(n), rows_(std::move(rows)) {
    if (n_ < 1) throw std::invalid_argument("need at least one color");
    if (rows_.empty()) throw std::invalid_argument("need at least one slice");
    Int l = levels();
    for (Int i = 0; i < l; ++i) {
      if (charge(i + 1) > charge(i))
        throw std::invalid_argument("slice charges must not increase");
      Int hi = std::max(support_end(i), support_end(i + 1));
      for (Int j = charge(i); j < hi; ++j)
        if (entry(i, j) < entry(i + 1, j))
          throw std::invalid_argument("slices must shrink going down the cylinder");
    }
  }

  Int n() const { return n_; }
  Int levels() const { return (Int)rows_.size(); }
  const std::vector<ChargedPartition>& rows() const { return rows_; }
  const ChargedPartition& row(Int i) const { return rows_.at((std::size_t)i); }

  // Slice data continued to all i by the periodicity pi(i + l, j) = pi(i, j + n).
  Int charge(Int i) const {
    Int l = levels();
    return rows_[(std::size_t)floor_mod(i, l)].charge - n_ * floor_div(i, l);
  }
  Int entry(Int i, Int j) const {
    Int l = levels();
    const ChargedPartition& r = rows_[(std::size_t)floor_mod(i, l)];
    Int jj = j + n_ * floor_div(i, l);
    if (jj < r.charge) throw std::out_of_range("diagonal before the start of the slice");
    return r.parts.part(jj - r.charge + 1);
  }
  bool defined(Int i, Int j) const { return j >= charge(i); }
  // First diagonal past the nonzero entries of slice i.
  Int support_end(Int i) const {
    Int l = levels();
    return charge(i) + (Int)rows_[(std::size_t)floor_mod(i, l)].parts.rows();
  }

  // Total of the entries over one period.
  Int weight() const {
    Int w = 0;
    for (const ChargedPartition& r : rows_) w += r.parts.total();
    return w;
  }

  bool operator==(const CylindricPartition&) const = default;

  std::string str() const {
    std::string s = "n=" + std::to_string(n_);
    for (const ChargedPartition& r : rows_)
      s += "|" + std::to_string(r.charge) + ":" + r.parts.str();
    return s;
  }

 private:
  Int n_;
  std::vector<ChargedPartition> rows_;
};

// Slice i lists, per diagonal, how many beads of row i sit to the right of
// each gap; that count sequence is the conjugate of the row's partition.
inline CylindricPartition abacus_to_cpp(const AbacusConfig& a) {
  if (!is_descending(a)) throw std::invalid_argument("configuration is not descending");
  std::vector<ChargedPartition> rows;
  rows.reserve(a.rows().size());
  for (const BeadRow& r : a.rows())
    rows.push_back(ChargedPartition{r.charge(), r.partition().conjugate()});
  return CylindricPartition(a.n(), std::move(rows));
}

inline AbacusConfig cpp_to_abacus(const CylindricPartition& c) {
  std::vector<BeadRow> rows;
  rows.reserve(c.rows().size());
  for (const ChargedPartition& r : c.rows())
    rows.emplace_back(r.charge, r.parts.conjugate());
  return AbacusConfig(c.n(), std::move(rows));
}

// The boundary weight: slice i starts on diagonal charge(i), and each slice
// contributes the fundamental weight of that diagonal's residue.
inline DominantWeight lambda_of_cpp(const CylindricPartition& c) {
  std::vector<Int> m((std::size_t)c.n(), 0);
  for (const ChargedPartition& r : c.rows())
    m[(std::size_t)floor_mod(r.charge, c.n())] += 1;
  return DominantWeight{std::move(m)};
}

// Reflect the cylinder in a vertical axis: diagonal slices and column
// diagonals trade places, giving a type (l, n) object with the same entries
// read down the columns. Involutive and weight-preserving.
inline CylindricPartition reflect(const CylindricPartition& c) {
  Int n = c.n(), l = c.levels();
  std::vector<ChargedPartition> rows;
  rows.reserve((std::size_t)n);
  for (Int j = 0; j < n; ++j) {
    Int d = 0;  // first slice index whose domain reaches column j
    for (const ChargedPartition& r : c.rows()) d += -floor_div(j - r.charge, n);
    std::vector<Int> col;
    for (Int i = d; c.entry(i, j) > 0; ++i) col.push_back(c.entry(i, j));
    rows.push_back(ChargedPartition{d, Partition(std::move(col))});
  }
  return CylindricPartition(l, std::move(rows));
}

namespace detail {

struct BoxItem {
  Int t;      // l * (height function) = n*slice + l*(diagonal - box height)
  Int slice;  // in [0, l)
  Int diag;
  bool open;  // true: addable box, false: removable box
};

// All color-i boxes that could be added to or removed from one period,
// sorted by the height function (strictly increasing on these boxes).
inline std::vector<BoxItem> box_items(const CylindricPartition& c, int i) {
  Int n = c.n(), l = c.levels();
  std::vector<BoxItem> items;
  for (Int r = 0; r < l; ++r) {
    Int lo = c.charge(r), hi = c.support_end(r);
    for (Int j = lo; j <= hi; ++j) {
      Int v = c.entry(r, j);
      if ((j == lo || c.entry(r, j - 1) > v) && floor_mod(j - v, n) == i)
        items.push_back({n * r + l * (j - v - 1), r, j, true});
      if (j < hi && v > 0 && c.entry(r, j + 1) < v && floor_mod(j - v + 1, n) == i)
        items.push_back({n * r + l * (j - v), r, j, false});
    }
  }
  std::sort(items.begin(), items.end(),
            [](const BoxItem& a, const BoxItem& b) { return a.t < b.t; });
  for (std::size_t k = 1; k < items.size(); ++k)
    if (items[k - 1].t == items[k].t)
      throw std::logic_error("two candidate boxes share a height value");
  return items;
}

inline CylindricPartition with_box_delta(const CylindricPartition& c, Int slice, Int diag,
                                         Int delta) {
  std::vector<ChargedPartition> rows = c.rows();
  ChargedPartition& r = rows[(std::size_t)slice];
  std::vector<Int> parts = r.parts.parts();
  std::size_t idx = (std::size_t)(diag - r.charge);
  if (idx == parts.size()) parts.push_back(0);
  parts[idx] += delta;
  r.parts = Partition(std::move(parts));
  return CylindricPartition(c.n(), std::move(rows));
}

}  // namespace detail

// Lowering operator: add the color-i box of the first surviving addable
// bracket, reading the candidates in increasing height order.
inline std::optional<CylindricPartition> cpp_f(const CylindricPartition& c, int i) {
  std::vector<detail::BoxItem> items = detail::box_items(c, i);
  std::vector<std::pair<Int, Int>> word;
  word.reserve(items.size());
  for (const detail::BoxItem& it : items)
    word.push_back(it.open ? std::pair<Int, Int>{0, 1} : std::pair<Int, Int>{1, 0});
  SignatureScan s = scan_signature(word);
  if (s.first_open < 0) return std::nullopt;
  const detail::BoxItem& it = items[(std::size_t)s.first_open];
  return detail::with_box_delta(c, it.slice, it.diag, +1);
}

// Raising operator: remove the box of the last surviving removable bracket.
inline std::optional<CylindricPartition> cpp_e(const CylindricPartition& c, int i) {
  std::vector<detail::BoxItem> items = detail::box_items(c, i);
  std::vector<std::pair<Int, Int>> word;
  word.reserve(items.size());
  for (const detail::BoxItem& it : items)
    word.push_back(it.open ? std::pair<Int, Int>{0, 1} : std::pair<Int, Int>{1, 0});
  SignatureScan s = scan_signature(word);
  if (s.last_close < 0) return std::nullopt;
  const detail::BoxItem& it = items[(std::size_t)s.last_close];
  return detail::with_box_delta(c, it.slice, it.diag, -1);
}

struct CppModel {
  using Elem = CylindricPartition;

  Int n;

  Int colors() const { return n; }
  Int cartan(int i, int j) const { return affine_cartan(n, i, j); }
  std::optional<CylindricPartition> f(const CylindricPartition& c, int i) const {
    return cpp_f(c, i);
  }
  std::optional<CylindricPartition> e(const CylindricPartition& c, int i) const {
    return cpp_e(c, i);
  }
  std::string key(const CylindricPartition& c) const { return c.str(); }
};

// Every cylindric plane partition with the given slice charges and weight at
// most max_weight, each exactly once.
inline std::vector<CylindricPartition> enumerate_cpps(Int n, const std::vector<Int>& charges,
                                                      Int max_weight) {
  if (n < 1 || charges.empty()) throw std::invalid_argument("need a color count and charges");
  Int l = (Int)charges.size();
  for (Int i = 0; i + 1 < l; ++i)
    if (charges[(std::size_t)i + 1] > charges[(std::size_t)i])
      throw std::invalid_argument("slice charges must not increase");
  if (charges[0] - n > charges[(std::size_t)(l - 1)])
    throw std::invalid_argument("slice charges must not increase");

  std::vector<CylindricPartition> out;
  std::vector<std::vector<Int>> built((std::size_t)l);

  // Entry of a built slice at a diagonal, once row r < built.size() is fixed.
  auto built_entry = [&](Int r, Int j) -> Int {
    Int idx = j - charges[(std::size_t)r];
    const std::vector<Int>& p = built[(std::size_t)r];
    return (idx >= 0 && idx < (Int)p.size()) ? p[(std::size_t)idx] : 0;
  };

  auto fill = [&](auto&& self, Int r, Int budget) -> void {
    if (r == l) {
      // Close the cylinder: the last slice must dominate the first, shifted.
      Int lo = charges[(std::size_t)(l - 1)];
      Int hi = std::max(lo + (Int)built[(std::size_t)(l - 1)].size(),
                        charges[0] - n + (Int)built[0].size());
      for (Int j = lo; j < hi; ++j)
        if (built_entry(l - 1, j) < built_entry(0, j + n)) return;
      std::vector<ChargedPartition> rows;
      rows.reserve((std::size_t)l);
      for (Int i = 0; i < l; ++i)
        rows.push_back(ChargedPartition{charges[(std::size_t)i],
                                        Partition(std::vector<Int>(built[(std::size_t)i]))});
      out.emplace_back(n, std::move(rows));
      return;
    }
    std::vector<Int>& p = built[(std::size_t)r];
    auto grow = [&](auto&& gself, Int left) -> void {
      self(self, r + 1, left);  // stop this slice here
      Int j = charges[(std::size_t)r] + (Int)p.size();
      Int cap = p.empty() ? left : std::min(left, p.back());
      if (r > 0 && j >= charges[(std::size_t)r - 1])
        cap = std::min(cap, built_entry(r - 1, j));
      for (Int v = 1; v <= cap; ++v) {
        p.push_back(v);
        gself(gself, left - v);
        p.pop_back();
      }
    };
    grow(grow, budget);
  };
  fill(fill, 0, max_weight);
  return out;
}

}  // namespace cryst
