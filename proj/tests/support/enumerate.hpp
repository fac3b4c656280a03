#pragma once
// Exhaustive generators over abacus configurations, used as test oracles.

#include <optional>
#include <vector>

#include <cryst/abacus.hpp>

#include "support/oracles.hpp"

namespace oracle {

// All descending configurations with the given bottom-up charges and total
// weight at most maxw. Rows are grown bottom-up; each candidate row must stay
// beadwise below its predecessor, and the cyclic wrap is checked at the end.
inline std::vector<cryst::AbacusConfig> descending_ball(cryst::Int n,
                                                        const std::vector<cryst::Int>& charges,
                                                        cryst::Int maxw) {
  std::vector<std::vector<cryst::Partition>> pool((std::size_t)maxw + 1);
  for (cryst::Partition& p : partitions_up_to(maxw)) {
    cryst::Int w = p.total();
    pool[(std::size_t)w].push_back(std::move(p));
  }
  std::vector<cryst::AbacusConfig> out;
  std::vector<cryst::BeadRow> cur;
  auto rec = [&](auto&& self, std::size_t j, cryst::Int left) -> void {
    if (j == charges.size()) {
      if (cryst::beadwise_leq(cur.front().shifted(-n), cur.back()))
        out.push_back(cryst::AbacusConfig(n, cur));
      return;
    }
    for (cryst::Int w = 0; w <= left; ++w)
      for (const cryst::Partition& p : pool[(std::size_t)w]) {
        cryst::BeadRow r(charges[j], p);
        if (j > 0 && !cryst::beadwise_leq(r, cur.back())) continue;
        cur.push_back(r);
        self(self, j + 1, left - w);
        cur.pop_back();
      }
  };
  rec(rec, 0, maxw);
  return out;
}

// Reference crystal operators with a deliberately oversized bracket window,
// for checking that the production window loses nothing.
inline std::vector<std::pair<cryst::Int, cryst::Int>> wide_brackets(const cryst::AbacusConfig& a,
                                                                    int i) {
  std::vector<std::pair<cryst::Int, cryst::Int>> spots;  // (gap, row), color-i gaps only
  cryst::Int pad = 3 * a.n() + 2;
  cryst::Int lo = a.row(0).solid_below(), hi = a.row(0).last_bead();
  for (const cryst::BeadRow& r : a.rows()) {
    lo = std::min(lo, r.solid_below());
    hi = std::max(hi, r.last_bead());
  }
  for (cryst::Int g = lo - pad; g <= hi + pad; ++g) {
    if (cryst::floor_mod(g - i, a.n()) != 0) continue;
    for (cryst::Int j = 0; j < a.levels(); ++j) {
      bool below = a.row(j).occupied(g - 1), here = a.row(j).occupied(g);
      if (below != here) spots.push_back({g, j});
    }
  }
  return spots;
}

inline std::optional<cryst::AbacusConfig> wide_f(const cryst::AbacusConfig& a, int i) {
  auto spots = wide_brackets(a, i);
  std::vector<std::pair<cryst::Int, cryst::Int>> word;
  for (auto& [g, j] : spots)
    word.push_back(a.row(j).occupied(g - 1) ? std::pair<cryst::Int, cryst::Int>{0, 1}
                                            : std::pair<cryst::Int, cryst::Int>{1, 0});
  cryst::SignatureScan s = cryst::scan_signature(word);
  if (s.first_open < 0) return std::nullopt;
  auto [g, j] = spots[(std::size_t)s.first_open];
  return a.with_row(j, a.row(j).moved(g - 1, +1));
}

inline std::optional<cryst::AbacusConfig> wide_e(const cryst::AbacusConfig& a, int i) {
  auto spots = wide_brackets(a, i);
  std::vector<std::pair<cryst::Int, cryst::Int>> word;
  for (auto& [g, j] : spots)
    word.push_back(a.row(j).occupied(g - 1) ? std::pair<cryst::Int, cryst::Int>{0, 1}
                                            : std::pair<cryst::Int, cryst::Int>{1, 0});
  cryst::SignatureScan s = cryst::scan_signature(word);
  if (s.last_close < 0) return std::nullopt;
  auto [g, j] = spots[(std::size_t)s.last_close];
  return a.with_row(j, a.row(j).moved(g, -1));
}

// Strand displacement counts measured on the untouched configuration: the
// k-th entry is how far strand k sits above strand k+1, maximized over the
// cyclic row index.
inline cryst::Partition shift_profile(const cryst::AbacusConfig& a) {
  std::vector<cryst::Int> m((std::size_t)a.max_depth(), 0);
  for (cryst::Int i = 1; i <= (cryst::Int)m.size(); ++i) {
    cryst::Int lift = 0;
    while (true) {
      bool ok = true;
      for (cryst::Int j = 0; j < a.levels() && ok; ++j)
        ok = a.strand(i, j + lift + 1) > a.strand(i + 1, j);
      if (!ok) break;
      ++lift;
    }
    m[(std::size_t)(i - 1)] = lift;
  }
  std::vector<cryst::Int> parts;
  for (cryst::Int k = 1; k <= (cryst::Int)m.size(); ++k) {
    cryst::Int sum = 0;
    for (cryst::Int i = k; i <= (cryst::Int)m.size(); ++i) sum += m[(std::size_t)(i - 1)];
    parts.push_back(sum);
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return cryst::Partition(std::move(parts));
}

// Confluence oracle: keep applying the first applicable downward strand shift
// in any order until none applies.
inline cryst::AbacusConfig greedy_tighten(cryst::AbacusConfig a) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (cryst::Int k = 1; k <= a.max_depth(); ++k)
      if (cryst::can_tighten(a, k)) {
        a = cryst::tighten(a, k);
        moved = true;
        break;
      }
  }
  return a;
}

}  // namespace oracle
