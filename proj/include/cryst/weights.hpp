#pragma once
// Dominant integral weights for the affine A-series, stored as the vector of
// fundamental-weight multiplicities indexed by color 0..n-1.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <cryst/partition.hpp>

namespace cryst {

struct DominantWeight {
  std::vector<Int> mult;

  Int colors() const { return (Int)mult.size(); }
  Int level() const { return std::accumulate(mult.begin(), mult.end(), (Int)0); }

  bool operator==(const DominantWeight&) const = default;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < mult.size(); ++i) {
      if (mult[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (mult[i] != 1) s += std::to_string(mult[i]);
      s += "L" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }
};

// Pairing <alpha_j^vee, alpha_i> for the cyclic Dynkin diagram on n nodes.
inline Int affine_cartan(Int n, int i, int j) {
  if (n < 2) throw std::invalid_argument("need at least two colors");
  Int d = floor_mod((Int)i - (Int)j, n);
  if (d == 0) return 2;
  if (n == 2) return -2;
  return (d == 1 || d == n - 1) ? -1 : 0;
}

// The weight seen after reflecting the cylinder: level and color count trade
// places. Component i of w contributes one fundamental weight indexed by the
// suffix sum mult[i] + ... + mult[n-1], reduced mod the level.
inline DominantWeight dual_weight(const DominantWeight& w) {
  Int n = w.colors(), l = w.level();
  if (n < 1 || l < 1) throw std::invalid_argument("weight must have positive level");
  std::vector<Int> m((std::size_t)l, 0);
  Int suffix = 0;
  for (Int i = n - 1; i >= 0; --i) {
    suffix += w.mult[(std::size_t)i];
    m[(std::size_t)floor_mod(suffix, l)] += 1;
  }
  return DominantWeight{std::move(m)};
}

}  // namespace cryst
