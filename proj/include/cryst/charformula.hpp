#pragma once
// Closed forms for the cylindric plane partition generating function: a
// principal-specialization character product driven by the boundary weight,
// and the equivalent product read off the up/down profile of one boundary
// period. Both match the brute-force enumeration coefficient by coefficient.

#include <stdexcept>
#include <utility>
#include <vector>

#include <cryst/cylindric.hpp>
#include <cryst/partition.hpp>
#include <cryst/qseries.hpp>
#include <cryst/weights.hpp>

namespace cryst {

// One period of the cylinder boundary as a cyclic up/down word, positions
// 1..N. Down steps correspond to colors (rank n), up steps to slices
// (level l), so N = n + l.
class BoundaryProfile {
 public:
  explicit BoundaryProfile(std::vector<int> down) : down_(std::move(down)) {
    Int ups = 0, downs = 0;
    for (int b : down_) {
      if (b != 0 && b != 1) throw std::invalid_argument("profile entries must be 0 or 1");
      if (b)
        ++downs;
      else
        ++ups;
    }
    if (downs == 0 || ups == 0)
      throw std::invalid_argument("boundary must slope both down and up");
  }

  Int N() const { return (Int)down_.size(); }
  Int rank() const {  // number of down steps
    Int c = 0;
    for (int b : down_) c += b;
    return c;
  }
  Int level() const { return N() - rank(); }

  // 1 if the boundary slopes down on diagonal i, counted 1-based over one
  // period; A is the complementary up indicator.
  int B(Int i) const { return down_[index(i)]; }
  int A(Int i) const { return 1 - B(i); }

  bool operator==(const BoundaryProfile&) const = default;

 private:
  std::size_t index(Int i) const {
    if (i < 1 || i > N()) throw std::out_of_range("profile position");
    return (std::size_t)(i - 1);
  }
  std::vector<int> down_;
};

// Profile of the boundary cut so that the period starts with the up-run of
// color 0: reading left to right, m_0 ups, a down, m_1 ups, a down, ...,
// so the a-th down sits at position a + m_0 + ... + m_{a-1}.
inline BoundaryProfile profile_of(const DominantWeight& w) {
  const Int n = w.colors();
  if (n < 1 || w.level() < 1)
    throw std::invalid_argument("weight must have positive rank and level");
  std::vector<int> down((std::size_t)(n + w.level()), 0);
  Int acc = 0;
  for (Int a = 1; a <= n; ++a) {
    acc += w.mult[(std::size_t)(a - 1)];
    down[(std::size_t)(a + acc - 1)] = 1;
  }
  return BoundaryProfile(std::move(down));
}

// Slice charges realizing the weight: one charge per unit of multiplicity,
// equal to its color and listed in weakly decreasing order. Inverse, up to
// reordering, of the residue histogram taken by lambda_of_cpp.
inline std::vector<Int> canonical_charges(const DominantWeight& w) {
  if (w.level() < 1) throw std::invalid_argument("need at least one slice");
  std::vector<Int> charges;
  for (Int r = w.colors() - 1; r >= 0; --r)
    for (Int k = 0; k < w.mult[(std::size_t)r]; ++k) charges.push_back(r);
  return charges;
}

// Principal character of the irreducible highest weight module as a quotient
// of products of (1 - q^m) factors. Numerator degrees are differences of
// down-step positions advancing by the period N, plus multiples of N with
// multiplicity n - 1; the denominator is the same product for the zero
// weight, where the m-th factor appears n times unless n divides m (then
// n - 1 times).
inline QSeries dimq_V(const DominantWeight& w, Int deg) {
  const Int n = w.colors();
  if (n < 2) throw std::invalid_argument("need at least two colors");
  const Int N = n + w.level();
  std::vector<Int> pos;
  Int acc = 0;
  for (Int a = 1; a <= n; ++a) {
    acc += w.mult[(std::size_t)(a - 1)];
    pos.push_back(a + acc);
  }
  std::vector<Int> net((std::size_t)deg + 1, 0);
  for (Int x : pos)
    for (Int y : pos) {
      if (x == y) continue;
      for (Int m = floor_mod(x - y, N); m <= deg; m += N) net[(std::size_t)m] += 1;
    }
  for (Int m = N; m <= deg; m += N) net[(std::size_t)m] += n - 1;
  for (Int m = 1; m <= deg; ++m) net[(std::size_t)m] -= (m % n == 0) ? n - 1 : n;

  QSeries out = QSeries::one(deg);
  for (Int m = 1; m <= deg; ++m) {
    for (Int t = net[(std::size_t)m]; t > 0; --t) out = out.times_one_minus(m);
    for (Int t = net[(std::size_t)m]; t < 0; ++t) out = out.over_one_minus(m);
  }
  return out;
}

// Full partition function: the module character times a free-boson factor
// graded in steps of n, dimq_V * prod_{k>=1} 1/(1-q^{nk}).
inline QSeries Z_weyl(const DominantWeight& w, Int deg) {
  QSeries z = dimq_V(w, deg);
  for (Int m = w.colors(); m <= deg; m += w.colors()) z = z.over_one_minus(m);
  return z;
}

// Product over pairs (up diagonal i, down diagonal j) of geometric factors
// with degrees (i - j) mod N stepping by N, times the boson of period N.
inline QSeries Z_borodin(const BoundaryProfile& p, Int deg) {
  const Int N = p.N();
  QSeries z = QSeries::one(deg);
  for (Int m = N; m <= deg; m += N) z = z.over_one_minus(m);
  for (Int i = 1; i <= N; ++i) {
    if (!p.A(i)) continue;
    for (Int j = 1; j <= N; ++j) {
      if (!p.B(j)) continue;
      for (Int m = floor_mod(i - j, N); m <= deg; m += N) z = z.over_one_minus(m);
    }
  }
  return z;
}

// Brute-force partition function: histogram of total box counts over every
// cylindric plane partition with the given slice charges.
inline QSeries Z_enumerate(Int n, const std::vector<Int>& charges, Int deg) {
  QSeries z(deg);
  for (const CylindricPartition& pi : enumerate_cpps(n, charges, deg)) z[pi.weight()] += 1;
  return z;
}

inline QSeries Z_enumerate(const DominantWeight& w, Int deg) {
  return Z_enumerate(w.colors(), canonical_charges(w), deg);
}

}  // namespace cryst
