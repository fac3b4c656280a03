#pragma once
// Level-l perfect crystal on one-row multisets, semi-infinite tensor paths
// over it, and the strand-residue map from tight bead configurations onto
// finitely-supported paths.

#include <algorithm>
#include <map>
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

// A weakly increasing filling of a single row of length l with letters
// 0..n-1 (letter v encodes the box value v + 1/2). Unlike highest weight
// crystals, the colored move graph on these elements contains cycles.
class PerfectElement {
 public:
  PerfectElement(Int n, std::vector<Int> letters) : n_(n), letters_(std::move(letters)) {
    if (n_ < 2) throw std::invalid_argument("need at least two letter values");
    if (letters_.empty()) throw std::invalid_argument("need at least one letter");
    for (Int v : letters_)
      if (v < 0 || v >= n_) throw std::invalid_argument("letter out of range");
    std::sort(letters_.begin(), letters_.end());
  }

  Int n() const { return n_; }
  Int size() const { return (Int)letters_.size(); }
  const std::vector<Int>& letters() const { return letters_; }

  Int count(Int v) const {
    Int c = 0;
    for (Int x : letters_) c += (x == v) ? 1 : 0;
    return c;
  }

  auto operator<=>(const PerfectElement&) const = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      if (k > 0) s += ",";
      s += std::to_string(letters_[k]);
    }
    return s + "]";
  }

 private:
  Int n_;
  std::vector<Int> letters_;
};

namespace detail {
inline int checked_color(const PerfectElement& b, int i) {
  if (i < 0 || (Int)i >= b.n()) throw std::invalid_argument("color out of range");
  return i;
}
}  // namespace detail

// Raisable and lowerable letter counts; the lowering move turns one letter
// i-1 (mod n) into i, so no cancellation happens inside a single element.
inline Int pc_phi(const PerfectElement& b, int i) {
  return b.count(floor_mod((Int)detail::checked_color(b, i) - 1, b.n()));
}
inline Int pc_epsilon(const PerfectElement& b, int i) {
  return b.count(detail::checked_color(b, i));
}

inline std::optional<PerfectElement> pc_f(const PerfectElement& b, int i) {
  Int from = floor_mod((Int)detail::checked_color(b, i) - 1, b.n());
  if (b.count(from) == 0) return std::nullopt;
  std::vector<Int> letters = b.letters();
  for (Int& v : letters)
    if (v == from) {
      v = i;
      break;
    }
  return PerfectElement(b.n(), std::move(letters));
}

inline std::optional<PerfectElement> pc_e(const PerfectElement& b, int i) {
  if (b.count(detail::checked_color(b, i)) == 0) return std::nullopt;
  std::vector<Int> letters = b.letters();
  for (Int& v : letters)
    if (v == i) {
      v = floor_mod((Int)i - 1, b.n());
      break;
    }
  return PerfectElement(b.n(), std::move(letters));
}

// Letters shifted down one value, wrapping 0 back to n-1. Applying this to
// one ground factor yields the next one.
inline PerfectElement pc_decrement(const PerfectElement& b) {
  std::vector<Int> letters = b.letters();
  for (Int& v : letters) v = floor_mod(v - 1, b.n());
  return PerfectElement(b.n(), std::move(letters));
}

// Factor k (1-based) of the unique ground path of the weight: the letter v
// appears once per unit of mult[(v + k) mod n]. Factor 1 has raisable counts
// matching the weight, and each factor's lowerable counts match the next
// factor's raisable ones.
inline PerfectElement ground_element(const DominantWeight& w, Int k) {
  const Int n = w.colors();
  if (n < 2) throw std::invalid_argument("need at least two colors");
  if (k < 1) throw std::invalid_argument("factor positions start at 1");
  std::vector<Int> letters;
  for (Int v = 0; v < n; ++v) {
    Int m = w.mult[(std::size_t)floor_mod(v + k, n)];
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    for (Int t = 0; t < m; ++t) letters.push_back(v);
  }
  if (letters.empty()) throw std::invalid_argument("weight must have positive level");
  return PerfectElement(n, std::move(letters));
}

// A path in the semi-infinite tensor power ... (x) b_3 (x) b_2 (x) b_1 that
// follows the ground path of its weight at all but finitely many positions.
// Only the differing factors are stored.
class PerfectPath {
 public:
  explicit PerfectPath(DominantWeight lambda, std::map<Int, PerfectElement> overrides = {})
      : lambda_(std::move(lambda)), over_(std::move(overrides)) {
    ground_element(lambda_, 1);  // validates the weight
    for (auto it = over_.begin(); it != over_.end();) {
      auto& [k, b] = *it;
      if (k < 1) throw std::invalid_argument("factor positions start at 1");
      if (b.n() != lambda_.colors() || b.size() != lambda_.level())
        throw std::invalid_argument("factor shape does not match the weight");
      if (b == ground_element(lambda_, k))
        it = over_.erase(it);
      else
        ++it;
    }
  }

  const DominantWeight& lambda() const { return lambda_; }
  const std::map<Int, PerfectElement>& overrides() const { return over_; }

  // Largest position where the path leaves the ground pattern (0 if never).
  Int support() const { return over_.empty() ? 0 : over_.rbegin()->first; }

  PerfectElement factor(Int k) const {
    auto it = over_.find(k);
    return it != over_.end() ? it->second : ground_element(lambda_, k);
  }

  PerfectPath with_factor(Int k, PerfectElement b) const {
    std::map<Int, PerfectElement> ov = over_;
    ov.insert_or_assign(k, std::move(b));
    return PerfectPath(lambda_, std::move(ov));
  }

  bool operator==(const PerfectPath&) const = default;

  std::string str() const {
    std::string s = "n" + std::to_string(lambda_.colors()) + ":" + lambda_.str();
    for (const auto& [k, b] : over_) s += "|" + std::to_string(k) + ":" + b.str();
    return s;
  }

 private:
  DominantWeight lambda_;
  std::map<Int, PerfectElement> over_;
};

inline PerfectPath ground_state_path(const DominantWeight& w) { return PerfectPath(w); }

namespace detail {

// Bracket items scanned deep-to-shallow: factors K..1 each contribute their
// raisable count as closes then lowerable count as opens; the entire ground
// tail beyond K telescopes to a single opens-only sentinel, because each
// ground factor's opens exactly cancel the next factor's closes.
inline std::vector<std::pair<Int, Int>> path_word(const PerfectPath& p, int i, Int K) {
  if (K < p.support()) throw std::invalid_argument("window must cover every override");
  std::vector<std::pair<Int, Int>> w;
  w.push_back({0, pc_phi(ground_element(p.lambda(), K + 1), i)});
  for (Int k = K; k >= 1; --k) {
    PerfectElement b = p.factor(k);
    w.push_back({pc_epsilon(b, i), pc_phi(b, i)});
  }
  return w;
}

}  // namespace detail

inline std::optional<PerfectPath> path_f(const PerfectPath& p, int i) {
  Int K = p.support();
  SignatureScan s = scan_signature(detail::path_word(p, i, K));
  if (s.first_open < 0) return std::nullopt;
  Int k = K + 1 - s.first_open;
  return p.with_factor(k, *pc_f(p.factor(k), i));
}

inline std::optional<PerfectPath> path_e(const PerfectPath& p, int i) {
  Int K = p.support();
  SignatureScan s = scan_signature(detail::path_word(p, i, K));
  if (s.last_close < 1) return std::nullopt;  // the sentinel never closes
  Int k = K + 1 - s.last_close;
  return p.with_factor(k, *pc_e(p.factor(k), i));
}

inline Int path_phi(const PerfectPath& p, int i) {
  return scan_signature(detail::path_word(p, i, p.support())).unmatched_open;
}
inline Int path_epsilon(const PerfectPath& p, int i) {
  return scan_signature(detail::path_word(p, i, p.support())).unmatched_close;
}

struct PathModel {
  DominantWeight lambda;

  using Elem = PerfectPath;

  int colors() const { return (int)lambda.colors(); }
  Int cartan(int i, int j) const { return affine_cartan(lambda.colors(), i, j); }
  std::optional<Elem> f(const Elem& b, int i) const { return path_f(b, i); }
  std::optional<Elem> e(const Elem& b, int i) const { return path_e(b, i); }
  std::string key(const Elem& b) const { return b.str(); }
};

// Path of strand residues: factor k collects, over all rows, the residue of
// the k-th bead from the right. On tight configurations this is a bijection
// onto the finitely-supported paths of the compact weight, matching every
// colored move on both sides.
inline PerfectPath kyoto_path(const AbacusConfig& a) {
  if (!is_tight(a)) throw std::invalid_argument("configuration is not tight");
  DominantWeight lam = lambda_of(a.compactified());
  std::map<Int, PerfectElement> ov;
  for (Int k = 1; k <= a.max_depth(); ++k) {
    std::vector<Int> letters;
    for (Int j = 0; j < a.levels(); ++j) letters.push_back(floor_mod(a.strand(k, j), a.n()));
    PerfectElement b(a.n(), std::move(letters));
    if (!(b == ground_element(lam, k))) ov.emplace(k, std::move(b));
  }
  return PerfectPath(std::move(lam), std::move(ov));
}

}  // namespace cryst
