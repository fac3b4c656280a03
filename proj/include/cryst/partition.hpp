#pragma once
// Partitions, charged partitions, and bead rows (Maya diagrams).
//
// A bead row is a semi-infinite 0/1 pattern on the half-integer line:
// cofinitely many positions on the left are occupied (beads), finitely many
// on the right.  Position p+1/2 is stored as the integer p throughout.  A
// row is kept in normal form as (charge, partition): the k-th bead from the
// right sits at stored position  partition_k - k + charge.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cryst {

using Int = long long;

inline Int floor_div(Int a, Int b) {
  Int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
        throw std::invalid_argument("parts must be weakly decreasing and positive");
    }
  }
  Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

  const std::vector<Int>& parts() const { return parts_; }
  std::size_t rows() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Int part(Int k) const {  // 1-based; 0 beyond the last row
    return (k >= 1 && k <= (Int)parts_.size()) ? parts_[k - 1] : 0;
  }
  Int total() const { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }

  Partition conjugate() const {
    std::vector<Int> c;
    if (!parts_.empty()) {
      c.assign((std::size_t)parts_[0], 0);
      for (Int p : parts_)
        for (Int j = 0; j < p; ++j) c[(std::size_t)j]++;
    }
    return Partition(std::move(c));
  }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<Int> parts_;
};

struct ChargedPartition {
  Int charge = 0;
  Partition parts;
  bool operator==(const ChargedPartition&) const = default;
  auto operator<=>(const ChargedPartition&) const = default;
};

class BeadRow {
 public:
  BeadRow() = default;
  BeadRow(Int charge, Partition parts) : charge_(charge), lambda_(std::move(parts)) {}

  Int charge() const { return charge_; }
  const Partition& partition() const { return lambda_; }
  Int weight() const { return lambda_.total(); }
  std::size_t deviations() const { return lambda_.rows(); }

  // Stored position of the k-th bead from the right, k >= 1.
  Int bead(Int k) const { return lambda_.part(k) - k + charge_; }

  bool occupied(Int p) const {
    Int r = (Int)lambda_.rows();
    if (p <= charge_ - r - 1) return true;  // solid tail
    // beads are strictly decreasing in k; binary search k in [1, r]
    Int lo = 1, hi = r;
    while (lo <= hi) {
      Int mid = (lo + hi) / 2, b = bead(mid);
      if (b == p) return true;
      if (b > p) lo = mid + 1; else hi = mid - 1;
    }
    return false;
  }

  // Smallest stored position that can be empty; everything below is a bead.
  Int solid_below() const { return charge_ - (Int)lambda_.rows(); }
  // Largest occupied stored position (solid tail if the row is compact).
  Int last_bead() const { return bead(1); }

  BeadRow compactified() const { return BeadRow(charge_, Partition{}); }
  BeadRow shifted(Int d) const { return BeadRow(charge_ + d, lambda_); }

  // All occupied positions >= floor, in decreasing order.
  std::vector<Int> beads_from(Int floor) const {
    std::vector<Int> out;
    for (Int k = 1; bead(k) >= floor; ++k) out.push_back(bead(k));
    return out;
  }

  // Build a row from its occupied positions >= floor (positions < floor are
  // all occupied).
  static BeadRow from_beads(std::vector<Int> beads, Int floor) {
    std::sort(beads.begin(), beads.end(), std::greater<Int>());
    Int c = floor + (Int)beads.size();
    std::vector<Int> parts;
    parts.reserve(beads.size());
    for (std::size_t i = 0; i < beads.size(); ++i) {
      if (beads[i] < floor) throw std::invalid_argument("bead below floor");
      if (i + 1 < beads.size() && beads[i] == beads[i + 1])
        throw std::invalid_argument("duplicate bead position");
      parts.push_back(beads[i] + (Int)i + 1 - c);
    }
    return BeadRow(c, Partition(std::move(parts)));
  }

  // Move the bead at stored position `from` by `steps` (positive = right).
  BeadRow moved(Int from, Int steps) const {
    if (!occupied(from)) throw std::invalid_argument("no bead at source position");
    Int to = from + steps;
    if (steps == 0) return *this;
    if (occupied(to)) throw std::invalid_argument("target position occupied");
    Int floor = std::min({solid_below() - 1, from, to}) - 1;
    std::vector<Int> bs = beads_from(floor);
    for (Int& b : bs)
      if (b == from) { b = to; break; }
    return from_beads(std::move(bs), floor);
  }

  // Replace the k-th bead from the right; the new position must keep the
  // beads strictly decreasing.
  BeadRow with_bead(Int k, Int pos) const {
    if (k < 1) throw std::invalid_argument("bead index must be >= 1");
    if (pos >= bead(k - 1) && k > 1) throw std::invalid_argument("bead collision above");
    if (pos <= bead(k + 1)) throw std::invalid_argument("bead collision below");
    Int floor = std::min(solid_below() - 1, pos) - 1;
    std::vector<Int> bs = beads_from(floor);
    bs[(std::size_t)(k - 1)] = pos;
    return from_beads(std::move(bs), floor);
  }

  bool operator==(const BeadRow&) const = default;
  auto operator<=>(const BeadRow&) const = default;

 private:
  Int charge_ = 0;
  Partition lambda_;
};

// r <= s beadwise: every bead of r is at or left of the same-index bead of s.
inline bool beadwise_leq(const BeadRow& r, const BeadRow& s) {
  if (r.charge() > s.charge()) return false;  // deep-tail beads
  Int kmax = (Int)std::max(r.deviations(), s.deviations());
  for (Int k = 1; k <= kmax; ++k)
    if (r.bead(k) > s.bead(k)) return false;
  return true;
}

inline BeadRow partition_to_beads(const Partition& p, Int charge) {
  return BeadRow(charge, p);
}

inline ChargedPartition beads_to_partition(const BeadRow& r) {
  return {r.charge(), r.partition()};
}

inline BeadRow move_bead(const BeadRow& r, Int from, Int steps) {
  return r.moved(from, steps);
}

// Split a row into l strands: strand j collects stored positions == j mod l,
// rescaled by p -> (p - j) / l.
inline std::vector<BeadRow> split_strands(const BeadRow& row, Int l) {
  if (l < 1) throw std::invalid_argument("strand count must be >= 1");
  Int floor = row.solid_below() - 2 * l - 1;
  std::vector<std::vector<Int>> local((std::size_t)l);
  for (Int p : row.beads_from(floor)) {
    Int j = floor_mod(p, l);
    local[(std::size_t)j].push_back(floor_div(p, l));
  }
  std::vector<BeadRow> out;
  out.reserve((std::size_t)l);
  for (Int j = 0; j < l; ++j) {
    // local positions q with q*l + j < floor are all occupied
    Int qfloor = floor_div(floor - j + l - 1, l);  // ceil((floor - j) / l)
    std::vector<Int> bs;
    for (Int q : local[(std::size_t)j])
      if (q >= qfloor) bs.push_back(q);
    out.push_back(BeadRow::from_beads(std::move(bs), qfloor));
  }
  return out;
}

// Inverse of split_strands.
inline BeadRow join_strands(const std::vector<BeadRow>& rows) {
  Int l = (Int)rows.size();
  if (l < 1) throw std::invalid_argument("strand count must be >= 1");
  Int qmin = rows[0].solid_below();
  for (const BeadRow& r : rows) qmin = std::min(qmin, r.solid_below());
  Int floor = (qmin - 2) * l;
  std::vector<Int> bs;
  for (Int j = 0; j < l; ++j)
    for (Int q : rows[(std::size_t)j].beads_from(floor_div(floor - j + l - 1, l))) {
      Int p = q * l + j;
      if (p >= floor) bs.push_back(p);
    }
  return BeadRow::from_beads(std::move(bs), floor);
}

// The l-quotient: the charged partitions carried by the l strands of the
// charge-0 row of p.  Their charges sum to 0.
inline std::vector<ChargedPartition> l_quotient(const Partition& p, Int l) {
  std::vector<ChargedPartition> out;
  for (const BeadRow& r : split_strands(partition_to_beads(p, 0), l))
    out.push_back(beads_to_partition(r));
  return out;
}

// The l-core: push every bead of every strand as far left as it goes.
inline Partition l_core(const Partition& p, Int l) {
  std::vector<BeadRow> rows = split_strands(partition_to_beads(p, 0), l);
  for (BeadRow& r : rows) r = r.compactified();
  BeadRow joined = join_strands(rows);
  if (joined.charge() != 0) throw std::logic_error("core charge must be 0");
  return joined.partition();
}

// A ribbon (rim hook): `length` boxes, one per content, with the rightmost
// box on content `rightmost_content`.
struct Ribbon {
  Int length = 0;
  Int rightmost_content = 0;
};

// Add a ribbon to p; null when the result is not a partition.  Adding a
// ribbon is exactly a bead move by +length on the charge-0 row.
inline std::optional<Partition> apply_ribbon(const Partition& p, const Ribbon& rb) {
  if (rb.length < 1) throw std::invalid_argument("ribbon length must be >= 1");
  BeadRow r = partition_to_beads(p, 0);
  Int from = rb.rightmost_content - rb.length;
  if (!r.occupied(from) || r.occupied(from + rb.length)) return std::nullopt;
  return r.moved(from, rb.length).partition();
}

enum class GlDir { left, right };

// Elementary one-step bead moves: `left` sends a bead at p+1 to p, `right`
// sends a bead at p to p+1.  Null when the move does not apply.
inline std::optional<BeadRow> gl_matrix_unit(const BeadRow& r, Int p, GlDir dir) {
  if (dir == GlDir::left) {
    if (!r.occupied(p + 1) || r.occupied(p)) return std::nullopt;
    return r.moved(p + 1, -1);
  }
  if (!r.occupied(p) || r.occupied(p + 1)) return std::nullopt;
  return r.moved(p, +1);
}

}  // namespace cryst
