#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "cryst/cylindric.hpp"
#include "support/enumerate.hpp"
#include "support/oracles.hpp"

using namespace cryst;

namespace {

AbacusConfig make(Int n, std::vector<std::pair<Int, Partition>> rows) {
  std::vector<BeadRow> rs;
  for (auto& [c, p] : rows) rs.emplace_back(c, std::move(p));
  return AbacusConfig(n, std::move(rs));
}

AbacusConfig compact_hw() {
  return make(3, {{2, {}}, {1, {}}, {1, {}}, {0, {}}});
}

AbacusConfig general_example() {  // weight 13, not descending
  return make(3, {{-1, {1}}, {0, {3, 3}}, {-1, {2, 1}}, {2, {1, 1, 1}}});
}

AbacusConfig tight_example() {  // weight 18, compactifies to compact_hw()
  return make(3, {{2, {2, 1, 1}}, {1, {2, 2, 1}}, {1, {2, 1}}, {0, {2, 2, 1, 1}}});
}

CylindricPartition cpp(Int n, std::vector<std::pair<Int, Partition>> rows) {
  std::vector<ChargedPartition> rs;
  for (auto& [c, p] : rows) rs.push_back(ChargedPartition{c, std::move(p)});
  return CylindricPartition(n, std::move(rs));
}

// The four slices read off the tight example's diagonals.
CylindricPartition golden_slices() {
  return cpp(3, {{2, {3, 1}}, {1, {3, 2}}, {1, {2, 1}}, {0, {4, 2}}});
}

// The period-nine cylinder with three down-steps and six up-steps.
CylindricPartition period_nine() {
  return cpp(3, {{2, {7, 3}},
                 {1, {6, 5, 1}},
                 {1, {4, 4, 1}},
                 {1, {4, 1}},
                 {0, {5, 3}},
                 {0, {3, 3}}});
}

std::map<Int, Int> weight_histogram(const std::vector<CylindricPartition>& v) {
  std::map<Int, Int> h;
  for (const CylindricPartition& c : v) h[c.weight()]++;
  return h;
}

}  // namespace

TEST_CASE("bead rows and box slices carry the same data") {
  AbacusConfig psi = tight_example();
  CylindricPartition pi = abacus_to_cpp(psi);
  REQUIRE(pi == golden_slices());
  REQUIRE(pi.weight() == psi.weight());
  REQUIRE(cpp_to_abacus(pi) == psi);
  REQUIRE(lambda_of_cpp(pi) == DominantWeight{{1, 2, 1}});
  REQUIRE(lambda_of_cpp(pi) == lambda_of(psi.compactified()));

  CylindricPartition empty = abacus_to_cpp(compact_hw());
  REQUIRE(empty.weight() == 0);
  for (const ChargedPartition& r : empty.rows()) REQUIRE(r.parts.empty());
  REQUIRE(cpp_to_abacus(empty) == compact_hw());

  REQUIRE_THROWS_AS(abacus_to_cpp(general_example()), std::invalid_argument);
}

TEST_CASE("entries continue around the cylinder") {
  CylindricPartition pi = period_nine();
  REQUIRE(pi.weight() == 50);
  REQUIRE(lambda_of_cpp(pi) == DominantWeight{{2, 3, 1}});
  for (Int i = -6; i <= 12; ++i) {
    REQUIRE(pi.charge(i + 6) == pi.charge(i) - 3);
    for (Int j = pi.charge(i + 6); j <= pi.support_end(i + 6) + 2; ++j)
      REQUIRE(pi.entry(i + 6, j) == pi.entry(i, j + 3));
  }
  REQUIRE(pi.entry(0, 2) == 7);
  REQUIRE(pi.entry(3, 2) == 1);
  REQUIRE(!pi.defined(0, 1));
  REQUIRE_THROWS_AS(pi.entry(0, 1), std::out_of_range);

  AbacusConfig psi = cpp_to_abacus(pi);
  REQUIRE(is_descending(psi));
  REQUIRE(psi.weight() == 50);
  REQUIRE(abacus_to_cpp(psi) == pi);
}

TEST_CASE("reflecting the period-nine cylinder trades rank and level") {
  CylindricPartition pi = period_nine();
  CylindricPartition r = reflect(pi);
  REQUIRE(r.n() == 6);
  REQUIRE(r.levels() == 3);
  REQUIRE(r == cpp(6, {{4, {5, 3, 3, 1, 1}}, {1, {6, 4, 4, 3, 3}}, {0, {7, 5, 4, 1}}}));
  REQUIRE(r.weight() == 50);
  REQUIRE(lambda_of_cpp(r) == DominantWeight{{1, 1, 0, 0, 1, 0}});
  REQUIRE(lambda_of_cpp(r) == dual_weight(lambda_of_cpp(pi)));
  REQUIRE(reflect(r) == pi);
}

TEST_CASE("invalid slice stacks are rejected") {
  REQUIRE_THROWS_AS(cpp(3, {{0, {}}, {1, {}}}), std::invalid_argument);
  REQUIRE_THROWS_AS(cpp(2, {{3, {}}, {0, {}}}), std::invalid_argument);
  REQUIRE_THROWS_AS(cpp(3, {{0, {1}}, {0, {2}}}), std::invalid_argument);
  // Wrap violation: the last slice must dominate the first one shifted down.
  REQUIRE_THROWS_AS(cpp(2, {{0, {1, 1, 1}}, {0, {}}}), std::invalid_argument);
}

TEST_CASE("round trips between beads and boxes") {
  struct Shape {
    Int n;
    std::vector<Int> charges;
  };
  for (const Shape& s : {Shape{2, {0, 0}}, Shape{3, {1, 0}}}) {
    for (const AbacusConfig& psi : oracle::descending_ball(s.n, s.charges, 10)) {
      CylindricPartition pi = abacus_to_cpp(psi);
      REQUIRE(pi.weight() == psi.weight());
      REQUIRE(cpp_to_abacus(pi) == psi);
      REQUIRE(lambda_of_cpp(pi) == lambda_of(psi.compactified()));
    }
  }
}

TEST_CASE("direct box moves match the bead transport") {
  struct Shape {
    Int n;
    std::vector<Int> charges;
  };
  for (const Shape& s : {Shape{3, {1, 0}}, Shape{2, {1, 0, 0}}}) {
    for (const AbacusConfig& psi : oracle::descending_ball(s.n, s.charges, 8)) {
      CylindricPartition pi = abacus_to_cpp(psi);
      for (int i = 0; i < s.n; ++i) {
        std::optional<CylindricPartition> viaBox = cpp_f(pi, i);
        std::optional<AbacusConfig> viaBead = abacus_f_descending(psi, i);
        REQUIRE(viaBox.has_value() == viaBead.has_value());
        if (viaBox) REQUIRE(*viaBox == abacus_to_cpp(*viaBead));
        std::optional<CylindricPartition> eBox = cpp_e(pi, i);
        std::optional<AbacusConfig> eBead = abacus_e_descending(psi, i);
        REQUIRE(eBox.has_value() == eBead.has_value());
        if (eBox) REQUIRE(*eBox == abacus_to_cpp(*eBead));
      }
    }
  }
}

TEST_CASE("box moves on the empty cylinder add first-diagonal boxes") {
  CylindricPartition z = cpp(3, {{1, {}}, {0, {}}});
  REQUIRE(*cpp_f(z, 0) == cpp(3, {{1, {}}, {0, {1}}}));
  REQUIRE(*cpp_f(z, 1) == cpp(3, {{1, {1}}, {0, {}}}));
  REQUIRE(!cpp_f(z, 2).has_value());
  for (int i = 0; i < 3; ++i) REQUIRE(!cpp_e(z, i).has_value());
  REQUIRE(*cpp_e(*cpp_f(z, 0), 0) == z);
  REQUIRE(*cpp_e(*cpp_f(z, 1), 1) == z);
}

TEST_CASE("direct enumeration matches the bead enumeration") {
  struct Shape {
    Int n;
    std::vector<Int> charges;
    Int maxw;
  };
  for (const Shape& s : {Shape{3, {1, 0}, 10}, Shape{2, {0, 0}, 10}, Shape{3, {2, 1, 1, 0}, 8}}) {
    std::vector<CylindricPartition> direct = enumerate_cpps(s.n, s.charges, s.maxw);
    std::set<std::string> seen;
    for (const CylindricPartition& c : direct) {
      REQUIRE(c.weight() <= s.maxw);
      for (std::size_t i = 0; i < s.charges.size(); ++i)
        REQUIRE(c.row((Int)i).charge == s.charges[i]);
      seen.insert(c.str());
    }
    REQUIRE(seen.size() == direct.size());

    std::set<std::string> viaBeads;
    for (const AbacusConfig& psi : oracle::descending_ball(s.n, s.charges, s.maxw))
      viaBeads.insert(abacus_to_cpp(psi).str());
    REQUIRE(seen == viaBeads);
  }
}

TEST_CASE("single-slice cylinders enumerate plain partitions") {
  std::vector<CylindricPartition> all = enumerate_cpps(4, {0}, 10);
  std::map<Int, Int> h = weight_histogram(all);
  for (Int w = 0; w <= 10; ++w)
    REQUIRE(h[w] == (Int)oracle::partitions_of(w).size());
  REQUIRE_THROWS_AS(enumerate_cpps(3, {0, 1}, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(enumerate_cpps(2, {3, 0}, 5), std::invalid_argument);
}

TEST_CASE("reflection is a weight-preserving involution") {
  struct Shape {
    Int n;
    std::vector<Int> charges;
    Int maxw;
  };
  for (const Shape& s : {Shape{3, {1, 0}, 8}, Shape{2, {1, 0, 0}, 6}}) {
    for (const CylindricPartition& pi : enumerate_cpps(s.n, s.charges, s.maxw)) {
      CylindricPartition r = reflect(pi);
      REQUIRE(r.n() == pi.levels());
      REQUIRE(r.levels() == pi.n());
      REQUIRE(r.weight() == pi.weight());
      REQUIRE(reflect(r) == pi);
      REQUIRE(lambda_of_cpp(r) == dual_weight(lambda_of_cpp(pi)));
    }
  }
}

TEST_CASE("translated boundaries reflect to a rotated weight") {
  // Shifting all charges moves the reflected weight by a rotation of the
  // cyclic color diagram; with charges inside [0, n) the rotation is zero.
  Int n = 3, l = 2;
  Int q = 1;  // sum of floor(charge / n) for charges {3, 2}
  for (const CylindricPartition& pi : enumerate_cpps(n, {3, 2}, 6)) {
    DominantWeight lhs = lambda_of_cpp(reflect(pi));
    DominantWeight rhs = dual_weight(lambda_of_cpp(pi));
    for (Int k = 0; k < l; ++k)
      REQUIRE(lhs.mult[(std::size_t)k] == rhs.mult[(std::size_t)floor_mod(k - q, l)]);
  }
}
