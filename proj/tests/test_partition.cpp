#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cryst/partition.hpp"
#include "support/oracles.hpp"

using namespace cryst;

TEST_CASE("partition basics") {
  Partition p{4, 2, 1};
  REQUIRE(p.total() == 7);
  REQUIRE(p.rows() == 3);
  REQUIRE(p.part(1) == 4);
  REQUIRE(p.part(5) == 0);
  REQUIRE(p.conjugate() == Partition{3, 2, 1, 1});
  REQUIRE(p.conjugate().conjugate() == p);
  REQUIRE(Partition{3, 3, 0, 0} == Partition{3, 3});
  REQUIRE_THROWS_AS((Partition{1, 2}), std::invalid_argument);
  REQUIRE_THROWS_AS((Partition{2, -1}), std::invalid_argument);
}

TEST_CASE("conjugate is an involution") {
  for (const Partition& p : oracle::partitions_up_to(9)) {
    REQUIRE(p.conjugate().conjugate() == p);
    REQUIRE(p.conjugate().total() == p.total());
  }
}

TEST_CASE("bead positions of a large partition") {
  // (12,11,10,9,7,5,3,3,3,1) has beads exactly at
  // 11,9,7,5,2,-1,-4,-5,-6,-9 and the solid tail from -11 down.
  BeadRow r = partition_to_beads(Partition{12, 11, 10, 9, 7, 5, 3, 3, 3, 1}, 0);
  std::vector<Int> want = {11, 9, 7, 5, 2, -1, -4, -5, -6, -9};
  for (std::size_t k = 0; k < want.size(); ++k) REQUIRE(r.bead((Int)k + 1) == want[k]);
  REQUIRE(r.bead(11) == -11);
  REQUIRE(r.bead(12) == -12);
  std::set<Int> occ(want.begin(), want.end());
  for (Int p = -10; p <= 13; ++p) REQUIRE(r.occupied(p) == (bool)occ.count(p));
  for (Int p = -20; p <= -11; ++p) REQUIRE(r.occupied(p));
}

TEST_CASE("bead row round trip") {
  for (const Partition& p : oracle::partitions_up_to(8)) {
    for (Int c = -3; c <= 3; ++c) {
      BeadRow r = partition_to_beads(p, c);
      ChargedPartition back = beads_to_partition(r);
      REQUIRE(back.charge == c);
      REQUIRE(back.parts == p);
      // rebuild from an explicit window
      Int floor = r.solid_below() - 4;
      BeadRow again = BeadRow::from_beads(r.beads_from(floor), floor);
      REQUIRE(again == r);
      REQUIRE(r.weight() == p.total());
    }
  }
}

TEST_CASE("moving one bead four steps adds a 4-ribbon") {
  BeadRow r = partition_to_beads(Partition{12, 11, 10, 9, 7, 5, 3, 3, 3, 1}, 0);
  BeadRow m = move_bead(r, -1, 4);
  REQUIRE(m.charge() == 0);
  REQUIRE(m.partition() == Partition{12, 11, 10, 9, 8, 8, 3, 3, 3, 1});
  REQUIRE(apply_ribbon(Partition{12, 11, 10, 9, 7, 5, 3, 3, 3, 1}, Ribbon{4, 3}).value() ==
          m.partition());
}

TEST_CASE("move_bead rejects bad moves") {
  BeadRow r = partition_to_beads(Partition{2, 1}, 0);  // beads at 1,-1 and tail <= -3
  REQUIRE_THROWS_AS(r.moved(0, 1), std::invalid_argument);   // source empty
  REQUIRE_THROWS_AS(r.moved(1, -2), std::invalid_argument);  // target occupied
  REQUIRE(r.moved(1, 1).partition() == Partition{3, 1});
  REQUIRE(r.moved(-1, 1).partition() == Partition{2, 2});
  REQUIRE(r.moved(-3, 1).partition() == Partition{2, 1, 1});
}

TEST_CASE("ribbon moves match diagram surgery") {
  for (const Partition& p : oracle::partitions_up_to(8)) {
    for (Int len : {2, 3, 4}) {
      std::set<Partition> got;
      BeadRow r = partition_to_beads(p, 0);
      for (Int k = r.solid_below() - 1; k <= r.last_bead() + len + 1; ++k) {
        auto res = apply_ribbon(p, Ribbon{len, k});
        if (res) {
          REQUIRE(oracle::is_ribbon(p, *res, len));
          // rightmost content of the added cells really is k
          auto cells = oracle::skew_contents(p, *res).value();
          REQUIRE(*std::max_element(cells.begin(), cells.end()) == k);
          got.insert(*res);
        }
      }
      std::vector<Partition> want = oracle::ribbon_additions(p, len);
      REQUIRE(got == std::set<Partition>(want.begin(), want.end()));
    }
  }
}

TEST_CASE("strand split and join invert each other") {
  for (const Partition& p : oracle::partitions_up_to(8)) {
    for (Int c = -2; c <= 2; ++c) {
      for (Int l : {2, 3, 4}) {
        BeadRow r = partition_to_beads(p, c);
        std::vector<BeadRow> rows = split_strands(r, l);
        REQUIRE((Int)rows.size() == l);
        REQUIRE(join_strands(rows) == r);
        // strand content: position q on strand j is position q*l + j globally
        for (Int j = 0; j < l; ++j)
          for (Int q : rows[(std::size_t)j].beads_from(rows[(std::size_t)j].solid_below() - 2))
            REQUIRE(r.occupied(q * l + j));
      }
    }
  }
}

TEST_CASE("quotient charges sum to zero and sizes add up") {
  for (const Partition& p : oracle::partitions_up_to(10)) {
    for (Int l : {2, 3, 4}) {
      std::vector<ChargedPartition> q = l_quotient(p, l);
      Partition core = l_core(p, l);
      Int csum = 0, wsum = 0;
      for (const ChargedPartition& cp : q) {
        csum += cp.charge;
        wsum += cp.parts.total();
      }
      REQUIRE(csum == 0);
      REQUIRE(p.total() == core.total() + l * wsum);
      // the core has no removable ribbons of length l
      REQUIRE(oracle::ribbon_removals(core, l).empty());
      // greedy stripping in any order reaches the same core
      REQUIRE(oracle::strip_all_ribbons(p, l, 0) == core);
      REQUIRE(oracle::strip_all_ribbons(p, l, 12345) == core);
    }
  }
}

TEST_CASE("quotient example by hand") {
  // (3,2,1) with l=2: beads of the charge-0 row at 2,0,-2 and tail <= -4.
  // Even strand gets local 1,0,-1 with tail <= -2 (charge 2, empty);
  // odd strand has no beads above its solid tail (charge -2, empty).
  std::vector<ChargedPartition> q = l_quotient(Partition{3, 2, 1}, 2);
  REQUIRE(q[0] == ChargedPartition{2, Partition{}});
  REQUIRE(q[1] == ChargedPartition{-2, Partition{}});
  REQUIRE(l_core(Partition{3, 2, 1}, 2) == Partition{3, 2, 1});

  // adding one domino to (3,2,1) at the end of row 1 moves an even bead
  std::vector<ChargedPartition> q2 = l_quotient(Partition{5, 2, 1}, 2);
  REQUIRE(q2[0] == ChargedPartition{2, Partition{1}});
  REQUIRE(q2[1] == ChargedPartition{-2, Partition{}});
  REQUIRE(l_core(Partition{5, 2, 1}, 2) == Partition{3, 2, 1});
}

TEST_CASE("one step matrix unit moves") {
  BeadRow r = partition_to_beads(Partition{2, 1}, 0);  // beads 1,-1, tail <= -3
  auto left = gl_matrix_unit(r, 0, GlDir::left);       // bead 1 -> 0
  REQUIRE(left.has_value());
  REQUIRE(left->partition() == Partition{1, 1});
  REQUIRE(!gl_matrix_unit(r, 1, GlDir::left).has_value());   // no bead at 2
  REQUIRE(!gl_matrix_unit(r, -3, GlDir::left).has_value());  // no bead at -2
  REQUIRE(gl_matrix_unit(r, -2, GlDir::left)->partition() == Partition{2});
  auto right = gl_matrix_unit(r, 1, GlDir::right);
  REQUIRE(right.has_value());
  REQUIRE(right->partition() == Partition{3, 1});
  REQUIRE(gl_matrix_unit(r, -1, GlDir::right)->partition() == Partition{2, 2});
  REQUIRE(!gl_matrix_unit(r, -4, GlDir::right).has_value());  // -3 occupied
}

TEST_CASE("beadwise comparison") {
  BeadRow a = partition_to_beads(Partition{2, 1}, 0);
  BeadRow b = partition_to_beads(Partition{3, 1}, 0);
  REQUIRE(beadwise_leq(a, b));
  REQUIRE(!beadwise_leq(b, a));
  REQUIRE(beadwise_leq(a, a));
  REQUIRE(beadwise_leq(partition_to_beads(Partition{}, -1), a));
  REQUIRE(!beadwise_leq(partition_to_beads(Partition{}, 1), a));
}
