#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "cryst/kyoto.hpp"
#include "support/enumerate.hpp"

using namespace cryst;

namespace {

PerfectElement pe(Int n, std::vector<Int> letters) { return PerfectElement(n, std::move(letters)); }

DominantWeight wt(std::vector<Int> m) { return DominantWeight{std::move(m)}; }

AbacusConfig empty_rows(Int n, const std::vector<Int>& charges) {
  std::vector<BeadRow> rows;
  for (Int c : charges) rows.emplace_back(c, Partition{});
  return AbacusConfig(n, std::move(rows));
}

// All weakly increasing fillings of a row of length l with letters 0..n-1.
std::vector<PerfectElement> all_elements(Int n, Int l) {
  std::vector<PerfectElement> out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int lo) -> void {
    if ((Int)cur.size() == l) {
      out.push_back(PerfectElement(n, cur));
      return;
    }
    for (Int v = lo; v < n; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("the six-vertex perfect crystal matches the figure") {
  std::vector<PerfectElement> all = all_elements(3, 2);
  REQUIRE(all.size() == 6);

  using Edge = std::tuple<std::string, int, std::string>;
  std::set<Edge> expected = {
      {"[0,0]", 1, "[0,1]"}, {"[0,1]", 1, "[1,1]"}, {"[0,2]", 1, "[1,2]"},
      {"[0,1]", 2, "[0,2]"}, {"[1,1]", 2, "[1,2]"}, {"[1,2]", 2, "[2,2]"},
      {"[0,2]", 0, "[0,0]"}, {"[2,2]", 0, "[0,2]"}, {"[1,2]", 0, "[0,1]"},
  };
  std::set<Edge> found;
  for (const PerfectElement& b : all)
    for (int i = 0; i < 3; ++i) {
      auto fb = pc_f(b, i);
      if (fb) {
        found.insert({b.str(), i, fb->str()});
        REQUIRE(pc_e(*fb, i) == b);  // arrows reverse exactly
      } else {
        REQUIRE(pc_phi(b, i) == 0);
      }
      auto eb = pc_e(b, i);
      if (eb)
        REQUIRE(pc_f(*eb, i) == b);
      else
        REQUIRE(pc_epsilon(b, i) == 0);
    }
  REQUIRE(found == expected);

  // Raisable letters count i-1, lowerable count i; the level never changes.
  for (const PerfectElement& b : all)
    for (int i = 0; i < 3; ++i) {
      REQUIRE(pc_phi(b, i) == b.count(floor_mod((Int)i - 1, 3)));
      REQUIRE(pc_epsilon(b, i) == b.count(i));
      auto fb = pc_f(b, i);
      if (fb) REQUIRE(fb->size() == b.size());
    }

  REQUIRE(pe(3, {2, 0}) == pe(3, {0, 2}));  // letters are kept sorted
  REQUIRE_THROWS_AS(pe(3, {3, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(pe(3, {-1}), std::invalid_argument);
  REQUIRE_THROWS_AS(pe(1, {0}), std::invalid_argument);
  REQUIRE_THROWS_AS(pc_f(pe(3, {0, 1}), 3), std::invalid_argument);
}

TEST_CASE("ground paths telescope") {
  for (const DominantWeight& w : {wt({1, 2, 1}), wt({2, 0, 0}), wt({0, 3}), wt({1, 1})}) {
    const Int n = w.colors();
    for (Int k = 1; k <= 50; ++k) {
      PerfectElement g = ground_element(w, k);
      PerfectElement next = ground_element(w, k + 1);
      REQUIRE(next == pc_decrement(g));
      REQUIRE(ground_element(w, k + n) == g);
      for (int i = 0; i < (int)n; ++i) {
        REQUIRE(pc_epsilon(g, i) == pc_phi(next, i));
        if (k == 1) REQUIRE(pc_phi(g, i) == w.mult[(std::size_t)i]);
      }
    }
  }

  // A pure multiple of one fundamental weight gives constant fillings.
  REQUIRE(ground_element(wt({4, 0, 0}), 1) == pe(3, {2, 2, 2, 2}));
  REQUIRE(ground_element(wt({4, 0, 0}), 2) == pe(3, {1, 1, 1, 1}));
  REQUIRE(ground_element(wt({4, 0, 0}), 3) == pe(3, {0, 0, 0, 0}));

  // Exhaustive search over the first three factors finds exactly one chain
  // satisfying the two defining conditions.
  DominantWeight w = wt({1, 1, 0});
  std::vector<PerfectElement> all = all_elements(3, 2);
  Int chains = 0;
  for (const PerfectElement& b1 : all) {
    bool top = true;
    for (int i = 0; i < 3; ++i) top = top && pc_phi(b1, i) == w.mult[(std::size_t)i];
    if (!top) continue;
    for (const PerfectElement& b2 : all) {
      bool mid = true;
      for (int i = 0; i < 3; ++i) mid = mid && pc_epsilon(b1, i) == pc_phi(b2, i);
      if (!mid) continue;
      for (const PerfectElement& b3 : all) {
        bool deep = true;
        for (int i = 0; i < 3; ++i) deep = deep && pc_epsilon(b2, i) == pc_phi(b3, i);
        if (!deep) continue;
        ++chains;
        REQUIRE(b1 == ground_element(w, 1));
        REQUIRE(b2 == ground_element(w, 2));
        REQUIRE(b3 == ground_element(w, 3));
      }
    }
  }
  REQUIRE(chains == 1);
}

TEST_CASE("compact strands spell the ground path") {
  // Four empty rows with charges 2,1,1,0: the four-bead strands read off the
  // highest weight picture, factor by factor.
  AbacusConfig hw = empty_rows(3, {2, 1, 1, 0});
  PerfectPath ground = kyoto_path(hw);
  REQUIRE(ground == ground_state_path(wt({1, 2, 1})));
  REQUIRE(ground.support() == 0);
  REQUIRE(ground.factor(1) == pe(3, {0, 0, 1, 2}));
  REQUIRE(ground.factor(2) == pe(3, {0, 1, 2, 2}));
  REQUIRE(ground.factor(3) == pe(3, {0, 1, 1, 2}));
  REQUIRE(ground.factor(4) == pe(3, {0, 0, 1, 2}));

  // The ground path is highest weight with lowerable counts given by the
  // weight; lowering succeeds exactly at the colors present in it.
  for (int i = 0; i < 3; ++i) {
    REQUIRE(path_epsilon(ground, i) == 0);
    REQUIRE(!path_e(ground, i).has_value());
    REQUIRE(path_phi(ground, i) == ground.lambda().mult[(std::size_t)i]);
  }
  for (const DominantWeight& w : {wt({1, 2, 1}), wt({2, 0, 0}), wt({0, 1})}) {
    PerfectPath g = ground_state_path(w);
    for (int i = 0; i < (int)w.colors(); ++i)
      REQUIRE(path_f(g, i).has_value() == (w.mult[(std::size_t)i] > 0));
  }

  // Path construction normalizes: an override equal to the ground factor is
  // dropped, and mismatched shapes are rejected.
  std::map<Int, PerfectElement> ov;
  ov.emplace(2, pe(3, {0, 1, 2, 2}));
  REQUIRE(PerfectPath(wt({1, 2, 1}), ov) == ground);
  std::map<Int, PerfectElement> bad;
  bad.emplace(1, pe(3, {0, 1}));
  REQUIRE_THROWS_AS(PerfectPath(wt({1, 2, 1}), bad), std::invalid_argument);
  REQUIRE_THROWS_AS(kyoto_path(AbacusConfig(3, {BeadRow(0, Partition{}), BeadRow(2, Partition{})})),
                    std::invalid_argument);  // not descending
}

TEST_CASE("strand residues intertwine every colored move") {
  struct Setup {
    Int n;
    std::vector<Int> charges;
    Int deg;
  };
  for (const Setup& s : {Setup{2, {1, 0}, 6}, Setup{3, {1, 0}, 6}, Setup{3, {2, 1, 1, 0}, 5}}) {
    AbacusConfig hw = empty_rows(s.n, s.charges);
    auto ball = explore(AbacusModel{s.n, true}, hw, s.deg);
    DominantWeight lam = lambda_of(hw);

    std::set<std::string> images;
    for (const AbacusConfig& a : ball.elems) {
      PerfectPath p = kyoto_path(a);
      REQUIRE(p.lambda() == lam);
      images.insert(p.str());
      for (int i = 0; i < (int)s.n; ++i) {
        auto fa = abacus_f_descending(a, i);
        auto fp = path_f(p, i);
        REQUIRE(fa.has_value() == fp.has_value());
        if (fa) REQUIRE(kyoto_path(*fa) == *fp);
        auto ea = abacus_e_descending(a, i);
        auto ep = path_e(p, i);
        REQUIRE(ea.has_value() == ep.has_value());
        if (ea) REQUIRE(kyoto_path(*ea) == *ep);
        REQUIRE(abacus_phi(a, i) == path_phi(p, i));
        REQUIRE(abacus_epsilon(a, i) == path_epsilon(p, i));
      }
    }
    REQUIRE(images.size() == ball.elems.size());  // injective on the ball

    // Surjectivity: exploring the path crystal from its ground state gives
    // exactly the image set.
    auto paths = explore(PathModel{lam}, ground_state_path(lam), s.deg);
    std::set<std::string> keys(paths.graph.keys.begin(), paths.graph.keys.end());
    REQUIRE(keys == images);
  }
}

TEST_CASE("path operators ignore how far the window extends") {
  std::mt19937 rng(23);
  std::vector<DominantWeight> weights = {wt({1, 1}), wt({1, 1, 0}), wt({1, 2, 1}), wt({0, 3})};
  for (int trial = 0; trial < 100; ++trial) {
    const DominantWeight& w = weights[trial % weights.size()];
    const Int n = w.colors(), l = w.level();
    std::map<Int, PerfectElement> ov;
    std::uniform_int_distribution<Int> pos(1, 6), letter(0, n - 1), coin(0, 1);
    for (int t = 0; t < 3; ++t) {
      if (coin(rng)) continue;
      std::vector<Int> letters;
      for (Int u = 0; u < l; ++u) letters.push_back(letter(rng));
      ov.insert_or_assign(pos(rng), PerfectElement(n, std::move(letters)));
    }
    PerfectPath p(w, std::move(ov));

    for (int i = 0; i < (int)n; ++i) {
      SignatureScan tight_scan = scan_signature(detail::path_word(p, i, p.support()));
      for (Int pad = 1; pad <= 3; ++pad) {
        Int K = p.support() + pad;
        SignatureScan wide = scan_signature(detail::path_word(p, i, K));
        REQUIRE(wide.unmatched_open == tight_scan.unmatched_open);
        REQUIRE(wide.unmatched_close == tight_scan.unmatched_close);
        // Both scans pick the same factor, measured from position K+1.
        if (tight_scan.first_open >= 0) {
          REQUIRE(K + 1 - wide.first_open == p.support() + 1 - tight_scan.first_open);
        } else {
          REQUIRE(wide.first_open < 0);
        }
        if (tight_scan.last_close >= 1) {
          REQUIRE(K + 1 - wide.last_close == p.support() + 1 - tight_scan.last_close);
        } else {
          REQUIRE(wide.last_close < 1);
        }
      }
      // Lowering then raising returns the original path.
      auto fp = path_f(p, i);
      if (fp) REQUIRE(*path_e(*fp, i) == p);
      auto ep = path_e(p, i);
      if (ep) REQUIRE(*path_f(*ep, i) == p);
    }
  }
}
