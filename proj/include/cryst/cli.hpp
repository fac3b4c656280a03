#pragma once
// Command drivers and artifact serializers behind the `cryst` tool: crystal
// balls to DOT/JSON/text, abaci and cylindric partitions to JSON and text
// art, q-series comparisons with verdicts, bijection and path-transport
// verification matrices, and the swap-certification report.
//
// Every driver takes a plain config struct and two streams (artifact, errors)
// and returns the process exit code: 0 pass, 1 verification failure, 2 bad
// config.  Output is deterministic given the config.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cryst/abacus.hpp"
#include "cryst/charformula.hpp"
#include "cryst/commutor.hpp"
#include "cryst/crystal.hpp"
#include "cryst/cylindric.hpp"
#include "cryst/kyoto.hpp"
#include "cryst/partition.hpp"
#include "cryst/qseries.hpp"
#include "cryst/weights.hpp"

namespace cryst {

using Json = nlohmann::ordered_json;

// ---- serializers --------------------------------------------------------------

inline Json json_partition(const Partition& p) { return Json(p.parts()); }

inline Json json_bead_row(const BeadRow& r) {
  return Json{{"charge", r.charge()}, {"parts", json_partition(r.partition())}};
}

inline Json json_abacus(const AbacusConfig& a) {
  Json rows = Json::array();
  for (const BeadRow& r : a.rows()) rows.push_back(json_bead_row(r));
  return Json{{"n", a.n()}, {"rows", std::move(rows)}};
}

inline Json json_cpp(const CylindricPartition& c) {
  Json charges = Json::array(), rows = Json::array();
  for (const ChargedPartition& r : c.rows()) {
    charges.push_back(r.charge);
    rows.push_back(json_partition(r.parts));
  }
  return Json{{"n", c.n()},
              {"l", c.levels()},
              {"charges", std::move(charges)},
              {"rows", std::move(rows)}};
}

inline Json json_path(const PerfectPath& p) {
  Json over = Json::array();
  for (const auto& [k, b] : p.overrides()) over.push_back(Json::array({k, b.letters()}));
  return Json{{"lambda", p.lambda().mult}, {"overrides", std::move(over)}};
}

inline Json json_graph(const CrystalGraph& g) {
  Json edges = Json::array();
  for (const CrystalGraph::Edge& e : g.edges)
    edges.push_back(Json::array({e.src, e.color, e.dst}));
  return Json{{"colors", g.colors},
              {"vertices", g.labels},
              {"degree", g.degree},
              {"edges", std::move(edges)}};
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline const char* edge_color(int i) {
  static const char* palette[] = {"crimson",     "royalblue", "forestgreen", "darkorange",
                                  "purple",      "saddlebrown", "deeppink",  "teal"};
  return palette[i % 8];
}

}  // namespace detail

inline std::string dot_graph(const CrystalGraph& g) {
  std::string s = "digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t v = 0; v < g.labels.size(); ++v)
    s += "  v" + std::to_string(v) + " [label=\"" + detail::dot_escape(g.labels[v]) + "\"];\n";
  for (const CrystalGraph::Edge& e : g.edges)
    s += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst) + " [label=\"" +
         std::to_string(e.color) + "\", color=\"" + detail::edge_color(e.color) + "\"];\n";
  s += "}\n";
  return s;
}

// Bead rows as filled/empty circles with a bar at the origin, top row last so
// the wrap row sits above the row it shadows.
inline std::string render_abacus(const AbacusConfig& a) {
  Int lo = 0, hi = 0;
  for (const BeadRow& r : a.rows()) {
    lo = std::min(lo, r.solid_below() - 1);
    hi = std::max(hi, r.last_bead() + 1);
  }
  std::string s;
  for (Int j = a.levels() - 1; j >= 0; --j) {
    const BeadRow& r = a.row(j);
    std::string c = std::to_string(r.charge());
    s += std::string(3 - std::min<std::size_t>(3, c.size()), ' ') + c + " ";
    for (Int p = lo; p <= hi; ++p) {
      if (p == 0) s += "|";
      s += r.occupied(p) ? "●" : "○";
    }
    s += "\n";
  }
  return s;
}

// Slices as left-justified rows of entries, indented so equal diagonals align
// in columns.
inline std::string render_cpp(const CylindricPartition& c) {
  Int width = 1;
  for (const ChargedPartition& r : c.rows())
    if (!r.parts.empty())
      width = std::max(width, (Int)std::to_string(r.parts.part(1)).size());
  Int min_charge = c.charge(c.levels() - 1);
  std::string s;
  for (Int i = 0; i < c.levels(); ++i) {
    std::string line((std::size_t)((c.charge(i) - min_charge) * (width + 1)), ' ');
    for (Int k = 1; k <= (Int)c.row(i).parts.rows(); ++k) {
      std::string v = std::to_string(c.row(i).parts.part(k));
      line += v + std::string((std::size_t)(width + 1) - v.size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    s += line + "\n";
  }
  return s;
}

namespace detail {

inline long long coeff_ll(const BigInt& b) { return b.convert_to<long long>(); }

inline Json json_coeffs(const QSeries& z) {
  Json out = Json::array();
  for (Int k = 0; k <= z.degree(); ++k) out.push_back(coeff_ll(z[k]));
  return out;
}

// Partitions of total size <= budget with at most maxrows rows, empty first.
inline std::vector<Partition> shapes_up_to(Int budget, Int maxrows) {
  std::vector<Partition> out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int left, Int cap) -> void {
    out.push_back(Partition(std::vector<Int>(cur)));
    if ((Int)cur.size() >= maxrows) return;
    for (Int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      self(self, left - v, v);
      cur.pop_back();
    }
  };
  rec(rec, budget, budget);
  std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
    return std::pair(x.total(), x.parts()) < std::pair(y.total(), y.parts());
  });
  return out;
}

// Drops every lowering edge into one chosen element; a negative control for
// the structure checker, which must then reject the model.
template <CrystalModel M>
struct FaultModel {
  const M& base;
  std::string blocked;

  using Elem = typename M::Elem;
  int colors() const { return base.colors(); }
  Int cartan(int i, int j) const { return base.cartan(i, j); }
  std::optional<Elem> f(const Elem& x, int i) const {
    auto dn = base.f(x, i);
    if (dn && base.key(*dn) == blocked) return std::nullopt;
    return dn;
  }
  std::optional<Elem> e(const Elem& x, int i) const { return base.e(x, i); }
  std::string key(const Elem& x) const { return base.key(x); }
};

}  // namespace detail

// ---- shared config plumbing -----------------------------------------------------

// n and lambda are required; l, when nonzero, must equal the level of lambda.
inline std::optional<DominantWeight> checked_weight(Int n, Int l, const std::vector<Int>& lambda,
                                                    std::ostream& err) {
  if (n < 2) {
    err << "config error: need --n at least 2\n";
    return std::nullopt;
  }
  if ((Int)lambda.size() != n) {
    err << "config error: --lambda needs exactly " << n << " comma-separated entries\n";
    return std::nullopt;
  }
  for (Int c : lambda)
    if (c < 0) {
      err << "config error: --lambda entries must be nonnegative\n";
      return std::nullopt;
    }
  DominantWeight w{lambda};
  if (w.level() < 1) {
    err << "config error: --lambda must have positive level\n";
    return std::nullopt;
  }
  if (l != 0 && l != w.level()) {
    err << "config error: --l is " << l << " but --lambda has level " << w.level() << "\n";
    return std::nullopt;
  }
  return w;
}

// ---- graph ----------------------------------------------------------------------

struct GraphRun {
  std::string model = "abacus";  // abacus | partition | cpp | kyoto
  Int n = 0;
  Int l = 0;  // optional; checked against lambda when nonzero
  std::vector<Int> lambda;
  Int deg = 8;
  std::string format = "dot";  // dot | json | text
  bool inject_fault = false;   // negative control: corrupt one edge first
};

namespace detail {

template <CrystalModel M>
int graph_finish(const M& model, const std::vector<std::pair<typename M::Elem, Int>>& seeds,
                 const GraphRun& cfg,
                 const std::function<std::string(const typename M::Elem&)>& art,
                 std::ostream& out, std::ostream& err) {
  Explored<M> ex = explore_all(model, seeds, cfg.deg);

  AxiomReport rep;
  if (cfg.inject_fault && !ex.graph.edges.empty()) {
    FaultModel<M> faulty{model, ex.graph.keys[(std::size_t)ex.graph.edges.front().dst]};
    rep = check_local_axioms(faulty, ex.elems);
  } else {
    rep = check_local_axioms(model, ex.elems);
  }

  if (cfg.format == "dot") {
    out << dot_graph(ex.graph);
  } else if (cfg.format == "json") {
    out << json_graph(ex.graph).dump(2) << "\n";
  } else {  // text: one block per vertex, ordered by degree then id
    for (Int d = 0; d <= cfg.deg; ++d)
      for (std::size_t v = 0; v < ex.elems.size(); ++v) {
        if (ex.graph.degree[v] != d) continue;
        out << "deg " << d << "  " << ex.graph.labels[v] << "\n";
        std::string block = art(ex.elems[v]);
        if (!block.empty()) out << block << "\n";
      }
  }
  err << "vertices: " << ex.graph.keys.size() << ", edges: " << ex.graph.edges.size()
      << ", checks: " << rep.checked << "\n";
  if (!rep.pass) {
    err << "local structure check failed: " << rep.violation << " (witness " << rep.witness_key
        << ")\n";
    return 1;
  }
  return 0;
}

}  // namespace detail

inline int run_graph(const GraphRun& cfg, std::ostream& out, std::ostream& err) {
  auto w = checked_weight(cfg.n, cfg.l, cfg.lambda, err);
  if (!w) return 2;
  if (cfg.deg < 0) {
    err << "config error: --deg must be nonnegative\n";
    return 2;
  }
  if (cfg.format != "dot" && cfg.format != "json" && cfg.format != "text") {
    err << "config error: --format must be dot, json, or text\n";
    return 2;
  }

  std::vector<Int> charges = canonical_charges(*w);
  if (cfg.model == "abacus") {
    // the full ball: every weakly decreasing configuration up to the cap
    std::vector<std::pair<AbacusConfig, Int>> seeds;
    for (const CylindricPartition& c : enumerate_cpps(cfg.n, charges, cfg.deg)) {
      AbacusConfig a = cpp_to_abacus(c);
      seeds.push_back({a, a.weight()});
    }
    return detail::graph_finish(AbacusModel{cfg.n, true}, seeds, cfg,
                                [](const AbacusConfig& a) { return render_abacus(a); }, out, err);
  }
  if (cfg.model == "cpp") {
    std::vector<std::pair<CylindricPartition, Int>> seeds;
    for (const CylindricPartition& c : enumerate_cpps(cfg.n, charges, cfg.deg))
      seeds.push_back({c, c.weight()});
    return detail::graph_finish(CppModel{cfg.n}, seeds, cfg,
                                [](const CylindricPartition& c) { return render_cpp(c); }, out,
                                err);
  }
  if (cfg.model == "partition") {
    // the ribbon crystal on single partitions; lambda fixes n and the level
    std::vector<std::pair<Partition, Int>> seeds = {{Partition{}, 0}};
    return detail::graph_finish(RibbonModel{cfg.n, w->level()}, seeds, cfg,
                                [](const Partition&) { return std::string(); }, out, err);
  }
  if (cfg.model == "kyoto") {
    std::vector<std::pair<PerfectPath, Int>> seeds = {{ground_state_path(*w), 0}};
    return detail::graph_finish(PathModel{*w}, seeds, cfg,
                                [](const PerfectPath&) { return std::string(); }, out, err);
  }
  err << "config error: --model must be abacus, partition, cpp, or kyoto\n";
  return 2;
}

// ---- genfunc --------------------------------------------------------------------

struct GenfuncRun {
  Int n = 0;
  Int l = 0;
  std::vector<Int> lambda;
  Int deg = 15;
  std::string format = "text";  // text | json | csv
};

inline int run_genfunc_compare(const GenfuncRun& cfg, std::ostream& out, std::ostream& err) {
  auto w = checked_weight(cfg.n, cfg.l, cfg.lambda, err);
  if (!w) return 2;
  if (cfg.deg < 0) {
    err << "config error: --deg must be nonnegative\n";
    return 2;
  }
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv") {
    err << "config error: --format must be text, json, or csv\n";
    return 2;
  }

  QSeries ze = Z_enumerate(*w, cfg.deg);
  QSeries zw = Z_weyl(*w, cfg.deg);
  QSeries zb = Z_borodin(profile_of(*w), cfg.deg);
  bool equal = ze == zw && zw == zb;

  if (cfg.format == "json") {
    out << Json{{"n", cfg.n},
                {"l", w->level()},
                {"lambda", w->mult},
                {"deg", cfg.deg},
                {"enumerate", detail::json_coeffs(ze)},
                {"weyl", detail::json_coeffs(zw)},
                {"borodin", detail::json_coeffs(zb)},
                {"three_way_equal", equal}}
               .dump(2)
        << "\n";
  } else if (cfg.format == "csv") {
    out << "degree,enumerate,weyl,borodin\n";
    for (Int k = 0; k <= cfg.deg; ++k)
      out << k << "," << ze[k].str() << "," << zw[k].str() << "," << zb[k].str() << "\n";
    out << "# three-way-equal: " << (equal ? "true" : "false") << "\n";
  } else {
    out << "n=" << cfg.n << " l=" << w->level() << " lambda=" << w->str() << " deg=" << cfg.deg
        << "\n";
    out << "enumerate: " << ze.str() << "\n";
    out << "weyl:      " << zw.str() << "\n";
    out << "borodin:   " << zb.str() << "\n";
    out << "three-way-equal: " << (equal ? "true" : "false") << "\n";
  }
  if (!equal) {
    for (Int k = 0; k <= cfg.deg; ++k)
      if (ze[k] != zw[k] || zw[k] != zb[k]) {
        err << "series disagree first at q^" << k << "\n";
        break;
      }
    return 1;
  }
  return 0;
}

inline int run_genfunc_duality(const GenfuncRun& cfg, std::ostream& out, std::ostream& err) {
  auto w = checked_weight(cfg.n, cfg.l, cfg.lambda, err);
  if (!w) return 2;
  if (cfg.deg < 0) {
    err << "config error: --deg must be nonnegative\n";
    return 2;
  }
  if (cfg.format != "text" && cfg.format != "json") {
    err << "config error: --format must be text or json\n";
    return 2;
  }

  DominantWeight dual = dual_weight(*w);
  QSeries za = Z_weyl(*w, cfg.deg);
  QSeries zd = Z_weyl(dual, cfg.deg);
  bool equal = za == zd;

  if (cfg.format == "json") {
    out << Json{{"n", cfg.n},
                {"l", w->level()},
                {"lambda", w->mult},
                {"dual_lambda", dual.mult},
                {"deg", cfg.deg},
                {"weyl", detail::json_coeffs(za)},
                {"dual_weyl", detail::json_coeffs(zd)},
                {"duality_equal", equal}}
               .dump(2)
        << "\n";
  } else {
    out << "lambda=" << w->str() << " (n=" << cfg.n << ")  ->  dual=" << dual.str()
        << " (n=" << dual.colors() << ")\n";
    out << "weyl:      " << za.str() << "\n";
    out << "dual weyl: " << zd.str() << "\n";
    out << "duality-equal: " << (equal ? "true" : "false") << "\n";
  }
  if (!equal) {
    for (Int k = 0; k <= cfg.deg; ++k)
      if (za[k] != zd[k]) {
        err << "series disagree first at q^" << k << "\n";
        break;
      }
    return 1;
  }
  return 0;
}

// ---- bijection ------------------------------------------------------------------

struct BijectionRun {
  Int n = 0;
  Int l = 0;
  std::vector<Int> lambda;
  Int maxweight = 10;
  std::string format = "json";  // json | text
};

inline int run_bijection(const BijectionRun& cfg, std::ostream& out, std::ostream& err) {
  auto w = checked_weight(cfg.n, cfg.l, cfg.lambda, err);
  if (!w) return 2;
  if (cfg.maxweight < 0) {
    err << "config error: --maxweight must be nonnegative\n";
    return 2;
  }
  if (cfg.format != "json" && cfg.format != "text") {
    err << "config error: --format must be json or text\n";
    return 2;
  }

  std::vector<Int> charges = canonical_charges(*w);
  std::vector<CylindricPartition> cpps = enumerate_cpps(cfg.n, charges, cfg.maxweight);

  Int round_trip = 0, weight = 0, decomposition = 0, tight_count = 0;
  std::set<std::string> pairs_seen;
  for (const CylindricPartition& c : cpps) {
    AbacusConfig a = cpp_to_abacus(c);
    if (!(abacus_to_cpp(a) == c)) round_trip++;
    if (a.weight() != c.weight()) weight++;
    Decomposition d = decompose(a);
    if (!is_tight(d.tight) || !(recompose(d.tight, d.shifts) == a) ||
        a.weight() != d.tight.weight() + cfg.n * d.shifts.total())
      decomposition++;
    pairs_seen.insert(d.tight.str() + "#" + d.shifts.str());
    if (is_tight(a)) tight_count++;
  }
  // every (tight, shifts) pair that fits in the ball must be hit exactly once
  Int pairs_expected = 0;
  for (const CylindricPartition& c : cpps) {
    AbacusConfig a = cpp_to_abacus(c);
    if (!is_tight(a)) continue;
    Int room = (cfg.maxweight - a.weight()) / cfg.n;
    pairs_expected += (Int)detail::shapes_up_to(room, room).size();
  }
  bool pass = round_trip == 0 && weight == 0 && decomposition == 0 &&
              (Int)pairs_seen.size() == (Int)cpps.size() && pairs_expected == (Int)cpps.size();

  if (cfg.format == "json") {
    out << Json{{"n", cfg.n},
                {"l", w->level()},
                {"lambda", w->mult},
                {"max_weight", cfg.maxweight},
                {"objects", (Int)cpps.size()},
                {"tight", tight_count},
                {"round_trip_mismatches", round_trip},
                {"weight_mismatches", weight},
                {"decomposition_mismatches", decomposition},
                {"distinct_pairs", (Int)pairs_seen.size()},
                {"pairs_expected", pairs_expected},
                {"pass", pass}}
               .dump(2)
        << "\n";
  } else {
    out << "objects: " << cpps.size() << " (tight: " << tight_count << ")\n";
    out << "round-trip mismatches: " << round_trip << "\n";
    out << "weight mismatches: " << weight << "\n";
    out << "decomposition mismatches: " << decomposition << "\n";
    out << "pairs: " << pairs_seen.size() << " distinct, " << pairs_expected << " expected\n";
    out << "pass: " << (pass ? "true" : "false") << "\n";
  }
  if (!pass) err << "bijection verification failed\n";
  return pass ? 0 : 1;
}

// ---- kyoto ----------------------------------------------------------------------

struct KyotoRun {
  Int n = 0;
  Int l = 0;
  std::vector<Int> lambda;
  Int deg = 8;
  std::string format = "json";  // json | text
};

inline int run_kyoto(const KyotoRun& cfg, std::ostream& out, std::ostream& err) {
  auto w = checked_weight(cfg.n, cfg.l, cfg.lambda, err);
  if (!w) return 2;
  if (cfg.deg < 0) {
    err << "config error: --deg must be nonnegative\n";
    return 2;
  }
  if (cfg.format != "json" && cfg.format != "text") {
    err << "config error: --format must be json or text\n";
    return 2;
  }

  std::vector<BeadRow> rows;
  for (Int c : canonical_charges(*w)) rows.emplace_back(c, Partition{});
  AbacusConfig hw(cfg.n, std::move(rows));
  Explored<AbacusModel> ball = explore(AbacusModel{cfg.n, true}, hw, cfg.deg);

  Int mismatches = 0;
  std::set<std::string> images;
  for (const AbacusConfig& a : ball.elems) {
    PerfectPath p = kyoto_path(a);
    if (!(p.lambda() == *w)) mismatches++;
    images.insert(p.str());
    for (int i = 0; i < (int)cfg.n; ++i) {
      auto fa = abacus_f_descending(a, i);
      auto fp = path_f(p, i);
      if (fa.has_value() != fp.has_value() || (fa && !(kyoto_path(*fa) == *fp))) mismatches++;
      auto ea = abacus_e_descending(a, i);
      auto ep = path_e(p, i);
      if (ea.has_value() != ep.has_value() || (ea && !(kyoto_path(*ea) == *ep))) mismatches++;
      if (abacus_phi(a, i) != path_phi(p, i) || abacus_epsilon(a, i) != path_epsilon(p, i))
        mismatches++;
    }
  }
  bool injective = images.size() == ball.elems.size();
  Explored<PathModel> paths = explore(PathModel{*w}, ground_state_path(*w), cfg.deg);
  std::set<std::string> keys(paths.graph.keys.begin(), paths.graph.keys.end());
  bool surjective = keys == images;
  bool pass = mismatches == 0 && injective && surjective;

  if (cfg.format == "json") {
    out << Json{{"n", cfg.n},
                {"l", w->level()},
                {"lambda", w->mult},
                {"deg", cfg.deg},
                {"ball", (Int)ball.elems.size()},
                {"injective", injective},
                {"surjective", surjective},
                {"intertwining_mismatches", mismatches},
                {"pass", pass}}
               .dump(2)
        << "\n";
  } else {
    out << "ball: " << ball.elems.size() << " configurations\n";
    out << "injective: " << (injective ? "true" : "false") << "\n";
    out << "surjective: " << (surjective ? "true" : "false") << "\n";
    out << "intertwining mismatches: " << mismatches << "\n";
    out << "pass: " << (pass ? "true" : "false") << "\n";
  }
  if (!pass) err << "path transport verification failed\n";
  return pass ? 0 : 1;
}

// ---- commutor -------------------------------------------------------------------

struct CommutorRun {
  Int m = 0;
  Int maxsize = 4;
  std::vector<Int> word;  // empty = staircase
  std::string format = "json";  // json | text
};

inline int run_commutor(const CommutorRun& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.m < 2) {
    err << "config error: need --m at least 2\n";
    return 2;
  }
  if (cfg.maxsize < 0) {
    err << "config error: --maxsize must be nonnegative\n";
    return 2;
  }
  if (cfg.format != "json" && cfg.format != "text") {
    err << "config error: --format must be json or text\n";
    return 2;
  }
  std::vector<Int> word = cfg.word.empty() ? staircase_word(cfg.m) : cfg.word;
  try {
    validate_longest_word(word, cfg.m);
  } catch (const std::invalid_argument& e) {
    err << "config error: --word: " << e.what() << "\n";
    return 2;
  }

  std::vector<Partition> shapes = detail::shapes_up_to(cfg.maxsize, cfg.m);
  bool all_pass = true;
  Json items = Json::array();
  for (const Partition& la : shapes)
    for (const Partition& mu : shapes) {
      StarReport rep = verify_star_characterization(la, mu, cfg.m, word);
      all_pass = all_pass && rep.pass;
      for (const StarCheck& chk : rep.checks) {
        TensorWord hw = concat_words(highest_word(la, cfg.m), chk.partner);
        bool ok = chk.sum_rule && chk.determined;
        if (cfg.format == "json") {
          items.push_back(Json{{"lambda", la.parts()},
                               {"mu", mu.parts()},
                               {"m", cfg.m},
                               {"word", word},
                               {"highest_weight_element", hw.str()},
                               {"checks",
                                Json{{"partner", chk.partner.str()},
                                     {"image", chk.image.str()},
                                     {"down_partner", chk.down_partner},
                                     {"down_image", chk.down_image},
                                     {"pairing", chk.pairing},
                                     {"sum_rule", chk.sum_rule},
                                     {"determined", chk.determined}}},
                               {"pass", ok}});
        } else {
          out << "lambda=" << la.str() << " mu=" << mu.str() << " hw=" << hw.str()
              << " sum_rule=" << (chk.sum_rule ? "yes" : "no")
              << " determined=" << (chk.determined ? "yes" : "no") << "\n";
        }
      }
    }
  if (cfg.format == "json") out << items.dump(2) << "\n";
  if (!all_pass) {
    err << "swap certification failed\n";
    return 1;
  }
  return 0;
}

}  // namespace cryst
