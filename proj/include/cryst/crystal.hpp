#pragma once
// Generic crystal machinery.
//
// A model supplies the raising/lowering maps for some element type:
//
//   using Elem = ...;                              // regular value type
//   int colors() const;                            // colors are 0..colors()-1
//   Int cartan(int i, int j) const;                // pairing <alpha_j^vee, alpha_i>
//   std::optional<Elem> f(const Elem&, int) const; // lowering, nullopt = 0
//   std::optional<Elem> e(const Elem&, int) const; // raising, nullopt = 0
//   std::string key(const Elem&) const;            // canonical bytes, stable
//
// Everything below (string lengths, tensor rule, exploration, local axiom
// checks, graded characters) is generic over such models.

#include <algorithm>
#include <concepts>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cryst/partition.hpp"

namespace cryst {

template <class M>
concept CrystalModel = requires(const M m, const typename M::Elem b, int i) {
  { m.colors() } -> std::convertible_to<int>;
  { m.cartan(i, i) } -> std::convertible_to<Int>;
  { m.f(b, i) } -> std::same_as<std::optional<typename M::Elem>>;
  { m.e(b, i) } -> std::same_as<std::optional<typename M::Elem>>;
  { m.key(b) } -> std::convertible_to<std::string>;
};

// Strings longer than this are treated as a sign of a non-integrable setup.
inline constexpr Int kDefaultStringCap = 10000;

template <CrystalModel M>
Int epsilon(const M& m, typename M::Elem b, int i, Int cap = kDefaultStringCap) {
  Int k = 0;
  while (auto up = m.e(b, i)) {
    b = std::move(*up);
    if (++k > cap) throw std::runtime_error("raising string exceeds cap");
  }
  return k;
}

template <CrystalModel M>
Int phi(const M& m, typename M::Elem b, int i, Int cap = kDefaultStringCap) {
  Int k = 0;
  while (auto dn = m.f(b, i)) {
    b = std::move(*dn);
    if (++k > cap) throw std::runtime_error("lowering string exceeds cap");
  }
  return k;
}

// phi_i - epsilon_i for every color: the weight against the simple coroots.
template <CrystalModel M>
std::vector<Int> coroot_weight(const M& m, const typename M::Elem& b,
                               Int cap = kDefaultStringCap) {
  std::vector<Int> w((std::size_t)m.colors());
  for (int i = 0; i < m.colors(); ++i)
    w[(std::size_t)i] = phi(m, b, i, cap) - epsilon(m, b, i, cap);
  return w;
}

// ---- signature rule ---------------------------------------------------------
//
// Item k contributes close_open[k].first ')' brackets followed by
// close_open[k].second '(' brackets; items are read left to right and "()"
// pairs cancel.  The lowering operator acts on the item holding the leftmost
// unmatched '(', the raising operator on the item holding the rightmost
// unmatched ')'.

struct SignatureScan {
  Int unmatched_close = 0;  // raising string length of the word
  Int unmatched_open = 0;   // lowering string length of the word
  Int first_open = -1;      // item with the leftmost unmatched '(' (-1: none)
  Int last_close = -1;      // item with the rightmost unmatched ')' (-1: none)
};

inline SignatureScan scan_signature(const std::vector<std::pair<Int, Int>>& close_open) {
  SignatureScan out;
  std::vector<Int> stack;  // items of currently open '('
  for (std::size_t k = 0; k < close_open.size(); ++k) {
    for (Int t = 0; t < close_open[k].first; ++t) {
      if (stack.empty()) {
        out.unmatched_close++;
        out.last_close = (Int)k;
      } else {
        stack.pop_back();
      }
    }
    for (Int t = 0; t < close_open[k].second; ++t) stack.push_back((Int)k);
  }
  out.unmatched_open = (Int)stack.size();
  if (!stack.empty()) out.first_open = stack.front();
  return out;
}

// ---- tensor product of two models -------------------------------------------

template <CrystalModel MA, CrystalModel MB>
struct TensorModel {
  using Elem = std::pair<typename MA::Elem, typename MB::Elem>;
  MA a;
  MB b;
  Int cap = kDefaultStringCap;

  int colors() const { return a.colors(); }
  Int cartan(int i, int j) const { return a.cartan(i, j); }

  std::optional<Elem> f(const Elem& x, int i) const {
    if (phi(a, x.first, i, cap) > epsilon(b, x.second, i, cap)) {
      auto dn = a.f(x.first, i);
      if (!dn) return std::nullopt;
      return Elem{std::move(*dn), x.second};
    }
    auto dn = b.f(x.second, i);
    if (!dn) return std::nullopt;
    return Elem{x.first, std::move(*dn)};
  }

  std::optional<Elem> e(const Elem& x, int i) const {
    if (phi(a, x.first, i, cap) >= epsilon(b, x.second, i, cap)) {
      auto up = a.e(x.first, i);
      if (!up) return std::nullopt;
      return Elem{std::move(*up), x.second};
    }
    auto up = b.e(x.second, i);
    if (!up) return std::nullopt;
    return Elem{x.first, std::move(*up)};
  }

  std::string key(const Elem& x) const {
    return a.key(x.first) + "\x1f" + b.key(x.second);
  }
};

// ---- exploration ------------------------------------------------------------

struct CrystalGraph {
  struct Edge {
    int src;
    int color;
    int dst;
    auto operator<=>(const Edge&) const = default;
  };
  int colors = 0;
  std::vector<std::string> keys;    // canonical bytes, index = vertex id
  std::vector<std::string> labels;  // display strings
  std::vector<Int> degree;          // lowering distance from the seed's level
  std::vector<Edge> edges;          // f-edges src --color--> dst

  int vertex(const std::string& key) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return -1;
    return (int)(it - keys.begin());
  }
};

template <CrystalModel M>
struct Explored {
  CrystalGraph graph;
  std::vector<typename M::Elem> elems;  // index = vertex id
};

namespace detail {
template <class M>
std::string display_label(const M& m, const typename M::Elem& b) {
  if constexpr (requires { m.label(b); })
    return m.label(b);
  else
    return m.key(b);
}
}  // namespace detail

// Breadth-first closure of the seeds under lowering, plus raising closure,
// with the lowering degree capped at `maxdeg`.  Each seed carries its own
// starting degree; every lowering edge raises degree by exactly one, and
// inconsistencies throw.
template <CrystalModel M>
Explored<M> explore_all(const M& m,
                        const std::vector<std::pair<typename M::Elem, Int>>& seeds,
                        Int maxdeg) {
  using Elem = typename M::Elem;
  struct Node {
    Elem elem;
    Int deg;
  };
  std::map<std::string, int> index;
  std::vector<Node> nodes;
  std::deque<int> queue;

  auto add = [&](const Elem& x, Int deg) -> int {
    std::string k = m.key(x);
    auto it = index.find(k);
    if (it != index.end()) {
      if (nodes[(std::size_t)it->second].deg != deg)
        throw std::logic_error("inconsistent lowering distance in exploration");
      return it->second;
    }
    int id = (int)nodes.size();
    index.emplace(std::move(k), id);
    nodes.push_back({x, deg});
    queue.push_back(id);
    return id;
  };

  for (const auto& [seed, deg] : seeds) add(seed, deg);
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    Elem cur = nodes[(std::size_t)id].elem;  // copy: nodes may reallocate
    Int deg = nodes[(std::size_t)id].deg;
    for (int i = 0; i < m.colors(); ++i) {
      if (deg < maxdeg) {
        if (auto dn = m.f(cur, i)) add(*dn, deg + 1);
      }
      if (auto up = m.e(cur, i)) add(*up, deg - 1);
    }
  }

  // deterministic ids: vertices sorted by canonical key (vertex() relies on
  // the global order)
  std::vector<int> order((std::size_t)nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return m.key(nodes[(std::size_t)x].elem) < m.key(nodes[(std::size_t)y].elem);
  });

  Explored<M> out;
  out.graph.colors = m.colors();
  out.elems.reserve(nodes.size());
  for (int id : order) {
    out.elems.push_back(nodes[(std::size_t)id].elem);
    out.graph.keys.push_back(m.key(nodes[(std::size_t)id].elem));
    out.graph.labels.push_back(detail::display_label(m, nodes[(std::size_t)id].elem));
    out.graph.degree.push_back(nodes[(std::size_t)id].deg);
  }

  // record f-edges between retained vertices
  for (int src = 0; src < (int)out.elems.size(); ++src) {
    for (int i = 0; i < m.colors(); ++i) {
      if (auto dn = m.f(out.elems[(std::size_t)src], i)) {
        int dst = out.graph.vertex(m.key(*dn));
        if (dst >= 0) {
          if (out.graph.degree[(std::size_t)dst] != out.graph.degree[(std::size_t)src] + 1)
            throw std::logic_error("lowering edge does not raise degree by one");
          out.graph.edges.push_back({src, i, dst});
        }
      }
    }
  }
  std::sort(out.graph.edges.begin(), out.graph.edges.end());
  return out;
}

template <CrystalModel M>
Explored<M> explore(const M& m, const typename M::Elem& seed, Int maxdeg) {
  return explore_all(m, {{seed, 0}}, maxdeg);
}

// Connected components (edges taken undirected), each sorted, ordered by
// smallest vertex id.
inline std::vector<std::vector<int>> components(const CrystalGraph& g) {
  int n = (int)g.keys.size();
  std::vector<int> comp((std::size_t)n, -1);
  std::vector<std::vector<int>> adj((std::size_t)n);
  for (const auto& e : g.edges) {
    adj[(std::size_t)e.src].push_back(e.dst);
    adj[(std::size_t)e.dst].push_back(e.src);
  }
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[(std::size_t)s] >= 0) continue;
    std::vector<int> verts;
    std::deque<int> q{s};
    comp[(std::size_t)s] = (int)out.size();
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      verts.push_back(v);
      for (int w : adj[(std::size_t)v])
        if (comp[(std::size_t)w] < 0) {
          comp[(std::size_t)w] = (int)out.size();
          q.push_back(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

// Vertices with no incoming f-edge (sources of the explored graph).
inline std::vector<int> highest_weight_elements(const CrystalGraph& g) {
  std::vector<char> has_in(g.keys.size(), 0);
  for (const auto& e : g.edges) has_in[(std::size_t)e.dst] = 1;
  std::vector<int> out;
  for (int v = 0; v < (int)g.keys.size(); ++v)
    if (!has_in[(std::size_t)v]) out.push_back(v);
  return out;
}

// Vertex counts per lowering distance from each component's source, summed
// over components; coefficient k counts vertices at distance k, up to maxdeg.
inline std::vector<Int> q_character(const CrystalGraph& g, Int maxdeg) {
  std::vector<Int> coef((std::size_t)maxdeg + 1, 0);
  std::vector<std::vector<int>> adj(g.keys.size());
  for (const auto& e : g.edges) adj[(std::size_t)e.src].push_back(e.dst);
  std::vector<char> has_in(g.keys.size(), 0);
  for (const auto& e : g.edges) has_in[(std::size_t)e.dst] = 1;

  for (const std::vector<int>& comp : components(g)) {
    std::vector<int> sources;
    for (int v : comp)
      if (!has_in[(std::size_t)v]) sources.push_back(v);
    if (sources.size() != 1)
      throw std::logic_error("component does not have a unique source");
    std::map<int, Int> dist;
    std::deque<int> q{sources[0]};
    dist[sources[0]] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      if (dist[v] <= maxdeg) coef[(std::size_t)dist[v]]++;
      for (int w : adj[(std::size_t)v]) {
        auto it = dist.find(w);
        if (it == dist.end()) {
          dist[w] = dist[v] + 1;
          q.push_back(w);
        } else if (it->second != dist[v] + 1) {
          throw std::logic_error("inconsistent grading inside a component");
        }
      }
    }
  }
  return coef;
}

// ---- local structure checks -------------------------------------------------

struct AxiomReport {
  bool pass = true;
  Int checked = 0;          // number of (element, color pair) checks performed
  std::string violation;    // description of the first failure
  std::string witness_key;  // canonical key of the failing element

  void fail(const std::string& what, const std::string& key) {
    if (pass) {
      pass = false;
      violation = what;
      witness_key = key;
    }
  }
};

// Checks, for every element of `elems` and every ordered color pair:
//  (a) lowering and raising are mutually inverse where defined,
//  (b) string lengths are finite and step by one along their own color,
//  (c) colors with cartan(i,j) = 0 commute and leave each other's strings,
//  (d) colors with cartan(i,j) = -1 satisfy the simply-laced local
//      difference conditions with their commuting/braid implications, in
//      both directions.
template <CrystalModel M>
AxiomReport check_local_axioms(const M& m, const std::vector<typename M::Elem>& elems,
                               Int cap = kDefaultStringCap) {
  using Elem = typename M::Elem;
  AxiomReport rep;
  auto eq = [&](const std::optional<Elem>& x, const std::optional<Elem>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || m.key(*x) == m.key(*y);
  };

  for (const Elem& x : elems) {
    if (!rep.pass) break;
    for (int i = 0; i < m.colors() && rep.pass; ++i) {
      rep.checked++;
      Int ei, fi;
      try {
        ei = epsilon(m, x, i, cap);
        fi = phi(m, x, i, cap);
      } catch (const std::runtime_error&) {
        rep.fail("string for color " + std::to_string(i) + " exceeds cap", m.key(x));
        break;
      }
      if (auto dn = m.f(x, i)) {
        auto back = m.e(*dn, i);
        if (!back || m.key(*back) != m.key(x))
          rep.fail("raising does not invert lowering, color " + std::to_string(i), m.key(x));
        else if (epsilon(m, *dn, i, cap) != ei + 1 || phi(m, *dn, i, cap) != fi - 1)
          rep.fail("string lengths do not step by one, color " + std::to_string(i), m.key(x));
      } else if (fi != 0) {
        rep.fail("lowering vanishes before the string ends", m.key(x));
      }
      if (auto up = m.e(x, i)) {
        auto back = m.f(*up, i);
        if (!back || m.key(*back) != m.key(x))
          rep.fail("lowering does not invert raising, color " + std::to_string(i), m.key(x));
      } else if (ei != 0) {
        rep.fail("raising vanishes before the string ends", m.key(x));
      }

      for (int j = 0; j < m.colors() && rep.pass; ++j) {
        if (j == i) continue;
        Int a = m.cartan(i, j);
        rep.checked++;
        auto eix = m.e(x, i);
        auto fix = m.f(x, i);
        if (a == 0) {
          if (eix) {
            if (epsilon(m, *eix, j, cap) != epsilon(m, x, j, cap) ||
                phi(m, *eix, j, cap) != phi(m, x, j, cap))
              rep.fail("orthogonal colors disturb each other's strings", m.key(x));
            auto ejx = m.e(x, j);
            if (ejx && !eq(m.e(*ejx, i), m.e(*eix, j)))
              rep.fail("orthogonal raisings do not commute", m.key(x));
          }
          if (fix) {
            auto fjx = m.f(x, j);
            if (fjx && !eq(m.f(*fjx, i), m.f(*fix, j)))
              rep.fail("orthogonal lowerings do not commute", m.key(x));
          }
        } else if (a == -1) {
          // difference conditions going up
          if (eix) {
            Int de = epsilon(m, *eix, j, cap) - epsilon(m, x, j, cap);
            Int df = phi(m, *eix, j, cap) - phi(m, x, j, cap);
            bool ok = (de == 0 && df == -1) || (de == 1 && df == 0);
            if (!ok) rep.fail("adjacent difference condition fails going up", m.key(x));
          }
          if (fix) {
            Int de = epsilon(m, *fix, j, cap) - epsilon(m, x, j, cap);
            Int df = phi(m, *fix, j, cap) - phi(m, x, j, cap);
            bool ok = (de == 0 && df == 1) || (de == -1 && df == 0);
            if (!ok) rep.fail("adjacent difference condition fails going down", m.key(x));
          }
          // commuting and braid implications (each unordered pair is seen
          // twice; checking both orders is harmless)
          auto ejx = m.e(x, j);
          if (eix && ejx && rep.pass) {
            Int dij = epsilon(m, *eix, j, cap) - epsilon(m, x, j, cap);
            Int dji = epsilon(m, *ejx, i, cap) - epsilon(m, x, i, cap);
            if (dij == 0 && dji == 0) {
              auto z1 = m.e(*ejx, i), z2 = m.e(*eix, j);
              if (!z1 || !z2 || m.key(*z1) != m.key(*z2))
                rep.fail("adjacent raisings fail to commute", m.key(x));
            } else if (dij == 1 && dji == 1) {
              auto p1 = m.e(*ejx, i);
              auto p2 = p1 ? m.e(*p1, i) : std::nullopt;
              auto p3 = p2 ? m.e(*p2, j) : std::nullopt;
              auto q1 = m.e(*eix, j);
              auto q2 = q1 ? m.e(*q1, j) : std::nullopt;
              auto q3 = q2 ? m.e(*q2, i) : std::nullopt;
              if (!p3 || !q3 || m.key(*p3) != m.key(*q3))
                rep.fail("adjacent raisings fail the braid relation", m.key(x));
            }
          }
          auto fjx = m.f(x, j);
          if (fix && fjx && rep.pass) {
            Int dij = phi(m, *fix, j, cap) - phi(m, x, j, cap);
            Int dji = phi(m, *fjx, i, cap) - phi(m, x, i, cap);
            if (dij == 0 && dji == 0) {
              auto z1 = m.f(*fjx, i), z2 = m.f(*fix, j);
              if (!z1 || !z2 || m.key(*z1) != m.key(*z2))
                rep.fail("adjacent lowerings fail to commute", m.key(x));
            } else if (dij == 1 && dji == 1) {
              auto p1 = m.f(*fjx, i);
              auto p2 = p1 ? m.f(*p1, i) : std::nullopt;
              auto p3 = p2 ? m.f(*p2, j) : std::nullopt;
              auto q1 = m.f(*fix, j);
              auto q2 = q1 ? m.f(*q1, j) : std::nullopt;
              auto q3 = q2 ? m.f(*q2, i) : std::nullopt;
              if (!p3 || !q3 || m.key(*p3) != m.key(*q3))
                rep.fail("adjacent lowerings fail the braid relation", m.key(x));
            }
          }
        } else {
          // not simply laced: flag, because the difference conditions here
          // only cover pairings 0 and -1
          if (eix || fix)
            rep.fail("color pair with pairing " + std::to_string(a) +
                         " outside the simply-laced checks",
                     m.key(x));
        }
      }
    }
  }
  return rep;
}

}  // namespace cryst
