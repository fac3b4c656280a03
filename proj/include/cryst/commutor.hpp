#pragma once
// Finite-type crystals on words in the letters 1..m, the longest-word
// involution, and the tensor-swap isomorphism built from it.
//
// A word carries the bracket rule letter by letter: for color i (1..m-1) a
// letter i contributes "(", a letter i+1 contributes ")".  The closure of a
// highest word 1^{s_1} 2^{s_2} ... realizes the irreducible crystal of that
// shape; products are plain concatenations.  The involution reverses every
// component (source to sink, lowering at i to raising at m-i) and composing
// it factorwise with the componentwise one yields the swap A (x) B -> B (x) A.
// String data (greedy peeling along a reduced word for the longest
// permutation) certifies where the swap sends each component's source.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cryst/crystal.hpp"
#include "cryst/partition.hpp"

namespace cryst {

// ---- words -------------------------------------------------------------------

class TensorWord {
 public:
  TensorWord(Int m, std::vector<Int> letters) : m_(m), letters_(std::move(letters)) {
    if (m_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
    for (Int v : letters_)
      if (v < 1 || v > m_) throw std::invalid_argument("letter out of range");
  }

  Int m() const { return m_; }
  Int size() const { return (Int)letters_.size(); }
  const std::vector<Int>& letters() const { return letters_; }

  // occurrence counts per letter value
  std::vector<Int> content() const {
    std::vector<Int> c((std::size_t)m_, 0);
    for (Int v : letters_) c[(std::size_t)(v - 1)]++;
    return c;
  }

  TensorWord prefix(Int k) const {
    check_cut(k);
    return TensorWord(m_, std::vector<Int>(letters_.begin(), letters_.begin() + k));
  }
  TensorWord suffix(Int k) const {  // everything after the first k letters
    check_cut(k);
    return TensorWord(m_, std::vector<Int>(letters_.begin() + k, letters_.end()));
  }

  bool operator==(const TensorWord&) const = default;
  auto operator<=>(const TensorWord&) const = default;

  std::string str() const {
    std::string s;
    for (std::size_t j = 0; j < letters_.size(); ++j) {
      if (j && m_ > 9) s += ".";
      s += std::to_string(letters_[j]);
    }
    return s;
  }

 private:
  void check_cut(Int k) const {
    if (k < 0 || k > size()) throw std::invalid_argument("cut outside the word");
  }
  Int m_ = 1;
  std::vector<Int> letters_;
};

inline TensorWord concat_words(const TensorWord& a, const TensorWord& b) {
  if (a.m() != b.m()) throw std::invalid_argument("alphabet mismatch");
  std::vector<Int> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return TensorWord(a.m(), std::move(ls));
}

namespace detail {

inline SignatureScan word_scan(const TensorWord& w, Int i) {
  if (i < 1 || i >= w.m()) throw std::invalid_argument("color out of range");
  std::vector<std::pair<Int, Int>> items;
  items.reserve((std::size_t)w.size());
  for (Int v : w.letters()) items.push_back({v == i + 1 ? 1 : 0, v == i ? 1 : 0});
  return scan_signature(items);
}

}  // namespace detail

inline Int word_phi(const TensorWord& w, Int i) { return detail::word_scan(w, i).unmatched_open; }
inline Int word_epsilon(const TensorWord& w, Int i) {
  return detail::word_scan(w, i).unmatched_close;
}

inline std::optional<TensorWord> word_f(const TensorWord& w, Int i) {
  SignatureScan s = detail::word_scan(w, i);
  if (s.first_open < 0) return std::nullopt;
  std::vector<Int> ls = w.letters();
  ls[(std::size_t)s.first_open] = i + 1;
  return TensorWord(w.m(), std::move(ls));
}

inline std::optional<TensorWord> word_e(const TensorWord& w, Int i) {
  SignatureScan s = detail::word_scan(w, i);
  if (s.last_close < 0) return std::nullopt;
  std::vector<Int> ls = w.letters();
  ls[(std::size_t)s.last_close] = i;
  return TensorWord(w.m(), std::move(ls));
}

// The weakly increasing reading word of a shape: row r contributes part(r)
// copies of the letter r.  It is the unique source of its component.
inline TensorWord highest_word(const Partition& shape, Int m) {
  if ((Int)shape.rows() > m) throw std::invalid_argument("shape has more rows than letters");
  std::vector<Int> ls;
  ls.reserve((std::size_t)shape.total());
  for (Int r = 1; r <= (Int)shape.rows(); ++r)
    for (Int t = 0; t < shape.part(r); ++t) ls.push_back(r);
  return TensorWord(m, std::move(ls));
}

// ---- closed word sets ----------------------------------------------------------

// A finite set of equal-length words closed under the colored operators, with
// cached string lengths, component structure, and the componentwise
// longest-word involution (source goes to sink, then the table propagates
// down the lowering edges by xi(f_i b) = e_{m-i} xi(b); any clash means the
// input was not a crystal).
class WordCrystal {
 public:
  WordCrystal(Int m, const std::vector<TensorWord>& seeds) : m_(m) {
    if (m_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
    if (seeds.empty()) throw std::invalid_argument("need at least one seed word");
    length_ = seeds.front().size();

    std::map<std::vector<Int>, Int> seen;
    std::vector<TensorWord> pool;
    auto add = [&](const TensorWord& w) {
      if (seen.emplace(w.letters(), (Int)pool.size()).second) pool.push_back(w);
    };
    for (const TensorWord& s : seeds) {
      if (s.m() != m_) throw std::invalid_argument("alphabet mismatch");
      if (s.size() != length_) throw std::invalid_argument("seed lengths differ");
      add(s);
    }
    for (std::size_t head = 0; head < pool.size(); ++head) {
      TensorWord cur = pool[head];  // copy: the pool may reallocate
      for (Int i = 1; i < m_; ++i) {
        if (auto dn = word_f(cur, i)) add(*dn);
        if (auto up = word_e(cur, i)) add(*up);
      }
    }
    std::sort(pool.begin(), pool.end());
    words_ = std::move(pool);
    for (std::size_t v = 0; v < words_.size(); ++v) index_[words_[v].letters()] = (Int)v;

    Int n = size(), k = colors();
    down_.assign((std::size_t)n, std::vector<Int>((std::size_t)k, -1));
    up_ = down_;
    phi_.assign((std::size_t)n, std::vector<Int>((std::size_t)k, 0));
    eps_ = phi_;
    for (Int v = 0; v < n; ++v) {
      for (Int i = 1; i <= k; ++i) {
        SignatureScan s = detail::word_scan(words_[(std::size_t)v], i);
        phi_[(std::size_t)v][(std::size_t)(i - 1)] = s.unmatched_open;
        eps_[(std::size_t)v][(std::size_t)(i - 1)] = s.unmatched_close;
        if (s.first_open >= 0) {
          std::vector<Int> ls = words_[(std::size_t)v].letters();
          ls[(std::size_t)s.first_open] = i + 1;
          down_[(std::size_t)v][(std::size_t)(i - 1)] = index_.at(ls);
        }
        if (s.last_close >= 0) {
          std::vector<Int> ls = words_[(std::size_t)v].letters();
          ls[(std::size_t)s.last_close] = i;
          up_[(std::size_t)v][(std::size_t)(i - 1)] = index_.at(ls);
        }
      }
    }

    label_components();
    build_involution();
  }

  Int m() const { return m_; }
  Int colors() const { return m_ - 1; }
  Int size() const { return (Int)words_.size(); }
  Int length() const { return length_; }

  const TensorWord& word(Int v) const {
    check_vertex(v);
    return words_[(std::size_t)v];
  }
  bool contains(const TensorWord& w) const { return index_.count(w.letters()) > 0; }
  Int index(const TensorWord& w) const {
    auto it = index_.find(w.letters());
    if (it == index_.end() || w.m() != m_)
      throw std::invalid_argument("word is not a vertex");
    return it->second;
  }

  std::optional<Int> f(Int v, Int i) const {
    Int w = down_[(std::size_t)v][(std::size_t)check_color(i)];
    return w < 0 ? std::nullopt : std::optional<Int>(w);
  }
  std::optional<Int> e(Int v, Int i) const {
    Int w = up_[(std::size_t)v][(std::size_t)check_color(i)];
    return w < 0 ? std::nullopt : std::optional<Int>(w);
  }
  Int phi(Int v, Int i) const {
    check_vertex(v);
    return phi_[(std::size_t)v][(std::size_t)check_color(i)];
  }
  Int epsilon(Int v, Int i) const {
    check_vertex(v);
    return eps_[(std::size_t)v][(std::size_t)check_color(i)];
  }
  std::vector<Int> weight(Int v) const { return word(v).content(); }

  Int components() const { return (Int)hw_.size(); }
  Int component(Int v) const {
    check_vertex(v);
    return comp_[(std::size_t)v];
  }
  Int highest(Int c) const { return hw_.at((std::size_t)c); }
  Int lowest(Int c) const { return low_.at((std::size_t)c); }

  // the shape whose reading word sits at the component's source
  Partition shape(Int c) const { return Partition(word(highest(c)).content()); }

  Int xi(Int v) const {
    check_vertex(v);
    return xi_[(std::size_t)v];
  }

 private:
  void check_vertex(Int v) const {
    if (v < 0 || v >= size()) throw std::invalid_argument("vertex out of range");
  }
  Int check_color(Int i) const {
    if (i < 1 || i >= m_) throw std::invalid_argument("color out of range");
    return i - 1;
  }

  void label_components() {
    Int n = size(), k = colors();
    comp_.assign((std::size_t)n, -1);
    for (Int s = 0; s < n; ++s) {
      if (comp_[(std::size_t)s] >= 0) continue;
      Int c = (Int)hw_.size();
      std::vector<Int> queue{s};
      comp_[(std::size_t)s] = c;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Int v = queue[head];
        for (Int i = 0; i < k; ++i) {
          for (Int w : {down_[(std::size_t)v][(std::size_t)i], up_[(std::size_t)v][(std::size_t)i]}) {
            if (w >= 0 && comp_[(std::size_t)w] < 0) {
              comp_[(std::size_t)w] = c;
              queue.push_back(w);
            }
          }
        }
      }
      Int top = -1, bot = -1;
      for (Int v : queue) {
        bool src = true, snk = true;
        for (Int i = 0; i < k; ++i) {
          src = src && eps_[(std::size_t)v][(std::size_t)i] == 0;
          snk = snk && phi_[(std::size_t)v][(std::size_t)i] == 0;
        }
        if (src) top = top < 0 ? v : -2;
        if (snk) bot = bot < 0 ? v : -2;
      }
      if (top < 0 || bot < 0) throw std::logic_error("component is not irreducible");
      hw_.push_back(top);
      low_.push_back(bot);
    }
  }

  void build_involution() {
    Int n = size(), k = colors();
    xi_.assign((std::size_t)n, -1);
    for (std::size_t c = 0; c < hw_.size(); ++c) {
      std::vector<Int> queue{hw_[c]};
      xi_[(std::size_t)hw_[c]] = low_[c];
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Int v = queue[head];
        for (Int i = 1; i <= k; ++i) {
          Int w = down_[(std::size_t)v][(std::size_t)(i - 1)];
          if (w < 0) continue;
          Int cand = up_[(std::size_t)xi_[(std::size_t)v]][(std::size_t)(m_ - i - 1)];
          if (cand < 0) throw std::logic_error("involution propagation conflict");
          if (xi_[(std::size_t)w] < 0) {
            xi_[(std::size_t)w] = cand;
            queue.push_back(w);
          } else if (xi_[(std::size_t)w] != cand) {
            throw std::logic_error("involution propagation conflict");
          }
        }
      }
    }
    for (Int v = 0; v < n; ++v)
      if (xi_[(std::size_t)v] < 0) throw std::logic_error("involution propagation incomplete");
  }

  Int m_ = 1;
  Int length_ = 0;
  std::vector<TensorWord> words_;
  std::map<std::vector<Int>, Int> index_;
  std::vector<std::vector<Int>> down_, up_;  // [vertex][color-1], -1 = none
  std::vector<std::vector<Int>> phi_, eps_;
  std::vector<Int> comp_;
  std::vector<Int> hw_, low_;  // per component
  std::vector<Int> xi_;
};

inline WordCrystal standard_crystal(Int m) { return WordCrystal(m, {TensorWord(m, {1})}); }

// the connected crystal generated by the shape's reading word
inline WordCrystal highest_weight_crystal(const Partition& shape, Int m) {
  return WordCrystal(m, {highest_word(shape, m)});
}

inline WordCrystal tensor_product(const WordCrystal& x, const WordCrystal& y) {
  if (x.m() != y.m()) throw std::invalid_argument("alphabet mismatch");
  std::vector<TensorWord> seeds;
  seeds.reserve((std::size_t)(x.size() * y.size()));
  for (Int vx = 0; vx < x.size(); ++vx)
    for (Int vy = 0; vy < y.size(); ++vy) seeds.push_back(concat_words(x.word(vx), y.word(vy)));
  WordCrystal p(x.m(), seeds);
  if (p.size() != x.size() * y.size()) throw std::logic_error("product escaped its factors");
  return p;
}

// the involution as one table, vertex -> vertex
inline std::vector<Int> schutzenberger(const WordCrystal& b) {
  std::vector<Int> table((std::size_t)b.size());
  for (Int v = 0; v < b.size(); ++v) table[(std::size_t)v] = b.xi(v);
  return table;
}

// ---- the swap ------------------------------------------------------------------

// a (x) b  ->  xi( xi(b) (x) xi(a) ), the outer involution taken in the
// swapped product.  Built as a full vertex table; both defining expressions
// (this one and its flip-conjugate inverse form) are evaluated and must agree.
struct Commutor {
  WordCrystal source;  // x (x) y
  WordCrystal target;  // y (x) x
  Int split = 0;       // where a source word cuts into its two factors
  std::vector<Int> image;

  TensorWord apply(const TensorWord& w) const {
    return target.word(image[(std::size_t)source.index(w)]);
  }
};

inline Commutor crystal_commutor(const WordCrystal& x, const WordCrystal& y) {
  Commutor c{tensor_product(x, y), tensor_product(y, x), x.length(), {}};
  c.image.assign((std::size_t)c.source.size(), -1);
  auto flip_xi = [&](const TensorWord& u) {
    TensorWord a = u.prefix(c.split), b = u.suffix(c.split);
    return concat_words(y.word(y.xi(y.index(b))), x.word(x.xi(x.index(a))));
  };
  for (Int v = 0; v < c.source.size(); ++v) {
    Int one = c.target.xi(c.target.index(flip_xi(c.source.word(v))));
    Int two = c.target.index(flip_xi(c.source.word(c.source.xi(v))));
    if (one != two) throw std::logic_error("the two swap expressions disagree");
    c.image[(std::size_t)v] = one;
  }
  return c;
}

// ---- string data ---------------------------------------------------------------

// reduced words for the longest permutation of m letters

inline std::vector<Int> staircase_word(Int m) {
  std::vector<Int> w;
  for (Int b = 1; b < m; ++b)
    for (Int i = b; i >= 1; --i) w.push_back(i);
  return w;
}

// (m - i_M, ..., m - i_1): reversal composed with the diagram flip, again a
// reduced word for the longest permutation
inline std::vector<Int> theta_reverse(const std::vector<Int>& word, Int m) {
  std::vector<Int> out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(m - *it);
  return out;
}

// letters are colors, the length is m(m-1)/2, and the product of the adjacent
// transpositions is the order-reversing permutation
inline void validate_longest_word(const std::vector<Int>& word, Int m) {
  if (m < 1) throw std::invalid_argument("alphabet size must be >= 1");
  for (Int i : word)
    if (i < 1 || i >= m) throw std::invalid_argument("word letter is not a color");
  if ((Int)word.size() != m * (m - 1) / 2)
    throw std::invalid_argument("word length is not the longest-permutation length");
  for (Int start = 1; start <= m; ++start) {
    Int cur = start;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (cur == *it)
        cur = *it + 1;
      else if (cur == *it + 1)
        cur = *it;
    }
    if (cur != m + 1 - start)
      throw std::invalid_argument("word does not multiply to the longest permutation");
  }
}

// The coroot of the k-th word letter reflected by the preceding prefix
// (simple reflections permute coordinates); 1-based k.  Pairing a coordinate
// vector against a content vector is their dot product.
inline std::vector<Int> prefix_coroot(const std::vector<Int>& word, Int k, Int m) {
  if (k < 1 || k > (Int)word.size()) throw std::invalid_argument("position out of range");
  std::vector<Int> v((std::size_t)m, 0);
  auto letter = [&](Int t) {
    Int i = word[(std::size_t)t];
    if (i < 1 || i >= m) throw std::invalid_argument("word letter is not a color");
    return i;
  };
  Int i = letter(k - 1);
  v[(std::size_t)(i - 1)] = 1;
  v[(std::size_t)i] = -1;
  for (Int t = k - 2; t >= 0; --t) {
    Int j = letter(t);
    std::swap(v[(std::size_t)(j - 1)], v[(std::size_t)j]);
  }
  return v;
}

struct KashiwaraData {
  std::vector<Int> word;    // reduced word for the longest permutation
  std::vector<Int> values;  // one peeled string length per word letter
  bool operator==(const KashiwaraData&) const = default;
};

// Greedy downward peeling: exhaust the lowering string of each word letter in
// turn.  Lands on the component's sink; the data separates vertices.
inline KashiwaraData kashiwara_down(const WordCrystal& b, Int v, const std::vector<Int>& word) {
  validate_longest_word(word, b.m());
  KashiwaraData out{word, {}};
  out.values.reserve(word.size());
  Int cur = v;
  for (Int i : word) {
    Int p = b.phi(cur, i);
    for (Int t = 0; t < p; ++t) cur = *b.f(cur, i);
    out.values.push_back(p);
  }
  if (cur != b.lowest(b.component(v))) throw std::logic_error("downward peeling missed the sink");
  return out;
}

// Upward peeling: exhaust raising strings; lands on the component's source.
inline KashiwaraData kashiwara_up(const WordCrystal& b, Int v, const std::vector<Int>& word) {
  validate_longest_word(word, b.m());
  KashiwaraData out{word, {}};
  out.values.reserve(word.size());
  Int cur = v;
  for (Int i : word) {
    Int q = b.epsilon(cur, i);
    for (Int t = 0; t < q; ++t) cur = *b.e(cur, i);
    out.values.push_back(q);
  }
  if (cur != b.highest(b.component(v))) throw std::logic_error("upward peeling missed the source");
  return out;
}

// ---- certification of the swap on component sources ------------------------------

// For each source u_shape (x) c of the product, the swap image u_other (x) b
// must satisfy  p_k + q_{M-k+1} = < prefix coroot k, content >,  where p
// peels c downward along `word` and q peels b downward along the
// theta-reversed word; the q data must also pin b down uniquely.  Together
// these determine the swap from string data alone.
struct StarCheck {
  TensorWord partner;             // c, the source's right factor
  TensorWord image;               // b, the image's right factor
  std::vector<Int> down_partner;  // p
  std::vector<Int> down_image;    // q
  std::vector<Int> pairing;       // right-hand sides
  bool sum_rule = false;
  bool determined = false;
};

struct StarReport {
  Partition lambda, mu;
  Int m = 0;
  std::vector<Int> word;
  std::vector<StarCheck> checks;
  bool pass = false;
};

inline StarReport verify_star_characterization(const Partition& lambda, const Partition& mu,
                                               Int m, const std::vector<Int>& word) {
  validate_longest_word(word, m);
  WordCrystal left = highest_weight_crystal(lambda, m);
  WordCrystal right = highest_weight_crystal(mu, m);
  Commutor cm = crystal_commutor(left, right);
  std::vector<Int> twisted = theta_reverse(word, m);
  Int M = (Int)word.size();

  std::vector<KashiwaraData> data_table;  // left-factor data, for uniqueness
  data_table.reserve((std::size_t)left.size());
  for (Int u = 0; u < left.size(); ++u) data_table.push_back(kashiwara_down(left, u, twisted));

  StarReport rep{lambda, mu, m, word, {}, true};
  for (Int v = 0; v < cm.source.size(); ++v) {
    bool top = true;
    for (Int i = 1; i < m && top; ++i) top = cm.source.epsilon(v, i) == 0;
    if (!top) continue;
    const TensorWord& w = cm.source.word(v);
    if (w.prefix(cm.split) != highest_word(lambda, m))
      throw std::logic_error("component source is not anchored at the top");
    TensorWord out = cm.target.word(cm.image[(std::size_t)v]);
    if (out.prefix(right.length()) != highest_word(mu, m))
      throw std::logic_error("swap image is not anchored at the top");

    StarCheck chk{w.suffix(cm.split), out.suffix(right.length()), {}, {}, {}, false, false};
    chk.down_partner = kashiwara_down(right, right.index(chk.partner), word).values;
    chk.down_image = kashiwara_down(left, left.index(chk.image), twisted).values;
    std::vector<Int> nu = w.content();
    chk.sum_rule = true;
    for (Int k = 1; k <= M; ++k) {
      std::vector<Int> co = prefix_coroot(word, k, m);
      Int r = std::inner_product(co.begin(), co.end(), nu.begin(), Int{0});
      chk.pairing.push_back(r);
      if (chk.down_partner[(std::size_t)(k - 1)] + chk.down_image[(std::size_t)(M - k)] != r)
        chk.sum_rule = false;
    }
    Int hits = 0;
    for (const KashiwaraData& d : data_table)
      if (d.values == chk.down_image) hits++;
    chk.determined = hits == 1;
    rep.pass = rep.pass && chk.sum_rule && chk.determined;
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

}  // namespace cryst
