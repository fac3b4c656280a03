#pragma once
// Power series in q, truncated at a fixed degree, with arbitrary-precision
// integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "cryst/partition.hpp"

namespace cryst {

using BigInt = boost::multiprecision::cpp_int;

class QSeries {
 public:
  explicit QSeries(Int deg) : c_((std::size_t)deg + 1, 0) {
    if (deg < 0) throw std::invalid_argument("truncation degree must be >= 0");
  }
  static QSeries one(Int deg) {
    QSeries s(deg);
    s.c_[0] = 1;
    return s;
  }
  static QSeries monomial(Int k, Int deg, BigInt coef = 1) {
    QSeries s(deg);
    if (k < 0) throw std::invalid_argument("negative exponent");
    if (k <= deg) s.c_[(std::size_t)k] = std::move(coef);
    return s;
  }

  Int degree() const { return (Int)c_.size() - 1; }
  const BigInt& operator[](Int k) const {
    if (k < 0 || k > degree()) throw std::out_of_range("coefficient index");
    return c_[(std::size_t)k];
  }
  BigInt& operator[](Int k) {
    if (k < 0 || k > degree()) throw std::out_of_range("coefficient index");
    return c_[(std::size_t)k];
  }
  const std::vector<BigInt>& coeffs() const { return c_; }

  QSeries& operator+=(const QSeries& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  QSeries& operator-=(const QSeries& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    a.check(b);
    QSeries out((Int)a.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  // multiply by (1 - q^k)
  QSeries times_one_minus(Int k) const {
    require_positive(k);
    QSeries out = *this;
    for (Int d = degree(); d >= k; --d) out.c_[(std::size_t)d] -= c_[(std::size_t)(d - k)];
    return out;
  }

  // multiply by 1/(1 - q^k)
  QSeries over_one_minus(Int k) const {
    require_positive(k);
    QSeries out = *this;
    for (Int d = k; d <= degree(); ++d) out.c_[(std::size_t)d] += out.c_[(std::size_t)(d - k)];
    return out;
  }

  // multiplicative inverse; the constant term must be a unit (+1 or -1)
  QSeries inverse() const {
    if (c_[0] == 0) throw std::invalid_argument("cannot invert: constant term is zero");
    if (c_[0] != 1 && c_[0] != -1)
      throw std::invalid_argument("cannot invert over the integers: constant term not a unit");
    QSeries out((Int)c_.size() - 1);
    out.c_[0] = c_[0];  // 1/c0 = c0 for units
    for (std::size_t d = 1; d < c_.size(); ++d) {
      BigInt acc = 0;
      for (std::size_t j = 1; j <= d; ++j) acc += c_[j] * out.c_[d - j];
      out.c_[d] = -acc * c_[0];
    }
    return out;
  }

  QSeries pow(Int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    QSeries acc = one(degree()), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  bool operator==(const QSeries&) const = default;

  std::string str() const {
    std::string s;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      if (!first) s += " + ";
      s += c_[k].str();
      if (k > 0) s += "*q^" + std::to_string(k);
      first = false;
    }
    if (first) s = "0";
    return s;
  }

 private:
  void check(const QSeries& o) const {
    if (o.c_.size() != c_.size())
      throw std::invalid_argument("truncation degrees differ");
  }
  static void require_positive(Int k) {
    if (k <= 0) throw std::invalid_argument("exponent must be positive");
  }
  std::vector<BigInt> c_;
};

inline QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries series_inv_cyclotomic(const QSeries& a, Int k) { return a.over_one_minus(k); }
inline QSeries series_pow(const QSeries& a, Int e) { return a.pow(e); }

}  // namespace cryst
