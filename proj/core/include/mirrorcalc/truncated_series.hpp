#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mirrorcalc/rational.hpp"

namespace mirrorcalc {

inline Rational one_like(const Rational&) { return Rational(1); }

// sum_{d=0}^{order} c_d q^d, truncated at q^{order}. C must provide ring
// operations, multiplication by Rational and is_zero(); one_like(C) found
// by ADL supplies the unit.
template <class C>
class TruncatedSeries {
 public:
  TruncatedSeries(int order, const C& zero) : zero_(zero), c_(check_order(order) + 1, zero) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& zero() const { return zero_; }
  const C& operator[](int d) const { return c_.at(d); }
  C& operator[](int d) { return c_.at(d); }
  const std::vector<C>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_order(o);
    for (size_t d = 0; d < c_.size(); ++d) c_[d] += o.c_[d];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    same_order(o);
    for (size_t d = 0; d < c_.size(); ++d) c_[d] -= o.c_[d];
    return *this;
  }
  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_order(b);
    TruncatedSeries r(a.order(), a.zero_);
    const int D = a.order();
    for (int i = 0; i <= D; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= D; ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const C& s) {
    for (auto& v : a.c_) v = v * s;
    return a;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  // 1 / this; requires an invertible constant term
  TruncatedSeries inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("series with zero constant term is not a unit");
    TruncatedSeries r(order(), zero_);
    C inv0 = one_like(zero_) / c_[0];
    r.c_[0] = inv0;
    for (int s = 1; s <= order(); ++s) {
      C acc = zero_;
      for (int k = 1; k <= s; ++k)
        if (!c_[k].is_zero()) acc += c_[k] * r.c_[s - k];
      r.c_[s] = -(acc * inv0);
    }
    return r;
  }

  // exp of a series without constant term
  TruncatedSeries exp() const {
    if (!c_[0].is_zero()) throw std::domain_error("exp needs a series without constant term");
    TruncatedSeries r(order(), zero_);
    r.c_[0] = one_like(zero_);
    for (int s = 1; s <= order(); ++s) {
      C acc = zero_;
      for (int k = 1; k <= s; ++k)
        if (!c_[k].is_zero()) acc += (c_[k] * Rational(k)) * r.c_[s - k];
      r.c_[s] = acc * Rational(1, s);
    }
    return r;
  }

  // log of a series with constant term 1
  TruncatedSeries log() const {
    if (!(c_[0] == one_like(zero_))) throw std::domain_error("log needs constant term 1");
    TruncatedSeries r(order(), zero_);
    for (int s = 1; s <= order(); ++s) {
      C acc = c_[s] * Rational(s);
      for (int k = 1; k < s; ++k)
        if (!c_[s - k].is_zero()) acc -= (r.c_[k] * Rational(k)) * c_[s - k];
      r.c_[s] = acc * Rational(1, s);
    }
    return r;
  }

  TruncatedSeries pow(int m) const {
    if (m < 0) return inverse().pow(-m);
    TruncatedSeries r = one(order(), zero_);
    for (int k = 0; k < m; ++k) r = r * *this;
    return r;
  }

  // this(inner(q)); inner must have no constant term
  TruncatedSeries compose(const TruncatedSeries& inner) const {
    same_order(inner);
    if (!inner.c_[0].is_zero()) throw std::domain_error("composition needs inner series without constant term");
    TruncatedSeries r(order(), zero_);
    for (int k = order(); k >= 0; --k) {
      r = r * inner;
      r.c_[0] += c_[k];
    }
    return r;
  }

  // q^d * this
  TruncatedSeries shifted(int d) const {
    TruncatedSeries r(order(), zero_);
    for (int s = 0; s + d <= order(); ++s) r.c_[s + d] = c_[s];
    return r;
  }

  static TruncatedSeries one(int order, const C& zero) {
    TruncatedSeries r(order, zero);
    r.c_[0] = one_like(zero);
    return r;
  }
  static TruncatedSeries monomial(int order, const C& zero, int d, const C& c) {
    TruncatedSeries r(order, zero);
    if (d <= order) r.c_[d] = c;
    return r;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    return order;
  }
  void same_order(const TruncatedSeries& o) const {
    if (o.order() != order()) {
      throw std::invalid_argument("series orders differ: " + std::to_string(order()) + " vs " +
                                  std::to_string(o.order()));
    }
  }

  C zero_;
  std::vector<C> c_;
};

using ScalarQSeries = TruncatedSeries<Rational>;

inline ScalarQSeries scalar_series(int order) { return ScalarQSeries(order, Rational(0)); }

}  // namespace mirrorcalc

namespace mirrorcalc {

// Compositional inverse of T(q) = q + O(q^2): returns q(Q) with T(q(Q)) = Q.
template <class C>
TruncatedSeries<C> reversion(const TruncatedSeries<C>& T) {
  const int D = T.order();
  const C one = one_like(T.zero());
  if (D >= 1 && (!T[0].is_zero() || !(T[1] == one))) {
    throw std::domain_error("reversion needs T = q + O(q^2)");
  }
  // T = q phi(q); iterate q <- Q / phi(q), one correct order per pass.
  TruncatedSeries<C> phi(D, T.zero());
  for (int d = 0; d < D; ++d) phi[d] = T[d + 1];
  TruncatedSeries<C> Q = TruncatedSeries<C>::monomial(D, T.zero(), 1, one);
  TruncatedSeries<C> q = Q;
  for (int pass = 0; pass < D; ++pass) q = Q * phi.compose(q).inverse();
  return q;
}

// For the substitution t -> t + g(e^t), the series h with
// (t + h) + g(q e^h) = t, i.e. h = -g(q e^h).
template <class C>
TruncatedSeries<C> inverse_t_shift(const TruncatedSeries<C>& g) {
  const int D = g.order();
  if (!g[0].is_zero()) throw std::domain_error("shift series must have no constant term");
  TruncatedSeries<C> Q = TruncatedSeries<C>::monomial(D, g.zero(), 1, one_like(g.zero()));
  TruncatedSeries<C> h(D, g.zero());
  for (int pass = 0; pass < D; ++pass) h = -g.compose(Q * h.exp());
  return h;
}

}  // namespace mirrorcalc
