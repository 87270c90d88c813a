#include "mirrorcalc/tpoly_series.hpp"

#include <sstream>

namespace mirrorcalc {

TPolySeries::TPolySeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

TPolySeries TPolySeries::from_q(const ScalarQSeries& s) {
  TPolySeries r(s.order());
  r.by_t_.push_back(s);
  return r;
}

TPolySeries TPolySeries::t(int order) {
  TPolySeries r(order);
  r.add(1, 0, Rational(1));
  return r;
}

int TPolySeries::t_degree() const {
  for (int j = static_cast<int>(by_t_.size()) - 1; j >= 0; --j)
    if (!by_t_[j].is_zero()) return j;
  return -1;
}

ScalarQSeries TPolySeries::coefficient(int j) const {
  if (j >= 0 && j < static_cast<int>(by_t_.size())) return by_t_[j];
  return scalar_series(order_);
}

Rational TPolySeries::at(int j, int d) const {
  if (j < 0 || j >= static_cast<int>(by_t_.size()) || d < 0 || d > order_) return Rational(0);
  return by_t_[j][d];
}

void TPolySeries::grow(int j) {
  while (static_cast<int>(by_t_.size()) <= j) by_t_.push_back(scalar_series(order_));
}

void TPolySeries::add(int j, int d, const Rational& c) {
  if (d > order_) return;
  grow(j);
  by_t_[j][d] += c;
}

TPolySeries TPolySeries::derivative() const {
  TPolySeries r(order_);
  for (int j = 0; j < static_cast<int>(by_t_.size()); ++j)
    for (int d = 0; d <= order_; ++d) {
      const Rational& c = by_t_[j][d];
      if (c.is_zero()) continue;
      if (j > 0) r.add(j - 1, d, c * Rational(j));
      if (d > 0) r.add(j, d, c * Rational(d));
    }
  return r;
}

TPolySeries& TPolySeries::operator+=(const TPolySeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("series orders differ");
  grow(static_cast<int>(o.by_t_.size()) - 1);
  for (size_t j = 0; j < o.by_t_.size(); ++j) by_t_[j] += o.by_t_[j];
  return *this;
}

TPolySeries& TPolySeries::operator-=(const TPolySeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("series orders differ");
  grow(static_cast<int>(o.by_t_.size()) - 1);
  for (size_t j = 0; j < o.by_t_.size(); ++j) by_t_[j] -= o.by_t_[j];
  return *this;
}

TPolySeries operator*(const TPolySeries& a, const TPolySeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("series orders differ");
  TPolySeries r(a.order_);
  for (size_t i = 0; i < a.by_t_.size(); ++i) {
    if (a.by_t_[i].is_zero()) continue;
    for (size_t j = 0; j < b.by_t_.size(); ++j) {
      if (b.by_t_[j].is_zero()) continue;
      r.grow(static_cast<int>(i + j));
      r.by_t_[i + j] += a.by_t_[i] * b.by_t_[j];
    }
  }
  return r;
}

TPolySeries operator*(const TPolySeries& a, const ScalarQSeries& s) {
  TPolySeries r(a.order_);
  for (const auto& c : a.by_t_) r.by_t_.push_back(c * s);
  return r;
}

TPolySeries operator*(TPolySeries a, const Rational& c) {
  for (auto& s : a.by_t_) s = s * c;
  return a;
}

bool operator==(const TPolySeries& a, const TPolySeries& b) {
  if (a.order_ != b.order_) return false;
  size_t m = std::max(a.by_t_.size(), b.by_t_.size());
  for (size_t j = 0; j < m; ++j)
    if (!(a.coefficient(static_cast<int>(j)) == b.coefficient(static_cast<int>(j)))) return false;
  return true;
}

std::string TPolySeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < static_cast<int>(by_t_.size()); ++j)
    for (int d = 0; d <= order_; ++d) {
      const Rational& c = by_t_[j][d];
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (j) os << "*t^" << j;
      if (d) os << "*q^" << d;
    }
  if (first) os << "0";
  return os.str();
}

std::vector<int> IntegratedSeries::alpha_powers() const {
  std::vector<int> ks;
  for (const auto& [k, s] : by_alpha_power)
    if (!s.is_zero()) ks.push_back(k);
  return ks;
}

TPolySeries IntegratedSeries::at_alpha_power(int k) const {
  auto it = by_alpha_power.find(k);
  return it == by_alpha_power.end() ? TPolySeries(order) : it->second;
}

}  // namespace mirrorcalc
