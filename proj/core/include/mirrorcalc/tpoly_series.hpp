#pragma once

#include <map>
#include <string>
#include <vector>

#include "mirrorcalc/truncated_series.hpp"

namespace mirrorcalc {

// sum_j t^j c_j(q) with rational q-series coefficients, q = e^t.
class TPolySeries {
 public:
  explicit TPolySeries(int order);
  static TPolySeries from_q(const ScalarQSeries& s);
  static TPolySeries t(int order);  // the series t

  int order() const { return order_; }
  int t_degree() const;  // -1 for zero
  ScalarQSeries coefficient(int j) const;
  Rational at(int j, int d) const;
  void add(int j, int d, const Rational& c);
  bool is_zero() const { return t_degree() < 0; }
  bool is_t_free() const { return t_degree() <= 0; }

  // d/dt, acting on t^j and on q^d = e^{dt}
  TPolySeries derivative() const;

  TPolySeries& operator+=(const TPolySeries& o);
  TPolySeries& operator-=(const TPolySeries& o);
  friend TPolySeries operator+(TPolySeries a, const TPolySeries& b) { return a += b; }
  friend TPolySeries operator-(TPolySeries a, const TPolySeries& b) { return a -= b; }
  friend TPolySeries operator*(const TPolySeries& a, const TPolySeries& b);
  friend TPolySeries operator*(const TPolySeries& a, const ScalarQSeries& s);
  friend TPolySeries operator*(TPolySeries a, const Rational& c);
  friend bool operator==(const TPolySeries& a, const TPolySeries& b);

  std::string str() const;

 private:
  void grow(int j);
  int order_;
  std::vector<ScalarQSeries> by_t_;
};

// Pushforward to a point: alpha power -> t-polynomial q-series
struct IntegratedSeries {
  int order = 0;
  std::map<int, TPolySeries> by_alpha_power;

  // nonzero alpha powers only
  std::vector<int> alpha_powers() const;
  TPolySeries at_alpha_power(int k) const;
};

}  // namespace mirrorcalc
