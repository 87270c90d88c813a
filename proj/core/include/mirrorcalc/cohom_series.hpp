#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "mirrorcalc/splitting_type.hpp"
#include "mirrorcalc/tpoly_series.hpp"
#include "mirrorcalc/truncated_series.hpp"

namespace mirrorcalc {

// coefficient index of q^d t^j H^i alpha^k
struct CellKey {
  int d = 0;
  int j = 0;
  int i = 0;
  int k = 0;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

// Truncated series in q (q^d, d <= order) with t-polynomial, H-polynomial
// (H^{n+1} = 0) and alpha-Laurent coefficients. An optional closed-form
// summand e^{-Ht/alpha} * Omega carries Omega with a negative H exponent.
class CohomSeries {
 public:
  CohomSeries(int n, int order);

  static CohomSeries constant(int n, int order, const Rational& c);
  static CohomSeries cell(int n, int order, CellKey key, const Rational& c);
  static CohomSeries linear(int n, int order, const Rational& h_coeff, const Rational& alpha_coeff);
  static CohomSeries from_q(int n, const ScalarQSeries& s);
  // e^{sign H t / alpha}
  static CohomSeries exp_ht(int n, int order, const Rational& sign);
  // e^{sign H g(q) / alpha}
  static CohomSeries exp_hg(int n, const ScalarQSeries& g, const Rational& sign);
  // e^{-Ht/alpha} Omega; expanded into cells when h >= 0, tagged otherwise
  static CohomSeries omega_series(int n, int order, const OmegaClass& omega);

  int n() const { return n_; }
  int order() const { return order_; }
  const std::map<CellKey, Rational>& cells() const { return cells_; }
  Rational coefficient(const CellKey& key) const;
  const std::optional<OmegaClass>& omega_term() const { return omega_; }
  void set_omega_term(std::optional<OmegaClass> omega);
  CohomSeries without_omega() const;
  bool is_zero() const { return cells_.empty() && !omega_; }

  // Cells beyond the q or H truncation are dropped; t^j with j > n or a
  // negative H exponent is an error.
  void add(const CellKey& key, const Rational& c);

  CohomSeries q_shifted(int d) const;
  // c * H^h * this; negative resulting H exponents are an error
  CohomSeries times_h_power(const Rational& c, int h) const;

  CohomSeries& operator+=(const CohomSeries& o);
  CohomSeries& operator-=(const CohomSeries& o);
  CohomSeries operator-() const;
  friend CohomSeries operator+(CohomSeries a, const CohomSeries& b) { return a += b; }
  friend CohomSeries operator-(CohomSeries a, const CohomSeries& b) { return a -= b; }
  friend CohomSeries operator*(CohomSeries a, const Rational& c);
  friend bool operator==(const CohomSeries& a, const CohomSeries& b) = default;

  std::string str() const;

 private:
  void same_shape(const CohomSeries& o) const;

  int n_;
  int order_;
  std::map<CellKey, Rational> cells_;
  std::optional<OmegaClass> omega_;
};

// Truncated product. A tagged Omega summand distributes over the other
// factor; its part against the (0,0,0,0) cell stays tagged, the rest must
// expand to nonnegative H powers.
CohomSeries series_mul(const CohomSeries& a, const CohomSeries& b);
// Inverse of a unit whose constant part is c * alpha^k.
CohomSeries series_invert_unit(const CohomSeries& a);
// t -> t + g(q), each q^d block also multiplied by e^{d g(q)}
CohomSeries shift_t(const CohomSeries& a, const ScalarQSeries& g);
// s(q) * a
CohomSeries scale_by(const CohomSeries& a, const ScalarQSeries& s);
// H^n coefficient of every cell; a tagged Omega contributes
// scalar (-t/alpha)^{n-h} / (n-h)! when 0 <= n-h <= n.
IntegratedSeries integrate_pn(const CohomSeries& a);
// T(q) = q + O(q^2) -> q(Q)
ScalarQSeries qseries_reversion(const ScalarQSeries& T);

// first cell (or the tag) with i + k != delta(d)
std::optional<CellKey> homogeneity_violation(const CohomSeries& a, const std::function<int(int)>& delta);

}  // namespace mirrorcalc
