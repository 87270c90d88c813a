#pragma once

// Helpers and independent reference values shared by the unit tests and the
// acceptance binary. Nothing in here calls into the code under test to
// produce an expected value.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mirrorcalc/cohom_series.hpp"
#include "mirrorcalc/pipeline.hpp"
#include "mirrorcalc/polynomial.hpp"
#include "mirrorcalc/rational.hpp"
#include "mirrorcalc/tpoly_series.hpp"

namespace mirrorcalc::ref {

inline Rational fact(int n) {
  Rational r(1);
  for (int k = 2; k <= n; ++k) r *= Rational(k);
  return r;
}

inline std::vector<Rational> parse_list(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(Rational::parse(x));
  return out;
}

// Published tables.
inline std::vector<Rational> local_p2_table() {
  return parse_list({"3", "-45/8", "244/9", "-12333/64", "211878/125", "-102365/6", "64639725/343",
                     "-1140830253/512", "6742982701/243", "-36001193817/100"});
}
inline std::vector<Rational> p3_table() {
  return parse_list({"-4", "-9/2", "-328/27", "-777/16", "-30004/125", "-4073/3", "-2890808/343",
                     "-7168777/128", "-285797488/729", "-714787509/250"});
}
// Instanton numbers of the quintic threefold, degrees 1..6.
inline std::vector<Rational> quintic_instantons() {
  return parse_list({"2875", "609250", "317206375", "242467530000", "229305888887625", "248249742118022000"});
}

// Mirror shifts in closed form, coefficients d = 0..order.
inline ScalarQSeries local_p2_g(int order) {
  ScalarQSeries g = scalar_series(order);
  for (int d = 1; d <= order; ++d)
    g[d] = Rational(d % 2 ? -1 : 1, d) * fact(3 * d) / fact(d).pow(3);
  return g;
}
inline ScalarQSeries p3_g(int order) {
  ScalarQSeries g = scalar_series(order);
  for (int d = 1; d <= order; ++d) g[d] = Rational(1, d) * fact(2 * d).pow(2) / fact(d).pow(4);
  return g;
}
inline ScalarQSeries p4_g(int order) {
  ScalarQSeries g = scalar_series(order);
  for (int d = 1; d <= order; ++d)
    g[d] = Rational(d % 2 ? -1 : 1, d) * fact(2 * d).pow(2) / fact(d).pow(4);
  return g;
}
// Degree-l hypersurface in P^{l-1}: f0 = sum (ld)!/(d!)^l q^d and
// g1 = sum (ld)!/(d!)^l sum_{m=d+1}^{ld} l/m q^d.
inline ScalarQSeries hypersurface_f0(int l, int order) {
  ScalarQSeries f = scalar_series(order);
  for (int d = 0; d <= order; ++d) f[d] = fact(l * d) / fact(d).pow(l);
  return f;
}
inline ScalarQSeries hypersurface_g1(int l, int order) {
  ScalarQSeries g = scalar_series(order);
  for (int d = 1; d <= order; ++d) {
    Rational h(0);
    for (int m = d + 1; m <= l * d; ++m) h += Rational(l, m);
    g[d] = fact(l * d) / fact(d).pow(l) * h;
  }
  return g;
}

// Reversion references: T = q - q^2 inverts to the Catalan generating
// function, T = q e^{-a q} to sum (a k)^{k-1}/k! Q^k.
inline Rational catalan(int k) { return fact(2 * k) / (fact(k + 1) * fact(k)); }
inline Rational tree_coefficient(int a, int k) { return Rational(a * k).pow(k - 1) / fact(k); }

// Quintic Picard-Fuchs operator theta^4 - 5 q (5 theta + 1)...(5 theta + 4),
// theta = d/dt.
inline TPolySeries quintic_picard_fuchs(const TPolySeries& f) {
  TPolySeries lhs = f.derivative().derivative().derivative().derivative();
  TPolySeries rhs = f;
  for (int a = 4; a >= 1; --a) rhs = rhs.derivative() * Rational(5) + rhs * Rational(a);
  ScalarQSeries five_q = ScalarQSeries::monomial(f.order(), Rational(0), 1, Rational(5));
  return lhs - rhs * five_q;
}

// Canonical form with F0 S(t) written in T = t + g: every q^d block (d >= 1) of
// F0 e^{Hg/alpha} (Omega + Z) - Omega, Z = e^{Ht/alpha} (S - e^{-Ht/alpha} Omega),
// has alpha order <= -2 and no t. Returns the first offending cell.
inline std::optional<CellKey> canonical_form_violation(const CohomSeries& S, const SplittingType& st,
                                                       const Normalization& norm) {
  const OmegaClass omega = omega_class(st);
  const int n = S.n(), D = S.order();
  CohomSeries rest = S - CohomSeries::omega_series(n, D, omega);
  CohomSeries z = series_mul(CohomSeries::exp_ht(n, D, Rational(1)), rest);
  CohomSeries x = scale_by(CohomSeries::exp_hg(n, norm.g, Rational(1)), norm.F0);
  CohomSeries c = series_mul(x, z);
  x.add({0, 0, 0, 0}, Rational(-1));
  c += x.times_h_power(omega.scalar, omega.h_exponent);
  for (const auto& [key, v] : c.cells())
    if (key.d >= 1 && (key.k > -2 || key.j != 0)) return key;
  return std::nullopt;
}

struct Preset {
  std::string name;
  SplittingType st;
  int order;
};
inline std::vector<Preset> presets() {
  return {{"multicover", SplittingType(1, {}, {1, 1}), 12},
          {"local-p2", SplittingType(2, {}, {3}), 10},
          {"p3-concavex", SplittingType(3, {2}, {2}), 10},
          {"p4-concavex", SplittingType(4, {2, 2}, {1}), 10},
          {"quintic", SplittingType(4, {5}, {}), 12}};
}

// Small random rationals and polynomials for the property suites.
class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational rational() {
    int den = integer(1, 7);
    return Rational(integer(-9, 9), den);
  }
  Polynomial polynomial(const Universe& u, int terms, int max_exp) {
    Polynomial p(u);
    for (int t = 0; t < terms; ++t) {
      Exponents e(u.size(), 0);
      for (int v = 0; v < u.size(); ++v) e[v] = static_cast<std::uint32_t>(integer(0, max_exp));
      p += Polynomial::monomial(u, e, rational());
    }
    return p;
  }
  ScalarQSeries q_series(int order, bool unit_linear) {
    ScalarQSeries s = scalar_series(order);
    for (int d = 1; d <= order; ++d) s[d] = rational();
    if (unit_linear && order >= 1) s[1] = Rational(1);
    return s;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace mirrorcalc::ref
