#include "mirrorcalc/cohom_series.hpp"

#include <sstream>
#include <stdexcept>

#include "mirrorcalc/errors.hpp"

namespace mirrorcalc {

CohomSeries::CohomSeries(int n, int order) : n_(n), order_(order) {
  if (n < 0 || order < 0) throw std::invalid_argument("series needs n >= 0 and order >= 0");
}

CohomSeries CohomSeries::constant(int n, int order, const Rational& c) {
  return cell(n, order, {0, 0, 0, 0}, c);
}

CohomSeries CohomSeries::cell(int n, int order, CellKey key, const Rational& c) {
  CohomSeries s(n, order);
  s.add(key, c);
  return s;
}

CohomSeries CohomSeries::linear(int n, int order, const Rational& h_coeff, const Rational& alpha_coeff) {
  CohomSeries s(n, order);
  s.add({0, 0, 1, 0}, h_coeff);
  s.add({0, 0, 0, 1}, alpha_coeff);
  return s;
}

CohomSeries CohomSeries::from_q(int n, const ScalarQSeries& q) {
  CohomSeries s(n, q.order());
  for (int d = 0; d <= q.order(); ++d) s.add({d, 0, 0, 0}, q[d]);
  return s;
}

CohomSeries CohomSeries::exp_ht(int n, int order, const Rational& sign) {
  CohomSeries s(n, order);
  for (int j = 0; j <= n; ++j) s.add({0, j, j, -j}, sign.pow(j) / factorial(j));
  return s;
}

CohomSeries CohomSeries::exp_hg(int n, const ScalarQSeries& g, const Rational& sign) {
  CohomSeries s(n, g.order());
  ScalarQSeries gm = ScalarQSeries::one(g.order(), Rational(0));
  for (int m = 0; m <= n; ++m) {
    Rational c = sign.pow(m) / factorial(m);
    for (int d = 0; d <= g.order(); ++d) s.add({d, 0, m, -m}, c * gm[d]);
    gm = gm * g;
  }
  return s;
}

CohomSeries CohomSeries::omega_series(int n, int order, const OmegaClass& omega) {
  CohomSeries s(n, order);
  if (omega.h_exponent < 0) {
    s.omega_ = omega;
    return s;
  }
  return exp_ht(n, order, Rational(-1)).times_h_power(omega.scalar, omega.h_exponent);
}

Rational CohomSeries::coefficient(const CellKey& key) const {
  auto it = cells_.find(key);
  return it == cells_.end() ? Rational(0) : it->second;
}

void CohomSeries::set_omega_term(std::optional<OmegaClass> omega) {
  if (omega && omega->scalar.is_zero()) omega.reset();
  omega_ = std::move(omega);
}

CohomSeries CohomSeries::without_omega() const {
  CohomSeries s = *this;
  s.omega_.reset();
  return s;
}

void CohomSeries::add(const CellKey& key, const Rational& c) {
  if (c.is_zero() || key.d > order_ || key.i > n_) return;
  if (key.d < 0 || key.j < 0) throw std::invalid_argument("negative q or t exponent");
  if (key.i < 0) throw std::domain_error("negative H exponent outside the closed-form Omega term");
  if (key.j > n_) throw std::domain_error("t-degree exceeds n");
  auto [it, inserted] = cells_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) cells_.erase(it);
  }
}

CohomSeries CohomSeries::q_shifted(int d) const {
  if (omega_) throw std::domain_error("cannot shift a closed-form Omega term in q");
  CohomSeries s(n_, order_);
  for (const auto& [key, c] : cells_) s.add({key.d + d, key.j, key.i, key.k}, c);
  return s;
}

CohomSeries CohomSeries::times_h_power(const Rational& c, int h) const {
  if (omega_) throw std::domain_error("cannot multiply a closed-form Omega term by H^h");
  CohomSeries s(n_, order_);
  for (const auto& [key, v] : cells_) {
    if (key.i + h < 0) {
      throw std::domain_error("product with H^" + std::to_string(h) + " leaves a negative H power");
    }
    s.add({key.d, key.j, key.i + h, key.k}, c * v);
  }
  return s;
}

void CohomSeries::same_shape(const CohomSeries& o) const {
  if (o.n_ != n_ || o.order_ != order_) throw std::invalid_argument("series shapes differ");
}

CohomSeries& CohomSeries::operator+=(const CohomSeries& o) {
  same_shape(o);
  for (const auto& [key, c] : o.cells_) add(key, c);
  if (o.omega_) {
    if (!omega_) {
      omega_ = o.omega_;
    } else if (omega_->h_exponent == o.omega_->h_exponent) {
      set_omega_term(OmegaClass{omega_->scalar + o.omega_->scalar, omega_->h_exponent});
    } else {
      throw std::domain_error("cannot add closed-form Omega terms with different H exponents");
    }
  }
  return *this;
}

CohomSeries CohomSeries::operator-() const {
  CohomSeries s = *this * Rational(-1);
  return s;
}

CohomSeries& CohomSeries::operator-=(const CohomSeries& o) { return *this += -o; }

CohomSeries operator*(CohomSeries a, const Rational& c) {
  if (c.is_zero()) return CohomSeries(a.n_, a.order_);
  for (auto& [key, v] : a.cells_) v *= c;
  if (a.omega_) a.omega_->scalar *= c;
  return a;
}

std::string CohomSeries::str() const {
  std::ostringstream os;
  bool first = true;
  if (omega_) {
    os << "e^{-Ht/a}*(" << omega_->scalar << ")*H^" << omega_->h_exponent;
    first = false;
  }
  for (const auto& [key, c] : cells_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (key.d) os << "*q^" << key.d;
    if (key.j) os << "*t^" << key.j;
    if (key.i) os << "*H^" << key.i;
    if (key.k) os << "*a^" << key.k;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

CohomSeries grid_product(const CohomSeries& a, const CohomSeries& b) {
  CohomSeries r(a.n(), a.order());
  for (const auto& [ka, ca] : a.cells())
    for (const auto& [kb, cb] : b.cells()) {
      if (ka.d + kb.d > a.order() || ka.i + kb.i > a.n()) continue;
      r.add({ka.d + kb.d, ka.j + kb.j, ka.i + kb.i, ka.k + kb.k}, ca * cb);
    }
  return r;
}

// e^{-Ht/alpha} Omega * b with the (0,0,0,0) part of b kept in closed form
CohomSeries omega_times(const OmegaClass& omega, const CohomSeries& b) {
  Rational b0 = b.coefficient({0, 0, 0, 0});
  CohomSeries rest = b.without_omega();
  rest.add({0, 0, 0, 0}, -b0);
  CohomSeries r = grid_product(CohomSeries::exp_ht(b.n(), b.order(), Rational(-1)), rest)
                      .times_h_power(omega.scalar, omega.h_exponent);
  r.set_omega_term(OmegaClass{omega.scalar * b0, omega.h_exponent});
  return r;
}

}  // namespace

CohomSeries series_mul(const CohomSeries& a, const CohomSeries& b) {
  if (a.n() != b.n() || a.order() != b.order()) throw std::invalid_argument("series shapes differ");
  if (a.omega_term() && b.omega_term()) throw std::domain_error("product of two closed-form Omega terms");
  CohomSeries r = grid_product(a, b);
  if (a.omega_term()) r += omega_times(*a.omega_term(), b);
  if (b.omega_term()) r += omega_times(*b.omega_term(), a);
  return r;
}

CohomSeries series_invert_unit(const CohomSeries& a) {
  if (a.omega_term()) throw std::domain_error("cannot invert a closed-form Omega term");
  std::optional<CellKey> lead;
  for (const auto& [key, c] : a.cells()) {
    if (key.d != 0 || key.i != 0) continue;
    if (key.j != 0 || lead) throw std::domain_error("series is not a unit: constant part is not c*alpha^k");
    lead = key;
  }
  if (!lead) throw std::domain_error("series is not a unit: zero constant part");
  Rational c = a.coefficient(*lead);
  CohomSeries u_inv = CohomSeries::cell(a.n(), a.order(), {0, 0, 0, -lead->k}, c.inverse());
  // a = u (1 + x) with x nilpotent modulo q^{order+1}, H^{n+1}
  CohomSeries x = series_mul(a, u_inv);
  x.add({0, 0, 0, 0}, Rational(-1));
  CohomSeries sum = CohomSeries::constant(a.n(), a.order(), Rational(1));
  CohomSeries term = sum;
  CohomSeries neg_x = -x;
  for (int m = 1; m <= a.n() + a.order() + 1; ++m) {
    term = series_mul(term, neg_x);
    if (term.is_zero()) break;
    sum += term;
  }
  return series_mul(sum, u_inv);
}

CohomSeries shift_t(const CohomSeries& a, const ScalarQSeries& g) {
  if (g.order() != a.order()) throw std::invalid_argument("shift series order differs");
  if (!g[0].is_zero()) throw std::invalid_argument("shift series needs zero constant term");
  if (g.is_zero()) return a;
  const int n = a.n(), D = a.order();

  std::vector<ScalarQSeries> gpow{ScalarQSeries::one(D, Rational(0))};
  for (int m = 1; m <= n; ++m) gpow.push_back(gpow.back() * g);
  std::map<std::pair<int, int>, ScalarQSeries> cache;  // (d, m) -> q^d e^{dg} g^m
  auto factor = [&](int d, int m) -> const ScalarQSeries& {
    auto it = cache.find({d, m});
    if (it != cache.end()) return it->second;
    ScalarQSeries s = ((g * Rational(d)).exp() * gpow[m]).shifted(d);
    return cache.emplace(std::make_pair(d, m), std::move(s)).first->second;
  };

  CohomSeries r(n, D);
  for (const auto& [key, c] : a.cells()) {
    for (int p = 0; p <= key.j; ++p) {
      const ScalarQSeries& s = factor(key.d, key.j - p);
      Rational cb = c * binomial(key.j, p);
      for (int e = key.d; e <= D; ++e)
        if (!s[e].is_zero()) r.add({e, p, key.i, key.k}, cb * s[e]);
    }
  }
  if (const auto& om = a.omega_term()) {
    // e^{-H(t+g)/alpha} Omega = tag + Omega H^m (-1/alpha)^m/m! ((t+g)^m - t^m), m >= 1
    r.set_omega_term(om);
    const int h = om->h_exponent;
    while (static_cast<int>(gpow.size()) <= n - h) gpow.push_back(gpow.back() * g);
    for (int m = 1; m <= n - h; ++m) {
      Rational c = om->scalar * Rational(-1).pow(m) / factorial(m);
      for (int p = 0; p < m; ++p) {
        const ScalarQSeries& pw = gpow[m - p];
        for (int e = 1; e <= D; ++e) {
          if (pw[e].is_zero()) continue;
          if (h + m < 0) {
            throw std::domain_error("shifting t in a closed-form Omega with H^" + std::to_string(h) +
                                    " leaves a negative H power");
          }
          r.add({e, p, h + m, -m}, c * binomial(m, p) * pw[e]);
        }
      }
    }
  }
  return r;
}

CohomSeries scale_by(const CohomSeries& a, const ScalarQSeries& s) {
  if (s.order() != a.order()) throw std::invalid_argument("scale series order differs");
  return series_mul(a, CohomSeries::from_q(a.n(), s));
}

IntegratedSeries integrate_pn(const CohomSeries& a) {
  IntegratedSeries out{a.order(), {}};
  auto slot = [&](int k) -> TPolySeries& { return out.by_alpha_power.try_emplace(k, a.order()).first->second; };
  for (const auto& [key, c] : a.cells())
    if (key.i == a.n()) slot(key.k).add(key.j, key.d, c);
  if (const auto& om = a.omega_term()) {
    int e = a.n() - om->h_exponent;
    if (e >= 0 && e <= a.n()) slot(-e).add(e, 0, om->scalar * Rational(-1).pow(e) / factorial(e));
  }
  return out;
}

ScalarQSeries qseries_reversion(const ScalarQSeries& T) { return reversion(T); }

std::optional<CellKey> homogeneity_violation(const CohomSeries& a, const std::function<int(int)>& delta) {
  if (const auto& om = a.omega_term())
    if (om->h_exponent != delta(0)) return CellKey{0, 0, om->h_exponent, 0};
  for (const auto& [key, c] : a.cells())
    if (key.i + key.k != delta(key.d)) return key;
  return std::nullopt;
}

}  // namespace mirrorcalc
