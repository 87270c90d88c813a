#include "mirrorcalc/mirror_transform.hpp"

#include <stdexcept>

namespace mirrorcalc {

EquivariantSeries equivariant_series(const Universe& u, int order) {
  return EquivariantSeries(order, RationalFunction(u));
}

EquivariantSeries lift(const Universe& u, const ScalarQSeries& s, int alpha_power) {
  EquivariantSeries r = equivariant_series(u, s.order());
  RationalFunction a = RationalFunction(Polynomial::variable(u, Symbol::alpha())).pow(alpha_power);
  for (int d = 0; d <= s.order(); ++d)
    if (!s[d].is_zero()) r[d] = a * s[d];
  return r;
}

S0Sequence restrict_to_base(const EulerDataTable& t) {
  std::vector<std::vector<RationalFunction>> v(t.d_max() + 1);
  for (int d = 0; d <= t.d_max(); ++d)
    for (int i = 0; i <= t.n(); ++i) v[d].push_back(t.base(d, i));
  return S0Sequence(t.n(), t.d_max(), std::move(v));
}

EulerDataTable lagrange_map(const S0Sequence& b) {
  std::vector<RationalFunction> omega;
  for (int i = 0; i <= b.n(); ++i) omega.push_back(b.at(0, i));
  std::vector<std::vector<std::vector<RationalFunction>>> entries(b.d_max());
  for (int d = 1; d <= b.d_max(); ++d) {
    entries[d - 1].resize(b.n() + 1);
    for (int i = 0; i <= b.n(); ++i) {
      RationalFunction inv = omega[i].inverse();
      for (int r = 0; r <= d; ++r)
        entries[d - 1][i].push_back(inv * flip_alpha(b.at(r, i)) * b.at(d - r, i));
    }
  }
  return EulerDataTable(b.n(), b.d_max(), std::move(omega), std::move(entries));
}

namespace {

// One step B~_d = B_d + sum_{r<d} c[r][d-r] B_r prod_j prod_{m=r+1}^{d} (l_i - l_j - m alpha)
// at a fixed point i, where c[r] is a q-series per r.
std::vector<RationalFunction> recursion_step(const std::vector<RationalFunction>& b,
                                             const std::vector<EquivariantSeries>& c,
                                             const std::vector<RationalFunction>& step) {
  const int D = static_cast<int>(b.size()) - 1;
  std::vector<RationalFunction> out = b;
  for (int d = 1; d <= D; ++d) {
    RationalFunction prod = step[d];  // prod_{m=r+1}^{d}, grown as r decreases
    for (int r = d - 1; r >= 0; --r) {
      const RationalFunction& coeff = c[r][d - r];
      if (!coeff.is_zero() && !b[r].is_zero()) out[d] += coeff * b[r] * prod;
      if (r > 0) prod *= step[r];
    }
  }
  return out;
}

}  // namespace

S0Sequence mirror_transform_s0(const S0Sequence& b, const EquivariantSeries& f, const EquivariantSeries& g) {
  const int D = b.d_max();
  const Universe u = b.universe();
  if (f.order() < D || g.order() < D) throw std::invalid_argument("transform series shorter than d_max");
  if (!f[0].is_zero() || !g[0].is_zero()) throw std::invalid_argument("transform series need zero constant term");
  auto truncate = [&](const EquivariantSeries& s) {
    EquivariantSeries r = equivariant_series(u, D);
    for (int d = 0; d <= D; ++d) r[d] = s[d];
    return r;
  };
  EquivariantSeries ft = truncate(f), gt = truncate(g);
  RationalFunction alpha(Polynomial::variable(u, Symbol::alpha()));
  RationalFunction inv_alpha = alpha.inverse();

  // e^{r g} for r = 0..D; independent of the fixed point
  std::vector<EquivariantSeries> exp_rg;
  for (int r = 0; r <= D; ++r) exp_rg.push_back((gt * RationalFunction(u, Rational(r))).exp());
  std::vector<EquivariantSeries> exp_f(D + 1, (ft * inv_alpha).exp());

  std::vector<std::vector<RationalFunction>> out(D + 1);
  for (int i = 0; i <= b.n(); ++i) {
    std::vector<RationalFunction> step(D + 1, RationalFunction(u, Rational(1)));
    for (int m = 1; m <= D; ++m) {
      Polynomial s(u, Rational(1));
      for (int j = 0; j <= b.n(); ++j)
        s = s * Polynomial::linear(u, {{Symbol::lambda(i), 1}, {Symbol::lambda(j), -1}, {Symbol::alpha(), -m}});
      step[m] = RationalFunction(s);
    }
    std::vector<RationalFunction> col;
    for (int d = 0; d <= D; ++d) col.push_back(b.at(d, i));

    col = recursion_step(col, exp_rg, step);
    RationalFunction lam(Polynomial::variable(u, Symbol::lambda(i)));
    std::vector<EquivariantSeries> exp_pg(D + 1, (gt * (-(lam * inv_alpha))).exp());
    col = recursion_step(col, exp_pg, step);
    col = recursion_step(col, exp_f, step);
    for (int d = 0; d <= D; ++d) out[d].push_back(std::move(col[d]));
  }
  return S0Sequence(b.n(), D, std::move(out));
}

}  // namespace mirrorcalc
