#include "mirrorcalc/pipeline.hpp"

#include <functional>
#include <future>
#include <sstream>

#include "mirrorcalc/errors.hpp"

namespace mirrorcalc {

std::string to_string(PipelineCase c) {
  switch (c) {
    case PipelineCase::Identity: return "IDENTITY";
    case PipelineCase::Case1: return "CASE1";
    case PipelineCase::Case2: return "CASE2";
    case PipelineCase::Case3: return "CASE3";
    case PipelineCase::Unsupported: return "UNSUPPORTED";
  }
  return "?";
}

PipelineCase classify(const SplittingType& st) {
  const int n = st.n(), total = st.total(), N = st.N(), P = st.P();
  // d*total - N <= (n+1)d - 2 is linear in d, so d = 1 and the slope decide
  const int slope = total - (n + 1);
  bool identity = slope <= 0 && (slope < 0 ? total - N <= n - 1 : N >= 2);
  if (identity) return PipelineCase::Identity;
  int sum_l = 0;
  for (int l : st.convex()) sum_l += l;
  if (N == 0 && sum_l == n + 1) return PipelineCase::Case1;
  if (N == 1 && total == n + 1) return PipelineCase::Case2;
  if (N == 0 && sum_l == n && P > 0) return PipelineCase::Case3;
  return PipelineCase::Unsupported;
}

CohomSeries build_hg_series(const SplittingType& st, int order) {
  const int n = st.n();
  const OmegaClass omega = omega_class(st);
  // Block d only needs q-order order - d before the shift.
  auto block = [&st, n](int d, int rest) {
    CohomSeries num = CohomSeries::constant(n, rest, Rational(1));
    for (int l : st.convex())
      for (int m = 0; m <= l * d; ++m) num = series_mul(num, CohomSeries::linear(n, rest, l, -m));
    for (int k : st.concave())
      for (int m = 1; m <= k * d - 1; ++m) num = series_mul(num, CohomSeries::linear(n, rest, -k, m));
    CohomSeries den = CohomSeries::constant(n, rest, Rational(1));
    for (int m = 1; m <= d; ++m) {
      CohomSeries lin = CohomSeries::linear(n, rest, 1, -m);
      for (int c = 0; c <= n; ++c) den = series_mul(den, lin);
    }
    return series_mul(series_mul(num, series_invert_unit(den)), CohomSeries::exp_ht(n, rest, Rational(-1)));
  };
  std::vector<std::future<CohomSeries>> jobs;
  for (int d = 1; d <= order; ++d) jobs.push_back(std::async(std::launch::async, block, d, order - d));

  CohomSeries S = CohomSeries::omega_series(n, order, omega);
  for (int d = 1; d <= order; ++d) {
    CohomSeries b = jobs[d - 1].get();
    for (const auto& [key, c] : b.cells()) S.add({key.d + d, key.j, key.i, key.k}, c);
  }
  return S;
}

std::vector<TPolySeries> frobenius_f(const CohomSeries& S, const SplittingType& st) {
  if (classify(st) != PipelineCase::Case1) throw std::invalid_argument("Frobenius basis needs a CASE1 bundle");
  const OmegaClass omega = omega_class(st);
  const int h = omega.h_exponent;
  const int count = std::min(3, st.n() - h);
  std::vector<TPolySeries> f;
  for (int i = 0; i <= count; ++i) {
    TPolySeries fi(S.order());
    Rational c = Rational(-1).pow(i) / omega.scalar;
    for (const auto& [key, v] : S.cells())
      if (key.i == h + i && key.k == -i) fi.add(key.j, key.d, c * v);
    f.push_back(std::move(fi));
  }
  return f;
}

namespace {

// e^{Ht/alpha} (S - e^{-Ht/alpha} Omega): the t-free d >= 1 blocks
CohomSeries stripped_blocks(const CohomSeries& S, const OmegaClass& omega) {
  CohomSeries rest = S - CohomSeries::omega_series(S.n(), S.order(), omega);
  if (rest.omega_term()) throw std::invalid_argument("series does not carry the expected Omega term");
  CohomSeries z = series_mul(CohomSeries::exp_ht(S.n(), S.order(), Rational(1)), rest);
  for (const auto& [key, c] : z.cells())
    if (key.j != 0 || key.d == 0) throw std::invalid_argument("series is not of hypergeometric shape");
  return z;
}

// F0 e^{Hg/alpha} (Omega + Z) - Omega
CohomSeries canonical_blocks(const CohomSeries& z, const OmegaClass& omega, const ScalarQSeries& F0,
                             const ScalarQSeries& g) {
  CohomSeries x = scale_by(CohomSeries::exp_hg(z.n(), g, Rational(1)), F0);
  CohomSeries r = series_mul(x, z);
  x.add({0, 0, 0, 0}, Rational(-1));
  return r + x.times_h_power(omega.scalar, omega.h_exponent);
}

std::string cell_str(const CellKey& k) {
  std::ostringstream os;
  os << "q^" << k.d << " t^" << k.j << " H^" << k.i << " alpha^" << k.k;
  return os.str();
}

}  // namespace

Normalization compute_normalization(const CohomSeries& S, const SplittingType& st) {
  const int D = S.order(), n = S.n();
  const PipelineCase pc = classify(st);
  Normalization norm{ScalarQSeries::one(D, Rational(0)), scalar_series(D)};
  if (pc == PipelineCase::Identity) return norm;
  if (pc == PipelineCase::Unsupported) {
    throw std::invalid_argument(st.render() + " on P^" + std::to_string(n) +
                                " is unsupported; supported shapes: IDENTITY, CASE1 (N=0, sum l=n+1), "
                                "CASE2 (N=1, sum l+k=n+1), CASE3 (N=0, sum l=n)");
  }
  const OmegaClass omega = omega_class(st);
  const int h = omega.h_exponent;
  const CohomSeries z = stripped_blocks(S, omega);
  for (int s = 1; s <= D; ++s) {
    CohomSeries c = canonical_blocks(z, omega, norm.F0, norm.g);
    if (pc == PipelineCase::Case1 && h >= 0 && h <= n) norm.F0[s] = -c.coefficient({s, 0, h, 0}) / omega.scalar;
    if (h + 1 >= 0 && h + 1 <= n) norm.g[s] = -c.coefficient({s, 0, h + 1, -1}) / omega.scalar;
    c = canonical_blocks(z, omega, norm.F0, norm.g);
    for (const auto& [key, v] : c.cells()) {
      if (key.d != s) continue;
      if (key.k >= -1 || key.j != 0) {
        throw ConsistencyError("normalization", s, "no solution, residual at " + cell_str(key));
      }
    }
  }
  return norm;
}

namespace {

std::vector<ScalarQSeries> exp_multiples(const ScalarQSeries& g) {
  std::vector<ScalarQSeries> e;
  for (int d = 0; d <= g.order(); ++d) e.push_back((g * Rational(d)).exp());
  return e;
}

// Solve sum K_d (2 - d(t+g)) q^d e^{dg} = psi; t-free alpha^{-3} part expected.
std::vector<Rational> solve_psi(const IntegratedSeries& I, const ScalarQSeries& g, const std::string& route) {
  const int D = I.order;
  for (int k : I.alpha_powers())
    if (k != -3) throw ConsistencyError(route, 0, "alpha^" + std::to_string(k) + " survives the pushforward");
  TPolySeries psi = I.at_alpha_power(-3);
  for (int j = 2; j <= psi.t_degree(); ++j)
    for (int d = 0; d <= D; ++d)
      if (!psi.at(j, d).is_zero()) throw ConsistencyError(route, d, "t^" + std::to_string(j) + " term");
  ScalarQSeries a = psi.coefficient(1), b = psi.coefficient(0);
  if (!a[0].is_zero() || !b[0].is_zero()) throw ConsistencyError(route, 0, "nonzero q^0 term");
  auto e = exp_multiples(g);
  std::vector<Rational> K(D + 1);
  for (int s = 1; s <= D; ++s) {
    Rational acc = -a[s];
    for (int d = 1; d < s; ++d) acc -= Rational(d) * K[d] * e[d][s - d];
    K[s] = acc / Rational(s);
  }
  // t^0 block: sum K_d (2 - d g) q^d e^{dg}
  ScalarQSeries expect = scalar_series(D);
  for (int d = 1; d <= D; ++d) {
    ScalarQSeries two_minus = ScalarQSeries::one(D, Rational(0)) * Rational(2) - g * Rational(d);
    expect += (two_minus * e[d]).shifted(d) * K[d];
  }
  for (int s = 1; s <= D; ++s)
    if (!(expect[s] == b[s])) {
      throw ConsistencyError(route, s, "t^0 block " + b[s].str() + " != " + expect[s].str());
    }
  return {K.begin() + 1, K.end()};
}

}  // namespace

std::vector<Rational> extract_K(const CohomSeries& S, const SplittingType& st, const Normalization& norm,
                                CheckLog* log) {
  if (!st.is_critical()) throw std::invalid_argument("K_d extraction needs a critical bundle");
  const int n = S.n(), D = S.order();
  const OmegaClass omega = omega_class(st);
  CohomSeries w = scale_by(S, norm.F0) - shift_t(CohomSeries::omega_series(n, D, omega), norm.g);
  std::vector<Rational> K = solve_psi(integrate_pn(w), norm.g, "t_consistency");
  if (log) (*log)["t_consistency"] = {true, "t^0 block reproduced through q^" + std::to_string(D)};
  return K;
}

std::vector<MulticoverValue> invert_multicover(const std::vector<Rational>& K) {
  const int D = static_cast<int>(K.size());
  std::vector<MulticoverValue> out;
  for (int d = 1; d <= D; ++d) {
    Rational v = K[d - 1];
    for (int k = 2; k <= d; ++k)
      if (d % k == 0) v -= out[d / k - 1].value / Rational(k).pow(3);
    out.push_back({d, v, v.is_integer()});
  }
  return out;
}

bool PipelineResult::all_checks_pass() const {
  for (const auto& [name, c] : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

void fail_check(CheckLog& log, const std::string& name, int degree, const std::string& detail) {
  log[name] = {false, detail};
  throw ConsistencyError(name, degree, detail);
}

template <class A, class B>
void compare_lists(CheckLog& log, const std::string& name, const A& lhs, const B& rhs, const std::string& what) {
  for (size_t d = 0; d < lhs.size(); ++d)
    if (!(lhs[d] == rhs[d])) {
      fail_check(log, name, static_cast<int>(d) + 1, what + ": " + lhs[d].str() + " vs " + rhs[d].str());
    }
  log[name] = {true, what};
}

// Canonical series in T = t + g: F0(q(Q)) S(T + h(Q)) with q = Q e^{h}.
void t_coordinate_route(const CohomSeries& S, const SplittingType& st, const Normalization& norm,
                        const std::vector<Rational>* K, CheckLog& log) {
  const int n = S.n(), D = S.order();
  const OmegaClass omega = omega_class(st);
  // one extra order so that q(Q)/Q is exact through Q^D
  ScalarQSeries g_ext = scalar_series(D + 1);
  for (int d = 0; d <= D; ++d) g_ext[d] = norm.g[d];
  ScalarQSeries q_ext = qseries_reversion(g_ext.exp().shifted(1));
  ScalarQSeries q_of_Q = scalar_series(D), phi = scalar_series(D);
  for (int d = 0; d <= D; ++d) {
    q_of_Q[d] = q_ext[d];
    phi[d] = q_ext[d + 1];
  }
  ScalarQSeries h = phi.log();
  CohomSeries canon = scale_by(shift_t(S, h), norm.F0.compose(q_of_Q));

  CohomSeries y = series_mul(CohomSeries::exp_ht(n, D, Rational(1)), canon.without_omega());
  for (const auto& [key, c] : y.cells()) {
    if (key.d == 0) continue;
    if (key.j != 0 || key.k > -2) {
      fail_check(log, "canonical_form", key.d, "block keeps q^" + std::to_string(key.d) + " t^" +
                                                   std::to_string(key.j) + " alpha^" + std::to_string(key.k));
    }
  }
  log["canonical_form"] = {true, "e^{HT/alpha} F0 S = Omega + O(alpha^-2) in every q^d block, T-free"};

  if (K) {
    CohomSeries w = canon - CohomSeries::omega_series(n, D, omega);
    std::vector<Rational> KT = solve_psi(integrate_pn(w), scalar_series(D), "T_coordinate_route");
    compare_lists(log, "T_coordinate_route", KT, *K, "K_d read in the mirror coordinate T");
  }
}

void frobenius_route(const CohomSeries& S, const SplittingType& st, const Normalization& norm,
                     const std::vector<Rational>& K, PipelineResult& res) {
  const int D = S.order();
  CheckLog& log = res.checks;
  res.f_series = frobenius_f(S, st);
  const auto& f = res.f_series;

  // closed forms of f_0 and the t^0 part of f_1
  ScalarQSeries f0c = scalar_series(D), g1c = scalar_series(D);
  f0c[0] = 1;
  for (int d = 1; d <= D; ++d) {
    Rational a = factorial(d).pow(-(st.n() + 1));
    Rational harmonic = 0;
    for (int l : st.convex()) {
      a *= factorial(l * d);
      for (int m = 1; m <= l * d; ++m) harmonic += Rational(l, m);
    }
    for (int m = 1; m <= d; ++m) harmonic -= Rational(st.n() + 1, m);
    f0c[d] = a;
    g1c[d] = a * harmonic;
  }
  if (!(f[0] == TPolySeries::from_q(f0c))) fail_check(log, "frobenius_closed_form", 0, "f_0 differs");
  ScalarQSeries g1 = f[1].coefficient(0);
  compare_lists(log, "frobenius_closed_form", std::vector<Rational>(g1.coefficients()),
                std::vector<Rational>(g1c.coefficients()), "f_0 and f_1 match the closed forms");

  if (f.size() < 4) return;
  const ScalarQSeries f0 = f[0].coefficient(0);
  const ScalarQSeries inv = f0.inverse();
  const Rational c = omega_class(st).scalar;
  TPolySeries T = f[1] * inv;
  if (!(T - TPolySeries::t(D) == TPolySeries::from_q(g1 * inv))) {
    fail_check(log, "normalization_matches_frobenius", 0, "T - t is not t-free");
  }
  compare_lists(log, "normalization_matches_frobenius", std::vector<Rational>((g1 * inv).coefficients()),
                std::vector<Rational>(norm.g.coefficients()), "g = g_1/f_0");
  compare_lists(log, "normalization_matches_frobenius", std::vector<Rational>(inv.coefficients()),
                std::vector<Rational>(norm.F0.coefficients()), "g = g_1/f_0 and F0 = 1/f_0");

  TPolySeries F = (f[1] * f[2] * (inv * inv) - f[3] * inv) * (c / Rational(2));
  TPolySeries phi = F - T * T * T * (c / Rational(6));
  if (!phi.is_t_free()) fail_check(log, "phi_t_independence", 0, "F - cT^3/6 depends on t");
  log["phi_t_independence"] = {true, "F - cT^3/6 is t-free"};

  ScalarQSeries q_of_Q = qseries_reversion(norm.g.exp().shifted(1));
  ScalarQSeries phi_Q = phi.coefficient(0).compose(q_of_Q);
  std::vector<Rational> KF(phi_Q.coefficients().begin() + 1, phi_Q.coefficients().end());
  compare_lists(log, "dual_route", KF, K, "K_d from F - cT^3/6 in Q = e^T");
}

}  // namespace

PipelineResult run_pipeline(const SplittingType& st, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  PipelineResult res{st, order, classify(st), {}, {}, std::nullopt, {}, {}, {}};
  if (res.pcase == PipelineCase::Unsupported) {
    throw std::invalid_argument(st.render() + " on P^" + std::to_string(st.n()) +
                                " is UNSUPPORTED; supported shapes: IDENTITY (deg bound holds), "
                                "CASE1 (N=0, sum l=n+1), CASE2 (N=1, sum l+k=n+1), CASE3 (N=0, sum l=n)");
  }
  CohomSeries S = build_hg_series(st, order);
  if (auto bad = homogeneity_violation(S, [&](int d) { return st.delta(d); })) {
    res.checks["homogeneity"] = {false, "cell at q^" + std::to_string(bad->d)};
    throw ConsistencyError("homogeneity", bad->d, "");
  }
  res.checks["homogeneity"] = {true, "i + k = delta_d in every block"};

  if (!st.is_critical()) {
    res.notes.push_back("bundle is not critical; K_d extraction skipped");
    try {
      res.normalization = compute_normalization(S, st);
      res.checks["normalization"] = {true, "solved order by order"};
    } catch (const ConsistencyError& e) {
      res.notes.push_back(e.what());
    }
    return res;
  }

  res.normalization = compute_normalization(S, st);
  res.checks["normalization"] = {true, "solved order by order through q^" + std::to_string(order)};
  res.K = extract_K(S, st, *res.normalization, &res.checks);
  res.n_d = invert_multicover(res.K);
  for (const auto& v : res.n_d)
    if (!v.integral) res.notes.push_back("n_" + std::to_string(v.d) + " is not an integer");

  t_coordinate_route(S, st, *res.normalization, &res.K, res.checks);
  if (res.pcase == PipelineCase::Case1) frobenius_route(S, st, *res.normalization, res.K, res);

  if (st == SplittingType(4, {2, 2}, {1})) {
    PipelineResult p3 = run_pipeline(SplittingType(3, {2}, {2}), order);
    std::vector<Rational> expect;
    for (int d = 1; d <= order; ++d) expect.push_back(Rational(4 * (d % 2 ? -1 : 1)) * p3.K[d - 1]);
    compare_lists(res.checks, "p3_relation", res.K, expect, "K_d = 4(-1)^d K_d(P^3, O(2)+O(-2))");
  }
  return res;
}

std::vector<SplittingType> critical_list() {
  return {
      SplittingType(1, {}, {1, 1}),     SplittingType(2, {}, {3}),       SplittingType(3, {2}, {2}),
      SplittingType(4, {5}, {}),        SplittingType(4, {2, 2}, {1}),   SplittingType(5, {2, 4}, {}),
      SplittingType(5, {3, 3}, {}),     SplittingType(6, {2, 2, 3}, {}), SplittingType(7, {2, 2, 2, 2}, {}),
  };
}

std::vector<SplittingType> enumerate_critical(int max_n) {
  std::vector<SplittingType> out;
  // nondecreasing parts >= lo summing to total, exactly `count` of them
  std::function<void(int, int, int, std::vector<int>&, std::vector<std::vector<int>>&)> parts =
      [&](int total, int count, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& acc) {
        if (count == 0) {
          if (total == 0) acc.push_back(cur);
          return;
        }
        for (int v = lo; v * count <= total; ++v) {
          cur.push_back(v);
          parts(total - v, count - 1, v, cur, acc);
          cur.pop_back();
        }
      };
  for (int n = 1; n <= max_n; ++n)
    for (int N = 0; N <= n + 1; ++N) {
      int P = n - 3 + N;
      if (P < 0) continue;
      for (int sum_l = 2 * P; sum_l <= n + 1; ++sum_l) {
        int sum_k = n + 1 - sum_l;
        std::vector<std::vector<int>> ls, ks;
        std::vector<int> cur;
        parts(sum_l, P, 2, cur, ls);
        parts(sum_k, N, 1, cur, ks);
        for (const auto& l : ls)
          for (const auto& k : ks) out.emplace_back(n, l, k);
      }
    }
  return out;
}

}  // namespace mirrorcalc
