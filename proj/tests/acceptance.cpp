// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "mirrorcalc/cli/cli.hpp"
#include "mirrorcalc/mirror_transform.hpp"
#include "mirrorcalc/verification.hpp"
#include "support.hpp"

using namespace mirrorcalc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

nlohmann::json compute_json(const std::vector<std::string>& args, Outcome& o) {
  std::ostringstream out, err;
  std::vector<std::string> full = args;
  for (const char* a : {"--format", "json", "--no-cache"}) full.push_back(a);
  int code = cli::run_command(full, out, err);
  if (code != 0) {
    o.fail("exit code " + std::to_string(code) + ": " + err.str());
    return nlohmann::json::object();
  }
  return nlohmann::json::parse(out.str());
}

std::vector<Rational> k_list(const nlohmann::json& j) {
  std::vector<Rational> k;
  if (j.contains("K"))
    for (const auto& v : j["K"]) k.push_back(Rational::parse(v.get<std::string>()));
  return k;
}

void expect_list(Outcome& o, const std::vector<Rational>& got, const std::vector<Rational>& want) {
  if (got.size() != want.size()) return o.fail("got " + std::to_string(got.size()) + " values");
  for (size_t d = 0; d < want.size(); ++d)
    if (!(got[d] == want[d])) return o.fail("d=" + std::to_string(d + 1) + ": " + got[d].str() + " != " + want[d].str());
}

// Gluing and reciprocity on one table; inconclusives are tallied.
void euler_checks(Outcome& o, const std::string& name, const EulerDataTable& t, int& inconclusive) {
  for (const auto& rep : {check_gluing(t), check_reciprocity(t)}) {
    if (!rep.all_pass()) o.fail(name + " " + rep.check + " has failures");
    inconclusive += rep.count(CheckStatus::Inconclusive);
  }
}

Outcome c1() {
  Outcome o;
  auto j = compute_json({"compute", "--preset", "multicover", "--order", "12"}, o);
  std::vector<Rational> want;
  for (int d = 1; d <= 12; ++d) want.push_back(Rational(1) / Rational(d).pow(3));
  expect_list(o, k_list(j), want);
  return o;
}

Outcome c2() {
  Outcome o;
  expect_list(o, k_list(compute_json({"compute", "--preset", "local-p2", "--order", "10"}, o)), ref::local_p2_table());
  return o;
}

Outcome c3() {
  Outcome o;
  expect_list(o, k_list(compute_json({"compute", "--preset", "p3-concavex", "--order", "10"}, o)), ref::p3_table());
  return o;
}

Outcome c4() {
  Outcome o;
  auto p3 = k_list(compute_json({"compute", "--preset", "p3-concavex", "--order", "10"}, o));
  auto p4 = k_list(compute_json({"compute", "--preset", "p4-concavex", "--order", "10"}, o));
  if (p3.size() != 10) {
    o.fail("P^3 list incomplete");
    return o;
  }
  std::vector<Rational> want;
  for (int d = 1; d <= 10; ++d) want.push_back(Rational(d % 2 ? -4 : 4) * p3[d - 1]);
  expect_list(o, p4, want);
  return o;
}

Outcome c5() {
  Outcome o;
  auto j = compute_json({"compute", "--preset", "quintic", "--order", "6"}, o);
  if (!o.ok) return o;
  auto n = ref::quintic_instantons();
  for (int d = 1; d <= 6; ++d) {
    const auto& v = j["n_d"][d - 1];
    if (d <= 3 && !(Rational::parse(v["value"].get<std::string>()) == n[d - 1])) o.fail("n_" + std::to_string(d));
    if (!v["integral"].get<bool>()) o.fail("n_" + std::to_string(d) + " not integral");
  }
  for (const char* check : {"phi_t_independence", "dual_route", "t_consistency"})
    if (!j["checks"].contains(check) || !j["checks"][check]["passed"].get<bool>()) o.fail(std::string(check));
  for (auto& [name, c] : j["checks"].items())
    if (!c["passed"].get<bool>()) o.fail("check " + name);
  return o;
}

Outcome c6() {
  Outcome o;
  const int D = 12;
  const SplittingType quintic(4, {5}, {});
  auto f = frobenius_f(build_hg_series(quintic, D), quintic);
  if (f.size() != 4) {
    o.fail("expected f_0..f_3");
    return o;
  }
  for (size_t i = 0; i < f.size(); ++i) {
    TPolySeries r = ref::quintic_picard_fuchs(f[i]);
    for (int j = 0; j <= std::max(0, r.t_degree()); ++j)
      for (int d = 0; d <= D - 1; ++d)
        if (!r.at(j, d).is_zero()) o.fail("f_" + std::to_string(i) + " at t^" + std::to_string(j) + " q^" + std::to_string(d));
  }
  return o;
}

Outcome c7() {
  Outcome o;
  int inconclusive = 0;
  const std::vector<std::pair<ref::Preset, int>> cases{
      {{"multicover", SplittingType(1, {}, {1, 1}), 0}, 4},
      {{"local-p2", SplittingType(2, {}, {3}), 0}, 4},
      {{"p3-concavex", SplittingType(3, {2}, {2}), 0}, 3},
      {{"quintic", SplittingType(4, {5}, {}), 0}, 3}};
  for (const auto& [p, dmax] : cases)
    euler_checks(o, p.name, to_table(build_hypergeom_data(p.st), p.st.n(), dmax), inconclusive);
  euler_checks(o, "kappa-square", to_table(kappa_square_data(), 2, 3), inconclusive);
  euler_checks(o, "local-p2 with x", to_table(build_hypergeom_data(SplittingType(2, {}, {3}), true), 2, 2),
               inconclusive);
  if (o.ok) o.detail = std::to_string(inconclusive) + " inconclusive";
  return o;
}

Outcome c8() {
  Outcome o;
  EulerDataTable t = to_table(build_hypergeom_data(SplittingType(1, {1}, {})), 1, 3);
  S0Sequence b = restrict_to_base(t);
  EulerDataTable back = lagrange_map(b);
  for (int i = 0; i <= 1; ++i) {
    if (!rf_equal(back.omega(i), t.omega(i))) o.fail("omega");
    for (int d = 1; d <= 3; ++d)
      for (int r = 0; r <= d; ++r)
        if (!rf_equal(back.entry(d, i, r), t.entry(d, i, r)))
          o.fail("L(I(Q)) differs at d=" + std::to_string(d) + " i=" + std::to_string(i) + " r=" + std::to_string(r));
  }
  if (!(restrict_to_base(back) == b)) o.fail("I(L(B)) != B");
  return o;
}

Outcome c9() {
  Outcome o;
  const int n = 2, D = 2;
  const Universe u(n);
  EulerDataTable t = to_table(build_hypergeom_data(SplittingType(n, {}, {3})), n, D);
  S0Sequence b = restrict_to_base(t);
  EquivariantSeries zero = equivariant_series(u, D);
  for (const Rational& c : {Rational(1), Rational(-6), Rational(7, 3)}) {
    ScalarQSeries g = scalar_series(D);
    g[1] = c;
    S0Sequence bt = mirror_transform_s0(b, zero, lift(u, g));
    if (!check_linked(t, lagrange_map(bt)).all_pass()) o.fail("linking lost for c=" + c.str());
    if (!(mirror_transform_s0(bt, zero, lift(u, inverse_t_shift(g))) == b)) o.fail("inverse failed for c=" + c.str());
  }
  return o;
}

Outcome c10() {
  Outcome o;
  for (const auto& p : ref::presets()) {
    CohomSeries S = build_hg_series(p.st, p.order);
    if (homogeneity_violation(S, [&](int d) { return p.st.delta(d); })) o.fail(p.name + " homogeneity");
    Normalization norm = compute_normalization(S, p.st);
    if (auto bad = ref::canonical_form_violation(S, p.st, norm))
      o.fail(p.name + " canonical form at q^" + std::to_string(bad->d));
  }

  ref::Random rnd(20240601);
  Universe u(2);
  for (int it = 0; it < 100; ++it) {
    Polynomial a = rnd.polynomial(u, rnd.integer(0, 4), 2), b = rnd.polynomial(u, rnd.integer(0, 4), 2),
               c = rnd.polynomial(u, rnd.integer(0, 4), 2);
    if (!(a * (b + c) == a * b + a * c) || !((a * b) * c == a * (b * c)) || !(a + b == b + a) || !(a * b == b * a))
      o.fail("ring law, instance " + std::to_string(it));
  }
  for (int it = 0; it < 100; ++it) {
    const int D = rnd.integer(1, 7);
    ScalarQSeries T = rnd.q_series(D, true);
    ScalarQSeries q = qseries_reversion(T);
    ScalarQSeries Q = ScalarQSeries::monomial(D, Rational(0), 1, Rational(1));
    if (!(T.compose(q) == Q) || !(q.compose(T) == Q)) o.fail("reversion, instance " + std::to_string(it));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "multiple-cover K_d = 1/d^3, d <= 12", 5, c1},
      {2, "local P^2 table, d <= 10", 60, c2},
      {3, "P^3 O(2)+O(-2) table, d <= 10", 60, c3},
      {4, "P^4 K_d = 4(-1)^d K_d(P^3), d <= 10", 0, c4},
      {5, "quintic n_1..n_3, integrality and internal checks, D = 6", 120, c5},
      {6, "Picard-Fuchs operator annihilates f_0..f_3 through q^(D-1)", 0, c6},
      {7, "gluing and reciprocity on preset, kappa(kappa - d alpha) and x-extended data", 120, c7},
      {8, "Lagrange map and restriction are inverse on O(1) data over P^1", 0, c8},
      {9, "mirror transform keeps linked values and inverts, n = 2, d <= 2", 0, c9},
      {10, "homogeneity, canonical form, ring-law and reversion properties", 0, c10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.fail("runtime over " + std::to_string(static_cast<int>(c.limit_s)) + " s");
    if (!o.ok) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  [" << secs << " s";
    if (!o.detail.empty()) line << "; " << o.detail;
    line << "]";
    std::cout << line.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed;
}
