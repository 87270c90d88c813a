#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mirrorcalc/errors.hpp"
#include "support.hpp"

using namespace mirrorcalc;

namespace {

const SplittingType kMulticover(1, {}, {1, 1});
const SplittingType kLocalP2(2, {}, {3});
const SplittingType kP3(3, {2}, {2});
const SplittingType kP4(4, {2, 2}, {1});
const SplittingType kQuintic(4, {5}, {});

std::vector<Rational> head(const std::vector<Rational>& v, size_t k) { return {v.begin(), v.begin() + k}; }

}  // namespace

TEST(Classify, Cases) {
  EXPECT_EQ(classify(kMulticover), PipelineCase::Identity);
  EXPECT_EQ(classify(kQuintic), PipelineCase::Case1);
  EXPECT_EQ(classify(kLocalP2), PipelineCase::Case2);
  EXPECT_EQ(classify(kP3), PipelineCase::Case2);
  EXPECT_EQ(classify(kP4), PipelineCase::Case2);
  EXPECT_EQ(classify(SplittingType(5, {3, 3}, {})), PipelineCase::Case1);
  EXPECT_EQ(classify(SplittingType(4, {4}, {})), PipelineCase::Case3);
  EXPECT_EQ(classify(SplittingType(2, {5}, {})), PipelineCase::Unsupported);
  EXPECT_EQ(classify(SplittingType(3, {}, {})), PipelineCase::Identity);
}

TEST(HgSeries, QuinticLeadingCoefficients) {
  CohomSeries S = build_hg_series(kQuintic, 3);
  EXPECT_EQ(S.coefficient({1, 0, 1, 0}), Rational(600));
  EXPECT_EQ(S.coefficient({0, 0, 1, 0}), Rational(5));
  EXPECT_EQ(S.coefficient({2, 0, 1, 0}), Rational(5 * 113400));
}

TEST(HgSeries, DeterministicAndHomogeneous) {
  for (const auto& p : ref::presets()) {
    CohomSeries a = build_hg_series(p.st, 8), b = build_hg_series(p.st, 8);
    EXPECT_EQ(a, b) << p.name;
    EXPECT_FALSE(homogeneity_violation(a, [&](int d) { return p.st.delta(d); }).has_value()) << p.name;
  }
  // non-critical shapes are homogeneous with d-dependent delta
  for (const auto& st : {SplittingType(4, {4}, {}), SplittingType(2, {5}, {}), SplittingType(2, {}, {})}) {
    CohomSeries a = build_hg_series(st, 5);
    EXPECT_FALSE(homogeneity_violation(a, [&](int d) { return st.delta(d); }).has_value()) << st.render();
  }
}

TEST(HgSeries, TrivialBundleIsBareExponential) {
  CohomSeries S = build_hg_series(SplittingType(1, {}, {}), 2);
  EXPECT_EQ(S.coefficient({0, 0, 0, 0}), Rational(1));
  EXPECT_EQ(S.coefficient({0, 1, 1, -1}), Rational(-1));
  // block d = 1 is e^{-Ht/alpha} / (H - alpha)^2
  EXPECT_EQ(S.coefficient({1, 0, 0, -2}), Rational(1));
}

TEST(Frobenius, QuinticClosedForms) {
  const int D = 8;
  CohomSeries S = build_hg_series(kQuintic, D);
  std::vector<TPolySeries> f = frobenius_f(S, kQuintic);
  ASSERT_EQ(f.size(), 4u);
  ScalarQSeries f0 = ref::hypersurface_f0(5, D), g1 = ref::hypersurface_g1(5, D);
  EXPECT_EQ(f0[1], Rational(120));
  EXPECT_EQ(f0[2], Rational(113400));
  EXPECT_EQ(g1[1], Rational(770));
  EXPECT_EQ(f[0].t_degree(), 0);
  EXPECT_EQ(f[0].coefficient(0), f0);
  EXPECT_EQ(f[1].coefficient(1), f0);
  EXPECT_EQ(f[1].coefficient(0), g1);
  EXPECT_THROW(frobenius_f(build_hg_series(kLocalP2, 3), kLocalP2), std::invalid_argument);
}

TEST(Frobenius, PicardFuchsAnnihilatesBasis) {
  const int D = 10;
  std::vector<TPolySeries> f = frobenius_f(build_hg_series(kQuintic, D), kQuintic);
  for (size_t i = 0; i < f.size(); ++i) {
    TPolySeries r = ref::quintic_picard_fuchs(f[i]);
    for (int j = 0; j <= 3; ++j)
      for (int d = 0; d <= D - 1; ++d) EXPECT_TRUE(r.at(j, d).is_zero()) << "f" << i << " t^" << j << " q^" << d;
  }
  // sanity: the operator does not kill an arbitrary series
  TPolySeries wrong = f[0];
  wrong.add(0, 3, Rational(1));
  EXPECT_FALSE(ref::quintic_picard_fuchs(wrong).is_zero());
}

TEST(Normalization, MirrorShiftsMatchClosedForms) {
  const int D = 10;
  Normalization lp = compute_normalization(build_hg_series(kLocalP2, D), kLocalP2);
  EXPECT_EQ(lp.g, ref::local_p2_g(D));
  EXPECT_EQ(lp.g[1], Rational(-6));
  EXPECT_EQ(lp.g[2], Rational(45));
  EXPECT_EQ(lp.F0, ScalarQSeries::one(D, Rational(0)));

  Normalization p3 = compute_normalization(build_hg_series(kP3, D), kP3);
  EXPECT_EQ(p3.g, ref::p3_g(D));
  EXPECT_EQ(p3.g[1], Rational(4));
  EXPECT_EQ(p3.g[2], Rational(18));

  EXPECT_EQ(compute_normalization(build_hg_series(kP4, D), kP4).g, ref::p4_g(D));

  const int Dq = 8;
  Normalization q = compute_normalization(build_hg_series(kQuintic, Dq), kQuintic);
  ScalarQSeries f0 = ref::hypersurface_f0(5, Dq);
  EXPECT_EQ(q.F0 * f0, ScalarQSeries::one(Dq, Rational(0)));
  EXPECT_EQ(q.g, ref::hypersurface_g1(5, Dq) * f0.inverse());
  EXPECT_EQ(q.g[1], Rational(770));

  Normalization id = compute_normalization(build_hg_series(kMulticover, 5), kMulticover);
  EXPECT_TRUE(id.g.is_zero());
  EXPECT_EQ(id.F0, ScalarQSeries::one(5, Rational(0)));
}

TEST(Normalization, CanonicalFormForPresets) {
  for (const auto& p : ref::presets()) {
    const int D = std::min(p.order, 8);
    CohomSeries S = build_hg_series(p.st, D);
    Normalization norm = compute_normalization(S, p.st);
    auto bad = ref::canonical_form_violation(S, p.st, norm);
    EXPECT_FALSE(bad.has_value()) << p.name << " q^" << bad->d << " alpha^" << bad->k;
    // without the shift the form is not canonical, except in the identity case
    if (p.st != kMulticover) {
      Normalization none{ScalarQSeries::one(D, Rational(0)), scalar_series(D)};
      EXPECT_TRUE(ref::canonical_form_violation(S, p.st, none).has_value()) << p.name;
    }
  }
}

TEST(Normalization, NonCriticalHasNoSolution) {
  const SplittingType c3(4, {4}, {});
  try {
    compute_normalization(build_hg_series(c3, 3), c3);
    FAIL() << "expected ConsistencyError";
  } catch (const ConsistencyError& e) {
    EXPECT_EQ(e.degree(), 1);
  }
  PipelineResult r = run_pipeline(c3, 3);
  EXPECT_EQ(r.pcase, PipelineCase::Case3);
  EXPECT_TRUE(r.K.empty());
  EXPECT_FALSE(r.normalization.has_value());
  EXPECT_FALSE(r.notes.empty());
}

TEST(ExtractK, IdentityCaseWithoutNormalization) {
  const int D = 12;
  CohomSeries S = build_hg_series(kMulticover, D);
  Normalization none{ScalarQSeries::one(D, Rational(0)), scalar_series(D)};
  std::vector<Rational> K = extract_K(S, kMulticover, none);
  ASSERT_EQ(K.size(), static_cast<size_t>(D));
  for (int d = 1; d <= D; ++d) EXPECT_EQ(K[d - 1], Rational(1) / Rational(d).pow(3));
}

TEST(ExtractK, WrongShiftIsRejected) {
  const int D = 4;
  CohomSeries S = build_hg_series(kLocalP2, D);
  Normalization bad{ScalarQSeries::one(D, Rational(0)), ref::local_p2_g(D)};
  bad.g[2] += Rational(1);
  EXPECT_THROW(extract_K(S, kLocalP2, bad), ConsistencyError);
}

TEST(Pipeline, PublishedTables) {
  PipelineResult lp = run_pipeline(kLocalP2, 10);
  EXPECT_EQ(lp.K, ref::local_p2_table());
  EXPECT_EQ(lp.n_d.front().value, Rational(3));
  EXPECT_TRUE(lp.all_checks_pass());

  PipelineResult p3 = run_pipeline(kP3, 10);
  EXPECT_EQ(p3.K, ref::p3_table());
  EXPECT_TRUE(p3.all_checks_pass());

  PipelineResult p4 = run_pipeline(kP4, 10);
  for (int d = 1; d <= 10; ++d) EXPECT_EQ(p4.K[d - 1], Rational(d % 2 ? -4 : 4) * ref::p3_table()[d - 1]) << d;
  EXPECT_EQ(p4.K[0], Rational(16));
  EXPECT_TRUE(p4.checks.at("p3_relation").passed);

  PipelineResult mc = run_pipeline(kMulticover, 12);
  for (int d = 1; d <= 12; ++d) {
    EXPECT_EQ(mc.K[d - 1], Rational(1) / Rational(d).pow(3));
    EXPECT_EQ(mc.n_d[d - 1].value, Rational(d == 1 ? 1 : 0));
  }
}

TEST(Pipeline, Quintic) {
  PipelineResult r = run_pipeline(kQuintic, 6);
  std::vector<Rational> n;
  for (const auto& v : r.n_d) {
    EXPECT_TRUE(v.integral) << v.d;
    n.push_back(v.value);
  }
  EXPECT_EQ(n, ref::quintic_instantons());
  for (const char* check : {"phi_t_independence", "dual_route", "t_consistency", "canonical_form", "homogeneity",
                            "frobenius_closed_form", "T_coordinate_route"}) {
    ASSERT_TRUE(r.checks.count(check)) << check;
    EXPECT_TRUE(r.checks.at(check).passed) << check;
  }
  ASSERT_EQ(r.f_series.size(), 4u);
  EXPECT_EQ(head(r.K, 3), ref::parse_list({"2875", "4876875/8", "8564575000/27"}));
}

TEST(Pipeline, OtherCompleteIntersections) {
  // cubic x cubic in P^5 and quartic x quadric in P^5: integral instanton numbers
  for (const auto& st : {SplittingType(5, {3, 3}, {}), SplittingType(5, {2, 4}, {}), SplittingType(6, {2, 2, 3}, {})}) {
    PipelineResult r = run_pipeline(st, 4);
    EXPECT_TRUE(r.all_checks_pass()) << st.render();
    for (const auto& v : r.n_d) EXPECT_TRUE(v.integral) << st.render() << " d=" << v.d;
  }
  EXPECT_EQ(run_pipeline(SplittingType(5, {3, 3}, {}), 2).n_d.front().value, Rational(1053));
}

TEST(Pipeline, UnsupportedThrows) {
  EXPECT_THROW(run_pipeline(SplittingType(2, {5}, {}), 3), std::invalid_argument);
}

TEST(Multicover, Inversion) {
  auto n = invert_multicover(ref::parse_list({"1", "1/8", "1/27"}));
  ASSERT_EQ(n.size(), 3u);
  EXPECT_EQ(n[0].value, Rational(1));
  EXPECT_EQ(n[1].value, Rational(0));
  EXPECT_EQ(n[2].value, Rational(0));
  EXPECT_EQ(invert_multicover({Rational(3)}).front().value, Rational(3));
  EXPECT_FALSE(invert_multicover({Rational(1, 2)}).front().integral);

  ref::Random rnd(11);
  for (int it = 0; it < 50; ++it) {
    std::vector<Rational> K;
    for (int d = 1; d <= 12; ++d) K.push_back(rnd.rational());
    auto nd = invert_multicover(K);
    for (int d = 1; d <= 12; ++d) {
      Rational sum(0);
      for (int k = 1; k <= d; ++k)
        if (d % k == 0) sum += nd[d / k - 1].value / Rational(k).pow(3);
      ASSERT_EQ(sum, K[d - 1]);
    }
  }
}

TEST(CriticalList, TableAndEnumeration) {
  std::vector<SplittingType> list = critical_list();
  EXPECT_EQ(list.size(), 9u);
  EXPECT_NE(std::find(list.begin(), list.end(), SplittingType(7, {2, 2, 2, 2}, {})), list.end());
  EXPECT_NE(std::find(list.begin(), list.end(), kQuintic), list.end());
  for (const auto& st : list) EXPECT_TRUE(st.is_critical()) << st.render();

  std::vector<SplittingType> all = enumerate_critical(7);
  std::set<SplittingType> a(all.begin(), all.end()), b(list.begin(), list.end());
  std::vector<SplittingType> extra;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(extra));
  ASSERT_EQ(extra.size(), 1u);
  EXPECT_EQ(extra.front(), SplittingType(3, {3}, {1}));
  EXPECT_TRUE(std::includes(a.begin(), a.end(), b.begin(), b.end()));
}
