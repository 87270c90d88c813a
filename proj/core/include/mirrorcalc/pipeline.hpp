#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mirrorcalc/cohom_series.hpp"
#include "mirrorcalc/splitting_type.hpp"
#include "mirrorcalc/tpoly_series.hpp"

namespace mirrorcalc {

enum class PipelineCase { Identity, Case1, Case2, Case3, Unsupported };
std::string to_string(PipelineCase c);

// IDENTITY when d*total - N <= (n+1)d - 2 for every d >= 1; otherwise
// CASE1 (N = 0, sum l = n+1), CASE2 (N = 1, sum l + k = n+1),
// CASE3 (N = 0, sum l = n) or UNSUPPORTED.
PipelineCase classify(const SplittingType& st);

// e^{-Ht/alpha} (Omega + sum_{d=1}^{order} P_d(H) q^d / prod_{m=1}^d (H - m alpha)^{n+1})
CohomSeries build_hg_series(const SplittingType& st, int order);

// f_i = (-1)^i / c * [H^{h+i} alpha^{-i}] of the HG series, i <= min(3, n-h).
// CASE1 only.
std::vector<TPolySeries> frobenius_f(const CohomSeries& S, const SplittingType& st);

// F0(q) e^{H g(q)/alpha} (Omega + blocks) = Omega + O(alpha^-2) blockwise,
// i.e. F0 * S(t) is the canonical series in the coordinate T = t + g.
struct Normalization {
  ScalarQSeries F0;
  ScalarQSeries g;
};
Normalization compute_normalization(const CohomSeries& S, const SplittingType& st);

struct CheckOutcome {
  bool passed = true;
  std::string detail;
};
using CheckLog = std::map<std::string, CheckOutcome>;

// K_1..K_D (element d-1 is K_d) from
// alpha^3 int (F0 S(t) - e^{-H(t+g)/alpha} Omega) = sum K_d (2 - d(t+g)) q^d e^{dg}.
// Critical types only; throws ConsistencyError naming the first bad degree.
std::vector<Rational> extract_K(const CohomSeries& S, const SplittingType& st, const Normalization& norm,
                                CheckLog* log = nullptr);

struct MulticoverValue {
  int d = 0;
  Rational value;
  bool integral = true;
};
// K_d = sum_{k | d} n_{d/k} k^-3
std::vector<MulticoverValue> invert_multicover(const std::vector<Rational>& K);

struct PipelineResult {
  SplittingType bundle;
  int order = 0;
  PipelineCase pcase = PipelineCase::Unsupported;
  std::vector<Rational> K;
  std::vector<MulticoverValue> n_d;
  std::optional<Normalization> normalization;
  std::vector<TPolySeries> f_series;
  CheckLog checks;
  std::vector<std::string> notes;

  bool all_checks_pass() const;
};

PipelineResult run_pipeline(const SplittingType& st, int order);

// The critical bundles without an O(1) summand, as tabulated.
std::vector<SplittingType> critical_list();
// Every splitting type without O(1) satisfying sum l + sum k = n+1 and
// P - N = n - 3, for 1 <= n <= max_n.
std::vector<SplittingType> enumerate_critical(int max_n);

}  // namespace mirrorcalc
