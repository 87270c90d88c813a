#pragma once

#include <string>
#include <vector>

#include "mirrorcalc/euler_data.hpp"

namespace mirrorcalc {

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string to_string(CheckStatus s);

struct CheckResult {
  int d = 0;
  int i = 0;
  int r = 0;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // empty on pass; difference or reason otherwise
};

struct VerificationReport {
  std::string check;
  int n = 0;
  int d_max = 0;
  std::vector<CheckResult> results;

  // no result failed; inconclusive results do not count as failures
  bool all_pass() const;
  int count(CheckStatus s) const;
  std::string to_json(int indent = 2) const;
};

// Omega(l_i) Q_d(l_i + r alpha) == bar(Q_r(l_i)) Q_{d-r}(l_i), Q_0 = Omega
VerificationReport check_gluing(const EulerDataTable& t);

// (i)   Q_d(l_i + d alpha) == bar(Q_d(l_i))
// (ii)  Q_d(l_j)|alpha=(l_j-l_i)/d == Q_d(l_i)|alpha=(l_i-l_j)/d
// (iii) Omega(l_i) Q_d(l_j) == Q_r(l_j) Q_{d-r}(l_i) at alpha=(l_j-l_i)/r
// Results of (ii) and (iii) carry j in the witness prefix.
VerificationReport check_reciprocity(const EulerDataTable& t);

// (A - B)(l_i) vanishes at alpha = (l_i - l_j)/d for all j != i
VerificationReport check_linked(const EulerDataTable& a, const EulerDataTable& b);

// deg_alpha (A - B)(l_i) <= (n+1) d - 2
VerificationReport check_degree_bound(const EulerDataTable& a, const EulerDataTable& b);

// Table with every entry zero and Omega restrictions copied from `shape`.
EulerDataTable zero_like(const EulerDataTable& shape);

}  // namespace mirrorcalc
