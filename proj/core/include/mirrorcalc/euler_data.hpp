#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mirrorcalc/rational_function.hpp"
#include "mirrorcalc/splitting_type.hpp"

namespace mirrorcalc {

// Euler data given by a rule d -> Q_d(kappa, alpha[, x]) for d >= 1 plus the
// restrictions of Omega to the fixed points of P^n.
class EulerDataClosed {
 public:
  using Rule = std::function<Polynomial(const Universe&, int d)>;
  using OmegaRule = std::function<RationalFunction(const Universe&, int i)>;

  EulerDataClosed(std::string label, Rule rule, OmegaRule omega_rule, OmegaClass omega,
                  bool with_x = false);

  const std::string& label() const { return label_; }
  const OmegaClass& omega() const { return omega_; }
  bool with_x() const { return with_x_; }

  Polynomial polynomial(const Universe& u, int d) const;
  RationalFunction omega_restriction(const Universe& u, int i) const { return omega_rule_(u, i); }

 private:
  std::string label_;
  Rule rule_;
  OmegaRule omega_rule_;
  OmegaClass omega_;
  bool with_x_;
};

// P_d = prod_a prod_{m=0}^{l_a d} (l_a kappa - m alpha)
//     * prod_b prod_{m=1}^{k_b d - 1} (-k_b kappa + m alpha).
// With x every factor gains a leading x and Omega restricts to
// prod(x + l_a lambda_i) / prod(x - k_b lambda_i).
EulerDataClosed build_hypergeom_data(const SplittingType& st, bool with_x = false);

// Q_d = kappa (kappa - d alpha), Omega = H^2
EulerDataClosed kappa_square_data();

// Q_d restricted at p_{i,r}: kappa -> lambda_i + r alpha
RationalFunction restrict(const EulerDataClosed& ed, int n, int d, int i, int r);

// Entries (d, i, r) for 1 <= d <= d_max, 0 <= i <= n, 0 <= r <= d, plus
// the Omega restrictions. Q_0 is Omega by convention.
class EulerDataTable {
 public:
  EulerDataTable(int n, int d_max, std::vector<RationalFunction> omega,
                 std::vector<std::vector<std::vector<RationalFunction>>> entries);

  int n() const { return n_; }
  int d_max() const { return d_max_; }
  Universe universe() const { return Universe(n_); }

  const RationalFunction& entry(int d, int i, int r) const;
  const RationalFunction& omega(int i) const;
  // Q_d(lambda_i) = entry(d, i, 0), and Omega(lambda_i) for d = 0
  const RationalFunction& base(int d, int i) const;

  EulerDataTable with_entry(int d, int i, int r, RationalFunction value) const;

 private:
  int n_;
  int d_max_;
  std::vector<RationalFunction> omega_;
  std::vector<std::vector<std::vector<RationalFunction>>> entries_;  // [d-1][i][r]
};

EulerDataTable to_table(const EulerDataClosed& ed, int n, int d_max);

enum class CombineKind { Product, Quotient, Scale, Alternate };
using CombineOperand = std::variant<std::monostate, EulerDataTable, RationalFunction>;

// Product / Quotient take a table, Scale a scalar in Q(lambda), Alternate
// ((-1)^(d+1) Q_d, -Omega) takes nothing.
EulerDataTable ed_combine(CombineKind kind, const EulerDataTable& a, const CombineOperand& b = {});

// The values B_d(lambda_i) of an S_0-sequence, d = 0..d_max, B_0 = Omega.
class S0Sequence {
 public:
  S0Sequence(int n, int d_max, std::vector<std::vector<RationalFunction>> values);
  int n() const { return n_; }
  int d_max() const { return d_max_; }
  Universe universe() const { return Universe(n_); }
  const RationalFunction& at(int d, int i) const;
  friend bool operator==(const S0Sequence& a, const S0Sequence& b);

 private:
  int n_;
  int d_max_;
  std::vector<std::vector<RationalFunction>> values_;  // [d][i]
};

}  // namespace mirrorcalc
