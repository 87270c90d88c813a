#include "mirrorcalc/euler_data.hpp"

#include <stdexcept>

#include "mirrorcalc/errors.hpp"

namespace mirrorcalc {

EulerDataClosed::EulerDataClosed(std::string label, Rule rule, OmegaRule omega_rule,
                                 OmegaClass omega, bool with_x)
    : label_(std::move(label)),
      rule_(std::move(rule)),
      omega_rule_(std::move(omega_rule)),
      omega_(std::move(omega)),
      with_x_(with_x) {}

Polynomial EulerDataClosed::polynomial(const Universe& u, int d) const {
  if (d < 1) throw std::invalid_argument("Euler data rule is defined for d >= 1");
  return rule_(u, d);
}

namespace {

RationalFunction power_of_lambda(const Universe& u, int i, const Rational& c, int h) {
  Polynomial lam = Polynomial::variable(u, Symbol::lambda(i));
  if (h >= 0) return RationalFunction(c * lam.pow(static_cast<unsigned>(h)));
  return RationalFunction(Polynomial(u, c), lam.pow(static_cast<unsigned>(-h)));
}

}  // namespace

EulerDataClosed build_hypergeom_data(const SplittingType& st, bool with_x) {
  std::vector<int> convex = st.convex();
  std::vector<int> concave = st.concave();
  auto rule = [convex, concave, with_x](const Universe& u, int d) {
    Rational xc = with_x ? Rational(1) : Rational(0);
    Polynomial p(u, Rational(1));
    for (int l : convex)
      for (int m = 0; m <= l * d; ++m)
        p = p * Polynomial::linear(u, {{Symbol::x(), xc}, {Symbol::kappa(), l}, {Symbol::alpha(), -m}});
    for (int k : concave)
      for (int m = 1; m <= k * d - 1; ++m)
        p = p * Polynomial::linear(u, {{Symbol::x(), xc}, {Symbol::kappa(), -k}, {Symbol::alpha(), m}});
    return p;
  };
  OmegaClass omega = omega_class(st);
  auto omega_rule = [convex, concave, with_x, omega](const Universe& u, int i) {
    if (!with_x) return power_of_lambda(u, i, omega.scalar, omega.h_exponent);
    Polynomial num(u, Rational(1)), den(u, Rational(1));
    for (int l : convex) num = num * Polynomial::linear(u, {{Symbol::x(), 1}, {Symbol::lambda(i), l}});
    for (int k : concave) den = den * Polynomial::linear(u, {{Symbol::x(), 1}, {Symbol::lambda(i), -k}});
    return RationalFunction(num, den);
  };
  std::string label = "hypergeometric " + st.render() + " on P^" + std::to_string(st.n());
  if (with_x) label += " (x)";
  return EulerDataClosed(label, rule, omega_rule, omega, with_x);
}

EulerDataClosed kappa_square_data() {
  auto rule = [](const Universe& u, int d) {
    Polynomial k = Polynomial::variable(u, Symbol::kappa());
    return k * Polynomial::linear(u, {{Symbol::kappa(), 1}, {Symbol::alpha(), -d}});
  };
  auto omega_rule = [](const Universe& u, int i) { return power_of_lambda(u, i, Rational(1), 2); };
  return EulerDataClosed("kappa(kappa - d alpha)", rule, omega_rule, OmegaClass{Rational(1), 2});
}

RationalFunction restrict(const EulerDataClosed& ed, int n, int d, int i, int r) {
  Universe u(n);
  if (i < 0 || i > n || r < 0 || r > d) {
    throw std::out_of_range("restriction index (d=" + std::to_string(d) + ", i=" + std::to_string(i) +
                            ", r=" + std::to_string(r) + ") out of range");
  }
  Bindings b;
  b.emplace(Symbol::kappa(),
            RationalFunction(Polynomial::linear(u, {{Symbol::lambda(i), 1}, {Symbol::alpha(), r}})));
  return poly_substitute(ed.polynomial(u, d), b);
}

EulerDataTable::EulerDataTable(int n, int d_max, std::vector<RationalFunction> omega,
                               std::vector<std::vector<std::vector<RationalFunction>>> entries)
    : n_(n), d_max_(d_max), omega_(std::move(omega)), entries_(std::move(entries)) {
  if (static_cast<int>(omega_.size()) != n + 1) throw std::invalid_argument("table needs n+1 Omega restrictions");
  for (int i = 0; i <= n; ++i)
    if (omega_[i].is_zero()) throw std::invalid_argument("Omega restriction at p_" + std::to_string(i) + " is zero");
  if (static_cast<int>(entries_.size()) != d_max) throw std::invalid_argument("table is missing degrees");
  for (int d = 1; d <= d_max; ++d) {
    if (static_cast<int>(entries_[d - 1].size()) != n + 1) throw std::invalid_argument("table is missing fixed points");
    for (int i = 0; i <= n; ++i)
      if (static_cast<int>(entries_[d - 1][i].size()) != d + 1) {
        throw std::invalid_argument("table is missing restriction indices at d=" + std::to_string(d));
      }
  }
}

const RationalFunction& EulerDataTable::entry(int d, int i, int r) const {
  if (d < 1 || d > d_max_ || i < 0 || i > n_ || r < 0 || r > d) {
    throw std::out_of_range("table entry (" + std::to_string(d) + "," + std::to_string(i) + "," +
                            std::to_string(r) + ") out of range");
  }
  return entries_[d - 1][i][r];
}

const RationalFunction& EulerDataTable::omega(int i) const { return omega_.at(i); }

const RationalFunction& EulerDataTable::base(int d, int i) const {
  return d == 0 ? omega(i) : entry(d, i, 0);
}

EulerDataTable EulerDataTable::with_entry(int d, int i, int r, RationalFunction value) const {
  EulerDataTable t = *this;
  (void)entry(d, i, r);
  t.entries_[d - 1][i][r] = std::move(value);
  return t;
}

EulerDataTable to_table(const EulerDataClosed& ed, int n, int d_max) {
  Universe u(n);
  std::vector<RationalFunction> omega;
  for (int i = 0; i <= n; ++i) omega.push_back(ed.omega_restriction(u, i));
  std::vector<std::vector<std::vector<RationalFunction>>> entries;
  for (int d = 1; d <= d_max; ++d) {
    Polynomial q = ed.polynomial(u, d);
    auto& by_point = entries.emplace_back();
    for (int i = 0; i <= n; ++i) {
      auto& row = by_point.emplace_back();
      for (int r = 0; r <= d; ++r) {
        Bindings b;
        b.emplace(Symbol::kappa(),
                  RationalFunction(Polynomial::linear(u, {{Symbol::lambda(i), 1}, {Symbol::alpha(), r}})));
        row.push_back(poly_substitute(q, b));
      }
    }
  }
  return EulerDataTable(n, d_max, std::move(omega), std::move(entries));
}

EulerDataTable ed_combine(CombineKind kind, const EulerDataTable& a, const CombineOperand& b) {
  const int n = a.n(), dm = a.d_max();
  std::vector<RationalFunction> omega;
  std::vector<std::vector<std::vector<RationalFunction>>> entries(dm);
  auto build = [&](auto&& om, auto&& ent) {
    for (int i = 0; i <= n; ++i) omega.push_back(om(i));
    for (int d = 1; d <= dm; ++d) {
      entries[d - 1].resize(n + 1);
      for (int i = 0; i <= n; ++i)
        for (int r = 0; r <= d; ++r) entries[d - 1][i].push_back(ent(d, i, r));
    }
  };
  switch (kind) {
    case CombineKind::Product:
    case CombineKind::Quotient: {
      const auto* other = std::get_if<EulerDataTable>(&b);
      if (!other) throw std::invalid_argument("product/quotient needs a second table");
      if (other->n() != n || other->d_max() != dm) throw std::invalid_argument("tables have different shapes");
      if (kind == CombineKind::Product) {
        build([&](int i) { return a.omega(i) * other->omega(i); },
              [&](int d, int i, int r) { return a.entry(d, i, r) * other->entry(d, i, r); });
      } else {
        build([&](int i) { return a.omega(i) / other->omega(i); },
              [&](int d, int i, int r) {
                const RationalFunction& den = other->entry(d, i, r);
                if (den.is_zero()) {
                  throw DivisionByZero("quotient by zero entry at (d=" + std::to_string(d) + ", i=" +
                                       std::to_string(i) + ", r=" + std::to_string(r) + ")");
                }
                return a.entry(d, i, r) / den;
              });
      }
      break;
    }
    case CombineKind::Scale: {
      const auto* s = std::get_if<RationalFunction>(&b);
      if (!s) throw std::invalid_argument("scale needs a scalar");
      if (s->uses(Symbol::alpha()) || s->uses(Symbol::kappa()) || s->uses(Symbol::x())) throw std::invalid_argument("scale factor must lie in Q(lambda)");
      build([&](int i) { return a.omega(i) * *s; }, [&](int d, int i, int r) { return a.entry(d, i, r) * *s; });
      break;
    }
    case CombineKind::Alternate:
      build([&](int i) { return -a.omega(i); },
            [&](int d, int i, int r) { return d % 2 ? a.entry(d, i, r) : -a.entry(d, i, r); });
      break;
  }
  return EulerDataTable(n, dm, std::move(omega), std::move(entries));
}

S0Sequence::S0Sequence(int n, int d_max, std::vector<std::vector<RationalFunction>> values)
    : n_(n), d_max_(d_max), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != d_max + 1) throw std::invalid_argument("S0 sequence needs d = 0..d_max");
  for (const auto& row : values_)
    if (static_cast<int>(row.size()) != n + 1) throw std::invalid_argument("S0 sequence needs n+1 values per degree");
  for (int i = 0; i <= n; ++i)
    if (values_[0][i].is_zero()) throw std::invalid_argument("B_0 = Omega must not vanish");
}

const RationalFunction& S0Sequence::at(int d, int i) const { return values_.at(d).at(i); }

bool operator==(const S0Sequence& a, const S0Sequence& b) {
  if (a.n_ != b.n_ || a.d_max_ != b.d_max_) return false;
  for (int d = 0; d <= a.d_max_; ++d)
    for (int i = 0; i <= a.n_; ++i)
      if (!(a.at(d, i) == b.at(d, i))) return false;
  return true;
}

}  // namespace mirrorcalc
