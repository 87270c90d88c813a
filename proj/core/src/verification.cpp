#include "mirrorcalc/verification.hpp"

#include <json.hpp>

#include "mirrorcalc/errors.hpp"

namespace mirrorcalc {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

bool VerificationReport::all_pass() const { return count(CheckStatus::Fail) == 0; }

int VerificationReport::count(CheckStatus s) const {
  int c = 0;
  for (const auto& r : results) c += r.status == s;
  return c;
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["n"] = n;
  j["d_max"] = d_max;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    j["results"].push_back(
        {{"d", r.d}, {"i", r.i}, {"r", r.r}, {"status", to_string(r.status)}, {"witness", r.witness}});
  }
  j["all_pass"] = all_pass();
  return j.dump(indent);
}

namespace {

Bindings alpha_binding(const Universe& u, int num_lambda, int den_lambda, int divisor) {
  // alpha = (lambda_a - lambda_b) / divisor
  Bindings b;
  b.emplace(Symbol::alpha(),
            RationalFunction(Polynomial::linear(
                u, {{Symbol::lambda(num_lambda), Rational(1, divisor)}, {Symbol::lambda(den_lambda), Rational(-1, divisor)}})));
  return b;
}

CheckResult compare(int d, int i, int r, const RationalFunction& lhs, const RationalFunction& rhs,
                    const std::string& prefix = "") {
  CheckResult res{d, i, r, CheckStatus::Pass, ""};
  if (!(lhs == rhs)) {
    res.status = CheckStatus::Fail;
    res.witness = prefix + "difference " + (lhs - rhs).str();
  }
  return res;
}

// Runs f; a vanishing denominator turns the result inconclusive.
template <class F>
CheckResult guarded(int d, int i, int r, const std::string& prefix, F&& f) {
  try {
    return f();
  } catch (const DivisionByZero& e) {
    return {d, i, r, CheckStatus::Inconclusive, prefix + e.what()};
  }
}

}  // namespace

VerificationReport check_gluing(const EulerDataTable& t) {
  VerificationReport rep{"gluing", t.n(), t.d_max(), {}};
  for (int d = 1; d <= t.d_max(); ++d)
    for (int i = 0; i <= t.n(); ++i)
      for (int r = 0; r <= d; ++r) {
        rep.results.push_back(guarded(d, i, r, "", [&] {
          RationalFunction lhs = t.omega(i) * t.entry(d, i, r);
          RationalFunction rhs = flip_alpha(t.base(r, i)) * t.base(d - r, i);
          return compare(d, i, r, lhs, rhs);
        }));
      }
  return rep;
}

VerificationReport check_reciprocity(const EulerDataTable& t) {
  VerificationReport rep{"reciprocity", t.n(), t.d_max(), {}};
  Universe u = t.universe();
  for (int d = 1; d <= t.d_max(); ++d) {
    for (int i = 0; i <= t.n(); ++i) {
      rep.results.push_back(guarded(d, i, d, "(i) ", [&] {
        return compare(d, i, d, t.entry(d, i, d), flip_alpha(t.entry(d, i, 0)), "(i) ");
      }));
    }
    for (int i = 0; i <= t.n(); ++i)
      for (int j = 0; j <= t.n(); ++j) {
        if (i == j) continue;
        std::string pre = "(ii) j=" + std::to_string(j) + " ";
        rep.results.push_back(guarded(d, i, 0, pre, [&] {
          RationalFunction lhs = rf_substitute(t.entry(d, j, 0), alpha_binding(u, j, i, d));
          RationalFunction rhs = rf_substitute(t.entry(d, i, 0), alpha_binding(u, i, j, d));
          return compare(d, i, 0, lhs, rhs, pre);
        }));
      }
    for (int i = 0; i <= t.n(); ++i)
      for (int j = 0; j <= t.n(); ++j) {
        if (i == j) continue;
        for (int r = 1; r <= d; ++r) {
          std::string pre = "(iii) j=" + std::to_string(j) + " ";
          rep.results.push_back(guarded(d, i, r, pre, [&] {
            Bindings b = alpha_binding(u, j, i, r);
            RationalFunction lhs = rf_substitute(t.omega(i) * t.entry(d, j, 0), b);
            RationalFunction rhs = rf_substitute(t.base(r, j) * t.base(d - r, i), b);
            return compare(d, i, r, lhs, rhs, pre);
          }));
        }
      }
  }
  return rep;
}

namespace {

void check_shapes(const EulerDataTable& a, const EulerDataTable& b) {
  if (a.n() != b.n() || a.d_max() != b.d_max()) throw std::invalid_argument("tables have different shapes");
}

}  // namespace

VerificationReport check_linked(const EulerDataTable& a, const EulerDataTable& b) {
  check_shapes(a, b);
  VerificationReport rep{"linking", a.n(), a.d_max(), {}};
  Universe u = a.universe();
  for (int d = 1; d <= a.d_max(); ++d)
    for (int i = 0; i <= a.n(); ++i) {
      RationalFunction diff = a.entry(d, i, 0) - b.entry(d, i, 0);
      for (int j = 0; j <= a.n(); ++j) {
        if (j == i) continue;
        std::string pre = "j=" + std::to_string(j) + " ";
        rep.results.push_back(guarded(d, i, 0, pre, [&] {
          RationalFunction v = rf_substitute(diff, alpha_binding(u, i, j, d));
          CheckResult res{d, i, 0, CheckStatus::Pass, ""};
          if (!v.is_zero()) {
            res.status = CheckStatus::Fail;
            res.witness = pre + "value " + v.str();
          }
          return res;
        }));
      }
    }
  return rep;
}

VerificationReport check_degree_bound(const EulerDataTable& a, const EulerDataTable& b) {
  check_shapes(a, b);
  VerificationReport rep{"degree-bound", a.n(), a.d_max(), {}};
  for (int d = 1; d <= a.d_max(); ++d)
    for (int i = 0; i <= a.n(); ++i) {
      RationalFunction diff = (a.entry(d, i, 0) - b.entry(d, i, 0)).reduced();
      CheckResult res{d, i, 0, CheckStatus::Pass, ""};
      int bound = (a.n() + 1) * d - 2;
      if (diff.den().uses(Symbol::alpha())) {
        res.status = CheckStatus::Inconclusive;
        res.witness = "alpha remains in the denominator";
      } else {
        int deg = alpha_degree(diff.num());
        std::string shown = deg == kNegInfDegree ? "-inf" : std::to_string(deg);
        res.witness = "deg=" + shown + " bound=" + std::to_string(bound);
        if (deg != kNegInfDegree && deg > bound) res.status = CheckStatus::Fail;
      }
      rep.results.push_back(std::move(res));
    }
  return rep;
}

EulerDataTable zero_like(const EulerDataTable& shape) {
  Universe u = shape.universe();
  std::vector<RationalFunction> omega;
  for (int i = 0; i <= shape.n(); ++i) omega.push_back(shape.omega(i));
  std::vector<std::vector<std::vector<RationalFunction>>> entries(shape.d_max());
  for (int d = 1; d <= shape.d_max(); ++d)
    entries[d - 1].assign(shape.n() + 1, std::vector<RationalFunction>(d + 1, RationalFunction(u)));
  return EulerDataTable(shape.n(), shape.d_max(), std::move(omega), std::move(entries));
}

}  // namespace mirrorcalc
