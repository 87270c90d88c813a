#include "mirrorcalc/rational_function.hpp"

#include <sstream>

#include "mirrorcalc/errors.hpp"

namespace mirrorcalc {

RationalFunction::RationalFunction(const Universe& u) : num_(u), den_(u, Rational(1)) {}

RationalFunction::RationalFunction(const Universe& u, const Rational& c)
    : num_(u, c), den_(u, Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(num_.universe(), Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.universe() == den_.universe())) throw UniverseMismatch("num/den universes differ");
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(num_.universe(), Rational(1));
    return;
  }
  Exponents g = num_.monomial_gcd();
  Exponents h = den_.monomial_gcd();
  bool shared = false;
  for (size_t v = 0; v < g.size(); ++v) {
    g[v] = std::min(g[v], h[v]);
    shared = shared || g[v] != 0;
  }
  if (shared) {
    num_ = num_.divide_monomial(g);
    den_ = den_.divide_monomial(g);
  }
  Rational lc = den_.leading_term().second;
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  return num_.constant_term() / den_.constant_term();
}

RationalFunction RationalFunction::reduced() const {
  if (den_.is_constant()) return *this;
  if (auto q = num_.exact_divide(den_)) return RationalFunction(std::move(*q));
  return *this;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (o.den_.is_constant()) {
    num_ += o.num_ * (den_ * o.den_.constant_term().inverse());
  } else if (den_.is_constant()) {
    num_ = num_ * (o.den_ * den_.constant_term().inverse()) + o.num_;
    den_ = o.den_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction(universe());
  num_ = num_ * o.num_;
  if (!o.den_.is_constant() || !o.den_.constant_term().is_one()) den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction& RationalFunction::operator*=(const Rational& c) {
  num_ *= c;
  if (c.is_zero()) den_ = Polynomial(universe(), Rational(1));
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r(universe(), Rational(1));
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  r.normalize();
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (!(a.universe() == b.universe())) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) { return a == b; }

std::string RationalFunction::str() const {
  if (den_.is_constant()) {
    Rational d = den_.constant_term();
    if (d.is_one()) return num_.str();
    return (num_ * d.inverse()).str();
  }
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

std::string bound_names(const Bindings& b) {
  std::string s;
  for (const auto& [sym, v] : b) {
    if (!s.empty()) s += ", ";
    s += sym.name();
  }
  return s;
}

}  // namespace

RationalFunction poly_substitute(const Polynomial& p, const Bindings& b) {
  const Universe& u = p.universe();
  struct Bound {
    int var;
    const RationalFunction* value;
    unsigned max_exp = 0;
    std::vector<Polynomial> num_pow, den_pow;
  };
  std::vector<Bound> bound;
  for (const auto& [sym, value] : b) {
    if (!(value.universe() == u)) {
      throw UniverseMismatch("binding for " + sym.name() + " introduces a foreign universe");
    }
    bound.push_back({sym.var(u), &value, 0, {}, {}});
  }
  if (bound.empty() || p.is_zero()) return RationalFunction(p);

  for (auto& bd : bound)
    for (const auto& [e, c] : p.terms()) bd.max_exp = std::max(bd.max_exp, e[bd.var]);
  for (auto& bd : bound) {
    bd.num_pow.push_back(Polynomial(u, Rational(1)));
    bd.den_pow.push_back(Polynomial(u, Rational(1)));
    for (unsigned k = 1; k <= bd.max_exp; ++k) {
      bd.num_pow.push_back(bd.num_pow.back() * bd.value->num());
      bd.den_pow.push_back(bd.den_pow.back() * bd.value->den());
    }
  }

  // Common denominator prod den_v^max_exp; each term gets num_v^e den_v^(max-e).
  Polynomial numerator(u);
  Polynomial common(u, Rational(1));
  for (const auto& bd : bound) common = common * bd.den_pow[bd.max_exp];

  std::map<std::vector<unsigned>, Polynomial> grouped;  // bound-exponent pattern -> remaining part
  for (const auto& [e, c] : p.terms()) {
    std::vector<unsigned> key;
    Exponents rest = e;
    for (const auto& bd : bound) {
      key.push_back(e[bd.var]);
      rest[bd.var] = 0;
    }
    auto it = grouped.try_emplace(std::move(key), u).first;
    it->second.add_term(rest, c);
  }
  for (const auto& [key, rest] : grouped) {
    Polynomial term = rest;
    for (size_t k = 0; k < bound.size(); ++k) {
      const auto& bd = bound[k];
      term = term * bd.num_pow[key[k]];
      if (key[k] != bd.max_exp) term = term * bd.den_pow[bd.max_exp - key[k]];
    }
    numerator += term;
  }
  return RationalFunction(std::move(numerator), std::move(common));
}

RationalFunction rf_substitute(const RationalFunction& f, const Bindings& b) {
  RationalFunction num = poly_substitute(f.num(), b);
  RationalFunction den = poly_substitute(f.den(), b);
  if (den.is_zero()) {
    throw DivisionByZero("denominator vanishes after substituting " + bound_names(b));
  }
  return num / den;
}

Polynomial bar_involution(const Polynomial& p, int d) {
  const Universe& u = p.universe();
  Bindings b;
  b.emplace(Symbol::kappa(),
            RationalFunction(Polynomial::linear(u, {{Symbol::kappa(), 1}, {Symbol::alpha(), -d}})));
  b.emplace(Symbol::alpha(), RationalFunction(Polynomial::linear(u, {{Symbol::alpha(), -1}})));
  RationalFunction r = poly_substitute(p, b);
  return r.num() * r.den().constant_term().inverse();
}

RationalFunction flip_alpha(const RationalFunction& f) {
  return RationalFunction(flip_alpha(f.num()), flip_alpha(f.den()));
}

int alpha_degree(const Polynomial& p) { return p.degree(Symbol::alpha()); }

int alpha_degree(const RationalFunction& f) {
  RationalFunction r = f.reduced();
  if (r.den().uses(Symbol::alpha())) {
    throw std::domain_error("alpha occurs in the denominator: " + r.str());
  }
  return alpha_degree(r.num());
}

}  // namespace mirrorcalc
