#include "mirrorcalc/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "mirrorcalc/errors.hpp"

namespace mirrorcalc {

Universe::Universe(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("universe needs n >= 0");
}

int Universe::lambda(int i) const {
  if (i < 0 || i > n_) {
    throw UniverseMismatch("lambda_" + std::to_string(i) + " outside universe with n = " +
                           std::to_string(n_));
  }
  return i;
}

std::string Universe::name(int var) const {
  if (var <= n_) return "l" + std::to_string(var);
  if (var == alpha()) return "alpha";
  if (var == kappa()) return "kappa";
  return "x";
}

int Symbol::var(const Universe& u) const {
  switch (kind) {
    case Kind::Lambda: return u.lambda(index);
    case Kind::Alpha: return u.alpha();
    case Kind::Kappa: return u.kappa();
    case Kind::X: return u.x();
  }
  return -1;
}

std::string Symbol::name() const {
  switch (kind) {
    case Kind::Lambda: return "l" + std::to_string(index);
    case Kind::Alpha: return "alpha";
    case Kind::Kappa: return "kappa";
    case Kind::X: return "x";
  }
  return "?";
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return a < b;
}

Polynomial::Polynomial(const Universe& u) : universe_(u) {}

Polynomial::Polynomial(const Universe& u, const Rational& c) : universe_(u) {
  if (!c.is_zero()) terms_.emplace(Exponents(u.size(), 0), c);
}

Polynomial Polynomial::variable(const Universe& u, Symbol s) {
  Exponents e(u.size(), 0);
  e[s.var(u)] = 1;
  return monomial(u, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(const Universe& u, Exponents e, const Rational& c) {
  if (static_cast<int>(e.size()) != u.size()) throw UniverseMismatch("exponent vector size");
  Polynomial p(u);
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

Polynomial Polynomial::linear(const Universe& u,
                              const std::vector<std::pair<Symbol, Rational>>& parts,
                              const Rational& constant) {
  Polynomial p(u, constant);
  for (const auto& [s, c] : parts) {
    Exponents e(u.size(), 0);
    e[s.var(u)] = 1;
    p.add_term(e, c);
  }
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto v : terms_.begin()->first)
    if (v != 0) return false;
  return true;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(universe_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Exponents, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

int Polynomial::degree(Symbol s) const {
  if (terms_.empty()) return kNegInfDegree;
  int v = s.var(universe_);
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, static_cast<int>(e[v]));
  return d;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return kNegInfDegree;
  const auto& e = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.mpq().get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.mpq().get_den_mpz_t());
  }
  return Rational(mpq_class(abs(g), l));
}

Exponents Polynomial::monomial_gcd() const {
  Exponents g(universe_.size(), 0);
  if (terms_.empty()) return g;
  g = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (size_t v = 0; v < g.size(); ++v) g[v] = std::min(g[v], e[v]);
  return g;
}

Polynomial Polynomial::divide_monomial(const Exponents& m) const {
  Polynomial r(universe_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (size_t v = 0; v < f.size(); ++v) {
      if (f[v] < m[v]) throw std::logic_error("monomial does not divide polynomial");
      f[v] -= m[v];
    }
    r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
  }
  return r;
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& divisor) const {
  check_same(divisor);
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  Polynomial quotient(universe_);
  Polynomial rest = *this;
  const auto& [dl, dc] = divisor.leading_term();
  while (!rest.is_zero()) {
    const auto& [rl, rc] = rest.leading_term();
    Exponents m = rl;
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] < dl[v]) return std::nullopt;
      m[v] -= dl[v];
    }
    Polynomial step = monomial(universe_, m, rc / dc);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_same(const Polynomial& o) const {
  if (!(universe_ == o.universe_)) throw UniverseMismatch("polynomials from different universes");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial r(a.universe_);
  Exponents e(a.universe_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      auto [it, inserted] = r.terms_.try_emplace(e, ca);
      if (inserted) {
        it->second *= cb;
      } else {
        it->second += ca * cb;
      }
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(universe_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool unit_monomial = true;
    for (auto v : e) unit_monomial = unit_monomial && v == 0;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (!mag.is_one() || unit_monomial) {
      os << mag.str();
      need_star = true;
    }
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (need_star) os << "*";
      os << universe_.name(static_cast<int>(v));
      if (e[v] > 1) os << "^" << e[v];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial flip_alpha(const Polynomial& p) {
  int a = p.universe().alpha();
  Polynomial out(p.universe());
  for (const auto& [e, c] : p.terms()) out.add_term(e, (e[a] % 2) ? -c : c);
  return out;
}

}  // namespace mirrorcalc
