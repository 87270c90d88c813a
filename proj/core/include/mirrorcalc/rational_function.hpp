#pragma once

#include <map>
#include <string>

#include "mirrorcalc/polynomial.hpp"

namespace mirrorcalc {

// num/den over Q. Normalization only strips the rational content and the
// common monomial factor, and makes the leading coefficient of den equal 1;
// no multivariate gcd. Equality is by cross-multiplication.
class RationalFunction {
 public:
  explicit RationalFunction(const Universe& u);
  RationalFunction(const Universe& u, const Rational& c);
  RationalFunction(Polynomial num);  // NOLINT: polynomials embed implicitly
  RationalFunction(Polynomial num, Polynomial den);

  const Universe& universe() const { return num_.universe(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool uses(Symbol s) const { return num_.uses(s) || den_.uses(s); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;  // precondition: is_constant()

  // Cancels den against num when den divides num exactly.
  RationalFunction reduced() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction& operator*=(const Rational& c);
  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator*(RationalFunction a, const Rational& c) { return a *= c; }
  friend RationalFunction operator*(const Rational& c, RationalFunction a) { return a *= c; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string str() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

bool rf_equal(const RationalFunction& a, const RationalFunction& b);

using Bindings = std::map<Symbol, RationalFunction>;

// Simultaneous substitution. Bound symbols must belong to the same universe.
RationalFunction poly_substitute(const Polynomial& p, const Bindings& b);
// Throws DivisionByZero (naming the bound symbols) when the substituted
// denominator vanishes.
RationalFunction rf_substitute(const RationalFunction& f, const Bindings& b);

// kappa -> kappa - d*alpha, alpha -> -alpha
Polynomial bar_involution(const Polynomial& p, int d);
// alpha -> -alpha on an already restricted entry
RationalFunction flip_alpha(const RationalFunction& f);

// Degree in alpha; requires an alpha-free denominator after reduction.
// kNegInfDegree for zero.
int alpha_degree(const Polynomial& p);
int alpha_degree(const RationalFunction& f);

}  // namespace mirrorcalc

namespace mirrorcalc {
inline RationalFunction one_like(const RationalFunction& f) { return RationalFunction(f.universe(), Rational(1)); }
}  // namespace mirrorcalc
