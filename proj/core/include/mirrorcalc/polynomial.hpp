#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mirrorcalc/rational.hpp"

namespace mirrorcalc {

// Variables of a session: lambda_0..lambda_n, alpha, kappa, x.
// Variable i of the exponent vector is lambda_i for i <= n, then alpha,
// kappa, x.
class Universe {
 public:
  explicit Universe(int n);
  int n() const { return n_; }
  int size() const { return n_ + 4; }
  int lambda(int i) const;
  int alpha() const { return n_ + 1; }
  int kappa() const { return n_ + 2; }
  int x() const { return n_ + 3; }
  std::string name(int var) const;
  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  int n_;
};

struct Symbol {
  enum class Kind { Lambda, Alpha, Kappa, X };
  Kind kind;
  int index = 0;

  static Symbol lambda(int i) { return {Kind::Lambda, i}; }
  static Symbol alpha() { return {Kind::Alpha, 0}; }
  static Symbol kappa() { return {Kind::Kappa, 0}; }
  static Symbol x() { return {Kind::X, 0}; }

  int var(const Universe& u) const;
  std::string name() const;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic: total degree first, then lexicographic with
// variable 0 most significant.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, GradedLex>;

  explicit Polynomial(const Universe& u);
  Polynomial(const Universe& u, const Rational& c);
  static Polynomial variable(const Universe& u, Symbol s);
  static Polynomial monomial(const Universe& u, Exponents e, const Rational& c);
  // c_lambda * lambda_i + c_alpha * alpha + ... convenience for linear forms
  static Polynomial linear(const Universe& u,
                           const std::vector<std::pair<Symbol, Rational>>& parts,
                           const Rational& constant = Rational(0));

  const Universe& universe() const { return universe_; }
  const Terms& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  // greatest monomial in graded lex order; precondition: nonzero
  const std::pair<const Exponents, Rational>& leading_term() const;

  int degree(Symbol s) const;  // kNegInfDegree for the zero polynomial
  int total_degree() const;
  bool uses(Symbol s) const { return degree(s) > 0; }

  // positive rational c with p / c having coprime integer coefficients
  Rational content() const;
  Exponents monomial_gcd() const;
  Polynomial divide_monomial(const Exponents& e) const;
  // q with p == q * divisor, or nullopt when divisor does not divide p
  std::optional<Polynomial> exact_divide(const Polynomial& divisor) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.universe_ == b.universe_ && a.terms_ == b.terms_;
  }

  std::string str() const;

  // raw accumulation; drops the term when the sum cancels
  void add_term(const Exponents& e, const Rational& c);

 private:
  void check_same(const Polynomial& o) const;

  Universe universe_;
  Terms terms_;
};

// alpha -> -alpha only (the bar involution on restricted entries)
Polynomial flip_alpha(const Polynomial& p);

}  // namespace mirrorcalc
