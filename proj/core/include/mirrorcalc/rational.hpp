#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mirrorcalc {

// Exact rational number in lowest terms, denominator positive.
// Thin value wrapper over mpq_class so that no gmpxx expression template
// escapes into user code through `auto`.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : value_(mpz_class(static_cast<long>(v))) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpz_class& v) : value_(v) {}
  explicit Rational(mpq_class v);

  // Accepts "a", "-a" and "a/b".
  static Rational parse(std::string_view text);

  const mpq_class& mpq() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // "3", "-45/8"
  std::string str() const { return value_.get_str(); }
  // always "num/den", e.g. "3/1"
  std::string fraction_str() const;
  // rounded to `digits` decimal places, half away from zero
  std::string decimal_str(int digits) const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws DivisionByZero

  Rational operator-() const;
  Rational inverse() const;
  Rational pow(int e) const;
  Rational abs() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace mirrorcalc
