#pragma once

#include <stdexcept>
#include <string>

namespace mirrorcalc {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A substitution or operation mixed polynomials from different variable
// universes, or introduced a symbol that is not part of the universe.
class UniverseMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the pipeline when an internal consistency check fails.
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(const std::string& check, int degree, const std::string& detail)
      : std::runtime_error(check + " failed at degree " + std::to_string(degree) +
                           (detail.empty() ? "" : ": " + detail)),
        check_(check),
        degree_(degree) {}
  const std::string& check() const { return check_; }
  int degree() const { return degree_; }

 private:
  std::string check_;
  int degree_;
};

}  // namespace mirrorcalc
