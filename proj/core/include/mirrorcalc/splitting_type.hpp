#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mirrorcalc/rational.hpp"

namespace mirrorcalc {

// V = sum O(l_a) + sum O(-k_b) over P^n, all l_a, k_b > 0. Both lists are
// kept sorted ascending so that equal bundles compare equal.
class SplittingType {
 public:
  SplittingType(int n, std::vector<int> convex, std::vector<int> concave);

  int n() const { return n_; }
  const std::vector<int>& convex() const { return convex_; }
  const std::vector<int>& concave() const { return concave_; }

  int P() const { return static_cast<int>(convex_.size()); }
  int N() const { return static_cast<int>(concave_.size()); }
  int total() const;  // sum l + sum k
  // i + k for every cell of the q^d block of the HG series
  int delta(int d) const { return d * total() + P() - N() - (n_ + 1) * d; }
  bool is_critical() const { return total() == n_ + 1 && P() - N() == n_ - 3; }
  bool is_trivial() const { return convex_.empty() && concave_.empty(); }

  // "O(2)+O(-2)", convex terms first
  std::string render() const;

  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

 private:
  int n_;
  std::vector<int> convex_;
  std::vector<int> concave_;
};

// Omega = scalar * H^h_exponent; h may be negative.
struct OmegaClass {
  Rational scalar;
  int h_exponent = 0;
  friend bool operator==(const OmegaClass&, const OmegaClass&) = default;
};

// prod l_a / prod(-k_b) * H^(P-N)
OmegaClass omega_class(const SplittingType& st);

}  // namespace mirrorcalc
