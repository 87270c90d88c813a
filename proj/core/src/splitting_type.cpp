#include "mirrorcalc/splitting_type.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mirrorcalc {

SplittingType::SplittingType(int n, std::vector<int> convex, std::vector<int> concave)
    : n_(n), convex_(std::move(convex)), concave_(std::move(concave)) {
  if (n < 1) throw std::invalid_argument("splitting type needs n >= 1");
  for (int l : convex_)
    if (l <= 0) throw std::invalid_argument("convex degrees must be positive");
  for (int k : concave_)
    if (k <= 0) throw std::invalid_argument("concave degrees must be positive");
  std::sort(convex_.begin(), convex_.end());
  std::sort(concave_.begin(), concave_.end());
}

int SplittingType::total() const {
  return std::accumulate(convex_.begin(), convex_.end(), 0) +
         std::accumulate(concave_.begin(), concave_.end(), 0);
}

std::string SplittingType::render() const {
  std::string s;
  auto add = [&](int v) {
    if (!s.empty()) s += "+";
    s += "O(" + std::to_string(v) + ")";
  };
  for (int l : convex_) add(l);
  for (int k : concave_) add(-k);
  return s;
}

OmegaClass omega_class(const SplittingType& st) {
  Rational c(1);
  for (int l : st.convex()) c *= Rational(l);
  for (int k : st.concave()) c /= Rational(-k);
  return {c, st.P() - st.N()};
}

}  // namespace mirrorcalc
