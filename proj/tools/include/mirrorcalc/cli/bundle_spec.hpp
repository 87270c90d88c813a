#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mirrorcalc/splitting_type.hpp"

namespace mirrorcalc::cli {

// Spec := Term ("+" Term)* ; Term := "O(" signed-int ")", whitespace ignored.
class BundleParseError : public std::invalid_argument {
 public:
  BundleParseError(size_t position, const std::string& message)
      : std::invalid_argument("bundle parse error at column " + std::to_string(position + 1) + ": " + message),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

struct BundleSpec {
  std::string source;
  SplittingType type;
};

BundleSpec parse_bundle(std::string_view text, int n);
std::string render(const SplittingType& st);

}  // namespace mirrorcalc::cli
