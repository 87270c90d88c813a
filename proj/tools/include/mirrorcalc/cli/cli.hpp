#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mirrorcalc/splitting_type.hpp"

namespace mirrorcalc::cli {

struct Preset {
  std::string name;
  int n;
  std::string bundle;
  int default_order;
};
const std::vector<Preset>& presets();

inline constexpr int kDefaultOrder = 10;
inline constexpr int kDefaultVerifyDegree = 4;

// File name of a cached result inside a cache directory.
std::filesystem::path cache_file(const std::filesystem::path& dir, const SplittingType& st, int order);

// Runs one invocation; args exclude the program name. Exit codes: 0 ok,
// 1 check failure, 2 usage or parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mirrorcalc::cli
