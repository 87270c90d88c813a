#include "mirrorcalc/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "mirrorcalc/cli/bundle_spec.hpp"
#include "mirrorcalc/cli/output.hpp"
#include "mirrorcalc/errors.hpp"
#include "mirrorcalc/mirror_transform.hpp"
#include "mirrorcalc/pipeline.hpp"
#include "mirrorcalc/verification.hpp"

namespace mirrorcalc::cli {

namespace fs = std::filesystem;

const std::vector<Preset>& presets() {
  static const std::vector<Preset> p{
      {"quintic", 4, "O(5)", 12},
      {"multicover", 1, "O(-1)+O(-1)", kDefaultOrder},
      {"local-p2", 2, "O(-3)", kDefaultOrder},
      {"p3-concavex", 3, "O(2)+O(-2)", kDefaultOrder},
      {"p4-concavex", 4, "O(2)+O(2)+O(-1)", kDefaultOrder},
  };
  return p;
}

fs::path cache_file(const fs::path& dir, const SplittingType& st, int order) {
  std::string b;
  for (char c : st.render()) {
    if (c == '+') b += '_';
    else if (c != '(' && c != ')') b += c;
  }
  return dir / ("mirrorcalc-" + std::string(kToolVersion) + "-n" + std::to_string(st.n()) + "-" + b + "-D" +
                std::to_string(order) + ".json");
}

namespace {

struct Options {
  int n = 0;
  std::string bundle;
  std::string preset;
  std::optional<int> order;
  std::string format;
  std::string emit = "kd,nd,mirror-map,checks";
  std::optional<int> decimal;
  std::string cache;
  bool no_cache = false;
  int dmax = kDefaultVerifyDegree;
  bool with_x = false;
  std::string check;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Target {
  SplittingType type;
  int default_order;
};

Target resolve_target(const Options& o) {
  if (!o.preset.empty()) {
    if (!o.bundle.empty() || o.n != 0) throw UsageError("--preset cannot be combined with --n/--bundle");
    for (const auto& p : presets())
      if (p.name == o.preset) return {parse_bundle(p.bundle, p.n).type, p.default_order};
    throw UsageError("unknown preset '" + o.preset + "'");
  }
  if (o.bundle.empty() || o.n == 0) throw UsageError("need --n and --bundle, or --preset");
  if (o.n < 1) throw UsageError("--n must be >= 1");
  return {parse_bundle(o.bundle, o.n).type, kDefaultOrder};
}

std::optional<fs::path> cache_dir(const Options& o) {
  if (o.no_cache) return std::nullopt;
  if (!o.cache.empty()) return fs::path(o.cache);
  if (const char* env = std::getenv("MIRRORCALC_CACHE"); env && *env) return fs::path(env);
  return std::nullopt;
}

std::optional<PipelineResult> cache_read(const fs::path& file, const SplittingType& st, int order,
                                         std::ostream& err) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("tool_version") != kToolVersion) return std::nullopt;
    PipelineResult r = result_from_json(j);
    if (!(r.bundle == st) || r.order != order) return std::nullopt;
    return r;
  } catch (const std::exception& e) {
    err << "warning: ignoring unreadable cache entry " << file << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void cache_write(const fs::path& file, const PipelineResult& r, std::ostream& err) {
  std::error_code ec;
  fs::create_directories(file.parent_path(), ec);
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      err << "warning: cannot write cache entry " << file << "\n";
      return;
    }
    out << result_to_json(r).dump(1) << "\n";
  }
  fs::rename(tmp, file, ec);
  if (ec) err << "warning: cannot write cache entry " << file << ": " << ec.message() << "\n";
}

int do_compute(const Options& o, std::ostream& out, std::ostream& err) {
  Target t = resolve_target(o);
  int order = o.order.value_or(t.default_order);
  if (order < 1) throw UsageError("--order must be >= 1");
  RenderOptions ropt{parse_format(o.format.empty() ? "text" : o.format), parse_emit(o.emit), o.decimal};
  if (o.decimal && *o.decimal < 0) throw UsageError("--decimal must be >= 0");

  std::optional<PipelineResult> result;
  std::optional<fs::path> file;
  if (auto dir = cache_dir(o)) {
    file = cache_file(*dir, t.type, order);
    result = cache_read(*file, t.type, order, err);
  }
  if (!result) {
    result = run_pipeline(t.type, order);
    if (file) cache_write(*file, *result, err);
  }
  out << render_result(*result, ropt);
  return result->all_checks_pass() ? 0 : 1;
}

EulerDataTable hypergeometric_table(const SplittingType& st, int dmax, bool with_x) {
  return to_table(build_hypergeom_data(st, with_x), st.n(), dmax);
}

VerificationReport linking_report(const SplittingType& st, const EulerDataTable& table) {
  const Universe u(st.n());
  const int D = table.d_max();
  EquivariantSeries f = equivariant_series(u, D), g = equivariant_series(u, D);
  PipelineCase pc = classify(st);
  if (pc != PipelineCase::Identity && pc != PipelineCase::Unsupported) {
    try {
      Normalization norm = compute_normalization(build_hg_series(st, D), st);
      // e^{f/alpha} = F0, so f = alpha log F0
      f = lift(u, norm.F0.log(), 1);
      g = lift(u, norm.g);
    } catch (const ConsistencyError&) {
      // no scalar normalization: compare against the identity transform
    }
  }
  S0Sequence b = restrict_to_base(table);
  return check_linked(table, lagrange_map(mirror_transform_s0(b, f, g)));
}

int do_verify(const Options& o, std::ostream& out) {
  Target t = resolve_target(o);
  if (o.dmax < 1) throw UsageError("--dmax must be >= 1");
  EulerDataTable table = hypergeometric_table(t.type, o.dmax, o.with_x);
  VerificationReport rep;
  if (o.check == "gluing") rep = check_gluing(table);
  else if (o.check == "reciprocity") rep = check_reciprocity(table);
  else if (o.check == "linking") rep = linking_report(t.type, table);
  else rep = check_degree_bound(table, zero_like(table));

  Format f = parse_format(o.format.empty() ? "json" : o.format);
  if (f == Format::Json) {
    out << rep.to_json(2) << "\n";
  } else if (f == Format::Csv) {
    out << "d,i,r,status,witness\n";
    for (const auto& r : rep.results)
      out << r.d << "," << r.i << "," << r.r << "," << to_string(r.status) << ",\"" << r.witness << "\"\n";
  } else {
    out << rep.check << " for " << t.type.render() << " on P^" << t.type.n() << ", d <= " << rep.d_max << ": "
        << rep.count(CheckStatus::Pass) << " pass, " << rep.count(CheckStatus::Fail) << " fail, "
        << rep.count(CheckStatus::Inconclusive) << " inconclusive\n";
    for (const auto& r : rep.results)
      if (r.status != CheckStatus::Pass)
        out << "  (d=" << r.d << ", i=" << r.i << ", r=" << r.r << ") " << to_string(r.status) << ": " << r.witness
            << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

std::string superscript(int n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

int do_list(const Options& o, std::ostream& out) {
  Format f = parse_format(o.format.empty() ? "text" : o.format);
  if (f == Format::Json) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& st : critical_list()) a.push_back({{"n", st.n()}, {"bundle", st.render()}});
    out << a.dump(2) << "\n";
  } else {
    for (const auto& st : critical_list()) out << "P" << superscript(st.n()) << ": " << st.render() << "\n";
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Genus-zero invariants of critical bundles over projective space via the mirror principle",
               "mirrorcalc"};
  app.set_version_flag("--version", kToolVersion);
  app.set_config("--config", "", "File of key=value defaults for the long options");
  app.require_subcommand(1, 1);

  app.add_option("--n", o.n, "Dimension of the base P^n");
  app.add_option("--bundle", o.bundle, "Splitting type, e.g. \"O(2)+O(-2)\"");
  app.add_option("--preset", o.preset, "quintic | multicover | local-p2 | p3-concavex | p4-concavex");
  app.add_option("--order", o.order, "Truncation order D (default 10, quintic preset 12)");
  app.add_option("--format", o.format, "text | json | csv");
  app.add_option("--emit", o.emit, "Comma list of kd, nd, mirror-map, f-series, checks");
  app.add_option("--decimal", o.decimal, "Also show values rounded to this many digits");
  app.add_option("--cache", o.cache, "Cache directory (default: $MIRRORCALC_CACHE)");
  app.add_flag("--no-cache", o.no_cache, "Ignore the cache");
  app.add_option("--dmax", o.dmax, "Highest degree for verify (default 4)");
  app.add_flag("--with-x", o.with_x, "verify: use the x-extended Euler data");

  auto* compute = app.add_subcommand("compute", "Run the mirror pipeline and report K_d, n_d")->fallthrough();
  auto* verify = app.add_subcommand("verify", "Check Euler-data identities on the hypergeometric data")->fallthrough();
  verify->add_option("check", o.check, "gluing | reciprocity | linking | degree-bound")
      ->required()
      ->check(CLI::IsMember({"gluing", "reciprocity", "linking", "degree-bound"}));
  auto* list = app.add_subcommand("list-critical", "Print the table of critical bundles")->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return do_compute(o, out, err);
    if (verify->parsed()) return do_verify(o, out);
    if (list->parsed()) return do_list(o, out);
  } catch (const BundleParseError& e) {
    err << e.what() << "\n";
    std::string src = o.preset.empty() ? o.bundle : "";
    if (!src.empty()) err << "  " << src << "\n  " << std::string(e.position(), ' ') << "^\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "consistency check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace mirrorcalc::cli
