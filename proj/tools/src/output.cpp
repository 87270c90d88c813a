#include "mirrorcalc/cli/output.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace mirrorcalc::cli {

using nlohmann::ordered_json;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + s + "' (text, json, csv)");
}

EmitSet parse_emit(const std::string& s) {
  EmitSet e{false, false, false, false, false};
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "kd") e.kd = true;
    else if (item == "nd") e.nd = true;
    else if (item == "mirror-map") e.mirror_map = true;
    else if (item == "f-series") e.f_series = true;
    else if (item == "checks") e.checks = true;
    else throw std::invalid_argument("unknown --emit item '" + item + "' (kd, nd, mirror-map, f-series, checks)");
  }
  return e;
}

namespace {

ordered_json rationals(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& r : v) a.push_back(r.fraction_str());
  return a;
}

std::vector<Rational> tail(const ScalarQSeries& s) {
  return {s.coefficients().begin() + 1, s.coefficients().end()};
}

ordered_json checks_json(const CheckLog& log) {
  ordered_json c = ordered_json::object();
  for (const auto& [name, o] : log) c[name] = {{"passed", o.passed}, {"detail", o.detail}};
  return c;
}

ordered_json tpoly_json(const TPolySeries& s) {
  ordered_json a = ordered_json::array();
  for (int j = 0; j <= std::max(0, s.t_degree()); ++j) a.push_back(rationals(s.coefficient(j).coefficients()));
  return a;
}

TPolySeries tpoly_from(const nlohmann::json& a, int order) {
  TPolySeries s(order);
  for (size_t j = 0; j < a.size(); ++j)
    for (size_t d = 0; d < a[j].size(); ++d) s.add(static_cast<int>(j), static_cast<int>(d), Rational::parse(a[j][d].get<std::string>()));
  return s;
}

ScalarQSeries series_from(const nlohmann::json& a, int order, bool with_constant) {
  ScalarQSeries s = scalar_series(order);
  size_t offset = with_constant ? 0 : 1;
  for (size_t k = 0; k < a.size(); ++k) s[static_cast<int>(k + offset)] = Rational::parse(a[k].get<std::string>());
  return s;
}

std::string show(const Rational& r, const std::optional<int>& decimal) {
  return decimal ? r.decimal_str(*decimal) : r.str();
}

std::string series_text(const std::vector<Rational>& c, int first) {
  std::ostringstream os;
  bool any = false;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    int d = static_cast<int>(k) + first;
    os << (any ? (c[k].sign() < 0 ? " - " : " + ") : (c[k].sign() < 0 ? "-" : ""));
    os << c[k].abs().str();
    if (d == 1) os << " q";
    else if (d > 1) os << " q^" << d;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

}  // namespace

ordered_json result_to_json(const PipelineResult& r) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["bundle"] = r.bundle.render();
  j["n"] = r.bundle.n();
  j["order"] = r.order;
  j["case"] = to_string(r.pcase);
  j["K"] = rationals(r.K);
  j["n_d"] = ordered_json::array();
  for (const auto& v : r.n_d) j["n_d"].push_back({{"d", v.d}, {"value", v.value.fraction_str()}, {"integral", v.integral}});
  j["mirror_g"] = r.normalization ? rationals(tail(r.normalization->g)) : ordered_json::array();
  j["F0"] = r.normalization ? rationals(r.normalization->F0.coefficients()) : ordered_json::array();
  j["f_series"] = ordered_json::array();
  for (const auto& f : r.f_series) j["f_series"].push_back(tpoly_json(f));
  j["checks"] = checks_json(r.checks);
  j["notes"] = r.notes;
  return j;
}

PipelineResult result_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  int order = j.at("order").get<int>();
  std::vector<int> convex, concave;
  {
    // bundle strings are canonical renderings: O(a)+O(b)...
    std::string b = j.at("bundle").get<std::string>();
    size_t pos = 0;
    while ((pos = b.find("O(", pos)) != std::string::npos) {
      int v = std::stoi(b.substr(pos + 2));
      (v > 0 ? convex : concave).push_back(std::abs(v));
      pos += 2;
    }
  }
  PipelineResult r{SplittingType(n, convex, concave), order, PipelineCase::Unsupported, {}, {}, std::nullopt, {}, {}, {}};
  std::string c = j.at("case").get<std::string>();
  for (auto pc : {PipelineCase::Identity, PipelineCase::Case1, PipelineCase::Case2, PipelineCase::Case3})
    if (to_string(pc) == c) r.pcase = pc;
  for (const auto& k : j.at("K")) r.K.push_back(Rational::parse(k.get<std::string>()));
  for (const auto& v : j.at("n_d")) {
    r.n_d.push_back({v.at("d").get<int>(), Rational::parse(v.at("value").get<std::string>()), v.at("integral").get<bool>()});
  }
  if (!j.at("F0").empty()) {
    r.normalization = Normalization{series_from(j.at("F0"), order, true), series_from(j.at("mirror_g"), order, false)};
  }
  for (const auto& f : j.at("f_series")) r.f_series.push_back(tpoly_from(f, order));
  for (const auto& [name, o] : j.at("checks").items()) {
    r.checks[name] = {o.at("passed").get<bool>(), o.at("detail").get<std::string>()};
  }
  for (const auto& note : j.at("notes")) r.notes.push_back(note.get<std::string>());
  return r;
}

std::string render_result(const PipelineResult& r, const RenderOptions& opt) {
  const auto& e = opt.emit;
  std::ostringstream os;
  switch (opt.format) {
    case Format::Json: {
      ordered_json j;
      j["bundle"] = r.bundle.render();
      j["n"] = r.bundle.n();
      j["order"] = r.order;
      j["case"] = to_string(r.pcase);
      j["K"] = e.kd ? rationals(r.K) : ordered_json::array();
      j["n_d"] = ordered_json::array();
      if (e.nd) {
        for (const auto& v : r.n_d) {
          ordered_json item{{"d", v.d}, {"value", v.value.fraction_str()}, {"integral", v.integral}};
          if (opt.decimal) item["decimal"] = v.value.decimal_str(*opt.decimal);
          j["n_d"].push_back(item);
        }
      }
      j["mirror_g"] = (e.mirror_map && r.normalization) ? rationals(tail(r.normalization->g)) : ordered_json::array();
      j["checks"] = e.checks ? checks_json(r.checks) : ordered_json::object();
      if (e.kd && opt.decimal) {
        ordered_json dec = ordered_json::array();
        for (const auto& k : r.K) dec.push_back(k.decimal_str(*opt.decimal));
        j["K_decimal"] = dec;
      }
      if (e.mirror_map && r.normalization) j["F0"] = rationals(r.normalization->F0.coefficients());
      if (e.f_series) {
        j["f_series"] = ordered_json::array();
        for (const auto& f : r.f_series) j["f_series"].push_back(tpoly_json(f));
      }
      if (!r.notes.empty()) j["notes"] = r.notes;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      os << "d";
      if (e.kd) os << ",K_d";
      if (e.nd) os << ",n_d,integral";
      if (e.mirror_map) os << ",g_d";
      os << "\n";
      for (int d = 1; d <= r.order; ++d) {
        if (d > static_cast<int>(r.K.size()) && !e.mirror_map) break;
        os << d;
        if (e.kd) os << "," << (d <= static_cast<int>(r.K.size()) ? show(r.K[d - 1], opt.decimal) : "");
        if (e.nd) {
          if (d <= static_cast<int>(r.n_d.size())) {
            os << "," << show(r.n_d[d - 1].value, opt.decimal) << "," << (r.n_d[d - 1].integral ? "true" : "false");
          } else {
            os << ",,";
          }
        }
        if (e.mirror_map) os << "," << (r.normalization ? r.normalization->g[d].str() : "");
        os << "\n";
      }
      break;
    }
    case Format::Text: {
      os << r.bundle.render() << " on P^" << r.bundle.n() << "  case " << to_string(r.pcase) << "  order "
         << r.order << "\n";
      if ((e.kd || e.nd) && !r.K.empty()) {
        os << std::setw(4) << "d";
        if (e.kd) os << "  " << std::setw(24) << "K_d";
        if (e.nd) os << "  " << std::setw(24) << "n_d";
        os << "\n";
        for (size_t d = 1; d <= r.K.size(); ++d) {
          os << std::setw(4) << d;
          if (e.kd) os << "  " << std::setw(24) << show(r.K[d - 1], opt.decimal);
          if (e.nd) {
            os << "  " << std::setw(24) << show(r.n_d[d - 1].value, opt.decimal);
            if (!r.n_d[d - 1].integral) os << "  (not integral)";
          }
          os << "\n";
        }
      }
      if (e.mirror_map && r.normalization) {
        os << "mirror map T = t + g, g = " << series_text(tail(r.normalization->g), 1) << "\n";
        os << "F0 = " << series_text(r.normalization->F0.coefficients(), 0) << "\n";
      }
      if (e.f_series) {
        for (size_t i = 0; i < r.f_series.size(); ++i) os << "f_" << i << " = " << r.f_series[i].str() << "\n";
      }
      if (e.checks) {
        for (const auto& [name, c] : r.checks)
          os << "check " << name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.detail << ")\n";
      }
      for (const auto& note : r.notes) os << "note: " << note << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace mirrorcalc::cli
