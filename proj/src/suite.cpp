#include "hv/suite.hpp"

#include "hv/classify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hv {

namespace {

using nlohmann::json;

/// Parameters that must parse as rationals wherever they appear in a check.
const char* const kRationalKeys[] = {"lambda", "alpha", "beta", "sigma", "tau", "h", "h_offset", "lambda1_offset"};

void prevalidate(const CheckSpec& check, const std::string& path) {
  for (const char* key : kRationalKeys)
    if (check.params.contains(key))
      parse_rational(check.params.at(key), join_path(path, key));
  if (check.params.contains("module")) {
    const json& m = require_object(check.params, "module", path);
    if (check.name == "classify")
      classify(m, join_path(path, "module"));
    else
      build_module(m, join_path(path, "module"));
  }
  if (check.params.contains("right"))
    build_module(require_object(check.params, "right", path), join_path(path, "right"));
  if (check.params.contains("V"))
    parse_hbar(check.params.at("V"), join_path(path, "V"));
}

GlobalConfig parse_global(const json& g, const std::string& path) {
  GlobalConfig out;
  std::optional<std::size_t> budget;
  if (!g.is_null()) {
    if (!g.is_object())
      throw ConfigError(path, "expected an object");
    if (g.contains("mode_range")) {
      const auto& r = g.at("mode_range");
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer() ||
          r[0].get<long>() > r[1].get<long>())
        throw ConfigError(join_path(path, "mode_range"), "expected [lo, hi] integers with lo <= hi");
      out.modes = {r[0].get<long>(), r[1].get<long>()};
    }
    out.degree_cap = long_or(g, "degree_cap", path, out.degree_cap);
    if (out.degree_cap < 0)
      throw ConfigError(join_path(path, "degree_cap"), "must be nonnegative");
    out.samples = long_or(g, "sample_count", path, long_or(g, "samples", path, out.samples));
    if (out.samples < 0)
      throw ConfigError(join_path(path, "sample_count"), "must be nonnegative");
    if (g.contains("seed")) {
      if (!is_nonnegative_integer(g.at("seed")))
        throw ConfigError(join_path(path, "seed"), "expected a nonnegative integer");
      out.seed = g.at("seed").get<std::uint64_t>();
    }
    if (g.contains("rewrite_budget")) {
      if (!is_nonnegative_integer(g.at("rewrite_budget")) || g.at("rewrite_budget").get<std::uint64_t>() == 0)
        throw ConfigError(join_path(path, "rewrite_budget"), "expected a positive integer");
      budget = g.at("rewrite_budget").get<std::size_t>();
    }
  }
  const char* env = std::getenv("HV_REWRITE_BUDGET");
  if (env && *env)
    out.rewrite_budget = default_rewrite_budget();
  else if (budget)
    out.rewrite_budget = *budget;
  return out;
}

} // namespace

SuiteSpec load_spec(const json& doc) {
  if (!doc.is_object())
    throw ConfigError("$", "suite must be a JSON object");
  SuiteSpec spec;
  spec.global = parse_global(doc.contains("global") ? doc.at("global") : json(), "global");
  if (!doc.contains("checks"))
    throw ConfigError("checks", "missing required field");
  const auto& checks = doc.at("checks");
  if (!checks.is_array())
    throw ConfigError("checks", "expected an array");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string path = join_path("checks", i);
    const auto& c = checks[i];
    if (!c.is_object())
      throw ConfigError(path, "expected an object");
    if (!c.contains("name") || !c.at("name").is_string())
      throw ConfigError(join_path(path, "name"), "missing check name");
    CheckSpec cs;
    cs.name = c.at("name").get<std::string>();
    const auto& cat = check_catalog();
    if (std::find(cat.begin(), cat.end(), cs.name) == cat.end()) {
      std::string list;
      for (const auto& n : cat)
        list += (list.empty() ? "" : ", ") + n;
      throw ConfigError(join_path(path, "name"), "unknown check '" + cs.name + "'; catalog: " + list);
    }
    if (c.contains("params")) {
      if (!c.at("params").is_object())
        throw ConfigError(join_path(path, "params"), "expected an object");
      cs.params = c.at("params");
    }
    prevalidate(cs, join_path(path, "params"));
    spec.checks.push_back(std::move(cs));
  }
  return spec;
}

SuiteSpec load_spec_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("$", std::string("invalid JSON: ") + e.what());
  }
  return load_spec(doc);
}

SuiteSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("$", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_spec_text(buf.str());
}

ReportDocument run_suite(const SuiteSpec& spec) {
  ReportDocument doc;
  doc.spec = spec;
  for (std::size_t i = 0; i < spec.checks.size(); ++i) {
    const auto& check = spec.checks[i];
    CheckResult res;
    res.name = check.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      res.report = run_check(check, spec.global, i, join_path(join_path("checks", i), "params"));
    } catch (const std::exception& e) {
      res.error = e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (res.error)
      ++doc.errors;
    else if (res.report->status == Status::Pass)
      ++doc.pass;
    else if (res.report->status == Status::Fail)
      ++doc.fail;
    else
      ++doc.inconclusive;
    doc.results.push_back(std::move(res));
  }
  return doc;
}

json suite_echo(const SuiteSpec& spec) {
  json checks = json::array();
  for (const auto& c : spec.checks)
    checks.push_back({{"name", c.name}, {"params", c.params}});
  return {{"checks", checks},
          {"global",
           {{"mode_range", {spec.global.modes.lo, spec.global.modes.hi}},
            {"degree_cap", spec.global.degree_cap},
            {"sample_count", spec.global.samples},
            {"seed", spec.global.seed},
            {"rewrite_budget", spec.global.rewrite_budget}}}};
}

std::string emit_report(const ReportDocument& doc, ReportFormat format, bool with_timings) {
  if (format == ReportFormat::Json) {
    json checks = json::array();
    for (const auto& r : doc.results) {
      json entry;
      if (r.error) {
        entry = {{"name", r.name}, {"status", "error"}, {"error", *r.error}};
      } else {
        entry = r.report->to_json();
      }
      if (with_timings)
        entry["seconds"] = r.seconds;
      checks.push_back(std::move(entry));
    }
    json out = {{"tool", "hv"},
                {"version", kToolVersion},
                {"suite", suite_echo(doc.spec)},
                {"checks", checks},
                {"summary", {{"pass", doc.pass}, {"fail", doc.fail}, {"inconclusive", doc.inconclusive}}},
                {"errors", doc.errors}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& r : doc.results)
    width = std::max(width, r.name.size());
  os << std::left << std::setw(static_cast<int>(width) + 2) << "check" << std::setw(14) << "status"
     << "seconds\n";
  for (const auto& r : doc.results) {
    const std::string status = r.error ? "error" : to_string(r.report->status);
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    os << std::setw(static_cast<int>(width) + 2) << r.name << std::setw(14) << status << secs << "\n";
    if (r.error)
      os << "    " << *r.error << "\n";
    else if (r.report->status == Status::Fail)
      os << "    witness: " << r.report->witness.dump() << "\n";
  }
  os << "summary: pass=" << doc.pass << " fail=" << doc.fail << " inconclusive=" << doc.inconclusive
     << " errors=" << doc.errors << "\n";
  return os.str();
}

int exit_code(const ReportDocument& doc) { return doc.fail == 0 && doc.errors == 0 ? 0 : 1; }

} // namespace hv
