// Command-line harness: run verification suites, classify module records,
// check the Lie axioms, and evaluate single catalog checks.

#include "hv/classify.hpp"
#include "hv/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

hv::ModeRange parse_modes(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("--modes", "expected lo..hi, e.g. -6..6");
  try {
    long lo = std::stol(text.substr(0, dots));
    long hi = std::stol(text.substr(dots + 2));
    if (lo > hi)
      throw CLI::ValidationError("--modes", "lo must not exceed hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--modes", "expected lo..hi, e.g. -6..6");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw hv::ConfigError("$", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw hv::ConfigError("$", std::string("invalid JSON: ") + e.what());
  }
}

/// "a.b=v" sets params["a"]["b"]. Values that parse as JSON are used as
/// such, except floating-point literals; anything else ("1/3", "t^2+1")
/// is passed through as a string.
void set_param(json& params, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw hv::ConfigError("--param", "expected key=value, got '" + assignment + "'");
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  json value = raw;
  try {
    json parsed = json::parse(raw);
    if (!parsed.is_number_float())
      value = std::move(parsed);
  } catch (const json::parse_error&) {
  }
  json* node = &params;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (dot == std::string::npos) {
      (*node)[part] = std::move(value);
      return;
    }
    json& child = (*node)[part];
    if (!child.is_object())
      child = json::object();
    node = &child;
    start = dot + 1;
  }
}

int emit(const hv::ReportDocument& doc, const std::string& format, bool timings) {
  std::cout << hv::emit_report(doc, format == "text" ? hv::ReportFormat::Text : hv::ReportFormat::Json, timings);
  return hv::exit_code(doc);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification harness for the twisted Heisenberg-Virasoro algebra"};
  app.require_subcommand(1);

  std::string modes_text = "-6..6";
  auto* axioms = app.add_subcommand("axioms", "Check antisymmetry and Jacobi on basis triples and quotient shapes");
  axioms->add_option("--modes", modes_text, "Mode window lo..hi")->capture_default_str();

  std::string spec_path, format = "json";
  bool timings = false;
  auto* run = app.add_subcommand("run", "Run a verification suite");
  run->add_option("--spec", spec_path, "Suite JSON file")->required();
  run->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  run->add_flag("--timings", timings, "Include wall-clock seconds per check in JSON output");

  std::string classify_path;
  auto* cls = app.add_subcommand("classify", "Evaluate the classification predicates for a module record");
  cls->add_option("--spec", classify_path, "Module JSON file")->required();

  std::string identity_name;
  std::vector<std::string> identity_params;
  std::string identity_format = "json";
  auto* ident = app.add_subcommand("identity", "Run one catalog check");
  ident->add_option("name", identity_name, "Check name")->required();
  ident->add_option("--param", identity_params, "key=value (dotted keys nest)");
  ident->add_option("--format", identity_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (axioms->parsed()) {
      const hv::ModeRange modes = parse_modes(modes_text);
      hv::SuiteSpec spec;
      spec.checks.push_back({"axioms", {{"mode_range", {modes.lo, modes.hi}}}});
      return emit(hv::run_suite(spec), "json", false);
    }
    if (run->parsed())
      return emit(hv::run_suite(hv::load_spec_file(spec_path)), format, timings);
    if (cls->parsed()) {
      json doc = read_json_file(classify_path);
      const json& module = doc.contains("module") ? doc.at("module") : doc;
      std::cout << hv::classify(module, doc.contains("module") ? "module" : "$").dump(2) << "\n";
      return 0;
    }
    if (ident->parsed()) {
      json params = json::object();
      for (const auto& p : identity_params)
        set_param(params, p);
      json suite = {{"checks", {{{"name", identity_name}, {"params", params}}}}};
      return emit(hv::run_suite(hv::load_spec(suite)), identity_format, false);
    }
  } catch (const hv::ConfigError& e) {
    std::cerr << "hv: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hv: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
