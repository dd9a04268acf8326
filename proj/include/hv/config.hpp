#pragma once

#include "hv/induced.hpp"
#include "hv/zoo.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace hv {

/// Schema violation in a JSON configuration; `path` locates the offending
/// value, e.g. "checks[0].params.module.lambda".
class ConfigError : public std::invalid_argument {
public:
  ConfigError(std::string path, const std::string& message)
      : std::invalid_argument(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

std::string join_path(const std::string& base, const std::string& key);
std::string join_path(const std::string& base, std::size_t index);

/// Rationals are "p/q" strings; plain JSON integers are also accepted.
Rational parse_rational(const nlohmann::json& value, const std::string& path);
Rational require_rational(const nlohmann::json& obj, const std::string& key, const std::string& path);
Rational rational_or(const nlohmann::json& obj, const std::string& key, const std::string& path,
                     const Rational& fallback);
std::vector<Rational> require_rational_list(const nlohmann::json& obj, const std::string& key,
                                            const std::string& path, std::size_t size);
/// True for JSON integers >= 0, whether stored signed or unsigned.
inline bool is_nonnegative_integer(const nlohmann::json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
}

long long_or(const nlohmann::json& obj, const std::string& key, const std::string& path, long fallback);
const nlohmann::json& require_object(const nlohmann::json& obj, const std::string& key, const std::string& path);
std::string require_type(const nlohmann::json& spec, const std::string& path);

OmegaParams parse_omega_params(const nlohmann::json& obj, const std::string& path);
ASeriesParams parse_aseries_params(const nlohmann::json& obj, const std::string& path);

/// {"shape":[r,d], "sigma", "tau"} for V_{sigma,tau}, or
/// {"shape":[r,d], "dim":n, "L":[...], "I":[...]} with row-major matrices.
HbarModule parse_hbar(const nlohmann::json& obj, const std::string& path);

CentralTuple parse_central(const nlohmann::json& obj, const std::string& key, const std::string& path,
                           std::size_t size);

/// Builds any module described by a {"type": ...} record.
ModuleHandle build_module(const nlohmann::json& spec, const std::string& path,
                          std::size_t rewrite_budget = default_rewrite_budget());

nlohmann::json rational_json(const Rational& x);

} // namespace hv
