#include "hv/config.hpp"

namespace hv {

std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

std::string join_path(const std::string& base, std::size_t index) {
  return base + "[" + std::to_string(index) + "]";
}

Rational parse_rational(const nlohmann::json& value, const std::string& path) {
  if (value.is_string()) {
    try {
      return rational_from_string(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ConfigError(path, std::string("invalid rational: ") + e.what());
    } catch (const DivisionByZero& e) {
      throw ConfigError(path, std::string("invalid rational: ") + e.what());
    }
  }
  if (value.is_number_integer())
    return Rational(value.get<long>());
  throw ConfigError(path, "expected a rational as a \"p/q\" string");
}

Rational require_rational(const nlohmann::json& obj, const std::string& key, const std::string& path) {
  const std::string here = join_path(path, key);
  if (!obj.is_object() || !obj.contains(key))
    throw ConfigError(here, "missing required field");
  return parse_rational(obj.at(key), here);
}

Rational rational_or(const nlohmann::json& obj, const std::string& key, const std::string& path,
                     const Rational& fallback) {
  if (!obj.is_object() || !obj.contains(key))
    return fallback;
  return parse_rational(obj.at(key), join_path(path, key));
}

std::vector<Rational> require_rational_list(const nlohmann::json& obj, const std::string& key,
                                            const std::string& path, std::size_t size) {
  const std::string here = join_path(path, key);
  if (!obj.is_object() || !obj.contains(key))
    throw ConfigError(here, "missing required field");
  const auto& arr = obj.at(key);
  if (!arr.is_array() || arr.size() != size)
    throw ConfigError(here, "expected an array of " + std::to_string(size) + " rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(parse_rational(arr[i], join_path(here, i)));
  return out;
}

long long_or(const nlohmann::json& obj, const std::string& key, const std::string& path, long fallback) {
  if (!obj.is_object() || !obj.contains(key))
    return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_integer())
    throw ConfigError(join_path(path, key), "expected an integer");
  return v.get<long>();
}

const nlohmann::json& require_object(const nlohmann::json& obj, const std::string& key, const std::string& path) {
  const std::string here = join_path(path, key);
  if (!obj.is_object() || !obj.contains(key))
    throw ConfigError(here, "missing required field");
  if (!obj.at(key).is_object())
    throw ConfigError(here, "expected an object");
  return obj.at(key);
}

std::string require_type(const nlohmann::json& spec, const std::string& path) {
  if (!spec.is_object())
    throw ConfigError(path, "expected a module object");
  if (!spec.contains("type") || !spec.at("type").is_string())
    throw ConfigError(join_path(path, "type"), "missing module type");
  return spec.at("type").get<std::string>();
}

OmegaParams parse_omega_params(const nlohmann::json& obj, const std::string& path) {
  OmegaParams p;
  p.lambda = require_rational(obj, "lambda", path);
  if (p.lambda == 0)
    throw ConfigError(join_path(path, "lambda"), "lambda must be nonzero");
  p.alpha = require_rational(obj, "alpha", path);
  p.beta = require_rational(obj, "beta", path);
  return p;
}

ASeriesParams parse_aseries_params(const nlohmann::json& obj, const std::string& path) {
  return ASeriesParams{require_rational(obj, "lambda", path), require_rational(obj, "alpha", path),
                       require_rational(obj, "beta", path)};
}

namespace {

QuotientShape parse_shape(const nlohmann::json& obj, const std::string& path) {
  const std::string here = join_path(path, "shape");
  if (!obj.contains("shape"))
    return QuotientShape(0, 0);
  const auto& s = obj.at("shape");
  if (!s.is_array() || s.size() != 2 || !is_nonnegative_integer(s[0]) || !is_nonnegative_integer(s[1]))
    throw ConfigError(here, "expected [r, d] with nonnegative integers");
  try {
    return QuotientShape(s[0].get<unsigned>(), s[1].get<unsigned>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(here, e.what());
  }
}

RationalMatrix parse_matrix(const nlohmann::json& m, std::size_t dim, const std::string& path) {
  if (!m.is_array() || m.size() != dim)
    throw ConfigError(path, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  RationalMatrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string row_path = join_path(path, i);
    if (!m[i].is_array() || m[i].size() != dim)
      throw ConfigError(row_path, "expected a row of " + std::to_string(dim) + " rationals");
    for (std::size_t j = 0; j < dim; ++j)
      out(i, j) = parse_rational(m[i][j], join_path(row_path, j));
  }
  return out;
}

} // namespace

HbarModule parse_hbar(const nlohmann::json& obj, const std::string& path) {
  if (!obj.is_object())
    throw ConfigError(path, "expected an object describing V");
  const QuotientShape shape = parse_shape(obj, path);
  if (obj.contains("sigma")) {
    const Rational sigma = require_rational(obj, "sigma", path);
    const Rational tau = rational_or(obj, "tau", path, 0);
    try {
      return one_dim_V(sigma, tau, shape);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(join_path(path, "tau"), e.what());
    }
  }
  const long dim = long_or(obj, "dim", path, 0);
  if (dim <= 0)
    throw ConfigError(join_path(path, "dim"), "expected a positive dimension or sigma/tau");
  std::map<Generator, RationalMatrix> mats;
  auto read_block = [&](const char* key, GenKind kind, long offset) {
    if (!obj.contains(key))
      return;
    const std::string here = join_path(path, key);
    const auto& arr = obj.at(key);
    if (!arr.is_array() || arr.size() > shape.r + 1)
      throw ConfigError(here, "expected at most " + std::to_string(shape.r + 1) + " matrices");
    for (std::size_t i = 0; i < arr.size(); ++i)
      mats[Generator{kind, static_cast<long>(i) + offset}] =
          parse_matrix(arr[i], static_cast<std::size_t>(dim), join_path(here, i));
  };
  read_block("L", GenKind::L, 0);
  read_block("I", GenKind::I, shape.d);
  try {
    return hbar_module(shape, static_cast<std::size_t>(dim), std::move(mats));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
}

CentralTuple parse_central(const nlohmann::json& obj, const std::string& key, const std::string& path,
                           std::size_t size) {
  if (!obj.contains(key))
    return {};
  auto v = require_rational_list(obj, key, path, size);
  if (size == 3)
    return CentralTuple{0, v[0], v[1], v[2]};
  return CentralTuple{v[0], v[1], v[2], v[3]};
}

nlohmann::json rational_json(const Rational& x) { return to_string(x); }

ModuleHandle build_module(const nlohmann::json& spec, const std::string& path, std::size_t budget) {
  const std::string type = require_type(spec, path);
  try {
    if (type == "omega")
      return omega(parse_omega_params(spec, path));
    if (type == "intermediate_series")
      return intermediate_series(parse_aseries_params(spec, path));
    if (type == "calM_omega")
      return calM_omega(parse_hbar(require_object(spec, "V", path), join_path(path, "V")),
                        parse_omega_params(require_object(spec, "params", path), join_path(path, "params")));
    if (type == "calM_A")
      return calM_A(parse_hbar(require_object(spec, "V", path), join_path(path, "V")),
                    parse_aseries_params(require_object(spec, "params", path), join_path(path, "params")));
    if (type == "verma")
      return verma(require_rational(spec, "h", path), parse_central(spec, "d", path, 4), budget);
    if (type == "whittaker")
      return whittaker(require_rational(spec, "lambda1", path), require_rational(spec, "lambda2", path),
                       require_rational(spec, "mu1", path), parse_central(spec, "e", path, 4), budget);
    if (type == "ind_lambda0") {
      const Rational lambda = require_rational(spec, "lambda", path);
      if (lambda == 0)
        throw ConfigError(join_path(path, "lambda"), "lambda must be nonzero");
      auto rs = require_rational_list(spec, "RS", path, 4);
      return ind_lambda0(lambda, RSParams{rs[0], rs[1], rs[2], rs[3]}, parse_central(spec, "y", path, 3), budget);
    }
    if (type == "ind_lambda1") {
      const Rational lambda = require_rational(spec, "lambda", path);
      if (lambda == 0)
        throw ConfigError(join_path(path, "lambda"), "lambda must be nonzero");
      auto pq = require_rational_list(spec, "PQ", path, 5);
      return ind_lambda1(lambda, PQParams{pq[0], pq[1], pq[2], pq[3], pq[4]}, parse_central(spec, "z", path, 4),
                         budget);
    }
    if (type == "tensor")
      return tensor(build_module(require_object(spec, "left", path), join_path(path, "left"), budget),
                    build_module(require_object(spec, "right", path), join_path(path, "right"), budget));
    if (type == "gamma_twist") {
      ModuleHandle base = build_module(require_object(spec, "base", path), join_path(path, "base"), budget);
      const std::string gpath = join_path(path, "gamma");
      if (!spec.contains("gamma") || !spec.at("gamma").is_string())
        throw ConfigError(gpath, "expected a Laurent polynomial string");
      LaurentPolynomial gamma;
      try {
        gamma = parse_laurent(spec.at("gamma").get<std::string>());
      } catch (const ParseError& e) {
        throw ConfigError(gpath, e.what());
      }
      try {
        return gamma_twist(std::move(base), std::move(gamma));
      } catch (const NonzeroCentralCharge& e) {
        throw ConfigError(join_path(path, "base"), e.what());
      }
    }
  } catch (const ZeroLambda& e) {
    throw ConfigError(join_path(path, "lambda"), e.what());
  }
  throw ConfigError(join_path(path, "type"),
                    "unknown module type '" + type +
                        "' (expected omega, intermediate_series, calM_omega, calM_A, verma, whittaker, "
                        "ind_lambda0, ind_lambda1, tensor, gamma_twist)");
}

} // namespace hv
