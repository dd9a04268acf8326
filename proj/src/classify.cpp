#include "hv/classify.hpp"

namespace hv {

bool thm21_k0_condition(const Rational& c0, const Rational& c2) {
  if (c2 == 0)
    return c0 != 0;
  // c0 + (n-1) c2 = 0 exactly when n = 1 - c0/c2, which is excluded only if it is a nonzero integer.
  const Rational n = 1 - c0 / c2;
  return !is_integer(n) || n == 0;
}

bool omega_irreducible(const OmegaParams& p) { return p.alpha != 0 || p.beta != 0; }

bool a_series_reducible(const ASeriesParams& p) {
  return is_integer(p.lambda) && (p.alpha == 0 || p.alpha == 1) && p.beta == 0;
}

const std::vector<std::string>& prediction_keys() {
  static const std::vector<std::string> keys = {
      "omega_irreducible", "a_series_reducible",      "thm21_k0_condition",      "calM_reducible", "tensor_iso",
      "calM_iso",          "calMA_iso",               "ind_lambda0_irreducible", "ind_lambda1_irreducible"};
  return keys;
}

namespace {

struct OneDim {
  Rational sigma, tau;
  unsigned d = 0;
};

std::optional<OneDim> one_dim_data(const HbarModule& v) {
  if (v.dim() != 1)
    return std::nullopt;
  OneDim out;
  out.d = v.shape().d;
  out.sigma = v.matrix(Generator::L(0))(0, 0);
  out.tau = out.d == 0 ? v.matrix(Generator::I(0))(0, 0) : Rational(0);
  return out;
}

struct Verdicts {
  nlohmann::json record;
  nlohmann::json annotations = nlohmann::json::array();

  Verdicts() {
    for (const auto& k : prediction_keys())
      record[k] = nullptr;
  }
  void note(const std::string& text) { annotations.push_back(text); }
};

void classify_single(const nlohmann::json& spec, const std::string& path, const std::string& type, Verdicts& out) {
  auto& r = out.record;
  if (type == "omega") {
    r["omega_irreducible"] = omega_irreducible(parse_omega_params(spec, path));
  } else if (type == "intermediate_series") {
    r["a_series_reducible"] = a_series_reducible(parse_aseries_params(spec, path));
  } else if (type == "verma") {
    CentralTuple d = parse_central(spec, "d", path, 4);
    require_rational(spec, "h", path);
    r["thm21_k0_condition"] = thm21_k0_condition(d.c0, d.c2);
  } else if (type == "whittaker") {
    CentralTuple e = parse_central(spec, "e", path, 4);
    r["thm21_k0_condition"] = thm21_k0_condition(e.c0, e.c2);
  } else if (type == "calM_omega") {
    HbarModule v = parse_hbar(require_object(spec, "V", path), join_path(path, "V"));
    OmegaParams p = parse_omega_params(require_object(spec, "params", path), join_path(path, "params"));
    if (auto od = one_dim_data(v)) {
      r["calM_reducible"] = od->sigma == p.alpha && (od->d == 1 || p.beta * od->tau == 0);
    } else {
      out.note("calM_reducible: V is not one-dimensional; the criterion assumes V irreducible and is not decided");
    }
  } else if (type == "ind_lambda0") {
    const Rational lambda = require_rational(spec, "lambda", path);
    if (lambda == 0)
      throw ConfigError(join_path(path, "lambda"), "lambda must be nonzero");
    auto rs = require_rational_list(spec, "RS", path, 4);
    CentralTuple y = parse_central(spec, "y", path, 3);
    const Rational c0 = rs[2] - rs[3] / lambda;
    const bool k0 = thm21_k0_condition(c0, y.c2);
    r["thm21_k0_condition"] = k0;
    if (y.c3 != 0)
      out.note("ind_lambda0_irreducible: the criterion requires y_3 = 0");
    else
      r["ind_lambda0_irreducible"] = k0 && (rs[1] != lambda * rs[0] || rs[3] != 0);
    out.note("ind_lambda0_irreducible: sufficient condition only; false means not certified");
  } else if (type == "ind_lambda1") {
    const Rational lambda = require_rational(spec, "lambda", path);
    if (lambda == 0)
      throw ConfigError(join_path(path, "lambda"), "lambda must be nonzero");
    auto pq = require_rational_list(spec, "PQ", path, 5);
    CentralTuple z = parse_central(spec, "z", path, 4);
    const Rational e0 = z.c0 - pq[4] / (lambda * lambda);
    const bool k0 = thm21_k0_condition(e0, z.c2);
    r["thm21_k0_condition"] = k0;
    if (z.c3 != 0)
      out.note("ind_lambda1_irreducible: the criterion requires z_3 = 0");
    else
      r["ind_lambda1_irreducible"] = k0 && lambda * pq[3] != pq[4] && (pq[2] != lambda * pq[1] || pq[4] != 0);
    out.note("ind_lambda1_irreducible: the I_0 condition uses e_0 = z_0 - q_2/lambda^2, the scalar by which I_0 "
             "acts on the Whittaker factor; sufficient condition only");
  } else if (type == "tensor") {
    const auto& left = require_object(spec, "left", path);
    const auto& right = require_object(spec, "right", path);
    Verdicts inner_l, inner_r;
    classify_single(left, join_path(path, "left"), require_type(left, join_path(path, "left")), inner_l);
    classify_single(right, join_path(path, "right"), require_type(right, join_path(path, "right")), inner_r);
    r["omega_irreducible"] = inner_l.record["omega_irreducible"];
    r["thm21_k0_condition"] = inner_r.record["thm21_k0_condition"];
  } else {
    build_module(spec, path);
  }
}

void classify_pair(const nlohmann::json& a, const nlohmann::json& b, const std::string& path, Verdicts& out) {
  const std::string pa = join_path(path, "first"), pb = join_path(path, "second");
  const std::string ta = require_type(a, pa), tb = require_type(b, pb);
  auto& r = out.record;
  if (ta != tb) {
    build_module(a, pa);
    build_module(b, pb);
    out.note("no isomorphism criterion applies to modules of different types");
    return;
  }
  if (ta == "tensor") {
    ModuleHandle ma = build_module(a, pa), mb = build_module(b, pb);
    const auto& ta_ = dynamic_cast<const TensorModule&>(*ma);
    const auto& tb_ = dynamic_cast<const TensorModule&>(*mb);
    if (!dynamic_cast<const OmegaModule*>(ta_.left().get()) || !dynamic_cast<const OmegaModule*>(tb_.left().get())) {
      out.note("tensor_iso: the criterion needs an Omega module as the left factor");
      return;
    }
    r["tensor_iso"] = ta_.left()->name() == tb_.left()->name() && ta_.right()->name() == tb_.right()->name();
    out.note("tensor_iso: assumes both tensor products are irreducible and compares the induced factors by "
             "their defining parameters");
    return;
  }
  if (ta == "calM_omega" || ta == "calM_A") {
    HbarModule va = parse_hbar(require_object(a, "V", pa), join_path(pa, "V"));
    HbarModule vb = parse_hbar(require_object(b, "V", pb), join_path(pb, "V"));
    auto oa = one_dim_data(va), ob = one_dim_data(vb);
    const char* key = ta == "calM_omega" ? "calM_iso" : "calMA_iso";
    Rational la, lb, aa, ab, ba, bb;
    if (ta == "calM_omega") {
      OmegaParams p = parse_omega_params(require_object(a, "params", pa), join_path(pa, "params"));
      OmegaParams q = parse_omega_params(require_object(b, "params", pb), join_path(pb, "params"));
      la = p.lambda, aa = p.alpha, ba = p.beta, lb = q.lambda, ab = q.alpha, bb = q.beta;
    } else {
      ASeriesParams p = parse_aseries_params(require_object(a, "params", pa), join_path(pa, "params"));
      ASeriesParams q = parse_aseries_params(require_object(b, "params", pb), join_path(pb, "params"));
      la = p.lambda, aa = p.alpha, ba = p.beta, lb = q.lambda, ab = q.alpha, bb = q.beta;
    }
    if (!oa || !ob) {
      out.note(std::string(key) + ": only one-dimensional V are decided");
      return;
    }
    if (ba == 0 || bb == 0) {
      out.note(std::string(key) + ": the criterion requires beta != 0");
      return;
    }
    const bool same_d = oa->d == ob->d;
    const bool scaled = oa->d == 1 || ba * oa->tau == bb * ob->tau;
    if (ta == "calM_omega") {
      r[key] = same_d && la == lb && oa->sigma - aa == ob->sigma - ab && scaled;
    } else {
      r[key] = same_d && is_integer(la - lb) && oa->sigma + aa == ob->sigma + ab && scaled;
      out.note("calMA_iso: the alpha shift enters as L_0 + alpha, matching the action on V (x) A");
    }
    out.note(std::string(key) + ": assumes both modules are irreducible");
    return;
  }
  build_module(a, pa);
  build_module(b, pb);
  out.note("no isomorphism criterion is encoded for type " + ta);
}

} // namespace

nlohmann::json classify(const nlohmann::json& spec, const std::string& path) {
  const std::string type = require_type(spec, path);
  Verdicts v;
  if (type == "pair") {
    classify_pair(require_object(spec, "first", path), require_object(spec, "second", path), path, v);
  } else {
    try {
      classify_single(spec, path, type, v);
    } catch (const ZeroLambda& e) {
      throw ConfigError(join_path(path, "lambda"), e.what());
    }
  }
  nlohmann::json out = v.record;
  out["type"] = type;
  out["annotations"] = v.annotations;
  return out;
}

} // namespace hv
