#include "hv/classify.hpp"
#include "hv/suite.hpp"

#include <algorithm>
#include <functional>

namespace hv {

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(gen_() % span);
}

Rational Sampler::rational() {
  const long num = integer(-9, 9);
  const long den = integer(1, 5);
  return Rational(num) / den;
}

Rational Sampler::nonzero_rational() {
  Rational x = rational();
  while (x == 0)
    x = rational();
  return x;
}

Polynomial Sampler::polynomial(long degree) {
  Polynomial f;
  for (long k = 0; k <= degree; ++k)
    f.add(k, rational());
  return f;
}

const std::vector<std::string>& check_catalog() {
  static const std::vector<std::string> names = {
      "axioms",     "classify",    "lemma4.2",   "lemma5.1i",     "lemma5.1iii",    "lemma5.1iv", "lemma5.1v",
      "lemma6.1",   "prop2.2",     "prop4.3",    "remark2.3",     "thm3.1claim1",   "thm3.3witness",
      "thm6.2",     "thm6.3"};
  return names;
}

namespace {

using nlohmann::json;

struct Context {
  const json& params;
  const GlobalConfig& global;
  std::string path;
  Sampler rng;

  ModeRange modes(ModeRange fallback) const {
    if (!params.contains("mode_range"))
      return fallback;
    const auto& r = params.at("mode_range");
    const std::string here = join_path(path, "mode_range");
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
      throw ConfigError(here, "expected [lo, hi] integers");
    ModeRange out{r[0].get<long>(), r[1].get<long>()};
    if (out.lo > out.hi)
      throw ConfigError(here, "lo must not exceed hi");
    return out;
  }
  long integer(const std::string& key, long fallback) const { return long_or(params, key, path, fallback); }
  long cap(long fallback) const {
    long c = integer("degree_cap", fallback);
    if (c < 0)
      throw ConfigError(join_path(path, "degree_cap"), "must be nonnegative");
    return c;
  }
  long trials(long fallback) const {
    long t = integer("trials", fallback);
    if (t < 0)
      throw ConfigError(join_path(path, "trials"), "must be nonnegative");
    return t;
  }
  bool has(const std::string& key) const { return params.is_object() && params.contains(key); }
  Rational rational(const std::string& key, const Rational& fallback) const {
    return rational_or(params, key, path, fallback);
  }
  OmegaParams random_omega() {
    return OmegaParams{rng.nonzero_rational(), rng.rational(), rng.rational()};
  }
  OmegaParams omega_or(const OmegaParams& fallback) const {
    return OmegaParams{rational("lambda", fallback.lambda), rational("alpha", fallback.alpha),
                       rational("beta", fallback.beta)};
  }
};

json omega_params_json(const OmegaParams& p) {
  return {{"lambda", to_string(p.lambda)}, {"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}};
}

std::vector<Label> basis_labels(const Module& m, long cap) {
  std::vector<Label> out;
  if (dynamic_cast<const OmegaModule*>(&m)) {
    for (long k = 0; k <= cap; ++k)
      out.push_back({k});
  } else if (dynamic_cast<const IntermediateSeriesModule*>(&m)) {
    for (long n = -cap; n <= cap; ++n)
      out.push_back({n});
  } else if (const auto* cm = dynamic_cast<const CalMOmegaModule*>(&m)) {
    for (long i = 0; i < static_cast<long>(cm->space().dim()); ++i)
      for (long k = 0; k <= cap; ++k)
        out.push_back({i, k});
  } else if (const auto* ca = dynamic_cast<const CalMAModule*>(&m)) {
    for (long i = 0; i < static_cast<long>(ca->space().dim()); ++i)
      for (long n = -cap; n <= cap; ++n)
        out.push_back({i, n});
  } else if (const auto* ind = dynamic_cast<const InducedModule*>(&m)) {
    for (const auto& mono : graded_basis(*ind, cap))
      out.push_back(mono.to_label());
  } else if (const auto* gt = dynamic_cast<const GammaTwistModule*>(&m)) {
    out = basis_labels(*gt->base(), cap);
  } else if (const auto* tm = dynamic_cast<const TensorModule*>(&m)) {
    for (const auto& a : basis_labels(*tm->left(), std::min<long>(cap, 2)))
      for (const auto& b : basis_labels(*tm->right(), cap))
        out.push_back(tensor_label(a, b));
  } else {
    throw std::invalid_argument("no sampling scheme for module " + m.name());
  }
  return out;
}

std::vector<Vector> sample_vectors(const Module& m, long cap, long count, Sampler& rng) {
  const auto labels = basis_labels(m, cap);
  std::vector<Vector> out;
  for (const auto& l : labels)
    out.push_back(Vector::basis(l));
  while (static_cast<long>(out.size()) < count && !labels.empty()) {
    Vector v;
    for (int j = 0; j < 3; ++j)
      v.add(labels[static_cast<std::size_t>(rng.integer(0, static_cast<long>(labels.size()) - 1))],
            rng.nonzero_rational());
    if (!v.is_zero())
      out.push_back(std::move(v));
  }
  return out;
}

/// Highest t-exponent among the Omega components of a vector.
long t_degree(const Module& m, const Vector& v) {
  long d = -1;
  const bool is_tensor = dynamic_cast<const TensorModule*>(&m) != nullptr;
  for (const auto& [label, c] : v) {
    long k = is_tensor ? split_tensor_label(label).first.at(0) : label.at(0);
    d = std::max(d, k);
  }
  return d;
}

/// Label of the canonical monomial x y (factors sorted, equal factors merged).
Label quadratic_monomial(Generator x, Generator y) {
  if (y < x)
    std::swap(x, y);
  PBWMonomial mono;
  if (x == y)
    mono.factors.push_back({x, 2});
  else
    mono.factors = {{x, 1}, {y, 1}};
  return mono.to_label();
}

Vector cyclic_tensor_start() { return Vector::basis(tensor_label({0}, {})); }

// ---------------------------------------------------------------------------

CheckReport check_axioms(Context& ctx) {
  ModeRange range = ctx.modes({-6, 6});
  std::vector<QuotientShape> shapes;
  if (ctx.has("shapes")) {
    const auto& arr = ctx.params.at("shapes");
    const std::string here = join_path(ctx.path, "shapes");
    if (!arr.is_array())
      throw ConfigError(here, "expected a list of [r, d] pairs");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& s = arr[i];
      if (!s.is_array() || s.size() != 2 || !is_nonnegative_integer(s[0]) || !is_nonnegative_integer(s[1]))
        throw ConfigError(join_path(here, i), "expected [r, d]");
      try {
        shapes.emplace_back(s[0].get<unsigned>(), s[1].get<unsigned>());
      } catch (const std::invalid_argument& e) {
        throw ConfigError(join_path(here, i), e.what());
      }
    }
  } else {
    for (unsigned r = 0; r <= 3; ++r)
      for (unsigned d = 0; d <= 1; ++d)
        shapes.emplace_back(r, d);
  }
  std::vector<CheckReport> parts{check_jacobi(range)};
  json shape_list = json::array();
  for (const auto& s : shapes) {
    parts.push_back(check_jacobi(s));
    shape_list.push_back({s.r, s.d});
  }
  return combine("axioms", {{"modes", {range.lo, range.hi}}, {"shapes", shape_list}}, parts);
}

CheckReport check_prop22(Context& ctx) {
  const json& spec = require_object(ctx.params, "module", ctx.path);
  ModuleHandle m = build_module(spec, join_path(ctx.path, "module"), ctx.global.rewrite_budget);
  const ModeRange modes = ctx.modes(ctx.global.modes);
  const long cap = ctx.cap(ctx.global.degree_cap);
  const long count = ctx.integer("samples", ctx.global.samples);
  auto samples = sample_vectors(*m, cap, count, ctx.rng);
  CheckReport r = module_axiom_check(*m, modes, samples, "prop2.2");
  r.params["degree_cap"] = cap;
  return r;
}

CheckReport check_lemma42(Context& ctx) {
  const ModeRange modes = ctx.modes(ctx.global.modes);
  const long cap = ctx.cap(5);
  std::vector<OmegaParams> cases;
  if (ctx.has("lambda"))
    cases.push_back(parse_omega_params(ctx.params, ctx.path));
  else
    for (long i = 0, n = ctx.trials(20); i < n; ++i)
      cases.push_back(ctx.random_omega());
  std::vector<CheckReport> parts;
  for (const auto& p : cases) {
    std::vector<Polynomial> extra{ctx.rng.polynomial(cap), ctx.rng.polynomial(cap)};
    parts.push_back(weighting_check(p, modes, cap, extra));
  }
  return combine("lemma4.2", {{"cases", cases.size()}, {"modes", {modes.lo, modes.hi}}, {"degree_cap", cap}},
                 parts);
}

CheckReport check_prop43(Context& ctx) {
  const ModeRange modes = ctx.modes(ctx.global.modes);
  const long cap = ctx.cap(ctx.global.degree_cap);
  std::vector<std::pair<HbarModule, OmegaParams>> cases;
  if (ctx.has("V")) {
    cases.emplace_back(parse_hbar(ctx.params.at("V"), join_path(ctx.path, "V")),
                       parse_omega_params(ctx.params, ctx.path));
  } else {
    for (long i = 0, n = ctx.trials(10); i < n; ++i) {
      Rational sigma = ctx.rng.rational(), tau = ctx.rng.rational();
      cases.emplace_back(one_dim_V(sigma, tau, QuotientShape(0, 0)), ctx.random_omega());
    }
    cases.emplace_back(two_dim_fixture(2), ctx.random_omega());
  }
  std::vector<CheckReport> parts;
  for (const auto& [v, p] : cases)
    parts.push_back(weighting_calM_check(v, p, modes, cap));
  return combine("prop4.3", {{"cases", cases.size()}, {"modes", {modes.lo, modes.hi}}, {"degree_cap", cap}}, parts);
}

CheckReport check_remark23(Context& ctx) {
  const ModeRange modes = ctx.modes(ctx.global.modes);
  const long cap = ctx.cap(5);
  struct Case {
    Rational sigma, tau;
    unsigned d;
    OmegaParams p;
  };
  std::vector<Case> cases;
  if (ctx.has("sigma")) {
    long d = ctx.integer("d", 0);
    if (d != 0 && d != 1)
      throw ConfigError(join_path(ctx.path, "d"), "d must be 0 or 1");
    cases.push_back({ctx.rational("sigma", 0), ctx.rational("tau", 0), static_cast<unsigned>(d),
                     parse_omega_params(ctx.params, ctx.path)});
  } else {
    for (long i = 0, n = ctx.trials(5); i < n; ++i)
      for (unsigned d = 0; d <= 1; ++d) {
        Rational sigma = ctx.rng.rational();
        Rational tau = d == 0 ? ctx.rng.rational() : Rational(0);
        cases.push_back({sigma, tau, d, ctx.random_omega()});
      }
  }
  std::vector<CheckReport> parts;
  for (const auto& c : cases) {
    HbarModule v = one_dim_V(c.sigma, c.tau, QuotientShape(0, c.d));
    CalMOmegaModule source(v, c.p);
    OmegaModule target(OmegaParams{c.p.lambda, c.p.alpha - c.sigma, c.d == 0 ? Rational(c.p.beta * c.tau) : Rational(0)});
    LabelMap map = [](const Label& l) -> std::optional<Vector> {
      if (l.size() != 2 || l[0] != 0)
        return std::nullopt;
      return Vector::basis({l[1]});
    };
    std::vector<Label> samples;
    for (long k = 0; k <= cap; ++k)
      samples.push_back({0, k});
    CheckReport r = intertwiner_check(source, target, map, modes, samples, "identity_map");
    r.params["sigma"] = to_string(c.sigma);
    r.params["tau"] = to_string(c.tau);
    r.params["d"] = c.d;
    parts.push_back(std::move(r));
  }
  return combine("remark2.3", {{"cases", cases.size()}, {"modes", {modes.lo, modes.hi}}, {"degree_cap", cap}},
                 parts);
}

/// Compares x (1 (x) v) with the expected scalar multiple of 1 (x) v.
std::optional<CheckReport> clause_mismatch(const Module& target, const std::string& clause, long m,
                                           const Vector& found, const Rational& expected, const json& params) {
  const Vector want = expected * cyclic_tensor_start();
  if (found == want)
    return std::nullopt;
  return CheckReport::fail("character_clauses", params,
                           {{"clause", clause},
                            {"m", m},
                            {"expected", to_json(target, want)},
                            {"found", to_json(target, found)}});
}

CheckReport check_thm62(Context& ctx) {
  const ModeRange modes = ctx.modes({-3, 3});
  const long cap = ctx.cap(3);
  struct Case {
    Rational lambda;
    RSParams rs;
    CentralTuple y;
  };
  std::vector<Case> cases;
  if (ctx.has("lambda")) {
    Rational lambda = require_rational(ctx.params, "lambda", ctx.path);
    if (lambda == 0)
      throw ConfigError(join_path(ctx.path, "lambda"), "lambda must be nonzero");
    auto rs = require_rational_list(ctx.params, "RS", ctx.path, 4);
    cases.push_back({lambda, {rs[0], rs[1], rs[2], rs[3]}, parse_central(ctx.params, "y", ctx.path, 3)});
  } else {
    for (long i = 0, n = ctx.trials(10); i < n; ++i) {
      Case c;
      c.lambda = ctx.rng.nonzero_rational();
      c.rs = {ctx.rng.rational(), ctx.rng.rational(), ctx.rng.rational(), ctx.rng.rational()};
      c.y = {0, ctx.rng.rational(), ctx.rng.rational(), 0};
      cases.push_back(c);
    }
  }
  const Rational h_offset = ctx.rational("h_offset", 0);

  std::vector<CheckReport> parts;
  for (const auto& c : cases) {
    const RSDictionary dict = dictionary_RS(c.lambda, c.rs, c.y);
    json cp = {{"lambda", to_string(c.lambda)},
               {"RS", {to_string(c.rs.r1), to_string(c.rs.r2), to_string(c.rs.s0), to_string(c.rs.s1)}},
               {"y", {to_string(c.y.c1), to_string(c.y.c2), to_string(c.y.c3)}},
               {"alpha", to_string(dict.alpha)},
               {"beta", to_string(dict.beta)},
               {"h", to_string(dict.h + h_offset)}};
    auto target = tensor(omega({c.lambda, dict.alpha, dict.beta}),
                         verma(dict.h + h_offset, dict.d, ctx.global.rewrite_budget));
    auto source = ind_lambda0(c.lambda, c.rs, c.y, ctx.global.rewrite_budget);
    const Vector start = cyclic_tensor_start();

    std::vector<Label> samples;
    for (const auto& mono : graded_basis(*source, cap))
      samples.push_back(mono.to_label());
    std::vector<CheckReport> sub;
    sub.push_back(intertwiner_check(*source, *target, monomial_map(target, start), modes, samples, "intertwiner"));

    std::optional<CheckReport> bad;
    const Vector l0 = target->act(Generator::L(0), start);
    for (long m = 1; m <= 6 && !bad; ++m)
      bad = clause_mismatch(*target, "L_m - lambda^m L_0", m,
                            target->act(Generator::L(m), start) - int_power(c.lambda, m) * l0,
                            rs_character(c.lambda, c.rs, m), cp);
    for (long m = 0; m <= 6 && !bad; ++m)
      bad = clause_mismatch(*target, "I_m", m, target->act(Generator::I(m), start),
                            rs_i_character(c.lambda, c.rs, m), cp);
    for (long k = 1; k <= 3 && !bad; ++k)
      bad = clause_mismatch(*target, "C_k", k, target->act(Generator::C(k), start),
                            k == 1 ? c.y.c1 : k == 2 ? c.y.c2 : c.y.c3, cp);
    sub.push_back(bad ? *bad : CheckReport::pass("character_clauses", cp));

    auto [rs_back, y_back] = dictionary_RS_inv(c.lambda, dict);
    const bool round = rs_back.r1 == c.rs.r1 && rs_back.r2 == c.rs.r2 && rs_back.s0 == c.rs.s0 &&
                       rs_back.s1 == c.rs.s1 && y_back.c1 == c.y.c1 && y_back.c2 == c.y.c2 && y_back.c3 == c.y.c3;
    sub.push_back(round ? CheckReport::pass("round_trip", cp)
                        : CheckReport::fail("round_trip", cp,
                                            {{"recovered", {to_string(rs_back.r1), to_string(rs_back.r2),
                                                            to_string(rs_back.s0), to_string(rs_back.s1)}}}));
    parts.push_back(combine("case", cp, sub));
  }
  return combine("thm6.2",
                 {{"cases", cases.size()},
                  {"modes", {modes.lo, modes.hi}},
                  {"degree_cap", cap},
                  {"h_offset", to_string(h_offset)}},
                 parts);
}

CheckReport check_thm63(Context& ctx) {
  const ModeRange modes = ctx.modes({-3, 3});
  const long cap = ctx.cap(3);
  struct Case {
    Rational lambda;
    PQParams pq;
    CentralTuple z;
  };
  std::vector<Case> cases;
  if (ctx.has("lambda")) {
    Rational lambda = require_rational(ctx.params, "lambda", ctx.path);
    if (lambda == 0)
      throw ConfigError(join_path(ctx.path, "lambda"), "lambda must be nonzero");
    auto pq = require_rational_list(ctx.params, "PQ", ctx.path, 5);
    cases.push_back({lambda, {pq[0], pq[1], pq[2], pq[3], pq[4]}, parse_central(ctx.params, "z", ctx.path, 4)});
  } else {
    for (long i = 0, n = ctx.trials(10); i < n; ++i) {
      Case c;
      c.lambda = ctx.rng.nonzero_rational();
      c.pq = {ctx.rng.rational(), ctx.rng.rational(), ctx.rng.rational(), ctx.rng.rational(), ctx.rng.rational()};
      c.z = {ctx.rng.rational(), ctx.rng.rational(), ctx.rng.rational(), 0};
      cases.push_back(c);
    }
  }
  const Rational l1_offset = ctx.rational("lambda1_offset", 0);

  std::vector<CheckReport> parts;
  for (const auto& c : cases) {
    const PQDictionary dict = dictionary_PQ(c.lambda, c.pq, c.z);
    json cp = {{"lambda", to_string(c.lambda)},
               {"PQ",
                {to_string(c.pq.p2), to_string(c.pq.p3), to_string(c.pq.p4), to_string(c.pq.q1), to_string(c.pq.q2)}},
               {"z", {to_string(c.z.c0), to_string(c.z.c1), to_string(c.z.c2), to_string(c.z.c3)}},
               {"alpha", to_string(dict.alpha)},
               {"beta", to_string(dict.beta)},
               {"lambda1", to_string(dict.lambda1 + l1_offset)},
               {"lambda2", to_string(dict.lambda2)},
               {"mu1", to_string(dict.mu1)}};
    auto target = tensor(omega({c.lambda, dict.alpha, dict.beta}),
                         whittaker(dict.lambda1 + l1_offset, dict.lambda2, dict.mu1, dict.e, ctx.global.rewrite_budget));
    auto source = ind_lambda1(c.lambda, c.pq, c.z, ctx.global.rewrite_budget);
    const Vector start = cyclic_tensor_start();

    std::vector<Label> samples;
    for (const auto& mono : graded_basis(*source, cap))
      samples.push_back(mono.to_label());
    std::vector<CheckReport> sub;
    sub.push_back(intertwiner_check(*source, *target, monomial_map(target, start), modes, samples, "intertwiner"));

    std::optional<CheckReport> bad;
    const Vector l1 = target->act(Generator::L(1), start);
    for (long m = 2; m <= 6 && !bad; ++m)
      bad = clause_mismatch(*target, "L_m - lambda^(m-1) L_1", m,
                            target->act(Generator::L(m), start) - int_power(c.lambda, m - 1) * l1,
                            pq_character(c.lambda, c.pq, m), cp);
    bad = bad ? bad : clause_mismatch(*target, "I_0", 0, target->act(Generator::I(0), start), c.z.c0, cp);
    for (long m = 1; m <= 6 && !bad; ++m)
      bad = clause_mismatch(*target, "I_m", m, target->act(Generator::I(m), start),
                            pq_i_character(c.lambda, c.pq, m), cp);
    for (long k = 1; k <= 3 && !bad; ++k)
      bad = clause_mismatch(*target, "C_k", k, target->act(Generator::C(k), start),
                            k == 1 ? c.z.c1 : k == 2 ? c.z.c2 : c.z.c3, cp);
    sub.push_back(bad ? *bad : CheckReport::pass("character_clauses", cp));

    auto [pq_back, z_back] = dictionary_PQ_inv(c.lambda, dict);
    const bool round = pq_back.p2 == c.pq.p2 && pq_back.p3 == c.pq.p3 && pq_back.p4 == c.pq.p4 &&
                       pq_back.q1 == c.pq.q1 && pq_back.q2 == c.pq.q2 && z_back.c0 == c.z.c0 &&
                       z_back.c1 == c.z.c1 && z_back.c2 == c.z.c2 && z_back.c3 == c.z.c3;
    sub.push_back(round ? CheckReport::pass("round_trip", cp)
                        : CheckReport::fail("round_trip", cp,
                                            {{"recovered", {to_string(pq_back.p2), to_string(pq_back.p3),
                                                            to_string(pq_back.p4), to_string(pq_back.q1),
                                                            to_string(pq_back.q2)}}}));
    parts.push_back(combine("case", cp, sub));
  }
  return combine("thm6.3",
                 {{"cases", cases.size()},
                  {"modes", {modes.lo, modes.hi}},
                  {"degree_cap", cap},
                  {"lambda1_offset", to_string(l1_offset)}},
                 parts);
}

InducedHandle random_verma(Sampler& rng, std::size_t budget) {
  return verma(rng.rational(), {rng.rational(), rng.rational(), rng.rational(), rng.rational()}, budget);
}

InducedHandle random_whittaker(Sampler& rng, std::size_t budget) {
  Rational l1 = rng.rational(), l2 = rng.rational(), mu1 = rng.rational();
  return whittaker(l1, l2, mu1, {rng.rational(), rng.rational(), rng.rational(), rng.rational()}, budget);
}

CheckReport check_lemma61(Context& ctx) {
  const long cap = ctx.cap(4);
  std::vector<std::pair<OmegaParams, InducedHandle>> cases;
  if (ctx.has("right")) {
    ModuleHandle m = build_module(require_object(ctx.params, "right", ctx.path), join_path(ctx.path, "right"),
                                  ctx.global.rewrite_budget);
    auto ind = std::dynamic_pointer_cast<const InducedModule>(m);
    if (!ind)
      throw ConfigError(join_path(ctx.path, "right"), "expected an induced module (verma or whittaker)");
    cases.emplace_back(parse_omega_params(ctx.params, ctx.path), ind);
  } else {
    for (long i = 0, n = ctx.trials(5); i < n; ++i) {
      OmegaParams p = ctx.random_omega();
      cases.emplace_back(p, random_verma(ctx.rng, ctx.global.rewrite_budget));
      OmegaParams q = ctx.random_omega();
      cases.emplace_back(q, random_whittaker(ctx.rng, ctx.global.rewrite_budget));
    }
  }
  std::vector<CheckReport> parts;
  for (const auto& [p, ind] : cases)
    parts.push_back(basis_transition_check(p, ind, cap));
  return combine("lemma6.1", {{"cases", cases.size()}, {"degree_cap", cap}}, parts);
}

/// Iterates op on v and passes when the probe is inconclusive and the
/// t-degree grows at every step.
CheckReport degree_growth(const Module& m, const Operator& op, const Vector& v, unsigned max_power,
                          const std::string& name) {
  CheckReport probe = nilpotency_probe(m, op, v, max_power);
  json params = probe.params;
  if (probe.status != Status::Inconclusive)
    return CheckReport::fail(name, params, {{"kind", "operator became nilpotent"}, {"probe", probe.witness}});
  json degrees = json::array();
  Vector cur = v;
  long last = t_degree(m, cur);
  degrees.push_back(last);
  for (unsigned k = 1; k <= max_power; ++k) {
    cur = apply_operator(m, op, cur);
    long d = t_degree(m, cur);
    degrees.push_back(d);
    if (d <= last)
      return CheckReport::fail(name, params, {{"kind", "t-degree did not grow"}, {"degrees", degrees}});
    last = d;
  }
  return CheckReport::pass(name, params, {{"inconclusive_probe", probe.witness}, {"t_degrees", degrees}});
}

CheckReport check_lemma51i(Context& ctx) {
  const OmegaParams p = ctx.omega_or({1, 1, 1});
  const unsigned max_power = static_cast<unsigned>(ctx.integer("max_power", 10));
  const long cap = ctx.cap(ctx.global.degree_cap);
  const long top = ctx.integer("max_mode", 4);
  auto om = omega(p);
  auto vm = verma(ctx.rational("h", Rational(1, 2)), {1, 0, 1, 0}, ctx.global.rewrite_budget);
  auto wh = whittaker(1, 2, 3, {1, 0, 1, 0}, ctx.global.rewrite_budget);
  std::vector<CheckReport> parts;
  for (long m = 1; m <= top; ++m) {
    parts.push_back(degree_growth(*om, Element(Generator::L(m)), poly_to_vector(Polynomial(Rational(1))), max_power, "omega_growth"));
    for (const auto& right : {std::static_pointer_cast<const Module>(vm), std::static_pointer_cast<const Module>(wh)}) {
      auto t = tensor(om, right);
      parts.push_back(degree_growth(*t, Element(Generator::L(m)), cyclic_tensor_start(), max_power, "tensor_growth"));
    }
  }
  json evidence = json::array();
  for (long m = 1; m <= top; ++m)
    for (GenKind kind : {GenKind::L, GenKind::I})
      for (const auto& mono : graded_basis(*vm, cap)) {
        const Generator g{kind, m};
        const long bound = mono.degree() / m + 1;
        CheckReport probe =
            nilpotency_probe(*vm, Element(g), Vector::basis(mono.to_label()), static_cast<unsigned>(bound));
        if (probe.status != Status::Pass)
          return CheckReport::fail("lemma5.1i", {{"omega", omega_params_json(p)}},
                                   {{"kind", "induced vector not killed within degree/m + 1"},
                                    {"generator", to_string(g)},
                                    {"vector", to_string(mono)},
                                    {"bound", bound}});
      }
  parts.push_back(CheckReport::pass("verma_local_nilpotency", {{"module", vm->name()}, {"degree_cap", cap}}));
  return combine("lemma5.1i", {{"omega", omega_params_json(p)}, {"max_power", max_power}, {"max_mode", top}}, parts);
}

CheckReport check_lemma51iii(Context& ctx) {
  const OmegaParams p = ctx.omega_or({1, 0, 3});
  const Rational tau = ctx.rational("tau", 2);
  const ModeRange modes = ctx.modes(ctx.global.modes);
  const long cap = ctx.cap(ctx.global.degree_cap);
  HbarModule v = two_dim_fixture(tau);
  CalMOmegaModule m(v, p);
  const unsigned s = 2 * v.r_prime().value_or(0) + 2 * v.shape().d;
  json params = {{"omega", omega_params_json(p)}, {"tau", to_string(tau)}, {"s", s},
                 {"modes", {modes.lo, modes.hi}}, {"degree_cap", cap}};
  if (p.beta == 0 || tau == 0)
    return CheckReport::inconclusive("lemma5.1iii", params, {{"reason", "requires beta != 0 and invertible I_0"}});
  for (long l = modes.lo; l <= modes.hi; ++l) {
    SubspaceBasis images;
    const Rational scalar = tau * tau * p.beta * p.beta * int_power(p.lambda, l);
    for (long mm = modes.lo; mm <= modes.hi; ++mm)
      for (long i = 0; i < 2; ++i)
        for (long k = 0; k <= cap; ++k) {
          const Vector x = Vector::basis({i, k});
          Vector got = t_apply(m, TOperator{l, mm, s}, x);
          Vector want;
          for (const auto& [e, c] : shift(Polynomial::monomial(k), l))
            want.add({i, e}, scalar * c);
          if (got != want)
            return CheckReport::fail("lemma5.1iii", params,
                                     {{"l", l}, {"m", mm}, {"sample", m.format_label({i, k})},
                                      {"expected", to_json(m, want)}, {"found", to_json(m, got)}});
          if (mm == modes.lo && !images.insert(got))
            return CheckReport::fail("lemma5.1iii", params,
                                     {{"kind", "not injective on truncation"}, {"l", l},
                                      {"sample", m.format_label({i, k})}});
        }
  }
  return CheckReport::pass("lemma5.1iii", params);
}

CheckReport check_lemma51iv(Context& ctx) {
  const OmegaParams p = ctx.omega_or({1, 0, 2});
  const long cap = ctx.cap(ctx.global.degree_cap);
  auto vm = verma(ctx.rational("h", 0), {0, 0, 0, 0}, ctx.global.rewrite_budget);
  auto t = tensor(omega(p), vm);
  const long l = ctx.integer("l", 9), m = ctx.integer("m", 4);
  std::vector<CheckReport> parts;

  CheckReport probe = nilpotency_probe(*t, TOperator{l, m, 1}, cyclic_tensor_start(), 3);
  if (probe.status == Status::Pass && probe.witness.value("k", 0) != 1)
    probe = CheckReport::fail("nilpotency", probe.params, {{"kind", "expected power 1"}, {"probe", probe.witness}});
  parts.push_back(probe);

  for (const auto& mono : graded_basis(*vm, cap)) {
    const Vector u = Vector::basis(mono.to_label());
    auto bound = annihilation_bound(*vm, u, 0);
    if (!bound)
      return CheckReport::fail("lemma5.1iv", {{"omega", omega_params_json(p)}},
                               {{"kind", "no annihilation bound found"}, {"vector", to_string(mono)}});
    for (long k = 0; k <= 2; ++k)
      for (unsigned s = 1; s <= 2; ++s) {
        const long mm = *bound, ll = mm + static_cast<long>(s) + *bound;
        Vector x = TensorModule::pure(poly_to_vector(Polynomial::monomial(k)), u);
        Vector got = t_apply(*t, TOperator{ll, mm, s}, x);
        if (!got.is_zero())
          return CheckReport::fail("lemma5.1iv", {{"omega", omega_params_json(p)}},
                                   {{"operator", to_string(TOperator{ll, mm, s})},
                                    {"vector", t->format_label(x.begin()->first)},
                                    {"image", to_json(*t, got)}});
      }
  }
  parts.push_back(CheckReport::pass("beyond_annihilation_bound", {{"module", t->name()}, {"degree_cap", cap}}));
  return combine("lemma5.1iv", {{"omega", omega_params_json(p)}, {"l", l}, {"m", m}}, parts);
}

CheckReport check_lemma51v(Context& ctx) {
  const OmegaParams p = ctx.omega_or({1, 0, 2});
  const ModeRange modes = ctx.modes(ctx.global.modes);
  const long cap = ctx.cap(5);
  std::vector<CheckReport> parts;

  std::vector<OmegaParams> omegas{p};
  for (long i = 0, n = ctx.trials(2); i < n; ++i)
    omegas.push_back(ctx.random_omega());
  for (const auto& q : omegas) {
    OmegaModule om(q);
    json params = {{"omega", omega_params_json(q)}, {"modes", {modes.lo, modes.hi}}, {"degree_cap", cap}};
    std::optional<CheckReport> bad;
    for (long l = modes.lo; l <= modes.hi && !bad; ++l)
      for (long m = modes.lo; m <= modes.hi && !bad; ++m)
        for (unsigned s = 1; s <= 4 && !bad; ++s)
          for (long k = 0; k <= cap && !bad; ++k) {
            Vector got = t_apply(om, TOperator{l, m, s}, Vector::basis({k}));
            if (!got.is_zero())
              bad = CheckReport::fail("omega_annihilated", params,
                                      {{"operator", to_string(TOperator{l, m, s})}, {"k", k},
                                       {"image", to_json(om, got)}});
          }
    parts.push_back(bad ? *bad : CheckReport::pass("omega_annihilated", params));
  }

  auto vm = verma(ctx.rational("h", 0), {0, 0, 0, 0}, ctx.global.rewrite_budget);
  auto t = tensor(omega(p), vm);
  const long l = ctx.integer("l", -7), m = ctx.integer("m", -3);
  Vector img = t_apply(*t, TOperator{l, m, 1}, cyclic_tensor_start());
  const Label a = tensor_label({0}, quadratic_monomial(Generator::I(l - m - 1), Generator::I(m + 1)));
  const Label b = tensor_label({0}, quadratic_monomial(Generator::I(l - m), Generator::I(m)));
  json tp = {{"module", t->name()}, {"operator", to_string(TOperator{l, m, 1})}};
  if (img.is_zero() || img.coeff(a) != 1 || img.coeff(b) != -1)
    parts.push_back(CheckReport::fail("tensor_nonzero", tp, {{"image", to_json(*t, img)}}));
  else
    parts.push_back(CheckReport::pass("tensor_nonzero", tp, {{"image", to_json(*t, img)}}));

  // With l = 2m + 1 the two quadratic terms coincide and cancel, so the sweep stays on l = 2m - 1.
  for (long mm = -3; mm >= -6; --mm) {
    const TOperator op{2 * mm - 1, mm, 1};
    if (t_apply(*t, op, cyclic_tensor_start()).is_zero())
      parts.push_back(CheckReport::fail("tensor_nonzero", tp, {{"operator", to_string(op)}}));
  }
  return combine("lemma5.1v", {{"omega", omega_params_json(p)}, {"l", l}, {"m", m}}, parts);
}

CheckReport check_thm31(Context& ctx) {
  const OmegaParams p = ctx.omega_or({1, 0, 2});
  auto vm = verma(ctx.rational("h", 0), {0, 0, 0, 0}, ctx.global.rewrite_budget);
  auto handle = std::make_shared<TensorModule>(omega(p), vm);
  const TensorModule& t = *handle;
  const long max_degree = ctx.integer("max_t_degree", 3);
  const auto labels = graded_basis(*vm, 3);
  std::vector<CheckReport> parts;
  for (long trial = 0, n = ctx.trials(10); trial < n; ++trial) {
    const long top = ctx.rng.integer(0, max_degree);
    Vector w;
    std::vector<Vector> us;
    long bound = 0;
    for (long i = 0; i <= top; ++i) {
      Vector u;
      for (int j = 0; j < 3; ++j)
        u.add(labels[static_cast<std::size_t>(ctx.rng.integer(0, static_cast<long>(labels.size()) - 1))].to_label(),
              ctx.rng.nonzero_rational());
      if (i == top && u.is_zero())
        u = InducedModule::cyclic();
      us.push_back(u);
      w += TensorModule::pure(poly_to_vector(Polynomial::monomial(i)), u);
      bound = std::max(bound, annihilation_bound(*vm, u, 1).value_or(64));
    }
    std::vector<long> shifts;
    for (long i = 0; i <= top; ++i)
      shifts.push_back(bound + i);
    json params = {{"w", to_json(t, w)}, {"shifts", shifts}};
    auto got = vandermonde_extract(t, w, shifts);
    auto want = vandermonde_components_expected(t, w, shifts.size());
    if (got != want) {
      parts.push_back(CheckReport::fail("vandermonde", params, {{"kind", "components differ"}}));
      continue;
    }
    Vector top_expected = TensorModule::pure(poly_to_vector(Polynomial(Rational(1))), us.back());
    top_expected *= top % 2 == 0 ? Rational(p.beta) : Rational(-p.beta);
    if (got.back() != top_expected)
      parts.push_back(CheckReport::fail("vandermonde", params,
                                        {{"kind", "top component"}, {"found", to_json(t, got.back())}}));
    else
      parts.push_back(CheckReport::pass("vandermonde", params));
  }
  bool singular = false;
  try {
    vandermonde_extract(t, cyclic_tensor_start(), {5, 5});
  } catch (const SingularSystem&) {
    singular = true;
  }
  parts.push_back(singular ? CheckReport::pass("duplicate_shifts_rejected")
                           : CheckReport::fail("duplicate_shifts_rejected", json::object(),
                                               {{"kind", "duplicate shifts were accepted"}}));
  return combine("thm3.1claim1", {{"omega", omega_params_json(p)}, {"module", t.name()}}, parts);
}

CheckReport check_thm33(Context& ctx) {
  const json& spec = require_object(ctx.params, "module", ctx.path);
  const std::string mpath = join_path(ctx.path, "module");
  ModuleHandle m = build_module(spec, mpath, ctx.global.rewrite_budget);
  const ModeRange modes = ctx.modes({-6, 6});
  const long cap = ctx.cap(8);
  std::string subspace = "positive_degree";
  if (ctx.has("subspace")) {
    if (!ctx.params.at("subspace").is_string())
      throw ConfigError(join_path(ctx.path, "subspace"), "expected a string");
    subspace = ctx.params.at("subspace").get<std::string>();
  }
  Membership member;
  std::vector<Vector> samples;
  if (subspace == "positive_degree") {
    Label constant;
    if (dynamic_cast<const OmegaModule*>(m.get())) {
      constant = {0};
      for (long k = 1; k <= cap; ++k)
        samples.push_back(Vector::basis({k}));
    } else if (const auto* cm = dynamic_cast<const CalMOmegaModule*>(m.get()); cm && cm->space().dim() == 1) {
      constant = {0, 0};
      for (long k = 1; k <= cap; ++k)
        samples.push_back(Vector::basis({0, k}));
    } else {
      throw ConfigError(mpath, "positive_degree needs an omega module or calM_omega with one-dimensional V");
    }
    member = [constant](const Vector& v) { return v.coeff(constant) == 0; };
  } else if (subspace == "v0" || subspace == "nonzero_weights") {
    if (!dynamic_cast<const IntermediateSeriesModule*>(m.get()))
      throw ConfigError(mpath, subspace + " needs an intermediate_series module");
    if (subspace == "v0") {
      samples.push_back(Vector::basis({0}));
      member = [](const Vector& v) { return v.is_zero() || (v.size() == 1 && v.begin()->first == Label{0}); };
    } else {
      for (long n = -cap; n <= cap; ++n)
        if (n != 0)
          samples.push_back(Vector::basis({n}));
      member = [](const Vector& v) { return v.coeff({0}) == 0; };
    }
  } else {
    throw ConfigError(join_path(ctx.path, "subspace"), "expected positive_degree, v0 or nonzero_weights");
  }
  CheckReport r = invariance_check(*m, member, samples, modes, "thm3.3witness");
  r.params["subspace"] = subspace;
  if (ctx.has("expect")) {
    const auto& e = ctx.params.at("expect");
    if (!e.is_string() || (e != "pass" && e != "fail"))
      throw ConfigError(join_path(ctx.path, "expect"), "expected \"pass\" or \"fail\"");
    r.params["expect"] = e;
    if (e == "fail") {
      if (r.status == Status::Fail)
        return CheckReport::pass(r.name, r.params, {{"non_invariance_witness", r.witness}});
      return CheckReport::fail(r.name, r.params, {{"kind", "subspace unexpectedly invariant"}});
    }
  }
  return r;
}

CheckReport check_classify(Context& ctx) {
  const json& spec = require_object(ctx.params, "module", ctx.path);
  json predictions = classify(spec, join_path(ctx.path, "module"));
  json params = {{"module", spec}};
  if (ctx.has("expect")) {
    const auto& expect = ctx.params.at("expect");
    if (!expect.is_object())
      throw ConfigError(join_path(ctx.path, "expect"), "expected an object of predicate values");
    params["expect"] = expect;
    for (const auto& [key, value] : expect.items()) {
      if (!predictions.contains(key) || key == "type" || key == "annotations")
        throw ConfigError(join_path(join_path(ctx.path, "expect"), key), "unknown predicate");
      if (predictions.at(key) != value)
        return CheckReport::fail("classify", params,
                                 {{"predicate", key}, {"expected", value}, {"predicted", predictions.at(key)}});
    }
  }
  return CheckReport::pass("classify", params, predictions);
}

using CheckFn = std::function<CheckReport(Context&)>;

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> r = {
      {"axioms", check_axioms},         {"classify", check_classify},       {"lemma4.2", check_lemma42},
      {"lemma5.1i", check_lemma51i},    {"lemma5.1iii", check_lemma51iii}, {"lemma5.1iv", check_lemma51iv},
      {"lemma5.1v", check_lemma51v},    {"lemma6.1", check_lemma61},        {"prop2.2", check_prop22},
      {"prop4.3", check_prop43},        {"remark2.3", check_remark23},     {"thm3.1claim1", check_thm31},
      {"thm3.3witness", check_thm33},   {"thm6.2", check_thm62},            {"thm6.3", check_thm63}};
  return r;
}

std::string catalog_text() {
  std::string out;
  for (const auto& n : check_catalog())
    out += (out.empty() ? "" : ", ") + n;
  return out;
}

} // namespace

CheckReport run_check(const CheckSpec& check, const GlobalConfig& global, std::size_t index, const std::string& path) {
  auto it = registry().find(check.name);
  if (it == registry().end())
    throw ConfigError(path, "unknown check '" + check.name + "'; catalog: " + catalog_text());
  if (!check.params.is_object())
    throw ConfigError(path, "params must be an object");
  const std::uint64_t seed = global.seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1));
  Context ctx{check.params, global, path, Sampler(seed)};
  return it->second(ctx);
}

} // namespace hv
