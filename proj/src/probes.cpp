#include "hv/probes.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

namespace hv {

std::string to_string(const TOperator& t) {
  return "T(l=" + std::to_string(t.l) + ", m=" + std::to_string(t.m) + ", s=" + std::to_string(t.s) + ")";
}

Vector t_apply(const Module& module, const TOperator& t, const Vector& v) {
  Vector out;
  for (unsigned i = 0; i <= t.s; ++i) {
    Rational c = binomial(t.s, i);
    if ((t.s - i) % 2 == 1)
      c = -c;
    const long k = static_cast<long>(i);
    Vector inner = module.act(Generator::I(t.m + k), v);
    out.add_scaled(module.act(Generator::I(t.l - t.m - k), inner), c);
  }
  return out;
}

Vector apply_operator(const Module& module, const Operator& op, const Vector& v) {
  if (const auto* x = std::get_if<Element>(&op))
    return module.act(*x, v);
  return t_apply(module, std::get<TOperator>(op), v);
}

namespace {

std::string operator_text(const Operator& op) {
  if (const auto* x = std::get_if<Element>(&op))
    return to_string(*x);
  return to_string(std::get<TOperator>(op));
}

} // namespace

CheckReport nilpotency_probe(const Module& module, const Operator& op, const Vector& v, unsigned max_power) {
  if (max_power < 1)
    throw std::invalid_argument("nilpotency_probe: max_power must be at least 1");
  nlohmann::json params = {{"module", module.name()},
                           {"operator", operator_text(op)},
                           {"vector", to_json(module, v)},
                           {"max_power", max_power}};
  if (v.is_zero())
    return CheckReport::pass("nilpotency", params, {{"k", 0}});
  Vector cur = v;
  nlohmann::json sizes = nlohmann::json::array();
  for (unsigned k = 1; k <= max_power; ++k) {
    cur = apply_operator(module, op, cur);
    if (cur.is_zero())
      return CheckReport::pass("nilpotency", params, {{"k", k}});
    sizes.push_back(cur.size());
  }
  return CheckReport::inconclusive("nilpotency", params, {{"iterate_support_sizes", sizes}});
}

std::optional<long> annihilation_bound(const Module& module, const Vector& v, long start, long window, long search) {
  long run_start = start;
  for (long m = start; m <= start + search + window; ++m) {
    if (!module.act(Generator::I(m), v).is_zero()) {
      run_start = m + 1;
      if (run_start > start + search)
        return std::nullopt;
      continue;
    }
    if (m - run_start >= window)
      return run_start;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json omega_json(const OmegaParams& p) {
  return {{"lambda", to_string(p.lambda)}, {"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}};
}

std::vector<Generator> probe_generators(ModeRange modes) { return generators_in(modes, true); }

} // namespace

CheckReport weighting_check(const OmegaParams& p, ModeRange modes, long degree_cap,
                            const std::vector<Polynomial>& extra) {
  if (p.lambda == 0)
    throw ZeroLambda("weighting_check requires lambda != 0");
  nlohmann::json params = omega_json(p);
  params["modes"] = {modes.lo, modes.hi};
  params["degree_cap"] = degree_cap;
  OmegaModule om(p);
  IntermediateSeriesModule target(ASeriesParams{0, 1 - p.alpha, p.beta});

  std::vector<Polynomial> samples;
  for (long k = 0; k <= degree_cap; ++k)
    samples.push_back(Polynomial::monomial(k));
  samples.insert(samples.end(), extra.begin(), extra.end());

  auto phi = [&](const Polynomial& f, long n) {
    return Vector::basis({n}, int_power(p.lambda, -n) * eval(f, n));
  };

  for (const auto& f : samples) {
    const Vector fv = poly_to_vector(f);
    for (long n = modes.lo; n <= modes.hi; ++n) {
      Polynomial kernel_elt = Polynomial::monomial(1) * f - Rational(n) * f;
      if (eval(kernel_elt, n) != 0)
        return CheckReport::fail("weighting", params,
                                 {{"kind", "evaluation does not kill (L_0 - n)"}, {"f", to_string(f)}, {"n", n}});
      for (const auto& g : probe_generators(modes)) {
        Polynomial image = vector_to_poly(om.act(g, fv));
        long shift_by = g.kind == GenKind::C ? 0 : g.index;
        Vector lhs = phi(image, n + shift_by);
        Vector rhs = target.act(g, phi(f, n));
        if (lhs != rhs)
          return CheckReport::fail("weighting", params,
                                   {{"generator", to_string(g)},
                                    {"f", to_string(f)},
                                    {"n", n},
                                    {"lhs", to_json(target, lhs)},
                                    {"rhs", to_json(target, rhs)}});
      }
    }
  }
  return CheckReport::pass("weighting", params, {{"samples", samples.size()}});
}

CheckReport weighting_calM_check(const HbarModule& v, const OmegaParams& p, ModeRange modes, long degree_cap) {
  if (p.lambda == 0)
    throw ZeroLambda("weighting_calM_check requires lambda != 0");
  nlohmann::json params = omega_json(p);
  params["dim_V"] = v.dim();
  params["shape"] = {v.shape().r, v.shape().d};
  params["modes"] = {modes.lo, modes.hi};
  params["degree_cap"] = degree_cap;
  CalMOmegaModule source(v, p);
  CalMAModule target(v, ASeriesParams{0, 1 - p.alpha, p.beta});

  auto phi = [&](const Vector& x, long n) {
    Vector out;
    for (const auto& [label, c] : x)
      out.add({label[0], n}, c * int_power(p.lambda, -n) * int_power(Rational(n), label[1]));
    return out;
  };

  for (std::size_t i = 0; i < v.dim(); ++i)
    for (long k = 0; k <= degree_cap; ++k) {
      const Vector x = Vector::basis({static_cast<long>(i), k});
      for (long n = modes.lo; n <= modes.hi; ++n)
        for (const auto& g : probe_generators(modes)) {
          long shift_by = g.kind == GenKind::C ? 0 : g.index;
          Vector lhs = phi(source.act(g, x), n + shift_by);
          Vector rhs = target.act(g, phi(x, n));
          if (lhs != rhs)
            return CheckReport::fail("weighting_calM", params,
                                     {{"generator", to_string(g)},
                                      {"sample", source.format_label({static_cast<long>(i), k})},
                                      {"n", n},
                                      {"lhs", to_json(target, lhs)},
                                      {"rhs", to_json(target, rhs)}});
        }
    }
  return CheckReport::pass("weighting_calM", params);
}

// ---------------------------------------------------------------------------

namespace {

Vector map_vector(const LabelMap& map, const Vector& x, const Module& source) {
  Vector out;
  for (const auto& [label, c] : x) {
    auto image = map(label);
    if (!image)
      throw UndefinedLabel("map undefined on label " + source.format_label(label));
    out.add_scaled(*image, c);
  }
  return out;
}

} // namespace

CheckReport intertwiner_check(const Module& a, const Module& b, const LabelMap& map, ModeRange modes,
                              const std::vector<Label>& samples, std::string name) {
  nlohmann::json params = {
      {"source", a.name()}, {"target", b.name()}, {"modes", {modes.lo, modes.hi}}, {"samples", samples.size()}};
  for (const auto& x : samples) {
    const Vector xv = Vector::basis(x);
    const Vector mx = map_vector(map, xv, a);
    for (const auto& g : probe_generators(modes)) {
      Vector lhs = map_vector(map, a.act(g, xv), a);
      Vector rhs = b.act(g, mx);
      if (lhs != rhs)
        return CheckReport::fail(std::move(name), params,
                                 {{"generator", to_string(g)},
                                  {"sample", a.format_label(x)},
                                  {"map_of_image", to_json(b, lhs)},
                                  {"image_of_map", to_json(b, rhs)}});
    }
  }
  return CheckReport::pass(std::move(name), params);
}

LabelMap identity_map() {
  return [](const Label& l) -> std::optional<Vector> { return Vector::basis(l); };
}

LabelMap monomial_map(ModuleHandle target, Vector start) {
  struct State {
    std::mutex mutex;
    std::map<Label, Vector> memo;
  };
  auto state = std::make_shared<State>();
  return [target = std::move(target), start = std::move(start), state](const Label& l) -> std::optional<Vector> {
    {
      std::lock_guard lock(state->mutex);
      auto it = state->memo.find(l);
      if (it != state->memo.end())
        return it->second;
    }
    PBWMonomial mono;
    try {
      mono = PBWMonomial::from_label(l);
    } catch (const LabelSchemeMismatch&) {
      return std::nullopt;
    }
    Vector image = InducedModule::apply_monomial(*target, mono, start);
    std::lock_guard lock(state->mutex);
    state->memo.try_emplace(l, image);
    return image;
  };
}

// ---------------------------------------------------------------------------

RSDictionary dictionary_RS(const Rational& lambda, const RSParams& rs, const CentralTuple& y) {
  if (lambda == 0)
    throw ZeroLambda("dictionary_RS requires lambda != 0");
  RSDictionary out;
  const Rational li = 1 / lambda;
  out.alpha = li * li * (lambda * rs.r1 - rs.r2);
  out.beta = li * rs.s1;
  out.h = li * li * (rs.r2 - 2 * lambda * rs.r1);
  out.d = CentralTuple{rs.s0 - li * rs.s1, y.c1, y.c2, y.c3};
  return out;
}

std::pair<RSParams, CentralTuple> dictionary_RS_inv(const Rational& lambda, const RSDictionary& dict) {
  if (lambda == 0)
    throw ZeroLambda("dictionary_RS_inv requires lambda != 0");
  RSParams rs;
  rs.r1 = -lambda * (dict.alpha + dict.h);
  rs.r2 = -lambda * lambda * (2 * dict.alpha + dict.h);
  rs.s1 = lambda * dict.beta;
  rs.s0 = dict.d.c0 + dict.beta;
  return {rs, CentralTuple{0, dict.d.c1, dict.d.c2, dict.d.c3}};
}

PQDictionary dictionary_PQ(const Rational& lambda, const PQParams& pq, const CentralTuple& z) {
  if (lambda == 0)
    throw ZeroLambda("dictionary_PQ requires lambda != 0");
  PQDictionary out;
  const Rational li = 1 / lambda;
  const Rational l2 = li * li;
  out.alpha = l2 * l2 * (lambda * pq.p3 - pq.p4);
  out.beta = l2 * pq.q2;
  out.lambda1 = l2 * li * (2 * pq.p4 - 3 * lambda * pq.p3);
  out.lambda2 = l2 * (pq.p4 - 2 * lambda * pq.p3 + lambda * lambda * pq.p2);
  out.mu1 = pq.q1 - li * pq.q2;
  out.e = CentralTuple{z.c0 - l2 * pq.q2, z.c1, z.c2, z.c3};
  return out;
}

std::pair<PQParams, CentralTuple> dictionary_PQ_inv(const Rational& lambda, const PQDictionary& dict) {
  if (lambda == 0)
    throw ZeroLambda("dictionary_PQ_inv requires lambda != 0");
  const Rational l2 = lambda * lambda;
  PQParams pq;
  pq.p2 = dict.lambda2 - lambda * dict.lambda1 - l2 * dict.alpha;
  pq.p3 = -l2 * (dict.lambda1 + 2 * lambda * dict.alpha);
  pq.p4 = -l2 * lambda * (dict.lambda1 + 3 * lambda * dict.alpha);
  pq.q1 = dict.mu1 + lambda * dict.beta;
  pq.q2 = l2 * dict.beta;
  return {pq, CentralTuple{dict.e.c0 + dict.beta, dict.e.c1, dict.e.c2, dict.e.c3}};
}

// ---------------------------------------------------------------------------

CheckReport basis_transition_check(const OmegaParams& p, const InducedHandle& handle, long degree_cap) {
  if (p.lambda == 0)
    throw ZeroLambda("basis_transition_check requires lambda != 0");
  nlohmann::json params = omega_json(p);
  params["module"] = handle->name();
  params["degree_cap"] = degree_cap;

  const long j = handle->top_free_mode(GenKind::L);
  const Generator top = Generator::L(j + 1);
  params["top_free_mode"] = j;
  GeneratorSplit top_split = handle->split().resolve(top);
  if (handle->split().is_free(top) || !top_split.free_part.is_zero())
    return CheckReport::inconclusive("basis_transition", params,
                                     {{"reason", to_string(top) + " does not act on the cyclic vector by a scalar"}});

  auto om = std::make_shared<OmegaModule>(p);
  TensorModule tens(om, handle);
  const Vector start = Vector::basis(tensor_label({0}, {}));
  const long top_cost = 1 + std::labs(j + 1);

  using Key = std::tuple<long, Label, long>;
  auto key_of = [](const Label& label) {
    auto [a, b] = split_tensor_label(label);
    return Key{PBWMonomial::from_label(b).degree(), b, a.at(0)};
  };

  std::size_t elements = 0;
  for (const auto& mu : graded_basis(*handle, degree_cap)) {
    Vector x = start;
    for (long l = 0; mu.degree() + l * top_cost <= degree_cap; ++l) {
      if (l > 0)
        x = tens.act(top, x);
      Vector image = InducedModule::apply_monomial(tens, mu, x);
      const Label diag = tensor_label({l}, mu.to_label());
      const Rational expected = int_power(p.lambda, (j + 1) * l);
      ++elements;
      if (image.coeff(diag) != expected)
        return CheckReport::fail("basis_transition", params,
                                 {{"kind", "diagonal"},
                                  {"monomial", to_string(mu)},
                                  {"l", l},
                                  {"expected", to_string(expected)},
                                  {"found", to_string(image.coeff(diag))}});
      const Key diag_key = key_of(diag);
      for (const auto& [label, c] : image) {
        if (label == diag)
          continue;
        if (!(key_of(label) < diag_key))
          return CheckReport::fail("basis_transition", params,
                                   {{"kind", "not triangular"},
                                    {"monomial", to_string(mu)},
                                    {"l", l},
                                    {"term", tens.format_label(label)},
                                    {"coefficient", to_string(c)}});
      }
    }
  }
  return CheckReport::pass("basis_transition", params, {{"elements", elements}});
}

// ---------------------------------------------------------------------------

namespace {

const OmegaModule& require_omega_left(const TensorModule& tensor) {
  const auto* om = dynamic_cast<const OmegaModule*>(tensor.left().get());
  if (!om)
    throw std::invalid_argument("vandermonde_extract: left tensor factor must be an Omega module");
  if (om->params().beta == 0)
    throw std::invalid_argument("vandermonde_extract: requires beta != 0");
  return *om;
}

} // namespace

std::vector<Vector> vandermonde_extract(const TensorModule& tensor, const Vector& w, const std::vector<long>& shifts) {
  const OmegaModule& om = require_omega_left(tensor);
  std::set<long> distinct(shifts.begin(), shifts.end());
  if (distinct.size() != shifts.size())
    throw SingularSystem("vandermonde_extract: duplicate shifts make the system singular");
  const std::size_t K = shifts.size();
  if (K == 0)
    throw std::invalid_argument("vandermonde_extract: at least one shift is required");

  long top_degree = -1;
  for (const auto& [label, c] : w) {
    auto [a, b] = split_tensor_label(label);
    top_degree = std::max(top_degree, a.at(0));
    for (long m : shifts)
      if (!tensor.right()->act(Generator::I(m), Vector::basis(b)).is_zero())
        throw std::invalid_argument("vandermonde_extract: I(" + std::to_string(m) + ") does not annihilate " +
                                    tensor.right()->format_label(b));
  }
  if (static_cast<long>(K) < top_degree + 1)
    throw std::invalid_argument("vandermonde_extract: need at least " + std::to_string(top_degree + 1) + " shifts");

  const Rational& lambda = om.params().lambda;
  std::vector<std::vector<Rational>> a(K, std::vector<Rational>(K));
  std::vector<Vector> rhs(K);
  for (std::size_t r = 0; r < K; ++r) {
    const long m = shifts[r];
    for (std::size_t i = 0; i < K; ++i)
      a[r][i] = int_power(Rational(m), static_cast<long>(i));
    rhs[r] = int_power(lambda, -m) * tensor.act(Generator::I(m), w);
  }

  for (std::size_t col = 0; col < K; ++col) {
    std::size_t piv = col;
    while (piv < K && a[piv][col] == 0)
      ++piv;
    if (piv == K)
      throw SingularSystem("vandermonde_extract: singular system");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col])
      x *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < K; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      const Rational f = a[r][col];
      for (std::size_t i = 0; i < K; ++i)
        a[r][i] -= f * a[col][i];
      rhs[r].add_scaled(rhs[col], -f);
    }
  }
  return rhs;
}

std::vector<Vector> vandermonde_components_expected(const TensorModule& tensor, const Vector& w, std::size_t count) {
  const OmegaModule& om = require_omega_left(tensor);
  std::vector<Vector> out(count);
  for (const auto& [label, c] : w) {
    auto [a, b] = split_tensor_label(label);
    const long i = a.at(0);
    for (long k = 0; k <= i && k < static_cast<long>(count); ++k) {
      Rational coef = om.params().beta * binomial(static_cast<unsigned>(i), static_cast<unsigned>(k)) * c;
      if (k % 2 == 1)
        coef = -coef;
      out[k].add(tensor_label({i - k}, b), coef);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

CheckReport module_axiom_check(const Module& module, ModeRange modes, const std::vector<Vector>& samples,
                               std::string name) {
  nlohmann::json params = {{"module", module.name()}, {"modes", {modes.lo, modes.hi}}, {"samples", samples.size()}};
  const auto gens = probe_generators(modes);
  for (const auto& v : samples)
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        Vector defect = commutator_defect(module, gens[a], gens[b], v);
        if (!defect.is_zero())
          return CheckReport::fail(std::move(name), params,
                                   {{"x", to_string(gens[a])},
                                    {"y", to_string(gens[b])},
                                    {"sample", to_json(module, v)},
                                    {"defect", to_json(module, defect)}});
      }
  return CheckReport::pass(std::move(name), params);
}

} // namespace hv
