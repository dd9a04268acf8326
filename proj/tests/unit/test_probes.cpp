#include "hv/probes.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using hv::Generator;
using hv::Rational;
using hv::Vector;

namespace {

Vector poly(const char* text) { return hv::poly_to_vector(hv::parse_polynomial(text)); }
Vector mono(const char* text, const Rational& c = 1) { return Vector::basis(hv::parse_monomial(text).to_label(), c); }
Vector one_tensor_vbar() { return Vector::basis(hv::tensor_label({0}, {})); }

/// sum_i (-1)^(s-i) C(s,i) I_{l-m-i} I_{m+i} v, term by term.
Vector t_reference(const hv::Module& mod, long l, long m, unsigned s, const Vector& v) {
  Vector out;
  for (unsigned i = 0; i <= s; ++i) {
    const Rational sign = (s - i) % 2 == 0 ? 1 : -1;
    Vector inner = mod.act(Generator::I(m + static_cast<long>(i)), v);
    out.add_scaled(mod.act(Generator::I(l - m - static_cast<long>(i)), inner), sign * hv::binomial(s, i));
  }
  return out;
}

} // namespace

TEST_CASE("T operators") {
  hv::OmegaModule om({Rational(2, 3), Rational(1, 2), -3});
  for (long l = -4; l <= 4; ++l)
    for (long m = -4; m <= 4; ++m) {
      CHECK(hv::t_apply(om, {l, m, 1}, poly("t^2 - 1")).is_zero());
      CHECK(hv::t_apply(om, {l, m, 3}, poly("t^2 - 1")) == t_reference(om, l, m, 3, poly("t^2 - 1")));
    }
  hv::OmegaModule two({1, Rational(5, 3), 2});
  for (long l = -3; l <= 3; ++l)
    CHECK(hv::t_apply(two, {l, 1, 0}, poly("t^3 + t")) ==
          hv::poly_to_vector(4 * hv::shift(hv::parse_polynomial("t^3 + t"), l)));

  hv::CalMOmegaModule cm(hv::two_dim_fixture(2), {1, 0, 3});
  for (long l = -3; l <= 3; ++l) {
    Vector want;
    for (const auto& [e, c] : hv::shift(hv::parse_polynomial("t^2"), l))
      want.add({1, e}, 36 * c);
    CHECK(hv::t_apply(cm, {l, 2, 0}, Vector::basis({1, 2})) == want);
  }

  auto t = hv::tensor(hv::omega({1, 0, 2}), hv::verma(0, {}));
  const Vector img = hv::t_apply(*t, {-7, -3, 1}, one_tensor_vbar());
  CHECK(img == t_reference(*t, -7, -3, 1, one_tensor_vbar()));
  CHECK(img.coeff(hv::tensor_label({0}, hv::parse_monomial("I(-5) I(-2)").to_label())) == 1);
  CHECK(img.coeff(hv::tensor_label({0}, hv::parse_monomial("I(-4) I(-3)").to_label())) == -1);
}

TEST_CASE("nilpotency probe") {
  auto vm = hv::verma(Rational(1, 2), {1, 0, 0, 0});
  // L_3 L_{-1} v = [L_3, L_{-1}] v = -4 L_2 v = 0
  CHECK(oracle::naive_apply(*vm, {Generator::L(3), Generator::L(-1)}).is_zero());
  hv::CheckReport r = hv::nilpotency_probe(*vm, hv::Element(Generator::L(3)), mono("L(-1)"), 10);
  CHECK(r.passed());
  CHECK(r.witness["k"] == 1);

  // L_1 L_{-1}^n v = -n(2h - n + 1) L_{-1}^{n-1} v, which vanishes at n = 2 when h = 1/2
  CHECK(oracle::naive_apply(*vm, {Generator::L(1), Generator::L(-1), Generator::L(-1), Generator::L(-1)}) ==
        mono("L(-1)^2", 3));
  r = hv::nilpotency_probe(*vm, hv::Element(Generator::L(1)), mono("L(-1)^3"), 10);
  CHECK(r.passed());
  CHECK(r.witness["k"] == 2);

  hv::OmegaModule om({1, 1, 1});
  r = hv::nilpotency_probe(om, hv::Element(Generator::L(2)), poly("1"), 10);
  CHECK(r.status == hv::Status::Inconclusive);

  auto t = hv::tensor(hv::omega({1, 0, 2}), hv::verma(0, {}));
  r = hv::nilpotency_probe(*t, hv::TOperator{9, 4, 1}, one_tensor_vbar(), 3);
  CHECK(r.passed());
  CHECK(r.witness["k"] == 1);
  CHECK_THROWS(hv::nilpotency_probe(om, hv::Element(Generator::L(2)), poly("1"), 0));
}

TEST_CASE("annihilation bounds") {
  auto vm = hv::verma(0, {1, 0, 0, 0});
  CHECK(hv::annihilation_bound(*vm, hv::InducedModule::cyclic()) == 1);
  // I_3 L_{-3} v = -(3 I_0 + 6 C_2) v = -3 v
  CHECK(hv::annihilation_bound(*vm, mono("L(-3)")) == 4);
  CHECK(hv::annihilation_bound(*vm, mono("I(-2)")) == 1);
  CHECK(hv::annihilation_bound(*hv::verma(0, {}), hv::InducedModule::cyclic()) == 0);
  hv::OmegaModule om({1, 0, 1});
  CHECK_FALSE(hv::annihilation_bound(om, poly("1")).has_value());
}

TEST_CASE("weighting functor") {
  // e_2(L_1 . 1) = e_2(2(t - 3)) = -2 and lambda (n + m(1 - alpha)) = 2 (1 - 2) = -2
  CHECK(hv::eval(hv::vector_to_poly(hv::OmegaModule({2, 3, 5}).act(Generator::L(1), poly("1"))), 2) == -2);
  CHECK(hv::weighting_check({2, 3, 5}, {-4, 4}, 5).passed());
  CHECK(hv::weighting_check({Rational(-1, 3), 0, 0}, {-4, 4}, 4, {hv::parse_polynomial("t^2 + 1/2")}).passed());
  CHECK_THROWS_AS(hv::weighting_check({0, 1, 1}, {-1, 1}, 1), hv::ZeroLambda);
  CHECK(hv::weighting_calM_check(hv::two_dim_fixture(2), {3, 1, 2}, {-3, 3}, 4).passed());
  CHECK(hv::weighting_calM_check(hv::one_dim_V(2, 5, {0, 0}), {Rational(1, 2), 1, -1}, {-3, 3}, 3).passed());
}

TEST_CASE("parameter dictionaries") {
  const hv::RSDictionary d = hv::dictionary_RS(1, {2, 3, 4, 5}, {});
  CHECK(d.alpha == -1);
  CHECK(d.beta == 5);
  CHECK(d.h == -1);
  CHECK(d.d.c0 == -1);
  const hv::RSDictionary corner = hv::dictionary_RS(2, {0, 0, 7, 0}, {});
  CHECK(corner.alpha == 0);
  CHECK(corner.beta == 0);

  const hv::PQDictionary q = hv::dictionary_PQ(1, {1, 2, 3, 0, 0}, {});
  CHECK(q.alpha == -1);
  CHECK(q.lambda1 == 0);
  CHECK(q.lambda2 == 0);
  CHECK(hv::dictionary_PQ(Rational(3, 2), {1, 1, 1, 2, 3}, {}).mu1 == 0);

  std::mt19937_64 gen(11);
  auto r = [&]() -> Rational { return Rational(static_cast<long>(gen() % 19) - 9) / static_cast<long>(gen() % 5 + 1); };
  for (int i = 0; i < 20; ++i) {
    Rational lam = r();
    while (lam == 0)
      lam = r();
    const hv::RSParams rs{r(), r(), r(), r()};
    const hv::CentralTuple y{0, r(), r(), 0};
    auto [rs2, y2] = hv::dictionary_RS_inv(lam, hv::dictionary_RS(lam, rs, y));
    CHECK((rs2.r1 == rs.r1 && rs2.r2 == rs.r2 && rs2.s0 == rs.s0 && rs2.s1 == rs.s1));
    CHECK((y2.c1 == y.c1 && y2.c2 == y.c2));
    const hv::PQParams pq{r(), r(), r(), r(), r()};
    const hv::CentralTuple z{r(), r(), r(), 0};
    auto [pq2, z2] = hv::dictionary_PQ_inv(lam, hv::dictionary_PQ(lam, pq, z));
    CHECK((pq2.p2 == pq.p2 && pq2.p3 == pq.p3 && pq2.p4 == pq.p4 && pq2.q1 == pq.q1 && pq2.q2 == pq.q2));
    CHECK((z2.c0 == z.c0 && z2.c1 == z.c1 && z2.c2 == z.c2));
  }
  CHECK_THROWS_AS(hv::dictionary_RS(0, {}, {}), hv::ZeroLambda);
}

TEST_CASE("intertwiners") {
  for (unsigned d = 0; d <= 1; ++d) {
    const Rational sigma(1, 3), tau(4);
    const hv::OmegaParams p{2, Rational(-1, 2), 3};
    hv::CalMOmegaModule src(hv::one_dim_V(sigma, d == 0 ? tau : Rational(0), hv::QuotientShape(0, d)), p);
    hv::OmegaModule dst({p.lambda, p.alpha - sigma, d == 0 ? p.beta * tau : Rational(0)});
    std::vector<hv::Label> samples;
    for (long k = 0; k <= 5; ++k)
      samples.push_back({0, k});
    auto drop_index = [](const hv::Label& l) -> std::optional<Vector> { return Vector::basis({l.at(1)}); };
    CHECK(hv::intertwiner_check(src, dst, drop_index, {-4, 4}, samples).passed());
  }

  const Rational lam = 1;
  const hv::RSParams rs{2, 3, 4, 5};
  auto source = hv::ind_lambda0(lam, rs, {});
  const hv::RSDictionary dict = hv::dictionary_RS(lam, rs, {});
  CHECK(dict.h == -1);
  auto target = hv::tensor(hv::omega({1, -1, 5}), hv::verma(-1, {-1, 0, 0, 0}));
  std::vector<hv::Label> samples;
  for (const auto& m : hv::graded_basis(*source, 3))
    samples.push_back(m.to_label());
  CHECK(hv::intertwiner_check(*source, *target, hv::monomial_map(target, one_tensor_vbar()), {-3, 3}, samples)
            .passed());

  auto wrong = hv::tensor(hv::omega({1, -1, 5}), hv::verma(0, {-1, 0, 0, 0}));
  const hv::CheckReport r =
      hv::intertwiner_check(*source, *wrong, hv::monomial_map(wrong, one_tensor_vbar()), {-3, 3}, samples);
  CHECK(r.status == hv::Status::Fail);
  CHECK(r.witness["generator"] == "L(1)");

  hv::OmegaModule om({1, 0, 1});
  auto partial = [](const hv::Label& l) -> std::optional<Vector> {
    if (l.at(0) > 0)
      return std::nullopt;
    return Vector::basis(l);
  };
  CHECK_THROWS_AS(hv::intertwiner_check(om, om, partial, {-1, 1}, {{0}}), hv::UndefinedLabel);
}

TEST_CASE("basis transition triangularity") {
  CHECK(hv::basis_transition_check({1, 1, 1}, hv::verma(0, {}), 4).passed());
  CHECK(hv::basis_transition_check({2, Rational(1, 2), 3}, hv::verma(Rational(1, 3), {1, 2, 3, 0}), 3).passed());
  CHECK(hv::basis_transition_check({2, 1, 1}, hv::verma(0, {}), 0).passed());
  CHECK(hv::basis_transition_check({Rational(-3, 2), 2, 1}, hv::whittaker(1, 2, 3, {1, 0, 0, 0}), 4).passed());

  auto t = hv::tensor(hv::omega({1, 1, 1}), hv::verma(0, {}));
  const Vector sq = t->act(Generator::L(0), t->act(Generator::L(0), one_tensor_vbar()));
  CHECK(sq.coeff(hv::tensor_label({2}, {})) == 1);
}

TEST_CASE("Vandermonde extraction") {
  auto t = hv::tensor(hv::omega({1, 0, 2}), hv::verma(0, {}));
  const auto& tm = dynamic_cast<const hv::TensorModule&>(*t);
  const Vector w = one_tensor_vbar() + Vector::basis(hv::tensor_label({1}, {}));
  const auto parts = hv::vandermonde_extract(tm, w, {5, 6});
  REQUIRE(parts.size() == 2);
  // I_m (1 + t) (x) v = 2 (1 + t - m) (x) v
  CHECK(parts[0] == 2 * w);
  CHECK(parts[1] == -2 * one_tensor_vbar());
  CHECK(hv::vandermonde_components_expected(tm, w, 2) == parts);

  const auto single = hv::vandermonde_extract(tm, one_tensor_vbar(), {4});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 2 * one_tensor_vbar());
  CHECK_THROWS_AS(hv::vandermonde_extract(tm, w, {5, 5}), hv::SingularSystem);
  CHECK_THROWS(hv::vandermonde_extract(tm, w, {5}));
}

TEST_CASE("module axioms across the zoo") {
  std::vector<hv::ModuleHandle> mods{
      hv::omega({2, 1, 3}),
      hv::intermediate_series({Rational(1, 2), 2, 5}),
      hv::calM_omega(hv::two_dim_fixture(3), {Rational(1, 2), 1, -2}),
      hv::calM_A(hv::two_dim_fixture(3), {Rational(1, 3), 1, -2}),
      hv::gamma_twist(hv::omega({1, 1, 1}), hv::parse_laurent("t^-1 + 2*t")),
  };
  for (const auto& m : mods) {
    std::vector<Vector> samples;
    for (long k = 0; k <= 2; ++k)
      samples.push_back(m->valid_label({k}) ? Vector::basis({k}) : Vector::basis({0, k}));
    CHECK_MESSAGE(hv::module_axiom_check(*m, {-3, 3}, samples).passed(), m->name());
  }
}
