#include "hv/zoo.hpp"

#include "oracles.hpp"

#include <doctest.h>

using hv::Generator;
using hv::Rational;
using hv::Vector;

namespace {
Vector poly(const char* text) { return hv::poly_to_vector(hv::parse_polynomial(text)); }
} // namespace

TEST_CASE("Omega matches the direct formula") {
  CHECK(hv::OmegaModule({2, 1, 3}).act(Generator::L(-1), poly("t")) == poly("1/2*t^2 + t + 1/2"));
  const std::vector<hv::OmegaParams> params{{1, 0, 0}, {2, 1, 3}, {Rational(-1, 2), Rational(7, 3), Rational(-4)}};
  const oracle::Dense f{Rational(2), Rational(-1, 3), Rational(0), Rational(5)};
  for (const auto& p : params) {
    hv::OmegaModule om(p);
    for (const auto& g : hv::generators_in({-4, 4}))
      CHECK(hv::vector_to_poly(om.act(g, hv::poly_to_vector(oracle::to_poly(f)))) ==
            oracle::to_poly(oracle::omega_act(p, g, f)));
  }
  CHECK_THROWS_AS(hv::OmegaModule({0, 1, 1}), hv::ZeroLambda);
}

TEST_CASE("intermediate series") {
  hv::IntermediateSeriesModule a({Rational(1, 2), 2, 5});
  CHECK(a.act(Generator::L(3), Vector::basis({-1})) == Vector::basis({2}, Rational(11, 2)));
  CHECK(a.act(Generator::I(4), Vector::basis({7})) == Vector::basis({11}, 5));
  hv::IntermediateSeriesModule zero({0, 0, 0});
  for (long m = -4; m <= 4; ++m)
    CHECK(zero.act(Generator::L(m), Vector::basis({0})).is_zero());
  const hv::ASeriesParams p{Rational(2, 3), -1, 4};
  hv::IntermediateSeriesModule b(p);
  for (const auto& g : hv::generators_in({-3, 3}))
    for (long n = -3; n <= 3; ++n) {
      auto [c, target] = oracle::a_series_act(p, g, n);
      CHECK(b.act(g, Vector::basis({n})) == Vector::basis({target}, c));
    }
}

TEST_CASE("finite-dimensional quotient modules") {
  const hv::HbarModule fix = hv::two_dim_fixture(2);
  CHECK(fix.dim() == 2);
  CHECK(fix.r_prime() == 0u);
  CHECK(fix.shape() == hv::QuotientShape(1, 0));

  const hv::HbarModule v = hv::one_dim_V(Rational(1, 3), 4, hv::QuotientShape(0, 0));
  CHECK(v.matrix(Generator::L(0))(0, 0) == Rational(1, 3));
  CHECK(v.matrix(Generator::I(0))(0, 0) == 4);
  const hv::HbarModule w = hv::one_dim_V(2, 0, hv::QuotientShape(2, 1));
  for (long j = 1; j <= 3; ++j)
    CHECK(w.matrix(Generator::I(j)).is_zero());
  CHECK_FALSE(w.r_prime().has_value());

  // [L̄_0, L̄_1] must equal L̄_1; with L̄_0 = 0 it does not
  hv::RationalMatrix l0(2, 2), l1(2, 2);
  l1(0, 1) = 1;
  CHECK_THROWS_AS(hv::hbar_module(hv::QuotientShape(1, 0), 2, {{Generator::L(0), l0}, {Generator::L(1), l1}}),
                  hv::RelationViolation);
}

TEST_CASE("M(V, Omega) and M(V, A)") {
  const hv::HbarModule v12 = hv::one_dim_V(1, 2, hv::QuotientShape(0, 0));
  hv::CalMOmegaModule m(v12, {1, 2, 3});
  CHECK(m.act(Generator::L(1), Vector::basis({0, 0})) == Vector::basis({0, 1}) - Vector::basis({0, 0}));
  CHECK(m.act(Generator::I(4), Vector::basis({0, 0})) == Vector::basis({0, 0}, 6));

  const hv::HbarModule silent = hv::one_dim_V(Rational(5), 0, hv::QuotientShape(1, 1));
  hv::CalMOmegaModule vir(silent, {2, 1, 7});
  for (long mm = -3; mm <= 3; ++mm)
    CHECK(vir.act(Generator::I(mm), Vector::basis({0, 2})).is_zero());

  const Rational sigma(3, 2), tau(-2);
  hv::CalMAModule ma(hv::one_dim_V(sigma, tau, hv::QuotientShape(0, 0)), {Rational(1, 4), 3, 5});
  for (long mm = -3; mm <= 3; ++mm)
    for (long n = -3; n <= 3; ++n) {
      CHECK(ma.act(Generator::L(mm), Vector::basis({0, n})) ==
            Vector::basis({0, n + mm}, Rational(1, 4) + n + Rational(3 * mm) + sigma * mm));
      CHECK(ma.act(Generator::I(mm), Vector::basis({0, n})) == Vector::basis({0, n + mm}, 5 * tau));
    }
  hv::CalMAModule flat(hv::two_dim_fixture(2), {1, 1, 0});
  CHECK(flat.act(Generator::I(2), Vector::basis({1, 0})).is_zero());
}

TEST_CASE("gamma twists") {
  const hv::OmegaParams p{1, Rational(2, 3), 4};
  auto base = hv::omega(p);
  const Rational c(5, 2);
  auto tw = hv::gamma_twist(base, hv::LaurentPolynomial::monomial(0, c));
  for (long m = -3; m <= 3; ++m) {
    const Vector f = poly("t^2 - 1");
    const Vector expected = base->act(Generator::L(m), f) + c * base->act(Generator::I(m), f);
    CHECK(tw->act(Generator::L(m), f) == expected);
    CHECK(tw->act(Generator::I(m), f) == base->act(Generator::I(m), f));
  }
  auto id = hv::gamma_twist(base, hv::LaurentPolynomial());
  for (long m = -3; m <= 3; ++m)
    CHECK(id->act(Generator::L(m), poly("t")) == base->act(Generator::L(m), poly("t")));
  auto wide = hv::gamma_twist(base, hv::parse_laurent("t^-1 + 2 - 3*t^2"));
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n)
      for (const char* f : {"1", "t^2 + t"}) {
        CHECK(hv::commutator_defect(*wide, Generator::L(m), Generator::L(n), poly(f)).is_zero());
        CHECK(hv::commutator_defect(*wide, Generator::L(m), Generator::I(n), poly(f)).is_zero());
      }
}
