#include "hv/induced.hpp"
#include "hv/zoo.hpp"

#include "oracles.hpp"

#include <doctest.h>

using hv::Generator;
using hv::Polynomial;
using hv::Rational;
using hv::Vector;

namespace {
Vector poly(const char* text) { return hv::poly_to_vector(hv::parse_polynomial(text)); }
} // namespace

TEST_CASE("actions on Omega") {
  hv::OmegaModule om({2, 1, 3});
  CHECK(om.act(Generator::L(1), poly("1")) == poly("2*t - 2"));
  CHECK(om.act(Generator::I(2), poly("t")) == poly("12*t - 24"));
  CHECK(om.act(Generator::C(1), poly("t^3 + 1")).is_zero());
  CHECK(om.act(hv::Element(), poly("t")).is_zero());
  hv::OmegaModule plain({1, 0, 0});
  CHECK(plain.act(hv::Element(Generator::L(0), 2), poly("1")) == poly("2*t"));
  hv::OmegaModule one({1, 0, 1});
  CHECK(one.act(hv::parse_element("L(1) + I(1)"), poly("1")) == poly("t + 1"));
}

TEST_CASE("commutator defect vanishes") {
  hv::OmegaModule om({Rational(3, 2), Rational(-1, 3), 5});
  for (const char* f : {"1", "t", "t^3 - 2/7*t"})
    CHECK(hv::commutator_defect(om, Generator::L(1), Generator::I(-1), poly(f)).is_zero());

  const hv::HbarModule v = hv::two_dim_fixture(2);
  hv::CalMOmegaModule cm(v, {1, 2, 3});
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n)
      CHECK(hv::commutator_defect(cm, Generator::L(m), Generator::I(n), Vector::basis({1, 2})).is_zero());

  auto vm = hv::verma(Rational(1, 3), {2, Rational(5, 7), 1, 0});
  const Vector u = Vector::basis(hv::parse_monomial("I(-1) L(-2)").to_label());
  CHECK(hv::commutator_defect(*vm, Generator::L(2), Generator::L(-2), hv::InducedModule::cyclic()).is_zero());
  CHECK(hv::commutator_defect(*vm, Generator::L(2), Generator::L(-2), u).is_zero());
}

TEST_CASE("tensor products act diagonally") {
  auto vm = hv::verma(-1, {-1, 0, 0, 0});
  auto t = hv::tensor(hv::omega({1, 1, 1}), vm);
  const Vector start = hv::TensorModule::pure(poly("1"), hv::InducedModule::cyclic());
  CHECK(t->act(Generator::L(1), start) == hv::TensorModule::pure(poly("t - 1"), hv::InducedModule::cyclic()));

  auto fix = hv::tensor(hv::omega({1, -1, 5}), vm);
  CHECK(fix->act(hv::parse_element("L(1) - L(0)"), start) == 2 * start);

  auto a = hv::verma(0, {0, 1, 2, 3});
  auto b = hv::verma(0, {0, 4, 5, 6});
  auto ab = hv::tensor(a, b);
  CHECK(ab->central().c1 == 5);
  CHECK(ab->central().c2 == 7);
  CHECK(ab->central().c3 == 9);

  const auto [l, r] = hv::split_tensor_label(hv::tensor_label({3}, {7, 8, 9}));
  CHECK(l == hv::Label{3});
  CHECK(r == hv::Label{7, 8, 9});
}

TEST_CASE("span closure and invariance") {
  hv::OmegaModule om({1, 0, 0});
  std::set<hv::Label> ambient{{0}, {1}, {2}, {3}};
  CHECK(hv::span_closure(om, {poly("t")}, {-4, 4}, ambient, 50).dimension() == 3);
  CHECK(hv::span_closure(om, {poly("1")}, {-4, 4}, ambient, 50).dimension() == 4);
  CHECK(hv::span_closure(om, {Vector()}, {-4, 4}, ambient, 50).dimension() == 0);

  auto no_constant = [](const Vector& v) { return v.coeff({0}) == 0; };
  CHECK(hv::invariance_check(om, no_constant, {poly("t"), poly("t^2"), poly("t^3")}, {-4, 4}).passed());

  hv::IntermediateSeriesModule a000({0, 0, 0});
  auto on_v0 = [](const Vector& v) { return v.is_zero() || (v.size() == 1 && v.coeff({0}) != 0); };
  CHECK(hv::invariance_check(a000, on_v0, {Vector::basis({0})}, {-4, 4}).passed());

  hv::OmegaModule bad({1, 1, 0});
  const hv::CheckReport r = hv::invariance_check(bad, no_constant, {poly("t")}, {-4, 4});
  CHECK(r.status == hv::Status::Fail);
  CHECK(r.witness.contains("generator"));
}

TEST_CASE("subspace basis stays reduced") {
  hv::SubspaceBasis b;
  CHECK(b.insert(poly("t + 1")));
  CHECK(b.insert(poly("t - 1")));
  CHECK_FALSE(b.insert(poly("3*t")));
  CHECK(b.contains(poly("1")));
  CHECK(b.dimension() == 2);
}
