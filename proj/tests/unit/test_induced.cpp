#include "hv/induced.hpp"

#include "oracles.hpp"

#include <doctest.h>

using hv::Generator;
using hv::Rational;
using hv::Vector;

namespace {

Vector mono(const char* text, const Rational& c = 1) { return Vector::basis(hv::parse_monomial(text).to_label(), c); }

const Vector vbar = hv::InducedModule::cyclic();

std::vector<std::string> texts(const std::vector<hv::PBWMonomial>& basis) {
  std::vector<std::string> out;
  for (const auto& m : basis)
    out.push_back(hv::to_string(m));
  return out;
}

} // namespace

TEST_CASE("PBW monomials") {
  const hv::PBWMonomial m = hv::parse_monomial("I(-2)^2 L(-1)");
  CHECK(m.is_canonical());
  CHECK(hv::to_string(m) == "I(-2)^2 L(-1)");
  CHECK(m.degree() == 8);
  CHECK(hv::PBWMonomial::from_label(m.to_label()) == m);
  CHECK(hv::to_string(hv::parse_monomial("1")) == "1");
  CHECK_THROWS(hv::parse_monomial("L(-1) I(-2)"));
}

TEST_CASE("Verma module straightening") {
  const Rational h(2, 3);
  const hv::CentralTuple d{Rational(-1, 2), 3, 5, 0};
  auto vm = hv::verma(h, d);
  CHECK(vm->act(Generator::L(1), mono("L(-1)")) == -2 * h * vbar);
  CHECK(vm->act(Generator::L(2), mono("L(-1)^2")) == 6 * h * vbar);
  CHECK(vm->act(Generator::I(1), mono("L(-1)")) == -d.c0 * vbar);
  CHECK(vm->act(Generator::L(3), vbar).is_zero());
  // [L_0, L_{-2}] = -2 L_{-2}, so L_{-2} lowers the L_0-eigenvalue by 2
  CHECK(vm->act(Generator::L(0), mono("L(-2)")) == (h - 2) * mono("L(-2)"));
  CHECK(oracle::naive_apply(*vm, {Generator::L(0), Generator::L(-2)}) == (h - 2) * mono("L(-2)"));
  CHECK(vm->act(Generator::C(2), mono("I(-1) L(-3)")) == 5 * mono("I(-1) L(-3)"));
  CHECK(vm->act(Generator::L(-1), mono("L(-2)")) == mono("L(-2) L(-1)") - mono("L(-3)"));
}

TEST_CASE("Whittaker module straightening") {
  const Rational l1(3), l2(-2, 5), mu1(7);
  const hv::CentralTuple e{Rational(1, 3), 0, 2, 0};
  auto wm = hv::whittaker(l1, l2, mu1, e);
  CHECK(wm->act(Generator::I(1), mono("L(-1)")) == mu1 * mono("L(-1)") - e.c0 * vbar);
  CHECK(wm->act(Generator::L(2), vbar) == l2 * vbar);
  CHECK(wm->act(Generator::L(5), vbar).is_zero());
  CHECK(wm->act(Generator::L(3), mono("L(0)")).is_zero());
}

TEST_CASE("ind_lambda0 and ind_lambda1 characters") {
  const Rational lam(3, 2);
  const hv::RSParams rs{2, -1, Rational(1, 4), 5};
  auto a = hv::ind_lambda0(lam, rs, {0, 1, 2, 0});
  CHECK(a->act(Generator::L(1), vbar) == rs.r1 * vbar + lam * mono("L(0)"));
  CHECK(a->act(Generator::I(3), vbar) == lam * lam * rs.s1 * vbar);
  CHECK(a->act(hv::Element(Generator::L(3)) - hv::Element(Generator::L(0), lam * lam * lam), vbar) ==
        (2 * lam * rs.r2 - lam * lam * rs.r1) * vbar);

  const hv::PQParams pq{1, 2, 3, Rational(1, 2), -4};
  auto b = hv::ind_lambda1(lam, pq, {Rational(2, 7), 0, 1, 0});
  CHECK(b->act(Generator::L(2), vbar) == pq.p2 * vbar + lam * mono("L(1)"));
  CHECK(b->act(Generator::I(5), vbar) == lam * lam * lam * pq.q2 * vbar);
  CHECK(b->act(hv::Element(Generator::L(5)) - hv::Element(Generator::L(1), hv::int_power(lam, 4)), vbar) ==
        (2 * lam * pq.p4 - lam * lam * pq.p3) * vbar);
  CHECK(b->act(Generator::I(0), vbar) == Rational(2, 7) * vbar);
  CHECK_THROWS(hv::ind_lambda0(0, rs, {}));
}

TEST_CASE("graded bases") {
  auto vm = hv::verma(0, {});
  CHECK(texts(hv::graded_basis(*vm, 2)) == std::vector<std::string>{"1", "I(-1)", "L(-1)"});
  CHECK(texts(hv::graded_basis(*vm, 0)) == std::vector<std::string>{"1"});
  auto a = hv::ind_lambda0(1, {}, {});
  CHECK(texts(hv::graded_basis(*a, 1)) == std::vector<std::string>{"1", "L(0)"});
  // partitions into parts 2,3,... with two colours, weighted by 1 + |mode|
  CHECK(hv::graded_basis(*vm, 4).size() == 1 + 2 + 2 + 5);
}

TEST_CASE("straightening agrees with naive rewriting") {
  std::vector<hv::InducedHandle> handles{
      hv::verma(Rational(-3, 2), {1, Rational(1, 2), -2, 3}),
      hv::whittaker(2, Rational(-1, 3), 4, {Rational(5, 2), 1, -1, 2}),
      hv::ind_lambda0(Rational(2, 3), {1, -2, 3, Rational(1, 2)}, {0, 2, -1, 0}),
      hv::ind_lambda1(-2, {1, Rational(-3, 4), 2, 5, -1}, {Rational(1, 3), 1, 2, 0}),
  };
  for (const auto& h : handles) {
    for (const auto& m : hv::graded_basis(*h, 4))
      for (const auto& g : hv::generators_in({-3, 3}))
        REQUIRE_MESSAGE(h->act(g, Vector::basis(m.to_label())) == oracle::naive_act(*h, g, m),
                        h->name() << ": " << hv::to_string(g) << " on " << hv::to_string(m));
  }
}

TEST_CASE("the rewrite budget is enforced") {
  auto vm = hv::verma(1, {1, 1, 1, 1}, 5);
  CHECK_THROWS_AS(vm->act(Generator::L(4), mono("L(-1)^4")), hv::RewriteBudgetExceeded);
  try {
    vm->act(Generator::L(4), mono("L(-1)^4"));
  } catch (const hv::RewriteBudgetExceeded& e) {
    CHECK(std::string(e.what()).find("applying L(4) to L(-1)^4") != std::string::npos);
  }
}

TEST_CASE("invalid characters are rejected") {
  hv::SplitDatum s;
  s.name = "bogus";
  s.is_free = [](const Generator& g) { return g.index < 0; };
  s.resolve = [](const Generator& g) {
    return hv::GeneratorSplit{{}, g == Generator::L(0) ? Rational(1) : Rational(0)};
  };
  s.subalgebra_basis = [](long max_mode) {
    std::vector<hv::Element> out;
    for (long m = 0; m <= max_mode; ++m) {
      out.emplace_back(Generator::L(m));
      out.emplace_back(Generator::I(m));
    }
    return out;
  };
  s.central = {Rational(0), 0, 0, 0};
  CHECK(hv::validate_character(s, 4).passed());
  s.resolve = [](const Generator& g) { return hv::GeneratorSplit{{}, g == Generator::L(2) ? Rational(1) : Rational(0)}; };
  CHECK(hv::validate_character(s, 4).status == hv::Status::Fail);
  CHECK_THROWS(hv::InducedModule(s));
}
