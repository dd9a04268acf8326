#include "hv/algebra.hpp"

#include <doctest.h>

using hv::Element;
using hv::Generator;
using hv::Rational;

namespace {

/// The structure constants written out directly.
Element reference_bracket(const Generator& a, const Generator& b) {
  Element out;
  if (a.kind == hv::GenKind::C || b.kind == hv::GenKind::C)
    return out;
  const long m = a.index, n = b.index;
  const bool dual = m + n == 0;
  using K = hv::GenKind;
  if (a.kind == K::L && b.kind == K::L) {
    out.add(Generator::L(m + n), Rational(n - m));
    if (dual)
      out.add(Generator::C(1), Rational(m * m * m - m) / 12);
  } else if (a.kind == K::L && b.kind == K::I) {
    out.add(Generator::I(m + n), Rational(n));
    if (dual)
      out.add(Generator::C(2), Rational(m * m + m));
  } else if (a.kind == K::I && b.kind == K::L) {
    out.add(Generator::I(m + n), Rational(-m));
    if (dual)
      out.add(Generator::C(2), -Rational(n * n + n));
  } else if (dual) {
    out.add(Generator::C(3), Rational(n));
  }
  return out;
}

} // namespace

TEST_CASE("bracket values on basis pairs") {
  CHECK(hv::bracket(Generator::L(2), Generator::L(-2)) ==
        Element(Generator::L(0), -4) + Element(Generator::C(1), Rational(1, 2)));
  CHECK(hv::bracket(Generator::L(3), Generator::I(-3)) ==
        Element(Generator::I(0), -3) + Element(Generator::C(2), 12));
  CHECK(hv::bracket(Generator::I(5), Generator::I(-5)) == Element(Generator::C(3), -5));
  CHECK(hv::bracket(Generator::C(1), Generator::L(7)).is_zero());
  CHECK(Generator::C(0) == Generator::I(0));
  CHECK_THROWS(Generator::C(4));
}

TEST_CASE("bracket agrees with the structure constants on [-6,6]") {
  const auto gens = hv::generators_in({-6, 6});
  for (const auto& a : gens)
    for (const auto& b : gens)
      REQUIRE_MESSAGE(hv::bracket(a, b) == reference_bracket(a, b), hv::to_string(a) << ", " << hv::to_string(b));
}

TEST_CASE("elements parse and print") {
  const Element x = hv::parse_element("2*L(1) - 1/3*I(-2) + C(3)");
  CHECK(x.coeff(Generator::L(1)) == 2);
  CHECK(x.coeff(Generator::I(-2)) == Rational(-1, 3));
  CHECK(x.coeff(Generator::C(3)) == 1);
  CHECK(hv::parse_element(hv::to_string(x)) == x);
  CHECK(hv::to_string(Element()) == "0");
  CHECK((x - x).is_zero());
}

TEST_CASE("quotient brackets truncate beyond the shape") {
  const hv::QuotientShape s10(1, 0);
  using QE = hv::QuotientElement;
  CHECK(hv::quotient_bracket(QE(s10, Generator::L(0)), QE(s10, Generator::I(1))) == QE(s10, Generator::I(1)));
  CHECK(hv::quotient_bracket(QE(s10, Generator::L(1)), QE(s10, Generator::I(1))).is_zero());
  const hv::QuotientShape s21(2, 1);
  CHECK(hv::quotient_bracket(QE(s21, Generator::L(1)), QE(s21, Generator::L(1))).is_zero());
  CHECK(s21.basis().size() == 6);
  CHECK_FALSE(s21.contains(Generator::I(0)));
}

TEST_CASE("Jacobi identity") {
  CHECK(hv::check_jacobi(hv::ModeRange{-6, 6}).passed());
  CHECK(hv::check_jacobi(hv::QuotientShape(2, 0)).passed());
  for (unsigned r = 0; r <= 3; ++r)
    for (unsigned d = 0; d <= 1; ++d)
      CHECK(hv::check_jacobi(hv::QuotientShape(r, d)).passed());
}

TEST_CASE("a corrupted bracket table is caught with a witness triple") {
  auto corrupted = [](const Generator& a, const Generator& b) {
    Element e = hv::bracket(a, b);
    if (a == Generator::L(1) && b == Generator::L(2))
      e.add(Generator::L(3), 1);
    if (a == Generator::L(2) && b == Generator::L(1))
      e.add(Generator::L(3), -1);
    return e;
  };
  const hv::CheckReport r = hv::check_jacobi(hv::ModeRange{-3, 3}, corrupted);
  CHECK(r.status == hv::Status::Fail);
  CHECK(r.witness.is_object());
  CHECK_FALSE(r.witness.empty());
}
