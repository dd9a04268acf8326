#include "hv/poly.hpp"

#include "oracles.hpp"

#include <doctest.h>

using hv::Polynomial;
using hv::Rational;

namespace {
Polynomial P(const char* text) { return hv::parse_polynomial(text); }
} // namespace

TEST_CASE("shift") {
  CHECK(hv::shift(P("t^2"), 3) == P("t^2 - 6*t + 9"));
  CHECK(hv::shift(P("t^3 - t + 2/3"), 0) == P("t^3 - t + 2/3"));
  CHECK(hv::shift(P("t^3 - t"), -1) == P("t^3 + 3*t^2 + 2*t"));
}

TEST_CASE("shift matches a Horner-rule oracle") {
  const oracle::Dense f{Rational(1, 2), Rational(-3), Rational(0), Rational(7, 5), Rational(1)};
  for (long m = -5; m <= 5; ++m) {
    CHECK(hv::shift(oracle::to_poly(f), m) == oracle::to_poly(oracle::shift(f, m)));
    CHECK(hv::shift(hv::shift(oracle::to_poly(f), m), -m) == oracle::to_poly(f));
  }
}

TEST_CASE("products") {
  CHECK(hv::poly_mul(P("t - 1"), P("t + 1")) == P("t^2 - 1"));
  CHECK(hv::poly_mul(Polynomial(), P("t^3 + 2")).is_zero());
  CHECK(hv::poly_mul(P("t^2 + 1"), P("t^2 + 1")) == P("t^4 + 2*t^2 + 1"));
  CHECK_THROWS_AS(hv::poly_mul(P("t^40"), P("t^30")), hv::DegreeCapExceeded);
  CHECK_THROWS_AS(hv::poly_mul(P("t^4"), P("t^3"), 6), hv::DegreeCapExceeded);
  CHECK(hv::poly_mul(P("t^4"), P("t^3"), 7) == P("t^7"));
}

TEST_CASE("J polynomials and coordinates") {
  CHECK(hv::j_poly(0, 2) == P("t^2 - 3*t + 2"));
  CHECK(hv::j_poly(5, 0) == Polynomial(Rational(1)));
  CHECK(hv::j_poly(-2, 3) == P("t^3 - t"));
  CHECK(hv::j_coords(P("t^2 - 3*t + 2"), 0) == std::vector<Rational>{0, 0, 1});
  CHECK(hv::j_coords(Polynomial(Rational(1)), 4) == std::vector<Rational>{1});
  CHECK(hv::j_coords(P("t"), 0) == std::vector<Rational>{1, 1});
  const Polynomial f = P("2/3*t^4 - t^2 + 5");
  for (long n = -3; n <= 3; ++n) {
    const auto c = hv::j_coords(f, n);
    Polynomial back;
    for (std::size_t k = 0; k < c.size(); ++k)
      back += c[k] * hv::j_poly(n, static_cast<unsigned>(k));
    CHECK(back == f);
  }
}

TEST_CASE("evaluation") {
  CHECK(hv::eval(P("t^2 - 3*t + 2"), 1) == 0);
  CHECK(hv::eval(P("t^2 - 3*t + 2"), 0) == 2);
  CHECK(hv::eval(hv::j_poly(0, 3), 4) == 6);
  const oracle::Dense f{Rational(3), Rational(0), Rational(-1, 4), Rational(2)};
  for (int k = -4; k <= 4; ++k)
    CHECK(hv::eval(oracle::to_poly(f), Rational(k, 3)) == oracle::eval(f, Rational(k, 3)));
}

TEST_CASE("parsing and printing round-trip") {
  for (const char* text : {"0", "1", "-t", "3/2*t^5 - t + 7", "t^2"}) {
    const Polynomial f = P(text);
    CHECK(P(hv::to_string(f).c_str()) == f);
  }
  CHECK_THROWS(P("t^-1"));
  CHECK_THROWS(P("2t"));
  const hv::LaurentPolynomial g = hv::parse_laurent("t^-2 + 3 - 1/2*t");
  CHECK(g.coeff(-2) == 1);
  CHECK(g.coeff(0) == 3);
  CHECK(g.coeff(1) == Rational(-1, 2));
  CHECK(hv::parse_laurent(hv::to_string(g)) == g);
}
