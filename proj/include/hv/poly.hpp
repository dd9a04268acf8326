#pragma once

#include "hv/exactnum.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hv {

class DegreeCapExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

namespace detail {

/// Sparse exponent -> coefficient map shared by both polynomial kinds.
class SparseTerms {
public:
  using Map = std::map<long, Rational>;

  void add(long e, const Rational& c);
  Rational coeff(long e) const;
  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool operator==(const SparseTerms&) const = default;

protected:
  Map terms_;
};

} // namespace detail

/// Polynomial in t with nonnegative exponents. Degree of zero is -inf,
/// represented as std::nullopt.
class Polynomial : public detail::SparseTerms {
public:
  static constexpr long kDefaultDegreeCap = 64;

  Polynomial() = default;
  Polynomial(const Rational& c) { add(0, c); } // NOLINT(google-explicit-constructor)
  static Polynomial monomial(long exponent, const Rational& c = 1);
  static Polynomial t() { return monomial(1); }

  void add(long e, const Rational& c);
  std::optional<long> degree() const;

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Rational& c);

  bool operator==(const Polynomial&) const = default;
};

Polynomial operator+(Polynomial f, const Polynomial& g);
Polynomial operator-(Polynomial f, const Polynomial& g);
Polynomial operator*(const Rational& c, Polynomial f);
Polynomial operator*(const Polynomial& f, const Polynomial& g);

/// Exact product; throws DegreeCapExceeded when the result would exceed `cap`.
Polynomial poly_mul(const Polynomial& f, const Polynomial& g, long cap = Polynomial::kDefaultDegreeCap);

/// f(t - m).
Polynomial shift(const Polynomial& f, long m);

/// J_n^m = (t-n-1)(t-n-2)...(t-n-m); J_n^0 = 1.
Polynomial j_poly(long n, unsigned m);

/// Coordinates c_0..c_deg with f = sum c_k J_n^k. Empty for f = 0.
std::vector<Rational> j_coords(const Polynomial& f, long n);

Rational eval(const Polynomial& f, const Rational& c);

std::string to_string(const Polynomial& f);
Polynomial parse_polynomial(std::string_view text);

/// Element of C[t, t^-1] with rational coefficients.
class LaurentPolynomial : public detail::SparseTerms {
public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(long exponent, const Rational& c = 1);
  bool operator==(const LaurentPolynomial&) const = default;
};

std::string to_string(const LaurentPolynomial& f);
LaurentPolynomial parse_laurent(std::string_view text);

} // namespace hv
