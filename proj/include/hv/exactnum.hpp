#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hv {

/// Exact rational scalar. GMP keeps mpq_class values canonical
/// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Parses "p/q" or an integer literal with optional sign. No decimals.
Rational rational_from_string(std::string_view text);

/// "p/q" in lowest terms, or a bare integer when q = 1.
std::string to_string(const Rational& x);

Rational factorial(unsigned n);

/// s choose i; throws std::domain_error when i > s.
Rational binomial(unsigned s, unsigned i);

/// x^m for any integer m, with 0^0 = 1.
Rational int_power(const Rational& x, long m);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline bool is_canonical(const Rational& x) {
  if (x.get_den() <= 0)
    return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return g == 1;
}

} // namespace hv
