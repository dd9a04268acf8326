#include "hv/exactnum.hpp"

#include <cctype>

namespace hv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational rational_from_string(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational literal '" + std::string(text) + "'");

  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0)
    throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
  if (negative)
    p = -p;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1)
    return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned s, unsigned i) {
  if (i > s)
    throw std::domain_error("binomial(" + std::to_string(s) + ", " + std::to_string(i) + "): i > s");
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), s, i);
  return Rational(c);
}

Rational int_power(const Rational& x, long m) {
  if (m == 0)
    return Rational(1);
  if (m < 0) {
    if (x == 0)
      throw DivisionByZero("negative power of zero");
    Rational inv = 1 / x;
    return int_power(inv, -m);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(m));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(m));
  return Rational(num, den);
}

} // namespace hv
