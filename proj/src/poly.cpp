#include "hv/poly.hpp"

#include <cctype>

namespace hv {

namespace detail {

void SparseTerms::add(long e, const Rational& c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Rational SparseTerms::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

} // namespace detail

Polynomial Polynomial::monomial(long exponent, const Rational& c) {
  Polynomial p;
  p.add(exponent, c);
  return p;
}

void Polynomial::add(long e, const Rational& c) {
  if (e < 0)
    throw std::invalid_argument("negative exponent in polynomial");
  if (e > kDefaultDegreeCap)
    throw DegreeCapExceeded("polynomial degree " + std::to_string(e) + " exceeds cap " +
                            std::to_string(kDefaultDegreeCap));
  SparseTerms::add(e, c);
}

std::optional<long> Polynomial::degree() const {
  if (terms_.empty())
    return std::nullopt;
  return terms_.rbegin()->first;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  for (const auto& [e, c] : g)
    SparseTerms::add(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  for (const auto& [e, c] : g)
    SparseTerms::add(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0)
    terms_.clear();
  for (auto& [e, v] : terms_)
    v *= c;
  return *this;
}

Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }
Polynomial operator*(const Polynomial& f, const Polynomial& g) { return poly_mul(f, g); }

Polynomial poly_mul(const Polynomial& f, const Polynomial& g, long cap) {
  Polynomial out;
  if (f.is_zero() || g.is_zero())
    return out;
  if (*f.degree() + *g.degree() > cap)
    throw DegreeCapExceeded("product degree " + std::to_string(*f.degree() + *g.degree()) + " exceeds cap " +
                            std::to_string(cap));
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g)
      out.add(a + b, ca * cb);
  return out;
}

Polynomial shift(const Polynomial& f, long m) {
  if (m == 0)
    return f;
  Polynomial out;
  const Rational minus_m(-m);
  for (const auto& [k, c] : f) {
    // (t - m)^k = sum_j C(k, j) t^j (-m)^(k-j)
    for (long j = 0; j <= k; ++j)
      out.add(j, c * binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * int_power(minus_m, k - j));
  }
  return out;
}

Polynomial j_poly(long n, unsigned m) {
  Polynomial out(Rational(1));
  for (long j = n + 1; j <= n + static_cast<long>(m); ++j) {
    Polynomial factor = Polynomial::t();
    factor.add(0, Rational(-j));
    out = poly_mul(out, factor);
  }
  return out;
}

std::vector<Rational> j_coords(const Polynomial& f, long n) {
  if (f.is_zero())
    return {};
  const long deg = *f.degree();
  std::vector<Rational> out(static_cast<std::size_t>(deg + 1));
  Polynomial rest = f;
  // J_n^k is monic of degree k, so peel off the leading term each step.
  for (long k = deg; k >= 0; --k) {
    Rational lead = rest.coeff(k);
    out[static_cast<std::size_t>(k)] = lead;
    if (lead != 0)
      rest -= lead * j_poly(n, static_cast<unsigned>(k));
  }
  return out;
}

Rational eval(const Polynomial& f, const Rational& c) {
  if (f.is_zero())
    return 0;
  Rational acc = 0;
  for (long e = *f.degree(); e >= 0; --e)
    acc = acc * c + f.coeff(e);
  return acc;
}

namespace {

template <class Terms>
std::string format_terms(const Terms& f) {
  if (f.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const long e = it->first;
    Rational c = it->second;
    const bool negative = c < 0;
    if (negative)
      c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (e == 0) {
      out += to_string(c);
      continue;
    }
    if (c != 1)
      out += to_string(c) + "*";
    out += "t";
    if (e != 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

template <class Terms>
void parse_terms(std::string_view text, Terms& out) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty())
    throw ParseError("empty polynomial");

  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^' && s[i - 1] != '*') {
      pieces.push_back(s.substr(start, i - start));
      start = i;
    }
  pieces.push_back(s.substr(start));

  for (auto piece : pieces) {
    Rational sign = 1;
    if (piece[0] == '+' || piece[0] == '-') {
      sign = piece[0] == '-' ? -1 : 1;
      piece.erase(0, 1);
    }
    auto tpos = piece.find('t');
    if (tpos == std::string::npos) {
      out.add(0, sign * rational_from_string(piece));
      continue;
    }
    Rational coef = 1;
    if (tpos > 0) {
      if (piece[tpos - 1] != '*')
        throw ParseError("expected '*' before t in '" + piece + "'");
      coef = rational_from_string(piece.substr(0, tpos - 1));
    }
    long e = 1;
    std::string tail = piece.substr(tpos + 1);
    if (!tail.empty()) {
      if (tail[0] != '^')
        throw ParseError("malformed term '" + piece + "'");
      Rational ex = rational_from_string(tail.substr(1));
      if (!is_integer(ex))
        throw ParseError("non-integer exponent in '" + piece + "'");
      e = ex.get_num().get_si();
    }
    out.add(e, sign * coef);
  }
}

} // namespace

std::string to_string(const Polynomial& f) { return format_terms(f); }

Polynomial parse_polynomial(std::string_view text) {
  Polynomial out;
  try {
    parse_terms(text, out);
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const ParseError*>(&e))
      throw;
    throw ParseError(e.what());
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::monomial(long exponent, const Rational& c) {
  LaurentPolynomial p;
  p.add(exponent, c);
  return p;
}

std::string to_string(const LaurentPolynomial& f) { return format_terms(f); }

LaurentPolynomial parse_laurent(std::string_view text) {
  LaurentPolynomial out;
  parse_terms(text, out);
  return out;
}

} // namespace hv
