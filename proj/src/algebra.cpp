#include "hv/algebra.hpp"

#include <cctype>
#include <stdexcept>

namespace hv {

Generator Generator::C(long k) {
  if (k == 0)
    return I(0);
  if (k < 1 || k > 3)
    throw std::invalid_argument("central generator label must be in 0..3, got " + std::to_string(k));
  return {GenKind::C, k};
}

std::string to_string(const Generator& g) {
  const char* name = g.kind == GenKind::L ? "L" : g.kind == GenKind::I ? "I" : "C";
  return std::string(name) + "(" + std::to_string(g.index) + ")";
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(c);
  return out;
}

long parse_long(const std::string& s, std::string_view context) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size())
    throw ParseError("malformed integer in '" + std::string(context) + "'");
  return v;
}

} // namespace

Generator parse_generator(std::string_view text) {
  std::string s = strip(text);
  if (s.size() < 4 || s[1] != '(' || s.back() != ')')
    throw ParseError("malformed generator '" + std::string(text) + "'");
  long idx = parse_long(s.substr(2, s.size() - 3), text);
  switch (s[0]) {
  case 'L':
    return Generator::L(idx);
  case 'I':
    return Generator::I(idx);
  case 'C':
    try {
      return Generator::C(idx);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  default:
    throw ParseError("unknown generator kind in '" + std::string(text) + "'");
  }
}

void Element::add(const Generator& g, const Rational& c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [g, c] : other.terms_)
    add(g, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [g, c] : other.terms_)
    add(g, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_)
    v *= c;
  return *this;
}

Rational Element::coeff(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(const Rational& c, Element a) { return a *= c; }

std::string to_string(const Element& x) {
  if (x.is_zero())
    return "0";
  std::string out;
  for (const auto& [g, c] : x) {
    if (!out.empty())
      out += " + ";
    out += hv::to_string(c) + "*" + to_string(g);
  }
  return out;
}

Element parse_element(std::string_view text) {
  std::string s = strip(text);
  if (s == "0")
    return {};
  if (s.empty())
    throw ParseError("empty element");
  std::vector<std::string> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(')
      ++depth;
    else if (c == ')')
      --depth;
    else if ((c == '+' || c == '-') && depth == 0 && i > start && s[i - 1] != '*') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));

  Element out;
  for (auto term : terms) {
    Rational sign = 1;
    if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      if (term[0] == '-')
        sign = -1;
      term.erase(0, 1);
    }
    auto star = term.find('*');
    Rational coef = 1;
    std::string gen = term;
    if (star != std::string::npos) {
      coef = rational_from_string(term.substr(0, star));
      gen = term.substr(star + 1);
    }
    out.add(parse_generator(gen), sign * coef);
  }
  return out;
}

Element bracket(const Generator& a, const Generator& b) {
  Element out;
  if (a.kind == GenKind::C || b.kind == GenKind::C)
    return out;
  const long m = a.index;
  const long n = b.index;
  const bool opposite = m + n == 0;
  if (a.kind == GenKind::L && b.kind == GenKind::L) {
    out.add(Generator::L(m + n), Rational(n - m));
    if (opposite)
      out.add(Generator::C(1), Rational(m * m * m - m) / 12);
  } else if (a.kind == GenKind::L && b.kind == GenKind::I) {
    out.add(Generator::I(m + n), Rational(n));
    if (opposite)
      out.add(Generator::C(2), Rational(m * m + m));
  } else if (a.kind == GenKind::I && b.kind == GenKind::L) {
    // [I_m, L_n] = -[L_n, I_m]
    out.add(Generator::I(m + n), Rational(-m));
    if (opposite)
      out.add(Generator::C(2), Rational(-(n * n + n)));
  } else if (opposite) {
    out.add(Generator::C(3), Rational(n));
  }
  return out;
}

Element bracket(const Element& x, const Element& y, const BracketFn& fn) {
  Element out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      Element ab = fn ? fn(a, b) : bracket(a, b);
      out += (ca * cb) * std::move(ab);
    }
  return out;
}

std::vector<Generator> generators_in(ModeRange range, bool with_central) {
  std::vector<Generator> out;
  for (long m = range.lo; m <= range.hi; ++m)
    out.push_back(Generator::L(m));
  for (long m = range.lo; m <= range.hi; ++m)
    out.push_back(Generator::I(m));
  if (with_central)
    for (long k = 1; k <= 3; ++k)
      out.push_back(Generator::C(k));
  return out;
}

// ---------------------------------------------------------------------------

QuotientShape::QuotientShape(unsigned r_, unsigned d_) : r(r_), d(d_) {
  if (d > 1)
    throw std::invalid_argument("quotient shape requires d in {0,1}");
}

std::vector<Generator> QuotientShape::basis() const {
  std::vector<Generator> out;
  for (unsigned i = 0; i <= r; ++i)
    out.push_back(Generator::L(static_cast<long>(i)));
  for (unsigned i = 0; i <= r; ++i)
    out.push_back(Generator::I(static_cast<long>(i + d)));
  return out;
}

bool QuotientShape::contains(const Generator& g) const {
  const long r_ = static_cast<long>(r);
  const long d_ = static_cast<long>(d);
  if (g.kind == GenKind::L)
    return 0 <= g.index && g.index <= r_;
  if (g.kind == GenKind::I)
    return d_ <= g.index && g.index <= r_ + d_;
  return false;
}

QuotientElement::QuotientElement(QuotientShape shape, const Generator& g, const Rational& c) : shape_(shape) {
  add(g, c);
}

void QuotientElement::add(const Generator& g, const Rational& c) {
  if (!shape_.contains(g))
    throw std::out_of_range(to_string(g) + " is not a generator of the quotient");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

QuotientElement& QuotientElement::operator+=(const QuotientElement& other) {
  if (!(other.shape_ == shape_))
    throw ShapeMismatch("quotient elements of different shapes");
  for (const auto& [g, c] : other.terms_)
    add(g, c);
  return *this;
}

QuotientElement quotient_bracket(const QuotientElement& a, const QuotientElement& b) {
  if (!(a.shape() == b.shape()))
    throw ShapeMismatch("quotient_bracket: shapes differ");
  QuotientElement out(a.shape());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms())
      for (const auto& [g, c] : bracket(x, y))
        if (a.shape().contains(g))
          out.add(g, cx * cy * c);
  // Central coefficients vanish for nonnegative modes.
  return out;
}

namespace {

nlohmann::json triple_json(const Generator& a, const Generator& b, const Generator& c) {
  return nlohmann::json::array({to_string(a), to_string(b), to_string(c)});
}

} // namespace

CheckReport check_jacobi(ModeRange range, const BracketFn& fn) {
  const nlohmann::json params = {{"modes", {range.lo, range.hi}}, {"algebra", "H"}};
  const auto basis = generators_in(range);
  auto br = [&](const Generator& a, const Generator& b) { return fn ? fn(a, b) : bracket(a, b); };

  for (const auto& a : basis)
    for (const auto& b : basis) {
      Element sum = br(a, b) + br(b, a);
      if (!sum.is_zero())
        return CheckReport::fail("jacobi", params,
                                 {{"kind", "antisymmetry"},
                                  {"pair", {to_string(a), to_string(b)}},
                                  {"defect", to_string(sum)}});
    }

  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        Element j = bracket(Element(a), br(b, c), fn) + bracket(Element(b), br(c, a), fn) +
                    bracket(Element(c), br(a, b), fn);
        if (!j.is_zero())
          return CheckReport::fail("jacobi", params,
                                   {{"kind", "jacobi"}, {"triple", triple_json(a, b, c)}, {"defect", to_string(j)}});
      }
  return CheckReport::pass("jacobi", params, {{"basis_size", basis.size()}});
}

CheckReport check_jacobi(QuotientShape shape) {
  const nlohmann::json params = {{"algebra", "Hbar"}, {"r", shape.r}, {"d", shape.d}};
  const auto basis = shape.basis();
  auto br = [&](const QuotientElement& x, const QuotientElement& y) { return quotient_bracket(x, y); };
  auto gen = [&](const Generator& g) { return QuotientElement(shape, g); };

  for (const auto& a : basis)
    for (const auto& b : basis) {
      QuotientElement s = br(gen(a), gen(b));
      s += br(gen(b), gen(a));
      if (!s.is_zero())
        return CheckReport::fail("jacobi", params,
                                 {{"kind", "antisymmetry"}, {"pair", {to_string(a), to_string(b)}}});
    }
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        QuotientElement j = br(gen(a), br(gen(b), gen(c)));
        j += br(gen(b), br(gen(c), gen(a)));
        j += br(gen(c), br(gen(a), gen(b)));
        if (!j.is_zero())
          return CheckReport::fail("jacobi", params, {{"kind", "jacobi"}, {"triple", triple_json(a, b, c)}});
      }
  return CheckReport::pass("jacobi", params, {{"basis_size", basis.size()}});
}

} // namespace hv
