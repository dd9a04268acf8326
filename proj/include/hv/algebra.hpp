#pragma once

#include "hv/exactnum.hpp"
#include "hv/report.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hv {

/// Block order used everywhere a canonical ordering is needed: I before L
/// before the central C generators.
enum class GenKind : int { I = 0, L = 1, C = 2 };

/// Basis element L_m, I_m or C_k (k in {1,2,3}) of the twisted
/// Heisenberg-Virasoro algebra. C_0 is I_0.
struct Generator {
  GenKind kind = GenKind::L;
  long index = 0;

  static Generator L(long m) { return {GenKind::L, m}; }
  static Generator I(long m) { return {GenKind::I, m}; }
  /// C(0) canonicalizes to I(0); throws for k outside 0..3.
  static Generator C(long k);

  bool is_central() const { return kind == GenKind::C || (kind == GenKind::I && index == 0); }

  auto operator<=>(const Generator&) const = default;
};

std::string to_string(const Generator& g);
/// Accepts "L(m)", "I(m)", "C(k)".
Generator parse_generator(std::string_view text);

/// A finite linear combination of generators with no stored zeros.
class Element {
public:
  using Terms = std::map<Generator, Rational>;

  Element() = default;
  Element(const Generator& g) { terms_.emplace(g, 1); } // NOLINT(google-explicit-constructor)
  Element(const Generator& g, const Rational& c) { add(g, c); }

  void add(const Generator& g, const Rational& c);
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);

  Rational coeff(const Generator& g) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool operator==(const Element&) const = default;

private:
  Terms terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(const Rational& c, Element a);

/// "coef*gen" terms joined by " + "; "0" for the zero element.
std::string to_string(const Element& x);
Element parse_element(std::string_view text);

using BracketFn = std::function<Element(const Generator&, const Generator&)>;

/// The defining bracket on basis elements.
Element bracket(const Generator& a, const Generator& b);
/// Bilinear extension of `fn` (default: the true bracket).
Element bracket(const Element& x, const Element& y, const BracketFn& fn = {});

struct ModeRange {
  long lo = -4;
  long hi = 4;
  bool contains(long m) const { return lo <= m && m <= hi; }
};

/// All L_m, I_m with m in range, followed by C_1, C_2, C_3.
std::vector<Generator> generators_in(ModeRange range, bool with_central = true);

// ---------------------------------------------------------------------------
// Finite-dimensional quotients of the nonnegative part.

struct QuotientShape {
  unsigned r = 0;
  unsigned d = 0;

  QuotientShape() = default;
  QuotientShape(unsigned r_, unsigned d_);

  /// L̄_0..L̄_r then Ī_d..Ī_{r+d}.
  std::vector<Generator> basis() const;
  bool contains(const Generator& g) const;

  bool operator==(const QuotientShape&) const = default;
};

class QuotientElement {
public:
  explicit QuotientElement(QuotientShape shape) : shape_(shape) {}
  QuotientElement(QuotientShape shape, const Generator& g, const Rational& c = 1);

  void add(const Generator& g, const Rational& c);
  QuotientElement& operator+=(const QuotientElement& other);

  const QuotientShape& shape() const { return shape_; }
  const std::map<Generator, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const QuotientElement&) const = default;

private:
  QuotientShape shape_;
  std::map<Generator, Rational> terms_;
};

class ShapeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Bracket of the quotient: structure constants of H with everything
/// beyond L̄_r, Ī_{r+d} truncated to zero.
QuotientElement quotient_bracket(const QuotientElement& a, const QuotientElement& b);

/// Antisymmetry and Jacobi over all basis triples with modes in `range`.
CheckReport check_jacobi(ModeRange range, const BracketFn& fn = {});
/// The same for the quotient of the given shape.
CheckReport check_jacobi(QuotientShape shape);

} // namespace hv
