#pragma once

#include "hv/algebra.hpp"
#include "hv/report.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hv {

/// Basis label of a concrete module. Each module family fixes an encoding:
/// {k} for t^k, {n} for v_n, {i, k} for e_i (x) t^k, flattened PBW words for
/// induced modules, and {len(a), a..., b...} for tensor pairs.
using Label = std::vector<long>;

/// Finite linear combination of basis labels; zeros are pruned eagerly so
/// equality is structural.
class Vector {
public:
  using Terms = std::map<Label, Rational>;

  Vector() = default;
  static Vector basis(Label label, const Rational& c = 1);

  void add(const Label& label, const Rational& c);
  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Rational& c);
  /// this += c * other
  void add_scaled(const Vector& other, const Rational& c);

  Rational coeff(const Label& label) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool operator==(const Vector&) const = default;

private:
  Terms terms_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Rational& c, Vector v);

/// Scalars by which I_0 (when it acts as a scalar) and C_1, C_2, C_3 act.
struct CentralCharacter {
  std::optional<Rational> i0;
  Rational c1 = 0;
  Rational c2 = 0;
  Rational c3 = 0;

  Rational value(long k) const { return k == 1 ? c1 : k == 2 ? c2 : c3; }
};

struct ModuleFlags {
  bool is_weight_module = false;
  bool supports_negative_t_exponents = false;
};

class LabelSchemeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A concrete H-module: a label scheme plus the action of each generator on
/// basis labels. C_1, C_2, C_3 always act through the central character.
class Module {
public:
  explicit Module(CentralCharacter central, ModuleFlags flags = {})
      : central_(std::move(central)), flags_(flags) {}
  virtual ~Module() = default;

  virtual std::string name() const = 0;
  virtual bool valid_label(const Label& label) const = 0;
  virtual std::string format_label(const Label& label) const = 0;

  const CentralCharacter& central() const { return central_; }
  const ModuleFlags& flags() const { return flags_; }

  Vector act(const Generator& g, const Label& label) const;
  Vector act(const Generator& g, const Vector& v) const;
  Vector act(const Element& x, const Vector& v) const;

protected:
  /// Called only for L and I generators on labels that passed valid_label.
  virtual Vector act_basis(const Generator& g, const Label& label) const = 0;

private:
  CentralCharacter central_;
  ModuleFlags flags_;
};

using ModuleHandle = std::shared_ptr<const Module>;

/// Linear extension of the action to an algebra element.
inline Vector act_elem(const Module& m, const Element& x, const Vector& v) { return m.act(x, v); }

/// act([x,y], v) - x(y v) + y(x v); zero for every genuine module.
Vector commutator_defect(const Module& m, const Element& x, const Element& y, const Vector& v);

std::string to_string(const Module& m, const Vector& v);
nlohmann::json to_json(const Module& m, const Vector& v);

// ---------------------------------------------------------------------------

Label tensor_label(const Label& a, const Label& b);
std::pair<Label, Label> split_tensor_label(const Label& label);

/// Diagonal action x(u (x) w) = xu (x) w + u (x) xw on the tensor product.
class TensorModule final : public Module {
public:
  TensorModule(ModuleHandle left, ModuleHandle right);

  std::string name() const override;
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;

  const ModuleHandle& left() const { return left_; }
  const ModuleHandle& right() const { return right_; }

  /// Pure tensor u (x) w of two vectors.
  static Vector pure(const Vector& u, const Vector& w);

protected:
  Vector act_basis(const Generator& g, const Label& label) const override;

private:
  ModuleHandle left_;
  ModuleHandle right_;
};

ModuleHandle tensor(ModuleHandle a, ModuleHandle b);

// ---------------------------------------------------------------------------
// Finite span computations.

/// Reduced row echelon basis of a finite-dimensional subspace. Rows have
/// strictly increasing leading labels, unit pivots, and each pivot label
/// occurs in exactly one row.
class SubspaceBasis {
public:
  Vector reduce(Vector v) const;
  /// Adds v to the span; returns true when the dimension grew.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const { return reduce(v).is_zero(); }

  std::size_t dimension() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  bool leaked() const { return leaked_; }
  void mark_leaked() { leaked_ = true; }

private:
  std::vector<Vector> rows_;
  bool leaked_ = false;
};

class AmbientTooLarge : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Closes span(seeds) under all generators with modes in `modes`, keeping only
/// components on `ambient` labels. Dropped components set leaked().
SubspaceBasis span_closure(const Module& m, const std::vector<Vector>& seeds, ModeRange modes,
                           const std::set<Label>& ambient, std::size_t max_dim);

using Membership = std::function<bool(const Vector&)>;

/// Passes iff every generator with mode in range maps every sample into the
/// membership predicate.
CheckReport invariance_check(const Module& m, const Membership& member, const std::vector<Vector>& samples,
                             ModeRange modes, std::string name = "invariance");

} // namespace hv
