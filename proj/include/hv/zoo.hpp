#pragma once

#include "hv/module.hpp"
#include "hv/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hv {

struct OmegaParams {
  Rational lambda = 1;
  Rational alpha = 0;
  Rational beta = 0;
};

struct ASeriesParams {
  Rational lambda = 0;
  Rational alpha = 0;
  Rational beta = 0;
};

class ZeroLambda : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Dense square or rectangular matrix over the rationals, row-major.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& c);

  bool operator==(const RationalMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& c, RationalMatrix a);

class RelationViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Finite-dimensional module over the quotient of the given shape, stored as
/// one matrix per quotient generator. Relations are validated on
/// construction.
class HbarModule {
public:
  /// Missing generators act as zero. Throws RelationViolation naming the
  /// first failing pair.
  HbarModule(QuotientShape shape, std::size_t dim, std::map<Generator, RationalMatrix> matrices);

  const QuotientShape& shape() const { return shape_; }
  std::size_t dim() const { return dim_; }
  const RationalMatrix& matrix(const Generator& g) const;
  /// Largest j with Ī_{j+d} nonzero.
  std::optional<unsigned> r_prime() const { return r_prime_; }

  /// sum_{i=0}^r m^{i+1}/(i+1)! L̄_i
  RationalMatrix l_operator(long m) const;
  /// sum_{i=0}^r m^{i+d}/(i+d)! Ī_{i+d}
  RationalMatrix i_operator(long m) const;

private:
  QuotientShape shape_;
  std::size_t dim_;
  std::map<Generator, RationalMatrix> matrices_;
  RationalMatrix zero_;
  std::optional<unsigned> r_prime_;
};

HbarModule hbar_module(QuotientShape shape, std::size_t dim, std::map<Generator, RationalMatrix> matrices);

/// The one-dimensional module on which L̄_0 = sigma, Ī_0 = tau (d = 0) and all
/// other generators vanish.
HbarModule one_dim_V(const Rational& sigma, const Rational& tau, QuotientShape shape);

/// Shape (1, 0), dim 2: L̄_0 = [[0,1],[0,0]], L̄_1 = 0, Ī_0 = tau Id, Ī_1 = 0.
HbarModule two_dim_fixture(const Rational& tau = 2);

Vector poly_to_vector(const Polynomial& f);
Polynomial vector_to_poly(const Vector& v);

class OmegaModule final : public Module {
public:
  explicit OmegaModule(OmegaParams p);
  std::string name() const override;
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;
  const OmegaParams& params() const { return p_; }

protected:
  Vector act_basis(const Generator& g, const Label& label) const override;

private:
  OmegaParams p_;
};

class IntermediateSeriesModule final : public Module {
public:
  explicit IntermediateSeriesModule(ASeriesParams p);
  std::string name() const override;
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;
  const ASeriesParams& params() const { return p_; }

protected:
  Vector act_basis(const Generator& g, const Label& label) const override;

private:
  ASeriesParams p_;
};

/// V (x) C[t] with labels {i, k} for e_i (x) t^k.
class CalMOmegaModule final : public Module {
public:
  CalMOmegaModule(HbarModule v, OmegaParams p);
  std::string name() const override;
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;
  const HbarModule& space() const { return v_; }
  const OmegaParams& params() const { return p_; }

protected:
  Vector act_basis(const Generator& g, const Label& label) const override;

private:
  HbarModule v_;
  OmegaParams p_;
};

/// V (x) A(lambda, alpha, beta) with labels {i, n} for e_i (x) v_n.
class CalMAModule final : public Module {
public:
  CalMAModule(HbarModule v, ASeriesParams p);
  std::string name() const override;
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;
  const HbarModule& space() const { return v_; }
  const ASeriesParams& params() const { return p_; }

protected:
  Vector act_basis(const Generator& g, const Label& label) const override;

private:
  HbarModule v_;
  ASeriesParams p_;
};

class NonzeroCentralCharge : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// L_m acts as L_m + sum_i c_i I_{m+i} for gamma = sum_i c_i t^i; I_m is
/// unchanged and all C_k act as zero.
class GammaTwistModule final : public Module {
public:
  GammaTwistModule(ModuleHandle base, LaurentPolynomial gamma);
  std::string name() const override;
  bool valid_label(const Label& label) const override { return base_->valid_label(label); }
  std::string format_label(const Label& label) const override { return base_->format_label(label); }
  const ModuleHandle& base() const { return base_; }

protected:
  Vector act_basis(const Generator& g, const Label& label) const override;

private:
  ModuleHandle base_;
  LaurentPolynomial gamma_;
};

ModuleHandle omega(OmegaParams p);
ModuleHandle intermediate_series(ASeriesParams p);
ModuleHandle calM_omega(HbarModule v, OmegaParams p);
ModuleHandle calM_A(HbarModule v, ASeriesParams p);
ModuleHandle gamma_twist(ModuleHandle base, LaurentPolynomial gamma);

} // namespace hv
