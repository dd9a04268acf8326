#pragma once

#include "hv/module.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace hv {

/// How a generator outside the free directions acts on the cyclic vector:
/// g v = free_part v + character v.
struct GeneratorSplit {
  Element free_part;
  Rational character = 0;
};

/// Splitting of H into free directions (a complement of a subalgebra S) and
/// S itself, together with the character by which S acts on the cyclic
/// vector. C_k and I_0 are always resolved to scalars unless declared free.
struct SplitDatum {
  std::string name;
  std::function<bool(const Generator&)> is_free;
  std::function<GeneratorSplit(const Generator&)> resolve;
  /// Basis of S restricted to modes in [0, max_mode], used for validation.
  std::function<std::vector<Element>(long max_mode)> subalgebra_basis;
  CentralCharacter central;
};

/// g v for an arbitrary element of S; free parts of the terms are summed.
GeneratorSplit resolve_element(const SplitDatum& split, const Element& x);

/// Checks that S is closed under the bracket and that the character vanishes
/// on [S, S] for basis pairs with modes up to max_mode.
CheckReport validate_character(const SplitDatum& split, long max_mode);

/// Ordered product of free generators applied to the cyclic vector; the
/// factors are strictly increasing in generator order (I-block before
/// L-block, modes ascending).
struct PBWMonomial {
  std::vector<std::pair<Generator, unsigned>> factors;

  static PBWMonomial from_label(const Label& label);
  Label to_label() const;
  /// sum of exponent * (1 + |mode|)
  long degree() const;
  bool is_canonical() const;

  bool operator==(const PBWMonomial&) const = default;
};

std::string to_string(const PBWMonomial& m);
/// Accepts "1" or space separated factors such as "I(-2)^2 L(-1)".
PBWMonomial parse_monomial(std::string_view text);

class RewriteBudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// HV_REWRITE_BUDGET when set, otherwise one million rewrite steps.
std::size_t default_rewrite_budget();

/// U(H) (x)_{U(S)} C with the action computed by PBW straightening.
class InducedModule final : public Module {
public:
  InducedModule(SplitDatum split, std::size_t rewrite_budget = default_rewrite_budget(),
                long validation_modes = 8);

  std::string name() const override { return split_.name; }
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;

  const SplitDatum& split() const { return split_; }
  std::size_t rewrite_budget() const { return budget_; }

  /// The cyclic vector (empty monomial).
  static Vector cyclic() { return Vector::basis({}); }
  /// Applies the monomial's factors right to left to `target` in `m`.
  static Vector apply_monomial(const Module& m, const PBWMonomial& mono, const Vector& target);

  /// Largest mode with every smaller mode free, searched in [-window, window].
  long top_free_mode(GenKind kind, long window = 16) const;

protected:
  Vector act_basis(const Generator& g, const Label& label) const override;

private:
  using Word = std::vector<Generator>;
  using WordVector = std::map<Word, Rational>;

  WordVector straighten(const Generator& g, const Word& w, std::size_t& steps) const;
  void check_budget(std::size_t& steps) const;

  SplitDatum split_;
  std::size_t budget_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<Generator, Word>, WordVector> memo_;
};

using InducedHandle = std::shared_ptr<const InducedModule>;

/// All canonical monomials of degree <= cap, ordered by degree then label.
std::vector<PBWMonomial> graded_basis(const InducedModule& m, long degree_cap);

/// straighten_act: g applied to a vector of PBW monomials.
inline Vector straighten_act(const InducedModule& m, const Generator& g, const Vector& v) { return m.act(g, v); }

struct CentralTuple {
  Rational c0 = 0, c1 = 0, c2 = 0, c3 = 0;
};

InducedHandle verma(const Rational& h, const CentralTuple& d, std::size_t budget = default_rewrite_budget());
InducedHandle whittaker(const Rational& l1, const Rational& l2, const Rational& mu1, const CentralTuple& e,
                        std::size_t budget = default_rewrite_budget());

struct RSParams {
  Rational r1 = 0, r2 = 0, s0 = 0, s1 = 0;
};
struct PQParams {
  Rational p2 = 0, p3 = 0, p4 = 0, q1 = 0, q2 = 0;
};

/// (L_m - lambda^m L_0) v for m >= 1, including the interpolation clause.
Rational rs_character(const Rational& lambda, const RSParams& rs, long m);
/// I_m v for m >= 0.
Rational rs_i_character(const Rational& lambda, const RSParams& rs, long m);
/// (L_m - lambda^(m-1) L_1) v for m >= 2.
Rational pq_character(const Rational& lambda, const PQParams& pq, long m);
/// I_m v for m >= 1.
Rational pq_i_character(const Rational& lambda, const PQParams& pq, long m);

/// y = (y_1, y_2, y_3) stored in c1..c3; c0 is ignored.
InducedHandle ind_lambda0(const Rational& lambda, const RSParams& rs, const CentralTuple& y,
                          std::size_t budget = default_rewrite_budget());
InducedHandle ind_lambda1(const Rational& lambda, const PQParams& pq, const CentralTuple& z,
                          std::size_t budget = default_rewrite_budget());

} // namespace hv
