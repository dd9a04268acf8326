#pragma once

#include "hv/induced.hpp"
#include "hv/zoo.hpp"

#include <optional>
#include <variant>

namespace hv {

/// T_{l,m}^{(s)} = sum_{i=0}^s (-1)^{s-i} C(s,i) I_{l-m-i} I_{m+i}
struct TOperator {
  long l = 0;
  long m = 0;
  unsigned s = 0;
};

std::string to_string(const TOperator& t);

Vector t_apply(const Module& module, const TOperator& t, const Vector& v);

using Operator = std::variant<Element, TOperator>;

Vector apply_operator(const Module& module, const Operator& op, const Vector& v);

/// Pass with witness {"k": smallest k} when op^k v = 0 for some k <= max_power;
/// inconclusive otherwise, with the support size of each iterate as evidence.
CheckReport nilpotency_probe(const Module& module, const Operator& op, const Vector& v, unsigned max_power);

/// Smallest K >= start such that I_m v = 0 for every m in [K, K + window].
/// Returns nullopt when no such K <= start + search is found.
std::optional<long> annihilation_bound(const Module& module, const Vector& v, long start = 0, long window = 8,
                                       long search = 64);

/// Compares Phi_n(f) = lambda^{-n} f(n) w_n on Omega(p) against A(0, 1-alpha, beta)
/// for m, n in range. Monomials t^0..t^degree_cap are always sampled, plus `extra`.
CheckReport weighting_check(const OmegaParams& p, ModeRange modes, long degree_cap,
                            const std::vector<Polynomial>& extra = {});

/// The same comparison for M(V, Omega(p)) against M(V, A(0, 1-alpha, beta)).
CheckReport weighting_calM_check(const HbarModule& v, const OmegaParams& p, ModeRange modes, long degree_cap);

class UndefinedLabel : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Image of a basis label; nullopt means the map is undefined there.
using LabelMap = std::function<std::optional<Vector>(const Label&)>;

/// Asserts map(g x) = g map(x) for every generator with mode in range
/// (plus C_1..C_3) and every sample label x.
CheckReport intertwiner_check(const Module& a, const Module& b, const LabelMap& map, ModeRange modes,
                              const std::vector<Label>& samples, std::string name = "intertwiner");

LabelMap identity_map();

/// monomial v -> monomial (start) computed in `target`, memoized.
LabelMap monomial_map(ModuleHandle target, Vector start);

struct RSDictionary {
  Rational alpha, beta, h;
  CentralTuple d;
};

struct PQDictionary {
  Rational alpha, beta, lambda1, lambda2, mu1;
  CentralTuple e;
};

RSDictionary dictionary_RS(const Rational& lambda, const RSParams& rs, const CentralTuple& y);
std::pair<RSParams, CentralTuple> dictionary_RS_inv(const Rational& lambda, const RSDictionary& dict);
PQDictionary dictionary_PQ(const Rational& lambda, const PQParams& pq, const CentralTuple& z);
std::pair<PQParams, CentralTuple> dictionary_PQ_inv(const Rational& lambda, const PQDictionary& dict);

/// Triangularity of the transition from {mu L_{j+1}^l (1 (x) v)} to
/// {t^k (x) mu v} on Omega(p) (x) handle, where j is the top free L-mode.
/// Terms are ordered by (degree of mu', label of mu', k).
CheckReport basis_transition_check(const OmegaParams& p, const InducedHandle& handle, long degree_cap);

class SingularSystem : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Components w_0..w_{K-1} with lambda^{-m} I_m w = sum_i m^i w_i for each of
/// the K shifts. The module must be Omega (x) N with beta != 0 and every shift
/// must kill the right-hand factors of w.
std::vector<Vector> vandermonde_extract(const TensorModule& tensor, const Vector& w, const std::vector<long>& shifts);

/// Closed form for the components: w_k = beta sum_{i>=k} C(i,k) (-1)^k t^{i-k} (x) u_i.
std::vector<Vector> vandermonde_components_expected(const TensorModule& tensor, const Vector& w, std::size_t count);

/// Commutator defect over all generator pairs in range on each sample.
CheckReport module_axiom_check(const Module& module, ModeRange modes, const std::vector<Vector>& samples,
                               std::string name = "module_axioms");

} // namespace hv
