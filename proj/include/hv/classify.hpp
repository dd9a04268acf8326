#pragma once

#include "hv/config.hpp"

namespace hv {

/// c0 + (n - 1) c2 != 0 for every nonzero integer n, decided exactly.
bool thm21_k0_condition(const Rational& c0, const Rational& c2);

/// Omega(lambda, alpha, beta) is irreducible iff alpha != 0 or beta != 0.
bool omega_irreducible(const OmegaParams& p);

/// A(lambda, alpha, beta) is reducible iff lambda in Z, alpha in {0, 1}, beta = 0.
bool a_series_reducible(const ASeriesParams& p);

/// Predicate verdicts for a module record, or for {"type":"pair","first","second"}.
/// Every predicate key is present; inapplicable ones are null. Verdicts that
/// rest on irreducibility hypotheses are listed under "annotations".
nlohmann::json classify(const nlohmann::json& spec, const std::string& path = "module");

/// Names of the predicate keys in the order they are reported.
const std::vector<std::string>& prediction_keys();

} // namespace hv
