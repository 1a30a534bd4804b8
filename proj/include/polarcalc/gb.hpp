#pragma once

#include <optional>
#include <vector>

#include "polarcalc/errors.hpp"
#include "polarcalc/ideal.hpp"
#include "polarcalc/options.hpp"
#include "polarcalc/order.hpp"
#include "polarcalc/polynomial.hpp"

namespace polarcalc {

// Leading term of a nonzero polynomial under the given order.
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);
Rational leading_coefficient(const Polynomial& f, const MonomialOrder& order);

// Weak normal form of f against the reducers. Under a global order this is
// ordinary multivariate division. Under a local order it is Mora reduction:
// the reducer of smallest ecart among those whose leading monomial divides
// the current one is chosen, and when every such reducer has larger ecart
// than the current polynomial, the current polynomial itself joins the
// reducer set. The result r satisfies u*f = sum(a_i g_i) + r with u a unit
// (u = 1 for global orders), and no leading monomial of the reducers divides
// the leading monomial of r.
Polynomial weak_normal_form(const Polynomial& f,
                            const std::vector<Polynomial>& reducers,
                            const MonomialOrder& order,
                            const EngineOptions& opts);

// Buchberger / Mora completion. Output is minimal and monic, sorted by
// decreasing leading monomial; tails are fully reduced only for global
// orders (see StandardBasis::reduced). Throws BudgetError when the pair or
// degree budget is exhausted.
StandardBasis standard_basis(const std::vector<Polynomial>& generators,
                             const MonomialOrder& order,
                             const EngineOptions& opts);

// Membership via weak normal form against a standard basis.
bool in_ideal(const Polynomial& f, const StandardBasis& basis,
              const EngineOptions& opts);

// Krull dimension of the localization at the origin, read off the leading
// ideal: the largest size of a variable subset S such that no minimal
// generator of the leading ideal is supported inside S. Empty optional means
// the ideal is the unit ideal (the local algebra is zero).
std::optional<int> local_dim(const Ideal& ideal, const EngineOptions& opts);

// Vector space dimension over Q of the local algebra, i.e. the number of
// standard monomials under a local order. Empty optional when infinite; 0
// when the ideal contains a unit.
std::optional<std::uint64_t> local_length(const Ideal& ideal,
                                          const EngineOptions& opts);

}  // namespace polarcalc
