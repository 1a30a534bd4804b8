#pragma once

#include <cstdint>

namespace polarcalc {

// Which local order the engine uses where one is not otherwise forced. Both
// choices are honest local orders, so every reported invariant (length,
// dimension, verdicts) must agree between them; exposing the switch makes
// that checkable from the outside.
enum class LocalOrderChoice {
  natural,   // negdegrevlex in declared variable order
  reversed,  // negdegrevlex with reversed variable significance
};

// Engine configuration: resource guards plus the local-order choice.
// Exceeding a guard raises BudgetError; the engine never truncates a result
// silently.
struct EngineOptions {
  std::uint64_t max_pairs = 50000;   // critical pairs processed per basis run
  std::uint32_t max_degree = 80;     // total degree of any intermediate polynomial
  std::uint32_t radical_bound = 20;  // power bound for radical probes, colon chain cap
  LocalOrderChoice local_order = LocalOrderChoice::natural;
};

}  // namespace polarcalc
