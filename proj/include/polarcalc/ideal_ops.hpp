#pragma once

#include <optional>
#include <vector>

#include "polarcalc/gb.hpp"

namespace polarcalc {

// Generators of the intersection with the subring omitting the variables in
// `elim` (indices in ideal.ring()). The result lives in the restricted ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& elim,
                const EngineOptions& opts);

// Ideal quotient I : (g). Computed by eliminating an auxiliary variable u
// from u*I + (1-u)*(g) and dividing the u-free generators exactly by g.
Ideal quotient(const Ideal& ideal, const Polynomial& g,
               const EngineOptions& opts);

struct SaturationResult {
  Ideal ideal;
  unsigned steps = 0;  // colon computations performed
};

// Saturation I : (g)^infinity by iterated quotient. Stabilization is
// detected by comparing minimal leading-ideal generators of successive
// quotients under the local order; a chain longer than opts.radical_bound
// raises BudgetError("saturation_steps").
SaturationResult saturate(const Ideal& ideal, const Polynomial& g,
                          const EngineOptions& opts);

// Whether the local algebra at the origin is finite dimensional.
bool is_zero_dimensional_local(const Ideal& ideal, const EngineOptions& opts);

struct RadicalProbe {
  // Smallest k <= opts.radical_bound with g^k in the ideal, if any.
  std::optional<unsigned> power;
};

// Bounded radical membership test.
RadicalProbe radical_membership(const Polynomial& g, const Ideal& ideal,
                                const EngineOptions& opts);

// Exact division f / g; empty optional when g does not divide f.
std::optional<Polynomial> exact_divide(const Polynomial& f,
                                       const Polynomial& g);

}  // namespace polarcalc
