#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarcalc/ideal_ops.hpp"

namespace polarcalc {

// A one-parameter deformation germ: a polynomial f vanishing at the origin
// in a ring whose marked parameter plays the role of the deformation
// direction. The remaining n variables are the ambient coordinates of the
// special fibre.
struct GermInput {
  Polynomial f;

  // Throws ValidationError when the ring has no marked parameter, and
  // HypothesisError when f does not vanish at the origin.
  static GermInput make(Polynomial f);

  std::size_t parameter() const;  // ring index of the deformation parameter
  std::size_t n() const { return f.ring()->arity() - 1; }

  // f with the parameter set to 0, in the ring without the parameter.
  Polynomial special_fibre() const;
  RingPtr slice_ring() const;
};

enum class IpaVerdict { yes, yes_with_caveat, no };

std::string to_string(IpaVerdict v);

// One named consistency or hypothesis check with its outcome.
struct Diagnostic {
  std::string name;
  std::string outcome;  // "pass", "fail", "inconclusive", or a short note
  std::string detail;
};

// Length of an Artinian local quotient, or infinite.
struct LengthValue {
  std::optional<std::uint64_t> value;  // empty means infinite

  bool finite() const { return value.has_value(); }
  std::string str() const;
  bool operator==(const LengthValue&) const = default;
};

// Partials of f with respect to every variable except the parameter.
Ideal jacobian_relative(const GermInput& f, const EngineOptions& opts);

// Partials with respect to all variables (the critical ideal of f).
Ideal jacobian_full(const GermInput& f, const EngineOptions& opts);

// The saturated polar ideal. When f does not depend on the parameter the
// polar set is empty and the unit ideal is returned; otherwise the relative
// Jacobian ideal saturated by the parameter partial. Components of the
// critical locus where that partial vanishes are exactly the ones removed,
// so the result cuts out the closure of the critical locus of (f, t) minus
// the critical locus of f, with its scheme multiplicity off the latter.
Ideal relative_polar_ideal(const GermInput& f, const EngineOptions& opts);

// Intersection length of the polar ideal with the parameter hyperplane.
LengthValue gamma_number(const GermInput& f, const EngineOptions& opts);

// Intersection length of the polar ideal with the hypersurface of f.
LengthValue tau_number(const GermInput& f, const EngineOptions& opts);

struct IpaResult {
  IpaVerdict verdict;
  std::vector<Diagnostic> diagnostics;
};

// Isolated-polar-activity test: the polar ideal plus the parameter must be
// zero dimensional at the origin, and when the critical locus is positive
// dimensional its hyperplane slice must drop dimension by exactly one (a
// critical component inside the hyperplane would hide in the polar set and
// defeat isolation). The caveat case records that components of the polar
// set lying inside the critical locus are invisible to Jacobian saturation.
IpaResult is_ipa(const GermInput& f, const EngineOptions& opts);

// True iff the polar ideal is the unit ideal locally (polar set misses 0).
bool is_null_ipa(const GermInput& f, const EngineOptions& opts);

std::vector<Diagnostic> polar_consistency_check(const GermInput& f,
                                                const EngineOptions& opts);

struct SliceReport {
  std::optional<int> dim_critical;        // dim of Sigma f at 0
  std::optional<int> dim_slice_critical;  // dim of Sigma f0 at 0
  std::vector<Diagnostic> checks;
};

SliceReport critical_slice_report(const GermInput& f,
                                  const EngineOptions& opts);

// Everything above in one structure. When the verdict is "no", gamma and tau
// are reported as infinite: the finite lengths of the visible polar ideal do
// not count hidden components, and the defining intersection numbers are
// genuinely non-isolated. A diagnostic records any visible finite value.
struct PolarReport {
  Ideal j_rel;
  Ideal j_full;
  Ideal polar;
  LengthValue gamma;
  LengthValue tau;
  IpaVerdict ipa;
  bool null_ipa = false;
  unsigned saturation_steps = 0;  // 0 when f is parameter independent
  std::vector<Diagnostic> diagnostics;
};

PolarReport polar_report(const GermInput& f, const EngineOptions& opts);

}  // namespace polarcalc
