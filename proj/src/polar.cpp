#include "polarcalc/polar.hpp"

#include <sstream>

namespace polarcalc {

GermInput GermInput::make(Polynomial f) {
  const Ring& ring = *f.ring();
  if (!ring.parameter_index())
    throw ValidationError("germ ring has no marked deformation parameter");
  if (!f.coefficient(Monomial(ring.arity())).is_zero())
    throw HypothesisError("germ_vanishes", "f(0) != 0");
  return GermInput{std::move(f)};
}

std::size_t GermInput::parameter() const { return *f.ring()->parameter_index(); }

RingPtr GermInput::slice_ring() const {
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < f.ring()->arity(); ++i)
    if (i != parameter()) keep.push_back(f.ring()->variable(i));
  return f.ring()->restricted(keep);
}

Polynomial GermInput::special_fibre() const {
  RingPtr slice = slice_ring();
  std::vector<Polynomial> values;
  values.reserve(f.ring()->arity());
  for (std::size_t i = 0; i < f.ring()->arity(); ++i) {
    if (i == parameter()) {
      values.push_back(Polynomial::zero(slice));
    } else {
      values.push_back(Polynomial::variable(slice, *slice->index_of(f.ring()->variable(i))));
    }
  }
  return f.substitute(values, slice);
}

std::string to_string(IpaVerdict v) {
  switch (v) {
    case IpaVerdict::yes: return "yes";
    case IpaVerdict::yes_with_caveat: return "yes-with-caveat";
    case IpaVerdict::no: return "no";
  }
  return "no";
}

std::string LengthValue::str() const {
  return value ? std::to_string(*value) : "infinite";
}

namespace {

Ideal unit_ideal(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, Rational(1));
  return Ideal(std::move(ring), {std::move(one)});
}

std::string dim_str(const std::optional<int>& d) {
  return d ? std::to_string(*d) : "empty";
}

// Shared intermediate results so the report assembly computes each ideal and
// saturation once.
struct Parts {
  Polynomial ft;
  Ideal j_rel;
  Ideal j_full;
  Ideal polar;
  bool parameter_independent;
  unsigned saturation_steps;
};

Parts compute_parts(const GermInput& germ, const EngineOptions& opts) {
  RingPtr ring = germ.f.ring();
  std::size_t t = germ.parameter();

  std::vector<Polynomial> rel, full;
  for (std::size_t i = 0; i < ring->arity(); ++i) {
    Polynomial d = germ.f.derivative(i);
    full.push_back(d);
    if (i != t) rel.push_back(std::move(d));
  }
  Polynomial ft = germ.f.derivative(t);
  Ideal j_rel(ring, std::move(rel));
  Ideal j_full(ring, std::move(full));

  bool indep = ft.is_zero();
  unsigned steps = 0;
  std::optional<Ideal> polar;
  if (indep) {
    polar = unit_ideal(ring);
  } else {
    SaturationResult sat = saturate(j_rel, ft, opts);
    polar = std::move(sat.ideal);
    steps = sat.steps;
  }
  return Parts{std::move(ft), std::move(j_rel), std::move(j_full),
               std::move(*polar), indep, steps};
}

Polynomial parameter_poly(const GermInput& germ) {
  return Polynomial::variable(germ.f.ring(), germ.parameter());
}

LengthValue gamma_from(const GermInput& germ, const Parts& parts,
                       const EngineOptions& opts) {
  return LengthValue{
      local_length(parts.polar.with_extra_generator(parameter_poly(germ)), opts)};
}

LengthValue tau_from(const GermInput& germ, const Parts& parts,
                     const EngineOptions& opts) {
  return LengthValue{
      local_length(parts.polar.with_extra_generator(germ.f), opts)};
}

bool polar_is_unit(const Parts& parts, const EngineOptions& opts) {
  return parts.polar
      .basis(default_local_order(*parts.polar.ring(), opts), opts)
      ->contains_unit();
}

std::string basis_generators_str(const Ideal& ideal, const EngineOptions& opts) {
  std::shared_ptr<const StandardBasis> sb =
      ideal.basis(default_local_order(*ideal.ring(), opts), opts);
  std::string out = "(";
  for (std::size_t i = 0; i < sb->generators.size(); ++i) {
    if (i) out += ", ";
    out += sb->generators[i].str();
  }
  return out + ")";
}

IpaResult ipa_from_parts(const GermInput& germ, const Parts& parts,
                         const EngineOptions& opts) {
  IpaResult out{IpaVerdict::no, {}};

  if (parts.parameter_independent) {
    // No dependence on the parameter: the critical locus of (f, t) already
    // sits inside the critical locus of f, so the polar set is empty and
    // isolation holds rigorously.
    out.verdict = IpaVerdict::yes;
    out.diagnostics.push_back(
        {"parameter_independent", "note",
         "f does not involve the deformation parameter; the polar set is empty"});
    return out;
  }

  Ideal polar_slice = parts.polar.with_extra_generator(parameter_poly(germ));
  bool slice_finite = is_zero_dimensional_local(polar_slice, opts);
  out.diagnostics.push_back(
      {"polar_slice_zero_dimensional", slice_finite ? "pass" : "fail",
       slice_finite
           ? "polar set meets the parameter hyperplane in dimension <= 0"
           : "polar set " + basis_generators_str(parts.polar, opts) +
                 " meets the parameter hyperplane in positive dimension"});
  if (!slice_finite) return out;

  std::optional<int> dim_full = local_dim(parts.j_full, opts);
  if (dim_full && *dim_full >= 1) {
    // A component of the critical locus inside the parameter hyperplane
    // would be polar-active yet invisible to the Jacobian saturation; its
    // footprint is a failed dimension drop in the slice.
    std::optional<int> dim_slice =
        local_dim(parts.j_full.with_extra_generator(parameter_poly(germ)), opts);
    bool drop = dim_slice && *dim_slice == *dim_full - 1;
    out.diagnostics.push_back(
        {"critical_slice_dimension_drop", drop ? "pass" : "fail",
         "dim critical locus " + dim_str(dim_full) + ", slice " + dim_str(dim_slice)});
    if (!drop) return out;
    out.verdict = IpaVerdict::yes_with_caveat;
    out.diagnostics.push_back(
        {"hidden_polar_components", "caveat",
         "polar components inside the positive-dimensional critical locus are not computed"});
  } else {
    out.verdict = IpaVerdict::yes;
    out.diagnostics.push_back(
        {"critical_locus_isolated", "pass",
         dim_full ? "critical locus is zero dimensional at the origin"
                  : "critical locus is empty near the origin"});
  }
  return out;
}

}  // namespace

Ideal jacobian_relative(const GermInput& f, const EngineOptions&) {
  RingPtr ring = f.f.ring();
  std::vector<Polynomial> rel;
  for (std::size_t i = 0; i < ring->arity(); ++i)
    if (i != f.parameter()) rel.push_back(f.f.derivative(i));
  return Ideal(ring, std::move(rel));
}

Ideal jacobian_full(const GermInput& f, const EngineOptions&) {
  RingPtr ring = f.f.ring();
  std::vector<Polynomial> full;
  for (std::size_t i = 0; i < ring->arity(); ++i)
    full.push_back(f.f.derivative(i));
  return Ideal(ring, std::move(full));
}

Ideal relative_polar_ideal(const GermInput& f, const EngineOptions& opts) {
  return compute_parts(f, opts).polar;
}

LengthValue gamma_number(const GermInput& f, const EngineOptions& opts) {
  Parts parts = compute_parts(f, opts);
  return gamma_from(f, parts, opts);
}

LengthValue tau_number(const GermInput& f, const EngineOptions& opts) {
  Parts parts = compute_parts(f, opts);
  return tau_from(f, parts, opts);
}

IpaResult is_ipa(const GermInput& f, const EngineOptions& opts) {
  Parts parts = compute_parts(f, opts);
  return ipa_from_parts(f, parts, opts);
}

bool is_null_ipa(const GermInput& f, const EngineOptions& opts) {
  Parts parts = compute_parts(f, opts);
  if (ipa_from_parts(f, parts, opts).verdict == IpaVerdict::no)
    throw HypothesisError("ipa_required", "null test needs a non-no IPA verdict");
  return polar_is_unit(parts, opts);
}

namespace {

std::vector<Diagnostic> consistency_from_parts(const GermInput& f,
                                               const Parts& parts,
                                               const EngineOptions& opts) {
  std::vector<Diagnostic> out;

  LengthValue gamma = gamma_from(f, parts, opts);
  LengthValue tau = tau_from(f, parts, opts);
  out.push_back({"finiteness_equivalence",
                 gamma.finite() == tau.finite() ? "pass" : "fail",
                 "gamma " + gamma.str() + ", tau " + tau.str()});

  bool unit = polar_is_unit(parts, opts);
  std::optional<int> polar_dim = unit ? std::nullopt : local_dim(parts.polar, opts);
  bool no_isolated = unit || (polar_dim && *polar_dim >= 1);
  out.push_back({"no_isolated_polar_points", no_isolated ? "pass" : "fail",
                 unit ? "polar ideal is the unit ideal"
                      : "polar ideal has local dimension " + dim_str(polar_dim)});

  // Set identity of the critical loci: V(J_rel) = V(J_full) union V(polar).
  // Probed by bounded radical membership in both directions; a probe that
  // runs out of bound or budget is recorded as inconclusive.
  std::vector<Polynomial> product_gens;
  for (const Polynomial& p : parts.j_full.generators())
    for (const Polynomial& q : parts.polar.generators())
      if (!p.is_zero() && !q.is_zero()) product_gens.push_back(p * q);
  Ideal product(f.f.ring(), product_gens);

  auto probe_all = [&](const std::vector<Polynomial>& gens, const Ideal& target,
                       const char* name) {
    unsigned found = 0, skipped = 0;
    std::string note;
    for (const Polynomial& g : gens) {
      if (g.is_zero()) {
        ++found;
        continue;
      }
      try {
        RadicalProbe probe = radical_membership(g, target, opts);
        if (probe.power) {
          ++found;
        } else {
          ++skipped;
          note = "no membership up to power bound";
        }
      } catch (const BudgetError& e) {
        ++skipped;
        note = std::string("probe budget: ") + e.which();
      }
    }
    out.push_back({name, skipped == 0 ? "pass" : "inconclusive",
                   std::to_string(found) + "/" + std::to_string(found + skipped) +
                       " generators certified" + (note.empty() ? "" : "; " + note)});
  };
  probe_all(product_gens, parts.j_rel, "critical_set_identity_forward");
  probe_all(parts.j_rel.generators(), product, "critical_set_identity_backward");

  // The ambient hypothesis that the critical locus lies in the hypersurface
  // of f is decidable here only when the critical locus is isolated.
  if (is_zero_dimensional_local(parts.j_full, opts)) {
    try {
      RadicalProbe probe = radical_membership(f.f, parts.j_full, opts);
      out.push_back({"critical_locus_in_hypersurface",
                     probe.power ? "pass" : "inconclusive",
                     probe.power ? "f vanishes on the critical locus (power " +
                                       std::to_string(*probe.power) + ")"
                                 : "no membership up to power bound"});
    } catch (const BudgetError& e) {
      out.push_back({"critical_locus_in_hypersurface", "inconclusive",
                     std::string("probe budget: ") + e.which()});
    }
  } else {
    out.push_back({"critical_locus_in_hypersurface", "unchecked",
                   "positive-dimensional critical locus; analytic hypothesis assumed"});
  }
  return out;
}

}  // namespace

std::vector<Diagnostic> polar_consistency_check(const GermInput& f,
                                                const EngineOptions& opts) {
  Parts parts = compute_parts(f, opts);
  return consistency_from_parts(f, parts, opts);
}

SliceReport critical_slice_report(const GermInput& f, const EngineOptions& opts) {
  Parts parts = compute_parts(f, opts);
  if (ipa_from_parts(f, parts, opts).verdict == IpaVerdict::no)
    throw HypothesisError("ipa_required", "slice report needs a non-no IPA verdict");

  SliceReport r;
  Polynomial t = parameter_poly(f);
  r.dim_critical = local_dim(parts.j_full, opts);
  Ideal slice_jacobian = parts.j_rel.with_extra_generator(t);
  r.dim_slice_critical = local_dim(slice_jacobian, opts);

  if (r.dim_critical && *r.dim_critical >= 1) {
    bool drop =
        r.dim_slice_critical && *r.dim_slice_critical == *r.dim_critical - 1;
    r.checks.push_back({"dimension_drop", drop ? "pass" : "fail",
                        "dim critical locus " + dim_str(r.dim_critical) +
                            ", slice " + dim_str(r.dim_slice_critical)});
  } else {
    // Isolated critical locus: the slice singularity scheme and the polar
    // slice carry the same length (the additivity identity with an empty
    // special-point set).
    std::optional<std::uint64_t> mu0 = local_length(slice_jacobian, opts);
    std::optional<std::uint64_t> pol =
        local_length(parts.polar.with_extra_generator(t), opts);
    bool agree = mu0.has_value() && pol.has_value() && *mu0 == *pol;
    r.checks.push_back({"slice_equals_polar_slice", agree ? "pass" : "fail",
                        "slice length " + LengthValue{mu0}.str() +
                            ", polar slice length " + LengthValue{pol}.str()});
  }
  return r;
}

PolarReport polar_report(const GermInput& f, const EngineOptions& opts) {
  Parts parts = compute_parts(f, opts);
  IpaResult ipa = ipa_from_parts(f, parts, opts);

  PolarReport report{parts.j_rel,   parts.j_full, parts.polar,
                     LengthValue{}, LengthValue{}, ipa.verdict,
                     false,         parts.saturation_steps, ipa.diagnostics};

  LengthValue gamma = gamma_from(f, parts, opts);
  LengthValue tau = tau_from(f, parts, opts);
  if (ipa.verdict == IpaVerdict::no) {
    // Non-isolated polar activity: the true intersection numbers are not
    // finite, whatever the visible saturated ideal suggests.
    report.gamma = LengthValue{std::nullopt};
    report.tau = LengthValue{std::nullopt};
    report.diagnostics.push_back(
        {"visible_polar_lengths", "note",
         "Jacobian-visible lengths gamma " + gamma.str() + ", tau " + tau.str() +
             " do not count hidden components; reported as infinite"});
  } else {
    report.gamma = gamma;
    report.tau = tau;
    report.null_ipa = polar_is_unit(parts, opts);
  }

  for (const Diagnostic& d : consistency_from_parts(f, parts, opts))
    report.diagnostics.push_back(d);
  return report;
}

}  // namespace polarcalc
