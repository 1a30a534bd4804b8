#include "polarcalc/cohomology.hpp"

#include <sstream>

namespace polarcalc {

RankVector RankVector::concentrated(int degree, std::uint64_t rank) {
  RankVector v;
  v.set(degree, rank);
  return v;
}

void RankVector::set(int degree, std::uint64_t rank) {
  if (rank == 0)
    ranks_.erase(degree);
  else
    ranks_[degree] = rank;
}

std::uint64_t RankVector::at(int degree) const {
  auto it = ranks_.find(degree);
  return it == ranks_.end() ? 0 : it->second;
}

long long RankVector::euler() const {
  long long e = 0;
  for (const auto& [deg, rank] : ranks_) {
    long long signed_rank = static_cast<long long>(rank);
    e += (deg % 2 == 0) ? signed_rank : -signed_rank;
  }
  return e;
}

std::string RankVector::str() const {
  if (ranks_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [deg, rank] : ranks_) {
    if (!first) out << ", ";
    out << "deg " << deg << ": " << rank;
    first = false;
  }
  return out.str();
}

namespace {

void require_vanishing(const Polynomial& g) {
  if (!g.coefficient(Monomial(g.ring()->arity())).is_zero())
    throw HypothesisError("germ_vanishes", "polynomial does not vanish at the origin");
}

IpaResult require_ipa(const GermInput& f, const EngineOptions& opts) {
  IpaResult r = is_ipa(f, opts);
  if (r.verdict == IpaVerdict::no)
    throw HypothesisError("ipa_required", "operation needs a non-no IPA verdict");
  return r;
}

}  // namespace

LengthValue milnor_number(const Polynomial& g,
                          const std::vector<std::size_t>& vars,
                          const EngineOptions& opts) {
  require_vanishing(g);
  std::vector<std::string> names;
  names.reserve(vars.size());
  for (std::size_t v : vars) {
    if (v >= g.ring()->arity()) throw ValidationError("milnor variable out of range");
    names.push_back(g.ring()->variable(v));
  }
  RingPtr sub = g.ring()->restricted(names);
  Polynomial h = g.restricted_to(sub);
  return milnor_number(h, opts);
}

LengthValue milnor_number(const Polynomial& g, const EngineOptions& opts) {
  require_vanishing(g);
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < g.ring()->arity(); ++i)
    partials.push_back(g.derivative(i));
  return LengthValue{local_length(Ideal(g.ring(), std::move(partials)), opts)};
}

RankVector le_attach_rank(const GermInput& f, const EngineOptions& opts) {
  require_ipa(f, opts);
  LengthValue tau = tau_number(f, opts);
  if (!tau.finite())
    throw HypothesisError("finite_tau", "tau is infinite despite the IPA verdict");
  return RankVector::concentrated(static_cast<int>(f.n()), *tau.value);
}

RankVector complex_link_rank(const GermInput& f, const EngineOptions& opts) {
  require_ipa(f, opts);
  LengthValue gamma = gamma_number(f, opts);
  if (!gamma.finite())
    throw HypothesisError("finite_gamma", "gamma is infinite despite the IPA verdict");
  return RankVector::concentrated(static_cast<int>(f.n()) - 1, *gamma.value);
}

AdditivityResult mu_additivity_check(const GermInput& f,
                                     std::uint64_t special_mu_sum,
                                     const EngineOptions& opts) {
  AdditivityResult out;
  out.special_mu_sum = special_mu_sum;
  out.mu_special_fibre = milnor_number(f.special_fibre(), opts);
  if (!out.mu_special_fibre.finite())
    throw HypothesisError("isolated_slice_singularity",
                          "the special fibre has a non-isolated singularity");
  out.gamma = gamma_number(f, opts);
  out.pass = out.gamma.finite() &&
             *out.mu_special_fibre.value == *out.gamma.value + special_mu_sum;
  std::ostringstream detail;
  detail << "mu " << out.mu_special_fibre.str() << " vs gamma " << out.gamma.str()
         << " + special " << special_mu_sum;
  out.detail = detail.str();
  return out;
}

long long disk_complex_euler(const DiskComplexSpec& spec) {
  long long points = static_cast<long long>(spec.special_points.size());
  long long e = (1 - points) * spec.generic_stalk.euler();
  for (const RankVector& p : spec.special_points) e += p.euler();
  return e;
}

RankVector disk_complex_rank(const DiskComplexSpec& spec) {
  if (!spec.concentration_degree)
    throw HypothesisError("concentration_degree",
                          "rank extraction needs an asserted concentration degree");
  long long e = disk_complex_euler(spec);
  if (e == 0) return RankVector{};
  int d = *spec.concentration_degree;
  bool even = ((d % 2) + 2) % 2 == 0;
  if (even != (e > 0))
    throw HypothesisError("concentration_sign",
                          "euler characteristic " + std::to_string(e) +
                              " has the wrong sign for degree " + std::to_string(d));
  return RankVector::concentrated(d, static_cast<std::uint64_t>(e < 0 ? -e : e));
}

RankVector ipa_betti_assembly(const GermInput& f, const RankVector& hyper,
                              const EngineOptions& opts) {
  require_ipa(f, opts);
  LengthValue gamma = gamma_number(f, opts);
  if (!gamma.finite())
    throw HypothesisError("finite_gamma", "gamma is infinite despite the IPA verdict");
  RankVector out = hyper;
  int top = static_cast<int>(f.n()) - 1;
  out.set(top, out.at(top) + *gamma.value);
  return out;
}

FamilyReport family_report(unsigned a, unsigned b, unsigned m,
                           const EngineOptions& opts) {
  if (!(a >= 2 && b > a && m >= 1))
    throw ValidationError("family parameters need b > a >= 2 and m >= 1");

  FamilyReport rep;
  rep.a = a;
  rep.b = b;
  rep.m = m;

  RingPtr ring = Ring::make({"t", "x", "y", "s"}, 0);
  Polynomial t = Polynomial::variable(ring, 0);
  Polynomial x = Polynomial::variable(ring, 1);
  Polynomial y = Polynomial::variable(ring, 2);
  Polynomial s = Polynomial::variable(ring, 3);
  Polynomial f = y * y - x.pow(b) - s.pow(m) * x.pow(a) + t * x.pow(a);
  GermInput germ = GermInput::make(f);

  auto check = [&rep](const std::string& name, bool ok, const std::string& detail) {
    rep.checks.push_back({name, ok ? "pass" : "fail", detail});
  };

  PolarReport polar = polar_report(germ, opts);
  rep.polar = polar.polar;
  rep.ipa = polar.ipa;
  rep.null_ipa = polar.null_ipa;
  check("ipa_verdict", polar.ipa != IpaVerdict::no, to_string(polar.ipa));
  check("null_iff_m_is_one", polar.null_ipa == (m == 1),
        polar.null_ipa ? "polar set misses the origin" : "polar set through the origin");

  // The saturated polar ideal against its closed form, by mutual membership.
  {
    Polynomial q = x.pow(b - a).scaled(Rational(static_cast<long>(b))) +
                   (s.pow(m) - t).scaled(Rational(static_cast<long>(a)));
    std::vector<Polynomial> expected = {q, y, s.pow(m - 1)};
    MonomialOrder local = default_local_order(*ring, opts);
    std::shared_ptr<const StandardBasis> got = polar.polar.basis(local, opts);
    std::shared_ptr<const StandardBasis> want = Ideal(ring, expected).basis(local, opts);
    bool mutual = true;
    for (const Polynomial& g : expected)
      if (!in_ideal(g, *got, opts)) mutual = false;
    for (const Polynomial& g : got->generators)
      if (!in_ideal(g, *want, opts)) mutual = false;
    check("polar_ideal_closed_form", mutual,
          mutual ? "mutual membership with the closed-form generators"
                 : "generator escaped mutual membership");
  }

  std::uint64_t gamma_expected = static_cast<std::uint64_t>(m - 1) * (b - a);
  std::uint64_t tau_expected = static_cast<std::uint64_t>(m - 1) * b;
  rep.gamma = polar.gamma.value.value_or(0);
  rep.tau = polar.tau.value.value_or(0);
  check("gamma_closed_form",
        polar.gamma.finite() && *polar.gamma.value == gamma_expected,
        "gamma " + polar.gamma.str() + " vs (m-1)(b-a) = " +
            std::to_string(gamma_expected));
  check("tau_closed_form", polar.tau.finite() && *polar.tau.value == tau_expected,
        "tau " + polar.tau.str() + " vs (m-1)b = " + std::to_string(tau_expected));

  // Transversal Milnor numbers of the two-variable members: generic
  // parameters (s = 0, t = 1) and special parameters (s = 0, t = 0).
  {
    RingPtr plane = Ring::make({"x", "y"});
    Polynomial px = Polynomial::variable(plane, 0);
    Polynomial py = Polynomial::variable(plane, 1);
    auto member = [&](Rational tv) {
      std::vector<Polynomial> values = {Polynomial::constant(plane, tv), px, py,
                                        Polynomial::zero(plane)};
      return f.substitute(values, plane);
    };
    LengthValue mu_generic = milnor_number(member(Rational(1)), opts);
    LengthValue mu_special = milnor_number(member(Rational(0)), opts);
    rep.mu_generic = mu_generic.value.value_or(0);
    rep.mu_special = mu_special.value.value_or(0);
    check("mu_generic", mu_generic.finite() && *mu_generic.value == a - 1,
          "mu " + mu_generic.str() + " vs a-1 = " + std::to_string(a - 1));
    check("mu_special", mu_special.finite() && *mu_special.value == b - 1,
          "mu " + mu_special.str() + " vs b-1 = " + std::to_string(b - 1));
  }

  // Disk complex: generic stalk rank a-1 in degree 1; one rank-1 degree-2
  // stalk for each of the m special points of the slice disk.
  DiskComplexSpec disk;
  disk.generic_stalk = RankVector::concentrated(1, a - 1);
  disk.special_points.assign(m, RankVector::concentrated(2, 1));
  disk.concentration_degree = 2;
  RankVector hyper = disk_complex_rank(disk);
  rep.hyper_rank = hyper.at(2);
  std::uint64_t hyper_expected = static_cast<std::uint64_t>(m - 1) * a + 1;
  check("hyper_closed_form", rep.hyper_rank == hyper_expected,
        "rank " + std::to_string(rep.hyper_rank) + " vs (m-1)a+1 = " +
            std::to_string(hyper_expected));

  RankVector betti = ipa_betti_assembly(germ, hyper, opts);
  rep.betti_top = betti.at(2);
  std::uint64_t betti_expected = static_cast<std::uint64_t>(m - 1) * b + 1;
  check("betti_closed_form", rep.betti_top == betti_expected,
        "rank " + std::to_string(rep.betti_top) + " vs (m-1)b+1 = " +
            std::to_string(betti_expected));
  if (m == 1)
    check("sphere_base_case", rep.betti_top == 1,
          "m = 1 must give a single top class");

  return rep;
}

}  // namespace polarcalc
