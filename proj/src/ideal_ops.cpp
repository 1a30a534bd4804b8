#include "polarcalc/ideal_ops.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polarcalc {
namespace {

// Auxiliary scalar for the intersection trick; first of u, u0, u1, ... not
// already a ring variable.
std::string fresh_aux_name(const Ring& ring) {
  if (!ring.index_of("u")) return "u";
  for (int k = 0;; ++k) {
    std::string name = "u" + std::to_string(k);
    if (!ring.index_of(name)) return name;
  }
}

// Sorted minimal leading-monomial exponent vectors under the local order.
std::vector<std::vector<int>> leading_ideal_key(const Ideal& ideal,
                                                const EngineOptions& opts) {
  std::shared_ptr<const StandardBasis> sb =
      ideal.basis(default_local_order(*ideal.ring(), opts), opts);
  std::vector<std::vector<int>> key;
  for (const Monomial& m : sb->leading_monomials()) key.push_back(m.exponents());
  std::sort(key.begin(), key.end());
  return key;
}

bool is_local_unit(const Polynomial& g) {
  return !g.coefficient(Monomial(g.ring()->arity())).is_zero();
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& elim,
                const EngineOptions& opts) {
  if (elim.empty()) return ideal;
  const Ring& ring = *ideal.ring();
  MonomialOrder order = MonomialOrder::elimination_order(ring, elim);
  std::shared_ptr<const StandardBasis> sb = ideal.basis(order, opts);

  std::set<std::size_t> gone(elim.begin(), elim.end());
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < ring.arity(); ++i)
    if (!gone.count(i)) keep.push_back(ring.variable(i));
  if (keep.empty()) throw ValidationError("cannot eliminate every variable");
  RingPtr sub = ideal.ring()->restricted(keep);

  std::vector<Polynomial> gens;
  for (const Polynomial& g : sb->generators) {
    bool free_of_elim = true;
    for (std::size_t v : gone)
      if (!g.independent_of(v)) {
        free_of_elim = false;
        break;
      }
    if (free_of_elim) gens.push_back(g.restricted_to(sub));
  }
  return Ideal(sub, std::move(gens));
}

std::optional<Polynomial> exact_divide(const Polynomial& f,
                                       const Polynomial& g) {
  if (g.is_zero()) throw ValidationError("exact division by zero");
  require_same_ring(*f.ring(), *g.ring(), "exact_divide");
  MonomialOrder order = MonomialOrder::global_order(*f.ring());
  Polynomial q = Polynomial::zero(f.ring());
  Polynomial r = f;
  Monomial lmg = leading_monomial(g, order);
  Rational lcg = leading_coefficient(g, order);
  while (!r.is_zero()) {
    Monomial lm = leading_monomial(r, order);
    if (!lmg.divides(lm)) return std::nullopt;
    Rational c = leading_coefficient(r, order) / lcg;
    Monomial qm = lm.divided_by(lmg);
    q += Polynomial::monomial_term(f.ring(), qm, c);
    r -= g.times_term(qm, c);
  }
  return q;
}

Ideal quotient(const Ideal& ideal, const Polynomial& g,
               const EngineOptions& opts) {
  if (g.is_zero()) throw ValidationError("ideal quotient by zero");
  require_same_ring(*ideal.ring(), *g.ring(), "quotient");
  // A local unit generates the unit ideal, so the quotient is the ideal
  // itself.
  if (is_local_unit(g)) return ideal;

  // I : (g) = (I meet (g)) / g; the intersection comes from eliminating an
  // auxiliary scalar u out of u*I + (1-u)*(g).
  RingPtr ext = ideal.ring()->extended({fresh_aux_name(*ideal.ring())});
  std::size_t ui = ext->arity() - 1;
  Polynomial u = Polynomial::variable(ext, ui);
  Polynomial one_minus_u = Polynomial::constant(ext, Rational(1)) - u;

  std::vector<Polynomial> gens;
  for (const Polynomial& p : ideal.generators())
    gens.push_back(u * p.lifted_to(ext));
  gens.push_back(one_minus_u * g.lifted_to(ext));

  Ideal meet = eliminate(Ideal(ext, std::move(gens)), {ui}, opts);

  std::vector<Polynomial> qgens;
  for (const Polynomial& h : meet.generators()) {
    auto q = exact_divide(h, g);
    if (!q)
      throw std::logic_error(
          "quotient: intersection generator not divisible by g");
    if (!q->is_zero()) qgens.push_back(std::move(*q));
  }
  return Ideal(ideal.ring(), std::move(qgens));
}

SaturationResult saturate(const Ideal& ideal, const Polynomial& g,
                          const EngineOptions& opts) {
  if (g.is_zero()) throw ValidationError("saturation by zero");
  Ideal current = ideal;
  std::vector<std::vector<int>> current_key = leading_ideal_key(current, opts);
  unsigned steps = 0;
  while (true) {
    Ideal next = quotient(current, g, opts);
    ++steps;
    std::vector<std::vector<int>> next_key = leading_ideal_key(next, opts);
    // current is contained in next, so equal leading ideals under one local
    // order force equal ideals: a nonzero Mora remainder of an element of
    // next against current's basis would have a leading monomial outside
    // the shared leading ideal.
    if (next_key == current_key) return SaturationResult{std::move(next), steps};
    if (steps >= opts.radical_bound)
      throw BudgetError("saturation_steps",
                        "no stabilization within " +
                            std::to_string(opts.radical_bound) + " colon steps");
    current = std::move(next);
    current_key = std::move(next_key);
  }
}

bool is_zero_dimensional_local(const Ideal& ideal, const EngineOptions& opts) {
  return local_length(ideal, opts).has_value();
}

RadicalProbe radical_membership(const Polynomial& g, const Ideal& ideal,
                                const EngineOptions& opts) {
  std::shared_ptr<const StandardBasis> sb =
      ideal.basis(default_local_order(*ideal.ring(), opts), opts);
  Polynomial power = Polynomial::constant(g.ring(), Rational(1));
  for (unsigned k = 1; k <= opts.radical_bound; ++k) {
    power = power * g;
    if (in_ideal(power, *sb, opts)) return RadicalProbe{k};
  }
  return RadicalProbe{std::nullopt};
}

}  // namespace polarcalc
