#include "polarcalc/ideal.hpp"

#include "polarcalc/gb.hpp"

namespace polarcalc {

std::vector<Monomial> StandardBasis::leading_monomials() const {
  std::vector<Monomial> r;
  r.reserve(generators.size());
  for (const auto& g : generators) r.push_back(leading_monomial(g, order));
  return r;
}

bool StandardBasis::contains_unit() const {
  for (const auto& g : generators)
    if (leading_monomial(g, order).is_one()) return true;
  return false;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)),
      gens_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_)
    require_same_ring(*ring_, *g.ring(), "ideal generators");
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

std::shared_ptr<const StandardBasis> Ideal::basis(
    const MonomialOrder& order, const EngineOptions& opts) const {
  std::string key = order.signature();
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->by_order.find(key);
  if (it == cache_->by_order.end()) {
    auto sb = std::make_shared<const StandardBasis>(
        standard_basis(gens_, order, opts));
    it = cache_->by_order.emplace(key, std::move(sb)).first;
  }
  return it->second;
}

Ideal Ideal::with_extra_generator(const Polynomial& g) const {
  std::vector<Polynomial> gens = gens_;
  gens.push_back(g);
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::lifted_to(RingPtr target) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.lifted_to(target));
  return Ideal(std::move(target), std::move(gens));
}

}  // namespace polarcalc
