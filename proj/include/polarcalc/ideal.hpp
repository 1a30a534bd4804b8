#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "polarcalc/options.hpp"
#include "polarcalc/order.hpp"
#include "polarcalc/polynomial.hpp"

namespace polarcalc {

// A standard basis (Groebner basis when the order is global) of an ideal,
// minimal and monic, sorted by decreasing leading monomial. `reduced` records
// whether tails were fully reduced as well; under honest local orders tail
// reduction need not terminate, so there the basis is minimal but not tail
// reduced.
struct StandardBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order;
  bool reduced = false;

  std::vector<Monomial> leading_monomials() const;
  bool contains_unit() const;
};

// An ideal given by a finite generating set. Bases are computed lazily per
// monomial order and cached; the cache is shared across copies so passing
// ideals by value stays cheap.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool has_no_generators() const { return gens_.empty(); }

  // Cached lookup; computes via the basis engine on first use. Returned as a
  // shared pointer so the result stays valid past the ideal it came from.
  std::shared_ptr<const StandardBasis> basis(const MonomialOrder& order,
                                             const EngineOptions& opts) const;

  Ideal with_extra_generator(const Polynomial& g) const;

  // Generators mapped into a compatible ring (superset of variables).
  Ideal lifted_to(RingPtr target) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const StandardBasis>> by_order;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace polarcalc
