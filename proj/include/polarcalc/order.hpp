#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polarcalc/monomial.hpp"
#include "polarcalc/options.hpp"
#include "polarcalc/ring.hpp"

namespace polarcalc {

// Semantic monomial orders used by the standard-basis engine. An order is a
// sequence of blocks over disjoint variable subsets; monomials are compared
// block by block. Within one block:
//
//   global block: degree-reverse-lexicographic. Higher degree wins; on equal
//     degree, scanning exponents from the last block variable backwards, the
//     monomial with the smaller exponent at the first difference is larger.
//
//   local block: negative degree-reverse-lexicographic. Smaller degree wins
//     (so 1 is the largest monomial and the order is adapted to the local
//     ring at the origin); ties break by the same reverse scan.
//
// An elimination order for a set S is a global block on S followed by a
// local block on the remaining variables. Any monomial containing an S
// variable then exceeds every S-free monomial, so leading terms detect
// membership in the eliminated subring.
class MonomialOrder {
 public:
  enum class BlockKind { global, local };

  struct Block {
    BlockKind kind;
    std::vector<std::size_t> vars;  // ring indices, significance order
  };

  static MonomialOrder global_order(const Ring& ring);
  static MonomialOrder local_order(const Ring& ring);
  // Local order with an explicit variable significance sequence; used by the
  // order-independence checks.
  static MonomialOrder local_order_permuted(const Ring& ring,
                                            std::vector<std::size_t> vars);
  static MonomialOrder elimination_order(const Ring& ring,
                                         const std::vector<std::size_t>& elim);

  const std::vector<Block>& blocks() const { return blocks_; }

  // True when every block is global (termination of division is classical).
  bool is_global() const;

  // True when some monomial can be smaller than 1 (an honest local order);
  // the basis engine must then use Mora reduction.
  bool is_local() const { return !is_global(); }

  // a > b?
  bool greater(const Monomial& a, const Monomial& b) const;

  // Stable text key identifying the order, for basis caching and reports.
  std::string signature() const;

 private:
  explicit MonomialOrder(std::vector<Block> blocks)
      : blocks_(std::move(blocks)) {}

  std::vector<Block> blocks_;
};

// The local order selected by the engine options; the one used wherever the
// engine needs some local order and the caller has not forced another.
MonomialOrder default_local_order(const Ring& ring, const EngineOptions& opts);

}  // namespace polarcalc
