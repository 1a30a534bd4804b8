#include "polarcalc/order.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polarcalc {
namespace {

std::vector<std::size_t> all_indices(const Ring& ring) {
  std::vector<std::size_t> v(ring.arity());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// -1, 0, +1 comparison of a and b restricted to one block. Both kinds use
// the reverse lexicographic tie-break: scan the block's variables from least
// significant to most; at the first difference the smaller exponent belongs
// to the larger monomial.
int block_compare(const MonomialOrder::Block& blk, const Monomial& a,
                  const Monomial& b) {
  int da = 0, db = 0;
  for (std::size_t v : blk.vars) {
    da += a[v];
    db += b[v];
  }
  if (da != db) {
    bool a_bigger = blk.kind == MonomialOrder::BlockKind::global ? da > db : da < db;
    return a_bigger ? 1 : -1;
  }
  for (std::size_t i = blk.vars.size(); i-- > 0;) {
    std::size_t v = blk.vars[i];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::global_order(const Ring& ring) {
  return MonomialOrder({Block{BlockKind::global, all_indices(ring)}});
}

MonomialOrder MonomialOrder::local_order(const Ring& ring) {
  return MonomialOrder({Block{BlockKind::local, all_indices(ring)}});
}

MonomialOrder MonomialOrder::local_order_permuted(const Ring& ring,
                                                  std::vector<std::size_t> vars) {
  std::set<std::size_t> seen(vars.begin(), vars.end());
  if (vars.size() != ring.arity() || seen.size() != ring.arity() ||
      (ring.arity() > 0 && *seen.rbegin() != ring.arity() - 1))
    throw ValidationError("order permutation must cover every ring variable");
  return MonomialOrder({Block{BlockKind::local, std::move(vars)}});
}

MonomialOrder MonomialOrder::elimination_order(const Ring& ring,
                                               const std::vector<std::size_t>& elim) {
  std::set<std::size_t> first(elim.begin(), elim.end());
  if (first.size() != elim.size())
    throw ValidationError("duplicate variable in elimination block");
  for (std::size_t v : first)
    if (v >= ring.arity()) throw ValidationError("elimination index out of range");
  std::vector<Block> blocks;
  if (!elim.empty()) blocks.push_back(Block{BlockKind::global, elim});
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < ring.arity(); ++i)
    if (!first.count(i)) rest.push_back(i);
  if (!rest.empty()) blocks.push_back(Block{BlockKind::local, std::move(rest)});
  if (blocks.empty()) throw ValidationError("order needs at least one variable");
  return MonomialOrder(std::move(blocks));
}

bool MonomialOrder::is_global() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) {
    return b.kind == BlockKind::global;
  });
}

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  for (const Block& blk : blocks_) {
    int c = block_compare(blk, a, b);
    if (c != 0) return c > 0;
  }
  return false;
}

MonomialOrder default_local_order(const Ring& ring, const EngineOptions& opts) {
  if (opts.local_order == LocalOrderChoice::natural)
    return MonomialOrder::local_order(ring);
  std::vector<std::size_t> rev(ring.arity());
  for (std::size_t i = 0; i < rev.size(); ++i) rev[i] = ring.arity() - 1 - i;
  return MonomialOrder::local_order_permuted(ring, std::move(rev));
}

std::string MonomialOrder::signature() const {
  std::ostringstream out;
  for (const Block& blk : blocks_) {
    out << (blk.kind == BlockKind::global ? "g[" : "l[");
    for (std::size_t i = 0; i < blk.vars.size(); ++i) {
      if (i) out << ",";
      out << blk.vars[i];
    }
    out << "]";
  }
  return out.str();
}

}  // namespace polarcalc
