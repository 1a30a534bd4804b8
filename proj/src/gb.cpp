#include "polarcalc/gb.hpp"

#include <bit>
#include <set>
#include <tuple>
#include <utility>

namespace polarcalc {
namespace {

// Hard cap on single normal-form runs, independent of the configurable
// budgets. Mora reduction terminates in theory; this guard turns a bug into
// a loud failure instead of a hang.
constexpr std::uint64_t kReductionStepCap = 2'000'000;

struct Entry {
  Polynomial poly;
  Monomial lm;
  Rational lc;
  int ecart;  // total degree minus leading-monomial degree
};

const std::pair<const Monomial, Rational>& leading_term_ref(
    const Polynomial& f, const MonomialOrder& order) {
  const std::pair<const Monomial, Rational>* best = nullptr;
  for (const auto& t : f.terms())
    if (!best || order.greater(t.first, best->first)) best = &t;
  return *best;
}

Entry make_entry(Polynomial p, const MonomialOrder& order) {
  const auto& lt = leading_term_ref(p, order);
  Monomial lm = lt.first;
  Rational lc = lt.second;
  int ecart = p.total_degree() - lm.degree();
  return Entry{std::move(p), std::move(lm), std::move(lc), ecart};
}

void check_degree(const Polynomial& h, const EngineOptions& opts) {
  if (h.total_degree() > static_cast<int>(opts.max_degree))
    throw BudgetError("max_degree",
                      "intermediate degree " + std::to_string(h.total_degree()) +
                          " over cap " + std::to_string(opts.max_degree));
}

// Mora weak normal form. The reducer set T grows: when every eligible
// reducer has strictly larger ecart than the current remainder, the
// remainder itself is adjoined before reducing, which is what makes the
// procedure terminate under local orders. Reducer choice (smallest ecart,
// then first in T) is deterministic.
Polynomial mora_nf(Polynomial h, std::vector<Entry> T, const MonomialOrder& order,
                   const EngineOptions& opts) {
  std::uint64_t steps = 0;
  while (!h.is_zero()) {
    check_degree(h, opts);
    if (++steps > kReductionStepCap)
      throw BudgetError("reduction_steps", "normal form exceeded the step cap");
    const auto& lt = leading_term_ref(h, order);
    int ecart_h = h.total_degree() - lt.first.degree();
    int best = -1;
    for (int i = 0; i < static_cast<int>(T.size()); ++i) {
      if (!T[i].lm.divides(lt.first)) continue;
      if (best < 0 || T[i].ecart < T[best].ecart) best = i;
    }
    if (best < 0) return h;
    if (T[best].ecart > ecart_h) T.push_back(make_entry(h, order));
    const Entry& g = T[best];
    Monomial q = lt.first.divided_by(g.lm);
    Rational c = lt.second / g.lc;
    h -= g.poly.times_term(q, c);
  }
  return h;
}

Polynomial spoly(const Entry& a, const Entry& b) {
  Monomial l = Monomial::lcm(a.lm, b.lm);
  Polynomial pa = a.poly.times_term(l.divided_by(a.lm), a.lc.inverse());
  Polynomial pb = b.poly.times_term(l.divided_by(b.lm), b.lc.inverse());
  return pa - pb;
}

// Classical total division, every term reduced. Only called under global
// orders, where the leading monomial strictly decreases and the procedure
// is a well-founded recursion.
Polynomial full_reduce(Polynomial f, const std::vector<Entry>& T,
                       std::size_t skip, const MonomialOrder& order,
                       const EngineOptions& opts) {
  Polynomial result = Polynomial::zero(f.ring());
  std::uint64_t steps = 0;
  while (!f.is_zero()) {
    check_degree(f, opts);
    if (++steps > kReductionStepCap)
      throw BudgetError("reduction_steps", "tail reduction exceeded the step cap");
    const auto& lt = leading_term_ref(f, order);
    int hit = -1;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (i == skip) continue;
      if (T[i].lm.divides(lt.first)) {
        hit = static_cast<int>(i);
        break;
      }
    }
    if (hit >= 0) {
      const Entry& g = T[static_cast<std::size_t>(hit)];
      f -= g.poly.times_term(lt.first.divided_by(g.lm), lt.second / g.lc);
    } else {
      Polynomial t = Polynomial::monomial_term(f.ring(), lt.first, lt.second);
      result += t;
      f -= t;
    }
  }
  return result;
}

}  // namespace

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ValidationError("leading monomial of zero");
  return leading_term_ref(f, order).first;
}

Rational leading_coefficient(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ValidationError("leading coefficient of zero");
  return leading_term_ref(f, order).second;
}

Polynomial weak_normal_form(const Polynomial& f,
                            const std::vector<Polynomial>& reducers,
                            const MonomialOrder& order,
                            const EngineOptions& opts) {
  std::vector<Entry> T;
  for (const auto& g : reducers) {
    require_same_ring(*f.ring(), *g.ring(), "normal_form");
    if (g.is_zero()) continue;
    T.push_back(make_entry(g, order));
  }
  return mora_nf(f, std::move(T), order, opts);
}

StandardBasis standard_basis(const std::vector<Polynomial>& generators,
                             const MonomialOrder& order,
                             const EngineOptions& opts) {
  std::vector<Entry> G;
  for (const auto& g : generators) {
    if (!G.empty())
      require_same_ring(*G.front().poly.ring(), *g.ring(), "standard_basis");
    if (g.is_zero()) continue;
    check_degree(g, opts);
    G.push_back(make_entry(g, order));
  }

  StandardBasis out{{}, order, order.is_global()};
  if (G.empty()) return out;  // zero ideal

  // Pair queue in normal strategy: smallest lcm degree first, then the lcm
  // exponent vector lexicographically, then the indices.
  using PairKey = std::tuple<int, std::vector<int>, std::size_t, std::size_t>;
  std::set<PairKey> queue;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(G[i].lm, G[j].lm);
      queue.emplace(l.degree(), l.exponents(), i, j);
    }
  };
  for (std::size_t j = 0; j < G.size(); ++j) push_pairs_for(j);

  std::uint64_t processed = 0;
  while (!queue.empty()) {
    auto it = queue.begin();
    std::size_t i = std::get<2>(*it), j = std::get<3>(*it);
    queue.erase(it);
    if (++processed > opts.max_pairs)
      throw BudgetError("max_pairs",
                        "pair budget " + std::to_string(opts.max_pairs) + " exhausted");
    Polynomial s = spoly(G[i], G[j]);
    if (s.is_zero()) continue;
    Polynomial r = mora_nf(std::move(s), G, order, opts);
    if (r.is_zero()) continue;
    G.push_back(make_entry(std::move(r), order));
    push_pairs_for(G.size() - 1);
  }

  // Minimalize: drop any element whose leading monomial is divisible by
  // another's; among equal leading monomials keep the earliest.
  std::vector<bool> drop(G.size(), false);
  for (std::size_t a = 0; a < G.size(); ++a) {
    for (std::size_t b = 0; b < G.size(); ++b) {
      if (a == b || !G[b].lm.divides(G[a].lm)) continue;
      if (G[b].lm != G[a].lm || b < a) {
        drop[a] = true;
        break;
      }
    }
  }
  std::vector<Entry> kept;
  for (std::size_t a = 0; a < G.size(); ++a)
    if (!drop[a]) kept.push_back(std::move(G[a]));

  RingPtr ring = kept.front().poly.ring();

  // Canonical unit form: a leading monomial 1 means the ideal is the whole
  // local ring, represented as (1).
  for (const auto& e : kept) {
    if (e.lm.is_one()) {
      out.generators = {Polynomial::constant(ring, Rational(1))};
      return out;
    }
  }

  for (auto& e : kept) {
    if (!e.lc.is_one()) {
      e.poly = e.poly.scaled(e.lc.inverse());
      e.lc = Rational(1);
    }
  }
  std::sort(kept.begin(), kept.end(), [&](const Entry& x, const Entry& y) {
    return order.greater(x.lm, y.lm);
  });

  if (order.is_global()) {
    for (std::size_t a = 0; a < kept.size(); ++a)
      kept[a] = make_entry(full_reduce(kept[a].poly, kept, a, order, opts), order);
  }

  out.generators.reserve(kept.size());
  for (auto& e : kept) out.generators.push_back(std::move(e.poly));
  return out;
}

bool in_ideal(const Polynomial& f, const StandardBasis& basis,
              const EngineOptions& opts) {
  if (f.is_zero()) return true;
  return weak_normal_form(f, basis.generators, basis.order, opts).is_zero();
}

std::optional<int> local_dim(const Ideal& ideal, const EngineOptions& opts) {
  std::shared_ptr<const StandardBasis> sb =
      ideal.basis(default_local_order(*ideal.ring(), opts), opts);
  if (sb->contains_unit()) return std::nullopt;
  std::vector<Monomial> lms = sb->leading_monomials();
  std::size_t n = ideal.ring()->arity();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool free_of_li = true;
    for (const Monomial& m : lms) {
      bool supported_inside = true;
      for (std::size_t v = 0; v < n && supported_inside; ++v)
        if (m[v] > 0 && !((mask >> v) & 1u)) supported_inside = false;
      if (supported_inside) {
        free_of_li = false;
        break;
      }
    }
    if (free_of_li) best = std::max(best, std::popcount(mask));
  }
  return best;
}

std::optional<std::uint64_t> local_length(const Ideal& ideal,
                                          const EngineOptions& opts) {
  std::shared_ptr<const StandardBasis> sb =
      ideal.basis(default_local_order(*ideal.ring(), opts), opts);
  if (sb->contains_unit()) return 0;
  std::vector<Monomial> lms = sb->leading_monomials();
  std::size_t n = ideal.ring()->arity();

  // The quotient is finite dimensional exactly when the leading ideal holds
  // a pure power of every variable; the box below those powers then bounds
  // the staircase.
  std::vector<int> bound(n, -1);
  for (const Monomial& m : lms) {
    int var = -1;
    bool pure = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (m[v] == 0) continue;
      if (var >= 0) {
        pure = false;
        break;
      }
      var = static_cast<int>(v);
    }
    if (pure && var >= 0)
      bound[var] = bound[var] < 0 ? m[var] : std::min(bound[var], m[var]);
  }
  for (int b : bound)
    if (b < 0) return std::nullopt;

  std::uint64_t box = 1;
  for (int b : bound) {
    box *= static_cast<std::uint64_t>(b);
    if (box > 10'000'000ULL)
      throw BudgetError("max_degree", "staircase enumeration too large");
  }

  auto in_leading_ideal = [&](const std::vector<int>& exps) {
    for (const Monomial& m : lms) {
      bool div = true;
      for (std::size_t v = 0; v < n; ++v)
        if (m[v] > exps[v]) {
          div = false;
          break;
        }
      if (div) return true;
    }
    return false;
  };

  std::vector<int> e(n, 0);
  std::uint64_t count = 0;
  while (true) {
    if (!in_leading_ideal(e)) ++count;
    std::size_t k = 0;
    while (k < n) {
      if (++e[k] < bound[k]) break;
      e[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return count;
}

}  // namespace polarcalc
