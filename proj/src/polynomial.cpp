#include "polarcalc/polynomial.hpp"

#include <sstream>

namespace polarcalc {

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring)); }

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
  Polynomial p(ring);
  p.add_term(Monomial(ring->arity()), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  std::vector<int> e(ring->arity(), 0);
  e.at(index) = 1;
  Polynomial p(ring);
  p.add_term(Monomial(std::move(e)), Rational(1));
  return p;
}

Polynomial Polynomial::monomial_term(RingPtr ring, Monomial m, Rational c) {
  if (m.arity() != ring->arity())
    throw ValidationError("monomial arity does not match ring");
  Polynomial p(ring);
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  r -= o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(*ring_, *o.ring_, "add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(*ring_, *o.ring_, "sub");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(*ring_, *o.ring_, "mul");
  Polynomial r(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [mm, k] : terms_) r.terms_.emplace(mm.times(m), k * c);
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1u) result = result * base;
    if (n > 1) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return ring_->same_as(*o.ring_) && terms_ == o.terms_;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    int e = m[i];
    if (e == 0) continue;
    std::vector<int> exps = m.exponents();
    exps[i] = e - 1;
    r.add_term(Monomial(std::move(exps)), c * Rational(e));
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values,
                                  RingPtr target) const {
  if (values.size() != ring_->arity())
    throw ValidationError("substitute: need one value per variable");
  Polynomial r = Polynomial::zero(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (m[i] == 0) continue;
      term = term * values[i].pow(static_cast<unsigned>(m[i]));
    }
    r += term;
  }
  return r;
}

Polynomial Polynomial::lifted_to(RingPtr target) const {
  std::vector<std::size_t> slot(ring_->arity());
  for (std::size_t i = 0; i < ring_->arity(); ++i) {
    auto j = target->index_of(ring_->variable(i));
    if (!j) throw ValidationError("lift: target ring lacks " + ring_->variable(i));
    slot[i] = *j;
  }
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(target->arity(), 0);
    for (std::size_t i = 0; i < slot.size(); ++i) e[slot[i]] = m[i];
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial Polynomial::restricted_to(RingPtr target) const {
  std::vector<std::optional<std::size_t>> slot(ring_->arity());
  for (std::size_t i = 0; i < ring_->arity(); ++i)
    slot[i] = target->index_of(ring_->variable(i));
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(target->arity(), 0);
    for (std::size_t i = 0; i < slot.size(); ++i) {
      if (m[i] == 0) continue;
      if (!slot[i])
        throw ValidationError("restrict: term involves " + ring_->variable(i));
      e[*slot[i]] = m[i];
    }
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

bool Polynomial::independent_of(std::size_t i) const {
  for (const auto& [m, c] : terms_)
    if (m[i] != 0) return false;
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational abs = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    bool wrote_coeff = false;
    if (!abs.is_one() || m.is_one()) {
      out << abs.str();
      wrote_coeff = true;
    }
    bool wrote_var = false;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      if (wrote_coeff || wrote_var) out << "*";
      out << ring_->variable(i);
      if (m[i] > 1) out << "^" << m[i];
      wrote_var = true;
    }
  }
  return out.str();
}

}  // namespace polarcalc
