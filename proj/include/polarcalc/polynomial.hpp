#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polarcalc/monomial.hpp"
#include "polarcalc/rational.hpp"
#include "polarcalc/ring.hpp"

namespace polarcalc {

// Element of a polynomial ring over Q. Terms are kept in a map ordered by
// descending grevlex so that iteration and printing are canonical regardless
// of how the polynomial was built. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, Monomial::GrevlexGreater>;

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, Rational c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial_term(RingPtr ring, Monomial m, Rational c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // -1 for the zero polynomial.
  int total_degree() const;

  // Coefficient of m (zero if absent).
  Rational coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned n) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Partial derivative with respect to variable index i.
  Polynomial derivative(std::size_t i) const;

  // Substitute values[i] for variable i (values must have ring arity).
  Polynomial substitute(const std::vector<Polynomial>& values,
                        RingPtr target) const;

  // Reinterpret in a ring whose variables are a superset (by name); each
  // variable of this ring must exist in target.
  Polynomial lifted_to(RingPtr target) const;

  // Reinterpret in a subring; throws ValidationError if a term involves a
  // variable outside the subring.
  Polynomial restricted_to(RingPtr target) const;

  // True when no term involves variable index i.
  bool independent_of(std::size_t i) const;

  // Canonical human-readable form, e.g. "x^2*y - 1/2*t + 3".
  std::string str() const;

 private:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  void add_term(const Monomial& m, const Rational& c);

  RingPtr ring_;
  TermMap terms_;
};

}  // namespace polarcalc
