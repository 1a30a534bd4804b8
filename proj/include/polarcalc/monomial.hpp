#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <numeric>
#include <vector>

namespace polarcalc {

// Exponent vector, one slot per ring variable.
class Monomial {
 public:
  explicit Monomial(std::size_t arity) : e_(arity, 0) {}
  explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    assert(std::all_of(e_.begin(), e_.end(), [](int x) { return x >= 0; }));
  }

  std::size_t arity() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  Monomial times(const Monomial& o) const {
    std::vector<int> r(e_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.e_[i];
    return Monomial(std::move(r));
  }

  // Requires o.divides(*this).
  Monomial divided_by(const Monomial& o) const {
    std::vector<int> r(e_);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] -= o.e_[i];
      assert(r[i] >= 0);
    }
    return Monomial(std::move(r));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> r(a.e_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b.e_[i]);
    return Monomial(std::move(r));
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  // a > b under graded reverse lexicographic order; the canonical term order
  // used for storage and display (semantic orders live in MonomialOrder).
  static bool grevlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = a.e_.size(); i-- > 0;) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
    }
    return false;
  }

  struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return grevlex_greater(a, b);
    }
  };

 private:
  std::vector<int> e_;
};

}  // namespace polarcalc
