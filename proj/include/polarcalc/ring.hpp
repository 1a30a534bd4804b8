#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polarcalc/errors.hpp"

namespace polarcalc {

// A polynomial ring over Q with a fixed ordered list of variable names.
// Immutable; always handled through shared_ptr so polynomials can carry a
// cheap reference to their ambient ring. Equality is by content, not pointer:
// two rings with the same variable list (and the same marked parameter, if
// any) are interchangeable.
class Ring {
 public:
  static std::shared_ptr<const Ring> make(
      std::vector<std::string> variables,
      std::optional<std::size_t> parameter_index = std::nullopt);

  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable(std::size_t i) const { return vars_[i]; }

  // Index of a variable name, if declared.
  std::optional<std::size_t> index_of(const std::string& name) const;

  // Deformation parameter slot, when this ring models a one-parameter family.
  std::optional<std::size_t> parameter_index() const { return param_; }

  bool same_as(const Ring& other) const {
    return vars_ == other.vars_ && param_ == other.param_;
  }

  // New ring with extra variables appended (used for elimination aux vars).
  std::shared_ptr<const Ring> extended(
      const std::vector<std::string>& extra) const;

  // New ring keeping only the named subset, in this ring's order.
  std::shared_ptr<const Ring> restricted(
      const std::vector<std::string>& keep) const;

 private:
  Ring(std::vector<std::string> vars, std::optional<std::size_t> param)
      : vars_(std::move(vars)), param_(param) {}

  std::vector<std::string> vars_;
  std::optional<std::size_t> param_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Throws RingMismatchError unless a and b agree by content.
void require_same_ring(const Ring& a, const Ring& b, const char* where);

}  // namespace polarcalc
