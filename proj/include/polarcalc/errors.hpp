#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polarcalc {

class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::string which, const std::string& detail)
      : std::runtime_error("budget exceeded [" + which + "]: " + detail),
        which_(std::move(which)) {}

  // Name of the exhausted guard: "max_pairs", "max_degree", "saturation_steps".
  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(std::string check, const std::string& detail)
      : std::runtime_error("hypothesis failure [" + check + "]: " + detail),
        check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, undeclared_variable, bad_rational };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : std::runtime_error(message + " at offset " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

class RingMismatchError : public std::invalid_argument {
 public:
  explicit RingMismatchError(const std::string& what)
      : std::invalid_argument("ring mismatch: " + what) {}
};

// Malformed job files, bad operation arguments (CLI exit code 2).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace polarcalc
