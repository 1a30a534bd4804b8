#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace polarcalc {

// Exact rational scalar. Always normalized: lowest terms, denominator > 0,
// zero stored as 0/1 (GMP's canonical form).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, integer literals are rationals
  Rational(long n, long d) : v_(n, d) { v_.canonicalize(); }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "n" or "n/d" with arbitrary-precision digits.
  static Rational from_string(const std::string& text) { return Rational(mpq_class(text, 10)); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const { return Rational(mpq_class(v_ / o.v_)); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }

  Rational inverse() const { return Rational(mpq_class(1 / v_)); }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

}  // namespace polarcalc
