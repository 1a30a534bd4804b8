#include "polarcalc/parse.hpp"

#include <cctype>
#include <string>

namespace polarcalc {
namespace {

constexpr unsigned kMaxExponent = 100000;

// Recursive descent over the grammar in parse.hpp. Positions in errors are
// zero-based character offsets into the source string.
class Parser {
 public:
  Parser(const std::string& src, RingPtr ring) : src_(src), ring_(std::move(ring)) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < src_.size())
      throw ParseError(ParseError::Kind::syntax, pos_, "unexpected trailing input");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Polynomial expr() {
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    Polynomial p = term();
    if (negate) p = -p;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        p += term();
      } else if (c == '-') {
        ++pos_;
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) return b.pow(natural());
    return b;
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')'))
        throw ParseError(ParseError::Kind::syntax, pos_, "expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    throw ParseError(ParseError::Kind::syntax, pos_,
                     "expected a number, variable, or '('");
  }

  std::string digits(ParseError::Kind error_kind) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw ParseError(error_kind, pos_, "expected digits");
    return src_.substr(start, pos_ - start);
  }

  Polynomial rational_literal() {
    std::string num = digits(ParseError::Kind::syntax);
    Rational value = Rational::from_string(num);
    // A '/' directly after an integer is part of the literal; division is
    // not an operator of the grammar.
    if (peek() == '/') {
      ++pos_;
      std::size_t den_pos = pos_;
      std::string den = digits(ParseError::Kind::bad_rational);
      Rational d = Rational::from_string(den);
      if (d.is_zero())
        throw ParseError(ParseError::Kind::bad_rational, den_pos, "zero denominator");
      value = value / d;
    }
    return Polynomial::constant(ring_, value);
  }

  Polynomial variable() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++pos_;
      else
        break;
    }
    std::string name = src_.substr(start, pos_ - start);
    auto idx = ring_->index_of(name);
    if (!idx)
      throw ParseError(ParseError::Kind::undeclared_variable, start,
                       "undeclared variable '" + name + "'");
    return Polynomial::variable(ring_, *idx);
  }

  unsigned natural() {
    std::size_t start = pos_;
    std::string d = digits(ParseError::Kind::syntax);
    if (d.size() > 6)
      throw ParseError(ParseError::Kind::syntax, start, "exponent too large");
    unsigned value = static_cast<unsigned>(std::stoul(d));
    if (value > kMaxExponent)
      throw ParseError(ParseError::Kind::syntax, start, "exponent too large");
    return value;
  }

  const std::string& src_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, RingPtr ring) {
  return Parser(text, std::move(ring)).run();
}

}  // namespace polarcalc
