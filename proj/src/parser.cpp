#include "stiefel/parser.hpp"

#include <cctype>
#include <string>

#include "stiefel/errors.hpp"

namespace stiefel {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Variables& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    skip_space();
    // Juxtaposition such as "2x" or "x y" is not multiplication.
    if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '(')
      fail("missing '*' between factors");
    return p;
  }

  Polynomial factor() {
    skip_space();
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return maybe_power(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(vars_, coefficient());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      std::size_t index = 0;
      try {
        index = variable_index(vars_, name);
      } catch (const VariableMismatch&) {
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
      }
      return maybe_power(Polynomial::variable(vars_, index));
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  Polynomial maybe_power(Polynomial base) {
    if (!accept('^')) return base;
    skip_space();
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    std::size_t start = pos_;
    Integer e = integer();
    if (peek() == '.' || peek() == '/') {
      pos_ = start;
      fail("non-integer exponent");
    }
    if (!e.fits_uint_p() || e > 1000000) {
      pos_ = start;
      fail("exponent too large");
    }
    return pow(base, static_cast<unsigned>(e.get_ui()));
  }

  Integer integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Rational coefficient() {
    Integer num = integer();
    if (peek() == '.') fail("decimal coefficients are not supported; use p/q");
    skip_space();
    if (peek() != '/') return Rational(num);
    std::size_t slash = pos_;
    ++pos_;
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected positive integer denominator");
    std::size_t start = pos_;
    Integer den = integer();
    if (den == 0) {
      pos_ = start;
      fail("zero denominator");
    }
    (void)slash;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view text_;
  const Variables& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Variables& vars) { return Parser(text, vars).parse(); }

}  // namespace stiefel
