#include "expression_parser.hpp"

#include <cctype>

#include "gmconn/error.hpp"

namespace gmconn::detail {
namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars, const VariableResolver& resolve)
      : text_(text), nvars_(nvars), resolve_(resolve) {}

  RatFunc parse() {
    RatFunc value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  RatFunc term() {
    RatFunc value = unary();
    while (true) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        value /= d;
      } else {
        return value;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (accept('^')) {
      skip_space();
      const std::string digits = take_digits();
      if (digits.empty()) fail("expected integer exponent");
      if (digits.size() > 4) fail("exponent too large");
      const int e = std::stoi(digits);
      RatFunc result = RatFunc::constant(nvars_, Rational(1));
      for (int i = 0; i < e; ++i) result *= base;
      return result;
    }
    return base;
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  RatFunc atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string digits = take_digits();
      return RatFunc::constant(nvars_, Rational(mpz_class(digits, 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto var = resolve_(name);
      if (!var) {
        pos_ = start;
        fail("unknown variable \"" + std::string(name) + "\"");
      }
      return RatFunc(MultiPoly::variable(nvars_, *var));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int nvars_;
  const VariableResolver& resolve_;
};

}  // namespace

RatFunc parse_expression(std::string_view text, int nvars, const VariableResolver& resolve) {
  return Parser(text, nvars, resolve).parse();
}

}  // namespace gmconn::detail
