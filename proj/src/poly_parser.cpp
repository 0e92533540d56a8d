#include "cherncalc/poly_parser.hpp"

#include <cctype>
#include <string>

#include "cherncalc/error.hpp"

namespace cherncalc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  RatPoly parse() {
    RatPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse, "polynomial parse error at offset " +
                                      std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_atom() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  RatPoly expr() {
    RatPoly acc(nvars_);
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    RatPoly t = term();
    acc = negate ? -t : t;
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_++] == '-';
      RatPoly next = term();
      acc = minus ? acc - next : acc + next;
    }
    return acc;
  }

  RatPoly term() {
    RatPoly acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_atom()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  RatPoly factor() {
    RatPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip_space();
      const std::string digits = read_digits();
      if (digits.empty()) fail("exponent must be a nonnegative integer");
      if (digits.size() > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  RatPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatPoly inner = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      // A '/' directly followed by digits continues the rational literal.
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        num += "/" + read_digits();
      }
      return RatPoly::constant(nvars_, parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RatPoly variable() {
    const char c = text_[pos_++];
    std::size_t index = 0;
    if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::string digits = read_digits();
      if (digits.size() > 3) fail("variable index too large");
      index = std::stoul(digits);
    } else if (c == 'x') {
      index = 0;
    } else if (c == 'y') {
      index = 1;
    } else if (c == 'z') {
      index = 2;
    } else if (c == 'w') {
      index = 3;
    } else {
      fail("unknown variable '" + std::string(1, c) + "'");
    }
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) &&
        !(text_[pos_] == 'x' || text_[pos_] == 'y' || text_[pos_] == 'z' || text_[pos_] == 'w'))
      fail("unknown identifier");
    if (index >= nvars_)
      fail("variable x" + std::to_string(index) + " is outside the ring x0..x" +
           std::to_string(nvars_ == 0 ? 0 : nvars_ - 1));
    return RatPoly::variable(nvars_, index);
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

RatPoly parse_polynomial(std::string_view text, std::size_t nvars) {
  if (nvars == 0 || nvars > kMaxVars)
    throw Error(ErrorKind::invalid_argument, "ring must have 1.." +
                                                 std::to_string(kMaxVars) + " variables");
  return Parser(text, nvars).parse();
}

}  // namespace cherncalc
