#include "towerlab/parse.hpp"

#include <cctype>

namespace towerlab {

namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected, const std::string& input) {
  std::string msg = "parse error at offset " + std::to_string(offset) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
  if (offset < input.size()) msg += std::string(" but found '") + input[offset] + "'";
  else msg += " but found end of input";
  return msg;
}

class Parser {
 public:
  Parser(const FieldPtr& field, const std::string& s) : K_(field), s_(s) {}

  BivarPoly run() {
    BivarPoly r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, {"operator", "end of input"}, s_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BivarPoly expr() {
    BivarPoly r = term();
    for (;;) {
      if (eat('+')) r = r + term();
      else if (eat('-')) r = r - term();
      else return r;
    }
  }

  BivarPoly term() {
    BivarPoly r = unary();
    while (eat('*')) r = r * unary();
    return r;
  }

  BivarPoly unary() {
    if (eat('-')) return -unary();
    return power();
  }

  BivarPoly power() {
    BivarPoly b = atom();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      std::uint64_t e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
        require(e <= 1000000, ErrorCode::ParseError, "exponent too large");
        ++pos_;
      }
      if (pos_ == start) throw ParseError(pos_, {"exponent"}, s_);
      return b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  BivarPoly atom() {
    skip();
    if (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::uint64_t p = K_->characteristic();
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          v = (v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0')) % p;
          ++pos_;
        }
        return BivarPoly::constant(K_, K_->from_int(static_cast<std::int64_t>(v)));
      }
      if (c == 'x') return ++pos_, BivarPoly::x(K_);
      if (c == 'y') return ++pos_, BivarPoly::y(K_);
      if (c == 'w') {
        ++pos_;
        return BivarPoly::constant(K_, K_->degree() == 1 ? K_->from_int(0) : K_->generator());
      }
      if (c == '(') {
        ++pos_;
        BivarPoly r = expr();
        if (!eat(')')) throw ParseError(pos_, {"')'"}, s_);
        return r;
      }
    }
    throw ParseError(pos_, {"integer", "x", "y", "w", "'('", "'-'"}, s_);
  }

  FieldPtr K_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& input)
    : Error(ErrorCode::ParseError, describe(offset, expected, input)),
      offset_(offset),
      expected_(std::move(expected)) {}

BivarPoly parse_poly(const FieldPtr& field, const std::string& text) { return Parser(field, text).run(); }

FFPoly parse_univariate(const FieldPtr& field, const std::string& text, char var) {
  BivarPoly b = parse_poly(field, text);
  if (var == 'y') b = b.transposed();
  require(b.deg_y() <= 0, ErrorCode::ParseError,
          std::string("expected a polynomial in ") + var + " only: " + text);
  return b.ycoeff(0);
}

}  // namespace towerlab
