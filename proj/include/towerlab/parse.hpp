#pragma once

// Polynomial expressions in x and y over GF(q): integers, x, y, w (the field
// generator), + - * ^, parentheses and unary minus.

#include <cstddef>
#include <string>
#include <vector>

#include "towerlab/bivar.hpp"

namespace towerlab {

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& input);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

BivarPoly parse_poly(const FieldPtr& field, const std::string& text);

/// Univariate convenience: the expression must not mention y.
FFPoly parse_univariate(const FieldPtr& field, const std::string& text, char var = 'x');

}  // namespace towerlab
