#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "matfix/linalg.hpp"

namespace matfix {

/// Malformed matrix file or command-line value; line/column are 1-based
/// (0 when not applicable).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  /// Same position, message prefixed with context (typically a file name).
  ParseError(const std::string& context, const ParseError& inner);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Matrix file format (UTF-8, LF line endings):
//
//   # comment lines and blank lines are ignored
//   n 2
//   [0, 0] [1, 0]
//   [1, 0] [0, 0]
//
// The header gives the dimension; then n rows of n [re, im] pairs follow,
// one matrix row per line. Values are written with 17 significant digits, so
// a parse of a written file reproduces every double exactly.

Matrix parse_matrix(std::string_view text);
Matrix read_matrix_file(const std::filesystem::path& path);
std::string format_matrix(const Matrix& m);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

/// Parses a+bi, a-bi, a, bi, i, -i (no spaces), e.g. "0-1.5707963267948966i".
Complex parse_complex(std::string_view text);
/// Shortest form that parse_complex reads back exactly: "re+imi" / "re-imi".
std::string format_complex(Complex c);
/// %.17g rendering of a double.
std::string format_double(double v);

}  // namespace matfix
