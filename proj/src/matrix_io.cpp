#include "matfix/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace matfix {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

ParseError::ParseError(const std::string& context, const ParseError& inner)
    : std::runtime_error(context + ": " + inner.what()), line_(inner.line_), column_(inner.column_) {}

namespace {

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

// Cursor over one line of the matrix file.
class LineCursor {
 public:
  LineCursor(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }
  double number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != ',' && line_[pos_] != ']' && line_[pos_] != ' ' &&
           line_[pos_] != '\t')
      ++pos_;
    double v = 0.0;
    if (!parse_double(line_.substr(start, pos_ - start), v)) {
      pos_ = start;
      fail("expected a finite number");
    }
    return v;
  }
  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t') ++pos_;
    return line_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_no_, pos_ + 1);
  }
  std::size_t column() const { return pos_ + 1; }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex c) {
  // Signed zeros print as plain 0.
  const double r = c.real() == 0.0 ? 0.0 : c.real();
  const double i = c.imag() == 0.0 ? 0.0 : c.imag();
  std::string re = format_double(r);
  std::string im = format_double(i);
  if (std::signbit(i)) return re + im + "i";
  return re + "+" + im + "i";
}

Complex parse_complex(std::string_view text) {
  const std::string s(text);
  auto bad = [&]() -> ParseError { return ParseError("invalid complex number '" + s + "'"); };
  if (s.empty()) throw bad();
  double re = 0.0;
  double im = 0.0;
  if (s.back() != 'i') {
    if (!parse_double(s, re)) throw bad();
    return {re, 0.0};
  }
  const std::string_view body = std::string_view(s).substr(0, s.size() - 1);
  // Split at the last sign that is not leading and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  if (!re_part.empty() && !parse_double(re_part, re)) throw bad();
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else if (!parse_double(im_part, im)) {
    throw bad();
  }
  return {re, im};
}

Matrix parse_matrix(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }

  auto blank_or_comment = [](std::string_view l) {
    for (char c : l) {
      if (c == '#') return true;
      if (c != ' ' && c != '\t') return false;
    }
    return true;
  };

  std::size_t i = 0;
  while (i < lines.size() && blank_or_comment(lines[i])) ++i;
  if (i == lines.size()) throw ParseError("missing 'n <dimension>' header", 1, 1);

  LineCursor header(lines[i], i + 1);
  if (header.word() != "n") header.fail("expected header 'n <dimension>'");
  header.skip_space();
  const std::size_t dim_col = header.column();
  const double dim = header.number();
  if (dim < 1 || dim != std::floor(dim) || dim > 4096) {
    throw ParseError("dimension must be a positive integer", i + 1, dim_col);
  }
  if (!header.at_end()) header.fail("unexpected text after dimension");
  const auto n = static_cast<std::size_t>(dim);
  ++i;

  std::vector<Complex> entries;
  entries.reserve(n * n);
  std::size_t row = 0;
  for (; i < lines.size() && row < n; ++i) {
    if (blank_or_comment(lines[i])) continue;
    LineCursor cur(lines[i], i + 1);
    for (std::size_t col = 0; col < n; ++col) {
      if (cur.at_end()) cur.fail("row " + std::to_string(row + 1) + " has " + std::to_string(col) +
                                 " entries, expected " + std::to_string(n));
      cur.expect('[');
      const double re = cur.number();
      cur.expect(',');
      const double im = cur.number();
      cur.expect(']');
      entries.emplace_back(re, im);
    }
    if (!cur.at_end()) cur.fail("row " + std::to_string(row + 1) + " has more than " +
                                std::to_string(n) + " entries");
    ++row;
  }
  if (row < n) {
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(row),
                     lines.size(), 1);
  }
  for (; i < lines.size(); ++i) {
    if (!blank_or_comment(lines[i])) throw ParseError("unexpected content after last row", i + 1, 1);
  }
  return Matrix(n, n, std::move(entries));
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_matrix(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string(), e);
  }
}

std::string format_matrix(const Matrix& m) {
  if (!m.is_square()) throw ParseError("matrix file format holds square matrices only");
  std::string s = "n " + std::to_string(m.rows()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) s += ' ';
      s += "[" + format_double(m(i, j).real()) + ", " + format_double(m(i, j).imag()) + "]";
    }
    s += '\n';
  }
  return s;
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << format_matrix(m);
  if (!out) throw ParseError("write failed for '" + path.string() + "'");
}

}  // namespace matfix
