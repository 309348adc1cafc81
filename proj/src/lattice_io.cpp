#include "latforge/lattice_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "latforge/error.hpp"

namespace latforge {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void expect(char c, const char* what) {
    skip_space();
    if (at_end()) fail(std::string("unexpected end of input, expected ") + what);
    if (peek() != c) {
      fail(std::string("expected ") + what + ", found '" + peek() + "'");
    }
    advance();
  }

  Integer integer() {
    const std::size_t start = pos_;
    const std::size_t line = line_, col = col_;
    if (peek() == '-' || peek() == '+') advance();
    std::size_t digits = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      advance();
      ++digits;
    }
    if (digits == 0) {
      throw ParseError(line, col, "expected an integer");
    }
    if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) &&
        peek() != ']') {
      fail(std::string("unexpected character '") + peek() + "' in integer");
    }
    std::string token(text_.substr(start, pos_ - start));
    if (token[0] == '+') token.erase(0, 1);
    return Integer(token);
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, col_, message);
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

LatticeFile parse_lattice(std::string_view text, std::string source) {
  Scanner in(text);
  in.expect('[', "'[' opening the basis");
  std::vector<Row> rows;
  while (true) {
    in.skip_space();
    if (in.at_end()) in.fail("unexpected end of input, expected '[' or ']'");
    if (in.peek() == ']') {
      in.expect(']', "']'");
      break;
    }
    const std::size_t row_line = in.line(), row_col = in.column();
    in.expect('[', "'[' opening a row");
    Row row;
    while (true) {
      in.skip_space();
      if (in.at_end()) in.fail("unexpected end of input inside a row");
      if (in.peek() == ']') {
        in.expect(']', "']'");
        break;
      }
      row.push_back(in.integer());
    }
    if (row.empty()) throw ParseError(row_line, row_col, "empty row");
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(row_line, row_col,
                       "row " + std::to_string(rows.size() + 1) + " has " +
                           std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  in.skip_space();
  if (!in.at_end()) in.fail("trailing content after the closing ']'");
  if (rows.empty()) throw ParseError(in.line(), in.column(), "basis has no rows");

  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  if (m > n) {
    throw LatticeError(ErrorCode::kRankDeficient,
                       std::to_string(m) + " rows in dimension " +
                           std::to_string(n) + " cannot be independent");
  }
  LatticeFile out{Basis(std::move(rows)), std::move(source), {}};
  out.diagnostics.push_back("rank " + std::to_string(m) + ", dimension " +
                            std::to_string(n));
  return out;
}

LatticeFile read_lattice_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LatticeError(ErrorCode::kBadParams, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_lattice(buffer.str(), path);
}

std::string serialize_lattice(const Basis& b) {
  std::string out = "[";
  for (const auto& row : b.rows()) {
    out += '[';
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ' ';
      out += row[j].get_str();
    }
    out += "]\n";
  }
  out += "]\n";
  return out;
}

}  // namespace latforge
