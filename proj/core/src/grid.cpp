#include "rep2d/grid.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

namespace rep2d {

Grid2D transpose(const Grid2D& g) {
  Grid2D t(g.cols(), g.rows(), g.alphabet());
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c) t.set(c, r, g.at(r, c));
  return t;
}

void require_rect(const Grid2D& g, const Rect& r, const char* what) {
  if (!g.contains(r)) throw std::invalid_argument(std::string(what) + ": rect out of bounds");
}

bool block_equal(const Grid2D& g, const Rect& a, const Rect& b) {
  require_rect(g, a, "block_equal");
  require_rect(g, b, "block_equal");
  if (a.height != b.height || a.width != b.width)
    throw std::invalid_argument("block_equal: dimension mismatch");
  for (int r = 0; r < a.height; ++r)
    for (int c = 0; c < a.width; ++c)
      if (g.at(a.top + r, a.left + c) != g.at(b.top + r, b.left + c)) return false;
  return true;
}

ParseError::ParseError(const std::string& msg, int line, int col)
    : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ")"),
      line_(line),
      col_(col) {}

namespace {

// Tracks line/column while consuming a character stream, for parse errors.
class Scanner {
 public:
  explicit Scanner(std::istream& in) : in_(in) {}

  int line() const { return line_; }
  int col() const { return col_; }

  int peek() { return in_.peek(); }

  int get() {
    int ch = in_.get();
    if (ch == '\n') {
      ++line_;
      col_ = 0;
    } else if (ch != std::char_traits<char>::eof()) {
      ++col_;
    }
    return ch;
  }

  void skip_space_and_comments(bool allow_comments) {
    for (;;) {
      int ch = peek();
      if (ch == '#' && allow_comments) {
        while (ch != '\n' && ch != std::char_traits<char>::eof()) ch = get();
        continue;
      }
      if (ch == std::char_traits<char>::eof() || !std::isspace(static_cast<unsigned char>(ch)))
        return;
      get();
    }
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_ + 1); }

  long long next_int(const char* what, bool allow_comments = false) {
    skip_space_and_comments(allow_comments);
    int ch = peek();
    if (ch == std::char_traits<char>::eof()) fail(std::string("unexpected end of input, expected ") + what);
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      fail(std::string("expected ") + what);
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (get() - '0');
      if (value > std::numeric_limits<std::int64_t>::max() / 16) fail("integer overflow");
    }
    return value;
  }

  void expect_end(bool allow_comments) {
    skip_space_and_comments(allow_comments);
    if (peek() != std::char_traits<char>::eof()) fail("trailing data after grid");
  }

 private:
  std::istream& in_;
  int line_ = 1;
  int col_ = 0;
};

Grid2D load_text(std::istream& in) {
  Scanner sc(in);
  long long rows = sc.next_int("row count");
  long long cols = sc.next_int("column count");
  long long alphabet = sc.next_int("alphabet size");
  if (rows < 1 || cols < 1) sc.fail("dimensions must be >= 1");
  if (alphabet < 1 || alphabet > std::numeric_limits<Cell>::max()) sc.fail("bad alphabet size");
  if (rows * cols > (1LL << 32)) sc.fail("grid too large");
  Grid2D g(static_cast<int>(rows), static_cast<int>(cols), static_cast<Cell>(alphabet));
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c) {
      long long v = sc.next_int("cell value");
      if (v >= alphabet) sc.fail("character exceeds declared alphabet");
      g.set(r, c, static_cast<Cell>(v));
    }
  sc.expect_end(false);
  return g;
}

Grid2D load_pbm(std::istream& in) {
  Scanner sc(in);
  sc.skip_space_and_comments(true);
  if (sc.get() != 'P' || sc.get() != '1') sc.fail("expected PBM magic \"P1\"");
  long long cols = sc.next_int("width", true);
  long long rows = sc.next_int("height", true);
  if (rows < 1 || cols < 1) sc.fail("dimensions must be >= 1");
  if (rows * cols > (1LL << 32)) sc.fail("grid too large");
  Grid2D g(static_cast<int>(rows), static_cast<int>(cols), 2);
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c) {
      sc.skip_space_and_comments(true);
      int ch = sc.get();
      if (ch != '0' && ch != '1') sc.fail("expected bit '0' or '1'");
      g.set(r, c, static_cast<Cell>(ch - '0'));
    }
  sc.expect_end(true);
  return g;
}

}  // namespace

void save_grid(const Grid2D& g, GridFormat format, std::ostream& out) {
  if (format == GridFormat::Text) {
    out << g.rows() << ' ' << g.cols() << ' ' << g.alphabet() << '\n';
    for (int r = 0; r < g.rows(); ++r) {
      for (int c = 0; c < g.cols(); ++c) {
        if (c) out << ' ';
        out << g.at(r, c);
      }
      out << '\n';
    }
    return;
  }
  if (g.alphabet() > 2) throw std::invalid_argument("save_grid: PBM requires a binary grid");
  out << "P1\n" << g.cols() << ' ' << g.rows() << '\n';
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      if (c) out << ' ';
      out << g.at(r, c);
    }
    out << '\n';
  }
}

std::string save_grid(const Grid2D& g, GridFormat format) {
  std::ostringstream out;
  save_grid(g, format, out);
  return out.str();
}

Grid2D load_grid(std::istream& in, GridFormat format) {
  return format == GridFormat::Text ? load_text(in) : load_pbm(in);
}

Grid2D load_grid(const std::string& bytes, GridFormat format) {
  std::istringstream in(bytes);
  return load_grid(in, format);
}

}  // namespace rep2d
