#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace rep2d {

using Cell = std::uint32_t;

/// A subrectangle reference in 0-based grid coordinates.
struct Rect {
  int top = 0;
  int left = 0;
  int height = 0;
  int width = 0;

  friend bool operator==(const Rect&, const Rect&) = default;

  // lexicographic (top, left, height, width)
  friend bool operator<(const Rect& a, const Rect& b) {
    if (a.top != b.top) return a.top < b.top;
    if (a.left != b.left) return a.left < b.left;
    if (a.height != b.height) return a.height < b.height;
    return a.width < b.width;
  }

  long long area() const { return 1LL * height * width; }
};

/// Rectangular array of small non-negative integer characters, row-major.
/// Treat instances as immutable once shared; concurrent reads are safe.
class Grid2D {
 public:
  Grid2D() = default;

  Grid2D(int rows, int cols, Cell alphabet, Cell fill = 0)
      : rows_(rows), cols_(cols), alphabet_(alphabet) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("Grid2D: dimensions must be >= 1");
    if (alphabet < 1) throw std::invalid_argument("Grid2D: alphabet size must be >= 1");
    if (fill >= alphabet) throw std::invalid_argument("Grid2D: fill character out of alphabet");
    cells_.assign(static_cast<std::size_t>(rows) * cols, fill);
  }

  static Grid2D from_cells(int rows, int cols, Cell alphabet, std::vector<Cell> cells) {
    Grid2D g(rows, cols, alphabet);
    if (cells.size() != g.cells_.size())
      throw std::invalid_argument("Grid2D: cell count does not match dimensions");
    for (Cell v : cells)
      if (v >= alphabet) throw std::invalid_argument("Grid2D: character out of alphabet");
    g.cells_ = std::move(cells);
    return g;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cell alphabet() const { return alphabet_; }
  long long cell_count() const { return 1LL * rows_ * cols_; }

  Cell at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * cols_ + c]; }

  void set(int r, int c, Cell v) {
    if (v >= alphabet_) throw std::invalid_argument("Grid2D::set: character out of alphabet");
    cells_[static_cast<std::size_t>(r) * cols_ + c] = v;
  }

  const std::vector<Cell>& cells() const { return cells_; }

  Rect full_rect() const { return {0, 0, rows_, cols_}; }

  bool contains(const Rect& r) const {
    return r.height >= 1 && r.width >= 1 && r.top >= 0 && r.left >= 0 &&
           r.top + r.height <= rows_ && r.left + r.width <= cols_;
  }

  friend bool operator==(const Grid2D&, const Grid2D&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  Cell alphabet_ = 1;
  std::vector<Cell> cells_;
};

Grid2D transpose(const Grid2D& g);
inline Rect transpose(const Rect& r) { return {r.left, r.top, r.width, r.height}; }

void require_rect(const Grid2D& g, const Rect& r, const char* what);

/// Cell-wise equality of two same-sized subrectangles.
bool block_equal(const Grid2D& g, const Rect& a, const Rect& b);

// --- serialization ---------------------------------------------------------

enum class GridFormat { Text, Pbm };

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

void save_grid(const Grid2D& g, GridFormat format, std::ostream& out);
std::string save_grid(const Grid2D& g, GridFormat format);
Grid2D load_grid(std::istream& in, GridFormat format);
Grid2D load_grid(const std::string& bytes, GridFormat format);

}  // namespace rep2d
