#include <doctest.h>

#include <random>
#include <sstream>

#include "rep2d/families.hpp"
#include "rep2d/fingerprint.hpp"
#include "rep2d/grid.hpp"

using namespace rep2d;

namespace {

Grid2D random_grid(std::mt19937_64& rng, int max_dim, Cell alphabet) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  const int rows = dim(rng), cols = dim(rng);
  Grid2D g(rows, cols, alphabet);
  std::uniform_int_distribution<Cell> cell(0, alphabet - 1);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) g.set(r, c, cell(rng));
  return g;
}

Rect random_rect(std::mt19937_64& rng, const Grid2D& g, int h, int w) {
  std::uniform_int_distribution<int> td(0, g.rows() - h), ld(0, g.cols() - w);
  return {td(rng), ld(rng), h, w};
}

}  // namespace

TEST_CASE("grid invariants are enforced") {
  CHECK_THROWS_AS(Grid2D(0, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(Grid2D(3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(Grid2D(2, 2, 2).set(0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(Grid2D::from_cells(2, 2, 2, {0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Grid2D::from_cells(2, 2, 2, {0, 1, 0, 3}), std::invalid_argument);
  const Grid2D g = Grid2D::from_cells(2, 3, 3, {0, 1, 2, 2, 1, 0});
  CHECK(g.at(1, 0) == 2);
  CHECK(g.cell_count() == 6);
}

TEST_CASE("block_equal on trivial and constructed cases") {
  const Grid2D zeros(4, 4, 2);
  CHECK(block_equal(zeros, {0, 0, 2, 2}, {2, 2, 2, 2}));
  CHECK(block_equal(zeros, {1, 1, 2, 2}, {1, 1, 2, 2}));  // reflexivity

  // the run family's corner blocks repeat with shift (6, 6); a shifted
  // all-zero block differs from the corner block
  const Grid2D a1 = families::run_family(1);
  CHECK(block_equal(a1, {0, 0, 2, 2}, {6, 6, 2, 2}));
  CHECK_FALSE(block_equal(a1, {0, 0, 2, 2}, {1, 1, 2, 2}));
  CHECK_FALSE(block_equal(a1, {0, 0, 2, 2}, {2, 2, 2, 2}));

  CHECK_THROWS_AS(block_equal(zeros, {0, 0, 2, 2}, {0, 0, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(block_equal(zeros, {0, 0, 2, 2}, {3, 3, 2, 2}), std::invalid_argument);
}

TEST_CASE("block_equal is an equivalence relation on random grids") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    const Grid2D g = random_grid(rng, 8, 2);
    std::uniform_int_distribution<int> hd(1, g.rows()), wd(1, g.cols());
    const int h = hd(rng), w = wd(rng);
    const Rect a = random_rect(rng, g, h, w);
    const Rect b = random_rect(rng, g, h, w);
    const Rect c = random_rect(rng, g, h, w);
    CHECK(block_equal(g, a, a));
    CHECK(block_equal(g, a, b) == block_equal(g, b, a));
    if (block_equal(g, a, b) && block_equal(g, b, c)) CHECK(block_equal(g, a, c));
  }
}

TEST_CASE("fingerprint equality agrees with cell-wise equality") {
  std::mt19937_64 rng(11);
  long long checked = 0;
  while (checked < 100'000) {
    const Grid2D g = random_grid(rng, 10, 2);
    const FingerprintTable table(g);
    std::uniform_int_distribution<int> hd(1, g.rows()), wd(1, g.cols());
    for (int i = 0; i < 200; ++i, ++checked) {
      const int h = hd(rng), w = wd(rng);
      const Rect a = random_rect(rng, g, h, w);
      const Rect b = random_rect(rng, g, h, w);
      CHECK(table.block_equal(a, b) == block_equal(g, a, b));
    }
  }
}

TEST_CASE("fingerprints of equal rects are equal across positions") {
  const Grid2D zeros(6, 9, 2);
  const FingerprintTable table(zeros);
  CHECK(table.fingerprint({0, 0, 2, 3}) == table.fingerprint({4, 6, 2, 3}));
  CHECK_FALSE(table.fingerprint({0, 0, 2, 3}) == table.fingerprint({0, 0, 3, 2}));
}

TEST_CASE("text format matches the documented layout") {
  const Grid2D g = Grid2D::from_cells(1, 2, 2, {0, 1});
  CHECK(save_grid(g, GridFormat::Text) == "1 2 2\n0 1\n");
  CHECK(load_grid(save_grid(g, GridFormat::Text), GridFormat::Text) == g);
}

TEST_CASE("pbm round-trip on small binary grids") {
  const Grid2D g = Grid2D::from_cells(2, 2, 2, {1, 0, 0, 1});
  const std::string bytes = save_grid(g, GridFormat::Pbm);
  CHECK(bytes.substr(0, 3) == "P1\n");
  CHECK(load_grid(bytes, GridFormat::Pbm) == g);
}

TEST_CASE("round-trip identity on random grids, both formats") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    const Grid2D g = random_grid(rng, 9, iter % 2 == 0 ? 2 : 5);
    CHECK(load_grid(save_grid(g, GridFormat::Text), GridFormat::Text) == g);
    if (g.alphabet() == 2)
      CHECK(load_grid(save_grid(g, GridFormat::Pbm), GridFormat::Pbm) == g);
  }
}

TEST_CASE("tandem family round-trips through both formats") {
  const Grid2D g = families::tandem_family(1);
  CHECK(load_grid(save_grid(g, GridFormat::Text), GridFormat::Text) == g);
  CHECK(load_grid(save_grid(g, GridFormat::Pbm), GridFormat::Pbm) == g);
}

TEST_CASE("parse errors carry line and column") {
  try {
    load_grid("2 2 2\n0 1\n0 x\n", GridFormat::Text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.col() == 3);
  }
  CHECK_THROWS_AS(load_grid("1 1 2\n5\n", GridFormat::Text), ParseError);
  CHECK_THROWS_AS(load_grid("1 2 2\n0 1\ntrailing\n", GridFormat::Text), ParseError);
  CHECK_THROWS_AS(load_grid("P2\n2 2\n0 1 1 0\n", GridFormat::Pbm), ParseError);
  CHECK_THROWS_AS(load_grid("P1\n2 2\n0 1 1\n", GridFormat::Pbm), ParseError);
  CHECK_THROWS_AS(save_grid(Grid2D(2, 2, 3), GridFormat::Pbm), std::invalid_argument);
}

TEST_CASE("pbm accepts comments and packed bits") {
  const Grid2D g = load_grid("P1\n# comment\n2 2\n0110\n", GridFormat::Pbm);
  CHECK(g.at(0, 0) == 0);
  CHECK(g.at(0, 1) == 1);
  CHECK(g.at(1, 0) == 1);
  CHECK(g.at(1, 1) == 0);
}

TEST_CASE("transpose duality of grid and rect") {
  std::mt19937_64 rng(17);
  const Grid2D g = random_grid(rng, 7, 3);
  const Grid2D t = transpose(g);
  CHECK(t.rows() == g.cols());
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c) CHECK(t.at(c, r) == g.at(r, c));
  CHECK(transpose(Rect{1, 2, 3, 4}) == Rect{2, 1, 4, 3});
}
