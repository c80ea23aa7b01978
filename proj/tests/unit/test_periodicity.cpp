#include <doctest.h>

#include <random>

#include "rep2d/families.hpp"
#include "rep2d/grid.hpp"
#include "rep2d/periodicity.hpp"

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

}  // namespace

TEST_CASE("smallest horizontal period on pinned examples") {
  const Grid2D zeros(2, 4, 2);
  CHECK(smallest_h_period(zeros, zeros.full_rect()) == 1);

  const Grid2D row = Grid2D::from_cells(1, 4, 2, {0, 1, 1, 0});
  CHECK(smallest_h_period(row, row.full_rect()) == 3);

  // columns A B A B A B with A = (0,1), B = (1,0)
  const Grid2D ab = Grid2D::from_cells(2, 6, 2, {0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0});
  CHECK(smallest_h_period(ab, ab.full_rect()) == 2);
}

TEST_CASE("h-periodicity threshold is floor of half the width") {
  const Grid2D zeros(2, 2, 2);
  CHECK(is_h_periodic(zeros, zeros.full_rect()));

  const Grid2D row = Grid2D::from_cells(1, 4, 2, {0, 1, 1, 0});
  CHECK_FALSE(is_h_periodic(row, row.full_rect()));

  const Grid2D ab = Grid2D::from_cells(2, 6, 2, {0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0});
  CHECK(is_h_periodic(ab, ab.full_rect()));

  // odd width: period 2 of width 5 qualifies, period 3 does not
  const Grid2D odd = Grid2D::from_cells(1, 5, 2, {0, 1, 0, 1, 0});
  CHECK(is_h_periodic(odd, odd.full_rect()));
}

TEST_CASE("periods match the naive oracle exhaustively on small widths") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    const Grid2D g = random_grid(rng, 12, iter % 3 == 0 ? 3 : 2);
    const Rect full = g.full_rect();
    const int p = smallest_h_period(g, full);
    CHECK(p == smallest_h_period_naive(g, full));
    // no smaller p' satisfies the column-equality condition
    for (int pp = 1; pp < p; ++pp) {
      bool ok = true;
      for (int i = 0; ok && i + pp < g.cols(); ++i)
        ok = block_equal(g, {0, i, g.rows(), 1}, {0, i + pp, g.rows(), 1});
      CHECK_FALSE(ok);
    }
    CHECK(smallest_v_period(g, full) == smallest_v_period_naive(g, full));
  }
}

TEST_CASE("transposition duality of periods") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 100; ++iter) {
    const Grid2D g = random_grid(rng, 10, 2);
    const Grid2D t = transpose(g);
    std::uniform_int_distribution<int> hd(1, g.rows()), wd(1, g.cols());
    const int h = hd(rng), w = wd(rng);
    std::uniform_int_distribution<int> td(0, g.rows() - h), ld(0, g.cols() - w);
    const Rect r{td(rng), ld(rng), h, w};
    CHECK(smallest_h_period(g, r) == smallest_v_period(t, transpose(r)));
    CHECK(smallest_v_period(g, r) == smallest_h_period(t, transpose(r)));
  }
}

TEST_CASE("is_run on pinned examples") {
  const Grid2D zeros(4, 4, 2);
  CHECK(is_run(zeros, zeros.full_rect()));           // boundary blocks everything
  CHECK_FALSE(is_run(zeros, {0, 0, 2, 2}));          // extendable right
  CHECK_FALSE(is_run(zeros, {0, 0, 1, 4}));          // not v-periodic

  const Grid2D a1 = families::run_family(1);
  CHECK(is_run(a1, {1, 1, 6, 6}));
  CHECK(smallest_periods(a1, {1, 1, 6, 6}) == PeriodPair{1, 1});
  CHECK_FALSE(is_run(a1, a1.full_rect()));
  CHECK_FALSE(is_run(a1, {2, 1, 4, 6}));  // extendable up inside the zeros
}

TEST_CASE("run predicate agrees with the naive oracle") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 60; ++iter) {
    const Grid2D g = random_grid(rng, 8, 2);
    for (int t = 0; t < g.rows(); ++t)
      for (int l = 0; l < g.cols(); ++l)
        for (int h = 1; t + h <= g.rows(); ++h)
          for (int w = 1; l + w <= g.cols(); ++w) {
            const Rect r{t, l, h, w};
            CHECK(is_run(g, r) == is_run_naive(g, r));
          }
  }
}

TEST_CASE("periodicity-loss semantics agrees with its oracle") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 40; ++iter) {
    const Grid2D g = random_grid(rng, 7, 2);
    for (int t = 0; t < g.rows(); ++t)
      for (int l = 0; l < g.cols(); ++l)
        for (int h = 1; t + h <= g.rows(); ++h)
          for (int w = 1; l + w <= g.cols(); ++w) {
            const Rect r{t, l, h, w};
            CHECK(is_run(g, r, RunSemantics::PeriodicityLoss) ==
                  is_run_naive(g, r, RunSemantics::PeriodicityLoss));
          }
  }
}
