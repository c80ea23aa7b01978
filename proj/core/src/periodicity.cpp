#include "rep2d/periodicity.hpp"

#include <vector>

namespace rep2d {

namespace {

inline bool columns_equal(const Grid2D& g, int top, int height, int c1, int c2) {
  for (int r = 0; r < height; ++r)
    if (g.at(top + r, c1) != g.at(top + r, c2)) return false;
  return true;
}

inline bool rows_equal(const Grid2D& g, int left, int width, int r1, int r2) {
  for (int c = 0; c < width; ++c)
    if (g.at(r1, left + c) != g.at(r2, left + c)) return false;
  return true;
}

}  // namespace

int smallest_h_period(const Grid2D& g, const Rect& r) {
  require_rect(g, r, "smallest_h_period");
  const int w = r.width;
  // border array over the sequence of columns; smallest period = w - border(w)
  std::vector<int> border(w, 0);
  for (int i = 1; i < w; ++i) {
    int b = border[i - 1];
    while (b > 0 && !columns_equal(g, r.top, r.height, r.left + i, r.left + b))
      b = border[b - 1];
    if (columns_equal(g, r.top, r.height, r.left + i, r.left + b)) ++b;
    border[i] = b;
  }
  return w - border[w - 1];
}

int smallest_v_period(const Grid2D& g, const Rect& r) {
  require_rect(g, r, "smallest_v_period");
  const int h = r.height;
  std::vector<int> border(h, 0);
  for (int i = 1; i < h; ++i) {
    int b = border[i - 1];
    while (b > 0 && !rows_equal(g, r.left, r.width, r.top + i, r.top + b))
      b = border[b - 1];
    if (rows_equal(g, r.left, r.width, r.top + i, r.top + b)) ++b;
    border[i] = b;
  }
  return h - border[h - 1];
}

PeriodPair smallest_periods(const Grid2D& g, const Rect& r) {
  return {smallest_h_period(g, r), smallest_v_period(g, r)};
}

bool is_h_periodic(const Grid2D& g, const Rect& r) {
  return 2 * smallest_h_period(g, r) <= r.width;
}

bool is_v_periodic(const Grid2D& g, const Rect& r) {
  return 2 * smallest_v_period(g, r) <= r.height;
}

namespace {

// The four one-cell extensions of r that stay inside g.
std::vector<Rect> extensions_inside(const Grid2D& g, const Rect& r) {
  std::vector<Rect> ext;
  if (r.left > 0) ext.push_back({r.top, r.left - 1, r.height, r.width + 1});
  if (r.left + r.width < g.cols()) ext.push_back({r.top, r.left, r.height, r.width + 1});
  if (r.top > 0) ext.push_back({r.top - 1, r.left, r.height + 1, r.width});
  if (r.top + r.height < g.rows()) ext.push_back({r.top, r.left, r.height + 1, r.width});
  return ext;
}

template <typename HPeriod, typename VPeriod>
std::optional<PeriodPair> run_periods_impl(const Grid2D& g, const Rect& r,
                                           RunSemantics semantics, HPeriod&& hp,
                                           VPeriod&& vp) {
  const int p = hp(g, r);
  const int q = vp(g, r);
  if (2 * p > r.width || 2 * q > r.height) return std::nullopt;
  for (const Rect& ext : extensions_inside(g, r)) {
    bool blocked;
    if (semantics == RunSemantics::PeriodIncrease) {
      blocked = hp(g, ext) > p || vp(g, ext) > q;
    } else {
      blocked = 2 * hp(g, ext) > ext.width || 2 * vp(g, ext) > ext.height;
    }
    if (!blocked) return std::nullopt;
  }
  return PeriodPair{p, q};
}

}  // namespace

std::optional<PeriodPair> run_periods(const Grid2D& g, const Rect& r, RunSemantics semantics) {
  require_rect(g, r, "run_periods");
  return run_periods_impl(g, r, semantics, [](const Grid2D& gg, const Rect& rr) {
    return smallest_h_period(gg, rr);
  }, [](const Grid2D& gg, const Rect& rr) { return smallest_v_period(gg, rr); });
}

bool is_run(const Grid2D& g, const Rect& r, RunSemantics semantics) {
  return run_periods(g, r, semantics).has_value();
}

int smallest_h_period_naive(const Grid2D& g, const Rect& r) {
  require_rect(g, r, "smallest_h_period_naive");
  for (int p = 1; p < r.width; ++p) {
    bool ok = true;
    for (int i = 0; ok && i + p < r.width; ++i)
      ok = columns_equal(g, r.top, r.height, r.left + i, r.left + i + p);
    if (ok) return p;
  }
  return r.width;
}

int smallest_v_period_naive(const Grid2D& g, const Rect& r) {
  require_rect(g, r, "smallest_v_period_naive");
  for (int q = 1; q < r.height; ++q) {
    bool ok = true;
    for (int i = 0; ok && i + q < r.height; ++i)
      ok = rows_equal(g, r.left, r.width, r.top + i, r.top + i + q);
    if (ok) return q;
  }
  return r.height;
}

bool is_run_naive(const Grid2D& g, const Rect& r, RunSemantics semantics) {
  require_rect(g, r, "is_run_naive");
  return run_periods_impl(g, r, semantics, [](const Grid2D& gg, const Rect& rr) {
    return smallest_h_period_naive(gg, rr);
  }, [](const Grid2D& gg, const Rect& rr) {
    return smallest_v_period_naive(gg, rr);
  }).has_value();
}

}  // namespace rep2d
