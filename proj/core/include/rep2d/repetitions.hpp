#pragma once

#include <vector>

#include "rep2d/grid.hpp"
#include "rep2d/periodicity.hpp"

namespace rep2d {

/// Distinct tandem tallies, kept per orientation. A block W occurring in
/// both orientations counts once in each bucket.
struct TandemCounts {
  long long horizontal = 0;
  long long vertical = 0;

  long long combined() const { return horizontal + vertical; }

  friend bool operator==(const TandemCounts&, const TandemCounts&) = default;
};

struct RunRecord {
  Rect rect;
  int h_period = 0;
  int v_period = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
  friend bool operator<(const RunRecord& a, const RunRecord& b) { return a.rect < b.rect; }
};

/// Thrown when a naive detector is asked to scan a grid above its cell cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultOracleCapCells = 40 * 40;

// Fingerprint-accelerated detectors. Every counted object is certified by
// cell-wise comparison; digests only prune.
TandemCounts count_distinct_tandems(const Grid2D& g);
long long count_distinct_quartics(const Grid2D& g);
std::vector<RunRecord> enumerate_runs(const Grid2D& g,
                                      RunSemantics semantics = RunSemantics::PeriodIncrease);

// Transparent oracles: cell-wise comparisons only, no fingerprints.
TandemCounts count_distinct_tandems_naive(const Grid2D& g,
                                          long long cap_cells = kDefaultOracleCapCells);
long long count_distinct_quartics_naive(const Grid2D& g,
                                        long long cap_cells = kDefaultOracleCapCells);
std::vector<RunRecord> enumerate_runs_naive(const Grid2D& g,
                                            long long cap_cells = kDefaultOracleCapCells,
                                            RunSemantics semantics = RunSemantics::PeriodIncrease);

/// True iff r is a horizontal tandem: even width and left half equal to the
/// right half.
bool is_horizontal_tandem(const Grid2D& g, const Rect& r);
bool is_vertical_tandem(const Grid2D& g, const Rect& r);
/// True iff r is a 2x2 tiling of its top-left quadrant.
bool is_quartic(const Grid2D& g, const Rect& r);

/// Certified number of distinct block contents (dims plus cells) among the
/// given rects.
long long count_distinct_blocks(const Grid2D& g, const std::vector<Rect>& rects);

}  // namespace rep2d
