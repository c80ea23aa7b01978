#pragma once

#include <optional>

#include "rep2d/grid.hpp"

namespace rep2d {

/// Smallest horizontal period p (columns) and vertical period q (rows).
struct PeriodPair {
  int h = 0;
  int v = 0;

  friend bool operator==(const PeriodPair&, const PeriodPair&) = default;
};

/// Maximality reading for runs. PeriodIncrease requires every one-cell
/// extension to have a strictly larger smallest horizontal or vertical
/// period; PeriodicityLoss only requires the extension to stop being
/// h- and v-periodic.
enum class RunSemantics { PeriodIncrease, PeriodicityLoss };

/// Least p >= 1 such that column i equals column i+p for every valid i.
/// Returns the rect width when no smaller period exists.
int smallest_h_period(const Grid2D& g, const Rect& r);
int smallest_v_period(const Grid2D& g, const Rect& r);
PeriodPair smallest_periods(const Grid2D& g, const Rect& r);

bool is_h_periodic(const Grid2D& g, const Rect& r);
bool is_v_periodic(const Grid2D& g, const Rect& r);

bool is_run(const Grid2D& g, const Rect& r,
            RunSemantics semantics = RunSemantics::PeriodIncrease);

/// Periods of r if r is a run, nullopt otherwise.
std::optional<PeriodPair> run_periods(const Grid2D& g, const Rect& r,
                                      RunSemantics semantics = RunSemantics::PeriodIncrease);

// Definitional scans, kept free of any shared machinery; these are the
// oracles the optimized paths are validated against.
int smallest_h_period_naive(const Grid2D& g, const Rect& r);
int smallest_v_period_naive(const Grid2D& g, const Rect& r);
bool is_run_naive(const Grid2D& g, const Rect& r,
                  RunSemantics semantics = RunSemantics::PeriodIncrease);

}  // namespace rep2d
