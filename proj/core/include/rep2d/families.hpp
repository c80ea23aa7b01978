#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rep2d/grid.hpp"

namespace rep2d::families {

enum class FamilyKind { Tandem, Quartic, QuarticBinary, Run };

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

/// Family parameters; n and the binary-reduction values are derived from
/// (kind, level).
struct FamilySpec {
  FamilyKind kind = FamilyKind::Tandem;
  int level = 0;
  long long n = 0;
  // quartic_binary only
  long long sigma = 0;
  long long k = 0;
  long long nprime = 0;

  static FamilySpec make(FamilyKind kind, int level);

  /// Side length of the generated grid.
  long long side() const { return kind == FamilyKind::QuarticBinary ? nprime : n; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

enum class WitnessKind { TandemHorizontal, Quartic, Run };

/// The rectangles a family's counting argument enumerates, with the
/// parameters that produced them.
struct WitnessSet {
  FamilySpec spec;
  WitnessKind claimed_kind = WitnessKind::TandemHorizontal;
  std::vector<Rect> rects;
};

inline constexpr long long kDefaultMaxCells = 1LL << 28;
inline constexpr long long kMaxWitnessRects = 50'000'000;

// --- tandem family ----------------------------------------------------------

/// n x n binary grid, n = 3 * 2^level + 2 * level. Row i concatenates
/// "0..01" (2^level cells), the level-bit label of i-1, and repeats.
Grid2D tandem_family(int level, long long max_cells = kDefaultMaxCells);

/// One rect per (i, j, k): rows i..j, left column k, width 2 (2^level + level).
WitnessSet tandem_witnesses(int level);

// --- quartic family ---------------------------------------------------------

/// n x n grid over {0} plus special characters, n = 3^level - 1, built by
/// the three-copies-plus-separators recursion.
Grid2D quartic_family(int level, long long max_cells = kDefaultMaxCells);

WitnessSet quartic_witnesses(int level);

// --- binary reduction -------------------------------------------------------

/// k x k binary block encoding character c: zero first row/column, ones in
/// the rest of the last row/column, c in binary (row-major, MSB first) in
/// the middle.
Grid2D gadget(long long c, int k);

/// Blow-up of quartic_family(level) with every cell replaced by its gadget.
Grid2D quartic_binary_family(int level, long long max_cells = kDefaultMaxCells);

WitnessSet quartic_binary_witnesses(int level);

struct GridOffsets {
  int row = 0;
  int col = 0;

  friend bool operator==(const GridOffsets&, const GridOffsets&) = default;
};

/// Recovers (r.top mod k, r.left mod k) from the cell contents of r alone,
/// by locating the all-zero gadget-aligned row and column. Throws
/// std::runtime_error when r is not a gadget blow-up subrectangle.
GridOffsets recover_offsets(const Grid2D& g, const Rect& r, int k);

// --- run family -------------------------------------------------------------

/// 2*4^level square binary grid built by the 4x4 recursion with
/// antidiagonal fill in the top-left and bottom-right copies.
Grid2D run_family(int level, long long max_cells = kDefaultMaxCells);

WitnessSet run_witnesses(int level);

/// Placements of every embedded copy, per level: plain copies contribute
/// their interior runs, antidiagonal-filled ones do not.
struct RunCopyLayout {
  struct Placement {
    int row = 0;
    int col = 0;

    friend bool operator==(const Placement&, const Placement&) = default;
  };
  // indexed 1..level; [0] unused
  std::vector<std::vector<Placement>> plain;
  std::vector<std::vector<Placement>> primed;
};

RunCopyLayout run_copy_layout(int level);

// --- witness serialization ---------------------------------------------------

void save_witnesses(const WitnessSet& ws, std::ostream& out);
std::string save_witnesses(const WitnessSet& ws);
WitnessSet load_witnesses(std::istream& in);
WitnessSet load_witnesses(const std::string& text);

}  // namespace rep2d::families
