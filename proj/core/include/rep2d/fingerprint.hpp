#pragma once

#include <array>
#include <cstdint>

#include "rep2d/grid.hpp"

namespace rep2d {

// Two independent 2D polynomial digests. Bases are drawn from a process-wide
// seed so repeated runs are reproducible; the CLI exposes a flag to pin it.

struct HashBasis {
  struct Axis {
    std::uint64_t row_base;
    std::uint64_t col_base;
  };
  std::array<Axis, 2> axes;

  static HashBasis from_seed(std::uint64_t seed);
};

inline constexpr std::uint64_t kDefaultFingerprintSeed = 0x7265703264ULL;

void set_fingerprint_seed(std::uint64_t seed);
std::uint64_t fingerprint_seed();

/// Content digest of a subrectangle plus its dimensions. Equal rectangle
/// contents always produce equal fingerprints; the converse is certified by
/// cell-wise comparison wherever a count depends on it.
struct Fingerprint {
  int height = 0;
  int width = 0;
  std::array<std::uint64_t, 2> digest{};

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

using StripDigest = std::array<std::uint64_t, 2>;

/// Prefix tables over one grid for O(1) subrectangle and strip digests.
class FingerprintTable {
 public:
  explicit FingerprintTable(const Grid2D& g);
  FingerprintTable(const Grid2D& g, const HashBasis& basis);

  const Grid2D& grid() const { return *grid_; }

  Fingerprint fingerprint(const Rect& r) const;

  /// Digest of the 1-column strip rows [top, top+len) at column c.
  StripDigest column_digest(int c, int top, int len) const;
  /// Digest of the 1-row strip columns [left, left+len) at row r.
  StripDigest row_digest(int r, int left, int len) const;

  /// Fingerprint fast path with cell-wise confirmation on digest match.
  bool block_equal(const Rect& a, const Rect& b) const;

 private:
  void build();

  const Grid2D* grid_;
  HashBasis basis_;
  // per modulus: 2D prefix, per-column and per-row 1D prefixes, power tables
  std::array<std::vector<std::uint64_t>, 2> pre2d_;
  std::array<std::vector<std::uint64_t>, 2> col_pre_;
  std::array<std::vector<std::uint64_t>, 2> row_pre_;
  std::array<std::vector<std::uint64_t>, 2> pow_row_;
  std::array<std::vector<std::uint64_t>, 2> pow_col_;
};

}  // namespace rep2d
