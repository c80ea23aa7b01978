#include "rep2d/fingerprint.hpp"

#include <atomic>

namespace rep2d {

namespace {

constexpr std::uint64_t kMod[2] = {(1ULL << 61) - 1, 999999999999999989ULL};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  a += b;
  if (a >= m) a -= m;
  return a;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::atomic<std::uint64_t> g_seed{kDefaultFingerprintSeed};

}  // namespace

HashBasis HashBasis::from_seed(std::uint64_t seed) {
  std::uint64_t state = seed;
  HashBasis basis{};
  for (int m = 0; m < 2; ++m) {
    basis.axes[m].row_base = 256 + splitmix64(state) % (kMod[m] - 512);
    basis.axes[m].col_base = 256 + splitmix64(state) % (kMod[m] - 512);
  }
  return basis;
}

void set_fingerprint_seed(std::uint64_t seed) { g_seed.store(seed); }
std::uint64_t fingerprint_seed() { return g_seed.load(); }

FingerprintTable::FingerprintTable(const Grid2D& g)
    : FingerprintTable(g, HashBasis::from_seed(fingerprint_seed())) {}

FingerprintTable::FingerprintTable(const Grid2D& g, const HashBasis& basis)
    : grid_(&g), basis_(basis) {
  build();
}

void FingerprintTable::build() {
  const Grid2D& g = *grid_;
  const int rows = g.rows(), cols = g.cols();
  for (int m = 0; m < 2; ++m) {
    const std::uint64_t mod = kMod[m];
    const std::uint64_t rb = basis_.axes[m].row_base;
    const std::uint64_t cb = basis_.axes[m].col_base;

    auto& pw = pow_row_[m];
    pw.resize(rows + 1);
    pw[0] = 1;
    for (int i = 1; i <= rows; ++i) pw[i] = mulmod(pw[i - 1], rb, mod);
    auto& pc = pow_col_[m];
    pc.resize(cols + 1);
    pc[0] = 1;
    for (int i = 1; i <= cols; ++i) pc[i] = mulmod(pc[i - 1], cb, mod);

    auto& p2 = pre2d_[m];
    p2.assign(static_cast<std::size_t>(rows + 1) * (cols + 1), 0);
    auto at2 = [&](int i, int j) -> std::uint64_t& {
      return p2[static_cast<std::size_t>(i) * (cols + 1) + j];
    };
    // row-hash of row i over columns [0, j), folded into the 2D prefix
    std::vector<std::uint64_t> rowhash(cols + 1, 0);
    for (int i = 0; i < rows; ++i) {
      rowhash[0] = 0;
      for (int j = 0; j < cols; ++j)
        rowhash[j + 1] = addmod(mulmod(rowhash[j], cb, mod), g.at(i, j) + 1, mod);
      for (int j = 0; j <= cols; ++j)
        at2(i + 1, j) = addmod(mulmod(at2(i, j), rb, mod), rowhash[j], mod);
    }

    auto& cp = col_pre_[m];
    cp.assign(static_cast<std::size_t>(rows + 1) * cols, 0);
    for (int c = 0; c < cols; ++c)
      for (int i = 0; i < rows; ++i)
        cp[static_cast<std::size_t>(i + 1) * cols + c] =
            addmod(mulmod(cp[static_cast<std::size_t>(i) * cols + c], rb, mod), g.at(i, c) + 1, mod);

    auto& rp = row_pre_[m];
    rp.assign(static_cast<std::size_t>(rows) * (cols + 1), 0);
    for (int r = 0; r < rows; ++r)
      for (int j = 0; j < cols; ++j)
        rp[static_cast<std::size_t>(r) * (cols + 1) + j + 1] =
            addmod(mulmod(rp[static_cast<std::size_t>(r) * (cols + 1) + j], cb, mod), g.at(r, j) + 1, mod);
  }
}

Fingerprint FingerprintTable::fingerprint(const Rect& r) const {
  require_rect(*grid_, r, "fingerprint");
  Fingerprint fp;
  fp.height = r.height;
  fp.width = r.width;
  const int cols = grid_->cols();
  for (int m = 0; m < 2; ++m) {
    const std::uint64_t mod = kMod[m];
    const auto& p2 = pre2d_[m];
    auto at2 = [&](int i, int j) { return p2[static_cast<std::size_t>(i) * (cols + 1) + j]; };
    const int r1 = r.top, r2 = r.top + r.height, c1 = r.left, c2 = r.left + r.width;
    std::uint64_t v = at2(r2, c2);
    v = submod(v, mulmod(at2(r1, c2), pow_row_[m][r.height], mod), mod);
    v = submod(v, mulmod(at2(r2, c1), pow_col_[m][r.width], mod), mod);
    v = addmod(v, mulmod(mulmod(at2(r1, c1), pow_row_[m][r.height], mod),
                         pow_col_[m][r.width], mod), mod);
    fp.digest[m] = v;
  }
  return fp;
}

StripDigest FingerprintTable::column_digest(int c, int top, int len) const {
  const int cols = grid_->cols();
  StripDigest d{};
  for (int m = 0; m < 2; ++m) {
    const auto& cp = col_pre_[m];
    std::uint64_t hi = cp[static_cast<std::size_t>(top + len) * cols + c];
    std::uint64_t lo = cp[static_cast<std::size_t>(top) * cols + c];
    d[m] = submod(hi, mulmod(lo, pow_row_[m][len], kMod[m]), kMod[m]);
  }
  return d;
}

StripDigest FingerprintTable::row_digest(int r, int left, int len) const {
  const int cols = grid_->cols();
  StripDigest d{};
  for (int m = 0; m < 2; ++m) {
    const auto& rp = row_pre_[m];
    std::uint64_t hi = rp[static_cast<std::size_t>(r) * (cols + 1) + left + len];
    std::uint64_t lo = rp[static_cast<std::size_t>(r) * (cols + 1) + left];
    d[m] = submod(hi, mulmod(lo, pow_col_[m][len], kMod[m]), kMod[m]);
  }
  return d;
}

bool FingerprintTable::block_equal(const Rect& a, const Rect& b) const {
  if (a.height != b.height || a.width != b.width)
    throw std::invalid_argument("block_equal: dimension mismatch");
  if (fingerprint(a) != fingerprint(b)) return false;
  return rep2d::block_equal(*grid_, a, b);
}

}  // namespace rep2d
