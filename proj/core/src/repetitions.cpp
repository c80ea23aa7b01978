#include "rep2d/repetitions.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "rep2d/fingerprint.hpp"

namespace rep2d {

bool is_horizontal_tandem(const Grid2D& g, const Rect& r) {
  require_rect(g, r, "is_horizontal_tandem");
  if (r.width % 2 != 0) return false;
  const int b = r.width / 2;
  return block_equal(g, {r.top, r.left, r.height, b}, {r.top, r.left + b, r.height, b});
}

bool is_vertical_tandem(const Grid2D& g, const Rect& r) {
  require_rect(g, r, "is_vertical_tandem");
  if (r.height % 2 != 0) return false;
  const int a = r.height / 2;
  return block_equal(g, {r.top, r.left, a, r.width}, {r.top + a, r.left, a, r.width});
}

bool is_quartic(const Grid2D& g, const Rect& r) {
  require_rect(g, r, "is_quartic");
  if (r.height % 2 != 0 || r.width % 2 != 0) return false;
  const int a = r.height / 2, b = r.width / 2;
  const Rect tl{r.top, r.left, a, b};
  return block_equal(g, tl, {r.top, r.left + b, a, b}) &&
         block_equal(g, tl, {r.top + a, r.left, a, b}) &&
         block_equal(g, tl, {r.top + a, r.left + b, a, b});
}

namespace {

// Dedup of counted block contents keyed by (dims, digests). Same-key inserts
// are confirmed cell-wise, so a digest collision can never merge two distinct
// contents or split equal ones.
class ContentDedup {
 public:
  explicit ContentDedup(const FingerprintTable& table) : table_(&table) {}

  void insert(const Rect& w) {
    Fingerprint fp = table_->fingerprint(w);
    auto& bucket = buckets_[key(fp)];
    for (const Rect& rep : bucket)
      if (block_equal(table_->grid(), rep, w)) return;
    bucket.push_back(w);
    ++count_;
  }

  long long count() const { return count_; }

 private:
  struct Key {
    std::uint64_t a, b, c;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = k.a * 0x9e3779b97f4a7c15ULL;
      h ^= k.b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= k.c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  static Key key(const Fingerprint& fp) {
    return {(static_cast<std::uint64_t>(static_cast<std::uint32_t>(fp.height)) << 32) |
                static_cast<std::uint32_t>(fp.width),
            fp.digest[0], fp.digest[1]};
  }

  const FingerprintTable* table_;
  std::unordered_map<Key, std::vector<Rect>, KeyHash> buckets_;
  long long count_ = 0;
};

// Content-keyed dedup for the oracles: dims + raw cells, no digests anywhere.
class NaiveDedup {
 public:
  explicit NaiveDedup(const Grid2D& g) : grid_(&g) {}

  void insert(const Rect& w) {
    std::vector<Cell> key;
    key.reserve(2 + w.area());
    key.push_back(static_cast<Cell>(w.height));
    key.push_back(static_cast<Cell>(w.width));
    for (int r = 0; r < w.height; ++r)
      for (int c = 0; c < w.width; ++c) key.push_back(grid_->at(w.top + r, w.left + c));
    seen_.insert(std::move(key));
  }

  long long count() const { return static_cast<long long>(seen_.size()); }

 private:
  const Grid2D* grid_;
  std::set<std::vector<Cell>> seen_;
};

void require_cap(const Grid2D& g, long long cap_cells, const char* what) {
  if (g.cell_count() > cap_cells)
    throw OracleCapExceeded(std::string(what) + ": grid has " + std::to_string(g.cell_count()) +
                            " cells, above the oracle cap of " + std::to_string(cap_cells) +
                            "; raise the cap or use the fast detector");
}

}  // namespace

TandemCounts count_distinct_tandems(const Grid2D& g) {
  FingerprintTable table(g);
  ContentDedup horizontal(table), vertical(table);
  const int rows = g.rows(), cols = g.cols();
  for (int top = 0; top < rows; ++top)
    for (int h = 1; top + h <= rows; ++h)
      for (int b = 1; 2 * b <= cols; ++b)
        for (int l = 0; l + 2 * b <= cols; ++l)
          if (table.block_equal({top, l, h, b}, {top, l + b, h, b}))
            horizontal.insert({top, l, h, b});
  for (int left = 0; left < cols; ++left)
    for (int w = 1; left + w <= cols; ++w)
      for (int a = 1; 2 * a <= rows; ++a)
        for (int t = 0; t + 2 * a <= rows; ++t)
          if (table.block_equal({t, left, a, w}, {t + a, left, a, w}))
            vertical.insert({t, left, a, w});
  return {horizontal.count(), vertical.count()};
}

long long count_distinct_quartics(const Grid2D& g) {
  FingerprintTable table(g);
  ContentDedup dedup(table);
  const int rows = g.rows(), cols = g.cols();
  for (int a = 1; 2 * a <= rows; ++a)
    for (int b = 1; 2 * b <= cols; ++b)
      for (int t = 0; t + 2 * a <= rows; ++t)
        for (int l = 0; l + 2 * b <= cols; ++l) {
          const Rect tl{t, l, a, b};
          if (table.fingerprint(tl) != table.fingerprint({t, l + b, a, b})) continue;
          if (table.block_equal(tl, {t, l + b, a, b}) &&
              table.block_equal(tl, {t + a, l, a, b}) &&
              table.block_equal(tl, {t + a, l + b, a, b}))
            dedup.insert(tl);
        }
  return dedup.count();
}

TandemCounts count_distinct_tandems_naive(const Grid2D& g, long long cap_cells) {
  require_cap(g, cap_cells, "count_distinct_tandems_naive");
  NaiveDedup horizontal(g), vertical(g);
  const int rows = g.rows(), cols = g.cols();
  for (int top = 0; top < rows; ++top)
    for (int h = 1; top + h <= rows; ++h)
      for (int b = 1; 2 * b <= cols; ++b)
        for (int l = 0; l + 2 * b <= cols; ++l)
          if (block_equal(g, {top, l, h, b}, {top, l + b, h, b}))
            horizontal.insert({top, l, h, b});
  for (int left = 0; left < cols; ++left)
    for (int w = 1; left + w <= cols; ++w)
      for (int a = 1; 2 * a <= rows; ++a)
        for (int t = 0; t + 2 * a <= rows; ++t)
          if (block_equal(g, {t, left, a, w}, {t + a, left, a, w}))
            vertical.insert({t, left, a, w});
  return {horizontal.count(), vertical.count()};
}

long long count_distinct_quartics_naive(const Grid2D& g, long long cap_cells) {
  require_cap(g, cap_cells, "count_distinct_quartics_naive");
  NaiveDedup dedup(g);
  const int rows = g.rows(), cols = g.cols();
  for (int a = 1; 2 * a <= rows; ++a)
    for (int b = 1; 2 * b <= cols; ++b)
      for (int t = 0; t + 2 * a <= rows; ++t)
        for (int l = 0; l + 2 * b <= cols; ++l) {
          const Rect tl{t, l, a, b};
          if (block_equal(g, tl, {t, l + b, a, b}) && block_equal(g, tl, {t + a, l, a, b}) &&
              block_equal(g, tl, {t + a, l + b, a, b}))
            dedup.insert(tl);
        }
  return dedup.count();
}

namespace {

// Smallest period of a digest sequence via its border array; digests that
// differ certify unequal strips, so this only ever under-estimates on a
// collision, which the exact confirmation below weeds out.
int digest_period(const std::vector<StripDigest>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> border(n, 0);
  for (int i = 1; i < n; ++i) {
    int b = border[i - 1];
    while (b > 0 && seq[i] != seq[b]) b = border[b - 1];
    if (seq[i] == seq[b]) ++b;
    border[i] = b;
  }
  return n - border[n - 1];
}

int digest_v_period(const FingerprintTable& table, const Rect& r) {
  std::vector<StripDigest> seq(r.height);
  for (int i = 0; i < r.height; ++i) seq[i] = table.row_digest(r.top + i, r.left, r.width);
  return digest_period(seq);
}

}  // namespace

std::vector<RunRecord> enumerate_runs(const Grid2D& g, RunSemantics semantics) {
  const int rows = g.rows(), cols = g.cols();
  FingerprintTable table(g);
  std::vector<RunRecord> out;
  std::vector<StripDigest> coldig(cols);
  std::vector<int> border(cols);
  for (int top = 0; top < rows; ++top)
    for (int h = 1; top + h <= rows; ++h) {
      for (int c = 0; c < cols; ++c) coldig[c] = table.column_digest(c, top, h);
      for (int l = 0; l < cols; ++l) {
        // online border array over columns l..r
        for (int r = l; r < cols; ++r) {
          const int j = r - l;
          if (j == 0) {
            border[0] = 0;
          } else {
            int b = border[j - 1];
            while (b > 0 && coldig[r] != coldig[l + b]) b = border[b - 1];
            border[j] = (coldig[r] == coldig[l + b]) ? b + 1 : 0;
          }
          const int w = j + 1;
          const int p = w - border[j];
          if (2 * p > w) continue;
          const Rect rect{top, l, h, w};
          if (2 * digest_v_period(table, rect) > h) continue;
          // digests pass; certify with the exact predicate
          if (auto periods = run_periods(g, rect, semantics))
            out.push_back({rect, periods->h, periods->v});
        }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

long long count_distinct_blocks(const Grid2D& g, const std::vector<Rect>& rects) {
  FingerprintTable table(g);
  ContentDedup dedup(table);
  for (const Rect& r : rects) dedup.insert(r);
  return dedup.count();
}

std::vector<RunRecord> enumerate_runs_naive(const Grid2D& g, long long cap_cells,
                                            RunSemantics semantics) {
  require_cap(g, cap_cells, "enumerate_runs_naive");
  std::vector<RunRecord> out;
  const int rows = g.rows(), cols = g.cols();
  for (int top = 0; top < rows; ++top)
    for (int l = 0; l < cols; ++l)
      for (int h = 1; top + h <= rows; ++h)
        for (int w = 1; l + w <= cols; ++w) {
          const Rect rect{top, l, h, w};
          if (is_run_naive(g, rect, semantics))
            out.push_back({rect, smallest_h_period_naive(g, rect),
                           smallest_v_period_naive(g, rect)});
        }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rep2d
