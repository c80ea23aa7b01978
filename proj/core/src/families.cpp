#include "rep2d/families.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "rep2d/formulas.hpp"

namespace rep2d::families {

namespace {

void require_level(int level, int min_level, const char* what) {
  if (level < min_level)
    throw std::invalid_argument(std::string(what) + ": level must be >= " +
                                std::to_string(min_level));
}

void require_budget(long long side, long long max_cells, const char* what) {
  if (side > 0 && side > max_cells / side)
    throw std::length_error(std::string(what) + ": " + std::to_string(side) + "x" +
                            std::to_string(side) + " grid exceeds the cell budget of " +
                            std::to_string(max_cells));
}

long long pow_ll(long long base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

void sort_rects(WitnessSet& ws) { std::sort(ws.rects.begin(), ws.rects.end()); }

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Tandem: return "tandem";
    case FamilyKind::Quartic: return "quartic";
    case FamilyKind::QuarticBinary: return "quartic_binary";
    case FamilyKind::Run: return "run";
  }
  throw std::invalid_argument("to_string: unknown family kind");
}

FamilyKind family_kind_from_string(const std::string& name) {
  if (name == "tandem") return FamilyKind::Tandem;
  if (name == "quartic") return FamilyKind::Quartic;
  if (name == "quartic_binary") return FamilyKind::QuarticBinary;
  if (name == "run") return FamilyKind::Run;
  throw std::invalid_argument("unknown family kind: " + name);
}

FamilySpec FamilySpec::make(FamilyKind kind, int level) {
  FamilySpec spec;
  spec.kind = kind;
  spec.level = level;
  switch (kind) {
    case FamilyKind::Tandem:
      spec.n = formulas::tandem_counts(level).n;
      break;
    case FamilyKind::Quartic:
      spec.n = formulas::quartic_counts(level).n;
      break;
    case FamilyKind::QuarticBinary: {
      const auto counts = formulas::binary_quartic_counts(level);
      spec.n = counts.n;
      spec.sigma = counts.sigma;
      spec.k = counts.k;
      spec.nprime = counts.nprime;
      break;
    }
    case FamilyKind::Run:
      spec.n = formulas::run_counts(level).n;
      break;
  }
  return spec;
}

// --- tandem family ----------------------------------------------------------

Grid2D tandem_family(int level, long long max_cells) {
  require_level(level, 1, "tandem_family");
  const auto counts = formulas::tandem_counts(level);
  const long long n = counts.n;
  require_budget(n, max_cells, "tandem_family");
  const int ni = static_cast<int>(n);
  const long long block = pow_ll(2, level);
  Grid2D g(ni, ni, 2);
  for (int i = 0; i < ni; ++i) {
    // five parts: 0..01 | label | 0..01 | label | 0..01
    const long long label = static_cast<long long>(i) & (block - 1);
    int c = 0;
    for (int part = 0; part < 3; ++part) {
      g.set(i, c + static_cast<int>(block) - 1, 1);
      c += static_cast<int>(block);
      if (part < 2) {
        for (int b = 0; b < level; ++b)
          g.set(i, c + b, static_cast<Cell>((label >> (level - 1 - b)) & 1));
        c += level;
      }
    }
  }
  return g;
}

WitnessSet tandem_witnesses(int level) {
  require_level(level, 1, "tandem_witnesses");
  const auto counts = formulas::tandem_counts(level);
  if (counts.witness_count > kMaxWitnessRects)
    throw std::length_error("tandem_witnesses: witness set too large");
  WitnessSet ws;
  ws.spec = FamilySpec::make(FamilyKind::Tandem, level);
  ws.claimed_kind = WitnessKind::TandemHorizontal;
  const int n = static_cast<int>(counts.n);
  const int shifts = static_cast<int>(pow_ll(2, level));
  const int width = 2 * (shifts + level);
  ws.rects.reserve(static_cast<std::size_t>(counts.witness_count));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < shifts; ++k) ws.rects.push_back({i, k, j - i + 1, width});
  sort_rects(ws);
  return ws;
}

// --- quartic family ---------------------------------------------------------

namespace {

// Start columns of the 3^i maximal all-zero column ranges of the level-i
// array; the column structure never shifts across levels, so ranges nest.
std::vector<std::vector<int>> quartic_ranges(int level) {
  const auto counts = formulas::quartic_counts(level);
  std::vector<std::vector<int>> ranges(level + 1);
  const int n1 = static_cast<int>(counts.range_closed[1]);
  ranges[1] = {0, n1 + 1, 2 * n1 + 2};
  for (int i = 2; i <= level; ++i) {
    const int ni = static_cast<int>(counts.range_closed[i]);
    ranges[i].reserve(ranges[i - 1].size() * 3);
    for (int a : ranges[i - 1]) {
      ranges[i].push_back(a);
      ranges[i].push_back(a + ni + 1);
      ranges[i].push_back(a + 2 * ni + 2);
    }
  }
  return ranges;
}

}  // namespace

Grid2D quartic_family(int level, long long max_cells) {
  require_level(level, 1, "quartic_family");
  const auto counts = formulas::quartic_counts(level);
  const long long n = counts.n;
  require_budget(n, max_cells, "quartic_family");
  const auto ranges = quartic_ranges(level);
  const int ni = static_cast<int>(n);
  const Cell alphabet = static_cast<Cell>(counts.s_closed[level] + 1);

  // level 1: two rows, one special character in two columns
  const int n1 = static_cast<int>(counts.range_closed[1]);
  Grid2D grid(2, ni, alphabet);
  grid.set(0, n1, 1);
  grid.set(1, n1, 1);
  grid.set(0, 2 * n1 + 1, 1);
  grid.set(1, 2 * n1 + 1, 1);

  for (int i = 2; i <= level; ++i) {
    const int m_prev = static_cast<int>(counts.m_closed[i - 1]);
    const long long s_prev = counts.s_closed[i - 1];
    const int rows = 3 * m_prev + 2;
    Grid2D next(rows, ni, alphabet);
    // three copies with disjoint renamed specials, one separating row between
    for (int copy = 0; copy < 3; ++copy) {
      const int off = copy * (m_prev + 1);
      for (int r = 0; r < m_prev; ++r)
        for (int c = 0; c < ni; ++c) {
          const Cell v = grid.at(r, c);
          next.set(off + r, c, v == 0 ? 0 : static_cast<Cell>(copy * s_prev + v));
        }
    }
    // one fresh special per zero range, at the crossings of its two
    // sub-range separators with the two separating rows
    const int ni_cur = static_cast<int>(counts.range_closed[i]);
    Cell fresh = static_cast<Cell>(3 * s_prev + 1);
    for (int a : ranges[i - 1]) {
      for (int sep_row : {m_prev, 2 * m_prev + 1})
        for (int sep_col : {a + ni_cur, a + 2 * ni_cur + 1}) next.set(sep_row, sep_col, fresh);
      ++fresh;
    }
    grid = std::move(next);
  }
  return grid;
}

WitnessSet quartic_witnesses(int level) {
  require_level(level, 1, "quartic_witnesses");
  const auto counts = formulas::quartic_counts(level);
  if (counts.q_closed[level] > kMaxWitnessRects)
    throw std::length_error("quartic_witnesses: witness set too large");
  const auto ranges = quartic_ranges(level);

  const int n1 = static_cast<int>(counts.range_closed[1]);
  std::vector<Rect> rects;
  for (int c = 0; c <= n1; ++c) rects.push_back({0, c, 2, 2 * (n1 + 1)});

  for (int i = 2; i <= level; ++i) {
    const int m_prev = static_cast<int>(counts.m_closed[i - 1]);
    const int ni = static_cast<int>(counts.range_closed[i]);
    std::vector<Rect> next;
    next.reserve(rects.size() * 3 + ranges[i - 1].size() * (ni + 1) * (m_prev + 1));
    for (int copy = 0; copy < 3; ++copy)
      for (const Rect& r : rects)
        next.push_back({r.top + copy * (m_prev + 1), r.left, r.height, r.width});
    for (int a : ranges[i - 1])
      for (int t = 0; t <= m_prev; ++t)
        for (int c = 0; c <= ni; ++c)
          next.push_back({t, a + c, 2 * (m_prev + 1), 2 * (ni + 1)});
    rects = std::move(next);
  }

  WitnessSet ws;
  ws.spec = FamilySpec::make(FamilyKind::Quartic, level);
  ws.claimed_kind = WitnessKind::Quartic;
  ws.rects = std::move(rects);
  sort_rects(ws);
  return ws;
}

// --- binary reduction -------------------------------------------------------

Grid2D gadget(long long c, int k) {
  if (k < 3) throw std::invalid_argument("gadget: k must be >= 3");
  if (c < 0) throw std::invalid_argument("gadget: character must be non-negative");
  const int payload = (k - 2) * (k - 2);
  if (payload < 63 && c >= (1LL << payload))
    throw std::invalid_argument("gadget: character does not fit in " +
                                std::to_string(payload) + " bits");
  Grid2D g(k, k, 2);
  for (int i = 1; i < k; ++i) {
    g.set(k - 1, i, 1);
    g.set(i, k - 1, 1);
  }
  for (int idx = 0; idx < payload; ++idx) {
    const int shift = payload - 1 - idx;
    const Cell bit = shift < 63 ? static_cast<Cell>((c >> shift) & 1) : 0;
    g.set(1 + idx / (k - 2), 1 + idx % (k - 2), bit);
  }
  return g;
}

Grid2D quartic_binary_family(int level, long long max_cells) {
  require_level(level, 2, "quartic_binary_family");
  const auto counts = formulas::binary_quartic_counts(level);
  require_budget(counts.nprime, max_cells, "quartic_binary_family");
  const Grid2D base = quartic_family(level, max_cells);
  const int k = static_cast<int>(counts.k);

  std::vector<Grid2D> gadgets;
  gadgets.reserve(counts.sigma + 1);
  for (long long c = 0; c <= counts.sigma; ++c) gadgets.push_back(gadget(c, k));

  const int np = static_cast<int>(counts.nprime);
  Grid2D g(np, np, 2);
  for (int r = 0; r < base.rows(); ++r)
    for (int c = 0; c < base.cols(); ++c) {
      const Grid2D& b = gadgets[base.at(r, c)];
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g.set(r * k + i, c * k + j, b.at(i, j));
    }
  return g;
}

WitnessSet quartic_binary_witnesses(int level) {
  require_level(level, 2, "quartic_binary_witnesses");
  const auto counts = formulas::binary_quartic_counts(level);
  if (counts.qprime[level] > kMaxWitnessRects)
    throw std::length_error("quartic_binary_witnesses: witness set too large");
  const auto base = formulas::quartic_counts(level);
  const auto ranges = quartic_ranges(level);
  const int k = static_cast<int>(counts.k);

  const int n1 = static_cast<int>(base.range_closed[1]);
  std::vector<Rect> rects;
  for (int c = 0; c <= k * n1; ++c) rects.push_back({0, c, 2 * k, 2 * k * (n1 + 1)});

  for (int i = 2; i <= level; ++i) {
    const int m_prev = static_cast<int>(base.m_closed[i - 1]);
    const int ni = static_cast<int>(base.range_closed[i]);
    std::vector<Rect> next;
    next.reserve(rects.size() * 3 +
                 ranges[i - 1].size() * (k * ni + 1) * (k * m_prev + 1));
    for (int copy = 0; copy < 3; ++copy)
      for (const Rect& r : rects)
        next.push_back({r.top + copy * k * (m_prev + 1), r.left, r.height, r.width});
    for (int a : ranges[i - 1])
      for (int t = 0; t <= k * m_prev; ++t)
        for (int c = 0; c <= k * ni; ++c)
          next.push_back({t, k * a + c, 2 * k * (m_prev + 1), 2 * k * (ni + 1)});
    rects = std::move(next);
  }

  WitnessSet ws;
  ws.spec = FamilySpec::make(FamilyKind::QuarticBinary, level);
  ws.claimed_kind = WitnessKind::Quartic;
  ws.rects = std::move(rects);
  sort_rects(ws);
  return ws;
}

GridOffsets recover_offsets(const Grid2D& g, const Rect& r, int k) {
  require_rect(g, r, "recover_offsets");
  if (k < 1) throw std::invalid_argument("recover_offsets: k must be >= 1");
  if (r.height < k || r.width < k)
    throw std::invalid_argument("recover_offsets: rect must be at least k x k");

  int zero_row = -1;
  for (int i = 0; i < r.height; ++i) {
    bool all_zero = true;
    for (int j = 0; all_zero && j < r.width; ++j) all_zero = g.at(r.top + i, r.left + j) == 0;
    if (!all_zero) continue;
    if (zero_row >= 0 && i % k != zero_row % k)
      throw std::runtime_error("recover_offsets: inconsistent all-zero rows");
    if (zero_row < 0) zero_row = i;
  }
  if (zero_row < 0) throw std::runtime_error("recover_offsets: no all-zero row found");

  int zero_col = -1;
  for (int j = 0; j < r.width; ++j) {
    bool all_zero = true;
    for (int i = 0; all_zero && i < r.height; ++i) all_zero = g.at(r.top + i, r.left + j) == 0;
    if (!all_zero) continue;
    if (zero_col >= 0 && j % k != zero_col % k)
      throw std::runtime_error("recover_offsets: inconsistent all-zero columns");
    if (zero_col < 0) zero_col = j;
  }
  if (zero_col < 0) throw std::runtime_error("recover_offsets: no all-zero column found");

  return {(k - zero_row % k) % k, (k - zero_col % k) % k};
}

// --- run family -------------------------------------------------------------

namespace {

Grid2D run_level_one() {
  Grid2D g(8, 8, 2);
  g.set(0, 1, 1);
  g.set(1, 0, 1);
  g.set(6, 7, 1);
  g.set(7, 6, 1);
  return g;
}

}  // namespace

Grid2D run_family(int level, long long max_cells) {
  require_level(level, 1, "run_family");
  const auto counts = formulas::run_counts(level);
  require_budget(counts.n, max_cells, "run_family");
  Grid2D g = run_level_one();
  for (int i = 2; i <= level; ++i) {
    const int prev = g.rows();
    Grid2D next(prev * 4, prev * 4, 2);
    for (int br = 0; br < 4; ++br)
      for (int bc = 0; bc < 4; ++bc)
        for (int r = 0; r < prev; ++r)
          for (int c = 0; c < prev; ++c) next.set(br * prev + r, bc * prev + c, g.at(r, c));
    // fill the antidiagonals of the top-left and bottom-right copies
    for (int d = 0; d < prev; ++d) {
      next.set(d, prev - 1 - d, 1);
      next.set(3 * prev + d, 4 * prev - 1 - d, 1);
    }
    g = std::move(next);
  }
  return g;
}

RunCopyLayout run_copy_layout(int level) {
  require_level(level, 1, "run_copy_layout");
  if (level > 8) throw std::length_error("run_copy_layout: level too large");
  RunCopyLayout layout;
  layout.plain.resize(level + 1);
  layout.primed.resize(level + 1);

  auto place = [&](auto&& self, int i, int row, int col, bool primed) -> void {
    (primed ? layout.primed : layout.plain)[i].push_back({row, col});
    if (i == 1) return;
    const int block = static_cast<int>(2 * pow_ll(4, i - 1));  // side of a level-(i-1) copy
    for (int br = 0; br < 4; ++br)
      for (int bc = 0; bc < 4; ++bc) {
        const bool corner = (br == 0 && bc == 0) || (br == 3 && bc == 3);
        const bool child_primed = primed ? (corner || br + bc == 3) : corner;
        self(self, i - 1, row + br * block, col + bc * block, child_primed);
      }
  };
  place(place, level, 0, 0, false);
  return layout;
}

WitnessSet run_witnesses(int level) {
  require_level(level, 1, "run_witnesses");
  const auto counts = formulas::run_counts(level);
  if (counts.total > kMaxWitnessRects)
    throw std::length_error("run_witnesses: witness set too large");
  const RunCopyLayout layout = run_copy_layout(level);

  WitnessSet ws;
  ws.spec = FamilySpec::make(FamilyKind::Run, level);
  ws.claimed_kind = WitnessKind::Run;
  ws.rects.reserve(static_cast<std::size_t>(counts.total));
  for (int i = 1; i <= level; ++i) {
    // sub-block side inside a level-i copy; the level-1 array itself is a
    // 4x4 arrangement of 2x2 blocks carrying the corner antidiagonals
    const int block = static_cast<int>(2 * pow_ll(4, i - 1));
    for (const auto& at : layout.plain[i])
      // corners sit one step inside the two filled antidiagonals
      for (int t = 1; t <= block - 1; ++t)
        for (int u = 3 * block; u <= 4 * block - 2; ++u) {
          const int top = at.row + t;
          const int left = at.col + block - t;
          const int bottom = at.row + u;
          const int right = at.col + 7 * block - 2 - u;
          ws.rects.push_back({top, left, bottom - top + 1, right - left + 1});
        }
  }
  sort_rects(ws);
  return ws;
}

// --- witness serialization ---------------------------------------------------

void save_witnesses(const WitnessSet& ws, std::ostream& out) {
  out << "kind=" << to_string(ws.spec.kind) << " level=" << ws.spec.level
      << " n=" << ws.spec.n;
  if (ws.spec.kind == FamilyKind::QuarticBinary)
    out << " sigma=" << ws.spec.sigma << " k=" << ws.spec.k << " nprime=" << ws.spec.nprime;
  out << " rects=" << ws.rects.size() << '\n';
  for (const Rect& r : ws.rects)
    out << r.top << ' ' << r.left << ' ' << r.height << ' ' << r.width << '\n';
}

std::string save_witnesses(const WitnessSet& ws) {
  std::ostringstream out;
  save_witnesses(ws, out);
  return out.str();
}

WitnessSet load_witnesses(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty witness file", 1, 1);
  std::map<std::string, std::string> fields;
  std::istringstream hs(header);
  std::string token;
  while (hs >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in header", 1, 1);
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  auto get = [&](const char* key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end())
      throw ParseError(std::string("missing header field ") + key, 1, 1);
    return it->second;
  };

  WitnessSet ws;
  ws.spec = FamilySpec::make(family_kind_from_string(get("kind")), std::stoi(get("level")));
  ws.claimed_kind = ws.spec.kind == FamilyKind::Run          ? WitnessKind::Run
                    : ws.spec.kind == FamilyKind::Tandem     ? WitnessKind::TandemHorizontal
                                                             : WitnessKind::Quartic;
  if (std::stoll(get("n")) != ws.spec.n) throw ParseError("header n does not match kind/level", 1, 1);
  const long long count = std::stoll(get("rects"));

  ws.rects.reserve(count);
  for (long long i = 0; i < count; ++i) {
    Rect r;
    if (!(in >> r.top >> r.left >> r.height >> r.width))
      throw ParseError("truncated witness list", static_cast<int>(i) + 2, 1);
    ws.rects.push_back(r);
  }
  return ws;
}

WitnessSet load_witnesses(const std::string& text) {
  std::istringstream in(text);
  return load_witnesses(in);
}

}  // namespace rep2d::families
