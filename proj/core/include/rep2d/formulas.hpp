#pragma once

#include <vector>

#include "rep2d/grid.hpp"

namespace rep2d::formulas {

/// Exact rational, normalized with den > 0. Only the binary-quartic lower
/// bound needs it; everything else is integral.
struct Rational {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);

/// Per-level values for the multi-alphabet quartic family with n = 3^level - 1.
/// Vectors are indexed 1..level; index 0 is unused. Construction evaluates
/// both the recurrence and the closed form and throws std::logic_error if
/// they ever disagree.
struct QuarticCounts {
  int level = 0;
  long long n = 0;
  std::vector<long long> m_rec, m_closed;          // M_i: rows of level-i array
  std::vector<long long> range_rec, range_closed;  // N_i: width of each zero range
  std::vector<long long> q_rec, q_closed;          // Q_i: counted distinct quartics
  std::vector<long long> s_rec, s_closed;          // S_i: special characters used
};

QuarticCounts quartic_counts(int level);

/// Gadget side length for the binary reduction at this level.
long long gadget_size(int level);

struct BinaryQuarticCounts {
  int level = 0;
  long long n = 0;
  long long sigma = 0;   // special characters in the source family
  long long bits = 0;    // payload bits a gadget must hold
  long long k = 0;       // gadget side
  long long nprime = 0;  // n * k
  std::vector<long long> qprime;  // Q'_i, indexed 1..level
  Rational lower_bound;           // 3^(l-3) * k^2 * ((l-1) n - 3^l / 2)
  bool exceeds_lower_bound = false;
};

BinaryQuarticCounts binary_quartic_counts(int level);
BinaryQuarticCounts binary_quartic_counts(int level, long long k);

/// Per-level values for the run family with n = 2 * 4^level. Construction
/// verifies x_i + y_i = 16^(level-i), x_i >= 5 y_i, 6 x_i >= 5 * 16^(level-i)
/// and, for level >= 2, 24 * total >= level * 16^level.
struct RunCounts {
  int level = 0;
  long long n = 0;
  std::vector<long long> r;  // new runs contributed by one level-i copy
  std::vector<long long> x;  // plain level-i copies inside the final array
  std::vector<long long> y;  // antidiagonal-filled level-i copies
  long long total = 0;       // sum of x_i * r_i
};

RunCounts run_counts(int level);

struct TandemCounts {
  int level = 0;
  long long n = 0;
  long long witness_count = 0;  // n (n+1) / 2 * 2^level
};

TandemCounts tandem_counts(int level);

}  // namespace rep2d::formulas
