#include "rep2d/formulas.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rep2d::formulas {

namespace {

using i128 = __int128;

long long checked(i128 v, const char* what) {
  if (v > static_cast<i128>(9'223'372'036'854'775'807LL) ||
      v < -static_cast<i128>(9'223'372'036'854'775'807LL))
    throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
  return static_cast<long long>(v);
}

i128 ipow(long long base, int exp) {
  i128 v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

void require_level(int level, int min_level, const char* what) {
  if (level < min_level)
    throw std::invalid_argument(std::string(what) + ": level must be >= " +
                                std::to_string(min_level));
  if (level > 24)
    throw std::invalid_argument(std::string(what) + ": level too large");
}

void check_equal(long long a, long long b, const char* what) {
  if (a != b)
    throw std::logic_error(std::string(what) + ": recurrence " + std::to_string(a) +
                           " != closed form " + std::to_string(b));
}

}  // namespace

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

QuarticCounts quartic_counts(int level) {
  require_level(level, 1, "quartic_counts");
  QuarticCounts out;
  out.level = level;
  out.n = checked(ipow(3, level) - 1, "quartic_counts n");
  const long long n = out.n;
  auto sized = [&](std::vector<long long>& v) { v.assign(level + 1, 0); };
  sized(out.m_rec);
  sized(out.m_closed);
  sized(out.range_rec);
  sized(out.range_closed);
  sized(out.q_rec);
  sized(out.q_closed);
  sized(out.s_rec);
  sized(out.s_closed);

  for (int i = 1; i <= level; ++i) {
    out.m_rec[i] = i == 1 ? 2 : 3 * out.m_rec[i - 1] + 2;
    out.m_closed[i] = checked(ipow(3, i) - 1, "M");
    check_equal(out.m_rec[i], out.m_closed[i], "M");

    out.range_rec[i] = i == 1 ? (n - 2) / 3 : (out.range_rec[i - 1] - 2) / 3;
    out.range_closed[i] = checked((n + 1) / ipow(3, i) - 1, "N");
    check_equal(out.range_rec[i], out.range_closed[i], "N");

    out.q_rec[i] = i == 1 ? (n + 1) / 3
                          : checked(3 * static_cast<i128>(out.q_rec[i - 1]) +
                                        ipow(3, i - 2) * (n + 1),
                                    "Q");
    out.q_closed[i] = checked(static_cast<i128>(i) * ipow(3, level + i - 2), "Q");
    check_equal(out.q_rec[i], out.q_closed[i], "Q");

    out.s_rec[i] = i == 1 ? 1
                          : checked(3 * static_cast<i128>(out.s_rec[i - 1]) + ipow(3, i - 1),
                                    "S");
    out.s_closed[i] = checked(static_cast<i128>(i) * ipow(3, i - 1), "S");
    check_equal(out.s_rec[i], out.s_closed[i], "S");
  }
  return out;
}

long long gadget_size(int level) {
  require_level(level, 1, "gadget_size");
  const long long sigma = checked(static_cast<i128>(level) * ipow(3, level - 1), "sigma");
  // payload must hold every character 0..sigma
  const long long bits = std::bit_width(static_cast<std::uint64_t>(sigma));
  long long root = 0;
  while (root * root < bits) ++root;
  return 2 + root;
}

BinaryQuarticCounts binary_quartic_counts(int level) {
  return binary_quartic_counts(level, gadget_size(level));
}

BinaryQuarticCounts binary_quartic_counts(int level, long long k) {
  require_level(level, 2, "binary_quartic_counts");
  if (k < 3) throw std::invalid_argument("binary_quartic_counts: k must be >= 3");
  const QuarticCounts base = quartic_counts(level);
  BinaryQuarticCounts out;
  out.level = level;
  out.n = base.n;
  out.sigma = base.s_closed[level];
  out.bits = std::bit_width(static_cast<std::uint64_t>(out.sigma));
  out.k = k;
  out.nprime = checked(static_cast<i128>(out.n) * k, "nprime");

  out.qprime.assign(level + 1, 0);
  out.qprime[1] = checked((static_cast<i128>(out.n) * k - 2 * k) / 3 + 1, "Q'1");
  for (int i = 2; i <= level; ++i) {
    const i128 shifts_h = (static_cast<i128>(base.range_closed[i - 1]) * k - 2 * k) / 3 + 1;
    const i128 shifts_v = static_cast<i128>(base.m_closed[i - 1]) * k + 1;
    out.qprime[i] = checked(3 * static_cast<i128>(out.qprime[i - 1]) +
                                ipow(3, i - 1) * shifts_h * shifts_v,
                            "Q'");
  }

  // 3^(l-3) k^2 ((l-1) n - 3^l / 2) as an exact rational over 54
  const i128 num = ipow(3, level) * k * k *
                   (2 * static_cast<i128>(level - 1) * out.n - ipow(3, level));
  out.lower_bound = make_rational(checked(num, "lower bound"), 54);
  out.exceeds_lower_bound =
      static_cast<i128>(out.qprime[level]) * out.lower_bound.den >
      static_cast<i128>(out.lower_bound.num);
  if (level >= 4 && !out.exceeds_lower_bound)
    throw std::logic_error("binary_quartic_counts: exact count does not exceed the lower bound");
  return out;
}

RunCounts run_counts(int level) {
  require_level(level, 1, "run_counts");
  if (level > 15) throw std::invalid_argument("run_counts: level too large");
  RunCounts out;
  out.level = level;
  out.n = checked(2 * ipow(4, level), "run n");
  out.r.assign(level + 1, 0);
  out.x.assign(level + 1, 0);
  out.y.assign(level + 1, 0);

  for (int i = 1; i <= level; ++i) {
    const i128 side = 2 * ipow(4, i - 1) - 1;
    out.r[i] = checked(side * side, "R");
    check_equal(out.r[i], checked(ipow(16, i) / 4 - ipow(4, i) + 1, "R closed"), "R");
  }

  out.x[level] = 1;
  out.y[level] = 0;
  for (int i = level - 1; i >= 1; --i) {
    out.x[i] = checked(14 * static_cast<i128>(out.x[i + 1]) + 10 * static_cast<i128>(out.y[i + 1]), "X");
    out.y[i] = checked(6 * static_cast<i128>(out.y[i + 1]) + 2 * static_cast<i128>(out.x[i + 1]), "Y");
  }

  i128 total = 0;
  for (int i = 1; i <= level; ++i) total += static_cast<i128>(out.x[i]) * out.r[i];
  out.total = checked(total, "run total");

  for (int i = 1; i <= level; ++i) {
    const i128 pow16 = ipow(16, level - i);
    if (static_cast<i128>(out.x[i]) + out.y[i] != pow16)
      throw std::logic_error("run_counts: x_i + y_i != 16^(level-i)");
    if (i < level && out.x[i] < 5 * out.y[i])
      throw std::logic_error("run_counts: x_i < 5 y_i");
    if (6 * static_cast<i128>(out.x[i]) < 5 * pow16)
      throw std::logic_error("run_counts: 6 x_i < 5 * 16^(level-i)");
  }
  if (level >= 2 && 24 * total < static_cast<i128>(level) * ipow(16, level))
    throw std::logic_error("run_counts: total below level * 16^level / 24");
  return out;
}

TandemCounts tandem_counts(int level) {
  require_level(level, 1, "tandem_counts");
  TandemCounts out;
  out.level = level;
  out.n = checked(3 * ipow(2, level) + 2 * level, "tandem n");
  out.witness_count =
      checked(static_cast<i128>(out.n) * (out.n + 1) / 2 * ipow(2, level), "tandem count");
  return out;
}

}  // namespace rep2d::formulas
