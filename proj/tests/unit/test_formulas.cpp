#include <doctest.h>

#include "rep2d/formulas.hpp"

using namespace rep2d::formulas;

TEST_CASE("quartic recurrences and closed forms up to level 10") {
  for (int level = 1; level <= 10; ++level) {
    const QuarticCounts q = quartic_counts(level);  // throws on any mismatch
    CHECK(q.n == q.m_closed[level]);                // final array is square
    for (int i = 1; i <= level; ++i) {
      CHECK(q.m_rec[i] == q.m_closed[i]);
      CHECK(q.range_rec[i] == q.range_closed[i]);
      CHECK(q.q_rec[i] == q.q_closed[i]);
      CHECK(q.s_rec[i] == q.s_closed[i]);
    }
  }
}

TEST_CASE("pinned quartic values") {
  const QuarticCounts q3 = quartic_counts(3);
  CHECK(q3.n == 26);
  CHECK(q3.m_closed[3] == 26);
  CHECK(q3.s_closed[3] == 27);
  CHECK(q3.q_closed[3] == 243);
  CHECK(q3.range_closed[1] == 8);
  CHECK(q3.range_closed[2] == 2);
  CHECK(q3.range_closed[3] == 0);

  const QuarticCounts q2 = quartic_counts(2);
  CHECK(q2.n == 8);
  CHECK(q2.q_closed[1] == 3);
  CHECK(q2.q_closed[2] == 18);
  CHECK(q2.range_closed[1] == 2);
  CHECK(q2.s_closed[2] == 6);
}

TEST_CASE("quartic Q satisfies its own recurrence") {
  for (int level = 2; level <= 10; ++level) {
    const QuarticCounts q = quartic_counts(level);
    long long pow3 = 1;  // 3^(i-2)
    for (int i = 2; i <= level; ++i) {
      CHECK(q.q_closed[i] == 3 * q.q_closed[i - 1] + pow3 * (q.n + 1));
      pow3 *= 3;
    }
  }
}

TEST_CASE("gadget size and binary quartic parameters") {
  CHECK(gadget_size(2) == 4);
  CHECK(gadget_size(3) == 5);
  CHECK(gadget_size(4) == 5);

  const BinaryQuarticCounts b2 = binary_quartic_counts(2);
  CHECK(b2.sigma == 6);
  CHECK(b2.bits == 3);
  CHECK(b2.k == 4);
  CHECK(b2.nprime == 32);
  CHECK(b2.qprime[1] == 9);
  CHECK(b2.qprime[2] == 54);

  const BinaryQuarticCounts b3 = binary_quartic_counts(3);
  CHECK(b3.k == 5);
  CHECK(b3.nprime == 130);
  CHECK(b3.qprime[1] == 41);
  CHECK(b3.qprime[2] == 486);
  CHECK(b3.qprime[3] == 1827);

  CHECK_THROWS_AS(binary_quartic_counts(1), std::invalid_argument);
}

TEST_CASE("binary quartic exact counts exceed the lower bound at levels 4 and 5") {
  for (int level = 4; level <= 5; ++level) {
    const BinaryQuarticCounts b = binary_quartic_counts(level);
    CHECK(b.exceeds_lower_bound);
    CHECK(static_cast<double>(b.qprime[level]) >
          static_cast<double>(b.lower_bound.num) / static_cast<double>(b.lower_bound.den));
  }
  const BinaryQuarticCounts b4 = binary_quartic_counts(4);
  CHECK(b4.qprime[4] == 31428);
}

TEST_CASE("run recurrences and inequalities up to level 10") {
  for (int level = 1; level <= 10; ++level) {
    const RunCounts r = run_counts(level);  // throws on any violated identity
    long long pow16 = 1;
    for (int i = level; i >= 1; --i) {
      CHECK(r.x[i] + r.y[i] == pow16);
      if (i < level) CHECK(r.x[i] >= 5 * r.y[i]);
      CHECK(6 * r.x[i] >= 5 * pow16);
      pow16 *= 16;
    }
  }
}

TEST_CASE("pinned run values") {
  const RunCounts r2 = run_counts(2);
  CHECK(r2.n == 32);
  CHECK(r2.r[2] == 49);
  CHECK(r2.x[1] == 14);
  CHECK(r2.y[1] == 2);
  CHECK(r2.total == 63);

  const RunCounts r3 = run_counts(3);
  CHECK(r3.x[1] == 216);
  CHECK(r3.y[1] == 40);
  CHECK(r3.r[3] == 961);
  CHECK(r3.total == 1863);

  const RunCounts r4 = run_counts(4);
  CHECK(r4.total == 43591);
}

TEST_CASE("pinned tandem values and the cubic-rate band") {
  CHECK(tandem_counts(1).n == 8);
  CHECK(tandem_counts(1).witness_count == 72);
  CHECK(tandem_counts(2).n == 16);
  CHECK(tandem_counts(2).witness_count == 544);
  for (int level = 1; level <= 8; ++level) {
    const TandemCounts t = tandem_counts(level);
    const double ratio = static_cast<double>(t.witness_count) /
                         (static_cast<double>(t.n) * t.n * t.n);
    CHECK(ratio >= 1.0 / 20.0);
    CHECK(ratio <= 1.0);
  }
}

TEST_CASE("rationals normalize") {
  CHECK(make_rational(6, -4) == Rational{-3, 2});
  CHECK(make_rational(0, 5) == Rational{0, 1});
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}
