#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "gen.hpp"
#include "pgroups/numtheory.hpp"

using namespace pgroups;

namespace {

std::string digits(u64 k, int m) {
  std::string s;
  for (int i = 0; i < m; ++i) s += ((k >> i) & 1) ? '1' : '0';
  return s;
}

int blocks_of_ones(u64 k) {
  int count = 0;
  bool in = false;
  for (; k; k >>= 1) {
    const bool one = k & 1;
    if (one && !in) ++count;
    in = one;
  }
  return count;
}

int circular_run(u64 k, int m) {
  const std::string s = digits(k, m);
  const std::string ss = s + s;
  int best = 0;
  for (int i = 0; i < m; ++i) {
    int j = i;
    while (j < i + m && ss[j] == ss[i]) ++j;
    best = std::max(best, j - i);
  }
  return best;
}

std::set<u64> naive_delta(int m) {
  const u64 top = (u64{1} << m) - 1;
  u64 g = top, x = static_cast<u64>(m);
  while (x) {
    const u64 t = g % x;
    g = x;
    x = t;
  }
  const u64 mod = top / g;
  std::set<u64> out;
  for (u64 a = 1; a <= top; ++a) {
    if (std::popcount(a) != 2) continue;
    for (u64 b = 1; b <= top; ++b) {
      if (b == a || std::popcount(b) > 2) continue;
      const u64 d = a > b ? a - b : b - a;
      if (d % mod == 0) out.insert(d);
    }
  }
  return out;
}

u64 mult_order(u64 p, u64 r) {
  u64 x = p % r, k = 1;
  while (x != 1) {
    x = x * p % r;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("delta sets against a direct double loop") {
  for (int m = 1; m <= 14; ++m) CHECK_MESSAGE(delta_set(m) == naive_delta(m), "m=" << m);
  CHECK(delta_set(6) == std::set<u64>{21, 42});
  bool witness = false;
  for (const auto& w : delta_witnesses(6)) witness = witness || (w.a == 24 && w.b == 3 && w.delta == 21);
  CHECK(witness);
}

TEST_CASE("verify_unexpected holds through m = 37") {
  const Report r = verify_unexpected(37);
  CHECK(r.ok());
  for (int m = 1; m <= 37; ++m)
    if (m != 6) CHECK_MESSAGE(delta_set(m).empty(), "m=" << m);
}

TEST_CASE("digit statistics on random integers") {
  testgen::Gen g(31);
  for (int t = 0; t < 5000; ++t) {
    const u64 k = g.below(u64{1} << 40);
    CHECK(s2(k) == std::popcount(k));
    CHECK(beta(k) == blocks_of_ones(k));
    const auto dp = digit_profile(k);
    int ones = 0, len = 0;
    for (const auto& b : dp.blocks) {
      CHECK(b.position == len);
      len += b.length;
      if (b.digit == 1) ones += b.length;
    }
    CHECK(ones == dp.s2);
  }
}

TEST_CASE("circular digit operations") {
  testgen::Gen g(32);
  for (int t = 0; t < 3000; ++t) {
    const int m = static_cast<int>(g.range(1, 20));
    const u64 d = g.below(u64{1} << m);
    CHECK(lambda_m(d, m) == circular_run(d, m));
    CHECK(lambda_m(shift_m(d, m), m) == lambda_m(d, m));
    CHECK(lambda_m(complement_m(d, m), m) == lambda_m(d, m));
    u64 s = d;
    for (int i = 0; i < m; ++i) s = shift_m(s, m);
    CHECK(s == d);
  }
  CHECK_THROWS_AS(shift_m(8, 3), std::out_of_range);
  CHECK_THROWS_AS(lambda_m(1, 0), std::out_of_range);
}

TEST_CASE("primitive prime divisors by multiplicative order") {
  for (u64 p : {2, 3, 5}) {
    for (int m = 1; ipow(p, m) < (u64{1} << 32); ++m) {
      std::set<u64> expect;
      for (u64 r : prime_factors(ipow(p, m) - 1))
        if (mult_order(p, r) == static_cast<u64>(m)) expect.insert(r);
      const auto got = ppd_list(p, m);
      CHECK(std::set<u64>(got.begin(), got.end()) == expect);
    }
  }
  CHECK(ppd_list(2, 6).empty());
  CHECK(ppd_list(2, 4) == std::vector<u64>{5});
  CHECK(no_ppd_check(30).ok());
}

TEST_CASE("Singer parameter condition") {
  CHECK(singer_condition_closed(6, 6, 5));
  CHECK_FALSE(singer_condition_closed(6, 6, 3));
  CHECK(singer_condition_closed(3, 6, 1));
  CHECK(singer_condition_direct(3, 6, 1));
  CHECK(singer_condition_direct(6, 6, 5));
  CHECK_FALSE(singer_condition_direct(6, 6, 3));
  CHECK(singer_parameter_equivalence(16).ok());
}

TEST_CASE("arithmetic helpers") {
  CHECK(gcd_u(12, 18) == 6);
  CHECK(gcd_i(-12, 18) == 6);
  CHECK(lcm_u(4, 6) == 12);
  CHECK(nu_p(96, 2) == 5);
  CHECK(p_part(96, 2) == 32);
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(prime_factors(360) == std::vector<u64>{2, 3, 5});
  CHECK_THROWS_AS(nu_p(0, 2), std::domain_error);
  CHECK_THROWS_AS(ipow(2, 64), std::overflow_error);
  CHECK_THROWS_AS(delta_set(63), std::out_of_range);
}

TEST_CASE("block and gcd lemma suites") {
  CHECK(block_lemma_checks(u64{1} << 14, 16).ok());
  CHECK(gcd_bound_check(12).ok());
}
