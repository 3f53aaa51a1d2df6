#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "pgroups/report.hpp"

namespace pgroups {

using u64 = std::uint64_t;

u64 gcd_u(u64 a, u64 b);
std::int64_t gcd_i(std::int64_t a, std::int64_t b);
u64 lcm_u(u64 a, u64 b);
/// p^m; throws on overflow.
u64 ipow(u64 p, int m);
/// Distinct prime divisors by trial division, ascending.
std::vector<u64> prime_factors(u64 n);
std::vector<u64> divisors(u64 n);

int nu_p(u64 k, u64 p);
u64 p_part(u64 k, u64 p);
/// Primes dividing p^m - 1 but no p^j - 1 for j < m.
std::vector<u64> ppd_list(u64 p, int m);
/// m is not divisible by any primitive prime divisor of p^m - 1.
bool no_ppd_divides_m(u64 p, int m);

struct DigitBlock {
  int position;  // lowest digit of the block
  int length;
  int digit;
};

struct DigitProfile {
  u64 k = 0;
  int s2 = 0;
  int beta = 0;
  std::vector<DigitBlock> blocks;  // finite blocks, low to high
};

DigitProfile digit_profile(u64 k);
int s2(u64 k);
int beta(u64 k);
int longest_one_block(u64 k);

/// Left cyclic shift of the low m digits.
u64 shift_m(u64 delta, int m);
/// 2^m - 1 - delta.
u64 complement_m(u64 delta, int m);
/// Longest run of equal digits among the low m digits read around a circle.
int lambda_m(u64 delta, int m);

struct DeltaWitness {
  u64 a;
  u64 b;
  u64 delta;
};
/// All (a, b) with s2(a) = 2, s2(b) <= 2, a != b, both in [1, 2^m - 1] and
/// (2^m-1)/gcd(m, 2^m-1) dividing a - b.
std::vector<DeltaWitness> delta_witnesses(int m);
std::set<u64> delta_set(int m);

Report verify_unexpected(int max_m = 37);
Report block_lemma_checks(u64 k_limit = u64{1} << 20, int t_limit = 24);
Report gcd_bound_check(int max_m = 16);

/// u (2^m-1)/(2^n-1) has exactly two binary digits (with n | m, u odd and a
/// unit mod 2^n-1).
bool singer_condition_direct(int n, int m, u64 u);
/// m = n >= 2 and u = 1 + 2^k with nu_2(k) >= nu_2(m), or n = m/2 and u = 1.
bool singer_condition_closed(int n, int m, u64 u);
Report singer_parameter_equivalence(int max_m = 20);
Report no_ppd_check(int max_m = 30);

}  // namespace pgroups
