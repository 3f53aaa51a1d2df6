#include "pgroups/numtheory.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pgroups {

u64 gcd_u(u64 a, u64 b) { return std::gcd(a, b); }

std::int64_t gcd_i(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

u64 lcm_u(u64 a, u64 b) { return a / gcd_u(a, b) * b; }

u64 ipow(u64 p, int m) {
  u64 r = 1;
  for (int i = 0; i < m; ++i) {
    if (r > UINT64_MAX / p) throw std::overflow_error("ipow overflow");
    r *= p;
  }
  return r;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> small, large;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int nu_p(u64 k, u64 p) {
  if (k == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

u64 p_part(u64 k, u64 p) { return ipow(p, nu_p(k, p)); }

std::vector<u64> ppd_list(u64 p, int m) {
  std::vector<u64> out;
  const u64 top = ipow(p, m) - 1;
  for (u64 r : prime_factors(top)) {
    bool primitive = true;
    u64 pj = 1;
    for (int j = 1; j < m && primitive; ++j) {
      pj = pj * p;
      if ((pj - 1) % r == 0) primitive = false;
    }
    if (primitive) out.push_back(r);
  }
  return out;
}

bool no_ppd_divides_m(u64 p, int m) {
  for (u64 r : ppd_list(p, m))
    if (static_cast<u64>(m) % r == 0) return false;
  return true;
}

int s2(u64 k) { return std::popcount(k); }

int beta(u64 k) { return std::popcount(k & ~(k << 1)); }

int longest_one_block(u64 k) {
  int len = 0;
  while (k != 0) {
    k &= k << 1;
    ++len;
  }
  return len;
}

DigitProfile digit_profile(u64 k) {
  DigitProfile dp;
  dp.k = k;
  dp.s2 = s2(k);
  dp.beta = beta(k);
  const int width = k == 0 ? 0 : 64 - std::countl_zero(k);
  int i = 0;
  while (i < width) {
    const int digit = static_cast<int>((k >> i) & 1);
    int j = i;
    while (j < width && static_cast<int>((k >> j) & 1) == digit) ++j;
    dp.blocks.push_back({i, j - i, digit});
    i = j;
  }
  return dp;
}

namespace {

u64 low_mask(int m) { return m >= 64 ? ~u64{0} : (u64{1} << m) - 1; }

void check_range(u64 delta, int m) {
  if (m < 1 || m > 63 || delta > low_mask(m))
    throw std::out_of_range("digit operation out of range");
}

std::string fmt(const char* what, u64 a, u64 b, u64 c) {
  return std::string(what) + " (" + std::to_string(a) + ", " + std::to_string(b) +
         ", " + std::to_string(c) + ")";
}

}  // namespace

u64 shift_m(u64 delta, int m) {
  check_range(delta, m);
  return ((delta << 1) | (delta >> (m - 1))) & low_mask(m);
}

u64 complement_m(u64 delta, int m) {
  check_range(delta, m);
  return low_mask(m) - delta;
}

int lambda_m(u64 delta, int m) {
  check_range(delta, m);
  if (delta == 0 || delta == low_mask(m)) return m;
  auto bit = [&](int i) { return (delta >> (((i % m) + m) % m)) & 1; };
  int start = 0;
  while (bit(start) == bit(start - 1)) ++start;
  int best = 0, run = 0;
  for (int i = start; i < start + m; ++i) {
    run = (i > start && bit(i) == bit(i - 1)) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

std::vector<DeltaWitness> delta_witnesses(int m) {
  if (m < 1 || m > 62) throw std::out_of_range("delta_set supports 1 <= m <= 62");
  const u64 top = low_mask(m);
  const u64 modulus = top / gcd_u(static_cast<u64>(m), top);
  std::vector<u64> two, at_most_two;
  for (int i = 0; i < m; ++i) {
    at_most_two.push_back(u64{1} << i);
    for (int j = i + 1; j < m; ++j) {
      two.push_back((u64{1} << i) | (u64{1} << j));
      at_most_two.push_back((u64{1} << i) | (u64{1} << j));
    }
  }
  std::vector<DeltaWitness> out;
  for (u64 a : two) {
    for (u64 b : at_most_two) {
      if (a == b) continue;
      const u64 diff = a > b ? a - b : b - a;
      if (diff % modulus == 0) out.push_back({a, b, diff});
    }
  }
  return out;
}

std::set<u64> delta_set(int m) {
  std::set<u64> out;
  for (const auto& w : delta_witnesses(m)) out.insert(w.delta);
  return out;
}

Report verify_unexpected(int max_m) {
  Report r;
  r.claim = "delta_set(m) is empty unless m = 6; beta <= 3 and the gcd bound hold on it";
  r.range = "1 <= m <= " + std::to_string(max_m);
  for (int m = 1; m <= max_m; ++m) {
    const auto ws = delta_witnesses(m);
    if (m == 6) {
      bool seen = false;
      for (const auto& w : ws) seen = seen || (w.a == 24 && w.b == 3 && w.delta == 21);
      if (!seen) r.fail("m = 6: witness (24, 3) for 21 missing");
      std::string listing = "delta_set(6) = {";
      bool first = true;
      for (u64 d : delta_set(6)) {
        listing += (first ? "" : ", ") + std::to_string(d);
        first = false;
      }
      r.notes.push_back(listing + "}");
    } else if (!ws.empty()) {
      r.fail(fmt("nonempty delta_set", static_cast<u64>(m), ws[0].a, ws[0].b));
    }
    const u64 top = low_mask(m);
    for (const auto& w : ws) {
      if (beta(w.delta) > 3) r.fail(fmt("beta > 3", static_cast<u64>(m), w.delta, 0));
      const u64 g = gcd_u(w.delta, top);
      // g <= 2^(5m/6) - 1  <=>  6 log2(g + 1) <= 5m
      if (6.0L * std::log2(static_cast<long double>(g + 1)) > 5.0L * m + 1e-12L)
        r.fail(fmt("gcd bound", static_cast<u64>(m), w.delta, g));
    }
    const long double lower = std::ldexp(1.0L, m - 1) / m;
    const long double quotient =
        static_cast<long double>(top) / static_cast<long double>(gcd_u(m, top));
    if (quotient < lower) r.fail(fmt("quotient lower bound", static_cast<u64>(m), 0, 0));
  }
  // m < 6 + 6 log2 m forces m <= 37, and 37 is attained
  for (int m = 1; m <= 100000; ++m) {
    const bool admissible = m < 6.0L + 6.0L * std::log2(static_cast<long double>(m));
    if (admissible && m > 37) r.fail(fmt("analytic bound", static_cast<u64>(m), 0, 0));
    if (m == 37 && !admissible) r.fail("analytic bound: 37 not admissible");
  }
  return r;
}

Report block_lemma_checks(u64 k_limit, int t_limit) {
  Report r;
  r.claim = "|beta(k+2^t)-beta(k)| <= 1 and s(k+2^t) >= s(k)-l1+1 >= beta(k)";
  r.range = "0 <= k < " + std::to_string(k_limit) + ", 0 <= t < " + std::to_string(t_limit);
  for (u64 k = 0; k < k_limit; ++k) {
    const int bk = beta(k);
    const int sk = s2(k);
    const int l1 = longest_one_block(k);
    for (int t = 0; t < t_limit; ++t) {
      const u64 k2 = k + (u64{1} << t);
      const int bk2 = beta(k2);
      if (bk2 - bk > 1 || bk - bk2 > 1) r.fail(fmt("beta jump", k, t, bk2));
      if (bk >= 1) {
        if (s2(k2) < sk - l1 + 1) r.fail(fmt("digit sum bound", k, t, s2(k2)));
        if (sk - l1 + 1 < bk) r.fail(fmt("block count bound", k, t, l1));
      }
    }
  }
  return r;
}

Report gcd_bound_check(int max_m) {
  Report r;
  r.claim = "gcd(delta, 2^m-1) <= 2^(m-lambda_m(delta)) - 1";
  r.range = "1 <= m <= " + std::to_string(max_m) + ", 1 <= delta <= 2^m-2";
  for (int m = 1; m <= max_m; ++m) {
    const u64 top = low_mask(m);
    for (u64 delta = 1; delta + 1 <= top; ++delta) {
      const int lam = lambda_m(delta, m);
      const u64 bound = (u64{1} << (m - lam)) - 1;
      if (gcd_u(delta, top) > bound) r.fail(fmt("gcd bound", static_cast<u64>(m), delta, bound));
    }
  }
  return r;
}

bool singer_condition_direct(int n, int m, u64 u) {
  if (n < 1 || m < 1 || m % n != 0) return false;
  const u64 N = low_mask(n);
  if (u < 1 || u > N || u % 2 == 0 || gcd_u(u, N) != 1) return false;
  return s2(u * (low_mask(m) / N)) == 2;
}

bool singer_condition_closed(int n, int m, u64 u) {
  if (m == n && m >= 2) {
    for (int k = 1; k <= m - 1; ++k)
      if (u == 1 + (u64{1} << k) && nu_p(k, 2) >= nu_p(m, 2)) return true;
  }
  return m % 2 == 0 && n == m / 2 && u == 1;
}

Report singer_parameter_equivalence(int max_m) {
  Report r;
  r.claim = "two-digit condition on u(2^m-1)/(2^n-1) matches the closed form";
  r.range = "1 <= m <= " + std::to_string(max_m) + ", n | m, u odd unit mod 2^n-1";
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= m; ++n) {
      if (m % n != 0) continue;
      const u64 N = low_mask(n);
      for (u64 u = 1; u <= N; u += 2) {
        if (gcd_u(u, N) != 1) continue;
        if (singer_condition_direct(n, m, u) != singer_condition_closed(n, m, u))
          r.fail(fmt("mismatch (n, m, u)", n, m, u));
      }
    }
  }
  return r;
}

Report no_ppd_check(int max_m) {
  Report r;
  r.claim = "no primitive prime divisor of p^m - 1 divides m";
  r.range = "p = 2, m <= " + std::to_string(max_m) + "; p in {3,5,7}, p^m <= 2^40";
  for (int m = 1; m <= max_m; ++m)
    if (!no_ppd_divides_m(2, m)) r.fail(fmt("ppd divides m", 2, m, 0));
  for (u64 p : {3, 5, 7})
    for (int m = 1; ipow(p, m) <= (u64{1} << 40); ++m)
      if (!no_ppd_divides_m(p, m)) r.fail(fmt("ppd divides m", p, m, 0));
  return r;
}

}  // namespace pgroups
