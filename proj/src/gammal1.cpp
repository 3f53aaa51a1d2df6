#include "pgroups/gammal1.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pgroups/numtheory.hpp"

namespace pgroups {

namespace {

using i64 = std::int64_t;

i64 mod(i64 a, i64 n) {
  if (n == 1) return 0;
  i64 r = a % n;
  return r < 0 ? r + n : r;
}

i64 ipow_i(i64 p, int k) { return static_cast<i64>(ipow(static_cast<u64>(p), k)); }

i64 unit_count(int p, int m) { return ipow_i(p, m) - 1; }

// (p^a - 1)/(p^b - 1) for b | a
i64 geometric(int p, int a, int b) { return (ipow_i(p, a) - 1) / (ipow_i(p, b) - 1); }

bool divides(i64 a, i64 b) { return a != 0 && b % a == 0; }

}  // namespace

GammaL1::GammaL1(int p, int deg) : p_(p), deg_(deg) {
  if (p < 2 || deg < 1) throw std::invalid_argument("bad GammaL1 parameters");
  n_ = unit_count(p, deg);
  if (n_ > (i64{1} << 24)) throw std::invalid_argument("GammaL1 too large");
  ppow_.resize(deg);
  i64 x = mod(1, n_);
  for (int k = 0; k < deg; ++k) {
    ppow_[k] = x;
    x = mod(x * p, n_);
  }
}

SemilinearMap GammaL1::normalize(SemilinearMap g) const {
  return {static_cast<int>(mod(g.s, deg_)), mod(g.e, n_)};
}

std::int64_t GammaL1::p_pow(std::int64_t k) const { return ppow_[mod(k, deg_)]; }

SemilinearMap GammaL1::compose(SemilinearMap a, SemilinearMap b) const {
  a = normalize(a);
  b = normalize(b);
  return {static_cast<int>((a.s + b.s) % deg_), mod(a.e * p_pow(b.s) + b.e, n_)};
}

SemilinearMap GammaL1::inverse(SemilinearMap a) const {
  a = normalize(a);
  const int s = static_cast<int>(mod(-a.s, deg_));
  return {s, mod(-a.e * p_pow(s), n_)};
}

SemilinearMap GammaL1::power(SemilinearMap a, std::int64_t k) const {
  if (k < 0) return power(inverse(a), -k);
  SemilinearMap r = identity(), b = normalize(a);
  while (k > 0) {
    if (k & 1) r = compose(r, b);
    b = compose(b, b);
    k >>= 1;
  }
  return r;
}

SemilinearMap GammaL1::conjugate(SemilinearMap x, SemilinearMap g) const {
  return compose(compose(inverse(g), x), g);
}

std::int64_t GammaL1::index(SemilinearMap g) const {
  g = normalize(g);
  return g.s * n_ + g.e;
}

SemilinearMap GammaL1::from_index(std::int64_t i) const {
  return {static_cast<int>(i / n_), i % n_};
}

std::vector<SemilinearMap> GammaL1::generate(const std::vector<SemilinearMap>& gens) const {
  std::vector<char> seen(static_cast<size_t>(order()), 0);
  std::vector<SemilinearMap> frontier{identity()};
  seen[index(identity())] = 1;
  for (size_t at = 0; at < frontier.size(); ++at) {
    for (const auto& g : gens) {
      const SemilinearMap h = compose(frontier[at], g);
      const i64 idx = index(h);
      if (!seen[idx]) {
        seen[idx] = 1;
        frontier.push_back(h);
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

Elem apply(const Field& f, SemilinearMap g, Elem x) {
  if (x == 0) return 0;
  return f.mul(f.frobenius(x, g.s), f.exp(g.e));
}

Elem apply(const Field& f, Elem base, SemilinearMap g, Elem x) {
  if (x == 0) return 0;
  return f.mul(f.frobenius(x, g.s), f.pow(base, g.e));
}

std::string to_string(const StandardParams& P) {
  return "(" + std::to_string(P.d) + "," + std::to_string(P.e) + "," + std::to_string(P.s) + ")";
}

bool is_valid(const StandardParams& P) {
  if (P.p < 2 || P.m < 1) return false;
  const i64 Q = unit_count(P.p, P.m);
  if (P.d < 1 || Q % P.d != 0) return false;
  if (P.s < 1 || P.m % P.s != 0) return false;
  if (P.e < 0 || P.e >= P.d) return false;
  return (P.e * geometric(P.p, P.m, P.s)) % P.d == 0;
}

std::int64_t subgroup_order(const StandardParams& P) {
  return unit_count(P.p, P.m) / P.d * (P.m / P.s);
}

std::vector<SemilinearMap> standard_generators(const StandardParams& P) {
  return {{P.s % P.m, P.e}, {0, P.d}};
}

std::vector<SemilinearMap> subgroup_elements(const StandardParams& P) {
  return GammaL1(P.p, P.m).generate(standard_generators(P));
}

StandardParams standard_form(int p, int m, const std::vector<SemilinearMap>& gens) {
  if (gens.empty()) throw std::invalid_argument("standard_form needs generators");
  const GammaL1 G(p, m);
  const auto H = G.generate(gens);
  StandardParams P;
  P.p = p;
  P.m = m;
  i64 d = G.unit_order();
  int s = m;
  for (const auto& h : H) {
    if (h.s == 0) d = std::gcd(d, h.e);
    else s = std::min(s, h.s);
  }
  P.d = d;
  P.s = s;
  P.e = 0;
  if (s < m) {
    for (const auto& h : H) {
      if (h.s == s) {
        P.e = h.e % d;
        break;
      }
    }
  }
  return P;
}

std::vector<StandardParams> all_standard_params(int p, int m) {
  std::vector<StandardParams> out;
  const i64 Q = unit_count(p, m);
  for (u64 du : divisors(static_cast<u64>(Q))) {
    const i64 d = static_cast<i64>(du);
    for (int s = 1; s <= m; ++s) {
      if (m % s != 0) continue;
      const i64 g = geometric(p, m, s);
      for (i64 e = 0; e < d; ++e)
        if ((e * g) % d == 0) out.push_back({p, m, d, e, s});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool knuth_criterion(std::int64_t a, std::int64_t b, std::int64_t M) {
  if (M < 1) throw std::invalid_argument("modulus must be positive");
  if (M == 1) return true;
  a = mod(a, M);
  b = mod(b, M);
  if (std::gcd(b, M) != 1) return false;
  for (u64 r : prime_factors(static_cast<u64>(M)))
    if (mod(a - 1, static_cast<i64>(r)) != 0) return false;
  if (M % 4 == 0 && mod(a - 1, 4) != 0) return false;
  return true;
}

bool full_cycle_by_simulation(std::int64_t a, std::int64_t b, std::int64_t M) {
  if (M < 1) throw std::invalid_argument("modulus must be positive");
  a = mod(a, M);
  b = mod(b, M);
  i64 x = 0;
  for (i64 step = 1; step <= M; ++step) {
    x = mod(a * x + b, M);
    if (x == 0) return step == M;
  }
  return false;
}

bool knuth_full_cycle(std::int64_t a, std::int64_t b, std::int64_t M,
                      std::int64_t simulation_bound) {
  const bool crit = knuth_criterion(a, b, M);
  if (M <= simulation_bound && crit != full_cycle_by_simulation(a, b, M))
    throw std::logic_error("full-cycle criterion disagrees with simulation");
  return crit;
}

std::int64_t orbit_count(const StandardParams& P) {
  const i64 a = ipow_i(P.p, P.s);
  std::vector<char> seen(static_cast<size_t>(P.d), 0);
  i64 cycles = 0;
  for (i64 x0 = 0; x0 < P.d; ++x0) {
    if (seen[x0]) continue;
    ++cycles;
    for (i64 x = x0; !seen[x]; x = mod(a * x + P.e, P.d)) seen[x] = 1;
  }
  return cycles;
}

std::int64_t orbit_count_direct(const Field& f, const StandardParams& P) {
  if (f.p() != P.p || f.m() != P.m) throw std::invalid_argument("field mismatch");
  const auto gens = standard_generators(P);
  const Elem q = f.size();
  std::vector<Elem> parent(q);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Elem x = 1; x < q; ++x)
    for (const auto& g : gens) parent[find(x)] = find(apply(f, g, x));
  std::int64_t count = 0;
  for (Elem x = 1; x < q; ++x)
    if (find(x) == x) ++count;
  return count;
}

bool is_transitive(const StandardParams& P) {
  bool t;
  if (P.d == 1) {
    t = true;
  } else {
    const i64 ps1 = ipow_i(P.p, P.s) - 1;
    t = P.e > 0 && std::gcd(P.d, P.e) == 1;
    for (u64 r : prime_factors(static_cast<u64>(P.d)))
      t = t && ps1 % static_cast<i64>(r) == 0;
    if (P.d % 4 == 0) t = t && ps1 % 4 == 0;
  }
  if (t != (orbit_count(P) == 1))
    throw std::logic_error("transitivity criterion disagrees with orbit count");
  return t;
}

bool contains(const StandardParams& sub, const StandardParams& sup) {
  if (sub.p != sup.p || sub.m != sup.m) throw std::invalid_argument("ambient mismatch");
  if (!divides(sup.d, sub.d) || sub.s % sup.s != 0) return false;
  return mod(sup.e * geometric(sup.p, sub.s, sup.s) - sub.e, sup.d) == 0;
}

bool contains_direct(const StandardParams& sub, const StandardParams& sup) {
  const GammaL1 G(sup.p, sup.m);
  std::vector<char> in_sup(static_cast<size_t>(G.order()), 0);
  for (const auto& g : subgroup_elements(sup)) in_sup[G.index(g)] = 1;
  for (const auto& g : subgroup_elements(sub))
    if (!in_sup[G.index(g)]) return false;
  return true;
}

bool is_normal_in(const StandardParams& sub, const StandardParams& sup) {
  if (!contains(sub, sup)) throw std::invalid_argument("normality needs containment");
  const i64 ps = ipow_i(sup.p, sup.s) - 1;
  const i64 ps1 = ipow_i(sup.p, sub.s) - 1;
  return divides(sub.d, sup.d * ps1) && mod(sub.e * ps - sup.e * ps1, sub.d) == 0;
}

bool is_normal_direct(const StandardParams& sub, const StandardParams& sup) {
  const GammaL1 G(sup.p, sup.m);
  std::vector<char> in_sub(static_cast<size_t>(G.order()), 0);
  for (const auto& g : subgroup_elements(sub)) in_sub[G.index(g)] = 1;
  for (const auto& g : standard_generators(sup))
    for (const auto& h : standard_generators(sub))
      if (!in_sub[G.index(G.conjugate(h, g))]) return false;
  return true;
}

QuotientData quotient_data(const StandardParams& sub, const StandardParams& sup) {
  if (!is_normal_in(sub, sup)) throw std::invalid_argument("quotient needs a normal subgroup");
  QuotientData q;
  q.x_exp = sub.s / sup.s;
  q.y_exp = sub.d / sup.d;
  q.order = q.x_exp * q.y_exp;
  q.y_twist = ipow_i(sup.p, sup.s);
  const i64 num = sub.e - sup.e * geometric(sup.p, sub.s, sup.s);
  if (num % sup.d != 0) throw std::logic_error("quotient relator exponent not integral");
  q.a = num / sup.d;
  q.k = std::gcd(q.a < 0 ? -q.a : q.a, q.y_exp);
  q.presentation = "<x,y | x^" + std::to_string(q.x_exp) + " = y^" + std::to_string(-q.a) +
                   ", y^" + std::to_string(q.y_exp) + " = 1, y^x = y^" +
                   std::to_string(q.y_twist) + ">";
  return q;
}

std::int64_t quotient_order_direct(const StandardParams& sub, const StandardParams& sup) {
  const GammaL1 G(sup.p, sup.m);
  const auto H = subgroup_elements(sub);
  std::vector<char> covered(static_cast<size_t>(G.order()), 0);
  std::int64_t cosets = 0;
  for (const auto& g : subgroup_elements(sup)) {
    if (covered[G.index(g)]) continue;
    ++cosets;
    for (const auto& h : H) covered[G.index(G.compose(g, h))] = 1;
  }
  return cosets;
}

bool quotient_relations_hold(const StandardParams& sub, const StandardParams& sup) {
  const QuotientData q = quotient_data(sub, sup);
  const GammaL1 G(sup.p, sup.m);
  std::vector<char> in_sub(static_cast<size_t>(G.order()), 0);
  for (const auto& g : subgroup_elements(sub)) in_sub[G.index(g)] = 1;
  const auto gens = standard_generators(sup);
  const SemilinearMap x = gens[0], y = gens[1];
  const SemilinearMap r1 = G.compose(G.power(x, q.x_exp), G.power(y, q.a));
  const SemilinearMap r2 = G.power(y, q.y_exp);
  const SemilinearMap r3 = G.compose(G.conjugate(y, x), G.power(y, -q.y_twist));
  return in_sub[G.index(r1)] && in_sub[G.index(r2)] && in_sub[G.index(r3)];
}

bool is_abelian(const StandardParams& P) {
  if (P.s == P.m) return true;
  return divides(unit_count(P.p, P.m), P.d * (ipow_i(P.p, P.s) - 1));
}

bool is_abelian_direct(const StandardParams& P) {
  const GammaL1 G(P.p, P.m);
  const auto gens = standard_generators(P);
  return G.compose(gens[0], gens[1]) == G.compose(gens[1], gens[0]);
}

AbelianNormalResult largest_abelian_normal(const StandardParams& P) {
  if (!is_transitive(P)) throw std::invalid_argument("largest_abelian_normal needs transitivity");
  std::vector<StandardParams> cands;
  for (const auto& K : all_standard_params(P.p, P.m))
    if (is_abelian(K) && contains(K, P) && is_normal_in(K, P)) cands.push_back(K);
  AbelianNormalResult r;
  for (const auto& K : cands) {
    bool maximal = true;
    for (const auto& L : cands)
      if (L != K && contains(K, L)) maximal = false;
    if (maximal) r.maximal.push_back(K);
  }
  return r;
}

std::vector<StandardParams> enumerate_transitive_subgroups(int m) {
  std::vector<StandardParams> out;
  const i64 Q = unit_count(2, m);
  for (u64 du : divisors(static_cast<u64>(Q))) {
    const i64 d = static_cast<i64>(du);
    if (d < 2) continue;
    for (int s = 2; s <= m; ++s) {
      if (m % (d * s) != 0) continue;
      const i64 ps1 = ipow_i(2, s) - 1;
      bool ok = (Q / ps1) % d == 0;
      for (u64 r : prime_factors(du)) ok = ok && ps1 % static_cast<i64>(r) == 0;
      if (d % 4 == 0) ok = ok && ps1 % 4 == 0;
      if (!ok) continue;
      for (i64 e = 1; e < d; ++e)
        if (std::gcd(d, e) == 1) out.push_back({2, m, d, e, s});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HomImages hom_images(int m, const StandardParams& A, const HomTarget& T) {
  (void)m;
  const GammaL1 G(2, T.n);
  return {G.normalize({A.s % T.n, T.u * T.e_pp}), G.normalize({0, T.u * T.d_prime})};
}

std::int64_t image_orbit_count(int m, const StandardParams& A, const HomTarget& T) {
  (void)m;
  const i64 dp = T.d_prime;
  // 2^n = 1 modulo d', so the Frobenius step reduces mod n
  const i64 a = ipow_i(2, A.s % T.n);
  const i64 b = T.u * T.e_pp;
  std::vector<char> seen(static_cast<size_t>(dp), 0);
  i64 cycles = 0;
  for (i64 x0 = 0; x0 < dp; ++x0) {
    if (seen[x0]) continue;
    ++cycles;
    for (i64 x = x0; !seen[x]; x = mod(a * x + b, dp)) seen[x] = 1;
  }
  return cycles;
}

bool validate_hom_target(int m, const StandardParams& A, const HomTarget& T, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (A.p != 2 || A.m != m || !is_valid(A)) return fail("A is not a valid subgroup of GammaL1(2^m)");
  if (T.n < 1 || m % T.n != 0) return fail("n does not divide m");
  const i64 N = unit_count(2, T.n);
  const i64 Q = unit_count(2, m);
  if (std::gcd(T.u, N) != 1 || T.u < 1 || T.u > std::max<i64>(N, 1))
    return fail("u is not a unit");
  if (T.d_prime < 1 || N % T.d_prime != 0) return fail("d' does not divide 2^n-1");
  if (mod(T.epsilon_exp * A.d - T.u * T.d_prime * (Q / N), Q) != 0)
    return fail("epsilon does not match Omega^d'");
  const GammaL1 G(2, T.n);
  const HomImages im = hom_images(m, A, T);
  const i64 t = Q / (A.d * (ipow_i(2, A.s) - 1));
  if (G.power(im.a, m / A.s) != G.power(im.b, A.e * t))
    return fail("relation x^(m/s) = y^(et) violated");
  if (G.power(im.b, Q / A.d) != G.identity()) return fail("relation y^((2^m-1)/d) = 1 violated");
  if (G.conjugate(im.b, im.a) != G.power(im.b, ipow_i(2, A.s)))
    return fail("relation y^x = y^(2^s) violated");
  if (image_orbit_count(m, A, T) != 1) return fail("image is not transitive");
  return true;
}

std::vector<HomTargetClass> enumerate_hom_targets(
    int m, const StandardParams& A, int n,
    bool (*epsilon_filter)(int m, std::int64_t d, std::int64_t epsilon)) {
  if (A.p != 2 || A.m != m || !is_valid(A)) throw std::invalid_argument("A must lie in GammaL1(2^m)");
  if (!is_transitive(A)) throw std::invalid_argument("A must be transitive");
  if (n < 2 || m % n != 0) throw std::invalid_argument("need n >= 2 dividing m");
  const i64 N = unit_count(2, n);
  const i64 Q = unit_count(2, m);
  const i64 ps1 = ipow_i(2, A.s) - 1;
  const i64 X = Q / ps1;
  const int l = std::lcm(n, A.s);
  std::map<HomImages, std::vector<HomTarget>> classes;
  for (u64 dpu : divisors(gcd_u(static_cast<u64>(n), static_cast<u64>(N)))) {
    const i64 dp = static_cast<i64>(dpu);
    if ((Q / A.d) % (N / dp) != 0) continue;
    if (!divides(dp, (ipow_i(2, l) - 1) / ps1)) continue;
    bool primes_ok = true;
    for (u64 r : prime_factors(dpu)) primes_ok = primes_ok && ps1 % static_cast<i64>(r) == 0;
    if (!primes_ok) continue;
    const i64 rhs = mod((A.e * X / A.d) * dp, N);
    for (i64 epp = 0; epp < N; ++epp) {
      if (std::gcd(epp, dp) != 1) continue;
      if (mod(epp * X, N) != rhs) continue;
      for (i64 u = 1; u <= std::max<i64>(N - 1, 1); ++u) {
        if (std::gcd(u, N) != 1) continue;
        HomTarget T{n, u, dp, epp, 0};
        T.epsilon_exp = mod(u * dp * (Q / N) / A.d, Q / A.d);
        if (epsilon_filter && !epsilon_filter(m, A.d, T.epsilon_exp)) continue;
        if (!validate_hom_target(m, A, T)) continue;
        classes[hom_images(m, A, T)].push_back(T);
      }
    }
  }
  std::vector<HomTargetClass> out;
  for (auto& [im, pre] : classes) {
    std::sort(pre.begin(), pre.end());
    out.push_back({im, pre});
  }
  std::sort(out.begin(), out.end(), [](const HomTargetClass& a, const HomTargetClass& b) {
    return a.preimages.front() < b.preimages.front();
  });
  return out;
}

}  // namespace pgroups
