#include "pgroups/squaring.hpp"

#include <algorithm>
#include <numeric>
#include <array>
#include <bit>
#include <functional>
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

i64 units(int m) { return (i64{1} << m) - 1; }

// sum_{j < count} 2^(j s) mod Q
i64 geometric_mod(int s, i64 count, i64 Q) {
  i64 acc = 0, term = mod(1, Q);
  const i64 step = mod(static_cast<i64>(ipow(2, s % 62)), Q);
  for (i64 j = 0; j < count; ++j) {
    acc = mod(acc + term, Q);
    term = mod(term * step, Q);
  }
  return acc;
}

std::vector<int> minimal_polynomial(const Field& big, Elem root, int n) {
  // prod_{i < n} (X + root^(2^i)), coefficients in F_2
  std::vector<Elem> poly{1};
  for (int i = 0; i < n; ++i) {
    const Elem r = big.frobenius(root, i);
    std::vector<Elem> next(poly.size() + 1, 0);
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] = big.add(next[j + 1], poly[j]);
      next[j] = big.add(next[j], big.mul(poly[j], r));
    }
    poly = std::move(next);
  }
  std::vector<int> out;
  for (Elem c : poly) {
    if (c > 1) throw std::logic_error("minimal polynomial not over F_2");
    out.push_back(static_cast<int>(c));
  }
  return out;
}

Field make_subfield(const Field& big, int n) {
  if (big.p() != 2) throw std::invalid_argument("subfield view needs p = 2");
  if (n < 1 || big.m() % n != 0) throw std::invalid_argument("subfield degree must divide m");
  const Elem omega0 = big.exp(units(big.m()) / units(n));
  return Field(2, n, minimal_polynomial(big, omega0, n));
}

int rank_of(std::vector<Vec> vs) {
  std::array<Vec, 32> basis{};
  int r = 0;
  for (Vec v : vs) {
    for (int b = 31; b >= 0 && v; --b) {
      if (!((v >> b) & 1)) continue;
      if (basis[b]) {
        v ^= basis[b];
      } else {
        basis[b] = v;
        ++r;
        v = 0;
      }
    }
  }
  return r;
}

// Partial linear map, pinned down by (key, value) pairs; rejects pairs that
// make it inconsistent or non-injective.
struct PartialMap {
  std::array<Vec, 32> key{};
  std::array<Vec, 32> val{};
  std::array<Vec, 32> vbasis{};
  int rank = 0;

  bool add(Vec k, Vec v) {
    for (int b = 31; b >= 0 && k; --b) {
      if (((k >> b) & 1) && key[b]) {
        k ^= key[b];
        v ^= val[b];
      }
    }
    if (k == 0) return v == 0;
    Vec r = v;
    for (int b = 31; b >= 0 && r; --b)
      if (((r >> b) & 1) && vbasis[b]) r ^= vbasis[b];
    if (r == 0) return false;
    vbasis[31 - std::countl_zero(r)] = r;
    key[31 - std::countl_zero(k)] = k;
    val[31 - std::countl_zero(k)] = v;
    ++rank;
    return true;
  }

  // Extends to an invertible map on F_2^dim and returns its columns.
  LinearMap complete(int dim) {
    for (int i = 0; i < dim && rank < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        PartialMap trial = *this;
        if (trial.add(Vec{1} << i, Vec{1} << j)) {
          *this = trial;
          break;
        }
      }
    }
    LinearMap U;
    for (int i = 0; i < dim; ++i) {
      Vec k = Vec{1} << i, v = 0;
      for (int b = 31; b >= 0 && k; --b) {
        if (((k >> b) & 1) && key[b]) {
          k ^= key[b];
          v ^= val[b];
        }
      }
      if (k != 0) throw std::logic_error("partial map did not span");
      U.cols.push_back(v);
    }
    return U;
  }
};

enum class PairMode { Equivalence, Automorphism };

// Backtracking over the columns of T in increasing order. On each leaf the
// callback receives (T, U) and returns true to stop.
struct LinearLift {
  const Squaring& a;
  const Squaring& b;
  PairMode mode;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted_budget = false;
  std::function<bool(const LinearMap&, LinearMap&&)> on_leaf;

  std::vector<Vec> timg;
  std::vector<char> used;

  bool run() {
    timg.assign(std::size_t{1} << a.m, 0);
    used.assign(std::size_t{1} << a.m, 0);
    used[0] = 1;
    return level(0, PartialMap{});
  }

  bool pair(Vec x, Vec tx, PartialMap& pm) const {
    if (mode == PairMode::Equivalence) return pm.add(a.table[tx], b.table[x]);
    return pm.add(a.table[x], a.table[tx]);
  }

  bool level(int k, const PartialMap& pm) {
    if (k == a.m) {
      PartialMap full = pm;
      LinearMap T;
      for (int i = 0; i < a.m; ++i) T.cols.push_back(timg[std::size_t{1} << i]);
      return on_leaf(T, full.complete(b.n));
    }
    const std::size_t lo = std::size_t{1} << k;
    for (Vec c = 1; c < used.size(); ++c) {
      if (used[c]) continue;
      if (++nodes > budget) {
        exhausted_budget = true;
        return true;
      }
      PartialMap next = pm;
      bool ok = true;
      for (std::size_t x = lo; x < 2 * lo && ok; ++x) {
        timg[x] = c ^ timg[x - lo];
        ok = pair(static_cast<Vec>(x), timg[x], next);
      }
      if (!ok) continue;
      for (std::size_t x = lo; x < 2 * lo; ++x) used[timg[x]] = 1;
      const bool stop = level(k + 1, next);
      for (std::size_t x = lo; x < 2 * lo; ++x) used[timg[x]] = 0;
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

SubfieldView::SubfieldView(const Field& big, int n)
    : big_(big), sub_(make_subfield(big, n)), omega0_(big.exp(units(big.m()) / units(n))) {
  const Elem qn = sub_.size();
  embed_.assign(qn, 0);
  unembed_.assign(big_.size(), -1);
  std::vector<Elem> powers(n);
  for (int i = 0; i < n; ++i) powers[i] = big_.pow(omega0_, i);
  for (Vec v = 0; v < qn; ++v) {
    Elem x = 0;
    for (int i = 0; i < n; ++i)
      if ((v >> i) & 1) x = big_.add(x, powers[i]);
    if (unembed_[x] != -1) throw std::logic_error("subfield embedding not injective");
    embed_[v] = x;
    unembed_[x] = v;
  }
}

Vec SubfieldView::unembed(Elem x) const {
  const i64 v = unembed_.at(x);
  if (v < 0) throw std::domain_error("element outside the subfield");
  return static_cast<Vec>(v);
}

Squaring zero_squaring(int m, int n) {
  return {m, n, std::vector<Vec>(std::size_t{1} << m, 0)};
}

Squaring to_squaring(const SubfieldView& view, const std::vector<Elem>& values) {
  if (values.size() != view.big().size()) throw std::invalid_argument("value table size");
  Squaring sq{view.big().m(), view.n(), std::vector<Vec>(values.size())};
  for (std::size_t x = 0; x < values.size(); ++x) sq.table[x] = view.unembed(values[x]);
  return sq;
}

std::vector<Elem> as_field_function(const SubfieldView& view, const Squaring& sq) {
  if (sq.m != view.big().m() || sq.n != view.n()) throw std::invalid_argument("dimension mismatch");
  std::vector<Elem> out(sq.table.size());
  for (std::size_t x = 0; x < sq.table.size(); ++x) out[x] = view.embed(sq.table[x]);
  return out;
}

Vec induced_form(const Squaring& sq, Vec x, Vec y) {
  return sq.table[x ^ y] ^ sq.table[x] ^ sq.table[y];
}

bool is_biadditive(const Squaring& sq) {
  // x -> [x, z] is additive iff it agrees with its linear extension from the
  // unit vectors
  const std::size_t q = sq.table.size();
  std::vector<Vec> lin(q, 0);
  for (std::size_t z = 0; z < q; ++z) {
    for (std::size_t x = 1; x < q; ++x) {
      const std::size_t low = x & (~x + 1);
      lin[x] = lin[x ^ low] ^ induced_form(sq, static_cast<Vec>(low), static_cast<Vec>(z));
      if (lin[x] != induced_form(sq, static_cast<Vec>(x), static_cast<Vec>(z))) return false;
    }
  }
  return true;
}

bool form_nontrivial(const Squaring& sq) {
  const std::size_t q = sq.table.size();
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = x + 1; y < q; ++y)
      if (induced_form(sq, static_cast<Vec>(x), static_cast<Vec>(y)) != 0) return true;
  return false;
}

bool is_surjective(const Squaring& sq) {
  std::vector<char> hit(std::size_t{1} << sq.n, 0);
  for (Vec v : sq.table) hit.at(v) = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool form_surjective(const Squaring& sq) {
  std::array<Vec, 32> basis{};
  int rank = 0;
  const std::size_t q = sq.table.size();
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = x + 1; y < q; ++y) {
      Vec v = induced_form(sq, static_cast<Vec>(x), static_cast<Vec>(y));
      for (int b = 31; b >= 0 && v; --b)
        if (((v >> b) & 1) && basis[b]) v ^= basis[b];
      if (v == 0) continue;
      basis[31 - std::countl_zero(v)] = v;
      if (++rank == sq.n) return true;
    }
  }
  return rank == sq.n;
}

CriterionResult biadditivity_criterion(const std::vector<Elem>& coeffs) {
  if (coeffs.empty() || !std::has_single_bit(coeffs.size()))
    throw std::invalid_argument("coefficient vector length must be 2^m");
  CriterionResult r;
  r.biadditive = coeffs[0] == 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    r.exponents.push_back(i);
    const int digits = std::popcount(i);
    if (digits > 2) r.biadditive = false;
    if (digits == 2) r.nontrivial = true;
  }
  r.nontrivial = r.nontrivial && r.biadditive;
  return r;
}

bool is_equivariant(const SubfieldView& view, const Squaring& sq, const StandardParams& A,
                    const HomTarget& T, std::string* why) {
  const Field& big = view.big();
  const Field& sub = view.sub();
  if (sq.m != big.m() || sq.n != view.n() || T.n != view.n()) {
    if (why) *why = "dimension mismatch";
    return false;
  }
  const HomImages im = hom_images(big.m(), A, T);
  const auto gens = standard_generators(A);
  const SemilinearMap images[2] = {im.a, im.b};
  for (int g = 0; g < 2; ++g) {
    for (Elem x = 0; x < big.size(); ++x) {
      const Vec lhs = sq.table[apply(big, gens[g], x)];
      const Vec rhs = apply(sub, images[g], sq.table[x]);
      if (lhs != rhs) {
        if (why)
          *why = std::string("equivariance fails for generator ") + (g == 0 ? "a" : "b") +
                 " at x = " + std::to_string(x);
        return false;
      }
    }
  }
  return true;
}

PredatumReport validate_predatum(const Predatum& P) {
  PredatumReport r;
  const Squaring& sq = P.squaring;
  const int m = sq.m, n = sq.n;
  if (m < 1 || n < 1 || m % n != 0 || sq.table.size() != (std::size_t{1} << m) ||
      P.a_params.m != m || P.target.n != n) {
    r.failures.push_back("dimensions inconsistent");
    return r;
  }
  std::string why;
  r.target_valid = validate_hom_target(m, P.a_params, P.target, &why);
  if (!r.target_valid) r.failures.push_back("target: " + why);
  r.a_transitive = is_valid(P.a_params) && is_transitive(P.a_params);
  if (!r.a_transitive) r.failures.push_back("A is not transitive");
  r.image_transitive = image_orbit_count(m, P.a_params, P.target) == 1;
  if (!r.image_transitive) r.failures.push_back("phi[A] is not transitive");
  const Field F(2, m);
  const SubfieldView view(F, n);
  why.clear();
  r.equivariant = is_equivariant(view, sq, P.a_params, P.target, &why);
  if (!r.equivariant) r.failures.push_back(why);
  r.biadditive = sq.table[0] == 0 && is_biadditive(sq);
  if (!r.biadditive) r.failures.push_back("induced form is not biadditive");
  r.nontrivial = form_nontrivial(sq);
  if (!r.nontrivial) r.failures.push_back("induced form is trivial");
  r.surjective = is_surjective(sq) && form_surjective(sq);
  if (!r.surjective) r.failures.push_back("squaring or its form is not surjective");
  return r;
}

Predatum singer_squaring(int m, SingerVariant variant, int l, int k, std::int64_t scalar_exp) {
  if (m < 1 || l < 0) throw std::invalid_argument("bad Singer parameters");
  int n;
  u64 e;
  if (variant == SingerVariant::A) {
    if (k < 1 || k >= m || nu_p(k, 2) < nu_p(m, 2))
      throw std::invalid_argument("variant A needs 1 <= k < m with nu_2(k) >= nu_2(m)");
    n = m;
    if (l + k >= 63) throw std::invalid_argument("exponent too large");
    e = (u64{1} << l) * ((u64{1} << k) + 1);
  } else {
    if (m % 2 != 0) throw std::invalid_argument("variant B needs even m");
    n = m / 2;
    if (l + n >= 63) throw std::invalid_argument("exponent too large");
    e = (u64{1} << l) * ((u64{1} << n) + 1);
  }
  const i64 Q = units(m), N = units(n);
  if (e > static_cast<u64>(Q)) throw std::invalid_argument("exponent exceeds 2^m - 1");
  const Field F(2, m);
  const SubfieldView view(F, n);
  const Elem s = F.pow(view.omega0(), scalar_exp);
  std::vector<Elem> values(F.size(), 0);
  for (Elem x = 1; x < F.size(); ++x) values[x] = F.mul(s, F.pow(x, static_cast<i64>(e)));
  Predatum P;
  P.squaring = to_squaring(view, values);
  P.a_params = {2, m, 1, 0, m};
  i64 u = N == 1 ? 1 : mod(static_cast<i64>(e) / (Q / N), N);
  if (N > 1 && std::gcd(u, N) != 1) throw std::invalid_argument("x^e is not onto F_{2^n}");
  P.target = {n, u, 1, 0, mod(static_cast<i64>(e), Q)};
  return P;
}

Elem hom_zeta(const Field& f, const StandardParams& A, const HomTarget& T) {
  const i64 Q = units(f.m()), N = units(T.n);
  return f.exp(mod(T.u * (Q / N) % Q * T.e_pp - A.e * T.epsilon_exp, Q));
}

std::vector<Elem> sigma1_solutions(const Field& f, const StandardParams& A, const HomTarget& T) {
  const i64 Q = units(f.m());
  const Elem zeta = hom_zeta(f, A, T);
  const Elem factor = f.pow(zeta, -geometric_mod(A.s, A.d, Q));
  std::vector<Elem> out;
  for (Elem y = 1; y < f.size(); ++y)
    if (f.frobenius(y, A.d * A.s) == f.mul(factor, y)) out.push_back(y);
  return out;
}

std::vector<Elem> coset_monomial_function(const Field& f, const StandardParams& A,
                                          const HomTarget& T, Elem sigma1) {
  if (sigma1 == 0) throw std::invalid_argument("sigma(1) must be nonzero");
  const i64 Q = units(f.m());
  const Elem zeta = hom_zeta(f, A, T);
  const Elem factor = f.pow(zeta, -geometric_mod(A.s, A.d, Q));
  if (f.frobenius(sigma1, A.d * A.s) != f.mul(factor, sigma1))
    throw std::invalid_argument("sigma(1) violates the fixed-point constraint");
  // coset representatives omega^(e (2^(xs)-1)/(2^s-1)) of <omega^d>
  std::vector<i64> coset_of(static_cast<std::size_t>(A.d), -1);
  std::vector<Elem> coeff(static_cast<std::size_t>(A.d));
  i64 G = 0;
  for (i64 x = 0; x < A.d; ++x) {
    const i64 r = mod(A.e * G, A.d);
    if (coset_of[r] != -1) throw std::logic_error("coset representatives collide");
    coset_of[r] = x;
    coeff[x] = f.mul(f.pow(zeta, G), f.frobenius(sigma1, x * A.s));
    G = mod(G * static_cast<i64>(ipow(2, A.s)) + 1, Q);
  }
  std::vector<Elem> values(f.size(), 0);
  for (Elem chi = 1; chi < f.size(); ++chi) {
    const i64 x = coset_of[mod(f.log(chi), A.d)];
    values[chi] = f.mul(coeff[x], f.pow(chi, T.epsilon_exp));
  }
  // equivariance in F_{2^m}, with the Frobenius part of phi(a) acting ambiently
  const Elem omega0 = f.exp(Q / units(T.n));
  const auto gens = standard_generators(A);
  const HomImages im = hom_images(f.m(), A, T);
  const SemilinearMap images[2] = {{A.s % f.m(), im.a.e}, im.b};
  for (int g = 0; g < 2; ++g)
    for (Elem chi = 0; chi < f.size(); ++chi)
      if (values[apply(f, gens[g], chi)] != apply(f, omega0, images[g], values[chi]))
        throw std::logic_error("coset-monomial function is not equivariant");
  return values;
}

Squaring coset_monomial_squaring(const Field& f, const StandardParams& A, const HomTarget& T,
                                 Elem sigma1) {
  const auto values = coset_monomial_function(f, A, T, sigma1);
  const SubfieldView view(f, T.n);
  for (Elem v : values)
    if (!view.contains(v)) throw std::invalid_argument("values leave F_{2^n}");
  return to_squaring(view, values);
}

std::vector<Elem> sigma_c_values(const Field& f6, Elem c) {
  if (f6.p() != 2 || f6.m() != 6) throw std::invalid_argument("sigma_c lives on F_64");
  const Elem c8 = f6.pow(c, 8);
  std::vector<Elem> values(f6.size(), 0);
  for (Elem x = 1; x < f6.size(); ++x)
    values[x] = f6.add(f6.mul(c, f6.pow(x, 3)), f6.mul(c8, f6.pow(x, 24)));
  return values;
}

Squaring sigma_omega() {
  const Field F(2, 6);
  const SubfieldView view(F, 3);
  const auto values = sigma_c_values(F, F.omega());
  if (values[1] == 0) throw std::logic_error("sigma_omega(1) vanished");
  return to_squaring(view, values);
}

Squaring monomial_squaring(int m, int n, std::uint64_t e) {
  const Field F(2, m);
  const SubfieldView view(F, n);
  std::vector<Elem> values(F.size(), 0);
  for (Elem x = 1; x < F.size(); ++x) values[x] = F.pow(x, static_cast<i64>(e));
  return to_squaring(view, values);
}

bool is_gammal1_witness(const Squaring& s1, const Squaring& s2, const GammaWitness& w) {
  if (s1.m != s2.m || s1.n != s2.n) return false;
  const Field F(2, s1.m);
  const SubfieldView view(F, s1.n);
  for (Elem x = 0; x < F.size(); ++x)
    if (s2.table[x] != apply(view.sub(), w.gamma2, s1.table[apply(F, w.gamma1, x)])) return false;
  return true;
}

std::optional<GammaWitness> gammal1_equivalent(const Squaring& s1, const Squaring& s2) {
  if (s1.m != s2.m || s1.n != s2.n) throw std::invalid_argument("dimension mismatch");
  const int m = s1.m, n = s1.n;
  const Field F(2, m);
  const SubfieldView view(F, n);
  const Field& sub = view.sub();
  const i64 Q = units(m), N = units(n);
  std::vector<Vec> tau(F.size());
  for (int sa = 0; sa < m; ++sa) {
    for (i64 ea = 0; ea < Q; ++ea) {
      const SemilinearMap g1{sa, ea};
      for (Elem x = 0; x < F.size(); ++x) tau[x] = s1.table[apply(F, g1, x)];
      Elem x0 = 0;
      while (x0 < F.size() && tau[x0] == 0) ++x0;
      if (x0 == F.size()) {
        if (std::all_of(s2.table.begin(), s2.table.end(), [](Vec v) { return v == 0; }))
          return GammaWitness{g1, {0, 0}};
        continue;
      }
      if (s2.table[x0] == 0) continue;
      for (int sb = 0; sb < n; ++sb) {
        const i64 eb = mod(sub.log(s2.table[x0]) - sub.log(sub.frobenius(tau[x0], sb)), N);
        const SemilinearMap g2{sb, eb};
        bool ok = true;
        for (Elem x = 0; x < F.size() && ok; ++x) ok = s2.table[x] == apply(sub, g2, tau[x]);
        if (ok) return GammaWitness{g1, g2};
      }
    }
  }
  return std::nullopt;
}

Vec LinearMap::apply(Vec x) const {
  Vec r = 0;
  for (std::size_t i = 0; i < cols.size() && x; ++i, x >>= 1)
    if (x & 1) r ^= cols[i];
  return r;
}

LinearMap identity_map(int dim) {
  LinearMap M;
  for (int i = 0; i < dim; ++i) M.cols.push_back(Vec{1} << i);
  return M;
}

bool is_invertible(const LinearMap& M, int dim) {
  return static_cast<int>(M.cols.size()) == dim && rank_of(M.cols) == dim;
}

GlResult gl_equivalent(const Squaring& s1, const Squaring& s2, std::uint64_t budget) {
  if (s1.m != s2.m || s1.n != s2.n) throw std::invalid_argument("dimension mismatch");
  GlResult res;
  LinearLift lift{s1, s2, PairMode::Equivalence, budget, 0, false, nullptr, {}, {}};
  lift.on_leaf = [&](const LinearMap& T, LinearMap&& U) {
    for (std::size_t x = 0; x < s1.table.size(); ++x)
      if (s2.table[x] != U.apply(s1.table[T.apply(static_cast<Vec>(x))])) return false;
    res.witness = GlWitness{T, std::move(U)};
    return true;
  };
  lift.run();
  res.nodes = lift.nodes;
  if (res.witness) res.status = GlStatus::Found;
  else if (lift.exhausted_budget) res.status = GlStatus::BudgetExceeded;
  else res.status = GlStatus::NotEquivalent;
  return res;
}

PairSearchResult automorphism_pairs(const Squaring& sq, std::uint64_t budget) {
  if (!form_surjective(sq)) throw std::invalid_argument("induced form is not surjective");
  PairSearchResult res;
  LinearLift lift{sq, sq, PairMode::Automorphism, budget, 0, false, nullptr, {}, {}};
  lift.on_leaf = [&](const LinearMap& T, LinearMap&& U) {
    for (std::size_t x = 0; x < sq.table.size(); ++x)
      if (sq.table[T.apply(static_cast<Vec>(x))] != U.apply(sq.table[x]))
        throw std::logic_error("pair search produced an invalid pair");
    res.pairs.push_back({T, std::move(U)});
    return false;
  };
  lift.run();
  res.nodes = lift.nodes;
  if (lift.exhausted_budget) throw std::runtime_error("automorphism pair search exceeded budget");
  return res;
}

}  // namespace pgroups
