#include "pgroups/lemmas.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "pgroups/field.hpp"
#include "pgroups/gammal1.hpp"
#include "pgroups/numtheory.hpp"
#include "pgroups/squaring.hpp"

namespace pgroups {

namespace {

using i64 = std::int64_t;

struct PrimePower {
  int p;
  int m;
};

std::vector<PrimePower> prime_powers(std::uint64_t max_q) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= max_q; ++p) {
    if (prime_factors(p).front() != p) continue;
    std::uint64_t q = p;
    for (int m = 1; q <= max_q; ++m, q *= p) out.push_back({static_cast<int>(p), m});
  }
  return out;
}

std::string where(int p, int m) { return "p=" + std::to_string(p) + " m=" + std::to_string(m); }

}  // namespace

Report knuth_check(std::int64_t max_M) {
  Report r{"Knuth full-cycle criterion equals cycle simulation", "1 <= M <= " + std::to_string(max_M) +
                                                                  ", all a, b mod M", {}, {}};
  std::int64_t cycles = 0;
  for (i64 M = 1; M <= max_M; ++M)
    for (i64 a = 0; a < M; ++a)
      for (i64 b = 0; b < M; ++b) {
        const bool crit = knuth_criterion(a, b, M);
        const bool sim = full_cycle_by_simulation(a, b, M);
        if (crit) ++cycles;
        if (crit != sim)
          r.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + " M=" + std::to_string(M));
      }
  r.notes.push_back(std::to_string(cycles) + " full cycles");
  return r;
}

Report standard_form_check(std::uint64_t max_q) {
  Report r{"standard form round trip; transitivity, containment, normality and quotient criteria "
           "equal element-wise checks",
           "p^m <= " + std::to_string(max_q), {}, {}};
  std::size_t triples = 0, pairs = 0, normal_pairs = 0;
  for (const auto [p, m] : prime_powers(max_q)) {
    const GammaL1 G(p, m);
    const Field F(p, m);
    const auto L = all_standard_params(p, m);
    std::vector<std::vector<char>> member(L.size());
    std::vector<i64> size(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
      const StandardParams& P = L[i];
      ++triples;
      if (!is_valid(P)) r.fail(where(p, m) + " invalid triple " + to_string(P));
      const auto elems = subgroup_elements(P);
      size[i] = static_cast<i64>(elems.size());
      member[i].assign(static_cast<std::size_t>(G.order()), 0);
      for (const auto& g : elems) member[i][G.index(g)] = 1;
      if (size[i] != subgroup_order(P))
        r.fail(where(p, m) + " order of " + to_string(P) + " is " + std::to_string(size[i]));
      if (standard_form(p, m, standard_generators(P)) != P)
        r.fail(where(p, m) + " round trip fails for " + to_string(P));
      try {
        if (is_transitive(P) != (orbit_count_direct(F, P) == 1))
          r.fail(where(p, m) + " transitivity of " + to_string(P));
      } catch (const std::logic_error& e) {
        r.fail(where(p, m) + " " + to_string(P) + ": " + e.what());
      }
    }
    for (std::size_t i = 0; i < L.size(); ++i) {
      for (std::size_t j = 0; j < L.size(); ++j) {
        const StandardParams &sub = L[i], &sup = L[j];
        ++pairs;
        bool direct = size[i] <= size[j];
        for (std::size_t k = 0; direct && k < member[i].size(); ++k)
          if (member[i][k] && !member[j][k]) direct = false;
        if (contains(sub, sup) != direct) {
          r.fail(where(p, m) + " containment " + to_string(sub) + " in " + to_string(sup));
          continue;
        }
        if (!direct) continue;
        bool normal_direct = true;
        for (const auto& g : standard_generators(sup))
          for (const auto& h : standard_generators(sub))
            if (!member[i][G.index(G.conjugate(h, g))]) normal_direct = false;
        if (is_normal_in(sub, sup) != normal_direct) {
          r.fail(where(p, m) + " normality " + to_string(sub) + " in " + to_string(sup));
          continue;
        }
        if (!normal_direct) continue;
        ++normal_pairs;
        const QuotientData q = quotient_data(sub, sup);
        if (q.order != size[j] / size[i] || q.order != quotient_order_direct(sub, sup))
          r.fail(where(p, m) + " quotient order " + to_string(sup) + "/" + to_string(sub));
        if (!quotient_relations_hold(sub, sup))
          r.fail(where(p, m) + " quotient relations " + to_string(sup) + "/" + to_string(sub));
      }
    }
  }
  r.notes.push_back(std::to_string(triples) + " triples, " + std::to_string(pairs) + " pairs, " +
                    std::to_string(normal_pairs) + " normal pairs");
  return r;
}

Report cyclic_transitive_check(std::uint64_t max_q) {
  Report r{"the only cyclic transitive subgroup is the scalar group; standard form of every cyclic "
           "subgroup regenerates its element set",
           "p^m <= " + std::to_string(max_q) + ", every single generator", {}, {}};
  std::size_t generators = 0, transitive = 0;
  for (const auto [p, m] : prime_powers(max_q)) {
    const GammaL1 G(p, m);
    std::vector<char> done(static_cast<std::size_t>(G.order()), 0);
    for (i64 idx = 0; idx < G.order(); ++idx) {
      if (done[idx]) continue;
      const SemilinearMap g = G.from_index(idx);
      const auto H = G.generate({g});
      // elements generating the same cyclic group give the same check
      const i64 n = static_cast<i64>(H.size());
      for (const auto& h : H) {
        bool gen = true;
        for (u64 q : prime_factors(static_cast<u64>(n)))
          if (G.power(h, n / static_cast<i64>(q)) == G.identity()) gen = false;
        if (n == 1 || gen) done[G.index(h)] = 1;
      }
      ++generators;
      const StandardParams P = standard_form(p, m, {g});
      if (subgroup_elements(P) != H) r.fail(where(p, m) + " round trip for generator index " + std::to_string(idx));
      if (orbit_count(P) == 1) {
        ++transitive;
        if (P != StandardParams{p, m, 1, 0, m})
          r.fail(where(p, m) + " cyclic transitive " + to_string(P));
      }
    }
  }
  r.notes.push_back(std::to_string(generators) + " cyclic subgroups, " + std::to_string(transitive) +
                    " transitive");
  return r;
}

Report abelian_normal_check(int max_m) {
  Report r{"unique maximal abelian normal subgroup of a transitive P is (d,0,m) for p = 2; "
           "(p,m) = (3,2) has a counterexample",
           "p = 2, m <= " + std::to_string(max_m) + "; p = 3, m = 2", {}, {}};
  std::size_t checked = 0;
  for (int m = 1; m <= max_m; ++m) {
    for (const StandardParams& P : all_standard_params(2, m)) {
      if (is_abelian(P) != is_abelian_direct(P)) r.fail(where(2, m) + " abelian test " + to_string(P));
      if (!is_transitive(P)) continue;
      ++checked;
      const auto res = largest_abelian_normal(P);
      if (!res.unique() || res.maximal.front() != StandardParams{2, m, P.d, 0, m})
        r.fail(where(2, m) + " " + to_string(P));
    }
  }
  bool found = false;
  for (const StandardParams& P : all_standard_params(3, 2)) {
    if (!is_transitive(P)) continue;
    const auto res = largest_abelian_normal(P);
    const bool scalar_only = res.unique() && res.maximal.front() == StandardParams{3, 2, P.d, 0, 2};
    if (!scalar_only) {
      found = true;
      std::string list;
      for (const auto& K : res.maximal) list += " " + to_string(K);
      r.notes.push_back("p=3 m=2 counterexample " + to_string(P) + ", maximal:" + list);
    }
  }
  if (!found) r.fail("no counterexample at (p,m) = (3,2)");
  r.notes.push_back(std::to_string(checked) + " transitive subgroups at p = 2");
  return r;
}

Report criterion_random_check(int max_m, int samples_per_m, std::uint64_t seed) {
  Report r{"polynomial biadditivity criterion equals the direct triple test",
           "m <= " + std::to_string(max_m) + ", " + std::to_string(samples_per_m) +
               " random squarings per m, seed " + std::to_string(seed),
           {}, {}};
  std::mt19937_64 rng(seed);
  std::size_t biadd = 0, total = 0;
  for (int m = 1; m <= max_m; ++m) {
    const Field F(2, m);
    const i64 Q = F.unit_order();
    std::vector<int> divs;
    for (int n = 1; n <= m; ++n)
      if (m % n == 0) divs.push_back(n);
    auto pick = [&](i64 hi) { return static_cast<i64>(rng() % static_cast<std::uint64_t>(hi)); };
    auto small_exponent = [&]() {
      const int a = static_cast<int>(pick(m)), b = static_cast<int>(pick(m));
      return (i64{1} << a) + (a == b ? 0 : (i64{1} << b));
    };
    for (int t = 0; t < samples_per_m; ++t) {
      const int mode = t % 4;
      const int n = mode == 3 ? divs[pick(static_cast<i64>(divs.size()))] : (mode == 0 ? divs[pick(static_cast<i64>(divs.size()))] : m);
      const SubfieldView view(F, n);
      std::vector<Elem> values(F.size(), 0);
      if (mode == 0) {
        for (Elem x = 1; x < F.size(); ++x) values[x] = view.embed(static_cast<Vec>(pick(i64{1} << n)));
      } else {
        std::vector<std::pair<Elem, i64>> terms;
        const int count = 1 + static_cast<int>(pick(3));
        for (int i = 0; i < count; ++i) terms.push_back({static_cast<Elem>(1 + pick(Q)), small_exponent()});
        if (mode == 2) terms.push_back({static_cast<Elem>(1 + pick(Q)), 1 + pick(Q)});
        if (mode == 3 && pick(2) == 0) terms.back().second = 1 + pick(Q);
        for (Elem x = 1; x < F.size(); ++x) {
          Elem acc = 0;
          for (auto [c, e] : terms) {
            const Elem v = F.mul(c, F.pow(x, e));
            // trace down to F_{2^n} so the values land in the subfield
            for (int j = 0; j < m / n; ++j) acc = F.add(acc, F.frobenius(v, static_cast<i64>(j) * n));
          }
          values[x] = acc;
        }
      }
      const Squaring sq = to_squaring(view, values);
      const bool direct = is_biadditive(sq);
      const CriterionResult poly = biadditivity_criterion(F.interpolate(as_field_function(view, sq)));
      ++total;
      if (direct) ++biadd;
      if (direct != poly.biadditive) {
        r.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + " sample " + std::to_string(t) +
               ": direct " + std::to_string(direct));
        continue;
      }
      if (direct && poly.nontrivial != form_nontrivial(sq))
        r.fail("m=" + std::to_string(m) + " sample " + std::to_string(t) + ": nontriviality");
    }
  }
  r.notes.push_back(std::to_string(total) + " samples, " + std::to_string(biadd) + " biadditive");
  return r;
}

Report hom_target_scalar_check(int max_m) {
  Report r{"phi maps the scalar part of A onto the scalar part of phi[A]",
           "transitive A, n | m, n >= 2, m <= " + std::to_string(max_m), {}, {}};
  std::size_t targets = 0;
  for (int m = 2; m <= max_m; ++m)
    for (const StandardParams& A : enumerate_transitive_subgroups(m))
      for (int n = 2; n <= m; ++n) {
        if (m % n != 0) continue;
        const GammaL1 B(2, n);
        for (const auto& tc : enumerate_hom_targets(m, A, n)) {
          ++targets;
          const auto image = B.generate({tc.images.a, tc.images.b});
          std::vector<SemilinearMap> scalars;
          for (const auto& g : image)
            if (g.s == 0) scalars.push_back(g);
          if (B.generate({tc.images.b}) != scalars)
            r.fail(where(2, m) + " n=" + std::to_string(n) + " A=" + to_string(A));
        }
      }
  r.notes.push_back(std::to_string(targets) + " targets");
  return r;
}

std::vector<Report> lemma_suite(SuiteLevel level) {
  const bool full = level == SuiteLevel::Exhaustive;
  std::vector<Report> out;
  out.push_back(knuth_check(full ? 128 : 48));
  out.push_back(standard_form_check(full ? 512 : 128));
  out.push_back(cyclic_transitive_check(full ? 1024 : 256));
  out.push_back(abelian_normal_check(full ? 10 : 7));
  out.push_back(criterion_random_check(5, full ? 250 : 60));
  out.push_back(hom_target_scalar_check(6));
  out.push_back(block_lemma_checks(full ? u64{1} << 20 : u64{1} << 14, full ? 24 : 16));
  out.push_back(gcd_bound_check(full ? 16 : 12));
  out.push_back(singer_parameter_equivalence(full ? 20 : 12));
  out.push_back(no_ppd_check(full ? 30 : 16));
  return out;
}

}  // namespace pgroups
