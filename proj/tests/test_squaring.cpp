#include <bit>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "pgroups/squaring.hpp"

using namespace pgroups;

namespace {

bool biadditive_bruteforce(const Squaring& sq) {
  const Vec top = static_cast<Vec>(sq.table.size());
  for (Vec x = 0; x < top; ++x)
    for (Vec y = 0; y < top; ++y)
      for (Vec z = 0; z < top; ++z)
        if (induced_form(sq, x ^ y, z) != (induced_form(sq, x, z) ^ induced_form(sq, y, z))) return false;
  return true;
}

// Rank over F_2 of the form values.
int form_rank(const Squaring& sq) {
  std::vector<Vec> basis;
  const Vec top = static_cast<Vec>(sq.table.size());
  for (Vec x = 0; x < top; ++x)
    for (Vec y = 0; y < top; ++y) {
      Vec v = induced_form(sq, x, y);
      for (Vec b : basis) v = std::min(v, v ^ b);
      if (v) basis.push_back(v);
    }
  return static_cast<int>(basis.size());
}

Squaring transform(const Squaring& s, const GammaWitness& w) {
  const Field F(2, s.m);
  const SubfieldView view(F, s.n);
  Squaring out = s;
  for (Elem x = 0; x < F.size(); ++x) out.table[x] = apply(view.sub(), w.gamma2, s.table[apply(F, w.gamma1, x)]);
  return out;
}

Squaring transform(const Squaring& s, const LinearMap& T, const LinearMap& U) {
  Squaring out = s;
  for (Vec x = 0; x < s.table.size(); ++x) out.table[x] = U.apply(s.table[T.apply(x)]);
  return out;
}

std::vector<LinearMap> all_invertible(int dim) {
  std::vector<LinearMap> out;
  const Vec top = Vec{1} << dim;
  std::vector<Vec> cols(dim, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == dim) {
      LinearMap M{cols};
      if (is_invertible(M, dim)) out.push_back(M);
      return;
    }
    for (Vec c = 1; c < top; ++c) {
      cols[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("subfield view embeds F_{2^n} additively and multiplicatively") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{6, 3}, {6, 2}, {6, 6}, {4, 2}, {8, 4}}) {
    const Field F(2, m);
    const SubfieldView view(F, n);
    std::set<Elem> image;
    for (Vec v = 0; v < (Vec{1} << n); ++v) {
      const Elem x = view.embed(v);
      image.insert(x);
      CHECK(F.in_subfield(x, n));
      CHECK(view.unembed(x) == v);
      for (Vec w = 0; w < (Vec{1} << n); ++w) {
        CHECK(view.embed(v ^ w) == F.add(x, view.embed(w)));
        CHECK(view.embed(view.sub().mul(v, w)) == F.mul(x, view.embed(w)));
      }
    }
    CHECK(image.size() == (std::size_t{1} << n));
  }
  const Field F(2, 6);
  const SubfieldView view(F, 3);
  CHECK_THROWS_AS(view.unembed(F.omega()), std::domain_error);
  CHECK_THROWS_AS(SubfieldView(F, 4), std::invalid_argument);
  CHECK_THROWS_AS(SubfieldView(Field(3, 2), 1), std::invalid_argument);
}

TEST_CASE("biadditivity: fast test, brute force and polynomial criterion agree") {
  testgen::Gen g(41);
  for (int m = 1; m <= 5; ++m) {
    const Field F(2, m);
    const SubfieldView view(F, m);
    for (int t = 0; t < 60; ++t) {
      const Squaring sq = t % 2 ? g.quadratic(m, m) : g.squaring(m, m);
      const bool bi = biadditive_bruteforce(sq);
      CHECK(is_biadditive(sq) == bi);
      if (t % 2) CHECK(bi);
      const auto crit = biadditivity_criterion(F.interpolate(as_field_function(view, sq)));
      CHECK(crit.biadditive == bi);
      if (bi) CHECK(crit.nontrivial == form_nontrivial(sq));
    }
  }
  CHECK_THROWS_AS(biadditivity_criterion(std::vector<Elem>(5)), std::invalid_argument);
}

TEST_CASE("form surjectivity matches the rank of the form values") {
  testgen::Gen g(42);
  for (int t = 0; t < 200; ++t) {
    const int m = static_cast<int>(g.range(2, 5)), n = static_cast<int>(g.range(1, 3));
    const Squaring sq = g.quadratic(m, n);
    CHECK(form_surjective(sq) == (form_rank(sq) == n));
    CHECK(form_nontrivial(sq) == (form_rank(sq) > 0));
  }
}

TEST_CASE("Singer predata validate") {
  for (int m = 2; m <= 8; ++m) {
    for (int k = 1; k < m; ++k) {
      if (std::countr_zero(static_cast<unsigned>(k)) < std::countr_zero(static_cast<unsigned>(m))) {
        CHECK_THROWS_AS(singer_squaring(m, SingerVariant::A, 0, k, 0), std::invalid_argument);
        continue;
      }
      const Predatum P = singer_squaring(m, SingerVariant::A, 0, k, 1);
      CHECK(validate_predatum(P).ok());
      CHECK(form_surjective(P.squaring));
    }
    if (m % 2 == 0) {
      const Predatum P = singer_squaring(m, SingerVariant::B, m > 2 ? 1 : 0, 0, 0);
      CHECK(validate_predatum(P).ok());
    } else {
      CHECK_THROWS_AS(singer_squaring(m, SingerVariant::B, 0, 0, 0), std::invalid_argument);
    }
  }
}

TEST_CASE("a corrupted predatum fails validation") {
  Predatum P = singer_squaring(6, SingerVariant::B, 0, 0, 0);
  P.squaring.table[5] ^= 1;
  const auto r = validate_predatum(P);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("sigma_omega values come from the defining polynomial") {
  const Field F(2, 6);
  const SubfieldView view(F, 3);
  const Squaring s = sigma_omega();
  const Elem c = F.omega(), c8 = F.pow(c, 8);
  for (Elem x = 0; x < F.size(); ++x) {
    const Elem v = F.add(F.mul(c, F.pow(x, 3)), F.mul(c8, F.pow(x, 24)));
    REQUIRE(F.in_subfield(v, 3));
    CHECK(view.embed(s.table[x]) == v);
  }
  CHECK(is_biadditive(s));
  CHECK(form_surjective(s));
  CHECK(sigma_c_values(F, c) == as_field_function(view, s));
  CHECK_THROWS_AS(sigma_c_values(Field(2, 4), 1), std::invalid_argument);
}

TEST_CASE("Gamma L_1 equivalence recovers random transforms") {
  testgen::Gen g(43);
  const std::vector<Squaring> bases = {singer_squaring(3, SingerVariant::A, 0, 1, 0).squaring,
                                       singer_squaring(6, SingerVariant::B, 0, 0, 0).squaring, sigma_omega()};
  for (const Squaring& s : bases) {
    const GammaL1 G1(2, s.m), G2(2, s.n);
    for (int t = 0; t < 5; ++t) {
      const GammaWitness w{{static_cast<int>(g.below(s.m)), g.range(0, G1.unit_order() - 1)},
                           {static_cast<int>(g.below(s.n)), g.range(0, G2.unit_order() - 1)}};
      const Squaring s2 = transform(s, w);
      CHECK(is_gammal1_witness(s, s2, w));
      const auto found = gammal1_equivalent(s, s2);
      REQUIRE(found.has_value());
      CHECK(transform(s, *found) == s2);
    }
  }
  // x^9 and sigma_omega are not Gamma L_1 equivalent
  CHECK_FALSE(gammal1_equivalent(sigma_omega(), monomial_squaring(6, 3, 9)).has_value());
  CHECK_THROWS_AS(gammal1_equivalent(bases[0], bases[1]), std::invalid_argument);
}

TEST_CASE("GL equivalence recovers random linear transforms") {
  testgen::Gen g(44);
  for (int t = 0; t < 20; ++t) {
    const int m = static_cast<int>(g.range(2, 4)), n = static_cast<int>(g.range(1, 3));
    const Squaring s = g.quadratic(m, n);
    const LinearMap T = g.invertible(m), U = g.invertible(n);
    const Squaring s2 = transform(s, T, U);
    const GlResult r = gl_equivalent(s, s2);
    REQUIRE(r.status == GlStatus::Found);
    CHECK(transform(s, r.witness->T, r.witness->U) == s2);
  }
  // a squaring with trivial form is not equivalent to a Singer squaring
  const Squaring singer = singer_squaring(3, SingerVariant::A, 0, 1, 0).squaring;
  Squaring linear = zero_squaring(3, 3);
  for (Vec x = 0; x < 8; ++x) linear.table[x] = x;
  CHECK(gl_equivalent(singer, linear).status == GlStatus::NotEquivalent);
  CHECK(gl_equivalent(singer, singer, 1).status == GlStatus::BudgetExceeded);
}

TEST_CASE("automorphism pairs against a brute force over GL_3(2) x GL_3(2)") {
  const Squaring s = singer_squaring(3, SingerVariant::A, 0, 1, 0).squaring;
  const auto gl3 = all_invertible(3);
  REQUIRE(gl3.size() == 168);
  std::size_t expect = 0;
  for (const auto& T : gl3)
    for (const auto& U : gl3) {
      bool ok = true;
      for (Vec x = 0; x < 8 && ok; ++x) ok = s.table[T.apply(x)] == U.apply(s.table[x]);
      expect += ok;
    }
  const auto pairs = automorphism_pairs(s);
  CHECK(pairs.pairs.size() == expect);
  CHECK(expect == 21);
  for (const auto& p : pairs.pairs)
    for (Vec x = 0; x < 8; ++x) CHECK(s.table[p.T.apply(x)] == p.U.apply(s.table[x]));
  Squaring linear = zero_squaring(3, 3);
  for (Vec x = 0; x < 8; ++x) linear.table[x] = x;
  CHECK_THROWS_AS(automorphism_pairs(linear), std::invalid_argument);
}

TEST_CASE("coset-monomial functions are equivariant") {
  const Field F(2, 6);
  for (const auto& A : enumerate_transitive_subgroups(6))
    for (const auto& cls : enumerate_hom_targets(6, A, 3)) {
      const HomTarget& T = cls.preimages.front();
      const SubfieldView view(F, 3);
      for (Elem y : sigma1_solutions(F, A, T)) {
        const auto vals = coset_monomial_function(F, A, T, y);
        CHECK(vals[1] == y);
        bool inside = true;
        for (Elem v : vals) inside = inside && view.contains(v);
        if (!inside) continue;
        const Squaring sq = coset_monomial_squaring(F, A, T, y);
        CHECK(is_equivariant(view, sq, A, T));
      }
      CHECK_THROWS_AS(coset_monomial_function(F, A, T, 0), std::invalid_argument);
    }
}

TEST_CASE("monomial squarings") {
  const Squaring s = monomial_squaring(6, 3, 9);
  const Field F(2, 6);
  const SubfieldView view(F, 3);
  for (Elem x = 0; x < 64; ++x) CHECK(view.embed(s.table[x]) == F.pow(x, 9));
  CHECK_THROWS(monomial_squaring(6, 3, 3));
}
