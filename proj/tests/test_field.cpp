#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "pgroups/field.hpp"

using namespace pgroups;

namespace {

// Schoolbook product of coefficient vectors reduced by the modulus.
Elem slow_mul(const Field& f, Elem a, Elem b) {
  const int p = f.p(), m = f.m();
  const auto ca = f.coefficients(a), cb = f.coefficients(b);
  std::vector<int> prod(2 * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  const auto& mod = f.modulus();
  for (int k = 2 * m - 1; k >= m; --k) {
    const int c = prod[k];
    if (c == 0) continue;
    for (int i = 0; i <= m; ++i) prod[k - m + i] = ((prod[k - m + i] - c * mod[i]) % p + p) % p;
  }
  prod.resize(m);
  return f.from_coefficients(prod);
}

const std::vector<std::pair<int, int>> kSmall = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                                 {2, 8}, {3, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};

}  // namespace

TEST_CASE("pinned modulus for F_64") {
  const Field f(2, 6);
  CHECK(f.modulus() == std::vector<int>{1, 1, 0, 1, 1, 0, 1});
  CHECK(f.omega() == 2);
}

TEST_CASE("omega has full multiplicative order") {
  for (auto [p, m] : kSmall) {
    const Field f(p, m);
    Elem x = 1;
    std::uint64_t ord = 0;
    do {
      x = slow_mul(f, x, f.omega());
      ++ord;
    } while (x != 1);
    CHECK(ord == f.unit_order());
  }
}

TEST_CASE("multiplication agrees with the schoolbook oracle") {
  testgen::Gen g(11);
  for (auto [p, m] : kSmall) {
    const Field f(p, m);
    for (int t = 0; t < 300; ++t) {
      const Elem a = g.elem(f), b = g.elem(f);
      REQUIRE_MESSAGE(f.mul(a, b) == slow_mul(f, a, b), "p=" << p << " m=" << m << " a=" << a << " b=" << b);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  testgen::Gen g(12);
  for (auto [p, m] : kSmall) {
    const Field f(p, m);
    for (int t = 0; t < 200; ++t) {
      const Elem a = g.elem(f), b = g.elem(f), c = g.elem(f);
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.sub(f.add(a, b), b) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (b != 0) CHECK(f.mul(f.div(a, b), b) == a);
    }
  }
}

TEST_CASE("log and exp are inverse; pow follows exp") {
  testgen::Gen g(13);
  for (auto [p, m] : kSmall) {
    const Field f(p, m);
    for (Elem a = 1; a < f.size(); ++a) REQUIRE(f.exp(f.log(a)) == a);
    for (int t = 0; t < 100; ++t) {
      const Elem a = g.unit(f);
      const std::int64_t k = g.range(-1000, 1000);
      Elem slow = 1;
      const Elem base = k >= 0 ? a : f.inv(a);
      for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) slow = slow_mul(f, slow, base);
      CHECK(f.pow(a, k) == slow);
    }
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(0, 5) == 0);
  }
}

TEST_CASE("frobenius is additive and its fixed points form the subfields") {
  for (auto [p, m] : kSmall) {
    const Field f(p, m);
    for (int n = 1; n <= m; ++n) {
      if (m % n) continue;
      std::uint64_t count = 0;
      for (Elem a = 0; a < f.size(); ++a) count += f.in_subfield(a, n);
      std::uint64_t expect = 1;
      for (int i = 0; i < n; ++i) expect *= static_cast<std::uint64_t>(p);
      CHECK(count == expect);
    }
    for (Elem a = 0; a < f.size(); a += 7)
      for (Elem b = 0; b < f.size(); b += 5)
        CHECK(f.frobenius(f.add(a, b), 1) == f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
    for (Elem a = 0; a < f.size(); ++a) CHECK(f.frobenius(f.frobenius(a, 1), -1) == a);
  }
}

TEST_CASE("interpolation of monomials and random tables") {
  testgen::Gen g(14);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {2, 6}, {3, 2}, {5, 2}}) {
    const Field f(p, m);
    const Elem q = f.size();
    for (Elem e = 1; e < q; ++e) {
      std::vector<Elem> vals(q);
      for (Elem x = 0; x < q; ++x) vals[x] = f.pow(x, e);
      const auto c = f.interpolate(vals);
      for (Elem i = 0; i < q; ++i) REQUIRE(c[i] == (i == e ? 1u : 0u));
    }
    std::vector<Elem> vals(q);
    for (auto& v : vals) v = g.elem(f);
    const auto c = f.interpolate(vals);
    for (Elem x = 0; x < q; ++x) CHECK(f.evaluate(c, x) == vals[x]);
    for (Elem i = 0; i < q; ++i) CHECK(f.interpolation_coefficient(vals, i) == c[i]);
  }
}

TEST_CASE("irreducibility test matches root and factor counts for small degrees") {
  // degree 2 and 3 over F_2 and F_3: irreducible iff no root
  for (int p : {2, 3}) {
    for (int deg : {2, 3}) {
      int total = 1;
      for (int i = 0; i < deg; ++i) total *= p;
      for (int code = 0; code < total; ++code) {
        std::vector<int> f(deg + 1);
        int c = code;
        for (int i = 0; i < deg; ++i) {
          f[i] = c % p;
          c /= p;
        }
        f[deg] = 1;
        bool has_root = false;
        for (int x = 0; x < p; ++x) {
          int v = 0, xp = 1;
          for (int i = 0; i <= deg; ++i) {
            v = (v + f[i] * xp) % p;
            xp = xp * x % p;
          }
          has_root = has_root || v == 0;
        }
        CHECK(Field::is_irreducible(p, f) == !has_root);
      }
    }
  }
}

TEST_CASE("constructor rejects bad input") {
  CHECK_THROWS_AS(Field(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), std::invalid_argument);        // (X+1)^2
  CHECK_THROWS_AS(Field(2, 4, {1, 1, 1, 1, 1}), std::invalid_argument);  // X has order 5
  CHECK_THROWS_AS(Field(2, 3, {1, 1, 0}), std::invalid_argument);        // wrong degree
  CHECK_THROWS_AS(Field(3, 2, {1, 0, 2}), std::invalid_argument);        // not monic
  const Field f(2, 3);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(f.log(0), std::domain_error);
  CHECK_THROWS_AS(f.pow(0, -1), std::domain_error);
  CHECK_THROWS_AS(f.in_subfield(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(f.interpolate(std::vector<Elem>(7)), std::invalid_argument);
}
