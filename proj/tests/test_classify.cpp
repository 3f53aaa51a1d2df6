#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "pgroups/classify.hpp"

using namespace pgroups;

namespace {

// Direct count of Singer parameter choices: (variant, l, k, scalar).
std::size_t singer_count(int m) {
  const std::uint64_t Q = (std::uint64_t{1} << m) - 1;
  std::size_t count = 0;
  for (int k = 1; k < m; ++k) {
    if (std::countr_zero(static_cast<unsigned>(k)) < std::countr_zero(static_cast<unsigned>(m))) continue;
    for (int l = 0; (std::uint64_t{1} << l) * ((std::uint64_t{1} << k) + 1) <= Q; ++l) count += Q;
  }
  if (m % 2 == 0) {
    const std::uint64_t N = (std::uint64_t{1} << (m / 2)) - 1;
    for (int l = 0; (std::uint64_t{1} << l) * (N + 2) <= Q; ++l) count += N;
  }
  return count;
}

bool filter_oracle(int m, std::int64_t d, std::int64_t eps) {
  const std::int64_t Q = (std::int64_t{1} << m) - 1;
  int two = 0, at_most_two = 0;
  for (std::int64_t x = 0; x < d; ++x) {
    std::int64_t e = (eps + x * (Q / d)) % Q;
    if (e == 0) e = Q;
    const int c = std::popcount(static_cast<std::uint64_t>(e));
    two += c == 2;
    at_most_two += c <= 2;
  }
  return two >= 1 && at_most_two >= 2;
}

Squaring transform(const Squaring& s, const GammaWitness& w) {
  const Field F(2, s.m);
  const SubfieldView view(F, s.n);
  Squaring out = s;
  for (Elem x = 0; x < F.size(); ++x) out.table[x] = apply(view.sub(), w.gamma2, s.table[apply(F, w.gamma1, x)]);
  return out;
}

}  // namespace

TEST_CASE("Singer enumeration covers every parameter choice") {
  for (int m = 2; m <= 8; ++m) CHECK_MESSAGE(enumerate_singer(m).size() == singer_count(m), "m=" << m);
  CHECK_THROWS_AS(enumerate_singer(0), std::invalid_argument);
}

TEST_CASE("Singer classes and their merge witnesses") {
  for (int m = 2; m <= 6; ++m) {
    const auto predata = enumerate_singer(m);
    const auto classes = label_singer_classes(predata);
    std::set<std::vector<Vec>> tables;
    for (const auto& P : predata) tables.insert(P.squaring.table);
    std::size_t members = 0;
    std::set<std::string> labels;
    for (const auto& c : classes) {
      members += c.members;
      labels.insert(c.label);
      CHECK(c.label.back() != '?');
      CHECK(c.merge_witnesses.size() == c.members);
      for (const auto& w : c.merge_witnesses) CHECK(tables.count(transform(c.witness->squaring, w).table));
    }
    CHECK(members == predata.size());
    CHECK(labels.size() == classes.size());
  }
  const auto c3 = label_singer_classes(enumerate_singer(3));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].label == "A(3,frob^1)");
  CHECK(c3[0].members == 21);
  std::set<std::string> l6;
  for (const auto& c : label_singer_classes(enumerate_singer(6))) l6.insert(c.label);
  CHECK(l6 == std::set<std::string>{"A(6,frob^2)", "B(3,1)"});
  CHECK(label_singer_classes(enumerate_singer(2)).front().label == "Q8");
}

TEST_CASE("epsilon filter against a direct count") {
  for (int m = 2; m <= 10; ++m) {
    const std::int64_t Q = (std::int64_t{1} << m) - 1;
    for (std::int64_t d = 1; d <= Q; ++d) {
      if (Q % d) continue;
      for (std::int64_t eps = 0; eps < Q; ++eps) REQUIRE(epsilon_filter(m, d, eps) == filter_oracle(m, d, eps));
    }
  }
}

TEST_CASE("nonstandard search finds exactly the exceptional class at m = 6") {
  const auto R = nonstandard_search(6);
  REQUIRE(R.classes.size() == 1);
  const auto& P = R.classes[0].representative;
  CHECK(validate_predatum(P).ok());
  CHECK(gammal1_equivalent(P.squaring, sigma_omega()).has_value());
  for (int m : {2, 3, 4, 5, 7}) CHECK_MESSAGE(nonstandard_search(m).classes.empty(), "m=" << m);
  CHECK_THROWS_AS(nonstandard_search(1), std::invalid_argument);
}

TEST_CASE("Higman coordinate forms") {
  const auto a = higman_check(13, 1, 9);
  CHECK(a.ok());
  CHECK(a.found_eps == std::vector<std::int64_t>{9});
  CHECK(higman_check(44, 1, 18).ok());
  CHECK(higman_check(25, 2, 36).ok());
  CHECK_FALSE(higman_check(13, 1, 18).ok());
  CHECK_THROWS_AS(higman_check(9, 1, 0), std::invalid_argument);  // omega^9 lies in F_8
}

TEST_CASE("exceptional identification") {
  const auto R = nonstandard_search(6);
  REQUIRE(R.classes.size() == 1);
  const auto id = identify_exceptional(R.classes[0].representative);
  CHECK(id.ok());
  CHECK_FALSE(id.x9_equivalent);
  CHECK(id.entry.label == "B(3,theta,eps)");
  CHECK(id.entry.order == 512);
  CHECK_THROWS_AS(identify_exceptional(singer_squaring(3, SingerVariant::A, 0, 1, 0)), std::invalid_argument);
}

TEST_CASE("theorem list up to order 512") {
  const Classification C = theorem_list(512);
  CHECK(C.ok());
  std::map<std::uint64_t, std::set<std::string>> by_order;
  for (const auto& e : C.entries) {
    CHECK(e.orbits == 3);
    by_order[e.order].insert(e.label);
  }
  CHECK(by_order[8] == std::set<std::string>{"Q8"});
  CHECK(by_order[64] == std::set<std::string>{"A(3,frob^1)", "B(2,1)", "Homocyclic(3)"});
  CHECK(by_order[512] == std::set<std::string>{"B(3,1)", "B(3,theta,eps)"});
  // the profile certificate at order 512, confirmed by exhausting GL_6(2) x GL_3(2)
  const auto gl = gl_equivalent(singer_squaring(6, SingerVariant::B, 0, 0, 0).squaring, sigma_omega());
  CHECK(gl.status == GlStatus::NotEquivalent);
  CHECK(by_order.count(32) == 0);
  CHECK(by_order.count(128) == 0);
  const std::size_t k = C.entries.size();
  CHECK(C.certificates.size() == k * (k - 1) / 2);
  for (const auto& c : C.certificates) CHECK(c.kind != "undecided");
  CHECK_THROWS_AS(theorem_list(std::uint64_t{1} << 30), std::invalid_argument);
}

TEST_CASE("certification flags a group with four orbits") {
  ClassEntry e;
  e.label = "Z2xZ4";
  e.spec = GroupSpec(2, 1);
  e.spec.sigma = {1, 0};
  e.order = 8;
  certify_entry(e);
  CHECK(e.orbits == 4);
  Classification C;
  C.entries.push_back(e);
  CHECK_FALSE(C.ok());
}

TEST_CASE("homocyclic spec") {
  const GroupSpec s = homocyclic_spec(3);
  CHECK(s.m == 3);
  CHECK(s.n == 3);
  CHECK(s.sigma == std::vector<Vec>{1, 2, 4});
  CHECK_THROWS_AS(homocyclic_spec(0), std::invalid_argument);
}
