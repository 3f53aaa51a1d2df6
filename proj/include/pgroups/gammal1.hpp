#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pgroups/field.hpp"

namespace pgroups {

/// x -> x^(p^s) * base^e on nonzero x, fixing 0. The base is omega of the
/// field the map acts on unless stated otherwise.
struct SemilinearMap {
  int s = 0;
  std::int64_t e = 0;
  auto operator<=>(const SemilinearMap&) const = default;
};

/// Gamma L_1(p^deg) as an abstract group of pairs (s mod deg, e mod p^deg-1).
/// Products are right actions: compose(a, b) applies a first.
class GammaL1 {
 public:
  GammaL1(int p, int deg);

  int p() const { return p_; }
  int deg() const { return deg_; }
  std::int64_t unit_order() const { return n_; }
  std::int64_t order() const { return deg_ * n_; }

  SemilinearMap identity() const { return {0, 0}; }
  SemilinearMap normalize(SemilinearMap g) const;
  SemilinearMap compose(SemilinearMap a, SemilinearMap b) const;
  SemilinearMap inverse(SemilinearMap a) const;
  SemilinearMap power(SemilinearMap a, std::int64_t k) const;
  /// g^-1 x g
  SemilinearMap conjugate(SemilinearMap x, SemilinearMap g) const;
  /// p^k mod (p^deg - 1)
  std::int64_t p_pow(std::int64_t k) const;

  std::int64_t index(SemilinearMap g) const;
  SemilinearMap from_index(std::int64_t i) const;

  /// All elements of the generated subgroup, sorted.
  std::vector<SemilinearMap> generate(const std::vector<SemilinearMap>& gens) const;

 private:
  int p_;
  int deg_;
  std::int64_t n_;
  std::vector<std::int64_t> ppow_;
};

Elem apply(const Field& f, SemilinearMap g, Elem x);
Elem apply(const Field& f, Elem base, SemilinearMap g, Elem x);

/// Subgroup <alpha^s omega^e, omega^d> of Gamma L_1(p^m).
struct StandardParams {
  int p = 2;
  int m = 1;
  std::int64_t d = 1;
  std::int64_t e = 0;
  int s = 1;
  auto operator<=>(const StandardParams&) const = default;
};

std::string to_string(const StandardParams& P);

bool is_valid(const StandardParams& P);
std::int64_t subgroup_order(const StandardParams& P);
/// {alpha^s omega^e, omega^d}
std::vector<SemilinearMap> standard_generators(const StandardParams& P);
std::vector<SemilinearMap> subgroup_elements(const StandardParams& P);
/// Enumerates the generated subgroup and reads off (d, e, s).
StandardParams standard_form(int p, int m, const std::vector<SemilinearMap>& gens);
std::vector<StandardParams> all_standard_params(int p, int m);

bool knuth_criterion(std::int64_t a, std::int64_t b, std::int64_t M);
bool full_cycle_by_simulation(std::int64_t a, std::int64_t b, std::int64_t M);
/// Criterion, cross-checked by simulation when M <= simulation_bound.
bool knuth_full_cycle(std::int64_t a, std::int64_t b, std::int64_t M,
                      std::int64_t simulation_bound = 1 << 16);

/// Number of cycles of x -> p^s x + e on Z/d.
std::int64_t orbit_count(const StandardParams& P);
/// Orbits of the subgroup on the nonzero elements of f, by direct search.
std::int64_t orbit_count_direct(const Field& f, const StandardParams& P);
bool is_transitive(const StandardParams& P);

bool contains(const StandardParams& sub, const StandardParams& sup);
bool contains_direct(const StandardParams& sub, const StandardParams& sup);
/// Requires contains(sub, sup).
bool is_normal_in(const StandardParams& sub, const StandardParams& sup);
bool is_normal_direct(const StandardParams& sub, const StandardParams& sup);

struct QuotientData {
  std::int64_t order = 1;
  std::int64_t a = 0;
  std::int64_t x_exp = 1;    // s1/s
  std::int64_t y_exp = 1;    // d1/d
  std::int64_t y_twist = 1;  // p^s
  std::int64_t k = 0;        // gcd(a, d1/d)
  std::string presentation;
};
/// sup/sub where sub = (d1,e1,s1) is normal in sup = (d,e,s).
QuotientData quotient_data(const StandardParams& sub, const StandardParams& sup);
/// Index by coset enumeration, for cross-checking.
std::int64_t quotient_order_direct(const StandardParams& sub, const StandardParams& sup);
/// Checks the presentation relations hold in sup modulo sub.
bool quotient_relations_hold(const StandardParams& sub, const StandardParams& sup);

bool is_abelian(const StandardParams& P);
bool is_abelian_direct(const StandardParams& P);

struct AbelianNormalResult {
  std::vector<StandardParams> maximal;
  bool unique() const { return maximal.size() == 1; }
};
/// Maximal abelian normal subgroups of a transitive P in standard form.
AbelianNormalResult largest_abelian_normal(const StandardParams& P);

/// p = 2: transitive subgroups not containing the scalars.
std::vector<StandardParams> enumerate_transitive_subgroups(int m);

/// phi(alpha^s omega^e) = beta^s Omega^e'', phi(omega^d) = Omega^d' with
/// Omega = omega^(u (2^m-1)/(2^n-1)) and Omega^d' = (omega^d)^epsilon.
struct HomTarget {
  int n = 1;
  std::int64_t u = 1;
  std::int64_t d_prime = 1;
  std::int64_t e_pp = 0;
  std::int64_t epsilon_exp = 0;
  auto operator<=>(const HomTarget&) const = default;
};

/// Images of the two standard generators in Gamma L_1(2^n), with scalars
/// written in powers of Omega_0 = omega^((2^m-1)/(2^n-1)).
struct HomImages {
  SemilinearMap a;
  SemilinearMap b;
  auto operator<=>(const HomImages&) const = default;
};

HomImages hom_images(int m, const StandardParams& A, const HomTarget& T);

/// Relation check on the generator images plus transitivity of the image.
bool validate_hom_target(int m, const StandardParams& A, const HomTarget& T,
                         std::string* why = nullptr);

/// Orbits of the image group on F_{2^n}^*, by cycles of the induced
/// affine map on Z/d'.
std::int64_t image_orbit_count(int m, const StandardParams& A, const HomTarget& T);

struct HomTargetClass {
  HomImages images;
  std::vector<HomTarget> preimages;  // sorted; front() is the representative
};

/// Brute force over (u, d', e''), filtered by the divisibility conditions
/// and validated on generators. Targets inducing the same generator images
/// are grouped. If epsilon_filter is set, targets whose epsilon it rejects are
/// skipped before validation.
std::vector<HomTargetClass> enumerate_hom_targets(
    int m, const StandardParams& A, int n,
    bool (*epsilon_filter)(int m, std::int64_t d, std::int64_t epsilon) = nullptr);

}  // namespace pgroups
