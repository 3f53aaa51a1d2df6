#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgroups/group.hpp"
#include "pgroups/squaring.hpp"

namespace pgroups {

struct ClassEntry {
  std::string label;
  std::uint64_t order = 0;
  GroupSpec spec;
  std::optional<Predatum> witness;  // absent for the abelian entries
  std::string provenance;
  std::size_t members = 1;          // predata merged into this class
  std::vector<GammaWitness> merge_witnesses;
  std::int64_t orbits = -1;         // -1 until certified
  std::string orbit_method;
  InvariantProfile profile;
  std::vector<std::string> notes;
};

/// (Z/4)^n: x_i^2 = y_i, all commutators trivial.
GroupSpec homocyclic_spec(int n);

/// All Singer predata of degree m for both variants, every legal (l, k) and
/// every scalar in F_{2^n}^*. Each is validated; a failure throws logic_error.
std::vector<Predatum> enumerate_singer(int m);

/// Groups Singer predata by label, merging A(n,k) with A(n,n-k) and all
/// shifts and scalars. Each member is tied to the class representative by a
/// Gamma L_1 witness; members without one get their own "undecided" entry.
std::vector<ClassEntry> label_singer_classes(const std::vector<Predatum>& predata);

/// Admits epsilon when the exponents epsilon + x (2^m-1)/d, x < d, contain one
/// with exactly two binary digits and at least two with at most two.
bool epsilon_filter(int m, std::int64_t d, std::int64_t epsilon);

struct NonstandardClass {
  Predatum representative;
  std::vector<GammaWitness> witnesses;  // one per merged candidate
};

struct NonstandardResult {
  int m = 0;
  std::size_t transitive_subgroups = 0;
  std::size_t targets = 0;
  std::size_t candidates = 0;
  std::size_t criterion_failed = 0;
  std::size_t monomial_discarded = 0;
  std::size_t subfield_failed = 0;
  std::size_t not_surjective = 0;
  std::size_t invalid = 0;
  std::vector<NonstandardClass> classes;
  std::vector<std::string> log;
};

/// Transitive A without scalars, hom targets for each n | m with n >= 2 (and
/// 2^(m+n) <= max_order when given), sigma(1) solutions, coset-monomial
/// squarings, the polynomial criterion, subfield and surjectivity filters,
/// predatum validation, and Gamma L_1 dedupe.
NonstandardResult nonstandard_search(int m, std::uint64_t max_order = 0);

struct HigmanCheck {
  std::int64_t zeta_exp = 0;
  std::int64_t c_exp = 1;         // sigma_c with c = omega^c_exp
  std::int64_t expected_eps = 0;  // as a power of omega
  std::vector<std::int64_t> found_eps;
  std::int64_t lambda_exp = -1;   // scalar in F_8^*, as a power of omega
  bool swapped = false;
  bool ok() const { return found_eps.size() == 1 && found_eps.front() == expected_eps; }
};

struct ExceptionalIdentification {
  std::optional<GammaWitness> to_sigma_omega;  // predatum squaring -> sigma_omega
  std::vector<HigmanCheck> checks;
  bool x9_equivalent = true;  // must come out false
  ClassEntry entry;
  bool ok() const;
};

/// Confirms the m = 6 predatum is sigma_omega up to Gamma L_1, reproduces the
/// three Higman coordinate forms, and rules out the x^9 squaring.
ExceptionalIdentification identify_exceptional(const Predatum& P);

/// The Higman coordinate check for one zeta: sigma_c(k1 + k2 zeta) against
/// lambda (k1^3 + eps k1^2 k2 + k2^3), with and without a component swap.
HigmanCheck higman_check(std::int64_t zeta_exp, std::int64_t c_exp, std::int64_t expected_eps);

struct Certificate {
  std::size_t a = 0;
  std::size_t b = 0;
  std::string kind;  // "order", "profile" or "undecided"
  std::string detail;
};

struct Classification {
  std::uint64_t max_order = 0;
  std::vector<ClassEntry> entries;
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;
  bool ok() const;
};

/// Fills orbits, orbit_method and profile.
void certify_entry(ClassEntry& entry);

Classification theorem_list(std::uint64_t max_order);

}  // namespace pgroups
