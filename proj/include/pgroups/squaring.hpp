#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgroups/field.hpp"
#include "pgroups/gammal1.hpp"

namespace pgroups {

using Vec = std::uint32_t;  // bit vector over F_2, bit i = coordinate i

/// F_{2^n} inside F_{2^m}: n-bit vectors are coordinates in the basis
/// 1, Omega_0, ..., Omega_0^(n-1) with Omega_0 = omega^((2^m-1)/(2^n-1)).
/// sub() is F_{2^n} built on the minimal polynomial of Omega_0, so its
/// generator corresponds to Omega_0.
class SubfieldView {
 public:
  SubfieldView(const Field& big, int n);

  const Field& big() const { return big_; }
  const Field& sub() const { return sub_; }
  int n() const { return sub_.m(); }
  Elem omega0() const { return omega0_; }

  Elem embed(Vec v) const { return embed_.at(v); }
  bool contains(Elem x) const { return unembed_.at(x) >= 0; }
  /// Throws std::domain_error if x is outside the subfield.
  Vec unembed(Elem x) const;

 private:
  Field big_;
  Field sub_;
  Elem omega0_;
  std::vector<Elem> embed_;
  std::vector<std::int64_t> unembed_;
};

struct Squaring {
  int m = 0;
  int n = 0;
  std::vector<Vec> table;
  bool operator==(const Squaring&) const = default;
};

Squaring zero_squaring(int m, int n);
/// Values must all lie in the subfield.
Squaring to_squaring(const SubfieldView& view, const std::vector<Elem>& values);
std::vector<Elem> as_field_function(const SubfieldView& view, const Squaring& sq);

Vec induced_form(const Squaring& sq, Vec x, Vec y);
bool is_biadditive(const Squaring& sq);
bool form_nontrivial(const Squaring& sq);
bool is_surjective(const Squaring& sq);
/// Span of all values [x,y] is the whole of F_2^n.
bool form_surjective(const Squaring& sq);

struct CriterionResult {
  bool biadditive = false;
  bool nontrivial = false;
  std::vector<std::uint64_t> exponents;  // indices of nonzero coefficients
};
/// Polynomial test on a coefficient vector of length 2^m.
CriterionResult biadditivity_criterion(const std::vector<Elem>& coeffs);

struct Predatum {
  Squaring squaring;
  StandardParams a_params;
  HomTarget target;
};

struct PredatumReport {
  bool target_valid = false;
  bool equivariant = false;
  bool a_transitive = false;
  bool image_transitive = false;
  bool biadditive = false;
  bool nontrivial = false;
  bool surjective = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks sigma(x^g) = sigma(x)^phi(g) for both standard generators of A.
bool is_equivariant(const SubfieldView& view, const Squaring& sq, const StandardParams& A,
                    const HomTarget& T, std::string* why = nullptr);
PredatumReport validate_predatum(const Predatum& P);

enum class SingerVariant { A, B };
/// sigma(x) = Omega_0^scalar_exp * x^e with e = 2^l (2^k + 1) (variant A, n = m)
/// or e = 2^l (2^(m/2) + 1) (variant B, n = m/2; k is ignored).
Predatum singer_squaring(int m, SingerVariant variant, int l, int k, std::int64_t scalar_exp);

/// zeta = Omega^e'' omega^(-e epsilon), as an element of F_{2^m}.
Elem hom_zeta(const Field& f, const StandardParams& A, const HomTarget& T);
/// Nonzero y with y^(2^(ds)) = zeta^(-(2^(ds)-1)/(2^s-1)) y.
std::vector<Elem> sigma1_solutions(const Field& f, const StandardParams& A, const HomTarget& T);
/// The A-equivariant function with value sigma1 at 1, as F_{2^m}-values.
/// Throws std::invalid_argument if sigma1 is zero or violates the constraint.
std::vector<Elem> coset_monomial_function(const Field& f, const StandardParams& A,
                                          const HomTarget& T, Elem sigma1);
/// As above, converted to a squaring; throws if some value leaves F_{2^n}.
Squaring coset_monomial_squaring(const Field& f, const StandardParams& A, const HomTarget& T,
                                 Elem sigma1);

/// chi -> c chi^3 + c^8 chi^24 on F_{2^6} (pinned modulus).
std::vector<Elem> sigma_c_values(const Field& f6, Elem c);
Squaring sigma_omega();
/// chi -> chi^e as a squaring F_{2^m} -> F_{2^n}; values must lie in F_{2^n}.
Squaring monomial_squaring(int m, int n, std::uint64_t e);

/// sigma2(x) = gamma2(sigma1(gamma1(x))) for all x, gamma1 in GammaL_1(2^m)
/// and gamma2 in GammaL_1(2^n) acting through the subfield view.
struct GammaWitness {
  SemilinearMap gamma1;
  SemilinearMap gamma2;
};
bool is_gammal1_witness(const Squaring& s1, const Squaring& s2, const GammaWitness& w);
/// First witness in lexicographic order of (gamma1, gamma2).
std::optional<GammaWitness> gammal1_equivalent(const Squaring& s1, const Squaring& s2);

/// Linear maps as column images.
struct LinearMap {
  std::vector<Vec> cols;
  Vec apply(Vec x) const;
  bool operator==(const LinearMap&) const = default;
};
LinearMap identity_map(int dim);
bool is_invertible(const LinearMap& M, int dim);

struct GlWitness {
  LinearMap T;  // on F_2^m
  LinearMap U;  // on F_2^n
};
enum class GlStatus { Found, NotEquivalent, BudgetExceeded };
struct GlResult {
  GlStatus status = GlStatus::NotEquivalent;
  std::optional<GlWitness> witness;
  std::uint64_t nodes = 0;
};
/// sigma2(x) = U(sigma1(T x)) for all x. Backtracking over the columns of T;
/// U is pinned down pair by pair and pruned on inconsistency.
GlResult gl_equivalent(const Squaring& s1, const Squaring& s2,
                       std::uint64_t budget = 200'000'000);

/// All (psi1, psi2) with sigma(psi1 x) = psi2(sigma(x)), sorted by psi1.
/// Requires a surjective induced form. Throws std::runtime_error on budget.
struct PairSearchResult {
  std::vector<GlWitness> pairs;
  std::uint64_t nodes = 0;
};
PairSearchResult automorphism_pairs(const Squaring& sq, std::uint64_t budget = 2'000'000'000);

}  // namespace pgroups
