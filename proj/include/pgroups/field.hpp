#pragma once

#include <cstdint>
#include <vector>

namespace pgroups {

using Elem = std::uint32_t;

/// Finite field F_{p^m} for small p^m, with the residue class of X as the
/// distinguished generator omega of the unit group.
///
/// Elements are integers whose base-p digits are the coefficients of the
/// reduced residue polynomial, lowest degree first. For p = 2 this is the
/// little-endian bit vector of the coefficients and addition is XOR.
class Field {
 public:
  /// Uses X^6+X^4+X^3+X+1 for (2,6) and the first primitive polynomial in
  /// coefficient order otherwise.
  Field(int p, int m);

  /// modulus is monic of degree m, coefficients low to high. It must be
  /// irreducible and X must generate the unit group.
  Field(int p, int m, std::vector<int> modulus);

  int p() const { return p_; }
  int m() const { return m_; }
  Elem size() const { return q_; }
  Elem unit_order() const { return q_ - 1; }
  const std::vector<int>& modulus() const { return modulus_; }
  Elem omega() const { return omega_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  /// Exponent is taken mod p^m - 1 for nonzero bases; 0^0 = 1.
  Elem pow(Elem a, std::int64_t k) const;
  /// omega^k for any integer k.
  Elem exp(std::int64_t k) const;
  /// Discrete log base omega, in [0, p^m - 1).
  std::int64_t log(Elem a) const;
  /// a^(p^i); i may be negative.
  Elem frobenius(Elem a, std::int64_t i) const;
  /// a^(p^n) == a. Requires n | m.
  bool in_subfield(Elem a, int n) const;

  std::vector<int> coefficients(Elem a) const;
  Elem from_coefficients(const std::vector<int>& c) const;

  /// Coefficients c_0..c_{q-1} of the polynomial of degree < q agreeing with
  /// values[x] at every x. The result is checked by re-evaluation.
  std::vector<Elem> interpolate(const std::vector<Elem>& values) const;
  /// A single coefficient of the interpolating polynomial, O(q).
  Elem interpolation_coefficient(const std::vector<Elem>& values,
                                 std::uint64_t i) const;
  Elem evaluate(const std::vector<Elem>& coeffs, Elem x) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

  static std::vector<int> default_modulus(int p, int m);
  /// Rabin-style test: gcd(X^(p^k) - X, f) = 1 for all k <= deg(f)/2.
  static bool is_irreducible(int p, const std::vector<int>& f);

 private:
  void build();

  int p_;
  int m_;
  Elem q_;
  std::vector<int> modulus_;
  Elem omega_;
  std::vector<Elem> exp_;
  std::vector<std::int32_t> log_;
};

}  // namespace pgroups
