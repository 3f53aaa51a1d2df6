#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pgroups/squaring.hpp"

namespace pgroups {

/// Structure constants of G_P on F_2^m x F_2^n: sigma[i] = x_i^2 and
/// pi(i,j) = [x_i,x_j] for i < j (0-based here, 1-based in text formats).
struct GroupSpec {
  int m = 0;
  int n = 0;
  std::vector<Vec> sigma;  // m entries
  std::vector<Vec> pi;     // m*m entries, only i < j used

  GroupSpec() = default;
  GroupSpec(int m_, int n_);
  Vec pi_at(int i, int j) const { return pi[static_cast<std::size_t>(i) * m + j]; }
  void set_pi(int i, int j, Vec v) { pi[static_cast<std::size_t>(i) * m + j] = v; }
  bool operator==(const GroupSpec&) const = default;
};

/// (u, v) packed as u | v << m.
using GElem = std::uint64_t;

class Group {
 public:
  explicit Group(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  int m() const { return spec_.m; }
  int n() const { return spec_.n; }
  std::uint64_t order() const { return std::uint64_t{1} << (spec_.m + spec_.n); }

  GElem pack(Vec u, Vec v) const { return GElem{u} | (GElem{v} << spec_.m); }
  Vec u_of(GElem g) const { return static_cast<Vec>(g & umask_); }
  Vec v_of(GElem g) const { return static_cast<Vec>(g >> spec_.m); }

  /// sum_i u1_i u2_i sigma_i + sum_{i<j} u1_j u2_i pi_ij
  Vec cocycle(Vec u1, Vec u2) const;
  GElem multiply(GElem a, GElem b) const;
  GElem inverse(GElem a) const;
  GElem square(GElem a) const;
  /// a^-1 b^-1 a b
  GElem commutator(GElem a, GElem b) const;
  int element_order(GElem a) const;

 private:
  Vec cocycle_direct(Vec u1, Vec u2) const;

  GroupSpec spec_;
  GElem umask_;
  std::vector<Vec> table_;  // cocycle table when m <= 8
};

/// Requires sigma(0) = 0 and a biadditive induced form.
GroupSpec from_squaring(const Squaring& sq);
Squaring squaring_of_group(const GroupSpec& spec);

struct AutPairGroup {
  std::vector<GlWitness> pairs;  // (psi1, psi2)
  std::vector<LinearMap> a_proj;
  std::vector<LinearMap> b_proj;
  std::uint64_t nodes = 0;
};
/// S_P by the pair search over GL_m(2); throws if the form is not surjective.
AutPairGroup aut_pair_group(const GroupSpec& spec);

struct OrbitCount {
  std::int64_t orbits = 0;
  std::int64_t a_orbits = 0;
  std::int64_t b_orbits = 0;
  std::uint64_t pair_group_order = 0;
};
/// 1 + #B_P-orbits on nonzero F_2^n + #A_P-orbits on nonzero F_2^m.
OrbitCount orbit_count(const GroupSpec& spec);

struct BruteForceOrbits {
  std::int64_t orbits = 0;
  std::uint64_t aut_order = 0;
  std::size_t generators = 0;
};
/// Independent oracle: automorphisms are searched as images of a generating
/// set, a stabilizer chain over that set gives |Aut| and generators, and
/// orbits come from union-find on all elements.
BruteForceOrbits brute_force_orbits(const GroupSpec& spec, int max_bits = 10);

struct InvariantProfile {
  std::uint64_t order = 0;
  std::map<int, std::uint64_t> order_histogram;
  std::uint64_t center_size = 0;
  std::uint64_t derived_size = 0;
  std::uint64_t commuting_pairs = 0;
  std::map<std::uint64_t, std::uint64_t> centralizer_histogram;
  /// dim (H / Phi) -> number of abelian subgroups H containing Phi(G);
  /// filled only when Phi(G) is all of {0} x F_2^n
  std::map<int, std::uint64_t> abelian_over_frattini;
  bool operator==(const InvariantProfile&) const = default;
};
InvariantProfile invariant_profile(const GroupSpec& spec);
std::string to_string(const InvariantProfile& p);

std::string export_pc_presentation(const GroupSpec& spec);
/// Throws std::invalid_argument on malformed text.
GroupSpec parse_pc_presentation(const std::string& text);

}  // namespace pgroups
