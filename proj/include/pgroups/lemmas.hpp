#pragma once

#include <cstdint>
#include <vector>

#include "pgroups/report.hpp"

namespace pgroups {

/// Knuth's full-cycle criterion against simulation, all a, b mod M, M <= max_M.
Report knuth_check(std::int64_t max_M = 128);

/// For every prime power q = p^m <= max_q and every standard triple: round
/// trip through standard_form, transitivity against direct orbits, and for
/// every pair the containment, normality and quotient criteria against
/// element-wise checks.
Report standard_form_check(std::uint64_t max_q = 512);

/// Every cyclic transitive subgroup of Gamma L_1(p^m), p^m <= max_q, is the
/// scalar group.
Report cyclic_transitive_check(std::uint64_t max_q = 1024);

/// p = 2, m <= max_m: the unique maximal abelian normal subgroup of each
/// transitive P is (d, 0, m). For (p, m) = (3, 2) a transitive P whose
/// maximal abelian normal subgroups leave the scalars must be found.
Report abelian_normal_check(int max_m = 10);

/// is_biadditive against the polynomial criterion on random squarings.
Report criterion_random_check(int max_m = 5, int samples_per_m = 250, std::uint64_t seed = 1);

/// For every validated hom target with m <= max_m: phi maps the scalar part
/// of A onto the scalar part of phi[A], by explicit enumeration.
Report hom_target_scalar_check(int max_m = 6);

enum class SuiteLevel { Fast, Exhaustive };
std::vector<Report> lemma_suite(SuiteLevel level);

}  // namespace pgroups
