#include "pgroups/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "pgroups/numtheory.hpp"

namespace pgroups {

namespace {

using i64 = std::int64_t;

i64 units(int k) { return (i64{1} << k) - 1; }

i64 mod(i64 a, i64 n) {
  if (n == 1) return 0;
  const i64 r = a % n;
  return r < 0 ? r + n : r;
}

int log2_floor(std::uint64_t x) { return 63 - std::countl_zero(x); }

struct SingerKey {
  SingerVariant variant;
  int k;  // variant A only, reduced to min(k, m - k)
};

SingerKey singer_key(const Predatum& P) {
  const int m = P.squaring.m, n = P.squaring.n;
  if (n == m) {
    std::uint64_t e = static_cast<std::uint64_t>(P.target.epsilon_exp);
    if (e == 0) throw std::invalid_argument("not a Singer predatum");
    while (e % 2 == 0) e /= 2;
    const std::uint64_t t = e - 1;
    if (t == 0 || !std::has_single_bit(t)) throw std::invalid_argument("not a Singer exponent");
    const int k = log2_floor(t);
    return {SingerVariant::A, std::min(k, m - k)};
  }
  if (2 * n == m) return {SingerVariant::B, 0};
  throw std::invalid_argument("not a Singer predatum");
}

std::string singer_label(int m, SingerKey key) {
  if (key.variant == SingerVariant::A)
    return "A(" + std::to_string(m) + ",frob^" + std::to_string(key.k) + ")";
  if (m == 2) return "Q8";
  return "B(" + std::to_string(m / 2) + ",1)";
}

}  // namespace

GroupSpec homocyclic_spec(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("homocyclic rank out of range");
  GroupSpec spec(n, n);
  for (int i = 0; i < n; ++i) spec.sigma[i] = Vec{1} << i;
  return spec;
}

std::vector<Predatum> enumerate_singer(int m) {
  if (m < 1 || m > 20) throw std::invalid_argument("m out of range");
  std::vector<Predatum> out;
  const i64 Q = units(m);
  auto push = [&](SingerVariant v, int n, int l, int k) {
    for (i64 s = 0; s < units(n); ++s) {
      Predatum P = singer_squaring(m, v, l, k, s);
      const PredatumReport r = validate_predatum(P);
      if (!r.ok())
        throw std::logic_error("Singer predatum failed validation: " + r.failures.front());
      out.push_back(std::move(P));
    }
  };
  for (int k = 1; k < m; ++k) {
    if (nu_p(static_cast<u64>(k), 2) < nu_p(static_cast<u64>(m), 2)) continue;
    for (int l = 0; (i64{1} << l) * ((i64{1} << k) + 1) <= Q; ++l) push(SingerVariant::A, m, l, k);
  }
  if (m % 2 == 0) {
    const int n = m / 2;
    for (int l = 0; (i64{1} << l) * ((i64{1} << n) + 1) <= Q; ++l) push(SingerVariant::B, n, l, 0);
  }
  return out;
}

std::vector<ClassEntry> label_singer_classes(const std::vector<Predatum>& predata) {
  std::vector<ClassEntry> out;
  std::map<std::string, std::size_t> index;
  for (const Predatum& P : predata) {
    const int m = P.squaring.m;
    const SingerKey key = singer_key(P);
    const std::string label = singer_label(m, key);
    auto it = index.find(label);
    if (it == index.end()) {
      ClassEntry e;
      e.label = label;
      e.order = std::uint64_t{1} << (m + P.squaring.n);
      e.witness = singer_squaring(m, key.variant, 0, key.variant == SingerVariant::A ? key.k : 0, 0);
      e.spec = from_squaring(e.witness->squaring);
      e.provenance = key.variant == SingerVariant::A ? "singer-a" : "singer-b";
      e.members = 0;
      it = index.emplace(label, out.size()).first;
      out.push_back(std::move(e));
    }
    ClassEntry& cls = out[it->second];
    auto w = gammal1_equivalent(cls.witness->squaring, P.squaring);
    if (w) {
      cls.merge_witnesses.push_back(*w);
      ++cls.members;
      continue;
    }
    ClassEntry lone;
    lone.label = label + "?";
    lone.order = cls.order;
    lone.witness = P;
    lone.spec = from_squaring(P.squaring);
    lone.provenance = cls.provenance;
    lone.notes.push_back("undecided: no Gamma L_1 witness to the class representative");
    out.push_back(std::move(lone));
  }
  return out;
}

bool epsilon_filter(int m, std::int64_t d, std::int64_t epsilon) {
  const i64 Q = units(m);
  if (d < 1 || Q % d != 0) return false;
  int two = 0, at_most_two = 0;
  for (i64 x = 0; x < d; ++x) {
    i64 k = mod(epsilon + x * (Q / d), Q);
    if (k == 0) k = Q;
    const int digits = std::popcount(static_cast<std::uint64_t>(k));
    if (digits == 2) ++two;
    if (digits <= 2) ++at_most_two;
  }
  return two >= 1 && at_most_two >= 2;
}

NonstandardResult nonstandard_search(int m, std::uint64_t max_order) {
  if (m < 2 || m > 14) throw std::invalid_argument("m out of range");
  NonstandardResult R;
  R.m = m;
  const Field F(2, m);
  const i64 Q = units(m);
  const auto subgroups = enumerate_transitive_subgroups(m);
  R.transitive_subgroups = subgroups.size();
  if (subgroups.empty()) R.log.push_back("no transitive subgroup without the scalars");
  for (const StandardParams& A : subgroups) {
    for (int n = 2; n <= m; ++n) {
      if (m % n != 0) continue;
      if (max_order != 0 && (m + n >= 64 || (std::uint64_t{1} << (m + n)) > max_order)) continue;
      const SubfieldView view(F, n);
      const auto classes = enumerate_hom_targets(m, A, n, &epsilon_filter);
      R.targets += classes.size();
      for (const HomTargetClass& tc : classes) {
        const HomTarget& T = tc.preimages.front();
        // only exponents eps + x Q/d can carry coefficients
        std::vector<std::uint64_t> slots;
        for (i64 x = 0; x < A.d; ++x) {
          i64 k = mod(T.epsilon_exp + x * (Q / A.d), Q);
          slots.push_back(static_cast<std::uint64_t>(k == 0 ? Q : k));
        }
        for (Elem s1 : sigma1_solutions(F, A, T)) {
          ++R.candidates;
          const auto values = coset_monomial_function(F, A, T, s1);
          std::vector<Elem> coeffs(F.size(), 0);
          for (auto k : slots) coeffs[k] = F.interpolation_coefficient(values, k);
          for (Elem x = 0; x < F.size(); ++x) {
            Elem acc = 0;
            for (auto k : slots) acc = F.add(acc, F.mul(coeffs[k], F.pow(x, static_cast<i64>(k))));
            if (acc != values[x])
              throw std::logic_error("coset-monomial function is not supported on its coset exponents");
          }
          const CriterionResult crit = biadditivity_criterion(coeffs);
          if (!crit.biadditive || !crit.nontrivial) {
            ++R.criterion_failed;
            continue;
          }
          if (crit.exponents.size() == 1) {
            ++R.monomial_discarded;
            continue;
          }
          if (!std::all_of(values.begin(), values.end(), [&](Elem v) { return view.contains(v); })) {
            ++R.subfield_failed;
            continue;
          }
          Predatum P{to_squaring(view, values), A, T};
          if (!is_surjective(P.squaring) || !form_surjective(P.squaring)) {
            ++R.not_surjective;
            continue;
          }
          const PredatumReport rep = validate_predatum(P);
          if (!rep.ok()) {
            ++R.invalid;
            R.log.push_back("rejected " + to_string(A) + " n=" + std::to_string(n) + ": " +
                            rep.failures.front());
            continue;
          }
          bool merged = false;
          for (NonstandardClass& cls : R.classes) {
            if (cls.representative.squaring.n != n) continue;
            if (auto w = gammal1_equivalent(cls.representative.squaring, P.squaring)) {
              cls.witnesses.push_back(*w);
              merged = true;
              break;
            }
          }
          if (!merged) R.classes.push_back({std::move(P), {}});
        }
      }
    }
  }
  if (R.monomial_discarded > 0)
    R.log.push_back(std::to_string(R.monomial_discarded) +
                    " monomial candidates discarded (they repeat Singer classes)");
  return R;
}

HigmanCheck higman_check(std::int64_t zeta_exp, std::int64_t c_exp, std::int64_t expected_eps) {
  const Field F(2, 6);
  HigmanCheck h;
  h.zeta_exp = zeta_exp;
  h.c_exp = c_exp;
  h.expected_eps = mod(expected_eps, 63);
  const Elem zeta = F.exp(zeta_exp);
  if (F.in_subfield(zeta, 3)) throw std::invalid_argument("zeta must lie outside F_8");
  const auto sigma = sigma_c_values(F, F.exp(c_exp));
  std::vector<Elem> f8;
  for (Elem x = 0; x < F.size(); ++x)
    if (F.in_subfield(x, 3)) f8.push_back(x);
  auto form = [&](Elem a, Elem b, Elem eps) {
    return F.add(F.add(F.pow(a, 3), F.mul(eps, F.mul(F.pow(a, 2), b))), F.pow(b, 3));
  };
  for (Elem eps : f8) {
    bool hit = false;
    for (int swap = 0; swap < 2 && !hit; ++swap)
      for (Elem lambda : f8) {
        if (lambda == 0) continue;
        bool all = true;
        for (Elem k1 : f8) {
          for (Elem k2 : f8) {
            const Elem chi = F.add(k1, F.mul(k2, zeta));
            const Elem rhs = swap ? form(k2, k1, eps) : form(k1, k2, eps);
            if (sigma[chi] != F.mul(lambda, rhs)) {
              all = false;
              break;
            }
          }
          if (!all) break;
        }
        if (all) {
          hit = true;
          if (h.found_eps.empty()) {
            h.lambda_exp = F.log(lambda);
            h.swapped = swap == 1;
          }
          break;
        }
      }
    if (hit) h.found_eps.push_back(eps == 0 ? -1 : F.log(eps));
  }
  return h;
}

bool ExceptionalIdentification::ok() const {
  if (!to_sigma_omega || x9_equivalent) return false;
  return std::all_of(checks.begin(), checks.end(), [](const HigmanCheck& c) { return c.ok(); });
}

ExceptionalIdentification identify_exceptional(const Predatum& P) {
  if (P.squaring.m != 6 || P.squaring.n != 3) throw std::invalid_argument("expected an m = 6, n = 3 predatum");
  ExceptionalIdentification out;
  const Squaring so = sigma_omega();
  out.to_sigma_omega = gammal1_equivalent(P.squaring, so);
  out.checks.push_back(higman_check(13, 1, 9));
  out.checks.push_back(higman_check(44, 1, 18));
  out.checks.push_back(higman_check(25, 2, 36));
  out.x9_equivalent = gammal1_equivalent(P.squaring, monomial_squaring(6, 3, 9)).has_value();
  ClassEntry& e = out.entry;
  e.label = "B(3,theta,eps)";
  e.order = 512;
  e.witness = P;
  e.spec = from_squaring(P.squaring);
  e.provenance = "nonstandard";
  if (out.to_sigma_omega) e.merge_witnesses.push_back(*out.to_sigma_omega);
  for (const HigmanCheck& c : out.checks)
    e.notes.push_back("zeta=w^" + std::to_string(c.zeta_exp) + " c=w^" + std::to_string(c.c_exp) +
                      (c.ok() ? " gives eps=w^" + std::to_string(c.expected_eps)
                              : std::string(" does not give the expected eps")));
  return out;
}

void certify_entry(ClassEntry& entry) {
  entry.profile = invariant_profile(entry.spec);
  const bool abelian = entry.profile.center_size == entry.profile.order;
  if (abelian) {
    entry.orbits = brute_force_orbits(entry.spec).orbits;
    entry.orbit_method = "brute-force";
  } else {
    entry.orbits = orbit_count(entry.spec).orbits;
    entry.orbit_method = "pair-group";
  }
  if (entry.witness) {
    const PredatumReport r = validate_predatum(*entry.witness);
    if (!r.ok()) entry.notes.push_back("witness invalid: " + r.failures.front());
  }
}

bool Classification::ok() const {
  for (const ClassEntry& e : entries) {
    if (e.orbits != 3) return false;
    for (const auto& note : e.notes)
      if (note.rfind("witness invalid", 0) == 0 || note.rfind("undecided", 0) == 0) return false;
  }
  return std::none_of(certificates.begin(), certificates.end(),
                      [](const Certificate& c) { return c.kind == "undecided"; });
}

Classification theorem_list(std::uint64_t max_order) {
  Classification C;
  C.max_order = max_order;
  if (max_order < 4) return C;
  const int K = log2_floor(max_order);
  if (K > 24) throw std::invalid_argument("max_order too large");

  for (int n = 1; 2 * n <= K; ++n) {
    ClassEntry e;
    e.label = "Homocyclic(" + std::to_string(n) + ")";
    e.order = std::uint64_t{1} << (2 * n);
    e.spec = homocyclic_spec(n);
    e.provenance = "homocyclic";
    C.entries.push_back(std::move(e));
  }

  for (int m = 1; m <= K; ++m) {
    // variant A has order 2^(2m), variant B 2^(3m/2)
    const bool a_fits = 2 * m <= K;
    const bool b_fits = m % 2 == 0 && m + m / 2 <= K;
    if (!a_fits && !b_fits) continue;
    std::vector<Predatum> predata;
    for (Predatum& P : enumerate_singer(m))
      if (P.squaring.m + P.squaring.n <= K) predata.push_back(std::move(P));
    for (ClassEntry& e : label_singer_classes(predata)) C.entries.push_back(std::move(e));
  }

  for (int m = 2; m + 2 <= K; ++m) {
    NonstandardResult R = nonstandard_search(m, max_order);
    for (auto& line : R.log) C.notes.push_back("m=" + std::to_string(m) + ": " + line);
    int idx = 0;
    for (NonstandardClass& cls : R.classes) {
      ClassEntry e;
      if (m == 6 && cls.representative.squaring.n == 3) {
        ExceptionalIdentification id = identify_exceptional(cls.representative);
        e = std::move(id.entry);
        if (!id.ok()) e.notes.push_back("undecided: exceptional identification failed");
      } else {
        e.label = "Nonstandard(" + std::to_string(m) + "," + std::to_string(cls.representative.squaring.n) +
                  ")#" + std::to_string(idx);
        e.order = std::uint64_t{1} << (m + cls.representative.squaring.n);
        e.witness = cls.representative;
        e.spec = from_squaring(cls.representative.squaring);
        e.provenance = "nonstandard";
      }
      e.members = 1 + cls.witnesses.size();
      for (auto& w : cls.witnesses) e.merge_witnesses.push_back(w);
      ++idx;
      C.entries.push_back(std::move(e));
    }
  }

  for (ClassEntry& e : C.entries) certify_entry(e);
  std::stable_sort(C.entries.begin(), C.entries.end(), [](const ClassEntry& a, const ClassEntry& b) {
    return a.order != b.order ? a.order < b.order : a.label < b.label;
  });

  for (std::size_t i = 0; i < C.entries.size(); ++i)
    for (std::size_t j = i + 1; j < C.entries.size(); ++j) {
      const ClassEntry &a = C.entries[i], &b = C.entries[j];
      Certificate c{i, j, "", ""};
      if (a.order != b.order) {
        c.kind = "order";
        c.detail = std::to_string(a.order) + " vs " + std::to_string(b.order);
      } else if (!(a.profile == b.profile)) {
        c.kind = "profile";
        c.detail = to_string(a.profile) + " | " + to_string(b.profile);
      } else {
        c.kind = "undecided";
        c.detail = "equal invariant profiles and no equivalence witness";
      }
      C.certificates.push_back(std::move(c));
    }
  return C;
}

}  // namespace pgroups
