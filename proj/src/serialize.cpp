#include "pgroups/serialize.hpp"

#include <cstdio>
#include <stdexcept>

namespace pgroups {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

json field_to_json(const Field& f) {
  return {{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}, {"omega", f.omega()}};
}

Field field_from_json(const json& j) {
  const int p = get<int>(j, "p"), m = get<int>(j, "m");
  Field f = j.contains("modulus") ? Field(p, m, get<std::vector<int>>(j, "modulus")) : Field(p, m);
  if (j.contains("omega") && get<Elem>(j, "omega") != f.omega())
    throw std::invalid_argument("stored omega does not match the modulus");
  return f;
}

json to_json(const StandardParams& P) {
  return {{"p", P.p}, {"m", P.m}, {"d", P.d}, {"e", P.e}, {"s", P.s}};
}

StandardParams standard_params_from_json(const json& j) {
  StandardParams P{get<int>(j, "p"), get<int>(j, "m"), get<std::int64_t>(j, "d"), get<std::int64_t>(j, "e"),
                   get<int>(j, "s")};
  if (!is_valid(P)) throw std::invalid_argument("not a standard triple: " + to_string(P));
  return P;
}

json to_json(const HomTarget& T) {
  return {{"n", T.n}, {"u", T.u}, {"d_prime", T.d_prime}, {"e_pp", T.e_pp}, {"epsilon_exp", T.epsilon_exp}};
}

HomTarget hom_target_from_json(const json& j) {
  return {get<int>(j, "n"), get<std::int64_t>(j, "u"), get<std::int64_t>(j, "d_prime"),
          get<std::int64_t>(j, "e_pp"), get<std::int64_t>(j, "epsilon_exp")};
}

json to_json(const Squaring& sq) { return {{"m", sq.m}, {"n", sq.n}, {"table", sq.table}}; }

Squaring squaring_from_json(const json& j) {
  Squaring sq{get<int>(j, "m"), get<int>(j, "n"), get<std::vector<Vec>>(j, "table")};
  if (sq.m < 1 || sq.m > 20 || sq.n < 1 || sq.n > 20) throw std::invalid_argument("dimensions out of range");
  if (sq.table.size() != (std::size_t{1} << sq.m)) throw std::invalid_argument("table must have 2^m entries");
  for (Vec v : sq.table)
    if (v >> sq.n) throw std::invalid_argument("table entry exceeds n bits");
  return sq;
}

json to_json(const Predatum& P) {
  json j = to_json(P.squaring);
  j["a_params"] = to_json(P.a_params);
  j["target"] = to_json(P.target);
  return j;
}

Predatum predatum_from_json(const json& j) {
  return {squaring_from_json(j), standard_params_from_json(field(j, "a_params")),
          hom_target_from_json(field(j, "target"))};
}

json to_json(const GroupSpec& spec) {
  json pi = json::object();
  for (int i = 0; i < spec.m; ++i)
    for (int j = i + 1; j < spec.m; ++j)
      if (spec.pi_at(i, j)) pi[std::to_string(i + 1) + "," + std::to_string(j + 1)] = spec.pi_at(i, j);
  return {{"m", spec.m}, {"n", spec.n}, {"sigma", spec.sigma}, {"pi", pi}};
}

GroupSpec group_spec_from_json(const json& j) {
  const int m = get<int>(j, "m"), n = get<int>(j, "n");
  if (m < 0 || n < 0 || m + n > 40 || n > 32) throw std::invalid_argument("dimensions out of range");
  GroupSpec spec(m, n);
  spec.sigma = get<std::vector<Vec>>(j, "sigma");
  if (static_cast<int>(spec.sigma.size()) != m) throw std::invalid_argument("sigma needs m entries");
  if (j.contains("pi")) {
    const json& pi = j.at("pi");
    if (!pi.is_object()) throw std::invalid_argument("pi must map \"i,j\" to vectors");
    for (const auto& [key, value] : pi.items()) {
      int a = 0, b = 0;
      char extra = 0;
      if (std::sscanf(key.c_str(), "%d,%d%c", &a, &b, &extra) != 2 || a < 1 || b <= a || b > m)
        throw std::invalid_argument("bad pi key '" + key + "'");
      if (!value.is_number_unsigned()) throw std::invalid_argument("pi values must be unsigned");
      spec.set_pi(a - 1, b - 1, value.get<Vec>());
    }
  }
  Group check(spec);  // validates bit widths
  return spec;
}

json to_json(const Report& r) {
  json j = {{"claim", r.claim}, {"range", r.range}, {"violations", r.violations}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

json to_json(const InvariantProfile& p) {
  auto hist = [](const auto& h) {
    json o = json::object();
    for (const auto& [k, v] : h) o[std::to_string(k)] = v;
    return o;
  };
  return {{"order", p.order},
          {"order_histogram", hist(p.order_histogram)},
          {"center_size", p.center_size},
          {"derived_size", p.derived_size},
          {"commuting_pairs", p.commuting_pairs},
          {"centralizer_histogram", hist(p.centralizer_histogram)},
          {"abelian_over_frattini", hist(p.abelian_over_frattini)}};
}

json to_json(const SemilinearMap& g) { return {{"s", g.s}, {"e", g.e}}; }

json to_json(const GammaWitness& w) { return {{"gamma1", to_json(w.gamma1)}, {"gamma2", to_json(w.gamma2)}}; }

json to_json(const LinearMap& M) { return M.cols; }

json to_json(const GlWitness& w) { return {{"T", to_json(w.T)}, {"U", to_json(w.U)}}; }

json to_json(const ClassEntry& e) {
  json j = {{"label", e.label},         {"order", e.order},
            {"provenance", e.provenance}, {"members", e.members},
            {"orbits", e.orbits},       {"orbit_method", e.orbit_method},
            {"spec", to_json(e.spec)},  {"profile", to_json(e.profile)}};
  if (e.witness) j["witness"] = to_json(*e.witness);
  json ws = json::array();
  for (const auto& w : e.merge_witnesses) ws.push_back(to_json(w));
  j["merge_witnesses"] = ws;
  if (!e.notes.empty()) j["notes"] = e.notes;
  return j;
}

json to_json(const Classification& c) {
  json entries = json::array();
  for (const auto& e : c.entries) entries.push_back(to_json(e));
  json certs = json::array();
  for (const auto& x : c.certificates)
    certs.push_back({{"a", c.entries[x.a].label}, {"b", c.entries[x.b].label}, {"kind", x.kind}, {"detail", x.detail}});
  return {{"max_order", c.max_order}, {"ok", c.ok()}, {"entries", entries}, {"certificates", certs}, {"notes", c.notes}};
}

json to_json(const NonstandardResult& r) {
  json classes = json::array();
  for (const auto& cls : r.classes) {
    json w = json::array();
    for (const auto& x : cls.witnesses) w.push_back(to_json(x));
    classes.push_back({{"representative", to_json(cls.representative)}, {"merged", w}});
  }
  return {{"m", r.m},
          {"transitive_subgroups", r.transitive_subgroups},
          {"targets", r.targets},
          {"candidates", r.candidates},
          {"criterion_failed", r.criterion_failed},
          {"monomial_discarded", r.monomial_discarded},
          {"subfield_failed", r.subfield_failed},
          {"not_surjective", r.not_surjective},
          {"invalid", r.invalid},
          {"classes", classes},
          {"log", r.log}};
}

json to_json(const ExceptionalIdentification& id) {
  json checks = json::array();
  for (const auto& c : id.checks)
    checks.push_back({{"zeta_exp", c.zeta_exp},
                      {"c_exp", c.c_exp},
                      {"expected_eps_exp", c.expected_eps},
                      {"found_eps_exp", c.found_eps},
                      {"lambda_exp", c.lambda_exp},
                      {"swapped", c.swapped},
                      {"ok", c.ok()}});
  json j = {{"ok", id.ok()}, {"x9_equivalent", id.x9_equivalent}, {"higman_checks", checks}};
  if (id.to_sigma_omega) j["to_sigma_omega"] = to_json(*id.to_sigma_omega);
  return j;
}

GroupSpec load_group_spec(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty spec");
  if (text[first] != '{') return parse_pc_presentation(text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  if (j.contains("sigma")) return group_spec_from_json(j);
  if (j.contains("table")) return from_squaring(squaring_from_json(j));
  throw std::invalid_argument("expected a GroupSpec or Squaring document");
}

Squaring load_squaring(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty spec");
  if (text[first] != '{') return squaring_of_group(parse_pc_presentation(text));
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  if (j.contains("sigma")) return squaring_of_group(group_spec_from_json(j));
  return squaring_from_json(j);
}

}  // namespace pgroups
