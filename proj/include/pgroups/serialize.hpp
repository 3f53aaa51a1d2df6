#pragma once

#include <string>

#include "json.hpp"
#include "pgroups/classify.hpp"
#include "pgroups/field.hpp"
#include "pgroups/gammal1.hpp"
#include "pgroups/group.hpp"
#include "pgroups/report.hpp"
#include "pgroups/squaring.hpp"

namespace pgroups {

using json = nlohmann::json;

json field_to_json(const Field& f);
/// Rebuilds the field and checks the stored omega; throws std::invalid_argument.
Field field_from_json(const json& j);

json to_json(const StandardParams& P);
json to_json(const HomTarget& T);
json to_json(const Squaring& sq);
json to_json(const Predatum& P);
json to_json(const GroupSpec& spec);
json to_json(const Report& r);
json to_json(const InvariantProfile& p);
json to_json(const SemilinearMap& g);
json to_json(const GammaWitness& w);
json to_json(const LinearMap& M);
json to_json(const GlWitness& w);
json to_json(const ClassEntry& e);
json to_json(const Classification& c);
json to_json(const NonstandardResult& r);
json to_json(const ExceptionalIdentification& id);

/// The parsers throw std::invalid_argument on missing or malformed fields.
StandardParams standard_params_from_json(const json& j);
HomTarget hom_target_from_json(const json& j);
Squaring squaring_from_json(const json& j);
Predatum predatum_from_json(const json& j);
GroupSpec group_spec_from_json(const json& j);

/// Accepts a GroupSpec or Squaring JSON document, or PC presentation text.
GroupSpec load_group_spec(const std::string& text);
/// Accepts a Squaring, Predatum or GroupSpec JSON document, or PC text.
Squaring load_squaring(const std::string& text);

}  // namespace pgroups
