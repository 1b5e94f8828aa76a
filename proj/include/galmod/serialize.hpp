#pragma once

#include <json.hpp>

#include "galmod/chars.hpp"
#include "galmod/cyclo.hpp"
#include "galmod/fields.hpp"
#include "galmod/gauss.hpp"
#include "galmod/relk.hpp"
#include "galmod/resolvends.hpp"
#include "galmod/torsion.hpp"

namespace galmod {

using Json = nlohmann::json;

// CycloNumber <-> {"level": N, "coeffs": ["p/q", ...]}
Json cyclo_to_json(const CycloNumber& a);
CycloNumber cyclo_from_json(const Json& j);

// CharFn <-> [{"character": [e...], "value": cyclo}, ...] in enumeration order
Json charfn_to_json(const CharFn& f);
CharFn charfn_from_json(const FinAbGroup& g, const Json& j);

// Field descriptor {"conductor": f, "kernel_generators": [...]}
Json field_to_json(const AbelianField& L);
AbelianField field_from_json(const Json& j);

// RelKRep {"group": [...], "finite": {"p": charfn}, "global": charfn}
Json relk_to_json(const RelKRep& r);
RelKRep relk_from_json(const Json& j);

// TorsorDescriptor {"gamma": [...], "level": f, "hom": [[unit, [e...]], ...]}
Json torsor_to_json(const TorsorDescriptor& t);
TorsorDescriptor torsor_from_json(const Json& j);

// GroupAlgebraElement {"gamma": [...], "level": N, "coeffs": [[[e...], cyclo], ...]}
Json ga_to_json(const GroupAlgebraElement& a);
GroupAlgebraElement ga_from_json(const Json& j);

// CharTable {"name", "class_sizes", "degrees", "power_map_2", "values"}
Json chartable_to_json(const CharTable& t);
CharTable chartable_from_json(const Json& j);

// SupplementedRamData {"places": [{"residue_degree", "invariant_dims"}]}
Json ramdata_to_json(const SupplementedRamData& r);
SupplementedRamData ramdata_from_json(const Json& j);

Json torsion_to_json(const TorsionModule& t);
Json cht_to_json(const ChtReport& r);

std::string bigfloat_to_string(const BigFloat& x);

}  // namespace galmod
