#pragma once
// JSON encodings of the library's values. Cones are written as ray-index lists.

#include <json.hpp>

#include "pfan/arrangement.hpp"
#include "pfan/category.hpp"
#include "pfan/cw_complex.hpp"
#include "pfan/picture_group.hpp"

namespace pfan {

using nlohmann::json;

json integer_json(const Integer& x);
Integer integer_from_json(const json& j);
json vector_json(const IntVector& v);
IntVector vector_from_json(const json& j);

/// {"dim": n, "rays": [[...]], "max_cones": [[ray indices]]}; "cones" is accepted on input
json fan_to_json(const Fan& fan);
Fan fan_from_json(const json& j);

/// Blocks as lists of cones; unlisted cones are singletons on input.
json partition_to_json(const Fan& fan, const Partition& p);
Partition partition_from_json(const Fan& fan, const json& j);
/// Blocks as lists of cone labels, for display.
json partition_labels_json(const Fan& fan, const Partition& p);

/// {"covers": [[lower cone, upper cone], ...]}
json poset_to_json(const FanPoset& poset);
FanPoset poset_from_json(const Fan& fan, const json& j);

/// {"dim": n, "normals": [[...]]}
json arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const json& j);

/// {"generators": [{"name", "rays"}], "relators": [["a", "-b"], ...], "text": ...}
json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);
json abelianization_json(const Abelianization& a);

json category_to_json(const Category& cat);
json axiom_report_json(const AxiomReport& r);
json cw_to_json(const CWComplex& cw);
json shards_to_json(const Arrangement& arr, const Fan& fan, const std::vector<Shard>& shards);

}  // namespace pfan
