#pragma once

#include <string>

#include "json.hpp"
#include "superchar/heilbronn.hpp"

namespace superchar {

using Json = nlohmann::ordered_json;

/// Parses a file; errors become InvalidInput with the path and parser position.
Json read_json_file(const std::string& path);

Json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

/// "group/v1": {"name", "cayley"} or {"name", "degree", "generators"}.
Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j, int max_order = GroupLimits{}.max_order);

/// "chartable/v1". Reading checks class data against the group, then
/// accepts the rows only if orthogonality holds.
Json table_to_json(const CharacterTable& t);
TablePtr table_from_json(const Json& j, const GroupPtr& g);
/// Same checks on class data, rows returned unverified.
std::vector<ClassFunction> table_rows_from_json(const Json& j, const GroupPtr& g);

/// "sct/v1". Accepts "class_partition" (class indices) or
/// "element_partition" (raw elements).
Json theory_to_json(const SupercharacterTheory& t);
TheoryPtr theory_from_json(const Json& j, const TablePtr& t);

/// "family/v1": entries of {"subgroup": [elements], "theory": "classical" |
/// "maximal" | {"irr_partition", "class_partition"}}.
Json family_to_json(const CompatibleFamily& f);
FamilyPtr family_from_json(const Json& j, const GroupPtr& g, const DixonOptions& dixon = {});

/// "nsys/v1".
Json nsys_to_json(const NSystem& n, const std::string& family_ref);
std::vector<BigInt> base_from_json(const Json& j, std::size_t blocks);

/// "uvdw/v1".
Json certificate_to_json(const DecompositionCertificate& c);
DecompositionCertificate certificate_from_json(const Json& j, const GroupPtr& g);

/// "classfn/v1": {"group", "values": [cyclotomic per class]}.
Json class_function_to_json(const ClassFunction& f);
ClassFunction class_function_from_json(const Json& j, const GroupPtr& g);

Json report_to_json(const Report& r);

}  // namespace superchar
