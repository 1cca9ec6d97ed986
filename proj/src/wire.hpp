#pragma once

#include <json.hpp>
#include <string>

#include "cases.hpp"
#include "criteria.hpp"
#include "extensions.hpp"
#include "groups.hpp"
#include "numbertheory.hpp"

namespace galois {

using Json = nlohmann::json;

// Wire conventions. Polynomials are arrays of coefficient strings, lowest
// degree first ("-2", "0", "1" is T^2 - 2); exact integers are also accepted
// on input. Orbit loci are such an array, or the strings "zero" / "infinity".
// An orbit's "rational" flag is emitted for readers but rederived on parse.
// All parse functions throw ParseError on malformed input; descriptors are
// additionally validated (DomainError on inconsistent mathematics).

Json poly_to_json(const RatPoly& p);
RatPoly poly_from_json(const Json& j);

Json group_to_json(const GroupRef& g);
GroupRef group_from_json(const Json& j);

Json class_to_json(const ClassRef& c);
ClassRef class_from_json(const Json& j);

Json field_to_json(const FieldInfo& f);
FieldInfo field_from_json(const Json& j);

Json descriptor_to_json(const ExtensionDescriptor& e);
ExtensionDescriptor descriptor_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json report_to_json(const CriterionReport& r);
Json case_report_to_json(const CaseReport& r);

Json specialization_to_json(const SpecializationResult& s);
Json census_to_json(const PrimeCensus& c);
Json genus_to_json(const GenusBound& g);
Json group_info_to_json(const PermGroup& g);

// Parses text, or reads the file when the argument names one on disk.
Json json_from_arg(const std::string& arg);

}  // namespace galois
