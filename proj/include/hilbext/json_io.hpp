#pragma once

#include "hilbext/certify.hpp"
#include "hilbext/search.hpp"
#include "hilbext/tower.hpp"

#include "json.hpp"

#include <stdexcept>

namespace hilbext {

using json = nlohmann::json;

/// Raised when a document does not follow the expected shape.
class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// {"kind": "codim2"|"codim3gor", "gens": [...], "syz": [...], "f": int}
/// On input "syz" may be omitted for codim3gor; it is then f - gens.
json to_json(const ResolutionData& data);
ResolutionData resolution_from_json(const json& doc);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json big_to_json(const BigInt& v);

/// Coefficients low degree first, each as a "p/q" string.
json to_json(const IntPoly& p);
IntPoly poly_from_json(const json& doc);

json to_json(const PositivityProof& proof);
PositivityProof proof_from_json(const json& doc);

json to_json(const ExtendabilityCertificate& cert);
ExtendabilityCertificate certificate_from_json(const json& doc);

/// The certificate fields of the base, plus quadric_count, codim, n, gen_degrees, provenance.
json to_json(const TowerCertificate& tower);
TowerCertificate tower_from_json(const json& doc);

json to_json(const SearchConfig& config);
SearchConfig config_from_json(const json& doc);

json to_json(const SearchReport& report);
SearchReport report_from_json(const json& doc);

} // namespace hilbext
