#include "hilbext/json_io.hpp"

#include <limits>

namespace hilbext {

namespace {

const json& field(const json& doc, const char* key) {
    if (!doc.is_object()) throw SchemaError(std::string("expected an object holding '") + key + "'");
    auto it = doc.find(key);
    if (it == doc.end()) throw SchemaError(std::string("missing field '") + key + "'");
    return *it;
}

template <typename T>
T get_as(const json& doc, const char* key) {
    try {
        return field(doc, key).get<T>();
    } catch (const json::exception& e) {
        throw SchemaError(std::string("field '") + key + "': " + e.what());
    }
}

std::vector<int> int_list(const json& doc, const char* key) {
    const json& arr = field(doc, key);
    if (!arr.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array of integers");
    std::vector<int> out;
    for (const auto& v : arr) {
        if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

Rational rational_field(const json& v) {
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw SchemaError("expected a rational as a \"p/q\" string");
}

} // namespace

json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

json to_json(const ResolutionData& data) {
    return std::visit(
        [](const auto& d) {
            json doc;
            if constexpr (std::is_same_v<std::decay_t<decltype(d)>, Codim2Data>) {
                doc["kind"] = "codim2";
            } else {
                doc["kind"] = "codim3gor";
                doc["f"] = d.f;
            }
            doc["gens"] = d.gens;
            doc["syz"] = d.syz;
            return doc;
        },
        data);
}

ResolutionData resolution_from_json(const json& doc) {
    const auto kind = parse_kind(get_as<std::string>(doc, "kind"));
    if (kind == DataKind::codim2) return Codim2Data{int_list(doc, "gens"), int_list(doc, "syz")};
    Codim3GorData d;
    d.f = get_as<int>(doc, "f");
    d.gens = int_list(doc, "gens");
    if (doc.contains("syz")) {
        d.syz = int_list(doc, "syz");
    } else {
        for (int g : d.gens) d.syz.push_back(d.f - g);
    }
    return d;
}

json to_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rational_to_string(c));
    return arr;
}

IntPoly poly_from_json(const json& doc) {
    if (!doc.is_array()) throw SchemaError("polynomial must be an array of \"p/q\" strings");
    std::vector<Rational> coeffs;
    for (const auto& v : doc) coeffs.push_back(rational_field(v));
    return IntPoly(std::move(coeffs));
}

json to_json(const PositivityProof& proof) {
    json doc;
    if (const auto* b = std::get_if<NonnegBinomialBasis>(&proof)) {
        doc["kind"] = "nonneg-binomial-basis";
        doc["shift"] = b->shift;
        json coeffs = json::array();
        for (const auto& c : b->coefficients) coeffs.push_back(rational_to_string(c));
        doc["coefficients"] = coeffs;
    } else if (const auto* e = std::get_if<ExhaustiveToRootBound>(&proof)) {
        doc["kind"] = "exhaustive-to-root-bound";
        doc["n0"] = e->n0;
        doc["bound"] = e->bound;
        doc["leading_sign"] = e->leading_sign;
    } else {
        const auto& c = std::get<Counterexample>(proof);
        doc["kind"] = "counterexample";
        doc["witness"] = c.witness;
        doc["value"] = rational_to_string(c.value);
    }
    return doc;
}

PositivityProof proof_from_json(const json& doc) {
    const auto kind = get_as<std::string>(doc, "kind");
    if (kind == "nonneg-binomial-basis") {
        NonnegBinomialBasis b;
        b.shift = get_as<long>(doc, "shift");
        const json& coeffs = field(doc, "coefficients");
        if (!coeffs.is_array()) throw SchemaError("proof coefficients must be an array");
        for (const auto& c : coeffs) b.coefficients.push_back(rational_field(c));
        return b;
    }
    if (kind == "exhaustive-to-root-bound")
        return ExhaustiveToRootBound{get_as<long>(doc, "n0"), get_as<long>(doc, "bound"),
                                     get_as<int>(doc, "leading_sign")};
    if (kind == "counterexample") return Counterexample{get_as<long>(doc, "witness"), rational_field(field(doc, "value"))};
    throw SchemaError("unknown proof kind '" + kind + "'");
}

json to_json(const ExtendabilityCertificate& cert) {
    json doc;
    doc["data"] = to_json(cert.data);
    doc["n0"] = cert.n0;
    doc["phi_convention"] = convention_name(cert.convention);
    doc["dimension_poly"] = to_json(cert.dimension_poly);
    doc["delta_poly"] = to_json(cert.delta_poly);
    doc["proof"] = to_json(cert.proof);
    doc["verdict"] = verdict_name(cert.verdict);
    doc["witness"] = cert.witness ? json(*cert.witness) : json(nullptr);
    doc["non_ci"] = cert.non_ci;
    doc["criterion"] = cone_locus_note;
    return doc;
}

ExtendabilityCertificate certificate_from_json(const json& doc) {
    ExtendabilityCertificate cert;
    cert.data = resolution_from_json(field(doc, "data"));
    cert.n0 = get_as<long>(doc, "n0");
    cert.convention = doc.contains("phi_convention") ? parse_convention(get_as<std::string>(doc, "phi_convention"))
                                                     : ZeroTermConvention::exclude;
    cert.dimension_poly = poly_from_json(field(doc, "dimension_poly"));
    cert.delta_poly = poly_from_json(field(doc, "delta_poly"));
    cert.proof = proof_from_json(field(doc, "proof"));
    const auto verdict = get_as<std::string>(doc, "verdict");
    if (verdict == "infinitely-extendable") cert.verdict = Verdict::infinitely_extendable;
    else if (verdict == "fails-at") cert.verdict = Verdict::fails_at;
    else throw SchemaError("unknown verdict '" + verdict + "'");
    const json& witness = field(doc, "witness");
    if (!witness.is_null()) cert.witness = get_as<long>(doc, "witness");
    cert.non_ci = get_as<bool>(doc, "non_ci");
    return cert;
}

json to_json(const TowerCertificate& tower) {
    json doc = to_json(tower.base);
    doc["quadric_count"] = tower.quadric_count;
    doc["codim"] = tower.codim;
    doc["n"] = tower.n;
    doc["gen_degrees"] = tower.gen_degrees;
    doc["non_ci"] = tower.non_ci;
    doc["provenance"] = tower.provenance;
    return doc;
}

TowerCertificate tower_from_json(const json& doc) {
    TowerCertificate tower;
    tower.base = certificate_from_json(doc);
    tower.quadric_count = get_as<int>(doc, "quadric_count");
    tower.codim = get_as<int>(doc, "codim");
    tower.n = get_as<long>(doc, "n");
    tower.gen_degrees = int_list(doc, "gen_degrees");
    tower.non_ci = get_as<bool>(doc, "non_ci");
    tower.provenance = get_as<std::vector<std::string>>(doc, "provenance");
    return tower;
}

json to_json(const SearchConfig& config) {
    json doc;
    doc["kind"] = kind_name(config.kind);
    doc["max_generators"] = config.max_generators;
    doc["max_degree"] = config.max_degree;
    doc["max_f"] = config.max_f ? json(*config.max_f) : json(nullptr);
    doc["n0"] = config.n0;
    doc["require_non_ci"] = config.require_non_ci;
    doc["phi_convention"] = convention_name(config.phi_convention);
    return doc;
}

SearchConfig config_from_json(const json& doc) {
    SearchConfig config;
    config.kind = parse_kind(get_as<std::string>(doc, "kind"));
    config.max_generators = get_as<int>(doc, "max_generators");
    config.max_degree = get_as<int>(doc, "max_degree");
    if (doc.contains("max_f") && !doc["max_f"].is_null()) config.max_f = get_as<int>(doc, "max_f");
    config.n0 = doc.contains("n0") ? get_as<long>(doc, "n0") : (config.kind == DataKind::codim2 ? 3 : 4);
    if (doc.contains("require_non_ci")) config.require_non_ci = get_as<bool>(doc, "require_non_ci");
    if (doc.contains("phi_convention")) config.phi_convention = parse_convention(get_as<std::string>(doc, "phi_convention"));
    return config;
}

json to_json(const SearchReport& report) {
    json doc;
    doc["config"] = to_json(report.config);
    doc["candidate_count"] = report.candidate_count;
    json hits = json::array();
    for (const auto& h : report.hits) hits.push_back(to_json(h));
    doc["hits"] = hits;
    doc["rejected_counts"] = report.rejected_counts;
    return doc;
}

SearchReport report_from_json(const json& doc) {
    SearchReport report;
    report.config = config_from_json(field(doc, "config"));
    report.candidate_count = get_as<std::size_t>(doc, "candidate_count");
    for (const auto& h : field(doc, "hits")) report.hits.push_back(certificate_from_json(h));
    report.rejected_counts = get_as<std::map<std::string, std::size_t>>(doc, "rejected_counts");
    return report;
}

} // namespace hilbext
