#include "hilbext/certify.hpp"

namespace hilbext {

const char* verdict_name(Verdict v) noexcept {
    return v == Verdict::infinitely_extendable ? "infinitely-extendable" : "fails-at";
}

long default_n0(const ResolutionData& data) noexcept { return min_ambient(data); }

IntPoly delta_poly(const ResolutionData& data, ZeroTermConvention conv) {
    const IntPoly dim = dimension_poly(data, {conv});
    const IntPoly budget({Rational(2), Rational(1)});
    return dim.shifted(1) - dim - budget;
}

bool extendable_at(const ResolutionData& data, long n, ZeroTermConvention conv) {
    if (n < min_ambient(data)) {
        throw AmbientTooSmall("ambient dimension n = " + std::to_string(n) + " is below codim + 1 = " +
                              std::to_string(min_ambient(data)));
    }
    const BigInt grow = stratum_dimension(data, n + 1, {conv}) - stratum_dimension(data, n, {conv});
    return grow >= BigInt(n + 2);
}

ExtendabilityCertificate certify(const ResolutionData& data, long n0, ZeroTermConvention conv) {
    ExtendabilityCertificate cert;
    cert.data = canonical(data);
    if (n0 < min_ambient(cert.data)) {
        throw AmbientTooSmall("n0 = " + std::to_string(n0) + " is below codim + 1 = " +
                              std::to_string(min_ambient(cert.data)));
    }
    cert.n0 = n0;
    cert.convention = conv;
    cert.dimension_poly = dimension_poly(cert.data, {conv});
    cert.delta_poly = delta_poly(cert.data, conv);
    cert.proof = certify_nonneg(cert.delta_poly, n0);
    if (const auto* ce = std::get_if<Counterexample>(&cert.proof)) {
        cert.verdict = Verdict::fails_at;
        cert.witness = ce->witness;
    } else {
        cert.verdict = Verdict::infinitely_extendable;
    }
    cert.non_ci = !is_complete_intersection(cert.data);
    return cert;
}

std::optional<std::string> verify_certificate(const ExtendabilityCertificate& cert) {
    auto v = validate(cert.data);
    if (!v.ok()) return "certificate data is invalid";
    if (!(*v.data == cert.data)) return "certificate data is not in canonical form";
    if (cert.n0 < min_ambient(cert.data)) return "n0 below codim + 1";
    if (!(cert.dimension_poly == dimension_poly(cert.data, {cert.convention}))) return "dimension polynomial mismatch";
    if (!(cert.delta_poly == delta_poly(cert.data, cert.convention))) return "delta polynomial mismatch";
    if (auto problem = check_proof(cert.delta_poly, cert.n0, cert.proof)) return "proof rejected: " + *problem;
    const bool refuted = is_counterexample(cert.proof);
    if (refuted != (cert.verdict == Verdict::fails_at)) return "verdict disagrees with proof kind";
    if (refuted) {
        if (!cert.witness || *cert.witness != std::get<Counterexample>(cert.proof).witness) return "witness mismatch";
    } else if (cert.witness) {
        return "witness present on a positive verdict";
    }
    if (cert.non_ci == is_complete_intersection(cert.data)) return "non_ci flag mismatch";
    return std::nullopt;
}

} // namespace hilbext
