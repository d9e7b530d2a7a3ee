#pragma once

#include "hilbext/exact.hpp"
#include "hilbext/resolution.hpp"
#include "hilbext/strata.hpp"

#include <optional>
#include <string>

namespace hilbext {

enum class Verdict {
    infinitely_extendable,  // delta(n) >= 0 for every n >= n0
    fails_at,               // delta(witness) < 0
};

const char* verdict_name(Verdict v) noexcept;

/// Cone extensions of a fixed section form a family of dimension n + 1; the
/// criterion asks the stratum to grow by at least that plus one.
inline constexpr const char* cone_locus_note =
    "cone extensions over a fixed hyperplane section form an (n+1)-dimensional family; "
    "criterion dim(n+1) >= dim(n) + (n+1) + 1 is sufficient, not necessary";

struct ExtendabilityCertificate {
    ResolutionData data;
    long n0 = 0;
    ZeroTermConvention convention = ZeroTermConvention::exclude;
    IntPoly dimension_poly;
    IntPoly delta_poly;
    PositivityProof proof;
    Verdict verdict = Verdict::fails_at;
    std::optional<long> witness;
    bool non_ci = false;

    [[nodiscard]] bool infinitely_extendable() const noexcept { return verdict == Verdict::infinitely_extendable; }
    friend bool operator==(const ExtendabilityCertificate&, const ExtendabilityCertificate&) = default;
};

/// 3 for codim 2, 4 for codim 3.
[[nodiscard]] long default_n0(const ResolutionData& data) noexcept;

/// dim(n+1) - dim(n) - (n+2) as a polynomial in n.
IntPoly delta_poly(const ResolutionData& data, ZeroTermConvention conv = ZeroTermConvention::exclude);

/// Pointwise criterion at one ambient dimension, from direct dimension evaluation.
bool extendable_at(const ResolutionData& data, long n, ZeroTermConvention conv = ZeroTermConvention::exclude);

ExtendabilityCertificate certify(const ResolutionData& data, long n0,
                                 ZeroTermConvention conv = ZeroTermConvention::exclude);
inline ExtendabilityCertificate certify(const ResolutionData& data) { return certify(data, default_n0(data)); }

/// Re-derives everything in the certificate from its data and re-checks the proof object.
/// Returns the first discrepancy, or nullopt.
std::optional<std::string> verify_certificate(const ExtendabilityCertificate& cert);

} // namespace hilbext
