#pragma once

#include "hilbext/exact.hpp"
#include "hilbext/resolution.hpp"

#include <map>
#include <span>
#include <string>

namespace hilbext {

/// How the codim-3 formula treats first-sum pairs i < j with syz_j - gens_i = 0.
enum class ZeroTermConvention {
    exclude,  // drop C(n, n) = 1 terms; reproduces the worked r = 7 example
    include,  // literal reading of the displayed sum
};

const char* convention_name(ZeroTermConvention c) noexcept;
/// "exclude" or "include"; throws std::invalid_argument otherwise.
ZeroTermConvention parse_convention(std::string_view text);

/// Conventions in effect for one dimension computation.
struct Conventions {
    /// Codim 2: a generator/syzygy pair with equal degrees is counted once, in the
    /// syz >= gen sum. Fixed; recorded for reports.
    static constexpr const char* equality_pair = "once";
    ZeroTermConvention zero_term = ZeroTermConvention::exclude;
};

/// Dimension of the codim-2 ACM stratum in Hilb(P^n), by direct binomial summation.
BigInt psi(const Codim2Data& data, long n);
/// The same dimension assembled symbolically as a polynomial in n.
IntPoly psi_poly(const Codim2Data& data);

/// Dimension of the codim-3 arithmetically Gorenstein stratum in Hilb(P^n).
BigInt phi(const Codim3GorData& data, long n, ZeroTermConvention conv = ZeroTermConvention::exclude);
IntPoly phi_poly(const Codim3GorData& data, ZeroTermConvention conv = ZeroTermConvention::exclude);

/// Dispatch on the data kind.
BigInt stratum_dimension(const ResolutionData& data, long n, Conventions conv = {});
IntPoly dimension_poly(const ResolutionData& data, Conventions conv = {});

struct StratumDimension {
    ResolutionData data;
    std::map<long, BigInt> at_n;
    IntPoly as_poly;
    Conventions conventions;
};

/// Samples the stratum dimension at each n and attaches its polynomial form.
StratumDimension describe_dimension(const ResolutionData& data, std::span<const long> ns, Conventions conv = {});

} // namespace hilbext
