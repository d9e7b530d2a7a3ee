#pragma once

#include "hilbext/exact.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hilbext {

/// Degree data of a codimension-2 ACM resolution
///   0 -> sum_j O(-syz_j) -> sum_i O(-gens_i) -> I_X -> 0
/// with s generators and s-1 syzygies.
struct Codim2Data {
    std::vector<int> gens;
    std::vector<int> syz;
    friend auto operator<=>(const Codim2Data&, const Codim2Data&) = default;
};

/// Degree data of a codimension-3 arithmetically Gorenstein (pfaffian) resolution
///   0 -> O(-f) -> sum_i O(-syz_i) -> sum_i O(-gens_i) -> I_X -> 0
/// with r odd, gens nondecreasing and syz_i = f - gens_i.
struct Codim3GorData {
    int f = 0;
    std::vector<int> gens;
    std::vector<int> syz;
    [[nodiscard]] int r() const noexcept { return static_cast<int>(gens.size()); }
    friend auto operator<=>(const Codim3GorData&, const Codim3GorData&) = default;
};

using ResolutionData = std::variant<Codim2Data, Codim3GorData>;

[[nodiscard]] int codim_of(const ResolutionData& data) noexcept;
/// Smallest ambient dimension the formulas are used at: codim + 1.
[[nodiscard]] inline long min_ambient(const ResolutionData& data) noexcept { return codim_of(data) + 1; }

enum class Violation {
    generator_count,   // s < 2, r < 3, or wrong number of syzygies
    non_positive_degree,
    balance,           // sum syz != sum gens (codim 2); (r-1) f != 2 sum gens (codim 3)
    even_r,
    symmetry,          // gens_i + syz_i != f (codim 3)
    ordering,          // gens_i > syz_i, i.e. 2 gens_i > f (codim 3)
    unrealizable,      // no minimal resolution has these degrees
};

[[nodiscard]] const char* violation_name(Violation v) noexcept;

struct Issue {
    Violation kind;
    std::string message;
};

/// Outcome of validation: the canonical data when valid, every violated invariant otherwise.
template <typename Data>
struct Validated {
    std::optional<Data> data;
    std::vector<Issue> errors;
    std::vector<std::string> warnings;
    [[nodiscard]] bool ok() const noexcept { return data.has_value(); }
};

/// Thrown by operations that require valid data.
class InvalidData : public std::invalid_argument {
public:
    InvalidData(std::string message, std::vector<Issue> issues)
        : std::invalid_argument(std::move(message)), issues_(std::move(issues)) {}
    [[nodiscard]] const std::vector<Issue>& issues() const noexcept { return issues_; }

private:
    std::vector<Issue> issues_;
};

/// Thrown when an ambient dimension is below what the formula supports.
class AmbientTooSmall : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

Validated<Codim2Data> validate(const Codim2Data& data);
Validated<Codim3GorData> validate(const Codim3GorData& data);
Validated<ResolutionData> validate(const ResolutionData& data);

/// Canonical form of valid data; throws InvalidData listing every violation.
Codim2Data canonical(const Codim2Data& data);
Codim3GorData canonical(const Codim3GorData& data);
ResolutionData canonical(const ResolutionData& data);

/// One value of the Hilbert function of the coordinate ring.
struct HilbertSample {
    long t = 0;
    BigInt value;
};

/// Alternating sum of twisted section counts along the resolution, at ambient dimension n and twist t.
BigInt hilbert_function(const ResolutionData& data, long n, long t);
std::vector<HilbertSample> hilbert_samples(const ResolutionData& data, long n, long t_from, long t_to);

/// Degree read off the Hilbert polynomial at ambient dimension n: the (n - codim)-th
/// forward difference of the Hilbert function beyond the largest twist.
long degree_from_hilbert(const ResolutionData& data, long n);
/// (sum syz^2 - sum gens^2) / 2.
long hilbert_burch_degree(const Codim2Data& data);
/// Degree of the stratum's schemes; for codim 2 both routes are computed and must agree.
long degree_of(const ResolutionData& data);

[[nodiscard]] bool is_complete_intersection(const ResolutionData& data);

/// "codim2 gens (2,2,2) syz (3,3)" style label.
std::string describe(const ResolutionData& data);

} // namespace hilbext
