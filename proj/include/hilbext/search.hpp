#pragma once

#include "hilbext/certify.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilbext {

enum class DataKind { codim2, codim3gor };

const char* kind_name(DataKind k) noexcept;
DataKind parse_kind(std::string_view text);

struct SearchConfig {
    DataKind kind = DataKind::codim2;
    int max_generators = 3;   // bound on s (codim 2) or r (codim 3)
    int max_degree = 6;       // bound on every generator and syzygy degree
    std::optional<int> max_f; // codim 3 only; f <= 2 * max_degree regardless
    long n0 = 3;
    bool require_non_ci = true;
    ZeroTermConvention phi_convention = ZeroTermConvention::exclude;
    friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

/// Throws std::invalid_argument on a malformed config.
void check_config(const SearchConfig& config);

struct Enumeration {
    std::vector<ResolutionData> candidates;
    /// Raw degree tuples within bounds that failed validation, by violation name.
    std::map<std::string, std::size_t> rejected;
};

/// Every valid canonical datum within bounds, each exactly once, in lexicographic order.
Enumeration enumerate_candidates(const SearchConfig& config);
inline std::vector<ResolutionData> enumerate(const SearchConfig& config) {
    return enumerate_candidates(config).candidates;
}

struct SearchReport {
    SearchConfig config;
    std::size_t candidate_count = 0;
    std::vector<ExtendabilityCertificate> hits;
    std::map<std::string, std::size_t> rejected_counts;
};

/// Total order on hits: delta degree and leading coefficient descending, then
/// stratum degree ascending, then the data lexicographically.
bool hit_before(const ExtendabilityCertificate& a, const ExtendabilityCertificate& b);

/// Worker count from HILBEXT_WORKERS, else hardware concurrency (at least 1).
std::size_t default_workers();

/// Certifies every candidate at config.n0 across `workers` threads; the report
/// does not depend on the worker count.
SearchReport run_search(const SearchConfig& config, std::size_t workers = default_workers());

} // namespace hilbext
