#include "hilbext/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <numeric>
#include <thread>

namespace hilbext {

const char* kind_name(DataKind k) noexcept { return k == DataKind::codim2 ? "codim2" : "codim3gor"; }

DataKind parse_kind(std::string_view text) {
    if (text == "codim2") return DataKind::codim2;
    if (text == "codim3gor") return DataKind::codim3gor;
    throw std::invalid_argument("unknown data kind '" + std::string(text) + "' (expected codim2|codim3gor)");
}

void check_config(const SearchConfig& config) {
    const int min_gens = config.kind == DataKind::codim2 ? 2 : 3;
    if (config.max_generators < min_gens)
        throw std::invalid_argument("max_generators must be >= " + std::to_string(min_gens) + " for " +
                                    kind_name(config.kind));
    if (config.max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    if (config.max_f && *config.max_f < 1) throw std::invalid_argument("max_f must be >= 1");
    const long min_n0 = config.kind == DataKind::codim2 ? 3 : 4;
    if (config.n0 < min_n0)
        throw std::invalid_argument("n0 must be >= " + std::to_string(min_n0) + " for " + kind_name(config.kind));
}

namespace {

// Calls visit(v) for every nondecreasing vector of the given length with entries in [lo, hi].
void for_each_multiset(int length, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> v(static_cast<std::size_t>(length), lo);
    if (length == 0) {
        visit(v);
        return;
    }
    if (lo > hi) return;
    while (true) {
        visit(v);
        int pos = length - 1;
        while (pos >= 0 && v[static_cast<std::size_t>(pos)] == hi) --pos;
        if (pos < 0) return;
        const int next = v[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < length; ++i) v[static_cast<std::size_t>(i)] = next;
    }
}

void enumerate_codim2(const SearchConfig& config, Enumeration& out) {
    const int d = config.max_degree;
    for (int s = 2; s <= config.max_generators; ++s) {
        for_each_multiset(s, 1, d, [&](const std::vector<int>& gens) {
            const int total = std::accumulate(gens.begin(), gens.end(), 0);
            for_each_multiset(s - 1, 1, d, [&](const std::vector<int>& syz) {
                if (std::accumulate(syz.begin(), syz.end(), 0) != total) return;
                auto v = validate(Codim2Data{gens, syz});
                if (v.ok()) out.candidates.emplace_back(*v.data);
                else ++out.rejected[std::string("invalid:") + violation_name(v.errors.front().kind)];
            });
        });
    }
}

void enumerate_codim3(const SearchConfig& config, Enumeration& out) {
    const int d = config.max_degree;
    for (int r = 3; r <= config.max_generators; r += 2) {
        for_each_multiset(r, 1, d, [&](const std::vector<int>& gens) {
            const int twice = 2 * std::accumulate(gens.begin(), gens.end(), 0);
            if (twice % (r - 1) != 0) return;
            const int f = twice / (r - 1);
            if (config.max_f && f > *config.max_f) return;
            std::vector<int> syz;
            for (int g : gens) syz.push_back(f - g);
            if (std::any_of(syz.begin(), syz.end(), [d](int b) { return b < 1 || b > d; })) return;
            auto v = validate(Codim3GorData{f, gens, syz});
            if (v.ok()) out.candidates.emplace_back(*v.data);
            else ++out.rejected[std::string("invalid:") + violation_name(v.errors.front().kind)];
        });
    }
}

struct RankedHit {
    ExtendabilityCertificate cert;
    int delta_degree;
    Rational delta_lead;
    long degree;
};

bool ranked_before(const RankedHit& a, const RankedHit& b) {
    if (a.delta_degree != b.delta_degree) return a.delta_degree > b.delta_degree;
    if (a.delta_lead != b.delta_lead) return a.delta_lead > b.delta_lead;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.cert.data < b.cert.data;
}

RankedHit rank(ExtendabilityCertificate cert) {
    RankedHit h{std::move(cert), 0, 0, 0};
    h.delta_degree = h.cert.delta_poly.degree();
    h.delta_lead = h.cert.delta_poly.leading();
    h.degree = degree_of(h.cert.data);
    return h;
}

} // namespace

Enumeration enumerate_candidates(const SearchConfig& config) {
    check_config(config);
    Enumeration out;
    if (config.kind == DataKind::codim2) enumerate_codim2(config, out);
    else enumerate_codim3(config, out);
    return out;
}

bool hit_before(const ExtendabilityCertificate& a, const ExtendabilityCertificate& b) {
    return ranked_before(rank(a), rank(b));
}

std::size_t default_workers() {
    if (const char* env = std::getenv("HILBEXT_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SearchReport run_search(const SearchConfig& config, std::size_t workers) {
    Enumeration en = enumerate_candidates(config);
    SearchReport report;
    report.config = config;
    report.candidate_count = en.candidates.size();
    for (const auto& [reason, count] : en.rejected) report.rejected_counts[reason] += count;

    const std::size_t total = en.candidates.size();
    std::vector<std::optional<ExtendabilityCertificate>> certs(total);
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(total, 1));
    std::vector<std::exception_ptr> failures(workers);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < total; i += workers)
                        certs[i] = certify(en.candidates[i], config.n0, config.phi_convention);
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    std::vector<RankedHit> ranked;
    for (auto& cert : certs) {
        if (config.require_non_ci && !cert->non_ci) {
            ++report.rejected_counts["complete-intersection"];
        } else if (!cert->infinitely_extendable()) {
            ++report.rejected_counts["criterion-fails"];
        } else {
            ranked.push_back(rank(std::move(*cert)));
        }
    }
    std::sort(ranked.begin(), ranked.end(), ranked_before);
    ranked.erase(std::unique(ranked.begin(), ranked.end(),
                             [](const RankedHit& a, const RankedHit& b) { return a.cert.data == b.cert.data; }),
                 ranked.end());
    for (auto& h : ranked) report.hits.push_back(std::move(h.cert));
    return report;
}

} // namespace hilbext
