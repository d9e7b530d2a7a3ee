#include "hilbext/resolution.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace hilbext {

int codim_of(const ResolutionData& data) noexcept {
    return std::holds_alternative<Codim2Data>(data) ? 2 : 3;
}

const char* violation_name(Violation v) noexcept {
    switch (v) {
    case Violation::generator_count: return "generator-count";
    case Violation::non_positive_degree: return "non-positive-degree";
    case Violation::balance: return "balance";
    case Violation::even_r: return "even-r";
    case Violation::symmetry: return "symmetry";
    case Violation::ordering: return "ordering";
    case Violation::unrealizable: return "unrealizable";
    }
    return "unknown";
}

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

long sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

template <typename Data>
[[noreturn]] void throw_invalid(const Data& raw, const std::vector<Issue>& errors) {
    std::ostringstream os;
    os << "invalid " << describe(ResolutionData(raw)) << ":";
    for (const auto& e : errors) os << " [" << violation_name(e.kind) << "] " << e.message << ";";
    throw InvalidData(os.str(), errors);
}

} // namespace

Validated<Codim2Data> validate(const Codim2Data& data) {
    Validated<Codim2Data> out;
    Codim2Data c = data;
    std::sort(c.gens.begin(), c.gens.end());
    std::sort(c.syz.begin(), c.syz.end());

    const auto s = c.gens.size();
    bool shape_ok = true;
    if (s < 2) {
        out.errors.push_back({Violation::generator_count, "need s >= 2 generators, got " + std::to_string(s)});
        shape_ok = false;
    }
    if (c.syz.size() + 1 != s) {
        out.errors.push_back({Violation::generator_count, "need s-1 = " + std::to_string(s == 0 ? 0 : s - 1) +
                                                              " syzygies, got " + std::to_string(c.syz.size())});
        shape_ok = false;
    }
    auto non_positive = [](int d) { return d < 1; };
    if (std::any_of(c.gens.begin(), c.gens.end(), non_positive) ||
        std::any_of(c.syz.begin(), c.syz.end(), non_positive)) {
        out.errors.push_back({Violation::non_positive_degree, "all degrees must be >= 1"});
        shape_ok = false;
    }
    if (sum_of(c.gens) != sum_of(c.syz)) {
        out.errors.push_back({Violation::balance, "sum of syzygy degrees " + std::to_string(sum_of(c.syz)) +
                                                      " != sum of generator degrees " + std::to_string(sum_of(c.gens))});
        shape_ok = false;
    }
    if (shape_ok) {
        // Gaeta: with both lists ascending, syz_i > gens_{i+1}.
        for (std::size_t i = 0; i + 1 < s; ++i) {
            if (c.syz[i] <= c.gens[i + 1]) {
                out.errors.push_back({Violation::unrealizable,
                                      "syzygy degree " + std::to_string(c.syz[i]) + " must exceed generator degree " +
                                          std::to_string(c.gens[i + 1]) + " (position " + std::to_string(i + 1) + ")"});
            }
        }
    }
    for (int g : c.gens) {
        if (std::find(c.syz.begin(), c.syz.end(), g) != c.syz.end()) {
            out.warnings.push_back("degree " + std::to_string(g) +
                                   " occurs as both generator and syzygy degree; resolution may not be minimal");
            break;
        }
    }
    if (out.errors.empty()) out.data = std::move(c);
    return out;
}

Validated<Codim3GorData> validate(const Codim3GorData& data) {
    Validated<Codim3GorData> out;
    Codim3GorData c = data;
    std::sort(c.gens.begin(), c.gens.end());
    std::sort(c.syz.begin(), c.syz.end(), std::greater<>());

    const int r = c.r();
    bool shape_ok = true;
    if (r < 3) {
        out.errors.push_back({Violation::generator_count, "need r >= 3 generators, got " + std::to_string(r)});
        shape_ok = false;
    }
    if (r % 2 == 0) {
        out.errors.push_back({Violation::even_r, "r = " + std::to_string(r) + " is even; pfaffian ideals have odd r"});
        shape_ok = false;
    }
    if (static_cast<int>(c.syz.size()) != r) {
        out.errors.push_back({Violation::generator_count,
                              "need r = " + std::to_string(r) + " syzygies, got " + std::to_string(c.syz.size())});
        shape_ok = false;
    }
    auto non_positive = [](int d) { return d < 1; };
    if (c.f < 1 || std::any_of(c.gens.begin(), c.gens.end(), non_positive) ||
        std::any_of(c.syz.begin(), c.syz.end(), non_positive)) {
        out.errors.push_back({Violation::non_positive_degree, "f and all degrees must be >= 1"});
        shape_ok = false;
    }
    if (static_cast<int>(c.syz.size()) == r) {
        for (int i = 0; i < r; ++i) {
            if (c.gens[static_cast<std::size_t>(i)] + c.syz[static_cast<std::size_t>(i)] != c.f) {
                out.errors.push_back({Violation::symmetry, "paired degrees " + join(c.gens) + " and " + join(c.syz) +
                                                               " do not sum to f = " + std::to_string(c.f)});
                shape_ok = false;
                break;
            }
        }
    }
    for (int g : c.gens) {
        if (2 * g > c.f) {
            out.errors.push_back({Violation::ordering, "generator degree " + std::to_string(g) +
                                                           " exceeds its syzygy degree " + std::to_string(c.f - g)});
            shape_ok = false;
            break;
        }
    }
    if (r >= 3 && static_cast<long>(r - 1) * c.f != 2 * sum_of(c.gens)) {
        out.errors.push_back({Violation::balance, "(r-1) f = " + std::to_string(static_cast<long>(r - 1) * c.f) +
                                                      " != 2 * sum of generator degrees = " +
                                                      std::to_string(2 * sum_of(c.gens))});
        shape_ok = false;
    }
    if (shape_ok) {
        // Skew degree matrix entries f - a_i - a_j; with a ascending (1-based)
        // the entries (i, r+2-i), i = 2..(r+1)/2, must be positive.
        for (int i = 2; i <= (r + 1) / 2; ++i) {
            int a = c.gens[static_cast<std::size_t>(i - 1)];
            int b = c.gens[static_cast<std::size_t>(r + 1 - i)];
            if (c.f - a - b <= 0) {
                out.errors.push_back({Violation::unrealizable, "f - " + std::to_string(a) + " - " + std::to_string(b) +
                                                                   " <= 0 in the pfaffian degree matrix"});
            }
        }
    }
    if (out.errors.empty()) out.data = std::move(c);
    return out;
}

Validated<ResolutionData> validate(const ResolutionData& data) {
    return std::visit(
        [](const auto& d) {
            auto v = validate(d);
            Validated<ResolutionData> out;
            if (v.data) out.data = ResolutionData(*v.data);
            out.errors = std::move(v.errors);
            out.warnings = std::move(v.warnings);
            return out;
        },
        data);
}

Codim2Data canonical(const Codim2Data& data) {
    auto v = validate(data);
    if (!v.ok()) throw_invalid(data, v.errors);
    return *v.data;
}

Codim3GorData canonical(const Codim3GorData& data) {
    auto v = validate(data);
    if (!v.ok()) throw_invalid(data, v.errors);
    return *v.data;
}

ResolutionData canonical(const ResolutionData& data) {
    return std::visit([](const auto& d) { return ResolutionData(canonical(d)); }, data);
}

// --- Hilbert function -----------------------------------------------------------

namespace {

struct TwistTerm {
    int twist;
    int sign;
};

// Terms of the resolution of the coordinate ring: R, then the alternating free modules.
std::vector<TwistTerm> resolution_terms(const ResolutionData& data) {
    std::vector<TwistTerm> terms{{0, +1}};
    std::visit(
        [&](const auto& d) {
            for (int g : d.gens) terms.push_back({g, -1});
            for (int s : d.syz) terms.push_back({s, +1});
            if constexpr (std::is_same_v<std::decay_t<decltype(d)>, Codim3GorData>) terms.push_back({d.f, -1});
        },
        data);
    return terms;
}

void require_ambient(const ResolutionData& data, long n) {
    if (n < min_ambient(data)) {
        throw AmbientTooSmall("ambient dimension n = " + std::to_string(n) + " is below codim + 1 = " +
                              std::to_string(min_ambient(data)));
    }
}

} // namespace

BigInt hilbert_function(const ResolutionData& data, long n, long t) {
    require_ambient(data, n);
    const ResolutionData c = canonical(data);
    BigInt h = 0;
    for (auto [twist, sign] : resolution_terms(c)) {
        BigInt term = binom_eval(t - twist, n);
        if (sign > 0) h += term;
        else h -= term;
    }
    return h;
}

std::vector<HilbertSample> hilbert_samples(const ResolutionData& data, long n, long t_from, long t_to) {
    std::vector<HilbertSample> out;
    for (long t = t_from; t <= t_to; ++t) out.push_back({t, hilbert_function(data, n, t)});
    return out;
}

long degree_from_hilbert(const ResolutionData& data, long n) {
    require_ambient(data, n);
    const ResolutionData c = canonical(data);
    const long dim_x = n - codim_of(c);
    long t0 = 0;
    for (auto term : resolution_terms(c)) t0 = std::max<long>(t0, term.twist);
    // Beyond the largest twist the Hilbert function is its polynomial, whose
    // dim_x-th forward difference is the degree.
    BigInt diff = 0;
    for (long j = 0; j <= dim_x; ++j) {
        BigInt term = binomial(dim_x, j) * hilbert_function(c, n, t0 + j);
        if ((dim_x - j) % 2 == 0) diff += term;
        else diff -= term;
    }
    return diff.convert_to<long>();
}

long hilbert_burch_degree(const Codim2Data& data) {
    const Codim2Data c = canonical(data);
    long sq = 0;
    for (int b : c.syz) sq += static_cast<long>(b) * b;
    for (int a : c.gens) sq -= static_cast<long>(a) * a;
    return sq / 2;
}

long degree_of(const ResolutionData& data) {
    const ResolutionData c = canonical(data);
    const long deg = degree_from_hilbert(c, min_ambient(c));
    if (const auto* d2 = std::get_if<Codim2Data>(&c)) {
        const long closed = hilbert_burch_degree(*d2);
        if (closed != deg) {
            throw std::logic_error("degree mismatch for " + describe(c) + ": Hilbert polynomial gives " +
                                   std::to_string(deg) + ", closed form gives " + std::to_string(closed));
        }
    }
    return deg;
}

bool is_complete_intersection(const ResolutionData& data) {
    const ResolutionData c = canonical(data);
    if (const auto* d2 = std::get_if<Codim2Data>(&c)) return d2->gens.size() == 2;
    return std::get<Codim3GorData>(c).r() == 3;
}

std::string describe(const ResolutionData& data) {
    return std::visit(
        [](const auto& d) {
            std::ostringstream os;
            if constexpr (std::is_same_v<std::decay_t<decltype(d)>, Codim2Data>) {
                os << "codim2 gens " << join(d.gens) << " syz " << join(d.syz);
            } else {
                os << "codim3gor f=" << d.f << " gens " << join(d.gens) << " syz " << join(d.syz);
            }
            return os.str();
        },
        data);
}

} // namespace hilbext
