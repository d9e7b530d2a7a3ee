#include "hilbext/strata.hpp"

namespace hilbext {

const char* convention_name(ZeroTermConvention c) noexcept {
    return c == ZeroTermConvention::exclude ? "exclude" : "include";
}

ZeroTermConvention parse_convention(std::string_view text) {
    if (text == "exclude") return ZeroTermConvention::exclude;
    if (text == "include") return ZeroTermConvention::include;
    throw std::invalid_argument("unknown zero-term convention '" + std::string(text) + "' (expected exclude|include)");
}

namespace {

void require_n(long n, long min_n) {
    if (n < min_n) {
        throw AmbientTooSmall("ambient dimension n = " + std::to_string(n) + " is below the minimum " +
                              std::to_string(min_n));
    }
}

// Multiset of signed twists; the dimension is sum sign * C(d + n, n).
struct SignedTwists {
    BigInt constant = 0;
    std::map<long, BigInt> weight;
    void add(long d, int sign) {
        if (d >= 0) weight[d] += sign;
    }
    [[nodiscard]] IntPoly to_poly() const {
        IntPoly p = IntPoly::constant(Rational(constant));
        for (const auto& [d, w] : weight)
            if (w != 0) p += binom_poly(d) * Rational(w);
        return p;
    }
};

} // namespace

BigInt psi(const Codim2Data& data, long n) {
    const Codim2Data c = canonical(data);
    require_n(n, 3);
    BigInt dim = 1;
    for (int b : c.syz)
        for (int a : c.gens)
            if (b >= a) dim += binom_eval(b - a, n);
    for (int a : c.gens)
        for (int b : c.syz)
            if (a > b) dim += binom_eval(a - b, n);
    for (int bi : c.syz)
        for (int bj : c.syz)
            if (bi >= bj) dim -= binom_eval(bi - bj, n);
    for (int ai : c.gens)
        for (int aj : c.gens)
            if (aj >= ai) dim -= binom_eval(aj - ai, n);
    return dim;
}

IntPoly psi_poly(const Codim2Data& data) {
    const Codim2Data c = canonical(data);
    SignedTwists terms;
    terms.constant = 1;
    for (int b : c.syz)
        for (int a : c.gens) terms.add(b >= a ? b - a : a - b, +1);
    for (int bi : c.syz)
        for (int bj : c.syz) terms.add(bi - bj, -1);
    for (int ai : c.gens)
        for (int aj : c.gens) terms.add(aj - ai, -1);
    return terms.to_poly().require_integer_valued();
}

BigInt phi(const Codim3GorData& data, long n, ZeroTermConvention conv) {
    const Codim3GorData c = canonical(data);
    require_n(n, 4);
    const auto r = c.gens.size();
    const auto& g = c.gens;
    const auto& s = c.syz;
    BigInt dim = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            const int d = s[j] - g[i];
            if (d == 0 && conv == ZeroTermConvention::exclude) continue;
            dim += binom_eval(d, n);
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) dim -= binom_eval(g[j] - g[i], n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) dim += binom_eval(g[i] - s[j], n);
    return dim;
}

IntPoly phi_poly(const Codim3GorData& data, ZeroTermConvention conv) {
    const Codim3GorData c = canonical(data);
    const auto r = c.gens.size();
    SignedTwists terms;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            terms.add(c.gens[j] - c.gens[i], -1);
            if (j < i) continue;
            terms.add(c.gens[i] - c.syz[j], +1);
            const int d = c.syz[j] - c.gens[i];
            if (j > i && (d != 0 || conv == ZeroTermConvention::include)) terms.add(d, +1);
        }
    }
    return terms.to_poly().require_integer_valued();
}

BigInt stratum_dimension(const ResolutionData& data, long n, Conventions conv) {
    if (const auto* d2 = std::get_if<Codim2Data>(&data)) return psi(*d2, n);
    return phi(std::get<Codim3GorData>(data), n, conv.zero_term);
}

IntPoly dimension_poly(const ResolutionData& data, Conventions conv) {
    if (const auto* d2 = std::get_if<Codim2Data>(&data)) return psi_poly(*d2);
    return phi_poly(std::get<Codim3GorData>(data), conv.zero_term);
}

StratumDimension describe_dimension(const ResolutionData& data, std::span<const long> ns, Conventions conv) {
    StratumDimension out{canonical(data), {}, dimension_poly(data, conv), conv};
    for (long n : ns) out.at_n[n] = stratum_dimension(out.data, n, conv);
    return out;
}

} // namespace hilbext
