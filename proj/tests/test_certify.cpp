#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hilbext/certify.hpp"
#include "hilbext/json_io.hpp"
#include "hilbext/search.hpp"

using namespace hilbext;

namespace {

const Codim2Data degree_three{{2, 2, 2}, {3, 3}};
const Codim2Data family32{{4, 4, 4}, {6, 6}};
const Codim2Data ci23{{2, 3}, {5}};
const Codim3GorData kmr{10, {4, 4, 4, 4, 4, 5, 5}, {6, 6, 6, 6, 6, 5, 5}};

Codim2Data family(int s, int c) {
    return {std::vector<int>(static_cast<std::size_t>(s), (s - 1) * c),
            std::vector<int>(static_cast<std::size_t>(s - 1), s * c)};
}

std::vector<ResolutionData> corpus() {
    std::vector<ResolutionData> all;
    SearchConfig c2;
    c2.max_generators = 4;
    c2.max_degree = 6;
    for (auto& d : enumerate(c2)) all.push_back(d);
    SearchConfig c3;
    c3.kind = DataKind::codim3gor;
    c3.max_generators = 7;
    c3.max_degree = 6;
    c3.n0 = 4;
    for (auto& d : enumerate(c3)) all.push_back(d);
    return all;
}

} // namespace

TEST_CASE("delta_poly examples") {
    CHECK(delta_poly(degree_three) == IntPoly({Rational(4), Rational(-1)}));
    CHECK(delta_poly(family32) == IntPoly({Rational(10), Rational(5)}));
    CHECK(delta_poly(kmr) == IntPoly({Rational(18), Rational(9)}));
    CHECK(delta_poly(kmr, ZeroTermConvention::include) == delta_poly(kmr));
}

TEST_CASE("extendable_at examples") {
    CHECK(extendable_at(degree_three, 3));
    CHECK(extendable_at(degree_three, 4));
    CHECK_FALSE(extendable_at(degree_three, 5));
    CHECK(extendable_at(kmr, 4));
    CHECK_THROWS_AS((void)extendable_at(degree_three, 2), AmbientTooSmall);
    CHECK_THROWS_AS((void)extendable_at(kmr, 3), AmbientTooSmall);
}

TEST_CASE("certify examples") {
    const auto fam = certify(family32, 3);
    CHECK(fam.verdict == Verdict::infinitely_extendable);
    CHECK(std::holds_alternative<NonnegBinomialBasis>(fam.proof));
    CHECK(fam.non_ci);
    CHECK_FALSE(fam.witness.has_value());

    const auto cubic = certify(degree_three, 3);
    CHECK(cubic.verdict == Verdict::fails_at);
    CHECK(cubic.witness == 5L);
    CHECK(cubic.non_ci);

    const auto ci = certify(ci23, 3);
    CHECK(ci.infinitely_extendable());
    CHECK_FALSE(ci.non_ci);

    const auto gor = certify(kmr);
    CHECK(gor.n0 == 4);
    CHECK(gor.infinitely_extendable());

    CHECK_THROWS_AS((void)certify(degree_three, 2), AmbientTooSmall);
    CHECK_THROWS_AS((void)certify(Codim2Data{{2, 2, 2}, {3, 4}}, 3), InvalidData);
    CHECK(default_n0(degree_three) == 3);
    CHECK(default_n0(kmr) == 4);
}

TEST_CASE("pointwise criterion matches delta_poly, and verdicts are sound") {
    for (const auto& d : corpus()) {
        const long n0 = default_n0(d);
        const auto cert = certify(d, n0);
        CHECK_FALSE(verify_certificate(cert).has_value());
        for (long n = n0; n <= n0 + 50; ++n) CHECK(extendable_at(d, n) == (cert.delta_poly(n) >= 0));
        if (cert.infinitely_extendable()) {
            for (long n = n0; n <= n0 + 200; ++n) {
                const BigInt grow = stratum_dimension(d, n + 1) - stratum_dimension(d, n);
                CHECK(grow >= n + 2);
            }
        } else {
            CHECK_FALSE(extendable_at(d, *cert.witness));
        }
    }
}

TEST_CASE("family margin is at least s(s-1)(n+2)/2 - (n+2)") {
    for (int s = 3; s <= 5; ++s)
        for (int c = 2; c <= 3; ++c) {
            const auto delta = delta_poly(family(s, c));
            for (long n = 3; n <= 12; ++n) CHECK(delta(n) >= Rational(s * (s - 1) * (n + 2), 2) - (n + 2));
        }
}

TEST_CASE("certificate round-trip re-verifies bit for bit") {
    for (const auto& d : {ResolutionData(degree_three), ResolutionData(family32), ResolutionData(kmr),
                          ResolutionData(ci23)}) {
        const auto cert = certify(d, default_n0(d));
        const std::string text = to_json(cert).dump();
        const auto back = certificate_from_json(json::parse(text));
        CHECK(back == cert);
        CHECK_FALSE(verify_certificate(back).has_value());
        CHECK(to_json(back).dump() == text);
    }
}

TEST_CASE("verify_certificate catches tampering") {
    auto cert = certify(degree_three, 3);
    auto forged = cert;
    forged.verdict = Verdict::infinitely_extendable;
    forged.witness.reset();
    CHECK(verify_certificate(forged).has_value());

    forged = cert;
    forged.proof = Counterexample{6, Rational(-2)};
    forged.witness = 6;
    CHECK(verify_certificate(forged).has_value());

    forged = cert;
    forged.non_ci = false;
    CHECK(verify_certificate(forged).has_value());

    forged = certify(family32, 3);
    forged.delta_poly = forged.delta_poly + IntPoly::constant(1);
    CHECK(verify_certificate(forged).has_value());
}
