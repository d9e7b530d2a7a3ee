#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hilbext/json_io.hpp"
#include "hilbext/search.hpp"
#include "hilbext/tower.hpp"

#include <algorithm>

using namespace hilbext;

namespace {

const Codim3GorData kmr{10, {4, 4, 4, 4, 4, 5, 5}, {6, 6, 6, 6, 6, 5, 5}};

std::vector<ExtendabilityCertificate> certified_bases() {
    SearchConfig config;
    config.kind = DataKind::codim3gor;
    config.max_generators = 7;
    config.max_degree = 6;
    config.n0 = 4;
    std::vector<ExtendabilityCertificate> out;
    for (const auto& d : enumerate(config)) {
        auto cert = certify(d, 4);
        if (cert.infinitely_extendable()) out.push_back(cert);
    }
    return out;
}

} // namespace

TEST_CASE("lift examples") {
    const auto base = certify(kmr, 4);

    const auto t1 = lift_by_quadrics(base, 1, 5);
    CHECK(t1.codim == 4);
    CHECK(t1.gen_degrees == std::vector<int>{2, 4, 4, 4, 4, 4, 5, 5});
    CHECK(t1.non_ci);
    CHECK(t1.provenance ==
          std::vector<std::string>{provenance::resolution_extends, provenance::generators_augmented,
                                   provenance::quadric_not_cone});

    const auto t0 = lift_by_quadrics(base, 0, 4);
    CHECK(t0.codim == 3);
    CHECK(t0.gen_degrees == kmr.gens);
    CHECK(t0.base == base);

    const auto t3 = lift_by_quadrics(base, 3, 7);
    CHECK(t3.codim == 6);
    CHECK(t3.gen_degrees.size() == 10);
    CHECK(std::count(t3.gen_degrees.begin(), t3.gen_degrees.end(), 2) == 3);
}

TEST_CASE("lift errors") {
    const auto base = certify(kmr, 4);
    CHECK_THROWS_AS((void)lift_by_quadrics(base, 1, 4), AmbientTooSmall);
    CHECK_THROWS_AS((void)lift_by_quadrics(base, -1, 6), TowerError);
    CHECK_THROWS_AS((void)lift_by_quadrics(certify(Codim2Data{{4, 4, 4}, {6, 6}}, 3), 1, 5), TowerError);

    auto forged = base;
    forged.delta_poly = forged.delta_poly + IntPoly::constant(1);
    CHECK_THROWS_AS((void)lift_by_quadrics(forged, 1, 5), TowerError);

    SearchConfig config;
    config.kind = DataKind::codim3gor;
    config.max_generators = 7;
    config.max_degree = 6;
    config.n0 = 4;
    bool saw_refuted = false;
    for (const auto& d : enumerate(config)) {
        auto cert = certify(d, 4);
        if (!cert.infinitely_extendable()) {
            saw_refuted = true;
            CHECK_THROWS_AS((void)lift_by_quadrics(cert, 1, 5), TowerError);
        }
    }
    CHECK(saw_refuted);
}

TEST_CASE("composition law and non-CI preservation") {
    for (const auto& base : certified_bases()) {
        for (int k1 = 0; k1 <= 5; ++k1)
            for (int k2 = 0; k1 + k2 <= 5; ++k2) {
                const long n = 3 + k1 + k2 + 1;
                const auto direct = lift_by_quadrics(base, k1 + k2, n);
                const auto stepped = lift_by_quadrics(lift_by_quadrics(base, k1, n), k2, n);
                CHECK(direct.gen_degrees == stepped.gen_degrees);
                CHECK(direct.codim == stepped.codim);
                CHECK(direct.gen_degrees.size() ==
                      std::get<Codim3GorData>(base.data).gens.size() + static_cast<std::size_t>(k1 + k2));
                if (base.non_ci) CHECK(direct.non_ci);
            }
    }
}

TEST_CASE("tower JSON round-trip") {
    const auto tower = lift_by_quadrics(certify(kmr, 4), 2, 6);
    const json doc = to_json(tower);
    CHECK(doc["quadric_count"] == 2);
    CHECK(doc["codim"] == 5);
    CHECK(doc.contains("proof"));
    CHECK(tower_from_json(doc) == tower);
}
