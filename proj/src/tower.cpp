#include "hilbext/tower.hpp"

#include <algorithm>

namespace hilbext {

TowerCertificate lift_by_quadrics(const ExtendabilityCertificate& base, int k, long n) {
    const auto* gor = std::get_if<Codim3GorData>(&base.data);
    if (gor == nullptr) throw TowerError("tower base must be codimension-3 Gorenstein data");
    if (auto problem = verify_certificate(base)) throw TowerError("tower base is not certified: " + *problem);
    if (!base.infinitely_extendable())
        throw TowerError("tower base is refuted at n = " + std::to_string(base.witness.value_or(base.n0)));
    if (k < 0) throw TowerError("quadric count must be nonnegative");

    TowerCertificate tower;
    tower.base = base;
    tower.quadric_count = k;
    tower.codim = 3 + k;
    if (n < tower.codim + 1) {
        throw AmbientTooSmall("ambient dimension n = " + std::to_string(n) + " is below codim + 1 = " +
                              std::to_string(tower.codim + 1));
    }
    tower.n = n;
    tower.gen_degrees = gor->gens;
    tower.gen_degrees.insert(tower.gen_degrees.end(), static_cast<std::size_t>(k), 2);
    std::sort(tower.gen_degrees.begin(), tower.gen_degrees.end());
    // Minimal generators of the cut are those of the base plus the quadrics,
    // so a non-CI base stays non-CI.
    tower.non_ci = base.non_ci;
    tower.provenance.push_back(provenance::resolution_extends);
    if (k > 0) {
        tower.provenance.push_back(provenance::generators_augmented);
        tower.provenance.push_back(provenance::quadric_not_cone);
    }
    return tower;
}

TowerCertificate lift_by_quadrics(const TowerCertificate& tower, int k, long n) {
    if (k < 0) throw TowerError("quadric count must be nonnegative");
    return lift_by_quadrics(tower.base, tower.quadric_count + k, n);
}

} // namespace hilbext
