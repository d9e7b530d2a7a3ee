#pragma once

#include "hilbext/certify.hpp"

#include <string>
#include <vector>

namespace hilbext {

/// Codimension 3 + k arithmetically Gorenstein tower obtained by cutting a
/// certified codim-3 tower with k general quadrics at every level.
struct TowerCertificate {
    ExtendabilityCertificate base;
    int quadric_count = 0;
    int codim = 3;
    long n = 4;
    /// Base generator degrees plus quadric_count copies of 2, ascending.
    std::vector<int> gen_degrees;
    bool non_ci = false;
    std::vector<std::string> provenance;
    friend bool operator==(const TowerCertificate&, const TowerCertificate&) = default;
};

namespace provenance {
inline constexpr const char* resolution_extends = "resolution-extends";
inline constexpr const char* generators_augmented = "generators-augmented";
inline constexpr const char* quadric_not_cone = "quadric-not-cone";
} // namespace provenance

/// Raised when the base certificate cannot seed a tower.
class TowerError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

TowerCertificate lift_by_quadrics(const ExtendabilityCertificate& base, int k, long n);
/// Adjoins k more quadrics to an existing tower.
TowerCertificate lift_by_quadrics(const TowerCertificate& tower, int k, long n);

} // namespace hilbext
