#ifndef SFROPE_THICKNESS_HPP
#define SFROPE_THICKNESS_HPP

#include <array>
#include <cstddef>

#include "sfrope/curve.hpp"

namespace sfrope {

/// Result of a thickness measurement.
///
/// `delta` is the minimum circumradius over all distinct sample triples,
/// `witness` the lexicographically smallest index triple attaining it, and
/// `spherical_theta` = arcsin(delta) the intrinsic tube half-width.
struct ThicknessReport {
    double delta = 0.0;
    std::array<std::size_t, 3> witness{};
    double spherical_theta = 0.0;
};

/// Reference engine: scans every index triple i < j < k.
/// Deterministic for a given input regardless of thread count.
ThicknessReport thickness_bruteforce(const SampledCurve& curve);

/// Pruned engine. Contract: returns the same delta (within 1e-14; in this
/// implementation bit-identical) and the same witness as the brute-force
/// engine on every input. Uses the bound R(x,y,z) >= max pairwise distance / 2:
/// only triples with all pairwise distances <= 2 R* can improve on a current
/// best R*, so candidate pairs come from a spatial grid and the admission
/// radius shrinks as R* improves.
ThicknessReport thickness_accelerated(const SampledCurve& curve);

/// arcsin of the Euclidean thickness; domain (0, 1].
double spherical_thickness(double delta);

/// Outcome of the forbidden-geodesic-ball check.
struct FgbReport {
    bool pass = true;
    double theta = 0.0;
    double tolerance = 0.0;
    /// min over all (sample, side) of (nearest sample distance to the
    /// tangent ball center) - theta; violations are negative
    double worst_clearance = 0.0;
    std::size_t worst_sample = 0;
    int worst_side = +1; // +1 / -1: which of the two normal directions
    std::size_t worst_violator = 0;
};

/// Checks the forbidden-ball property: for every sample p with unit tangent T,
/// the two geodesic balls of radius theta whose boundaries are tangent to the
/// curve at p (centers one theta-step along the two geodesic normals) must
/// contain no curve sample. Tangents come from central differences
/// (one-sided at open endpoints). Passes iff no sample lies deeper than
/// `tolerance` inside either ball.
FgbReport fgb_check(const SampledCurve& curve, double theta, double tolerance);

} // namespace sfrope

#endif
