#ifndef SFROPE_VERIFIER_HPP
#define SFROPE_VERIFIER_HPP

#include <cstdint>
#include <vector>

#include "sfrope/curve.hpp"

namespace sfrope {

/// Sphere-coverage measurement of a curve's spherical tube.
struct CoverageReport {
    double theta = 0.0;
    std::size_t grid_size = 0;
    double max_gap = 0.0;          // largest geodesic distance grid -> curve
    double covered_fraction = 0.0; // fraction of grid points within theta
    double tube_area_estimate = 0.0; // covered_fraction * 4 pi
    double curve_length = 0.0;       // polyline length of the samples
    bool sphere_filling = false;     // max_gap <= theta + tolerance
    std::size_t worst_grid_index = 0;
};

/// Nearest-distance survey of `grid` against the curve samples. Distances are
/// computed through a spatial index; a deterministic 1% audit subset is
/// re-checked against the naive scan and any mismatch raises InternalError.
CoverageReport coverage_report(const SampledCurve& curve, double theta,
                               const std::vector<UnitVec>& grid, double tolerance);

/// Monte Carlo check of the spherical tube-area law
///   area(T_theta) = 2 sin(theta) * L.
/// Returns |estimate - law| / law. Closed curves only (endpoint caps are not
/// part of the law); open input raises OpenCurveUnsupportedError.
/// Precondition (caller-asserted): the curve's thickness is >= sin(theta),
/// so the tube is embedded.
double tube_area_law_check(const SampledCurve& curve, double theta,
                           std::size_t mc_points, std::uint64_t seed);

/// Detailed tube-area result, for reporting alongside the relative error.
struct TubeAreaResult {
    double area_estimate = 0.0;
    double law_value = 0.0;
    double relative_error = 0.0;
};

TubeAreaResult tube_area_law(const SampledCurve& curve, double theta,
                             std::size_t mc_points, std::uint64_t seed);

/// C^1-junction / simplicity / closure report for an exact arc curve.
struct C1SimplicityReport {
    bool c1_pass = false;
    double max_tangent_mismatch = 0.0;
    std::size_t worst_junction = 0;
    bool endpoints_pass = false;
    double max_endpoint_gap = 0.0;
    bool simple_pass = false;
    double min_nonadjacent_separation = 0.0;
    std::size_t separation_witness_a = 0, separation_witness_b = 0;
    bool closure_consistent = false;

    bool pass() const { return c1_pass && endpoints_pass && simple_pass && closure_consistent; }
};

C1SimplicityReport c1_and_simplicity_check(const CurveSpec& spec, std::size_t samples_per_arc);

enum class EndpointClass { closed_curve, antipodal, non_antipodal };

struct EndpointGeometry {
    EndpointClass kind = EndpointClass::closed_curve;
    double distance = 0.0; // geodesic distance between endpoints (open curves)
};

/// Classifies the relative position of an open curve's endpoints
/// (antipodal within 1e-9 of pi), or reports the curve as closed.
EndpointGeometry endpoint_geometry(const CurveSpec& spec);

} // namespace sfrope

#endif
