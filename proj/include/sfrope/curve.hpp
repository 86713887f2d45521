#ifndef SFROPE_CURVE_HPP
#define SFROPE_CURVE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sfrope/geom.hpp"

namespace sfrope {

/// Identifies a member of one of the two explicit solution families.
struct SolutionId {
    enum class Family { closed, open };
    Family family = Family::closed;
    int n = 1;
    int k = 0;
};

/// A curve given exactly, as a chain of circular arcs. Consecutive arcs share
/// endpoints; when `closed`, the last arc ends where the first begins.
struct CurveSpec {
    std::vector<Arc> arcs;
    bool closed = false;
    std::optional<SolutionId> meta;

    double total_arc_length() const {
        double s = 0.0;
        for (const auto& a : arcs) s += a.length();
        return s;
    }

    UnitVec start() const { return arcs.front().start(); }
    UnitVec end() const { return arcs.back().end(); }

    /// Endpoint/tangent chaining check with the given tolerances; throws
    /// OutOfRangeError with a witness on the first violation.
    void validate(double endpoint_tol = 1e-9, double tangent_tol = 1e-9) const;
};

/// Ordered point samples of a curve on the sphere.
///
/// Invariants (enforced by from_points): at least 3 points, all unit within
/// 1e-12, consecutive points pairwise distinct (> 1e-10 apart), and
/// cumulative_arclength strictly increasing with the total polyline length
/// as its last entry (for closed curves this includes the wrap segment).
struct SampledCurve {
    std::vector<UnitVec> points;
    bool closed = false;
    std::vector<double> cumulative_arclength;

    static SampledCurve from_points(std::vector<UnitVec> pts, bool closed);

    std::size_t size() const { return points.size(); }
    double total_length() const { return cumulative_arclength.back(); }
};

/// Sample a CurveSpec at `total` points spread uniformly in arc length.
/// Closed curves omit the duplicate wrap point; open curves include both
/// endpoints exactly.
SampledCurve sample_curve(const CurveSpec& spec, std::size_t total);

/// Sample with a fixed per-arc density (at least 2 per arc).
SampledCurve sample_curve_per_arc(const CurveSpec& spec, std::size_t per_arc);

} // namespace sfrope

#endif
