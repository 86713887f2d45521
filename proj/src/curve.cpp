#include "sfrope/curve.hpp"

#include <algorithm>
#include <cmath>

namespace sfrope {

void CurveSpec::validate(double endpoint_tol, double tangent_tol) const {
    if (arcs.empty()) throw OutOfRangeError("curve spec has no arcs");
    std::size_t junctions = closed ? arcs.size() : arcs.size() - 1;
    for (std::size_t i = 0; i < junctions; ++i) {
        const Arc& a = arcs[i];
        const Arc& b = arcs[(i + 1) % arcs.size()];
        double gap = (a.end().vec() - b.start().vec()).norm();
        if (gap > endpoint_tol)
            throw OutOfRangeError("arc junction " + std::to_string(i) + " endpoint gap " +
                                  std::to_string(gap));
        double mismatch =
            (a.tangent(a.t0 + a.sweep).vec() - b.tangent(b.t0).vec()).norm();
        if (mismatch > tangent_tol)
            throw OutOfRangeError("arc junction " + std::to_string(i) + " tangent mismatch " +
                                  std::to_string(mismatch));
    }
}

SampledCurve SampledCurve::from_points(std::vector<UnitVec> pts, bool closed) {
    if (pts.size() < 3) throw TooFewPointsError("a sampled curve needs at least 3 points");
    SampledCurve c;
    c.points = std::move(pts);
    c.closed = closed;
    std::size_t m = c.points.size();
    std::size_t segs = closed ? m : m - 1;
    c.cumulative_arclength.resize(closed ? m + 1 : m);
    c.cumulative_arclength[0] = 0.0;
    for (std::size_t i = 0; i < segs; ++i) {
        double d = geodesic_dist(c.points[i], c.points[(i + 1) % m]);
        if (d <= 1e-10)
            throw OutOfRangeError("consecutive samples " + std::to_string(i) + ", " +
                                  std::to_string((i + 1) % m) + " coincide");
        c.cumulative_arclength[i + 1] = c.cumulative_arclength[i] + d;
    }
    return c;
}

namespace {

// Locate (arc index, parameter t) at arc-length position s along the spec.
struct ArcCursor {
    const CurveSpec& spec;
    std::vector<double> cum; // cumulative arc lengths, cum[0] = 0

    explicit ArcCursor(const CurveSpec& s) : spec(s) {
        cum.resize(s.arcs.size() + 1, 0.0);
        for (std::size_t i = 0; i < s.arcs.size(); ++i) cum[i + 1] = cum[i] + s.arcs[i].length();
    }

    UnitVec at(double s) const {
        s = std::clamp(s, 0.0, cum.back());
        std::size_t i = std::upper_bound(cum.begin(), cum.end(), s) - cum.begin();
        i = (i == 0) ? 0 : i - 1;
        if (i >= spec.arcs.size()) i = spec.arcs.size() - 1;
        const Arc& a = spec.arcs[i];
        double local = s - cum[i];
        double t = a.t0 + (a.sweep >= 0 ? 1.0 : -1.0) * local / std::sin(a.rho);
        // clamp against float spill past the arc end
        double lo = std::min(a.t0, a.t0 + a.sweep), hi = std::max(a.t0, a.t0 + a.sweep);
        return a.point_unchecked(std::clamp(t, lo, hi));
    }
};

} // namespace

SampledCurve sample_curve(const CurveSpec& spec, std::size_t total) {
    if (spec.arcs.empty()) throw OutOfRangeError("cannot sample an empty curve spec");
    if (total < 3) throw TooFewPointsError("need at least 3 samples");
    ArcCursor cur(spec);
    double L = cur.cum.back();
    std::vector<UnitVec> pts;
    pts.reserve(total);
    if (spec.closed) {
        for (std::size_t j = 0; j < total; ++j) pts.push_back(cur.at(L * double(j) / double(total)));
    } else {
        for (std::size_t j = 0; j < total; ++j)
            pts.push_back(cur.at(L * double(j) / double(total - 1)));
    }
    return SampledCurve::from_points(std::move(pts), spec.closed);
}

SampledCurve sample_curve_per_arc(const CurveSpec& spec, std::size_t per_arc) {
    if (per_arc < 2) throw TooFewPointsError("need at least 2 samples per arc");
    std::vector<UnitVec> pts;
    pts.reserve(per_arc * spec.arcs.size() + 1);
    for (std::size_t i = 0; i < spec.arcs.size(); ++i) {
        const Arc& a = spec.arcs[i];
        // each arc contributes [start, end); the final endpoint of an open
        // curve is appended after the loop
        for (std::size_t j = 0; j < per_arc; ++j) {
            double t = a.t0 + a.sweep * double(j) / double(per_arc);
            pts.push_back(a.point_unchecked(t));
        }
    }
    if (!spec.closed) pts.push_back(spec.arcs.back().end());
    return SampledCurve::from_points(std::move(pts), spec.closed);
}

} // namespace sfrope
