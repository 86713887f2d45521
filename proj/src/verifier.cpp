#include "sfrope/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "sfrope/spatial_grid.hpp"

namespace sfrope {

namespace {

double grid_cell_for_curve(const SampledCurve& curve) {
    // a few average sample spacings per cell keeps ring searches short
    return std::max(0.05, 3.0 * curve.total_length() / double(curve.size()));
}

// chord -> geodesic, exact for chord in [0, 2]
double chord_to_geodesic(double chord_sq) {
    double half = 0.5 * std::sqrt(std::max(0.0, chord_sq));
    return 2.0 * std::asin(std::min(1.0, half));
}

} // namespace

CoverageReport coverage_report(const SampledCurve& curve, double theta,
                               const std::vector<UnitVec>& grid, double tolerance) {
    if (!(theta > 0.0 && theta <= kPi / 2.0 + 1e-15))
        throw InvalidThetaError("coverage requires theta in (0, pi/2]");
    if (grid.empty()) throw OutOfRangeError("coverage requires a nonempty grid");

    PointGrid index(curve.points, grid_cell_for_curve(curve));

    const std::size_t g = grid.size();
    std::vector<double> dist(g);
    unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
    if (g < 1024) nthreads = 1;
    auto run = [&](unsigned t) {
        for (std::size_t i = t; i < g; i += nthreads) {
            auto [d2, q] = index.nearest_sq(grid[i].vec());
            (void)q;
            dist[i] = chord_to_geodesic(d2);
        }
    };
    if (nthreads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    // audit: every 100th grid point re-measured by a naive scan must agree
    for (std::size_t i = 0; i < g; i += 100) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : curve.points)
            best = std::min(best, (p.vec() - grid[i].vec()).norm_sq());
        if (chord_to_geodesic(best) != dist[i])
            throw InternalError("spatial index disagrees with the naive scan at grid point " +
                                std::to_string(i));
    }

    CoverageReport rep;
    rep.theta = theta;
    rep.grid_size = g;
    rep.curve_length = curve.total_length();
    std::size_t covered = 0;
    double max_gap = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < g; ++i) {
        if (dist[i] <= theta) ++covered;
        if (dist[i] > max_gap) { max_gap = dist[i]; worst = i; }
    }
    rep.max_gap = max_gap;
    rep.worst_grid_index = worst;
    rep.covered_fraction = double(covered) / double(g);
    rep.tube_area_estimate = rep.covered_fraction * 4.0 * kPi;
    rep.sphere_filling = max_gap <= theta + tolerance;
    return rep;
}

TubeAreaResult tube_area_law(const SampledCurve& curve, double theta,
                             std::size_t mc_points, std::uint64_t seed) {
    if (!(theta > 0.0 && theta <= kPi / 2.0 + 1e-15))
        throw InvalidThetaError("tube area requires theta in (0, pi/2]");
    if (!curve.closed)
        throw OpenCurveUnsupportedError(
            "the tube-area law compares against 2 sin(theta) * L, which excludes the endpoint "
            "caps of open curves");
    if (mc_points < 1) throw OutOfRangeError("need at least one Monte Carlo point");

    PointGrid index(curve.points, grid_cell_for_curve(curve));
    // strict inequality below: the tube is the open theta-neighbourhood
    double half_chord = std::sin(theta * 0.5);
    double limit_sq = 4.0 * half_chord * half_chord;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uz(-1.0, 1.0);
    std::uniform_real_distribution<double> uphi(0.0, 2.0 * kPi);
    std::size_t inside = 0;
    for (std::size_t i = 0; i < mc_points; ++i) {
        double z = uz(rng);
        double phi = uphi(rng);
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        Vec3 q(r * std::cos(phi), r * std::sin(phi), z);
        auto [d2, idx] = index.nearest_sq(q);
        (void)idx;
        if (d2 < limit_sq) ++inside;
    }
    TubeAreaResult res;
    res.area_estimate = 4.0 * kPi * double(inside) / double(mc_points);
    res.law_value = 2.0 * std::sin(theta) * curve.total_length();
    res.relative_error = std::abs(res.area_estimate - res.law_value) / res.law_value;
    return res;
}

double tube_area_law_check(const SampledCurve& curve, double theta,
                           std::size_t mc_points, std::uint64_t seed) {
    return tube_area_law(curve, theta, mc_points, seed).relative_error;
}

C1SimplicityReport c1_and_simplicity_check(const CurveSpec& spec, std::size_t samples_per_arc) {
    if (spec.arcs.empty()) throw OutOfRangeError("empty curve spec");
    if (samples_per_arc < 2) throw OutOfRangeError("need at least 2 samples per arc");

    C1SimplicityReport rep;
    const auto& arcs = spec.arcs;
    std::size_t junctions = spec.closed ? arcs.size() : arcs.size() - 1;

    rep.max_tangent_mismatch = 0.0;
    rep.max_endpoint_gap = 0.0;
    for (std::size_t i = 0; i < junctions; ++i) {
        const Arc& a = arcs[i];
        const Arc& b = arcs[(i + 1) % arcs.size()];
        double gap = (a.end().vec() - b.start().vec()).norm();
        double mismatch = (a.tangent(a.t0 + a.sweep).vec() - b.tangent(b.t0).vec()).norm();
        if (gap > rep.max_endpoint_gap) rep.max_endpoint_gap = gap;
        if (mismatch > rep.max_tangent_mismatch) {
            rep.max_tangent_mismatch = mismatch;
            rep.worst_junction = i;
        }
    }
    rep.c1_pass = rep.max_tangent_mismatch <= 1e-9;
    rep.endpoints_pass = rep.max_endpoint_gap <= 1e-9;

    // closure consistency: endpoints coincide iff the spec claims closed
    // (single-arc full circles close onto themselves)
    double closing_gap = (spec.arcs.back().end().vec() - spec.arcs.front().start().vec()).norm();
    rep.closure_consistent = spec.closed ? (closing_gap <= 1e-9) : (closing_gap > 1e-9);

    // simplicity: minimum separation between samples of non-adjacent arcs,
    // plus non-neighbouring samples within one arc
    std::vector<std::vector<UnitVec>> per_arc;
    per_arc.reserve(arcs.size());
    for (const auto& a : arcs) {
        std::vector<UnitVec> s;
        s.reserve(samples_per_arc + 1);
        for (std::size_t j = 0; j <= samples_per_arc; ++j)
            s.push_back(a.point_unchecked(a.t0 + a.sweep * double(j) / double(samples_per_arc)));
        per_arc.push_back(std::move(s));
    }
    double min_sep = std::numeric_limits<double>::infinity();
    std::size_t wa = 0, wb = 0;
    auto adjacent = [&](std::size_t i, std::size_t j) {
        if (i == j) return true;
        std::size_t d = (i > j) ? i - j : j - i;
        if (d == 1) return true;
        if (spec.closed && d == arcs.size() - 1) return true;
        return false;
    };
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            if (adjacent(i, j)) continue;
            for (const auto& pa : per_arc[i])
                for (const auto& pb : per_arc[j]) {
                    double d = geodesic_dist(pa, pb);
                    if (d < min_sep) { min_sep = d; wa = i; wb = j; }
                }
        }
    rep.min_nonadjacent_separation = min_sep;
    rep.separation_witness_a = wa;
    rep.separation_witness_b = wb;
    // curves with <= 3 arcs have no non-adjacent pairs; vacuously simple here
    rep.simple_pass = !std::isfinite(min_sep) || min_sep > 1e-9;
    return rep;
}

EndpointGeometry endpoint_geometry(const CurveSpec& spec) {
    if (spec.arcs.empty()) throw OutOfRangeError("empty curve spec");
    EndpointGeometry g;
    if (spec.closed) {
        g.kind = EndpointClass::closed_curve;
        g.distance = 0.0;
        return g;
    }
    g.distance = geodesic_dist(spec.start(), spec.end());
    g.kind = std::abs(g.distance - kPi) <= 1e-9 ? EndpointClass::antipodal
                                                : EndpointClass::non_antipodal;
    return g;
}

} // namespace sfrope
