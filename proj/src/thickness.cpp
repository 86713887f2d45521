#include "sfrope/thickness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "sfrope/spatial_grid.hpp"

namespace sfrope {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Both engines and the parallel merge compare triples through this one
// predicate (squared circumradius as a rounded double), so value and witness
// are identical across engines and thread counts.
struct Best {
    double rsq = kInf;
    std::array<std::size_t, 3> w{};
    bool found = false;
};

inline void merge_best(Best& into, const Best& other) {
    if (!other.found) return;
    if (!into.found) { into = other; return; }
    if (other.rsq < into.rsq || (other.rsq == into.rsq && other.w < into.w)) into = other;
}

// Triple scan state: the multiply-only prefilter rejects nearly every triple
// without the division; the division-based compare is the canonical predicate.
struct Scan {
    Best best;
    double admit = kInf; // best.rsq * (1 + margin), guards prefilter rounding

    inline void consider(const Vec3& a, const Vec3& b, const Vec3& c,
                         std::size_t i, std::size_t j, std::size_t k) {
        Vec3 ab = b - a;
        Vec3 ac = c - a;
        Vec3 bc = c - b;
        double q1 = ab.norm_sq();
        double q2 = ac.norm_sq();
        double q3 = bc.norm_sq();
        Vec3 cr = ab.cross(ac);
        double d = 4.0 * cr.norm_sq();
        double n = q1 * q2 * q3;
        if (!(d > 1e-30 * n)) return; // collinear/coincident: R = +inf, skip
        if (!(n < admit * d)) return;
        double rsq = n / d;
        if (rsq < best.rsq || !best.found) {
            best.rsq = rsq;
            best.w = {i, j, k};
            best.found = true;
            admit = rsq * (1.0 + 4e-15);
        }
    }
};

unsigned worker_count(std::size_t work_items) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (work_items < 64) return 1;
    return hw;
}

ThicknessReport finish(const Best& best, std::size_t m) {
    if (!best.found)
        throw InternalError("no admissible triple found while measuring thickness");
    ThicknessReport rep;
    rep.delta = std::sqrt(best.rsq);
    rep.witness = best.w;
    // Spherical samples can never produce a circumradius above 1; anything
    // materially larger indicates corrupted input.
    if (rep.delta > 1.0 + 1e-9)
        throw InternalError("thickness " + std::to_string(rep.delta) +
                            " exceeds 1; input points are not on the unit sphere");
    (void)m;
    rep.spherical_theta = std::asin(std::min(rep.delta, 1.0));
    return rep;
}

} // namespace

ThicknessReport thickness_bruteforce(const SampledCurve& curve) {
    const auto& p = curve.points;
    const std::size_t m = p.size();
    if (m < 3) throw TooFewPointsError("thickness needs at least 3 samples");

    // structure-of-arrays copy so the k loop vectorizes
    std::vector<double> X(m), Y(m), Z(m);
    for (std::size_t i = 0; i < m; ++i) {
        X[i] = p[i].x();
        Y[i] = p[i].y();
        Z[i] = p[i].z();
    }

    unsigned nthreads = worker_count(m);
    std::vector<Best> results(nthreads);
    auto run = [&](unsigned t) {
        Scan scan;
        constexpr std::size_t B = 128;
        double nbuf[B], dbuf[B];
        // interleaved outer index for load balance
        for (std::size_t i = t; i + 2 < m; i += nthreads) {
            double ax = X[i], ay = Y[i], az = Z[i];
            for (std::size_t j = i + 1; j + 1 < m; ++j) {
                double bx = X[j], by = Y[j], bz = Z[j];
                double abx = bx - ax, aby = by - ay, abz = bz - az;
                double q1 = abx * abx + aby * aby + abz * abz;
                for (std::size_t k0 = j + 1; k0 < m; k0 += B) {
                    std::size_t len = std::min(B, m - k0);
                    // branch-free kernel evaluation; same expressions (and,
                    // with contraction off, the same rounding) as consider()
                    for (std::size_t kk = 0; kk < len; ++kk) {
                        std::size_t k = k0 + kk;
                        double acx = X[k] - ax, acy = Y[k] - ay, acz = Z[k] - az;
                        double bcx = X[k] - bx, bcy = Y[k] - by, bcz = Z[k] - bz;
                        double q2 = acx * acx + acy * acy + acz * acz;
                        double q3 = bcx * bcx + bcy * bcy + bcz * bcz;
                        double crx = aby * acz - abz * acy;
                        double cry = abz * acx - abx * acz;
                        double crz = abx * acy - aby * acx;
                        dbuf[kk] = 4.0 * (crx * crx + cry * cry + crz * crz);
                        nbuf[kk] = q1 * q2 * q3;
                    }
                    for (std::size_t kk = 0; kk < len; ++kk) {
                        double n = nbuf[kk], d = dbuf[kk];
                        if (!(d > 1e-30 * n)) continue;
                        if (!(n < scan.admit * d)) continue;
                        double rsq = n / d;
                        if (rsq < scan.best.rsq || !scan.best.found) {
                            scan.best.rsq = rsq;
                            scan.best.w = {i, j, k0 + kk};
                            scan.best.found = true;
                            scan.admit = rsq * (1.0 + 4e-15);
                        }
                    }
                }
            }
        }
        results[t] = scan.best;
    };
    if (nthreads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }
    Best total;
    for (const auto& r : results) merge_best(total, r);
    return finish(total, m);
}

namespace {

// Seed bound for the accelerated engine: circumradii of consecutive triples
// approximate the local curvature radius, which on the solution curves is
// already the global minimum.
double seed_rsq(const std::vector<UnitVec>& p, bool closed) {
    std::size_t m = p.size();
    double bound = kInf;
    std::size_t count = closed ? m : m - 2;
    for (std::size_t i = 0; i < count; ++i) {
        const Vec3& a = p[i].vec();
        const Vec3& b = p[(i + 1) % m].vec();
        const Vec3& c = p[(i + 2) % m].vec();
        Vec3 ab = b - a, ac = c - a, bc = c - b;
        double n = ab.norm_sq() * ac.norm_sq() * bc.norm_sq();
        double d = 4.0 * ab.cross(ac).norm_sq();
        if (d > 1e-30 * n && d > 0.0) bound = std::min(bound, n / d);
    }
    return bound;
}

} // namespace

ThicknessReport thickness_accelerated(const SampledCurve& curve) {
    const auto& p = curve.points;
    const std::size_t m = p.size();
    if (m < 3) throw TooFewPointsError("thickness needs at least 3 samples");

    double prune_rsq = seed_rsq(p, curve.closed);
    double cell = std::isfinite(prune_rsq) ? 2.0 * std::sqrt(prune_rsq) * 1.001 : 2.0;
    PointGrid grid(p, cell);

    // shared improvement bound; only ever shrinks, and any value >= the true
    // minimum keeps the pruning sound, so relaxed ordering is fine
    std::atomic<double> shared_rsq(prune_rsq);

    unsigned nthreads = worker_count(m);
    std::vector<Best> results(nthreads);
    auto run = [&](unsigned t) {
        Scan scan;
        std::vector<std::uint32_t> nb;
        for (std::size_t i = t; i + 2 < m; i += nthreads) {
            double bound = std::min(shared_rsq.load(std::memory_order_relaxed), scan.best.rsq);
            double limit = std::isfinite(bound) ? 2.0 * std::sqrt(bound) * (1.0 + 1e-9) : 2.1;
            double limit_sq = limit * limit;
            nb.clear();
            grid.collect_within(p[i].vec(), limit, nb);
            // keep only indices above i, in ascending order for the
            // lexicographic witness contract
            nb.erase(std::remove_if(nb.begin(), nb.end(),
                                    [i](std::uint32_t q) { return q <= i; }),
                     nb.end());
            std::sort(nb.begin(), nb.end());
            const Vec3& a = p[i].vec();
            for (std::size_t x = 0; x + 1 < nb.size(); ++x) {
                std::size_t j = nb[x];
                const Vec3& b = p[j].vec();
                for (std::size_t y = x + 1; y < nb.size(); ++y) {
                    std::size_t k = nb[y];
                    if ((p[k].vec() - b).norm_sq() > limit_sq) continue;
                    scan.consider(a, b, p[k].vec(), i, j, k);
                }
            }
            if (scan.best.found && scan.best.rsq < bound) {
                double cur = shared_rsq.load(std::memory_order_relaxed);
                while (scan.best.rsq < cur &&
                       !shared_rsq.compare_exchange_weak(cur, scan.best.rsq,
                                                         std::memory_order_relaxed)) {
                }
            }
        }
        results[t] = scan.best;
    };
    if (nthreads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }
    Best total;
    for (const auto& r : results) merge_best(total, r);
    return finish(total, m);
}

double spherical_thickness(double delta) {
    if (!(delta > 0.0) || delta > 1.0 + 1e-12)
        throw OutOfRangeError("spherical thickness is defined for delta in (0, 1]");
    return std::asin(std::min(delta, 1.0));
}

FgbReport fgb_check(const SampledCurve& curve, double theta, double tolerance) {
    if (!(theta > 0.0 && theta <= kPi / 2.0 + 1e-15))
        throw InvalidThetaError("fgb_check requires theta in (0, pi/2]");
    const auto& p = curve.points;
    const std::size_t m = p.size();

    PointGrid grid(p, std::max(0.05, 2.0 * curve.total_length() / double(m)));

    FgbReport rep;
    rep.pass = true;
    rep.theta = theta;
    rep.tolerance = tolerance;
    rep.worst_clearance = kInf;

    double ct = std::cos(theta), st = std::sin(theta);
    for (std::size_t i = 0; i < m; ++i) {
        // central-difference tangent; one-sided at open-curve endpoints
        Vec3 fwd, bwd;
        if (curve.closed) {
            fwd = p[(i + 1) % m].vec();
            bwd = p[(i + m - 1) % m].vec();
        } else {
            fwd = p[std::min(i + 1, m - 1)].vec();
            bwd = p[i == 0 ? 0 : i - 1].vec();
        }
        UnitVec tangent{fwd - bwd};
        Vec3 normal = p[i].vec().cross(tangent.vec());
        double nn = normal.norm();
        if (!(nn > 1e-12)) throw InternalError("degenerate tangent estimate in fgb_check");
        normal = normal * (1.0 / nn);
        for (int side : {+1, -1}) {
            Vec3 center = p[i].vec() * ct + normal * (st * side);
            auto [d2, q] = grid.nearest_sq(center);
            UnitVec c{center};
            double dist = geodesic_dist(p[q], c);
            double clearance = dist - theta;
            if (clearance < rep.worst_clearance) {
                rep.worst_clearance = clearance;
                rep.worst_sample = i;
                rep.worst_side = side;
                rep.worst_violator = q;
            }
        }
    }
    rep.pass = rep.worst_clearance >= -tolerance;
    return rep;
}

} // namespace sfrope
