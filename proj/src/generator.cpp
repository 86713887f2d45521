#include "sfrope/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sfrope/thickness.hpp"
#include "sfrope/verifier.hpp"

namespace sfrope {

namespace {

const UnitVec kXHat{1.0, 0.0, 0.0};
const UnitVec kYHat{0.0, 1.0, 0.0};
const UnitVec kZHat{0.0, 0.0, 1.0};

// Frame of a latitudinal circle (axis +z) rotated by `beta` about +y.
struct LatFrame {
    UnitVec axis, e1, e2;
};

LatFrame rotated_frame(double beta) {
    if (beta == 0.0) return {kZHat, kXHat, kYHat};
    return {rotate_about_axis(kZHat, kYHat, beta), rotate_about_axis(kXHat, kYHat, beta), kYHat};
}

// Western semicircle (y <= 0) of the latitude circle at colatitude `colat`,
// oriented from the chosen endpoint: the front endpoint is at t = 0
// (seam angle = colat), the back endpoint at t = -pi (seam angle 2pi - colat).
Arc west_semicircle(double colat, bool from_front) {
    if (from_front) return Arc(kZHat, colat, kXHat, kYHat, 0.0, -kPi);
    return Arc(kZHat, colat, kXHat, kYHat, -kPi, kPi);
}

// Eastern semicircle (y >= 0 both before and after the rotation, which is
// about +y and hence preserves the y coordinate), rotated by `beta`.
Arc east_semicircle(double colat, double beta, bool from_front) {
    LatFrame f = rotated_frame(beta);
    if (from_front) return Arc(f.axis, colat, f.e1, f.e2, 0.0, kPi);
    return Arc(f.axis, colat, f.e1, f.e2, kPi, -kPi);
}

} // namespace

SeamPermutation seam_permutation(int n, int k) {
    if (n < 1) throw OutOfRangeError("seam_permutation requires n >= 1");
    if (k < 0 || k >= n) throw InvalidKError("k must lie in [0, n)");
    int m = 2 * n;
    SeamPermutation sp;
    sp.west.resize(m);
    sp.east.resize(m);
    for (int j = 0; j < m; ++j) {
        sp.west[j] = ((-1 - j) % m + m) % m;
        sp.east[j] = ((2 * k - 1 - j) % m + m) % m;
    }
    // components by explicit traversal: from a seam point, alternate the
    // western and eastern semicircle hops until the walk closes
    std::vector<char> seen(m, 0);
    int components = 0;
    for (int start = 0; start < m; ++start) {
        if (seen[start]) continue;
        ++components;
        int j = start;
        bool west_next = true;
        while (!seen[j]) {
            seen[j] = 1;
            j = west_next ? sp.west[j] : sp.east[j];
            west_next = !west_next;
        }
    }
    sp.component_count = components;
    return sp;
}

CurveSpec generate_closed(int n, int k) {
    if (n < 1) throw OutOfRangeError("generate_closed requires n >= 1");
    if (k < 0 || k >= n) throw InvalidKError("k must lie in [0, n)");
    SeamPermutation sp = seam_permutation(n, k);
    if (sp.component_count != 1) throw NotCoprimeError(n, k, sp.component_count);

    double theta = closed_spherical_thickness(n);
    double beta = 2.0 * k * theta;
    int m = 2 * n;

    // Circle index of the western arc with a seam endpoint at j, and of the
    // (rotated) eastern arc with a rotated endpoint at j.
    auto west_circle = [&](int j) { return j < n ? j : m - 1 - j; };
    auto east_circle = [&](int j) {
        int j0 = ((j - k) % m + m) % m; // unrotated endpoint index
        return j0 < n ? j0 : m - 1 - j0;
    };
    // A western arc's front endpoint is seam index i (= its circle index);
    // an eastern arc's rotated front endpoint is i + k mod 2n.

    CurveSpec spec;
    spec.closed = true;
    spec.meta = SolutionId{SolutionId::Family::closed, n, k};
    spec.arcs.reserve(m);

    int j = 0; // start at the front endpoint of C_0's western semicircle
    bool west_next = true;
    for (int step = 0; step < m; ++step) {
        if (west_next) {
            int i = west_circle(j);
            double colat = (2 * i + 1) * theta;
            bool from_front = (j == i);
            spec.arcs.push_back(west_semicircle(colat, from_front));
            j = sp.west[j];
        } else {
            int i = east_circle(j);
            double colat = (2 * i + 1) * theta;
            bool from_front = (j == (i + k) % m);
            spec.arcs.push_back(east_semicircle(colat, beta, from_front));
            j = sp.east[j];
        }
        west_next = !west_next;
    }
    if (j != 0)
        throw InternalError("closed construction traversal did not return to its start");
    return spec;
}

namespace {

struct OpenPiece {
    double colat;
    bool east;
    int end_a, end_b; // seam lattice units (multiples of omega), mod 2n
};

std::string lattice_str(int unit, int n) {
    std::ostringstream os;
    os << unit << "*pi/" << n;
    return os.str();
}

} // namespace

CurveSpec generate_open(int n, int k) {
    if (n < 2) throw OutOfRangeError("generate_open requires n >= 2");
    if (k < 0 || k >= n) throw InvalidKError("k must lie in [0, n)");

    double omega = open_spherical_thickness(n);
    int rot_units = 2 * k + 1; // rotation angle in units of omega
    double beta = rot_units * omega;
    int m = 2 * n;

    // Western semicircles at even colatitude multiples, eastern at odd
    // multiples rotated by beta. Seam endpoints live on the even sublattice.
    std::vector<OpenPiece> pieces;
    for (int u = 2; u < n; u += 2)
        pieces.push_back({u * omega, false, u % m, (m - u) % m});
    for (int u = 1; u < n; u += 2)
        pieces.push_back({u * omega, true, (u + rot_units) % m, (m - u + rot_units) % m});

    // Expected free ends: the north pole (lattice 0) always; for even n the
    // south pole (lattice n), for odd n the rotated south-pole image.
    int far_end = (n % 2 == 0) ? n : (n + rot_units) % m;

    // n = 2 has a single eastern arc and no western ones.
    if (pieces.empty()) throw InternalError("open construction produced no arcs");

    // Chain the pieces starting from the north pole, alternating east/west.
    std::vector<char> used(pieces.size(), 0);
    CurveSpec spec;
    spec.closed = false;
    spec.meta = SolutionId{SolutionId::Family::open, n, k};
    int cur = 0;
    bool want_east = true;
    for (;;) {
        int found = -1;
        for (std::size_t idx = 0; idx < pieces.size(); ++idx) {
            if (used[idx] || pieces[idx].east != want_east) continue;
            if (pieces[idx].end_a == cur || pieces[idx].end_b == cur) { found = int(idx); break; }
        }
        if (found < 0) break;
        used[found] = 1;
        const OpenPiece& pc = pieces[found];
        // For a western arc, end_a is the front endpoint; for an eastern arc,
        // end_a is the rotated front endpoint.
        bool from_front = (pc.end_a == cur);
        spec.arcs.push_back(pc.east ? east_semicircle(pc.colat, beta, from_front)
                                    : west_semicircle(pc.colat, from_front));
        cur = from_front ? pc.end_b : pc.end_a;
        want_east = !want_east;
    }

    if (spec.arcs.size() != pieces.size()) {
        std::ostringstream os;
        os << "chain from the north pole consumed " << spec.arcs.size() << " of "
           << pieces.size() << " arcs (n=" << n << ", k=" << k << ")";
        throw ConstructionFailedError("connectivity", os.str());
    }
    if (cur != far_end) {
        std::ostringstream os;
        os << "chain ended at seam lattice " << lattice_str(cur, n) << ", expected "
           << lattice_str(far_end, n);
        throw ConstructionFailedError("connectivity", os.str());
    }

    // Validation gates. The construction scheme is checked, not assumed:
    // (i) sampled thickness, (ii) sphere coverage, (iii) endpoint parity.
    ThicknessReport th = thickness_accelerated(sample_curve(spec, 900));
    if (std::abs(th.delta - std::sin(omega)) > 1e-3) {
        std::ostringstream os;
        os << "sampled thickness " << th.delta << " vs sin(pi/" << n << ") = " << std::sin(omega);
        throw ConstructionFailedError("thickness", os.str());
    }
    SampledCurve dense = sample_curve_per_arc(spec, 500);
    auto grid = sample_sphere_fibonacci(100000);
    CoverageReport cov = coverage_report(dense, omega, grid, 2e-3);
    if (cov.max_gap > omega + 2e-3) {
        std::ostringstream os;
        os << "coverage gap " << cov.max_gap << " exceeds omega + 2e-3 = " << omega + 2e-3;
        throw ConstructionFailedError("coverage", os.str());
    }
    double end_dist = geodesic_dist(spec.start(), spec.end());
    bool antipodal = std::abs(end_dist - kPi) <= 1e-9;
    if (antipodal != (n % 2 == 0)) {
        std::ostringstream os;
        os << "endpoint distance " << end_dist << " (antipodal: " << (antipodal ? "yes" : "no")
           << ") inconsistent with n = " << n;
        throw ConstructionFailedError("endpoints", os.str());
    }
    return spec;
}

double analytic_length(FamilyKind family, int n) {
    if (n < 1) throw OutOfRangeError("analytic_length requires n >= 1");
    if (family == FamilyKind::closed) return 2.0 * kPi / std::sin(closed_spherical_thickness(n));
    // open family: arc-length sum of the construction, semicircles at every
    // colatitude lattice multiple u * pi/n for u = 1..n-1
    double s = 0.0;
    for (int u = 1; u < n; ++u) s += std::sin(u * kPi / n);
    return kPi * s;
}

SolutionEnumeration enumerate_solutions(int n) {
    if (n < 1) throw OutOfRangeError("enumerate_solutions requires n >= 1");
    SolutionEnumeration e;
    for (int k = 0; k < n; ++k)
        if (std::gcd(n, k) == 1) e.admissible_k.push_back(k);
    e.totient = totient_scan(n);
    return e;
}

int totient_scan(int n) {
    if (n < 1) throw OutOfRangeError("totient requires n >= 1");
    int count = 0;
    for (int k = 0; k < n; ++k)
        if (std::gcd(n, k) == 1) ++count;
    return count;
}

bool Fingerprint::equivalent(const Fingerprint& other, double tol) const {
    if (arc_count != other.arc_count) return false;
    if (chirality != other.chirality) return false;
    if (std::abs(total_length - other.total_length) > tol) return false;
    if (midpoint_distances.size() != other.midpoint_distances.size()) return false;
    for (std::size_t i = 0; i < midpoint_distances.size(); ++i)
        if (std::abs(midpoint_distances[i] - other.midpoint_distances[i]) > tol) return false;
    return true;
}

Fingerprint congruence_fingerprint(const CurveSpec& spec) {
    Fingerprint fp;
    fp.arc_count = spec.arcs.size();
    fp.total_length = spec.total_arc_length();
    std::vector<UnitVec> mids;
    mids.reserve(spec.arcs.size());
    for (const auto& a : spec.arcs) mids.push_back(a.point_unchecked(a.t0 + 0.5 * a.sweep));
    for (std::size_t i = 0; i < mids.size(); ++i)
        for (std::size_t j = i + 1; j < mids.size(); ++j)
            fp.midpoint_distances.push_back(geodesic_dist(mids[i], mids[j]));
    std::sort(fp.midpoint_distances.begin(), fp.midpoint_distances.end());
    // chirality: signed volume of the first midpoint triple that spans 3-space,
    // taken in arc order; invariant under rotations, flips under reflection
    fp.chirality = 0;
    for (std::size_t i = 0; i + 2 < mids.size() && fp.chirality == 0; ++i) {
        double det = mids[i].vec().dot(mids[i + 1].vec().cross(mids[i + 2].vec()));
        if (std::abs(det) > 1e-9) fp.chirality = det > 0 ? 1 : -1;
    }
    return fp;
}

} // namespace sfrope
