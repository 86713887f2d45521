#ifndef SFROPE_GENERATOR_HPP
#define SFROPE_GENERATOR_HPP

#include <cstdint>
#include <vector>

#include "sfrope/curve.hpp"

namespace sfrope {

// Family constants. The closed family at index n has spherical thickness
// theta_n = pi/(2n) (Euclidean sin(pi/2n)); the open family at index n has
// omega_n = pi/n (Euclidean sin(pi/n)).
inline double closed_spherical_thickness(int n) { return kPi / (2.0 * n); }
inline double closed_thickness(int n) { return std::sin(kPi / (2.0 * n)); }
inline double open_spherical_thickness(int n) { return kPi / n; }
inline double open_thickness(int n) { return std::sin(kPi / n); }

/// Seam bookkeeping for the closed construction: 2n seam points indexed
/// j in Z_2n sit on the cut circle at angle (2j+1) theta_n from the north
/// pole. `west[j]` / `east[j]` give the seam point joined to j by the western
/// (resp. rotated eastern) semicircle through j. `component_count` counts the
/// closed components traced by alternating west/east hops.
struct SeamPermutation {
    std::vector<int> west;
    std::vector<int> east;
    int component_count = 0;
};

/// Pairings and component count for parameters (n, k), k in [0, n).
SeamPermutation seam_permutation(int n, int k);

/// Builds the closed solution curve for (n, k), gcd(n, k) = 1:
/// n latitudinal circles at colatitudes (2i+1) pi/(2n), cut along the
/// xz-plane, eastern halves rotated by 2k theta_n about +y, re-joined into a
/// single C^1 loop of 2n semicircular arcs with thickness sin(pi/2n).
/// Throws NotCoprimeError (carrying the component count) when gcd(n, k) != 1.
CurveSpec generate_closed(int n, int k);

/// Builds an open solution curve with spherical thickness pi/n.
/// Western pieces: pole(s) plus latitudinal semicircles at even multiples of
/// omega_n; eastern pieces: semicircles at odd multiples, rotated by
/// (2k+1) omega_n about +y. The result is validated against three gates
/// (thickness, sphere coverage, endpoint parity); ConstructionFailedError
/// reports the failing gate. k is admissible exactly when the chain closes
/// into one curve (empirically: gcd(2k+1, n) = 1).
CurveSpec generate_open(int n, int k);

enum class FamilyKind { closed, open };

/// Closed family: total curve length 2 pi / sin(pi/(2n)) (the sphere area
/// 4 pi divided by the tube width 2 sin(theta_n)). Open family: the arc-length
/// sum of the generated curve, pi * sum over the colatitude lattice of sines.
double analytic_length(FamilyKind family, int n);

struct SolutionEnumeration {
    std::vector<int> admissible_k;
    int totient = 0;
};

/// All k in [0, n) with gcd(n, k) = 1 (so (1, 0) is admissible), plus the
/// count, which equals Euler's phi(n).
SolutionEnumeration enumerate_solutions(int n);

/// Euler's totient by trial gcd scan.
int totient_scan(int n);

/// Rotation-invariant fingerprint of a curve spec: sorted pairwise geodesic
/// distances between arc midpoints, total length, arc count, and a chirality
/// sign (triple product of the first independent midpoint triple in arc
/// order). Distinct fingerprints imply non-congruent curves.
struct Fingerprint {
    std::vector<double> midpoint_distances; // sorted ascending
    double total_length = 0.0;
    std::size_t arc_count = 0;
    int chirality = 0; // -1, 0, +1

    /// Equality within the 1e-9 quantum on every distance and the length.
    bool equivalent(const Fingerprint& other, double tol = 1e-9) const;
};

Fingerprint congruence_fingerprint(const CurveSpec& spec);

} // namespace sfrope

#endif
