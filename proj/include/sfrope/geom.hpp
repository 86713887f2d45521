#ifndef SFROPE_GEOM_HPP
#define SFROPE_GEOM_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "sfrope/errors.hpp"

namespace sfrope {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kUnitNormTol = 1e-12;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x, double y, double z) : x(x), y(y), z(z) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm_sq() const { return dot(*this); }
    double norm() const { return std::sqrt(norm_sq()); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// A point (or direction) on the unit sphere. Construction normalizes;
/// the invariant |v| = 1 holds to 1e-12 afterwards.
class UnitVec {
public:
    UnitVec() : v_(0.0, 0.0, 1.0) {}
    UnitVec(double x, double y, double z) : UnitVec(Vec3(x, y, z)) {}
    explicit UnitVec(const Vec3& v) : v_(v) {
        double n = v_.norm();
        if (!(n > 1e-300))
            throw OutOfRangeError("cannot normalize a (near-)zero vector onto the sphere");
        v_.x /= n; v_.y /= n; v_.z /= n;
    }

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    const Vec3& vec() const { return v_; }
    operator const Vec3&() const { return v_; }

    UnitVec operator-() const { UnitVec r; r.v_ = -v_; return r; }

private:
    Vec3 v_;
};

/// Intrinsic (great-circle) distance in radians, in [0, pi].
/// The atan2 form stays accurate near coincident and antipodal pairs,
/// where acos of the dot product loses half the working precision.
inline double geodesic_dist(const UnitVec& a, const UnitVec& b) {
    Vec3 c = a.vec().cross(b.vec());
    return std::atan2(c.norm(), a.vec().dot(b.vec()));
}

/// An open spherical cap {dist(center, .) < radius}, radius in (0, pi/2].
struct GeodesicBall {
    UnitVec center;
    double radius;

    GeodesicBall(const UnitVec& center, double radius) : center(center), radius(radius) {
        if (!(radius > 0.0 && radius <= kPi / 2.0 + 1e-15))
            throw InvalidThetaError("geodesic ball radius must lie in (0, pi/2]");
    }
    bool contains(const UnitVec& p) const { return geodesic_dist(center, p) < radius; }
    /// Euclidean radius of the boundary circle.
    double boundary_circle_radius() const { return std::sin(radius); }
};

namespace detail {

// Shared triple kernel: squared circumradius as the exact pair
// (N, D) with R^2 = N / D, N = |ab|^2 |bc|^2 |ca|^2, D = 4 |ab x ac|^2.
// Comparisons against a candidate R*^2 are done as N < (4 R*^2) * |cross|^2
// so the brute-force and accelerated engines order triples identically.
struct TripleKernel {
    double n;   // squared side-length product
    double d;   // 4 * squared doubled-triangle-area
};

inline TripleKernel triple_kernel(const Vec3& a, const Vec3& b, const Vec3& c) {
    Vec3 ab = b - a;
    Vec3 ac = c - a;
    Vec3 bc = c - b;
    double q1 = ab.norm_sq();
    double q2 = ac.norm_sq();
    double q3 = bc.norm_sq();
    Vec3 cr = ab.cross(ac);
    double a4 = 4.0 * cr.norm_sq();
    return {q1 * q2 * q3, a4};
}

// Relative-area collinearity cutoff. |cross|^2 compares against the two
// spanning sides; below the cutoff the circumradius is reported infinite.
inline bool kernel_degenerate(const TripleKernel& k) {
    return !(k.d > 1e-30 * k.n) || !(k.d > 0.0);
}

} // namespace detail

/// Circumradius of three points in 3-space:
///   R = (|a-b| |b-c| |c-a|) / (4 A),  A = |(b-a) x (c-a)| / 2.
/// Returns +infinity for (numerically) collinear triples.
/// Throws DegenerateTripleError if any two inputs coincide within 1e-12.
inline double circumradius(const Vec3& a, const Vec3& b, const Vec3& c) {
    if ((a - b).norm() <= 1e-12 || (b - c).norm() <= 1e-12 || (c - a).norm() <= 1e-12)
        throw DegenerateTripleError("circumradius requires three pairwise distinct points");
    auto k = detail::triple_kernel(a, b, c);
    if (detail::kernel_degenerate(k)) return std::numeric_limits<double>::infinity();
    return std::sqrt(k.n / k.d);
}

/// Rodrigues rotation of p about a unit axis by `angle` (right-hand rule).
inline Vec3 rotate_about_axis(const Vec3& p, const UnitVec& axis, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    const Vec3& u = axis.vec();
    return p * c + u.cross(p) * s + u * (u.dot(p) * (1.0 - c));
}

inline UnitVec rotate_about_axis(const UnitVec& p, const UnitVec& axis, double angle) {
    return UnitVec(rotate_about_axis(p.vec(), axis, angle));
}

/// A circular arc on the sphere. The supporting circle has spherical center
/// `axis` and spherical radius `rho` in (0, pi); (e1, e2, axis) is a
/// right-handed orthonormal frame with e1, e2 perpendicular to axis.
///
///   point(t) = cos(rho) axis + sin(rho) (cos(t) e1 + sin(t) e2)
///
/// for t running from t0 over a signed sweep, |sweep| <= 2 pi.
struct Arc {
    UnitVec axis;
    double rho;
    UnitVec e1, e2;
    double t0;
    double sweep;

    Arc(const UnitVec& axis, double rho, const UnitVec& e1, const UnitVec& e2,
        double t0, double sweep)
        : axis(axis), rho(rho), e1(e1), e2(e2), t0(t0), sweep(sweep) {
        validate();
    }

    void validate() const;

    UnitVec point(double t) const {
        check_param(t);
        return point_unchecked(t);
    }

    UnitVec point_unchecked(double t) const {
        double sr = std::sin(rho), cr = std::cos(rho);
        Vec3 p = axis.vec() * cr + (e1.vec() * std::cos(t) + e2.vec() * std::sin(t)) * sr;
        return UnitVec(p);
    }

    /// Unit tangent at parameter t, oriented along the direction of traversal
    /// (i.e. following the sign of sweep).
    UnitVec tangent(double t) const {
        check_param(t);
        Vec3 d = e2.vec() * std::cos(t) - e1.vec() * std::sin(t);
        if (sweep < 0.0) d = -d;
        return UnitVec(d);
    }

    UnitVec start() const { return point_unchecked(t0); }
    UnitVec end() const { return point_unchecked(t0 + sweep); }

    double length() const { return std::abs(sweep) * std::sin(rho); }

private:
    void check_param(double t) const {
        double lo = std::min(t0, t0 + sweep), hi = std::max(t0, t0 + sweep);
        if (t < lo - 1e-9 || t > hi + 1e-9)
            throw ParamOutOfRangeError("arc parameter outside [t0, t0 + sweep]");
    }
};

/// Deterministic, near-uniform spiral lattice on the sphere.
std::vector<UnitVec> sample_sphere_fibonacci(std::size_t count);

/// Uniform i.i.d. points on the sphere, reproducible from the seed.
std::vector<UnitVec> sample_sphere_random(std::size_t count, std::uint64_t seed);

} // namespace sfrope

#endif
