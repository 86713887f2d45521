#ifndef SFROPE_TEST_HELPERS_HPP
#define SFROPE_TEST_HELPERS_HPP

#include <cmath>
#include <random>
#include <vector>

#include "sfrope/curve.hpp"
#include "sfrope/geom.hpp"

namespace sfrope::testutil {

inline UnitVec random_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uz(-1.0, 1.0);
    std::uniform_real_distribution<double> uphi(0.0, 2.0 * kPi);
    double z = uz(rng);
    double phi = uphi(rng);
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return UnitVec(Vec3(r * std::cos(phi), r * std::sin(phi), z));
}

// Uniform random rotation from three uniform axis-angle draws; good enough
// for invariance tests.
struct RandomRotation {
    UnitVec axis;
    double angle;

    static RandomRotation draw(std::mt19937_64& rng) {
        std::uniform_real_distribution<double> ua(0.0, 2.0 * kPi);
        return {random_unit(rng), ua(rng)};
    }
    Vec3 apply(const Vec3& v) const { return rotate_about_axis(v, axis, angle); }
    UnitVec apply(const UnitVec& v) const { return rotate_about_axis(v, axis, angle); }
};

// Latitudinal circle at the given colatitude, sampled uniformly.
inline SampledCurve latitude_circle(double colat, std::size_t m) {
    std::vector<UnitVec> pts;
    pts.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        double t = 2.0 * kPi * double(i) / double(m);
        pts.emplace_back(Vec3(std::sin(colat) * std::cos(t), std::sin(colat) * std::sin(t),
                              std::cos(colat)));
    }
    return SampledCurve::from_points(std::move(pts), true);
}

// Smoothly perturbed equator: z-displacement a sin(m phi + shift), projected
// back onto the sphere. Mode m >= 2 so the perturbation is not a rigid tilt.
inline SampledCurve perturbed_equator(double amplitude, int mode, double shift, std::size_t m) {
    std::vector<UnitVec> pts;
    pts.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        double phi = 2.0 * kPi * double(i) / double(m);
        double z = amplitude * std::sin(mode * phi + shift);
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        pts.emplace_back(Vec3(r * std::cos(phi), r * std::sin(phi), z));
    }
    return SampledCurve::from_points(std::move(pts), true);
}

// Wobbly closed curve for randomized engine-equivalence tests: a tilted
// circle with a few random Fourier modes in both colatitude and longitude.
inline SampledCurve random_smooth_curve(std::mt19937_64& rng, std::size_t m) {
    std::uniform_real_distribution<double> amp(0.02, 0.25);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * kPi);
    std::uniform_int_distribution<int> mode(2, 5);
    double a1 = amp(rng), a2 = amp(rng) * 0.5;
    int m1 = mode(rng), m2 = mode(rng);
    double p1 = ph(rng), p2 = ph(rng);
    double base_colat = kPi / 2.0 + amp(rng);
    std::vector<UnitVec> pts;
    pts.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        double phi = 2.0 * kPi * double(i) / double(m);
        double colat = base_colat + a1 * std::sin(m1 * phi + p1) + a2 * std::sin(m2 * phi + p2);
        pts.emplace_back(Vec3(std::sin(colat) * std::cos(phi), std::sin(colat) * std::sin(phi),
                              std::cos(colat)));
    }
    return SampledCurve::from_points(std::move(pts), true);
}

// Two intersecting small circles stitched into one (self-crossing) closed
// polyline; used as the forbidden-ball failure witness.
inline SampledCurve self_crossing_curve(std::size_t per_circle) {
    std::vector<UnitVec> pts;
    pts.reserve(2 * per_circle);
    double rho = kPi / 3.0;
    for (std::size_t i = 0; i < per_circle; ++i) { // about +z
        double t = 2.0 * kPi * double(i) / double(per_circle);
        pts.emplace_back(Vec3(std::sin(rho) * std::cos(t), std::sin(rho) * std::sin(t),
                              std::cos(rho)));
    }
    for (std::size_t i = 0; i < per_circle; ++i) { // about +x
        double t = 2.0 * kPi * double(i) / double(per_circle);
        pts.emplace_back(Vec3(std::cos(rho), std::sin(rho) * std::cos(t),
                              std::sin(rho) * std::sin(t)));
    }
    return SampledCurve::from_points(std::move(pts), true);
}

} // namespace sfrope::testutil

#endif
