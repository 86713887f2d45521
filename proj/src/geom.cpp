#include "sfrope/geom.hpp"

#include <random>

namespace sfrope {

void Arc::validate() const {
    if (!(rho > 0.0 && rho < kPi))
        throw OutOfRangeError("arc spherical radius must lie in (0, pi)");
    if (!(std::abs(sweep) <= 2.0 * kPi + 1e-12))
        throw OutOfRangeError("arc sweep must satisfy |sweep| <= 2 pi");
    double tol = 1e-9;
    if (std::abs(e1.vec().dot(axis.vec())) > tol || std::abs(e2.vec().dot(axis.vec())) > tol ||
        std::abs(e1.vec().dot(e2.vec())) > tol)
        throw OutOfRangeError("arc frame is not orthonormal");
    // right-handed: e1 x e2 = axis
    if ((e1.vec().cross(e2.vec()) - axis.vec()).norm() > 1e-9)
        throw OutOfRangeError("arc frame is not right-handed with the axis");
}

std::vector<UnitVec> sample_sphere_fibonacci(std::size_t count) {
    if (count < 1) throw OutOfRangeError("sample count must be >= 1");
    std::vector<UnitVec> out;
    out.reserve(count);
    // golden-angle longitude increment
    const double ga = kPi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
        double z = 1.0 - (2.0 * double(i) + 1.0) / double(count);
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = ga * double(i);
        out.emplace_back(Vec3(r * std::cos(phi), r * std::sin(phi), z));
    }
    return out;
}

std::vector<UnitVec> sample_sphere_random(std::size_t count, std::uint64_t seed) {
    if (count < 1) throw OutOfRangeError("sample count must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uz(-1.0, 1.0);
    std::uniform_real_distribution<double> uphi(0.0, 2.0 * kPi);
    std::vector<UnitVec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double z = uz(rng);
        double phi = uphi(rng);
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        out.emplace_back(Vec3(r * std::cos(phi), r * std::sin(phi), z));
    }
    return out;
}

} // namespace sfrope
