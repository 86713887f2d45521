#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sfrope/generator.hpp"
#include "sfrope/thickness.hpp"
#include "test_helpers.hpp"

using namespace sfrope;
namespace tu = sfrope::testutil;

TEST_CASE("sampled curve validation") {
    std::vector<UnitVec> two = {UnitVec(1, 0, 0), UnitVec(0, 1, 0)};
    CHECK_THROWS_AS(SampledCurve::from_points(two, false), TooFewPointsError);
    std::vector<UnitVec> dup = {UnitVec(1, 0, 0), UnitVec(1, 0, 0), UnitVec(0, 1, 0)};
    CHECK_THROWS_AS(SampledCurve::from_points(dup, false), OutOfRangeError);

    auto c = tu::latitude_circle(kPi / 2, 100);
    for (std::size_t i = 1; i < c.cumulative_arclength.size(); ++i)
        CHECK(c.cumulative_arclength[i] > c.cumulative_arclength[i - 1]);
    CHECK(c.total_length() == doctest::Approx(2 * kPi).epsilon(1e-4));
}

TEST_CASE("equator thickness is 1") {
    auto eq = tu::latitude_circle(kPi / 2, 720);
    auto rep = thickness_bruteforce(eq);
    CHECK(rep.delta == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(rep.spherical_theta == doctest::Approx(kPi / 2).epsilon(1e-4));
    // every equator triple attains the minimum up to rounding noise
    CHECK(rep.delta > 1.0 - 1e-9);
}

TEST_CASE("latitudinal circle at colatitude pi/6 has thickness sin(pi/6)") {
    auto c = tu::latitude_circle(kPi / 6, 720);
    auto rep = thickness_bruteforce(c);
    CHECK(rep.delta == doctest::Approx(0.5).epsilon(1e-4));
    // witness circumradius reproduces delta
    double r = circumradius(c.points[rep.witness[0]].vec(), c.points[rep.witness[1]].vec(),
                            c.points[rep.witness[2]].vec());
    CHECK(std::abs(r - rep.delta) < 1e-12);
}

TEST_CASE("generated (2,1) solution measures sin(pi/4) by brute force") {
    auto spec = generate_closed(2, 1);
    auto samples = sample_curve(spec, 2000);
    auto rep = thickness_bruteforce(samples);
    CHECK(rep.delta == doctest::Approx(std::sin(kPi / 4)).epsilon(1e-3));
}

TEST_CASE("engines agree on canonical inputs") {
    auto eq = tu::latitude_circle(kPi / 2, 500);
    auto b = thickness_bruteforce(eq);
    auto a = thickness_accelerated(eq);
    CHECK(a.delta == b.delta);
    CHECK(a.witness == b.witness);

    auto c = tu::latitude_circle(kPi / 6, 500);
    auto b2 = thickness_bruteforce(c);
    auto a2 = thickness_accelerated(c);
    CHECK(a2.delta == b2.delta);
    CHECK(a2.witness == b2.witness);
}

TEST_CASE("oracle equivalence on 50 random smooth curves") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<std::size_t> msize(60, 200);
    for (int trial = 0; trial < 50; ++trial) {
        auto curve = tu::random_smooth_curve(rng, msize(rng));
        auto b = thickness_bruteforce(curve);
        auto a = thickness_accelerated(curve);
        CHECK(std::abs(a.delta - b.delta) <= 1e-14);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("two near-touching strands: thickness is the chordal half-gap") {
    // two parallel small circles, geodesic gap 0.2
    double c1 = kPi / 2 - 0.1, c2 = kPi / 2 + 0.1;
    std::vector<UnitVec> pts;
    for (std::size_t i = 0; i < 400; ++i) {
        double t = 2.0 * kPi * double(i) / 400.0;
        pts.emplace_back(Vec3(std::sin(c1) * std::cos(t), std::sin(c1) * std::sin(t),
                              std::cos(c1)));
    }
    for (std::size_t i = 0; i < 400; ++i) {
        double t = -2.0 * kPi * double(i) / 400.0;
        pts.emplace_back(Vec3(std::sin(c2) * std::cos(t), std::sin(c2) * std::sin(t),
                              std::cos(c2)));
    }
    auto curve = SampledCurve::from_points(std::move(pts), true);
    auto b = thickness_bruteforce(curve);
    auto a = thickness_accelerated(curve);
    CHECK(a.delta == b.delta);
    CHECK(a.witness == b.witness);
    CHECK(b.delta == doctest::Approx(std::sin(0.1)).epsilon(5e-3));
}

TEST_CASE("isometry invariance of thickness") {
    std::mt19937_64 rng(379);
    auto spec = generate_closed(3, 1);
    auto samples = sample_curve(spec, 400);
    auto base = thickness_accelerated(samples);
    for (int i = 0; i < 5; ++i) {
        auto rot = tu::RandomRotation::draw(rng);
        std::vector<UnitVec> moved;
        moved.reserve(samples.size());
        for (const auto& p : samples.points) moved.push_back(rot.apply(p));
        auto rep = thickness_accelerated(SampledCurve::from_points(std::move(moved),
                                                                   samples.closed));
        CHECK(std::abs(rep.delta - base.delta) < 1e-12);
    }
}

TEST_CASE("spherical thickness bound: delta never exceeds 1") {
    std::mt19937_64 rng(733);
    for (int i = 0; i < 10; ++i) {
        auto curve = tu::random_smooth_curve(rng, 150);
        CHECK(thickness_accelerated(curve).delta <= 1.0 + 1e-9);
    }
}

TEST_CASE("refinement: doubling samples moves delta by less than 1e-3") {
    auto spec = generate_closed(2, 1);
    double d1 = thickness_accelerated(sample_curve(spec, 1000)).delta;
    double d2 = thickness_accelerated(sample_curve(spec, 2000)).delta;
    CHECK(std::abs(d1 - d2) <= 1e-3);

    double e1 = thickness_accelerated(tu::latitude_circle(kPi / 2, 1000)).delta;
    double e2 = thickness_accelerated(tu::latitude_circle(kPi / 2, 2000)).delta;
    CHECK(std::abs(e1 - e2) <= 1e-3);
}

TEST_CASE("spherical_thickness conversion") {
    CHECK(spherical_thickness(1.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(spherical_thickness(std::sin(kPi / 8)) == doctest::Approx(kPi / 8).epsilon(1e-12));
    CHECK(spherical_thickness(0.5) == doctest::Approx(kPi / 6).epsilon(1e-12));
    CHECK_THROWS_AS(spherical_thickness(0.0), OutOfRangeError);
    CHECK_THROWS_AS(spherical_thickness(1.5), OutOfRangeError);
}

TEST_CASE("forbidden-ball check: equator passes with hemispheric balls") {
    auto eq = tu::latitude_circle(kPi / 2, 800);
    auto rep = fgb_check(eq, kPi / 2, 1e-3);
    CHECK(rep.pass);
    // the touching balls are the two open hemispheres; every sample sits
    // exactly on their boundary
    CHECK(std::abs(rep.worst_clearance) < 1e-6);
}

TEST_CASE("forbidden-ball check: generated (3,1) passes at theta = pi/6") {
    auto spec = generate_closed(3, 1);
    auto samples = sample_curve(spec, 1200);
    auto rep = fgb_check(samples, kPi / 6, 1e-3);
    CHECK(rep.pass);
}

TEST_CASE("forbidden-ball check: self-crossing curve fails") {
    auto curve = tu::self_crossing_curve(240);
    auto rep = fgb_check(curve, 0.3, 1e-3);
    CHECK_FALSE(rep.pass);
    CHECK(rep.worst_clearance < -0.01);
}

TEST_CASE("fgb_check rejects invalid theta") {
    auto eq = tu::latitude_circle(kPi / 2, 100);
    CHECK_THROWS_AS(fgb_check(eq, 0.0, 1e-3), InvalidThetaError);
    CHECK_THROWS_AS(fgb_check(eq, 2.0, 1e-3), InvalidThetaError);
}

TEST_CASE("thickness rejects too few points") {
    std::vector<UnitVec> pts = {UnitVec(1, 0, 0), UnitVec(0, 1, 0), UnitVec(0, 0, 1)};
    auto c = SampledCurve::from_points(pts, false);
    CHECK_NOTHROW(thickness_bruteforce(c));
}
