#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sfrope/geom.hpp"
#include "test_helpers.hpp"

using namespace sfrope;
using testutil::RandomRotation;
using testutil::random_unit;

TEST_CASE("geodesic distance on canonical pairs") {
    UnitVec a(1, 0, 0), b(0, 1, 0), np(0, 0, 1), sp(0, 0, -1);
    CHECK(geodesic_dist(a, a) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(geodesic_dist(np, sp) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(geodesic_dist(a, b) == doctest::Approx(kPi / 2).epsilon(1e-15));
}

TEST_CASE("geodesic distance: atan2 form agrees with clamped acos form") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        UnitVec a = random_unit(rng), b = random_unit(rng);
        double d = geodesic_dist(a, b);
        double dot = std::clamp(a.vec().dot(b.vec()), -1.0, 1.0);
        CHECK(std::abs(d - std::acos(dot)) < 1e-9);
        CHECK(std::abs(d - geodesic_dist(b, a)) < 1e-12); // symmetry
        CHECK(d >= 0.0);
        CHECK(d <= kPi + 1e-15);
    }
}

TEST_CASE("geodesic distance satisfies the triangle inequality") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        UnitVec a = random_unit(rng), b = random_unit(rng), c = random_unit(rng);
        CHECK(geodesic_dist(a, c) <= geodesic_dist(a, b) + geodesic_dist(b, c) + 1e-12);
    }
}

TEST_CASE("circumradius of canonical triples") {
    // equilateral triangle with side 1
    Vec3 p1(0, 0, 0), p2(1, 0, 0), p3(0.5, std::sqrt(3.0) / 2.0, 0);
    CHECK(circumradius(p1, p2, p3) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    // diametral points of the unit equator
    CHECK(circumradius(Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(-1, 0, 0)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // collinear
    CHECK(std::isinf(circumradius(Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(2, 0, 0))));
    // coincident
    CHECK_THROWS_AS(circumradius(Vec3(1, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)),
                    DegenerateTripleError);
}

TEST_CASE("circumradius is invariant under permutations and rigid motions") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        Vec3 a(u(rng), u(rng), u(rng)), b(u(rng), u(rng), u(rng)), c(u(rng), u(rng), u(rng));
        double r;
        try {
            r = circumradius(a, b, c);
        } catch (const DegenerateTripleError&) {
            continue;
        }
        if (std::isinf(r)) continue;
        CHECK(circumradius(b, c, a) == doctest::Approx(r).epsilon(1e-12));
        CHECK(circumradius(c, a, b) == doctest::Approx(r).epsilon(1e-12));
        CHECK(circumradius(a, c, b) == doctest::Approx(r).epsilon(1e-12));
        RandomRotation rot = RandomRotation::draw(rng);
        Vec3 shift(u(rng), u(rng), u(rng));
        double r2 = circumradius(rot.apply(a) + shift, rot.apply(b) + shift, rot.apply(c) + shift);
        CHECK(r2 == doctest::Approx(r).epsilon(1e-9));
    }
}

TEST_CASE("three points on a circle of radius r have circumradius r") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ur(0.05, 3.0);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
    for (int i = 0; i < 200; ++i) {
        double r = ur(rng);
        RandomRotation rot = RandomRotation::draw(rng);
        double t1 = ut(rng), t2 = ut(rng), t3 = ut(rng);
        if (std::abs(t1 - t2) < 0.05 || std::abs(t2 - t3) < 0.05 || std::abs(t1 - t3) < 0.05)
            continue;
        auto on_circle = [&](double t) {
            return rot.apply(Vec3(r * std::cos(t), r * std::sin(t), 0.4));
        };
        CHECK(circumradius(on_circle(t1), on_circle(t2), on_circle(t3)) ==
              doctest::Approx(r).epsilon(1e-10));
    }
}

TEST_CASE("rotation about an axis") {
    UnitVec p(1, 0, 0), zhat(0, 0, 1);
    CHECK((rotate_about_axis(p, zhat, 0.0).vec() - p.vec()).norm() < 1e-15);
    UnitVec q = rotate_about_axis(p, zhat, kPi / 2);
    CHECK((q.vec() - Vec3(0, 1, 0)).norm() < 1e-12);

    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        UnitVec v = random_unit(rng), axis = random_unit(rng);
        UnitVec full = rotate_about_axis(v, axis, 2.0 * kPi);
        CHECK((full.vec() - v.vec()).norm() < 1e-12);
        std::uniform_real_distribution<double> ua(0.0, 2.0 * kPi);
        CHECK(std::abs(rotate_about_axis(v.vec(), axis, ua(rng)).norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("arc points, tangents, and lengths") {
    UnitVec zhat(0, 0, 1), xhat(1, 0, 0), yhat(0, 1, 0);
    Arc equator(zhat, kPi / 2, xhat, yhat, 0.0, kPi);
    CHECK((equator.point(0.0).vec() - xhat.vec()).norm() < 1e-15);
    CHECK((equator.tangent(0.0).vec() - yhat.vec()).norm() < 1e-15);

    Arc small(zhat, kPi / 6, xhat, yhat, 0.0, 2.0 * kPi);
    UnitVec p = small.point(1.2345);
    CHECK((p.vec() - zhat.vec() * std::cos(kPi / 6)).norm() ==
          doctest::Approx(std::sin(kPi / 6)).epsilon(1e-12));
    CHECK(small.length() == doctest::Approx(2.0 * kPi * std::sin(kPi / 6)).epsilon(1e-12));

    CHECK_THROWS_AS(equator.point(-1.0), ParamOutOfRangeError);
    CHECK_THROWS_AS(Arc(zhat, kPi / 2, xhat, yhat, 0.0, 7.0), OutOfRangeError);
    // left-handed frame rejected
    CHECK_THROWS_AS(Arc(zhat, kPi / 2, yhat, xhat, 0.0, kPi), OutOfRangeError);
}

TEST_CASE("arc samples stay on the sphere; tangent matches a numeric derivative") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> urho(0.05, kPi - 0.05);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> usweep(-2.0 * kPi, 2.0 * kPi);
    for (int i = 0; i < 1000; ++i) {
        UnitVec axis = random_unit(rng);
        // build an orthonormal right-handed frame around the axis
        Vec3 helper = std::abs(axis.z()) < 0.9 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
        UnitVec e1{axis.vec().cross(helper)};
        UnitVec e2{axis.vec().cross(e1.vec())};
        // (e1, e2, axis) right-handed requires e1 x e2 = axis
        if ((e1.vec().cross(e2.vec()) - axis.vec()).norm() > 1e-9) {
            UnitVec tmp = e1;
            e1 = e2;
            e2 = tmp;
        }
        double sweep = usweep(rng);
        if (std::abs(sweep) < 0.1) sweep = 0.5;
        Arc arc(axis, urho(rng), e1, e2, ut(rng), sweep);
        double lo = std::min(arc.t0, arc.t0 + arc.sweep) + 1e-3;
        double hi = std::max(arc.t0, arc.t0 + arc.sweep) - 1e-3;
        double t = lo + (hi - lo) * 0.37;
        CHECK(std::abs(arc.point(t).vec().norm() - 1.0) < 1e-12);

        // d(point)/d(arclength) should equal the unit tangent
        double h = 1e-5;
        double sgn = arc.sweep >= 0 ? 1.0 : -1.0;
        Vec3 numeric = (arc.point(t + sgn * h).vec() - arc.point(t - sgn * h).vec()) *
                       (1.0 / (2.0 * h * std::sin(arc.rho)));
        CHECK((numeric - arc.tangent(t).vec()).norm() < 1e-6);
    }
}

TEST_CASE("fibonacci sphere sampling is deterministic and unit") {
    auto one = sample_sphere_fibonacci(1);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one[0].vec().norm() - 1.0) < 1e-15);
    auto a = sample_sphere_fibonacci(997);
    auto b = sample_sphere_fibonacci(997);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x() == b[i].x());
        CHECK(std::abs(a[i].vec().norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("random sphere sampling: uniformity statistics at 1e6 points") {
    auto pts = sample_sphere_random(1000000, 42);
    double zsum = 0.0;
    std::size_t cap = 0;
    double cap_cos = std::cos(kPi / 3.0);
    for (const auto& p : pts) {
        zsum += p.z();
        if (p.z() > cap_cos) ++cap;
    }
    CHECK(std::abs(zsum / 1e6) < 0.005);
    // spherical cap area fraction: (1 - cos(pi/3)) / 2 = 0.25
    CHECK(std::abs(double(cap) / 1e6 - 0.25) < 0.002);
    // reproducibility
    auto again = sample_sphere_random(10, 42);
    CHECK(again[7].x() == pts[7].x());
}
