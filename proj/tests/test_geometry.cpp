#include <cmath>
#include <random>

#include <doctest.h>

#include "renyi/geometry.hpp"

using namespace renyi;

TEST_CASE("Vec2 arithmetic") {
    const Vec2 a{1.0, 2.0};
    const Vec2 b{-0.5, 3.0};
    CHECK((a + b) == Vec2{0.5, 5.0});
    CHECK((a - b) == Vec2{1.5, -1.0});
    CHECK((a * 2.0) == Vec2{2.0, 4.0});
    CHECK((2.0 * a) == Vec2{2.0, 4.0});
    CHECK((a / 2.0) == Vec2{0.5, 1.0});
    CHECK(dot(a, b) == doctest::Approx(5.5).epsilon(1e-15));
    CHECK(squared_norm(a) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(norm(Vec2{3.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("rotation basics") {
    // t = 0 is the identity; t = 3 is the half turn.
    const Vec2 w{0.3, -0.7};
    const Vec2 id = rotation(0.0).apply(w);
    CHECK(id.x == doctest::Approx(w.x).epsilon(1e-15));
    CHECK(id.y == doctest::Approx(w.y).epsilon(1e-15));
    const Vec2 half = rotation(3.0).apply(w);
    CHECK(half.x == doctest::Approx(-w.x).epsilon(1e-14));
    CHECK(half.y == doctest::Approx(-w.y).epsilon(1e-14));
    const Vec2 sixth = rotation(1.0).apply(Vec2{1.0, 0.0});
    CHECK(sixth.x == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sixth.y == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("circle_point basics") {
    CHECK(circle_point(0.0) == Vec2{1.0, 0.0});
    CHECK(circle_point(3.0).x == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::abs(circle_point(3.0).y) < 1e-15);
    // v(-1) = (cos(pi/3), -sin(pi/3))
    CHECK(circle_point(-1.0).x == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(circle_point(-1.0).y == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("rotations preserve norms and compose additively") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> angle(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double t1 = angle(gen);
        const double t2 = angle(gen);
        const Vec2 w{angle(gen), angle(gen)};
        CHECK(norm(rotation(t1).apply(w)) == doctest::Approx(norm(w)).epsilon(1e-14));
        const Vec2 composed = rotation(t1).apply(rotation(t2).apply(w));
        const Vec2 direct = (rotation(t1) * rotation(t2)).apply(w);
        CHECK(std::abs(composed.x - direct.x) < 1e-13 * (1.0 + norm(w)));
        CHECK(std::abs(composed.y - direct.y) < 1e-13 * (1.0 + norm(w)));
    }
    // Full turn: Q(6) = Q(0) = I.
    const Vec2 w{1.25, -0.5};
    const Vec2 turned = rotation(6.0).apply(w);
    CHECK(turned.x == doctest::Approx(w.x).epsilon(1e-14));
    CHECK(turned.y == doctest::Approx(w.y).epsilon(1e-14));
    CHECK(rotation(2.5).inverse().parameter() == -2.5);
}

TEST_CASE("circle_point lies on the unit circle and rotates covariantly") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> angle(-20.0, 20.0);
    for (int i = 0; i < 500; ++i) {
        const double y = angle(gen);
        CHECK(std::abs(norm(circle_point(y)) - 1.0) < 1e-14);
        const double t = angle(gen);
        const Vec2 lhs = circle_point(y + t);
        const Vec2 rhs = rotation(t).apply(circle_point(y));
        CHECK(std::abs(lhs.x - rhs.x) < 1e-13);
        CHECK(std::abs(lhs.y - rhs.y) < 1e-13);
    }
}

TEST_CASE("row identity v(y)^T Q(y+1) = v(-1)^T") {
    // Equivalent column form: Q(-(y+1)) v(y) = v(-1).
    const Vec2 target = circle_point(-1.0);
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> angle(-20.0, 20.0);
    for (int i = 0; i < 500; ++i) {
        const double y = angle(gen);
        const Vec2 row = rotation(-(y + 1.0)).apply(circle_point(y));
        CHECK(std::abs(row.x - target.x) < 1e-13);
        CHECK(std::abs(row.y - target.y) < 1e-13);
    }
}
