#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ds/geometry.hpp"
#include "ds/solvers.hpp"

using namespace ds;

namespace {

Surd srat(long long n, long long d) { return Surd(Rational(n, d)); }

// exact point-on-line test for y = m x + b
bool on_line(const TangentLine& tl, const ExactPoint& p) {
    return tl.slope * p.x + tl.intercept == p.y;
}

// exact distance-from-line test: (m x0 - y0 + b)^2 == r^2 (m^2 + 1)
bool line_touches(const TangentLine& tl, const ExactCircle& c) {
    Surd e = tl.slope * c.center.x - c.center.y + tl.intercept;
    Surd m2 = tl.slope * tl.slope + Surd(1);
    return e * e == c.radius * c.radius * m2;
}

bool on_circle(const ExactCircle& c, const ExactPoint& p) {
    return dist2(c.center, p) == c.radius * c.radius;
}

}  // namespace

TEST_CASE("placement of [2,3,6]") {
    auto q5 = quintuple({2, 3, 6});
    REQUIRE(q5);
    auto scene = build_scene(*q5);
    CHECK(scene.circ3.center.x == srat(8, 15));
    CHECK(scene.circ3.center.y == srat(2, 5));
    REQUIRE(scene.circ4p);
    CHECK(scene.circ4p->center.x == srat(117, 230));
    CHECK(scene.circ4p->center.y == srat(22, 115));
    CHECK(scene.circ4p->radius == srat(1, 23));
    REQUIRE(scene.circ4m);
    CHECK(scene.c4m_sign == -1);
    CHECK(scene.circ4m->center.x == srat(3, 10));
    CHECK(scene.circ4m->center.y == srat(-2, 5));
    CHECK(scene.circ4m->radius == Surd(1));
}

TEST_CASE("placement of a non-DS triple stays exact") {
    auto scene = place_triple({1, 2, 3});
    CHECK(scene.circ3.center.x == srat(10, 9));
    CHECK(scene.circ3.center.y == Surd(Rational(0), Rational(2, 9), 11));
    // pairwise tangency still holds over Q(sqrt(11))
    CHECK(tangent_circles(scene.circ1, scene.circ2));
    CHECK(tangent_circles(scene.circ1, scene.circ3));
    CHECK(tangent_circles(scene.circ2, scene.circ3));
    add_apollonius_circles(scene);
    REQUIRE(scene.circ4p);
    CHECK(tangent_circles(scene.circ1, *scene.circ4p));
    CHECK(complex_descartes_holds(scene));
}

TEST_CASE("degenerate construction for [1,4,9]") {
    auto q5 = quintuple({1, 4, 9});
    REQUIRE(q5);
    auto scene = build_scene(*q5);
    CHECK(scene.circ3.center.x == srat(16, 15));
    CHECK(scene.circ3.center.y == srat(14, 45));
    CHECK(scene.c4m_sign == 0);
    CHECK(!scene.circ4m);
    REQUIRE(scene.tangent);
    const auto& tl = *scene.tangent;
    CHECK(tl.slope == srat(-3, 4));
    CHECK(tl.intercept == srat(5, 4));
    CHECK(tl.C.x == srat(9, 20));
    CHECK(tl.C.y == srat(3, 5));
    CHECK(tl.P.x == srat(3, 5));
    CHECK(tl.P.y == srat(4, 5));
    CHECK(tl.Q.x == srat(7, 5));
    CHECK(tl.Q.y == srat(1, 5));
    CHECK(tl.R.x == srat(17, 15));
    CHECK(tl.R.y == srat(2, 5));
    // touch points sit on the line and on their circles
    CHECK(on_line(tl, tl.P));
    CHECK(on_line(tl, tl.Q));
    CHECK(on_line(tl, tl.R));
    CHECK(on_circle(scene.circ1, tl.P));
    CHECK(on_circle(scene.circ2, tl.Q));
    CHECK(on_circle(scene.circ3, tl.R));
}

TEST_CASE("exact tangency and the complex identity for all triples c3 <= 60") {
    for (const auto& q5 : enumerate_primitive_ds(60)) {
        auto scene = build_scene(q5);
        CHECK(tangent_circles(scene.circ1, scene.circ2));
        CHECK(tangent_circles(scene.circ1, scene.circ3));
        CHECK(tangent_circles(scene.circ2, scene.circ3));
        REQUIRE(scene.circ4p);
        CHECK(tangent_circles(scene.circ1, *scene.circ4p));
        CHECK(tangent_circles(scene.circ2, *scene.circ4p));
        CHECK(tangent_circles(scene.circ3, *scene.circ4p));
        if (scene.circ4m) {
            // positive c4- is a fourth ordinary circle, negative an
            // enclosing one touching the others from inside
            int s = scene.c4m_sign > 0 ? 1 : -1;
            CHECK(tangent_circles(*scene.circ4m, scene.circ1, 1, s));
            CHECK(tangent_circles(*scene.circ4m, scene.circ2, 1, s));
            CHECK(tangent_circles(*scene.circ4m, scene.circ3, 1, s));
        }
        CHECK(complex_descartes_holds(scene));
    }
}

TEST_CASE("tangent line construction for all degenerate triples c3 <= 576") {
    int checked = 0;
    for (i64 n = 2; n * n <= 576; n++) {
        for (const auto& q5 : zero_c4_triples(n)) {
            auto scene = build_scene(q5);
            REQUIRE(scene.tangent);
            const auto& tl = *scene.tangent;
            // C lies on both auxiliary circles of the Thales construction
            Surd r1 = scene.circ1.radius, r2 = scene.circ2.radius;
            Surd half = (r1 + r2) / Surd(2);
            CHECK(tl.C.x * tl.C.x + tl.C.y * tl.C.y == (r1 - r2) * (r1 - r2));
            CHECK(dist2({half, Surd(0)}, tl.C) == half * half);
            CHECK(on_line(tl, tl.P));
            CHECK(on_line(tl, tl.Q));
            CHECK(on_line(tl, tl.R));
            CHECK(on_circle(scene.circ1, tl.P));
            CHECK(on_circle(scene.circ2, tl.Q));
            CHECK(on_circle(scene.circ3, tl.R));
            CHECK(line_touches(tl, scene.circ1));
            CHECK(line_touches(tl, scene.circ2));
            CHECK(line_touches(tl, scene.circ3));
            checked++;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("classical area at a = 5/2") {
    auto area = classical_area(Rational(5, 2));
    CHECK(area.f_over_pi == Surd(Rational(-681, 169), Rational(196, 169), 77));
    CHECK(area.f_prime_over_pi == Surd(Rational(-57, 4), Rational(392, 169), 77));
    CHECK(area.f == doctest::Approx(19.3122).epsilon(1e-4));
    CHECK(area.f_prime == doctest::Approx(19.1757).epsilon(1e-4));
    CHECK(area.lambda == doctest::Approx(2.4930).epsilon(1e-3));
}

TEST_CASE("classical area stays positive and monotone-ish on a grid") {
    double prev_f = 0;
    for (int p = 1; p <= 40; p++) {
        auto area = classical_area(Rational(p, 4));
        CHECK(area.f > 0);
        CHECK(area.f_prime > 0);
        CHECK(area.f > prev_f);  // larger a, larger enclosing circle area
        prev_f = area.f;
    }
}

TEST_CASE("svg rendering is deterministic") {
    auto q5 = quintuple({2, 3, 6});
    REQUIRE(q5);
    auto scene = build_scene(*q5);
    std::string a = render_svg(scene);
    std::string b = render_svg(scene);
    CHECK(a == b);
    CHECK(a.rfind("<?xml version=\"1.0\"", 0) == 0);
    CHECK(a.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
          std::string::npos);
    CHECK(a.find("<circle") != std::string::npos);

    auto deg = quintuple({1, 4, 9});
    REQUIRE(deg);
    auto dscene = build_scene(*deg);
    CHECK(render_svg(dscene).find("<line") != std::string::npos);
}
