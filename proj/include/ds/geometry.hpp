#pragma once

#include "ds/descartes.hpp"
#include "ds/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ds {

// Exact point; coordinates live in Q(sqrt(d)) so that non-DS triples
// (irrational q) stay representable.  For DS triples everything is rational.
struct ExactPoint {
    Surd x, y;
};

struct ExactCircle {
    ExactPoint center;
    Surd radius;  // negative curvature circles carry radius = 1/|c4-|
};

struct TangentLine {
    Surd slope;       // the line y = slope * x + intercept (slope <= 0)
    Surd intercept;
    ExactPoint C;        // Thales auxiliary point of the classical construction
    ExactPoint P, Q, R;  // touch points on the first, second and third circle
};

struct CircleScene {
    Surd q;  // sqrt(c1c2 + c1c3 + c2c3), exact
    CurvatureTriple triple;
    ExactCircle circ1, circ2, circ3;
    std::optional<ExactCircle> circ4p;  // inner Apollonius circle
    std::optional<ExactCircle> circ4m;  // outer circle (absent when c4- = 0)
    i64 c4m_sign = 0;                   // sign of c4- (0 in the degenerate case)
    std::optional<TangentLine> tangent;
};

// Centers M1 = (0,0), M2 = (r1+r2, 0), M3 = (x3, y3); accepts non-DS
// triples via the surd coordinates.
CircleScene place_triple(const CurvatureTriple& t);

// Adds the fourth and fifth circle centers to the scene, exactly even for
// non-DS triples; the c4- circle is omitted when c4- = 0.
void add_apollonius_circles(CircleScene& scene);

// Degenerate construction: common tangent line and the touch points
// C, P, Q, R; throws unless c4- = 0.
void add_tangent_line(CircleScene& scene);

// convenience: full scene for a triple (places circles, then the fourth and
// fifth circle or the tangent line as appropriate); requires a DS triple
CircleScene build_scene(const DSQuintuple& q5);

// squared distance between two exact points
Surd dist2(const ExactPoint& a, const ExactPoint& b);

// exact tangency test: squared center distance equals (r1 s1 + r2 s2)^2,
// s = +1 external, s = -1 internal (enclosing circle)
bool tangent_circles(const ExactCircle& a, const ExactCircle& b, int s1 = 1, int s2 = 1);

// complex Descartes identity over exact coordinates for both c4 roots
bool complex_descartes_holds(const CircleScene& scene);

// Classical area problem: returns F-hat(a)/pi and F-hat'(a)/pi as exact
// surds u + v sqrt((a+3)(a+1)) (rational a > 0), plus double versions.
struct ClassicalArea {
    Surd f_over_pi;
    Surd f_prime_over_pi;
    double f = 0, f_prime = 0;  // areas themselves (times pi applied)
    double lambda = 0;          // scaling for the historical a = 5/2 problem
};
ClassicalArea classical_area(const Rational& a);

// deterministic SVG 1.1 document for the scene (y axis flipped at render
// time only)
std::string render_svg(const CircleScene& scene);

}  // namespace ds
