#include "ds/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ds {

namespace {

Surd rat(i64 num, i64 den) { return Surd(Rational(num, den)); }

// complex number with exact surd components
struct CSurd {
    Surd re, im;
    CSurd operator+(const CSurd& o) const { return {re + o.re, im + o.im}; }
    CSurd operator*(const CSurd& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CSurd operator*(const Surd& s) const { return {re * s, im * s}; }
    bool operator==(const CSurd& o) const { return re == o.re && im == o.im; }
};

}  // namespace

CircleScene place_triple(const CurvatureTriple& t) {
    if (!t.valid()) throw std::invalid_argument("place_triple: invalid triple");
    CircleScene s;
    s.triple = t;
    s.q = Surd::sqrt_of(q_squared(t));

    i64 c1 = t.c1, c2 = t.c2, c3 = t.c3;
    s.circ1 = {{Surd(0), Surd(0)}, rat(1, c1)};
    s.circ2 = {{rat(1, c1) + rat(1, c2), Surd(0)}, rat(1, c2)};

    // third center; x3 is rational even for non-DS triples since it only
    // needs q^2, while y3 picks up the radical
    Surd x3 = rat(q_squared(t) - c1 * c1, c1 * c3 * (c1 + c2));
    Surd y3 = s.q * rat(2, (c1 + c2) * c3);
    if (!(y3 > rat(1, c3))) throw std::logic_error("place_triple: y3 <= r3");
    s.circ3 = {{x3, y3}, rat(1, c3)};
    return s;
}

void add_apollonius_circles(CircleScene& s) {
    i64 c1 = s.triple.c1, c2 = s.triple.c2, c3 = s.triple.c3;
    Surd csum = Surd(c1 + c2 + c3);
    Surd two_q = s.q * Surd(2);
    Surd c4p = csum + two_q;
    Surd c4m = csum - two_q;
    const Surd& x3 = s.circ3.center.x;
    const Surd& y3 = s.circ3.center.y;

    Surd base_x = rat(c1 + c2, c1) + Surd(c3) * x3;
    Surd swing = s.q * rat(2, c1);
    Surd base_y = Surd(c3) * y3;

    s.circ4p = ExactCircle{{(base_x + swing) / c4p, (base_y + Surd(2)) / c4p},
                           Surd(1) / c4p};
    s.c4m_sign = c4m.sign();
    if (s.c4m_sign != 0) {
        Surd r = Surd(1) / c4m;
        if (s.c4m_sign < 0) r = -r;
        s.circ4m = ExactCircle{{(base_x - swing) / c4m, (base_y - Surd(2)) / c4m}, r};
    }
}

void add_tangent_line(CircleScene& s) {
    i64 c1 = s.triple.c1, c2 = s.triple.c2, c3 = s.triple.c3;
    i64 root;
    if (!s.q.is_rational() || !is_square(c1 * c2, &root))
        throw std::invalid_argument("add_tangent_line: degenerate case needs square c1 c2");
    Surd csum = Surd(c1 + c2 + c3);
    if ((csum - s.q * Surd(2)).sign() != 0)
        throw std::invalid_argument("add_tangent_line: c4- is not zero");

    // the line is y = -tan(alpha) x + c, falling from left to right
    TangentLine tl;
    tl.slope = rat(c1 - c2, 2 * root);
    tl.intercept = rat(c1 + c2, 2 * c1 * root);
    tl.C = {rat((c1 - c2) * (c1 - c2), c1 * c2 * (c1 + c2)),
            rat(2 * (c2 - c1), root * (c2 + c1))};
    tl.P = {rat(c2 - c1, c1 * (c2 + c1)), rat(2 * c2, root * (c2 + c1))};
    tl.Q = {rat(c2 + 3 * c1, c1 * (c2 + c1)), rat(2 * c1, root * (c2 + c1))};
    tl.R = {rat(1, c1) + rat(2 * (c2 - c1), (c2 + c1) * c3),
            (s.q + Surd(root)) * rat(2, c3 * (c1 + c2))};
    s.tangent = tl;
}

CircleScene build_scene(const DSQuintuple& q5) {
    CircleScene s = place_triple(q5.t);
    add_apollonius_circles(s);
    if (q5.c4m == 0) add_tangent_line(s);
    return s;
}

Surd dist2(const ExactPoint& a, const ExactPoint& b) {
    Surd dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

bool tangent_circles(const ExactCircle& a, const ExactCircle& b, int s1, int s2) {
    Surd gap = a.radius * Surd(s1) + b.radius * Surd(s2);
    return dist2(a.center, b.center) == gap * gap;
}

bool complex_descartes_holds(const CircleScene& s) {
    auto term = [](i64 c, const ExactPoint& p) {
        return CSurd{p.x * Surd(c), p.y * Surd(c)};
    };
    CSurd t1 = term(s.triple.c1, s.circ1.center);
    CSurd t2 = term(s.triple.c2, s.circ2.center);
    CSurd t3 = term(s.triple.c3, s.circ3.center);

    // check (sum c_j z_j)^2 = 2 sum (c_j z_j)^2 for each available root
    auto check_root = [&](const Surd& c4, const ExactPoint& z4) {
        CSurd t4{z4.x * c4, z4.y * c4};
        CSurd lhs = t1 + t2 + t3 + t4;
        lhs = lhs * lhs;
        CSurd rhs = (t1 * t1 + t2 * t2 + t3 * t3 + t4 * t4) * Surd(2);
        return lhs == rhs;
    };

    Surd csum = Surd(s.triple.c1 + s.triple.c2 + s.triple.c3);
    Surd two_q = s.q * Surd(2);
    if (!s.circ4p || !check_root(csum + two_q, s.circ4p->center)) return false;
    if (s.circ4m && !check_root(csum - two_q, s.circ4m->center)) return false;
    return true;
}

ClassicalArea classical_area(const Rational& a) {
    if (a.sign() <= 0) throw std::invalid_argument("classical_area: a must be positive");
    const Int& p = a.num();
    const Int& q = a.den();

    // sqrt((a+3)/(a+1)) = sqrt((p+3q)(p+q)) / (p+q)
    Surd root(Rational(0), Rational(1, p + q), (p + 3 * q) * (p + q));

    Rational one_a = a + Rational(1);
    Rational den = (Rational(3) + Rational(4) * a);
    den = den * den;

    // area between the two mid-size circles and the outer arc
    Rational rad_f = Rational(4) * one_a * one_a *
                     (Rational(3) + Rational(5) * a + Rational(2) * a * a) / den;
    Rational rat_f = Rational(2) * (Rational(1) + Rational(2) * a) *
                     (Rational(3) + Rational(4) * a + Rational(2) * a * a +
                      Rational(2) * a * a * a) /
                     den;
    ClassicalArea out;
    out.f_over_pi = root * Surd(rad_f) - Surd(rat_f);

    // area of the lens-shaped complement
    Rational rad_fp = Rational(8) * one_a * one_a * one_a *
                      (Rational(3) + Rational(2) * a) / den;
    Rational rat_fp = Rational(2) + one_a * one_a;
    out.f_prime_over_pi = root * Surd(rad_fp) - Surd(rat_fp);

    const double pi = 3.14159265358979323846;
    out.f = pi * out.f_over_pi.to_double();
    out.f_prime = pi * out.f_prime_over_pi.to_double();
    out.lambda = std::sqrt(120.0 / out.f);
    return out;
}

namespace {

std::string fmt(double v) {
    if (std::fabs(v) < 5e-7) v = 0;  // avoid "-0.000000"
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void emit_circle(std::string& svg, const ExactCircle& c) {
    svg += "  <circle cx=\"" + fmt(c.center.x.to_double()) + "\" cy=\"" +
           fmt(-c.center.y.to_double()) + "\" r=\"" + fmt(c.radius.to_double()) +
           "\"/>\n";
}

}  // namespace

std::string render_svg(const CircleScene& s) {
    std::vector<const ExactCircle*> circles{&s.circ1, &s.circ2, &s.circ3};
    if (s.circ4p) circles.push_back(&*s.circ4p);
    if (s.circ4m) circles.push_back(&*s.circ4m);

    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (const auto* c : circles) {
        double x = c->center.x.to_double(), y = c->center.y.to_double();
        double r = c->radius.to_double();
        min_x = std::min(min_x, x - r);
        max_x = std::max(max_x, x + r);
        min_y = std::min(min_y, y - r);
        max_y = std::max(max_y, y + r);
    }
    double pad = 0.05 * std::max(max_x - min_x, max_y - min_y);
    min_x -= pad;
    max_x += pad;
    min_y -= pad;
    max_y += pad;
    double w = max_x - min_x, h = max_y - min_y;
    double stroke = std::max(w, h) / 400.0;

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
           fmt(min_x) + " " + fmt(-max_y) + " " + fmt(w) + " " + fmt(h) + "\">\n";
    svg += " <g fill=\"none\" stroke=\"black\" stroke-width=\"" + fmt(stroke) + "\">\n";
    for (const auto* c : circles) emit_circle(svg, *c);
    if (s.tangent) {
        double m = s.tangent->slope.to_double();
        double b = s.tangent->intercept.to_double();
        svg += "  <line x1=\"" + fmt(min_x) + "\" y1=\"" + fmt(-(m * min_x + b)) +
               "\" x2=\"" + fmt(max_x) + "\" y2=\"" + fmt(-(m * max_x + b)) + "\"/>\n";
    }
    svg += " </g>\n";
    // curvature labels at the circle centers
    svg += " <g font-family=\"sans-serif\" font-size=\"" + fmt(8 * stroke) +
           "\" text-anchor=\"middle\">\n";
    std::vector<i64> labels{s.triple.c1, s.triple.c2, s.triple.c3};
    std::vector<const ExactCircle*> labeled{&s.circ1, &s.circ2, &s.circ3};
    if (s.circ4p) {
        labeled.push_back(&*s.circ4p);
        labels.push_back(0);  // placeholder, fixed below
    }
    for (size_t i = 0; i < labeled.size(); i++) {
        i64 lab = labels[i];
        if (i == 3) {
            Surd c4p = Surd(s.triple.c1 + s.triple.c2 + s.triple.c3) + s.q * Surd(2);
            if (!c4p.is_rational() || !c4p.u().is_integer()) continue;
            lab = (i64)c4p.u().num();
        }
        svg += "  <text x=\"" + fmt(labeled[i]->center.x.to_double()) + "\" y=\"" +
               fmt(-labeled[i]->center.y.to_double()) + "\">" + std::to_string(lab) +
               "</text>\n";
    }
    svg += " </g>\n</svg>\n";
    return svg;
}

}  // namespace ds
