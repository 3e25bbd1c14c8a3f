#include "ds/descartes.hpp"

#include <numeric>
#include <stdexcept>

namespace ds {

i64 q_squared(const CurvatureTriple& t) {
    if (!t.valid()) throw std::invalid_argument("q_squared: invalid triple");
    return t.c1 * t.c2 + t.c1 * t.c3 + t.c2 * t.c3;
}

std::optional<DSQuintuple> quintuple(const CurvatureTriple& t) {
    i64 q;
    if (!is_square(q_squared(t), &q)) return std::nullopt;
    i64 sum = t.c1 + t.c2 + t.c3;
    return DSQuintuple{t, q, sum - 2 * q, sum + 2 * q};
}

bool is_primitive(const CurvatureTriple& t) {
    return std::gcd(std::gcd(t.c1, t.c2), t.c3) == 1;
}

ParityClass parity_class(const CurvatureTriple& t) {
    int odd = (int)(t.c1 & 1) + (int)(t.c2 & 1) + (int)(t.c3 & 1);
    if (odd == 1) {
        i64 even_sum = (t.c1 & 1 ? 0 : t.c1) + (t.c2 & 1 ? 0 : t.c2) + (t.c3 & 1 ? 0 : t.c3);
        if (even_sum % 4 != 0)
            throw std::logic_error("parity_class: even pair sum not 0 mod 4");
        return ParityClass::EvenEvenOdd;
    }
    if (odd == 2) {
        i64 odd_sum = (t.c1 & 1 ? t.c1 : 0) + (t.c2 & 1 ? t.c2 : 0) + (t.c3 & 1 ? t.c3 : 0);
        if (odd_sum % 4 != 2)
            throw std::logic_error("parity_class: odd pair sum not 2 mod 4");
        return ParityClass::OddOddEven;
    }
    throw std::logic_error("parity_class: not a primitive DS parity pattern");
}

DegenerateC3 degenerate_c3(i64 c1, i64 c2) {
    if (c1 < 1 || c1 > c2) throw std::invalid_argument("degenerate_c3: need 0 < c1 <= c2");
    i64 r;
    if (!is_square(c1 * c2, &r)) return {0, false};
    return {c1 + c2 + 2 * r, true};
}

std::vector<DSQuintuple> enumerate_primitive_ds(i64 c3_max) {
    std::vector<DSQuintuple> out;
    for (i64 c3 = 1; c3 <= c3_max; c3++) {
        for (i64 c1 = 1; c1 <= c3; c1++) {
            for (i64 c2 = c1; c2 <= c3; c2++) {
                CurvatureTriple t{c1, c2, c3};
                if (!is_primitive(t)) continue;
                i64 q;
                if (!is_square(c1 * c2 + c1 * c3 + c2 * c3, &q)) continue;
                i64 sum = c1 + c2 + c3;
                out.push_back({t, q, sum - 2 * q, sum + 2 * q});
            }
        }
    }
    return out;  // loop order already yields (c3, c1, c2) sorting
}

}  // namespace ds
