#pragma once

#include "ds/arith.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace ds {

// Ordered positive integer curvature triple, 0 < c1 <= c2 <= c3.
struct CurvatureTriple {
    i64 c1 = 1, c2 = 1, c3 = 1;

    bool valid() const { return c1 > 0 && c1 <= c2 && c2 <= c3; }
    auto tie() const { return std::tie(c3, c1, c2); }
    bool operator==(const CurvatureTriple& o) const = default;
    bool operator<(const CurvatureTriple& o) const { return tie() < o.tie(); }
};

// Triple plus integer q and the two Apollonius curvatures.
struct DSQuintuple {
    CurvatureTriple t;
    i64 q = 0;       // q^2 = c1 c2 + c1 c3 + c2 c3, q > 0
    i64 c4m = 0;     // c1+c2+c3 - 2q (zero or negative allowed)
    i64 c4p = 0;     // c1+c2+c3 + 2q

    bool operator==(const DSQuintuple& o) const { return t == o.t; }
    bool operator<(const DSQuintuple& o) const { return t < o.t; }
};

i64 q_squared(const CurvatureTriple& t);

// Returns the full quintuple when q^2 is a perfect square, otherwise the
// triple is simply not DS and the result is empty (a normal outcome, not an
// error).
std::optional<DSQuintuple> quintuple(const CurvatureTriple& t);

bool is_primitive(const CurvatureTriple& t);

enum class ParityClass { EvenEvenOdd, OddOddEven };

// The two parity patterns of primitive DS triples; anything else throws,
// since it would contradict the parity proposition and signals a solver bug.
ParityClass parity_class(const CurvatureTriple& t);

// The unique c3 with c4- = 0 above c1, c2: c1 + c2 + 2 sqrt(c1 c2).
// exact = false marks an irrational value (c1 c2 not a square); value is
// then meaningless.
struct DegenerateC3 {
    i64 value = 0;
    bool exact = false;
};
DegenerateC3 degenerate_c3(i64 c1, i64 c2);

// Brute-force oracle: every primitive DS quintuple with c3 <= c3_max,
// sorted by (c3, c1, c2).
std::vector<DSQuintuple> enumerate_primitive_ds(i64 c3_max);

}  // namespace ds
