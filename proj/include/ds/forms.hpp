#pragma once

#include "ds/arith.hpp"

#include <vector>

namespace ds {

// Binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
    i64 a = 0, b = 0, c = 0;

    i64 disc() const { return b * b - 4 * a * c; }
    bool primitive() const;
    bool operator==(const QuadForm& o) const = default;
};

// 2x2 integer matrix, row-major.
struct Mat2 {
    i64 m00 = 1, m01 = 0, m10 = 0, m11 = 1;

    i64 det() const { return m00 * m11 - m01 * m10; }
    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse_unimodular() const;  // requires det = +-1
    std::pair<i64, i64> apply(i64 x, i64 y) const;
    bool operator==(const Mat2& o) const = default;
};

// right-neighbor transformation matrix [[0,-1],[1,t]]
Mat2 r_matrix(i64 t);

// fixed matrices of the discriminant-8 machinery
extern const QuadForm kPellForm;       // [1,0,-2]
extern const QuadForm kPrincipalForm;  // [1,2,-1]
extern const QuadForm kDefiniteForm;   // [1,0,2]
extern const Mat2 kB;                  // R(0) R(1) = -[[1,1],[0,1]]
extern const Mat2 kAuto;               // R(-2) R(2) = -[[1,2],[2,5]]
extern const Mat2 kAutoPrime;          // [[3,4],[2,3]]

// One half-reduced right-neighbor step for an indefinite non-square
// discriminant; returns the neighbor and the t used.
std::pair<QuadForm, i64> half_reduced_right_neighbor(const QuadForm& f);

struct ReductionChain {
    std::vector<i64> t_tuple;
    std::vector<QuadForm> chain;  // starts at the input, ends at the target
    Mat2 rpa;                     // product R(t_1) ... R(t_L)
};

// Reduce an indefinite Disc=8 form until the principal form [1,2,-1].
ReductionChain reduce_indefinite(QuadForm f);

// Reduce a positive definite Disc=-8 form until [1,0,2]
// (neighbor step with t = ceil((b-c)/(2c))).
ReductionChain reduce_definite(QuadForm f);

// Representative parallel primitive forms [k, 2j, (j^2-2)/k] for the
// congruence j^2 == 2 (mod |k|); imprimitive parallels are discarded.
std::vector<std::pair<i64, QuadForm>> rpapf_indefinite(i64 k);

// Lattice point on X^2 - 2 Y^2 = k.
struct PellSolution {
    i64 X = 0, Y = 0, k = 0;

    bool ok() const { return (i128)X * X - 2 * (i128)Y * Y == k; }
    bool operator==(const PellSolution& o) const = default;
    bool operator<(const PellSolution& o) const {
        return std::pair(Y, X) < std::pair(o.Y, o.X);
    }
};

struct SolutionFamily {
    i64 j = 0;                 // congruence root the rpapf came from
    QuadForm rpapf;
    std::vector<i64> t_tuple;  // reduction tuple to the principal form
    PellSolution fundamental;  // i = 0 solution, normalized to Y > 0
    int sign_flip = +1;        // -1 if the raw i=0 output had Y < 0
    char family_tag = '?';     // 'I' (family I) or 'J' (family II) once paired
    int pair_index = -1;       // index of the conjugate family in the result
};

// One family per rpapf of X^2 - 2 Y^2 = k, conjugates paired by
// j <-> |k| - j and tagged I/II (family I holds the ppfs with 0 < X < Y).
std::vector<SolutionFamily> solve_pell_families(i64 k);

// i-th solution of the family relative to the fundamental (AutoPrime
// iteration with Y > 0 normalization); X increases strictly with i.
PellSolution family_iterate(const SolutionFamily& f, i64 i);

// AutoPrime^n in closed form via the Chebyshev S(n,6) recurrence.
Mat2 auto_power(i64 n);

// Chebyshev S(n, 6); S(0)=1, S(1)=6, S(n) = 6 S(n-1) - S(n-2); S(-1)=0.
i64 chebyshev_s6(i64 n);

// All solutions of X^2 - 2 Y^2 = -s^2 with gcd(X,Y)=1 and 0 < X < Y,
// sorted by X.  s must be odd and >= 3 (throws otherwise); unsolvable s
// yields the empty vector.
std::vector<PellSolution> unique_xy_solution(i64 s);

// All proper representations t^2 + 2 k^2 = a with k >= 0, one per rpapf of
// the definite Disc=-8 congruence j^2 == -2 (mod a); t carries its sign
// (conjugate rpapfs differ in the sign of t).  a = 1 yields {(1, 0)}.
std::vector<std::pair<i64, i64>> solve_definite(i64 a);

// How many family scans hit the +-W window boundary (should stay 0; a hit
// means the uniqueness scan window was too small).
i64 family_scan_boundary_hits();

}  // namespace ds
