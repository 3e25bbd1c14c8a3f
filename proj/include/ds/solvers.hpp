#pragma once

#include "ds/descartes.hpp"
#include "ds/forms.hpp"

#include <vector>

namespace ds {

// Pythagorean-style parameter pair: n > m >= 1, coprime, opposite parity.
struct MPair {
    i64 n = 2, m = 1;
    bool valid() const;
};

// all valid pairs with n <= n_max, ordered by (n, m)
std::vector<MPair> m_pairs(i64 n_max);

struct EqualPairTriple {
    DSQuintuple q5;
    int type = 1;  // 1 or 2
    MPair p;
};

// the one type-I and one type-II equal-curvature triple of a pair
std::vector<EqualPairTriple> equal_pair_triples(const MPair& p);

// all primitive c4- = 0 triples with c3 = n^2 (n >= 2): [M^2, N^2, (M+N)^2]
std::vector<DSQuintuple> zero_c4_triples(i64 n);

// one row of the q = c3 solution table
struct CaseIRow {
    i64 s = 0, x = 0, y = 0, q = 0;  // triple [x, y, q]
    PellSolution XY;                 // the 0 < X < Y solution
    std::vector<i64> t_I, t_II;      // reduction tuples, family I then II
    DSQuintuple q5;
};

// all q = c3 triples for solvable odd s <= s_max, ordered by (s, X)
std::vector<CaseIRow> solve_case_i(i64 s_max);

// one assembled case ii/iii solution, indexed by a = t^2 + 2 k^2
struct CaseSolution {
    i64 a = 0;
    i64 X = 0, Yhat = 0;  // X^2 - 2 Yhat^2 = -a
    i64 t = 0, k = 0;     // t^2 + 2 k^2 = a, k >= 1
    i64 A_xy = 1;         // scale factor of the (X, Yhat) representation
    i64 A_tk = 1;         // scale factor of the (t, k) representation
    char type_tag = 'a';  // 'a' both proper, 'b' (X,Yhat) improper,
                          // 'c' (t,k) improper, 'd' both improper
    DSQuintuple q5;

    bool operator<(const CaseSolution& o) const { return q5.t < o.q5.t; }
};

// case ii (q = c3 - k) final primitive DS triples arising from this a
std::vector<CaseSolution> solve_case_ii(i64 a);

// Conjecture bookkeeping for the case iii first-positive family II element.
struct ConjectureStats {
    i64 a = 0;
    i64 candidates_checked = 0;    // family-II i''+1 elements examined
    i64 in_range = 0;              // had 0 < X < Y for some k
    i64 passed_c3_condition = 0;   // also met X < t - 2k
    i64 counterexamples = 0;       // ... and produced a final DS solution
};

// case iii (q = c3 + k); the conjecture is checked on the family-II
// element at i''+1 and any counterexample is reported in stats (and kept in
// the returned solutions rather than dropped)
std::vector<CaseSolution> solve_case_iii(i64 a, ConjectureStats* stats = nullptr);

enum class TripleClass { EqualPairI, EqualPairII, ZeroC4, CaseI, CaseII, CaseIII };

struct Classification {
    TripleClass cls;
    i64 k = 0;  // |q - c3| for case ii/iii
};

// single-label classification with the precedence equal-pair > zero-c4 >
// sign of q - c3
Classification classify(const DSQuintuple& q5);

// union of all structured solvers, deduplicated and sorted by (c3, c1, c2);
// must equal enumerate_primitive_ds(c3_max)
std::vector<DSQuintuple> solve_all(i64 c3_max);

// true when a could carry case ii/iii solutions: primes == 3, 5, 7 (mod 8)
// must all occur to even exponent (necessary condition for both quadratic
// forms to represent a, improper representations included)
bool case_a_value_possible(i64 a);

}  // namespace ds
