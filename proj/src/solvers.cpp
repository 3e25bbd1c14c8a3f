#include "ds/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ds {

bool MPair::valid() const {
    return n > m && m >= 1 && std::gcd(n, m) == 1 && (n + m) % 2 == 1;
}

std::vector<MPair> m_pairs(i64 n_max) {
    if (n_max < 2) throw std::invalid_argument("m_pairs: n_max must be >= 2");
    std::vector<MPair> out;
    for (i64 n = 2; n <= n_max; n++) {
        for (i64 m = 1; m < n; m++) {
            MPair p{n, m};
            if (p.valid()) out.push_back(p);
        }
    }
    return out;
}

namespace {

DSQuintuple make_quintuple(i64 c1, i64 c2, i64 c3) {
    if (c1 > c2) std::swap(c1, c2);
    if (c2 > c3) std::swap(c2, c3);
    if (c1 > c2) std::swap(c1, c2);
    auto q5 = quintuple(CurvatureTriple{c1, c2, c3});
    if (!q5) throw std::logic_error("solver produced a non-DS triple");
    return *q5;
}

}  // namespace

std::vector<EqualPairTriple> equal_pair_triples(const MPair& p) {
    if (!p.valid()) throw std::invalid_argument("equal_pair_triples: invalid pair");
    i64 n = p.n, m = p.m;
    std::vector<EqualPairTriple> out;

    // Type I: repeated curvature (n-m)^2, single 2nm; q = n^2 - m^2
    EqualPairTriple t1{make_quintuple((n - m) * (n - m), (n - m) * (n - m), 2 * n * m), 1, p};
    if (t1.q5.q != n * n - m * m || t1.q5.c4p != 2 * n * (2 * n - m) ||
        t1.q5.c4m != 2 * m * (2 * m - n))
        throw std::logic_error("equal_pair_triples: type I closed forms failed");
    out.push_back(t1);

    // Type II: repeated curvature 2m^2, single n^2 - m^2; q = 2nm
    EqualPairTriple t2{make_quintuple(2 * m * m, 2 * m * m, n * n - m * m), 2, p};
    if (t2.q5.q != 2 * n * m || t2.q5.c4p != (n + m) * (n + 3 * m) ||
        t2.q5.c4m != (n - m) * (n - 3 * m))
        throw std::logic_error("equal_pair_triples: type II closed forms failed");
    out.push_back(t2);
    return out;
}

std::vector<DSQuintuple> zero_c4_triples(i64 n) {
    if (n < 2) throw std::invalid_argument("zero_c4_triples: n must be >= 2");
    std::vector<DSQuintuple> out;
    for (i64 M = 1; 2 * M <= n; M++) {
        i64 N = n - M;
        if (std::gcd(M, N) != 1) continue;
        DSQuintuple q5 = make_quintuple(M * M, N * N, n * n);
        if (q5.c4m != 0) throw std::logic_error("zero_c4_triples: c4- not zero");
        out.push_back(q5);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CaseIRow> solve_case_i(i64 s_max) {
    if (s_max < 3) throw std::invalid_argument("solve_case_i: s_max must be >= 3");
    std::vector<CaseIRow> out;
    for (i64 s = 3; s <= s_max; s += 2) {
        auto fams = solve_pell_families(-s * s);
        for (const auto& fam : fams) {
            if (fam.family_tag != 'I') continue;
            // the unique 0 < X < Y element of family I
            for (int i = -8; i <= 8; i++) {
                PellSolution sol = family_iterate(fam, i);
                if (!(0 < sol.X && sol.X < sol.Y)) continue;
                CaseIRow row;
                row.s = s;
                row.XY = sol;
                row.x = (sol.Y - sol.X) / 2;
                row.y = (sol.Y + sol.X) / 2;
                row.q = (sol.Y + s) / 2;
                row.t_I = fam.t_tuple;
                row.t_II = fams[fam.pair_index].t_tuple;
                row.q5 = make_quintuple(row.x, row.y, row.q);
                if (row.q5.q != row.q || !is_primitive(row.q5.t))
                    throw std::logic_error("solve_case_i: assembled triple invalid");
                out.push_back(std::move(row));
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CaseIRow& a, const CaseIRow& b) {
        return std::pair(a.s, a.XY.X) < std::pair(b.s, b.XY.X);
    });
    return out;
}

bool case_a_value_possible(i64 a) {
    if (a < 2) return false;
    for (auto [p, e] : factorize(a).factors) {
        int r = (int)(p % 8);
        if ((r == 3 || r == 5 || r == 7) && (e % 2) != 0) return false;
    }
    return true;
}

namespace {

// proper ppfs (0 < X < Yhat) of X^2 - 2 Yhat^2 = -a
std::vector<PellSolution> proper_ppfs(i64 a) {
    std::vector<PellSolution> out;
    for (const auto& fam : solve_pell_families(-a)) {
        for (int i = -8; i <= 8; i++) {
            PellSolution s = family_iterate(fam, i);
            if (0 < s.X && s.X < s.Y) {
                out.push_back(s);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct XYCand {
    i64 X, Yhat, A;
};
struct TKCand {
    i64 t, k, A;
};

std::vector<i64> square_divisor_roots(i64 a) {
    std::vector<i64> roots;
    for (i64 A = 1; A * A <= a; A++) {
        if (a % (A * A) == 0) roots.push_back(A);
    }
    return roots;
}

// every (X, Yhat) with 0 < X < Yhat: proper ones plus A-scaled proper ones
std::vector<XYCand> xy_candidates(i64 a) {
    std::vector<XYCand> out;
    for (i64 A : square_divisor_roots(a)) {
        for (const auto& s : proper_ppfs(a / (A * A))) {
            out.push_back({A * s.X, A * s.Y, A});
        }
    }
    return out;
}

// every (t, k) with k >= 1 (t keeps its sign): proper plus A-scaled proper
std::vector<TKCand> tk_candidates(i64 a) {
    std::vector<TKCand> out;
    for (i64 A : square_divisor_roots(a)) {
        for (auto [t, k] : solve_definite(a / (A * A))) {
            if (k >= 1) out.push_back({A * t, A * k, A});
        }
    }
    return out;
}

char type_tag_for(i64 A_xy, i64 A_tk) {
    if (A_xy == 1 && A_tk == 1) return 'a';
    if (A_xy > 1 && A_tk == 1) return 'b';
    if (A_xy == 1 && A_tk > 1) return 'c';
    return 'd';
}

// try to finish a case ii (sign = -1) or case iii (sign = +1) assembly
bool assemble(i64 a, i64 X, i64 Yhat, i64 t, i64 k, int sign, CaseSolution* out) {
    // curvatures per the table legends; sign carries the k flip
    i64 two_c1 = Yhat + sign * k - X;
    i64 two_c2 = Yhat + sign * k + X;
    i64 two_c3 = Yhat + t - sign * k;
    i64 two_q = Yhat + t + sign * k;
    if (two_c1 < 2 || two_c2 > two_c3 || two_q < 2) return false;
    if (two_c1 % 2 != 0 || two_c3 % 2 != 0) return false;
    CurvatureTriple trip{two_c1 / 2, two_c2 / 2, two_c3 / 2};
    if (!is_primitive(trip)) return false;
    auto q5 = quintuple(trip);
    if (!q5 || q5->q != two_q / 2) return false;
    *out = CaseSolution{a, X, Yhat, t, k, 1, 1, 'a', *q5};
    return true;
}

std::vector<CaseSolution> solve_case(i64 a, int sign, ConjectureStats* stats) {
    if (a < 2) throw std::invalid_argument("case solver: a must be >= 2");
    std::vector<CaseSolution> out;
    if (!case_a_value_possible(a)) return out;
    auto xys = xy_candidates(a);
    auto tks = tk_candidates(a);
    std::set<CurvatureTriple> seen;
    for (const auto& xy : xys) {
        for (const auto& tk : tks) {
            CaseSolution cs;
            if (!assemble(a, xy.X, xy.Yhat, tk.t, tk.k, sign, &cs)) continue;
            cs.A_xy = xy.A;
            cs.A_tk = tk.A;
            cs.type_tag = type_tag_for(xy.A, tk.A);
            if (seen.insert(cs.q5.t).second) out.push_back(cs);
        }
    }
    if (sign > 0) {
        // conjecture check: the first positive family II element,
        // (4Yhat' - 3X', 3Yhat' - 2X') from the family-I ppfs, must never
        // survive to a final solution
        if (stats) stats->a = a;
        for (const auto& xy : xys) {
            i64 Xi = 4 * xy.Yhat - 3 * xy.X;
            i64 Yi = 3 * xy.Yhat - 2 * xy.X;  // element (X_i, Yhat_i), X_i > Yhat_i
            if (stats) stats->candidates_checked++;
            for (const auto& tk : tks) {
                if (!(0 < Xi && Xi < Yi + tk.k)) continue;
                if (stats) stats->in_range++;
                if (!(Xi < tk.t - 2 * tk.k)) continue;
                if (stats) stats->passed_c3_condition++;
                CaseSolution cs;
                if (assemble(a, Xi, Yi, tk.t, tk.k, sign, &cs)) {
                    if (stats) stats->counterexamples++;
                    cs.A_xy = xy.A;
                    cs.A_tk = tk.A;
                    cs.type_tag = '!';
                    if (seen.insert(cs.q5.t).second) out.push_back(cs);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<CaseSolution> solve_case_ii(i64 a) { return solve_case(a, -1, nullptr); }

std::vector<CaseSolution> solve_case_iii(i64 a, ConjectureStats* stats) {
    return solve_case(a, +1, stats);
}

Classification classify(const DSQuintuple& q5) {
    const auto& t = q5.t;
    if (t.c1 == t.c2 || t.c2 == t.c3) {
        i64 repeated = t.c1 == t.c2 ? t.c1 : t.c2;
        // type I repeats (n-m)^2 (odd), type II repeats 2m^2 (even)
        return {repeated % 2 == 1 ? TripleClass::EqualPairI : TripleClass::EqualPairII, 0};
    }
    if (q5.c4m == 0) return {TripleClass::ZeroC4, t.c3 - q5.q};
    if (q5.q == t.c3) return {TripleClass::CaseI, 0};
    if (q5.q < t.c3) return {TripleClass::CaseII, t.c3 - q5.q};
    return {TripleClass::CaseIII, q5.q - t.c3};
}

std::vector<DSQuintuple> solve_all(i64 c3_max) {
    std::set<DSQuintuple> acc;
    auto keep = [&](const DSQuintuple& q5) {
        if (q5.t.c3 <= c3_max) acc.insert(q5);
    };

    i64 n_pair_max = isqrt64(2 * c3_max) + 2;
    for (const auto& p : m_pairs(std::max<i64>(2, n_pair_max))) {
        for (const auto& e : equal_pair_triples(p)) keep(e.q5);
    }
    for (i64 n = 2; n * n <= c3_max; n++) {
        for (const auto& q5 : zero_c4_triples(n)) keep(q5);
    }
    if (c3_max >= 6) {
        for (const auto& row : solve_case_i(2 * c3_max)) keep(row.q5);
    }
    // a = 2 Yhat^2 - X^2 < 2 (2 c3)^2 bounds the case ii/iii index
    i64 a_max = 8 * c3_max * c3_max;
    for (i64 a = 2; a <= a_max; a++) {
        if (!case_a_value_possible(a)) continue;
        for (const auto& cs : solve_case_ii(a)) keep(cs.q5);
        for (const auto& cs : solve_case_iii(a)) keep(cs.q5);
    }
    return {acc.begin(), acc.end()};
}

}  // namespace ds
