#include "ds/forms.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

namespace ds {

namespace {

std::atomic<i64> g_boundary_hits{0};

constexpr int kScanWindow = 8;  // uniqueness scan window

i64 floordiv(i64 p, i64 q) {
    // q > 0
    i64 d = p / q, r = p % q;
    return (r != 0 && r < 0) ? d - 1 : d;
}

i64 ceildiv(i64 p, i64 q) { return floordiv(p + q - 1, q); }

}  // namespace

bool QuadForm::primitive() const {
    return std::gcd(std::gcd(a, b), c) == 1;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

Mat2 Mat2::inverse_unimodular() const {
    i64 d = det();
    if (d != 1 && d != -1) throw std::logic_error("Mat2: not unimodular");
    return {d * m11, -d * m01, -d * m10, d * m00};
}

std::pair<i64, i64> Mat2::apply(i64 x, i64 y) const {
    return {m00 * x + m01 * y, m10 * x + m11 * y};
}

Mat2 r_matrix(i64 t) { return {0, -1, 1, t}; }

const QuadForm kPellForm{1, 0, -2};
const QuadForm kPrincipalForm{1, 2, -1};
const QuadForm kDefiniteForm{1, 0, 2};
const Mat2 kB = r_matrix(0) * r_matrix(1);          // -[[1,1],[0,1]]
const Mat2 kAuto = r_matrix(-2) * r_matrix(2);      // -[[1,2],[2,5]]
const Mat2 kAutoPrime{3, 4, 2, 3};

namespace {

// transform a form by a unimodular matrix: F'(x,y) = F(M (x,y)^T)
QuadForm transform(const QuadForm& f, const Mat2& m) {
    i64 a = f.a * m.m00 * m.m00 + f.b * m.m00 * m.m10 + f.c * m.m10 * m.m10;
    i64 b = 2 * f.a * m.m00 * m.m01 + f.b * (m.m00 * m.m11 + m.m01 * m.m10) +
            2 * f.c * m.m10 * m.m11;
    i64 c = f.a * m.m01 * m.m01 + f.b * m.m01 * m.m11 + f.c * m.m11 * m.m11;
    return {a, b, c};
}

}  // namespace

std::pair<QuadForm, i64> half_reduced_right_neighbor(const QuadForm& f) {
    if (f.c == 0) throw std::invalid_argument("half_reduced_right_neighbor: form factorizes");
    i64 disc = f.disc();
    if (disc <= 0) throw std::invalid_argument("half_reduced_right_neighbor: needs Disc > 0");
    i64 fd = isqrt64(disc);
    if (fd * fd == disc) throw std::invalid_argument("half_reduced_right_neighbor: square Disc");
    fd += 1;  // ceil(sqrt(Disc))
    i64 t = f.c > 0 ? ceildiv(fd + f.b - 2 * f.c, 2 * f.c)
                    : floordiv(2 * (-f.c) - fd - f.b, 2 * (-f.c));
    QuadForm g = transform(f, r_matrix(t));
    return {g, t};
}

namespace {

ReductionChain reduce_until(QuadForm f, const QuadForm& target, bool definite) {
    ReductionChain rc;
    rc.chain.push_back(f);
    rc.rpa = Mat2{};
    // Runs of t = 2 (the "river") shrink |a| arithmetically, so the chain
    // length grows like sqrt(|a|); the guard only has to catch genuine
    // non-termination (an imprimitive form that can never reach the target).
    i64 guard = 0;
    while (!(f == target)) {
        if (++guard > 1000000) throw std::logic_error("form reduction did not terminate");
        i64 t;
        QuadForm g;
        if (definite) {
            if (f.c <= 0) throw std::invalid_argument("reduce_definite: not positive definite");
            t = ceildiv(f.b - f.c, 2 * f.c);
            g = transform(f, r_matrix(t));
        } else {
            std::tie(g, t) = half_reduced_right_neighbor(f);
        }
        if (g.disc() != f.disc()) throw std::logic_error("reduction changed the discriminant");
        rc.t_tuple.push_back(t);
        rc.rpa = rc.rpa * r_matrix(t);
        rc.chain.push_back(g);
        f = g;
    }
    return rc;
}

}  // namespace

ReductionChain reduce_indefinite(QuadForm f) {
    if (f.disc() != 8) throw std::invalid_argument("reduce_indefinite: Disc must be 8");
    return reduce_until(f, kPrincipalForm, false);
}

ReductionChain reduce_definite(QuadForm f) {
    if (f.disc() != -8 || f.a <= 0)
        throw std::invalid_argument("reduce_definite: needs positive definite Disc -8");
    return reduce_until(f, kDefiniteForm, true);
}

std::vector<std::pair<i64, QuadForm>> rpapf_indefinite(i64 k) {
    if (k == 0) throw std::invalid_argument("rpapf_indefinite: k must be nonzero");
    i64 ak = k < 0 ? -k : k;
    std::vector<std::pair<i64, QuadForm>> out;
    for (i64 j : sqrt_mod(2, ak)) {
        QuadForm f{k, 2 * j, (j * j - 2) / k};
        if ((j * j - 2) % k != 0) throw std::logic_error("rpapf_indefinite: congruence broke");
        if (f.primitive()) out.push_back({j, f});
    }
    return out;
}

namespace {

PellSolution normalize_sign(i64 x, i64 y, i64 k, int* flip = nullptr) {
    int s = +1;
    if (y < 0 || (y == 0 && x < 0)) {
        x = -x;
        y = -y;
        s = -1;
    }
    if (flip) *flip = s;
    return {x, y, k};
}

}  // namespace

std::vector<SolutionFamily> solve_pell_families(i64 k) {
    i64 ak = k < 0 ? -k : k;
    std::vector<SolutionFamily> fams;
    for (const auto& [j, f] : rpapf_indefinite(k)) {
        ReductionChain rc = reduce_indefinite(f);
        auto [x, y] = (kB * rc.rpa.inverse_unimodular()).apply(1, 0);
        SolutionFamily fam;
        fam.j = j;
        fam.rpapf = f;
        fam.t_tuple = rc.t_tuple;
        fam.fundamental = normalize_sign(x, y, k, &fam.sign_flip);
        if (!fam.fundamental.ok()) throw std::logic_error("solve_pell_families: bad fundamental");
        fams.push_back(std::move(fam));
    }
    // pair conjugates j <-> |k| - j and tag family I (has an element with
    // 0 < X < Y inside the scan window)
    for (size_t i = 0; i < fams.size(); i++) {
        if (fams[i].pair_index >= 0) continue;
        i64 cj = (ak - fams[i].j) % ak;
        size_t partner = i;
        for (size_t l = 0; l < fams.size(); l++) {
            if (l != i && fams[l].j == cj) partner = l;
        }
        fams[i].pair_index = (int)partner;
        fams[partner].pair_index = (int)i;
        auto has_ppfs = [](const SolutionFamily& f) {
            for (int n = -kScanWindow; n <= kScanWindow; n++) {
                PellSolution s = family_iterate(f, n);
                if (0 < s.X && s.X < s.Y) {
                    if (n == -kScanWindow || n == kScanWindow) g_boundary_hits++;
                    return true;
                }
            }
            return false;
        };
        bool pi = has_ppfs(fams[i]);
        bool pp = partner == i ? false : has_ppfs(fams[partner]);
        if (pi == pp) {
            // no (or both) qualifying element: fall back to j order
            pi = fams[i].j <= fams[partner].j;
            pp = !pi;
        }
        fams[i].family_tag = pi ? 'I' : 'J';
        if (partner != i) fams[partner].family_tag = pp ? 'I' : 'J';
    }
    return fams;
}

PellSolution family_iterate(const SolutionFamily& f, i64 i) {
    auto [x, y] = auto_power(i).apply(f.fundamental.X, f.fundamental.Y);
    PellSolution s = normalize_sign(x, y, f.fundamental.k);
    if (!s.ok()) throw std::logic_error("family_iterate: equation lost");
    return s;
}

i64 chebyshev_s6(i64 n) {
    if (n == -1) return 0;
    if (n < -1) {
        // run the recurrence backwards: S(n) = 6 S(n+1) - S(n+2)
        i64 a = 1, b = 0;  // S(0), S(-1)
        for (i64 i = -1; i > n; i--) {
            i64 c = 6 * b - a;
            a = b;
            b = c;
        }
        return b;
    }
    i64 a = 0, b = 1;  // S(-1), S(0)
    for (i64 i = 0; i < n; i++) {
        i64 c = 6 * b - a;
        a = b;
        b = c;
    }
    return b;
}

Mat2 auto_power(i64 n) {
    // M^n = S(n-1) M - S(n-2) I for M = AutoPrime (char poly x^2 - 6x + 1)
    i64 s1 = chebyshev_s6(n - 1), s2 = chebyshev_s6(n - 2);
    return {3 * s1 - s2, 4 * s1, 2 * s1, 3 * s1 - s2};
}

std::vector<PellSolution> unique_xy_solution(i64 s) {
    if (s < 3 || s % 2 == 0)
        throw std::invalid_argument("unique_xy_solution: s must be odd and >= 3");
    std::vector<PellSolution> out;
    for (const auto& fam : solve_pell_families(-s * s)) {
        for (int n = -kScanWindow; n <= kScanWindow; n++) {
            PellSolution sol = family_iterate(fam, n);
            if (0 < sol.X && sol.X < sol.Y && std::gcd(sol.X, sol.Y) == 1) {
                if (n == -kScanWindow || n == kScanWindow) g_boundary_hits++;
                out.push_back(sol);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<i64, i64>> solve_definite(i64 a) {
    if (a < 1) throw std::invalid_argument("solve_definite: a must be positive");
    std::vector<std::pair<i64, i64>> out;
    for (i64 j : sqrt_mod(((-2) % a + a) % a, a)) {
        QuadForm f{a, 2 * j, (j * j + 2) / a};
        if ((j * j + 2) % a != 0) throw std::logic_error("solve_definite: congruence broke");
        if (!f.primitive()) continue;
        ReductionChain rc = reduce_definite(f);
        auto [t, k] = rc.rpa.inverse_unimodular().apply(1, 0);
        if (k < 0 || (k == 0 && t < 0)) {
            t = -t;
            k = -k;
        }
        if (t * t + 2 * k * k != a) throw std::logic_error("solve_definite: bad representation");
        out.push_back({t, k});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

i64 family_scan_boundary_hits() { return g_boundary_hits.load(); }

}  // namespace ds
