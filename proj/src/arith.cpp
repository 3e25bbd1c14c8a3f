#include "ds/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ds {

int Factorization::count_mod8(int r) const {
    int n = 0;
    for (const auto& [p, e] : factors) {
        if (p % 8 == r) n++;
    }
    return n;
}

int Factorization::exponent(i64 p) const {
    for (const auto& [q, e] : factors) {
        if (q == p) return e;
    }
    return 0;
}

i64 isqrt64(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt64: negative input");
    i64 r = (i64)std::sqrt((double)n);
    while (r > 0 && r * r > n) r--;
    while ((r + 1) * (r + 1) <= n) r++;
    return r;
}

bool is_square(i64 n, i64* root) {
    if (n < 0) return false;
    i64 r = isqrt64(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Factorization factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: input must be positive");
    Factorization f;
    f.value = n;
    for (i64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                e++;
            }
            f.factors.push_back({d, e});
        }
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

i64 euler_phi(i64 n) {
    i64 phi = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        i64 pe = p - 1;
        for (int i = 1; i < e; i++) pe *= p;
        phi *= pe;
    }
    return phi;
}

int legendre_2(i64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("legendre_2: p must be an odd prime");
    int r = (int)(p % 8);
    return (r == 1 || r == 7) ? +1 : -1;
}

namespace {

i64 mulmod(i64 a, i64 b, i64 m) { return (i64)((i128)a * b % m); }

i64 powmod(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// modular inverse mod odd prime power (gcd(a, m) = 1)
i64 invmod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1 != 0) {
        i64 q = g / a1;
        g -= q * a1;
        std::swap(g, a1);
        x -= q * x1;
        std::swap(x, x1);
    }
    return ((x % m) + m) % m;
}

// Tonelli-Shanks for odd prime p with (a|p) = 1
i64 sqrt_mod_prime(i64 a, i64 p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    if (p < 1000) {  // brute force is plenty at this size
        for (i64 j = 0; j <= p / 2; j++) {
            if (mulmod(j, j, p) == a) return j;
        }
        return -1;
    }
    if (powmod(a, (p - 1) / 2, p) != 1) return -1;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    i64 q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        s++;
    }
    i64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) z++;
    i64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        i64 i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            i++;
        }
        i64 b = powmod(c, (i64)1 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

// all roots of j^2 == a (mod pe), pe = p^e
std::vector<i64> sqrt_mod_prime_power(i64 a, i64 p, int e, i64 pe) {
    a = ((a % pe) + pe) % pe;
    if (p == 2 || a % p == 0) {
        // direct search; pe stays small for every use in this library
        if (pe > (1 << 21)) throw std::invalid_argument("sqrt_mod: 2-power/ramified modulus too large");
        std::vector<i64> out;
        for (i64 j = 0; j < pe; j++) {
            if (mulmod(j, j, pe) == a) out.push_back(j);
        }
        return out;
    }
    i64 r = sqrt_mod_prime(a, p);
    if (r < 0) return {};
    // unique Hensel lift at each level since 2r is invertible mod p
    i64 mod = p;
    for (int i = 1; i < e; i++) {
        i64 next = mod * p;
        i64 diff = (i64)(((i128)r * r - a) % next);
        diff = ((diff % next) + next) % next;
        i64 inv2r = invmod(2 * r % next, next);
        r = (i64)(((i128)r - (i128)diff * inv2r % next + next) % next);
        mod = next;
    }
    if (r == 0) return {0};
    return {std::min(r, pe - r), std::max(r, pe - r)};
}

}  // namespace

std::vector<i64> sqrt_mod(i64 a, i64 m) {
    if (m < 1) throw std::invalid_argument("sqrt_mod: modulus must be positive");
    if (m == 1) return {0};
    std::vector<i64> res = {0};
    i64 mod = 1;
    for (const auto& [p, e] : factorize(m).factors) {
        i64 pe = 1;
        for (int i = 0; i < e; i++) pe *= p;
        auto part = sqrt_mod_prime_power(a, p, e, pe);
        if (part.empty()) return {};
        std::vector<i64> next;
        next.reserve(res.size() * part.size());
        i64 inv_mod = invmod(mod % pe, pe);
        for (i64 r0 : res) {
            for (i64 r1 : part) {
                // CRT: x == r0 (mod mod), x == r1 (mod pe)
                i64 k = mulmod(((r1 - r0) % pe + pe) % pe, inv_mod, pe);
                next.push_back(r0 + mod * k);
            }
        }
        res = std::move(next);
        mod *= pe;
    }
    std::sort(res.begin(), res.end());
    return res;
}

}  // namespace ds
