#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ds {

using i64 = long long;
using i128 = __int128;

// Prime factorization of a positive integer, primes strictly increasing.
struct Factorization {
    i64 value = 1;
    std::vector<std::pair<i64, int>> factors;

    // number of distinct prime factors congruent to r mod 8
    int count_mod8(int r) const;
    // exponent of prime p (0 if absent)
    int exponent(i64 p) const;
};

// floor(sqrt(n)) computed exactly, n >= 0
i64 isqrt64(i64 n);

// true iff n is a perfect square; optionally returns the root
bool is_square(i64 n, i64* root = nullptr);

// deterministic trial-division primality test, valid for n up to ~3e18
// (divisor scan is O(sqrt n); intended for desk-scale inputs)
bool is_prime(i64 n);

// Trial division; inputs up to ~1e12 are fine, the documented ceiling
// for comfortable runtime is 1e9 per the library's intended desk scale.
Factorization factorize(i64 n);

i64 euler_phi(i64 n);

// Legendre symbol (2|p) = (-1)^((p^2-1)/8); throws unless p is an odd prime.
int legendre_2(i64 p);

// All j in [0, m) with j^2 == a (mod m).  Per odd prime power: solve mod p,
// then Hensel-lift (unique lift when p does not divide a); powers of 2 and
// primes dividing a are handled by direct search over the prime power.
// Results recombined by CRT, returned sorted.
std::vector<i64> sqrt_mod(i64 a, i64 m);

}  // namespace ds
