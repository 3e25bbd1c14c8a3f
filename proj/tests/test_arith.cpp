#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ds/arith.hpp"

#include <numeric>
#include <random>

using namespace ds;

TEST_CASE("factorize known values") {
    auto f = factorize(2737);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<i64, int>{7, 1});
    CHECK(f.factors[1] == std::pair<i64, int>{17, 1});
    CHECK(f.factors[2] == std::pair<i64, int>{23, 1});

    CHECK(factorize(1).factors.empty());

    auto g = factorize(44217);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0] == std::pair<i64, int>{3, 2});
    CHECK(g.factors[1] == std::pair<i64, int>{17, 3});
}

TEST_CASE("factorization invariants on a range") {
    for (i64 n = 1; n <= 3000; n++) {
        auto f = factorize(n);
        i64 prod = 1;
        i64 prev = 1;
        for (auto [p, e] : f.factors) {
            CHECK(p > prev);
            CHECK(e >= 1);
            CHECK(is_prime(p));
            for (int i = 0; i < e; i++) prod *= p;
            prev = p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    // direct count comparison
    for (i64 n = 1; n <= 500; n++) {
        i64 cnt = 0;
        for (i64 k = 1; k <= n; k++) {
            if (std::gcd(k, n) == 1) cnt++;
        }
        CHECK(euler_phi(n) == cnt);
    }
}

TEST_CASE("euler_phi multiplicative on coprime pairs") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<i64> dist(1, 10000);
    int done = 0;
    while (done < 200) {
        i64 a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1) continue;
        CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
        done++;
    }
}

TEST_CASE("legendre_2") {
    CHECK(legendre_2(7) == 1);
    CHECK(legendre_2(3) == -1);
    CHECK(legendre_2(17) == 1);
    CHECK(legendre_2(5) == -1);
    CHECK(legendre_2(23) == 1);
    CHECK_THROWS(legendre_2(2));
    CHECK_THROWS(legendre_2(9));
    CHECK_THROWS(legendre_2(15));
}

TEST_CASE("sqrt_mod examples") {
    CHECK(sqrt_mod(2, 289) == std::vector<i64>{45, 244});
    CHECK(sqrt_mod(2, 3).empty());
    CHECK(sqrt_mod(-2, 153) == std::vector<i64>{41, 58, 95, 112});
    // Example 6 anchor: j-solutions of j^2 == 2 (mod 2737)
    CHECK(sqrt_mod(2, 2737) ==
          std::vector<i64>{74, 465, 1145, 1201, 1536, 1592, 2272, 2663});
}

TEST_CASE("sqrt_mod equals brute force") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<i64> mdist(1, 100000);
    for (int it = 0; it < 150; it++) {
        i64 m = mdist(rng);
        for (i64 a : {(i64)2, (i64)-2}) {
            auto got = sqrt_mod(a, m);
            std::vector<i64> want;
            i64 aa = ((a % m) + m) % m;
            for (i64 j = 0; j < m; j++) {
                if ((i128)j * j % m == aa) want.push_back(j);
            }
            CHECK(got == want);
        }
    }
}

TEST_CASE("sqrt_mod solution count matches the prime-class rule") {
    // for odd m whose square part is trivial: |sqrt_mod(2,m)| =
    // 2^(#{p | m : p == +-1 mod 8}) and zero if another odd prime divides m
    for (i64 m = 3; m <= 4000; m += 2) {
        auto f = factorize(m);
        bool squarefree = true, solvable = true;
        int good = 0;
        for (auto [p, e] : f.factors) {
            if (e > 1) squarefree = false;
            int r = (int)(p % 8);
            if (r == 1 || r == 7) {
                good++;
            } else {
                solvable = false;
            }
        }
        if (!squarefree) continue;
        auto sols = sqrt_mod(2, m);
        if (solvable) {
            CHECK(sols.size() == (size_t)(1ll << good));
        } else {
            CHECK(sols.empty());
        }
    }
}

TEST_CASE("isqrt and is_square") {
    for (i64 n = 0; n <= 20000; n++) {
        i64 r = isqrt64(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
        i64 root;
        if (is_square(n, &root)) CHECK(root * root == n);
    }
    CHECK(is_square(0));
    CHECK(!is_square(-4));
}
