#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ds/sequences.hpp"

using namespace ds;

TEST_CASE("generated prefixes match the definitions") {
    CHECK(generate_sequence("A058529", 10) ==
          std::vector<Int>{1, 7, 17, 23, 31, 41, 47, 49, 71, 73});
    CHECK(generate_sequence("A192453", 5) == std::vector<Int>{1, 2, 17, 34, 41});
    CHECK(generate_sequence("A225771", 6) == std::vector<Int>{1, 3, 9, 11, 17, 19});
    CHECK(generate_sequence("A057126", 6) == std::vector<Int>{1, 2, 7, 14, 17, 23});
    CHECK(generate_sequence("A023022", 10) ==
          std::vector<Int>{1, 1, 1, 2, 1, 3, 2, 3, 2, 5});
    CHECK(generate_sequence("A001109", 5) == std::vector<Int>{0, 1, 6, 35, 204});
    CHECK(generate_sequence("A001541", 5) == std::vector<Int>{1, 3, 17, 99, 577});
    CHECK(generate_sequence("A001653", 5) == std::vector<Int>{1, 5, 29, 169, 985});
    CHECK(generate_sequence("A054521", 10) ==
          std::vector<Int>{1, 1, 0, 1, 1, 0, 1, 0, 1, 0});
    // a(1) = 1, then phi(2n)/2
    CHECK(generate_sequence("A055034", 8) == std::vector<Int>{1, 1, 1, 2, 2, 2, 3, 4});

    CHECK_THROWS(generate_sequence("A000001", 5));
    CHECK_THROWS(generate_sequence("A058529", 0));
}

TEST_CASE("recurrence sequences satisfy their Pell identities") {
    auto a = generate_sequence("A001109", 30);
    auto b = generate_sequence("A001541", 30);
    auto c = generate_sequence("A001653", 30);
    // b(n)^2 - 8 a(n)^2 = 1 (companion Pell pair), plus the recurrence itself
    for (int i = 0; i < 20; i++) CHECK(b[i] * b[i] - 8 * a[i] * a[i] == 1);
    for (int i = 2; i < 30; i++) {
        CHECK(a[i] == 6 * a[i - 1] - a[i - 2]);
        CHECK(b[i] == 6 * b[i - 1] - b[i - 2]);
        CHECK(c[i] == 6 * c[i - 1] - c[i - 2]);
    }
}

TEST_CASE("every snapshot verifies") {
    for (const auto& info : known_sequences()) {
        auto chk = verify_sequence(info.id);
        INFO(info.id);
        CHECK(chk.ok);
        CHECK(chk.compared >= 200);
    }
    CHECK_THROWS(verify_sequence("A000001"));
}
