#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcong/partitions.hpp"

using namespace qcong;

namespace {

// Independent brute-force enumerator: partitions with unrestricted odd parts
// and d-colored even parts, counted by recursion over (largest part, color).
// Exponential; for tiny n only.
long brute_count(long n, long max_part, long max_color_at_max, long d) {
    if (n == 0) return 1;
    long total = 0;
    for (long p = std::min(n, max_part); p >= 1; --p) {
        long colors = (p % 2 == 0) ? d : 1;
        long cmax = (p == max_part) ? std::min(max_color_at_max, colors) : colors;
        for (long c = cmax; c >= 1; --c) total += brute_count(n - p, p, c, d);
    }
    return total;
}

long brute(long n, long d) { return brute_count(n, n, d, d); }

}  // namespace

TEST_CASE("brute-force oracle pins the small values") {
    // a_3(0..6) = 1, 1, 4, 5, 14, 18, 41
    long expected[] = {1, 1, 4, 5, 14, 18, 41};
    for (long n = 0; n <= 6; ++n) CHECK(brute(n, 3) == expected[n]);
    CHECK(brute(4, 1) == 5);   // p(4)
    CHECK(brute(2, 3) == 4);   // 1+1, 2 in three colors
    CHECK(brute(4, 3) == 14);  // 1^4; 2+1+1 (3); 2+2 (6); 3+1; 4 (3)
}

TEST_CASE("dp oracle equals brute force on a small window") {
    for (long d : {1L, 2L, 3L, 5L}) {
        auto t = dp_oracle(d, 14);
        for (long n = 0; n <= 14; ++n) CHECK(t.values[n] == brute(n, d));
    }
}

TEST_CASE("series route equals dp oracle up to 2000") {
    for (long d : {1L, 2L, 3L, 5L, 9L}) {
        auto dp = dp_oracle(d, 2000);
        auto ser = table_from_series(d, 2000);
        CHECK(dp.values == ser.values);
    }
}

TEST_CASE("classical specialisations") {
    auto p = dp_oracle(1, 30);
    CHECK(p.values[4] == 5);
    CHECK(p.values[30] == 5604);  // p(30)
    auto a3 = dp_oracle(3, 10);
    CHECK(a3.values[0] == 1);
    CHECK(a3.values[1] == 1);
    CHECK(a3.values[4] == 14);
}

TEST_CASE("monotone in the number of colors") {
    auto tables = {dp_oracle(1, 120), dp_oracle(2, 120), dp_oracle(3, 120),
                   dp_oracle(5, 120), dp_oracle(9, 120)};
    const PartitionTable* prev = nullptr;
    for (auto& t : tables) {
        if (prev)
            for (long n = 2; n <= 120; ++n) CHECK(t.values[n] >= prev->values[n]);
        prev = &t;
    }
}

TEST_CASE("progression values") {
    auto a3 = dp_oracle(3, 70);
    auto v = progression_values(a3, 25, 20, 3);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == a3.values[20]);
    CHECK(v[1] == a3.values[45]);
    CHECK(v[2] == a3.values[70]);
    CHECK(v[0] % 5 == 0);  // first value of the alpha = 1 progression

    auto a5 = table_from_series(5, 49 * 2 + 31);
    CHECK(progression_values(a5, 49, 31, 1)[0] % 7 == 0);
    auto a9 = table_from_series(9, 121 * 2 + 36);
    CHECK(progression_values(a9, 121, 36, 1)[0] % 11 == 0);

    CHECK_THROWS_AS(progression_values(a3, 25, 20, 10), std::out_of_range);
    CHECK_THROWS_AS(progression_values(a3, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("generating series shape and export") {
    auto s = generating_series(1, 12);
    auto p = dp_oracle(1, 11);
    for (long n = 0; n <= 11; ++n) CHECK(s.at(n) == Rat(p.values[n]));

    auto t = dp_oracle(3, 4);
    auto j = t.json();
    CHECK(j == "[\"1\",\"1\",\"4\",\"5\",\"14\"]");
}
