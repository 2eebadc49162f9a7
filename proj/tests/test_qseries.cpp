#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcong/qseries.hpp"

using namespace qcong;

namespace {

QSeries geometric(long T) {  // 1/(1-q)
    std::vector<Rat> c(T, Rat(1));
    return QSeries(0, std::move(c));
}

// Brute-force oracle: number of partitions of n into parts >= 1, no series
// machinery, exponential-time recursion (fine for tiny n).
long count_partitions(long n, long max_part) {
    if (n == 0) return 1;
    long total = 0;
    for (long p = std::min(n, max_part); p >= 1; --p)
        total += count_partitions(n - p, p);
    return total;
}

QSeries random_series(std::mt19937_64& rng, long span = 12) {
    std::uniform_int_distribution<long> me(-4, 2);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    long lo = me(rng);
    std::vector<Rat> c(span);
    for (auto& v : c) {
        v = Rat(num(rng), den(rng));
        v.canonicalize();
    }
    return QSeries(lo, std::move(c));
}

}  // namespace

TEST_CASE("window invariants and accessors") {
    QSeries s(-2, {Rat(1), Rat(0), Rat(3)});
    CHECK(s.min_exp() == -2);
    CHECK(s.trunc() == 1);
    CHECK(s.at(-2) == 1);
    CHECK(s.at(0) == 3);
    CHECK_THROWS_AS(s.at(1), std::out_of_range);
    CHECK_THROWS_AS(s.at(-3), std::out_of_range);
    CHECK(s.valuation() == -2);
    CHECK_THROWS_AS(QSeries(0, {}), series_error);

    auto z = QSeries::zero(0, 5);
    CHECK(!z.valuation().has_value());
    CHECK(z.is_zero());
}

TEST_CASE("arith basics") {
    auto one = QSeries::one(10);
    QSeries onepq(0, {Rat(1), Rat(1)});
    CHECK(mul(onepq, QSeries::one(2)) == onepq);

    // (1 - q) * geometric telescopes to 1
    QSeries onemq(0, {Rat(1), Rat(-1)});
    auto prod = mul(onemq, geometric(50));
    CHECK(prod.at(0) == 1);
    for (long e = 1; e < prod.trunc(); ++e) CHECK(prod.at(e) == 0);

    // f_1 f_2^2 * (1 / (f_1 f_2^2)) = 1 at T = 100
    auto fwd = eta_product({{1, 1}, {2, 2}}, 100);
    auto inv = eta_product({{1, -1}, {2, -2}}, 100);
    auto p = mul(fwd, inv);
    CHECK(p.at(0) == 1);
    for (long e = 1; e < p.trunc(); ++e) CHECK(p.at(e) == 0);

    // coefficients below a window are known zeros, so sums extend down to the
    // smaller min_exp
    auto wide = add(QSeries::one(3), QSeries::one(3).shifted(10));
    CHECK(wide.min_exp() == 0);
    CHECK(wide.trunc() == 3);
    CHECK(wide.at(0) == 1);
}

TEST_CASE("mul precision propagation on Laurent windows") {
    QSeries a(-2, std::vector<Rat>(7, Rat(1)));  // [-2, 5)
    QSeries b(1, std::vector<Rat>(4, Rat(1)));   // [1, 5)
    auto p = mul(a, b);
    CHECK(p.min_exp() == -1);
    CHECK(p.trunc() == std::min(a.trunc() + b.min_exp(), b.trunc() + a.min_exp()));
    CHECK(p.trunc() == 3);
}

TEST_CASE("invert") {
    QSeries onemq(0, {Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(0)});
    auto g = invert(onemq);
    for (long e = 0; e < g.trunc(); ++e) CHECK(g.at(e) == 1);

    // p(4) = 5 against the brute-force enumerator
    CHECK(count_partitions(4, 4) == 5);
    auto pser = invert(eta_product({{1, 1}}, 10));
    CHECK(pser.at(4) == count_partitions(4, 4));
    CHECK(pser.at(4) == 5);

    // a_3(2) = 4: partitions of 2 with 3-colored even parts: 1+1, 2 in 3 colors
    auto a3 = invert(eta_product({{1, 1}, {2, 2}}, 10));
    CHECK(a3.at(2) == 4);

    CHECK_THROWS_AS(invert(QSeries::zero(0, 4)), non_invertible_error);

    // two-sided inverse to within truncation
    QSeries s(1, {Rat(2), Rat(1), Rat(-3), Rat(5), Rat(0), Rat(7)});
    auto si = invert(s);
    CHECK(si.min_exp() == -1);
    auto p = mul(s, si);
    CHECK(p.at(0) == 1);
    for (long e = 1; e < p.trunc(); ++e) CHECK(p.at(e) == 0);
}

TEST_CASE("pow") {
    QSeries onepq(0, {Rat(1), Rat(1), Rat(0)});
    auto sq = pow(onepq, 2);
    CHECK(sq.at(0) == 1);
    CHECK(sq.at(1) == 2);
    CHECK(sq.at(2) == 1);

    auto f1 = eta_product({{1, 1}}, 50);
    auto p0 = pow(f1, 0);
    CHECK(p0.at(0) == 1);
    CHECK(p0.valuation() == 0);

    // binary powering matches naive repeated multiplication at T = 50
    auto bin = pow(f1, 441);
    QSeries naive = f1;
    for (int k = 1; k < 441; ++k) naive = mul(naive, f1);
    for (long e = 0; e < std::min(bin.trunc(), naive.trunc()); ++e)
        CHECK(bin.at(e) == naive.at(e));
    CHECK(bin.at(3) == naive.at(3));

    // negative exponent goes through invert
    auto inv2 = pow(eta_product({{2, 1}}, 30), -2);
    auto direct = eta_product({{2, -2}}, 30);
    for (long e = 0; e < std::min(inv2.trunc(), direct.trunc()); ++e)
        CHECK(inv2.at(e) == direct.at(e));
}

TEST_CASE("substitute_power") {
    QSeries q(1, {Rat(1)});
    auto q5 = substitute_power(q, 5);
    CHECK(q5.min_exp() == 5);
    CHECK(q5.at(5) == 1);
    CHECK(q5.trunc() == 10);

    QSeries s(0, {Rat(1), Rat(1), Rat(1)});
    auto s2 = substitute_power(s, 2);
    CHECK(s2.at(0) == 1);
    CHECK(s2.at(1) == 0);
    CHECK(s2.at(2) == 1);
    CHECK(s2.at(4) == 1);
    CHECK(s2.trunc() == 6);

    // f_1(q^25) = f_25
    auto f1 = eta_product({{1, 1}}, 20);
    auto f25_sub = substitute_power(f1, 25);
    auto f25 = eta_product({{25, 1}}, 20 * 25);
    for (long e = 0; e < f25_sub.trunc(); ++e) CHECK(f25_sub.at(e) == f25.at(e));
}

TEST_CASE("atkin_u") {
    QSeries q5(5, {Rat(1)});
    auto u = atkin_u(q5, 5);
    CHECK(u.min_exp() == 1);
    CHECK(u.at(1) == 1);

    // U_d(F(q^d) G(q)) = F(q) U_d(G(q)) for random sparse F, G
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> deg(0, 30), coef(-6, 6);
    for (int iter = 0; iter < 60; ++iter) {
        long d = 2 + static_cast<long>(rng() % 6);
        auto F = QSeries::zero(0, 31);
        auto G = QSeries::zero(0, 31 * d);
        std::vector<Rat> fc(31), gc(31 * d);
        for (int k = 0; k < 8; ++k) fc[deg(rng)] += coef(rng);
        for (int k = 0; k < 8; ++k) gc[deg(rng)] += coef(rng);
        F = QSeries(0, fc);
        G = QSeries(0, gc);
        auto lhs = atkin_u(mul(substitute_power(F, d), G), d);
        auto rhs = mul(F, atkin_u(G, d));
        for (long e = 0; e < std::min(lhs.trunc(), rhs.trunc()); ++e)
            CHECK(lhs.at(e) == rhs.at(e));
    }

    // linearity
    auto a = random_series(rng), b = random_series(rng);
    auto l = atkin_u(add(a, b), 3);
    auto r = add(atkin_u(a, 3), atkin_u(b, 3));
    for (long e = r.min_exp(); e < r.trunc(); ++e) CHECK(l.at(e) == r.at(e));
}

TEST_CASE("eta_product small expansions") {
    auto f1 = eta_product({{1, 1}}, 8);
    CHECK(f1.at(0) == 1);
    CHECK(f1.at(1) == -1);
    CHECK(f1.at(2) == -1);
    CHECK(f1.at(3) == 0);
    CHECK(f1.at(4) == 0);
    CHECK(f1.at(5) == 1);
    CHECK(f1.at(7) == 1);

    // f_2^2 against the two-route product
    auto sq = eta_product({{2, 2}}, 12);
    auto by_mul = mul(eta_product({{2, 1}}, 12), eta_product({{2, 1}}, 12));
    for (long e = 0; e < 12; ++e) CHECK(sq.at(e) == by_mul.at(e));
    CHECK(sq.at(0) == 1);
    CHECK(sq.at(2) == -2);
    CHECK(sq.at(4) == -1);

    // the power-recurrence path (|e| >= 32) against binary powering
    auto rec = eta_product({{1, 50}}, 40);
    auto bin = pow(eta_product({{1, 1}}, 40), 50);
    for (long e = 0; e < 40; ++e) CHECK(rec.at(e) == bin.at(e));
    auto recneg = eta_product({{2, -40}}, 30);
    auto binneg = pow(eta_product({{2, 1}}, 30), -40);
    for (long e = 0; e < 30; ++e) CHECK(recneg.at(e) == binneg.at(e));

    // two factors both on the recurrence path combine by a dense product
    auto two_large = eta_product({{1, 40}, {2, -35}}, 25);
    auto split = mul(eta_product({{1, 40}}, 25), eta_product({{2, -35}}, 25));
    for (long e = 0; e < 25; ++e) CHECK(two_large.at(e) == split.at(e));

    CHECK_THROWS_AS(eta_product({{0, 1}}, 5), std::invalid_argument);
}

TEST_CASE("congruent_zero") {
    QSeries s(0, {Rat(0), Rat(5), Rat(10)});
    auto rep = congruent_zero(s, 5, 2);
    CHECK(rep.pass);

    QSeries t(0, {Rat(0), Rat(5), Rat(1)});
    auto rep2 = congruent_zero(t, 5, 2);
    CHECK(!rep2.pass);
    CHECK(rep2.first_failure == 2);
    CHECK(rep2.residue == 1);

    QSeries frac(0, {Rat(1, 2)});
    CHECK_THROWS_AS(congruent_zero(frac, 5, 0), non_integral_error);
    CHECK_THROWS_AS(congruent_zero(s, 5, 7), precision_error);
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(987654);
    for (int iter = 0; iter < 200; ++iter) {
        auto a = random_series(rng), b = random_series(rng), c = random_series(rng);
        auto ab_c = add(add(a, b), c);
        auto a_bc = add(a, add(b, c));
        CHECK(ab_c == a_bc);
        auto ab = mul(a, b), ba = mul(b, a);
        CHECK(ab == ba);
        auto lhs = mul(a, add(b, c));
        auto rhs = add(mul(a, b), mul(a, c));
        for (long e = std::max(lhs.min_exp(), rhs.min_exp());
             e < std::min(lhs.trunc(), rhs.trunc()); ++e)
            CHECK(lhs.at(e) == rhs.at(e));
    }
}

TEST_CASE("json round trip") {
    QSeries s(-3, {Rat(1, 2), Rat(0), Rat(-7), Rat(22, 7)});
    auto back = QSeries::from_json(s.json());
    CHECK(back == s);
    CHECK(s.json().find("1/2") != std::string::npos);

    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 50; ++iter) {
        auto r = random_series(rng);
        CHECK(QSeries::from_json(r.json()) == r);
    }
}
