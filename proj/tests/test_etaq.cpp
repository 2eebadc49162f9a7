#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qcong/etaq.hpp"

using namespace qcong;

namespace {

const EtaQuotient& Phi() {
    static const EtaQuotient e(50, {{25, 1}, {50, 2}, {1, -1}, {2, -2}});
    return e;
}
const EtaQuotient& Xfun() {
    static const EtaQuotient e(10, {{2, 1}, {10, 3}, {1, -3}, {5, -1}});
    return e;
}
const EtaQuotient& Zfun() {
    static const EtaQuotient e(10, {{2, 5}, {5, 1}, {1, -5}, {10, -1}});
    return e;
}
const EtaQuotient& Xfun5() {  // x(5 tau) at level 50
    static const EtaQuotient e(50, {{10, 1}, {50, 3}, {5, -3}, {25, -1}});
    return e;
}
const EtaQuotient& Zfun5() {  // z(5 tau) at level 50
    static const EtaQuotient e(50, {{10, 5}, {25, 1}, {5, -5}, {50, -1}});
    return e;
}

}  // namespace

TEST_CASE("cusp enumeration") {
    auto c1 = cusps_of(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].str() == "inf");

    auto c10 = cusps_of(10);
    REQUIRE(c10.size() == 4);
    std::vector<std::string> names;
    for (auto& c : c10) names.push_back(c.str());
    CHECK(names == std::vector<std::string>{"0", "1/2", "1/5", "inf"});

    auto c50 = cusps_of(50);
    CHECK(c50.size() == 12);
    long with_c10 = 0;
    for (auto& c : c50)
        if (c.c == 10) ++with_c10;
    CHECK(with_c10 == 4);  // 1/10, 3/10, 7/10, 9/10

    // representatives are pairwise inequivalent
    for (long N : {10L, 50L, 36L, 48L}) {
        auto cs = cusps_of(N);
        for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = i + 1; j < cs.size(); ++j)
                CHECK(!cusps_equivalent(N, cs[i].a, cs[i].c, cs[j].a, cs[j].c));
        // count formula
        long count = 0;
        for (long c = 1; c <= N; ++c) {
            if (N % c != 0) continue;
            long g = std::gcd(c, N / c);
            for (long u = 1; u <= g; ++u)
                if (std::gcd(u, g) == 1) ++count;
        }
        CHECK(static_cast<long>(cs.size()) == count);
    }

    // known equivalences
    CHECK(cusps_equivalent(10, 1, 5, 3, 5));
    CHECK(!cusps_equivalent(50, 1, 5, 2, 5));
    CHECK(cusps_equivalent(50, 1, 5, 6, 5));
}

TEST_CASE("newman criterion") {
    auto r = newman_check(Phi());
    CHECK(r.all());
    CHECK(r.exp_sum == 0);
    CHECK(r.weighted_sum == 120);

    CHECK(newman_check(Zfun()).all());
    CHECK(newman_check(Xfun()).all());
    CHECK(newman_check(Xfun5()).all());
    CHECK(newman_check(Zfun5()).all());

    // eta(tau)/eta(2 tau) at N = 2: weighted sum -1, not 0 mod 24
    auto bad = newman_check(EtaQuotient(2, {{1, 1}, {2, -1}}));
    CHECK(!bad.all());
    CHECK(!bad.weighted_sum_24);
    CHECK(bad.weighted_sum == -1);
    CHECK(bad.exp_sum_zero);
}

TEST_CASE("ligozat orders") {
    Cusp zero(0, 1, 10), half(1, 2, 10);
    CHECK(ligozat_order(Zfun(), zero) == Rat(-1));
    CHECK(ligozat_order(Zfun(), half) == Rat(1));
    CHECK(ligozat_order(Phi(), Cusp(1, 2, 50)) == Rat(-5));
    CHECK(ligozat_order(Phi(), Cusp(1, 50, 50)) == Rat(5));
    CHECK(ligozat_order(Phi(), Cusp(0, 1, 50)) == Rat(-4));
    CHECK_THROWS_AS(ligozat_order(Phi(), zero), std::invalid_argument);

    // orders of the test set sum to zero over all cusps of the level
    for (auto* eq : {&Phi(), &Xfun5(), &Zfun5()}) {
        Rat total(0);
        for (auto& c : cusps_of(50)) total += ligozat_order(*eq, c);
        CHECK(total == 0);
    }
    for (auto* eq : {&Xfun(), &Zfun()}) {
        Rat total(0);
        for (auto& c : cusps_of(10)) total += ligozat_order(*eq, c);
        CHECK(total == 0);
    }
}

TEST_CASE("expansion valuation agrees with ligozat at infinity") {
    struct Row {
        const EtaQuotient* eq;
        long T;
    } rows[] = {{&Phi(), 40}, {&Xfun(), 30}, {&Zfun(), 30}, {&Xfun5(), 40}, {&Zfun5(), 40}};
    for (auto& row : rows) {
        auto s = expand(*row.eq, row.T);
        Cusp inf(1, row.eq->level, row.eq->level);
        Rat ord = ligozat_order(*row.eq, inf);
        REQUIRE(ord.get_den() == 1);
        CHECK(s.valuation() == ord.get_num().get_si());
    }

    auto phi = expand(Phi(), 20);
    CHECK(phi.valuation() == 5);
    CHECK(phi.at(5) == 1);

    auto x = expand(Xfun(), 10);
    CHECK(x.valuation() == 1);
    CHECK(x.at(1) == 1);

    CHECK_THROWS_AS(expand(EtaQuotient(2, {{1, 1}, {2, -1}}), 10), non_integral_error);
}

TEST_CASE("radu lower bound for the first ladder element") {
    // b-series from Phi's f-exponents at M = 50; the f_5 f_10^2 prefactor is
    // already inside that series, so s is empty.
    RaduInstance inst(50, {{1, -1}, {2, -2}, {25, 1}, {50, 2}}, 5, 0, 10, {});
    // equivalent bookkeeping: b = a_3 coefficients (M = 2) with the prefactor
    // carried by s
    RaduInstance inst2(2, {{1, -1}, {2, -2}}, 5, 0, 10, {{5, 1}, {10, 2}});

    struct Row {
        Cusp cusp;
        Rat bound;
        long printed;  // ceiling
    } rows[] = {
        {Cusp(1, 10, 10), Rat(1), 1},
        {Cusp(1, 5, 10), Rat(4, 5), 1},
        {Cusp(1, 2, 10), Rat(-5), -5},
        {Cusp(0, 1, 10), Rat(-4), -4},
    };
    for (auto& row : rows) {
        Rat b = radu_lower_bound(inst, row.cusp);
        CHECK(b == row.bound);
        CHECK(radu_lower_bound(inst2, row.cusp) == row.bound);
        Int up;
        mpz_cdiv_q(up.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
        CHECK(up == row.printed);
    }

    CHECK_THROWS_AS(RaduInstance(50, {{3, 1}}, 5, 0, 10, {}), std::invalid_argument);
    CHECK_THROWS_AS(RaduInstance(50, {{1, 1}}, 5, 7, 10, {}), std::invalid_argument);
}

TEST_CASE("eta quotient text form") {
    auto eq = EtaQuotient::parse("50: 1^-1 2^-2 25^1 50^2");
    CHECK(eq.level == 50);
    CHECK(eq.exps == Phi().exps);
    CHECK(EtaQuotient::parse(eq.str()).exps == eq.exps);
    CHECK_THROWS_AS(EtaQuotient::parse("50 1^2"), std::invalid_argument);
    CHECK_THROWS_AS(EtaQuotient(50, {{3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(EtaQuotient(50, {{2, 0}}), std::invalid_argument);
}
