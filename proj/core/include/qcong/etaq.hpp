#pragma once

#include <map>
#include <vector>

#include "qcong/qseries.hpp"

namespace qcong {

// Eta-quotient prod_{delta | N} eta(delta tau)^{r_delta} at level N.
struct EtaQuotient {
    long level = 1;
    std::map<long, long> exps;  // delta -> r_delta, delta | level

    EtaQuotient(long N, std::map<long, long> r);

    // Compact text form "50: 1^-1 2^-2 25^1 50^2".
    static EtaQuotient parse(const std::string& text);
    std::string str() const;

    // sum_delta delta * r_delta (24 times the leading q-exponent).
    long weighted_exp_sum() const;
    EtaProductSpec product_spec() const;
};

// Canonical representative a/c of a cusp of Gamma0(N): c | N, gcd(a, c) = 1,
// a the least nonnegative value in its class mod gcd(c, N/c) that is coprime
// to c. Infinity is (1, N); zero is (0, 1).
struct Cusp {
    long a = 1;
    long c = 1;
    long level = 1;

    Cusp(long a_, long c_, long N);
    std::string str() const;  // "a/c", with "inf" and "0" special-cased
    bool operator==(const Cusp&) const = default;
};

// One representative per Gamma0(N)-orbit; count = sum_{c|N} phi(gcd(c, N/c)).
std::vector<Cusp> cusps_of(long N);

// Gamma0(N)-equivalence of two cusps a1/c1, a2/c2 (gcd(a_i, c_i) = 1):
// s_i * c_j criterion with a_i s_i = 1 (mod c_i).
bool cusps_equivalent(long N, long a1, long c1, long a2, long c2);

struct NewmanReport {
    bool exp_sum_zero = false;       // sum r_delta = 0
    bool weighted_sum_24 = false;    // sum delta r_delta = 0 (mod 24)
    bool dual_weighted_24 = false;   // sum (N/delta) r_delta = 0 (mod 24)
    bool square_product = false;     // prod delta^{r_delta} a rational square
    long exp_sum = 0;
    long weighted_sum = 0;
    long dual_weighted_sum = 0;
    bool all() const {
        return exp_sum_zero && weighted_sum_24 && dual_weighted_24 && square_product;
    }
};

// Newman's modularity criterion, all four conditions reported.
NewmanReport newman_check(const EtaQuotient& eq);

// Ligozat's order of vanishing at a cusp of Gamma0(N):
// (N/24) * sum_delta gcd(c,delta)^2 r_delta / (gcd(c, N/c) * c * delta).
Rat ligozat_order(const EtaQuotient& eq, const Cusp& cusp);

// Input to Radu's order lower bound: g is an eta-quotient over
// Gamma0(N) times the progression series sum b(mn+t) q^n, where the b(n) are
// the coefficients of prod_{delta | M} f_delta^{r_delta}.
struct RaduInstance {
    long M = 1;
    std::map<long, long> r;  // delta -> r_delta, delta | M
    long m = 1;
    long t = 0;  // 0 <= t < m
    long N = 1;
    std::map<long, long> s;  // lambda -> s_lambda, lambda | N

    RaduInstance(long M_, std::map<long, long> r_, long m_, long t_, long N_,
                 std::map<long, long> s_);
};

// Exact value of the minimum-over-l lower bound; the order itself is an
// integer, so ord >= ceil(value).
Rat radu_lower_bound(const RaduInstance& inst, const Cusp& cusp);

// q-expansion q^{(sum delta r_delta)/24} * prod f_delta^{r_delta} to O(q^T).
// Requires 24 | sum delta r_delta (else non_integral_error).
QSeries expand(const EtaQuotient& eq, long T);

}  // namespace qcong
