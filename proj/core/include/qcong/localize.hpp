#pragma once

#include <array>
#include <map>
#include <tuple>

#include "qcong/qseries.hpp"

namespace qcong {

// Rational polynomial P(x)/(1+5x)^denom_exp with exact rational numerator
// coefficients; the localized representation of L_alpha and of U^(i) images.
struct XPoly {
    long denom_exp = 0;
    std::map<long, Rat> num;  // m -> p_m, canonical form drops zeros

    XPoly() = default;
    XPoly(long de, std::map<long, Rat> coeffs);

    bool is_zero() const { return num.empty(); }
    long degree() const;  // requires !is_zero()
    long low() const;     // least numerator index
    Rat coeff(long m) const;

    // Same numerator scaled onto a larger denominator exponent.
    XPoly with_denom(long e) const;
    // Cancels common (1+5x) factors out of numerator and denominator.
    XPoly reduced() const;
    // Equality as rational functions (cross-multiplied compare).
    bool same_function(const XPoly& o) const;

    std::string json() const;
};

XPoly operator+(const XPoly& a, const XPoly& b);
XPoly operator*(const XPoly& a, const XPoly& b);
XPoly scale(const XPoly& a, const Rat& c);

// x = q f_2 f_10^3 / (f_1^3 f_5) and z = f_2^5 f_5 / (f_1^5 f_10) to O(q^T);
// asserts the Hauptmodul identity z = 1 + 5x on the window.
std::pair<QSeries, QSeries> reference_series(long T);

struct not_representable_error : series_error {
    long exponent;  // leading exponent of the residual
    not_representable_error(const std::string& what, long e)
        : series_error(what), exponent(e) {}
};

// Writes G = P(x)/(1+5x)^denom_exp by greedy peeling: x = q + O(q^2), so
// after multiplying by (1+5x)^denom_exp the coefficient of q^m, lower terms
// subtracted, is p_m. The residual must vanish identically on
// (deg_bound, deg_bound + margin].
XPoly to_xpoly(const QSeries& G, long denom_exp, long deg_bound, long margin);

// Evaluation back to a q-series (round-trip direction).
QSeries from_xpoly(const XPoly& p, long T);

// Modular-equation coefficient tables: a_j polynomials in x and b_k
// polynomials in z, both of degree 5 with integer coefficients.
struct ModEqTables {
    std::array<std::array<long, 6>, 5> a;  // a[j][deg]
    std::array<std::array<long, 6>, 6> b;  // b[k][deg]; b5 = 1, b0 = -z^5

    // The published tables with the two established reading corrections
    // (a_1 closed after 10000x^5, b_3's z^2 coefficient -35).
    static const ModEqTables& standard();
};

// Left side of the degree-5 modular equation satisfied by x (resp. z) with
// the a_j/b_k evaluated at the 5tau-substituted reference series; identically
// zero up to truncation when the tables are right.
QSeries modeq_residual(char which, long T);
QSeries modeq_residual(const ModEqTables& tables, char which, long T);

// Solves the single-unknown linear condition for b_3's z^2 coefficient from
// the z-equation residual; -35 is the value that closes the equation.
Rat fit_b3_z2_coefficient(long T);

// Valuation floors of the V-spaces and the denominator laws of the discrete
// arrays (piecewise floor formulas).
long theta0(long m);
long theta1(long m);
long pi0(long m, long r);
long pi1(long m, long r);

// Computes U^(i)(x^m / (1+5x)^n) as an XPoly two independent ways:
//   direct: q-series route through atkin_u and extraction,
//   recur:  modular-equation algebra over the five base identities,
// with shared caches. Denominator exponents are 5n+5 (i=0) and 5n (i=1).
class UMonomialEngine {
public:
    UMonomialEngine() = default;

    XPoly direct(int i, long m, long n);
    XPoly recur(int i, long m, long n);
    // U^(i)(z^j) by the z-power recurrence (any integer j; j < 0 descends
    // through the modular equation, j > 0 expands binomially).
    XPoly recur_zpow(int i, long j);

    static long denom_exp_for(int i, long n) { return i == 0 ? 5 * n + 5 : 5 * n; }
    static long support_low_bound(int i, long m) {
        long num = i == 0 ? m + 4 : m;
        return num >= 0 ? (num + 4) / 5 : -((-num) / 5);
    }

private:
    void ensure_series(long T);
    const QSeries& xpow_series(long m);
    const QSeries& inv15_pow_series(long n);
    const QSeries& zpow_series(long e);

    long series_T_ = 0;
    std::vector<QSeries> xpow_;    // x^m
    std::vector<QSeries> inv15_;   // (1+5x)^-n
    std::map<long, QSeries> zpow_; // (1+5x)^e
    std::map<std::tuple<int, long, long>, XPoly> direct_memo_;
    std::map<std::pair<int, long>, XPoly> upow_x_;  // U^(i)(x^m)
    std::map<std::pair<int, long>, XPoly> upow_z_;  // U^(i)(z^j)

    const XPoly& u_xpow(int i, long m);
    const XPoly& u_zpow(int i, long j);
};

// Discrete array h_i behind the U-image expansions: h_i(m,n,r) =
// (numerator coefficient at x^r) / 5^{pi_i(m,r)}, integer entries.
struct HTable {
    int i = 0;
    std::map<std::tuple<long, long, long>, Int> entries;

    Int at(long m, long n, long r) const;  // 0 when absent
    std::string csv() const;               // header i,m,n,r,h
};

// Populates h_i over 0 <= m <= m_max, 0 <= n <= n_max; a non-integer entry
// falsifies the discrete-array theorem and throws.
HTable h_table(UMonomialEngine& eng, int i, long m_max, long n_max);

struct VMembershipReport {
    bool member = false;
    bool denom_ok = false;
    bool valuations_ok = false;
    bool congruences_ok = true;          // only constrained for i = 1
    std::array<long, 2> residues{0, 0};  // the two mod-5 sums (i = 1)
    std::map<long, Rat> s;               // recovered s(m) = p_m / 5^theta_i(m)
    std::string json() const;
};

// Membership of p in V_n^(0) (i=0), or V_n^(1) (i=1, the two extra mod-5
// congruences included). The full valuation ledger is returned either way.
VMembershipReport v_membership(const XPoly& p, int i, long n);

// Integer/rational linear combination of the symbols s(1)..s(8).
struct LinearForm {
    std::map<long, Rat> coeffs;
    bool integral() const;
    std::string str() const;
};

LinearForm operator+(const LinearForm& a, const LinearForm& b);
LinearForm scale(const LinearForm& a, const Rat& c);

// t-hat(w): sum over 1 <= r <= 5w-4, 1 <= m <= 5r restricted to pairs where
// theta1(m)+pi1(m,r)+pi0(r,w)-theta1(w)-1 < 0, of
// s(m) h_1(m,0,r) h_0(r,0,w) 5^{that deficiency}.
LinearForm t_hat(long w, const HTable& h1, const HTable& h0);

struct IdealReduction {
    bool member = false;
    std::map<long, Int> eliminated;  // coefficients after removing s(5), s(8)
    std::map<long, long> residues;   // mod 5
    std::string json() const;
};

// Membership in <5, s(1)+s(2)+s(3)+2s(4)+s(5), 4s(4)+s(6)+s(7)+s(8)>:
// eliminate s(5) and s(8) with the two generators, then reduce mod 5.
IdealReduction ideal_membership(const LinearForm& form);

struct Main2AlphaResult {
    long alpha = 0;
    Int psi_value;
    long degree = 0;
    bool integral = false;
    bool v_member = false;
    VMembershipReport membership;
};

struct Main2Report {
    bool pass = false;
    std::vector<Main2AlphaResult> per_alpha;
    std::string json() const;
};

// Desk verification of the main divisibility theorem: for each alpha <=
// alpha_max, (1+5x)^{psi(alpha)} L_alpha / 5^{floor(alpha/2)} has integer
// coefficients and lies in the V-space of the right family (i = alpha mod 2).
Main2Report verify_main2(long alpha_max);

}  // namespace qcong
