#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/rational.hpp"

namespace qcong {

struct series_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct non_invertible_error : series_error {
    using series_error::series_error;
};
struct non_integral_error : series_error {
    using series_error::series_error;
};
// Thrown when an operation cannot deliver the requested window; carries the
// input precision that would have sufficed.
struct precision_error : series_error {
    long required;
    precision_error(const std::string& what, long required_)
        : series_error(what), required(required_) {}
};

// Truncated Laurent series in q with exact rational coefficients, the carrier
// for every expansion in the library. Coefficients are defined exactly on the
// window [min_exp, trunc); nothing is known at or beyond trunc. Immutable
// after construction; operations below are pure functions.
class QSeries {
public:
    QSeries(long min_exp, std::vector<Rat> coeffs);

    static QSeries zero(long min_exp, long trunc);
    // The constant 1 on [0, trunc).
    static QSeries one(long trunc);
    static QSeries monomial(const Rat& c, long exp, long trunc);

    long min_exp() const { return min_exp_; }
    long trunc() const { return min_exp_ + static_cast<long>(c_.size()); }
    long size() const { return static_cast<long>(c_.size()); }

    // Coefficient of q^e; e must lie inside [min_exp, trunc).
    const Rat& at(long e) const;
    // Coefficient of q^e, zero-extended outside the window (still never at or
    // beyond trunc).
    Rat coeff_or_zero(long e) const;

    // Least exponent with a nonzero coefficient; nullopt for the zero series.
    std::optional<long> valuation() const;
    bool is_zero() const { return !valuation().has_value(); }
    bool integral() const;  // all denominators 1

    // Shrinks the window (new_trunc <= trunc).
    QSeries truncated(long new_trunc) const;
    // Multiplication by q^k.
    QSeries shifted(long k) const;

    bool operator==(const QSeries& o) const = default;

    std::string json() const;
    static QSeries from_json(const std::string& text);

    const std::vector<Rat>& coeffs() const { return c_; }

private:
    long min_exp_;
    std::vector<Rat> c_;  // c_[i] is the coefficient of q^(min_exp_ + i)
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const Rat& c);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(const Rat& c, const QSeries& a) { return scale(a, c); }

// Multiplicative inverse to within truncation: result.min_exp = -v where v is
// the valuation of a, and a * invert(a) = 1 + O(q^(a.trunc - v)).
QSeries invert(const QSeries& a);

// k-fold product by binary powering; negative k goes through invert.
QSeries pow(const QSeries& a, long k);

// q -> q^d substitution: exponent n maps to d*n.
QSeries substitute_power(const QSeries& a, long d);

// Atkin's U_d: sum a(n) q^n -> sum a(dn) q^n.
QSeries atkin_u(const QSeries& a, long d);

// Product of the infinite products f_r = prod_{n>=1} (1 - q^{rn}).
struct EtaProductSpec {
    // (r, e) pairs meaning f_r^e; r >= 1.
    std::vector<std::pair<long, long>> factors;

    EtaProductSpec() = default;
    EtaProductSpec(std::initializer_list<std::pair<long, long>> fs);
};

// Exact expansion of prod f_r^e to O(q^T); negative exponents are exact
// inverses. Large |e| is computed with the logarithmic-derivative recurrence
// for f_r^e instead of repeated multiplication.
QSeries eta_product(const EtaProductSpec& spec, long T);

struct CongruenceReport {
    bool pass = false;
    long modulus = 0;
    long checked_from = 0;
    long checked_to = 0;  // inclusive
    std::optional<long> first_failure;
    Int residue;  // residue at first_failure when !pass
};

// True iff every coefficient of a on [min_exp, n_max] is divisible by M.
// The window must be integral (else non_integral_error) and known
// (n_max < trunc, else precision_error).
CongruenceReport congruent_zero(const QSeries& a, long M, long n_max);

namespace detail {

// Exponent/sign pairs of f_r - 1 (Euler's pentagonal expansion), exponents
// strictly below T, ascending.
std::vector<std::pair<long, int>> pentagonal_terms(long r, long T);

// In-place S *= f_r and S /= f_r over a dense coefficient window starting at
// exponent 0. The rational versions take a numerator-only fast path when
// every denominator is 1.
void mul_fr_int(std::vector<Int>& s, long r);
void div_fr_int(std::vector<Int>& s, long r);
void mul_fr_rat(std::vector<Rat>& s, long r);
void div_fr_rat(std::vector<Rat>& s, long r);

// f_r^e by the recurrence n*h(n) = sum_j sign(j) * ((e+1)*j - n) * h(n-j)
// over the pentagonal support of f_r.
std::vector<Int> pow_fr_int(long r, long e, long T);

}  // namespace detail

}  // namespace qcong
