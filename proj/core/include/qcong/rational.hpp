#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qcong {

// All coefficient arithmetic in this library is exact. Integers are GMP
// bignums and rationals are always kept canonical (gcd(num,den)=1, den>0).
using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow5(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 5, e);
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool divisible(const Int& a, const Int& m) {
    return mpz_divisible_p(a.get_mpz_t(), m.get_mpz_t()) != 0;
}

// p-adic valuation of a nonzero integer.
inline long padic_val(const Int& n, unsigned long p) {
    if (n == 0) throw std::invalid_argument("padic_val: zero argument");
    Int tmp;
    return static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t()));
}

// Extended to nonzero rationals (may be negative).
inline long padic_val(const Rat& q, unsigned long p) {
    if (q == 0) throw std::invalid_argument("padic_val: zero argument");
    long v = q.get_num() == 0 ? 0 : padic_val(Int(q.get_num()), p);
    if (q.get_den() != 1) v -= padic_val(Int(q.get_den()), p);
    return v;
}

// Residue in [0, m) of an integer-valued rational.
inline long mod_long(const Int& a, long m) {
    Int r = ((a % m) + m) % m;
    return r.get_si();
}

// "num" for integers, "num/den" otherwise; always decimal, never floats.
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace qcong
