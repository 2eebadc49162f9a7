#pragma once

#include <vector>

#include "qcong/partitions.hpp"
#include "qcong/qseries.hpp"

namespace qcong {

// The alternating U-operator sequence over Gamma0(10):
//   L_0 = 1, L_{alpha+1} = U^(0)(L_alpha) for alpha even,
//                          U^(1)(L_alpha) for alpha odd,
// where U^(0)(f) = U_5(Phi f) and U^(1)(f) = U_5(f).
struct LadderState {
    long alpha = 0;
    QSeries series;
    long precision = 0;  // = series.trunc()
};

// Phi = q^5 f_25 f_50^2 / (f_1 f_2^2) to O(q^T).
QSeries phi_series(long T);

// One U step. Exact; the known window shrinks by a factor 5 per application.
// i = 0 uses the product form U_5(Phi f) = q f_5 f_10^2 U_5(f / (f_1 f_2^2)),
// which avoids expanding Phi to 5x the precision of f.
QSeries apply_u(int i, const QSeries& f);
// Literal U_5(Phi f) with phi supplied by the caller; used to cross-check the
// product form.
QSeries apply_u0_literal(const QSeries& phi, const QSeries& f);

// Base-series precision that build_L(alpha, T) needs (trunc of the a_3
// generating series that seeds the chain).
long required_base_precision(long alpha, long T);

// L_1..L_alpha, the last one with trunc >= T. base is the a_3 generating
// series 1/(f_1 f_2^2) (built internally when omitted).
std::vector<LadderState> build_chain(long alpha, long T, const QSeries& base);
LadderState build_L(long alpha, long T);

// gamma_alpha = 20 + 19*25*(25^{alpha-1} - 1)/24 (the offset of the
// congruence-family progression); psi(alpha) = floor(5^{alpha+2}/24) + 1 - gcd(alpha, 2).
Int gamma_offset(long alpha);
Int psi(long alpha);

// L_{2a} / (q f_1 f_2^2) = sum a_3(5^{2a} n + gamma_a) q^n; the result is
// matched against oracle values on the overlap window (mismatch = hard
// failure, it signals an implementation bug).
QSeries extract_progression(const LadderState& state, const PartitionTable& oracle);

struct FamilyReport {
    long alpha = 0;
    long modulus = 0;
    long n_max = 0;
    bool pass = false;
    std::optional<long> first_failure;
    std::string json() const;
};

// Congruence-family witness: a_3(5^{2 alpha} n + gamma_alpha) = 0 (mod 5^alpha) for
// 0 <= n <= n_max, checked on the generating series.
FamilyReport check_family(long alpha, long n_max);
FamilyReport check_family(long alpha, long n_max, const PartitionTable& table);

}  // namespace qcong
