#pragma once

#include "qcong/partitions.hpp"
#include "qcong/qseries.hpp"

namespace qcong {

// One isolated-congruence verification: a_d(mn+t) = 0 (mod prime) for
// 0 <= n <= bound, the published Sturm bound for the congruence.
struct SturmJob {
    long d = 1;
    long m = 1;
    long t = 0;
    long prime = 2;
    long bound = 1;

    SturmJob(long d_, long m_, long t_, long prime_, long bound_);
};

struct SturmReport {
    SturmJob job;
    bool pass = false;
    long checked = 0;  // number of progression values checked
    std::optional<long> first_failure;
    Int witness;  // a_d value at the first failure
    std::string trust_note;
    std::string json() const;
};

// Checks the finite coefficient condition only; that the bound suffices is
// a property of the ambient space of modular forms and is taken as given
// (recorded in trust_note).
SturmReport verify_isolated(const SturmJob& job);
SturmReport verify_isolated(const SturmJob& job, const PartitionTable& table);

struct BuildFReport {
    int which = 1;
    long prime = 7;
    long window = 0;             // coefficients compared (exponents 1..window)
    bool exact_equal = false;    // U_d(F) == f_1^k * progression series over Z
    std::optional<long> first_exact_mismatch;
    bool congruent_mod_p = false;  // the same identity mod prime
    bool u_image_zero_mod_p = false;  // U_d(F) = 0 (mod prime) on the window
    std::string json() const;
};

// Builds F_1 = q^18 f_1^440 / f_2^4 (which = 1) or F_2 = q^85 f_1^2056 /
// f_2^8 (which = 2), leading exponent (sum delta r_delta)/24, applies
// U_49 resp. U_121, and compares against f_1^9 sum a_5(49n+31) q^{n+1}
// resp. f_1^17 sum a_9(121n+36) q^{n+1} -- exactly and mod the prime.
// prefactor_exp overrides the f_1 power for perturbation tests.
BuildFReport build_F_check(int which, long T = 0, long prefactor_exp = -1);

// Contract form: any exact inequality is a hard error.
void build_F_check_strict(int which, long T = 0);

}  // namespace qcong
