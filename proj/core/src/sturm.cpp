#include "qcong/sturm.hpp"

#include <json.hpp>

namespace qcong {

SturmJob::SturmJob(long d_, long m_, long t_, long prime_, long bound_)
    : d(d_), m(m_), t(t_), prime(prime_), bound(bound_) {
    if (d < 1 || m < 1 || prime < 2) throw std::invalid_argument("SturmJob: bad parameters");
    if (t < 0 || t >= m) throw std::invalid_argument("SturmJob: need 0 <= t < m");
    if (bound < 1) throw std::invalid_argument("SturmJob: bound must be >= 1");
}

SturmReport verify_isolated(const SturmJob& job, const PartitionTable& table) {
    if (table.d != job.d)
        throw std::invalid_argument("verify_isolated: table is for the wrong d");
    auto vals = progression_values(table, job.m, job.t, job.bound + 1);
    SturmReport rep{job};
    rep.pass = true;
    rep.checked = static_cast<long>(vals.size());
    for (long n = 0; n < rep.checked; ++n) {
        if (vals[n] % job.prime != 0) {
            rep.pass = false;
            rep.first_failure = n;
            rep.witness = vals[n];
            break;
        }
    }
    rep.trust_note =
        "finite coefficient check only; sufficiency of the bound rests on the "
        "ambient modular-form space and is taken as given";
    return rep;
}

SturmReport verify_isolated(const SturmJob& job) {
    return verify_isolated(job, table_from_series(job.d, job.m * job.bound + job.t));
}

BuildFReport build_F_check(int which, long T, long prefactor_exp) {
    if (which != 1 && which != 2)
        throw std::invalid_argument("build_F_check: which must be 1 or 2");
    const long d_op = which == 1 ? 49 : 121;
    const long prime = which == 1 ? 7 : 11;
    const long f1_exp = which == 1 ? 440 : 2056;
    const long f2_exp = which == 1 ? -4 : -8;
    const long pd = which == 1 ? 5 : 9;
    const long pt = which == 1 ? 31 : 36;
    const long pf = prefactor_exp >= 0 ? prefactor_exp : (which == 1 ? 9 : 17);
    const long lead = (f1_exp + 2 * f2_exp) / 24;  // 18 resp. 85

    long window = which == 1 ? 110 : 257;
    if (T > 0) window = std::max(2L, T / d_op);

    QSeries prod = eta_product({{1, f1_exp}, {2, f2_exp}}, d_op * window + 1 - lead);
    QSeries F = prod.shifted(lead);
    QSeries U = atkin_u(F, d_op);

    PartitionTable table = table_from_series(pd, d_op * (window - 1) + pt);
    auto vals = progression_values(table, d_op, pt, window);
    std::vector<Rat> pv(window + 1);
    for (long n = 0; n < window; ++n) pv[n + 1] = Rat(vals[n]);
    QSeries rhs = mul(eta_product({{1, pf}}, window + 1), QSeries(0, std::move(pv)));

    BuildFReport rep;
    rep.which = which;
    rep.prime = prime;
    rep.window = window;
    rep.exact_equal = true;
    for (long e = 0; e <= window; ++e) {
        if (U.coeff_or_zero(e) != rhs.coeff_or_zero(e)) {
            rep.exact_equal = false;
            rep.first_exact_mismatch = e;
            break;
        }
    }
    rep.congruent_mod_p = congruent_zero(sub(U, rhs).truncated(window + 1), prime, window).pass;
    rep.u_image_zero_mod_p = congruent_zero(U.truncated(window + 1), prime, window).pass;
    return rep;
}

void build_F_check_strict(int which, long T) {
    auto rep = build_F_check(which, T);
    if (!rep.exact_equal)
        throw series_error("build_F_check: exact identity fails at q^" +
                           std::to_string(rep.first_exact_mismatch.value_or(-1)) +
                           " (the U-image equals the progression series only mod " +
                           std::to_string(rep.prime) + ")");
}

std::string SturmReport::json() const {
    nlohmann::json j{{"job",
                      {{"d", job.d},
                       {"m", job.m},
                       {"t", job.t},
                       {"prime", job.prime},
                       {"bound", job.bound}}},
                     {"bound", job.bound},
                     {"pass", pass},
                     {"checked", checked},
                     {"trust_note", trust_note},
                     {"first_failure", nullptr}};
    if (first_failure) {
        j["first_failure"] = *first_failure;
        j["witness"] = witness.get_str();
    }
    return j.dump();
}

std::string BuildFReport::json() const {
    nlohmann::json j{{"which", which},
                     {"prime", prime},
                     {"window", window},
                     {"exact_equal", exact_equal},
                     {"congruent_mod_p", congruent_mod_p},
                     {"u_image_zero_mod_p", u_image_zero_mod_p},
                     {"first_exact_mismatch", nullptr}};
    if (first_exact_mismatch) j["first_exact_mismatch"] = *first_exact_mismatch;
    return j.dump();
}

}  // namespace qcong
