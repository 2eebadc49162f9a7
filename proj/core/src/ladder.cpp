#include "qcong/ladder.hpp"

#include <json.hpp>
#include <numeric>

#include "qcong/etaq.hpp"

namespace qcong {

namespace {

// q f_5 f_10^2 * (series) without changing the window start.
QSeries mul_prefactor_and_shift(const QSeries& u) {
    std::vector<Rat> out(u.coeffs());
    detail::mul_fr_rat(out, 5);
    detail::mul_fr_rat(out, 10);
    detail::mul_fr_rat(out, 10);
    return QSeries(u.min_exp() + 1, std::move(out));
}

}  // namespace

QSeries phi_series(long T) {
    if (T < 6) throw std::invalid_argument("phi_series: T must be >= 6");
    return expand(EtaQuotient(50, {{25, 1}, {50, 2}, {1, -1}, {2, -2}}), T);
}

QSeries apply_u(int i, const QSeries& f) {
    if (i != 0 && i != 1) throw std::invalid_argument("apply_u: i must be 0 or 1");
    if (i == 1) return atkin_u(f, 5);
    if (f.size() < 5)
        throw precision_error("apply_u: U^(0) needs at least 5 usable terms, have " +
                                  std::to_string(f.size()),
                              f.min_exp() + 5);
    std::vector<Rat> g(f.coeffs());
    detail::div_fr_rat(g, 1);
    detail::div_fr_rat(g, 2);
    detail::div_fr_rat(g, 2);
    QSeries u = atkin_u(QSeries(f.min_exp(), std::move(g)), 5);
    return mul_prefactor_and_shift(u);
}

QSeries apply_u0_literal(const QSeries& phi, const QSeries& f) {
    return atkin_u(mul(phi, f), 5);
}

long required_base_precision(long alpha, long T) {
    if (alpha < 1) return 1;
    long t = T;
    for (long k = alpha; k >= 2; --k) t = (k % 2 == 1) ? 5 * (t - 1) : 5 * t;
    return 5 * (t - 1);
}

std::vector<LadderState> build_chain(long alpha, long T, const QSeries& base) {
    if (alpha < 1) throw std::invalid_argument("build_chain: alpha must be >= 1");
    long need = required_base_precision(alpha, T);
    if (base.trunc() < need)
        throw precision_error("build_chain: base series too short for alpha=" +
                                  std::to_string(alpha) + ", T=" + std::to_string(T),
                              need);
    std::vector<LadderState> chain;
    // L_1 = U^(0)(1) = q f_5 f_10^2 * U_5(sum a_3(n) q^n)
    QSeries L = mul_prefactor_and_shift(atkin_u(base, 5));
    chain.push_back({1, L, L.trunc()});
    for (long k = 2; k <= alpha; ++k) {
        L = apply_u(k % 2 == 1 ? 0 : 1, L);
        chain.push_back({k, L, L.trunc()});
    }
    return chain;
}

LadderState build_L(long alpha, long T) {
    if (alpha == 0) return {0, QSeries::one(T), T};
    QSeries base = generating_series(3, required_base_precision(alpha, T));
    return build_chain(alpha, T, base).back();
}

Int gamma_offset(long alpha) {
    if (alpha < 1) throw std::invalid_argument("gamma: alpha must be >= 1");
    Int p = pow_int(Int(25), static_cast<unsigned long>(alpha - 1));
    return Int(20 + 19 * 25 * (p - 1) / 24);
}

Int psi(long alpha) {
    if (alpha < 1) throw std::invalid_argument("psi: alpha must be >= 1");
    Int p = pow5(static_cast<unsigned long>(alpha + 2));
    return p / 24 + 1 - (alpha % 2 == 0 ? 2 : 1);
}

QSeries extract_progression(const LadderState& state, const PartitionTable& oracle) {
    if (state.alpha < 2 || state.alpha % 2 != 0)
        throw std::invalid_argument("extract_progression: alpha must be even and >= 2");
    if (oracle.d != 3)
        throw std::invalid_argument("extract_progression: oracle must be an a_3 table");
    std::vector<Rat> g(state.series.coeffs());
    detail::div_fr_rat(g, 1);
    detail::div_fr_rat(g, 2);
    detail::div_fr_rat(g, 2);
    QSeries p(state.series.min_exp() - 1, std::move(g));

    long a = state.alpha / 2;
    Int step = pow5(static_cast<unsigned long>(2 * a));
    Int t = gamma_offset(a);
    for (long n = std::max(0L, p.min_exp()); n < p.trunc(); ++n) {
        Int idx = step * n + t;
        if (idx > oracle.max_n()) break;
        if (p.at(n) != Rat(oracle.values[idx.get_ui()]))
            throw series_error(
                "extract_progression: oracle mismatch at n = " + std::to_string(n) +
                " (falsifies the L_{2a} identity or signals a bug)");
    }
    for (long n = p.min_exp(); n < std::min(0L, p.trunc()); ++n)
        if (p.at(n) != 0)
            throw series_error("extract_progression: nonzero coefficient below q^0");
    return p;
}

FamilyReport check_family(long alpha, long n_max, const PartitionTable& table) {
    if (alpha < 1) throw std::invalid_argument("check_family: alpha must be >= 1");
    Int step = pow5(static_cast<unsigned long>(2 * alpha));
    Int g = gamma_offset(alpha);
    if (step.fits_slong_p() == 0)
        throw std::invalid_argument("check_family: alpha too large for index arithmetic");
    long m = step.get_si();
    long t = g.get_si();
    auto vals = progression_values(table, m, t, n_max + 1);
    std::vector<Rat> c(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) c[i] = Rat(vals[i]);
    long modulus = pow5(alpha).get_si();
    auto rep = congruent_zero(QSeries(0, std::move(c)), modulus, n_max);
    FamilyReport out;
    out.alpha = alpha;
    out.modulus = modulus;
    out.n_max = n_max;
    out.pass = rep.pass;
    out.first_failure = rep.first_failure;
    return out;
}

FamilyReport check_family(long alpha, long n_max) {
    Int top = pow5(static_cast<unsigned long>(2 * alpha)) * n_max + gamma_offset(alpha);
    if (top.fits_slong_p() == 0)
        throw std::invalid_argument("check_family: window too large");
    return check_family(alpha, n_max, table_from_series(3, top.get_si()));
}

std::string FamilyReport::json() const {
    nlohmann::json j{{"alpha", alpha},
                     {"modulus", modulus},
                     {"n_max", n_max},
                     {"pass", pass},
                     {"first_failure", nullptr}};
    if (first_failure) j["first_failure"] = *first_failure;
    return j.dump();
}

}  // namespace qcong
