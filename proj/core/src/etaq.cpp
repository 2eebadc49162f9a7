#include "qcong/etaq.hpp"

#include <numeric>
#include <sstream>

namespace qcong {

namespace {

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// a^{-1} mod m (m >= 1, gcd(a, m) = 1)
long inv_mod(long a, long m) {
    if (m == 1) return 0;
    long t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
    while (newr != 0) {
        long q = r / newr;
        std::tie(t, newt) = std::make_pair(newt, t - q * newt);
        std::tie(r, newr) = std::make_pair(newr, r - q * newr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    return ((t % m) + m) % m;
}

}  // namespace

EtaQuotient::EtaQuotient(long N, std::map<long, long> r)
    : level(N), exps(std::move(r)) {
    if (N < 1) throw std::invalid_argument("EtaQuotient: level must be >= 1");
    bool any = false;
    for (auto& [d, e] : exps) {
        if (d < 1 || level % d != 0)
            throw std::invalid_argument("EtaQuotient: delta " + std::to_string(d) +
                                        " does not divide level " + std::to_string(level));
        if (e != 0) any = true;
    }
    if (!any) throw std::invalid_argument("EtaQuotient: all exponents zero");
}

EtaQuotient EtaQuotient::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("EtaQuotient::parse: missing ':' in '" + text + "'");
    long N = std::stol(text.substr(0, colon));
    std::map<long, long> r;
    std::istringstream in(text.substr(colon + 1));
    std::string tok;
    while (in >> tok) {
        auto caret = tok.find('^');
        if (caret == std::string::npos)
            throw std::invalid_argument("EtaQuotient::parse: bad factor '" + tok + "'");
        long d = std::stol(tok.substr(0, caret));
        long e = std::stol(tok.substr(caret + 1));
        r[d] += e;
    }
    return EtaQuotient(N, std::move(r));
}

std::string EtaQuotient::str() const {
    std::ostringstream out;
    out << level << ":";
    for (auto& [d, e] : exps)
        if (e != 0) out << " " << d << "^" << e;
    return out.str();
}

long EtaQuotient::weighted_exp_sum() const {
    long s = 0;
    for (auto& [d, e] : exps) s += d * e;
    return s;
}

EtaProductSpec EtaQuotient::product_spec() const {
    EtaProductSpec spec;
    for (auto& [d, e] : exps)
        if (e != 0) spec.factors.emplace_back(d, e);
    return spec;
}

Cusp::Cusp(long a_, long c_, long N) : a(a_), c(c_), level(N) {
    if (N < 1 || c < 1 || N % c != 0)
        throw std::invalid_argument("Cusp: c must be a positive divisor of N");
    if (std::gcd(a, c) != 1 && !(a == 0 && c == 1))
        throw std::invalid_argument("Cusp: gcd(a, c) != 1");
}

std::string Cusp::str() const {
    if (c == level) return "inf";
    if (c == 1) return "0";
    return std::to_string(a) + "/" + std::to_string(c);
}

std::vector<Cusp> cusps_of(long N) {
    if (N < 1) throw std::invalid_argument("cusps_of: N must be >= 1");
    std::vector<Cusp> out;
    for (long c : divisors(N)) {
        long g = std::gcd(c, N / c);
        if (c == 1) {
            out.emplace_back(0, 1, N);
            continue;
        }
        for (long u = 0; u < g; ++u) {
            if (std::gcd(u, g) != 1 && !(g == 1 && u == 0)) continue;
            // least a = u (mod g) with gcd(a, c) = 1
            long a = (u == 0 && g == 1) ? 1 : u;
            while (a == 0 || std::gcd(a, c) != 1) a += g;
            out.emplace_back(a, c, N);
        }
    }
    return out;
}

bool cusps_equivalent(long N, long a1, long c1, long a2, long c2) {
    if (std::gcd(a1, c1) != 1 || std::gcd(a2, c2) != 1)
        throw std::invalid_argument("cusps_equivalent: non-primitive cusp");
    long g = std::gcd(c1 * c2, N);
    long s1 = inv_mod(a1, c1);
    long s2 = inv_mod(a2, c2);
    return ((s1 * c2 - s2 * c1) % g + g) % g == 0;
}

NewmanReport newman_check(const EtaQuotient& eq) {
    NewmanReport rep;
    long N = eq.level;
    long es = 0, ws = 0, dws = 0;
    Rat prod(1);
    for (auto& [d, r] : eq.exps) {
        es += r;
        ws += d * r;
        dws += (N / d) * r;
        Rat f(d);
        for (long i = 0; i < std::abs(r); ++i) prod *= (r > 0 ? f : 1 / f);
    }
    rep.exp_sum = es;
    rep.weighted_sum = ws;
    rep.dual_weighted_sum = dws;
    rep.exp_sum_zero = (es == 0);
    rep.weighted_sum_24 = (ws % 24 == 0);
    rep.dual_weighted_24 = (dws % 24 == 0);
    rep.square_product = mpz_perfect_square_p(prod.get_num().get_mpz_t()) &&
                         mpz_perfect_square_p(prod.get_den().get_mpz_t());
    return rep;
}

Rat ligozat_order(const EtaQuotient& eq, const Cusp& cusp) {
    if (cusp.level != eq.level)
        throw std::invalid_argument("ligozat_order: cusp level != eta-quotient level");
    long N = eq.level, c = cusp.c;
    Rat total(0);
    for (auto& [d, r] : eq.exps) {
        long g = std::gcd(c, d);
        total += Rat(g * g * r) / Rat(std::gcd(c, N / c) * c * d);
    }
    return Rat(N) / Rat(24) * total;
}

RaduInstance::RaduInstance(long M_, std::map<long, long> r_, long m_, long t_,
                           long N_, std::map<long, long> s_)
    : M(M_), r(std::move(r_)), m(m_), t(t_), N(N_), s(std::move(s_)) {
    if (M < 1 || m < 1 || N < 1)
        throw std::invalid_argument("RaduInstance: M, m, N must be >= 1");
    if (t < 0 || t >= m) throw std::invalid_argument("RaduInstance: need 0 <= t < m");
    for (auto& [d, e] : r) {
        (void)e;
        if (d < 1 || M % d != 0)
            throw std::invalid_argument("RaduInstance: delta does not divide M");
    }
    for (auto& [l, e] : s) {
        (void)e;
        if (l < 1 || N % l != 0)
            throw std::invalid_argument("RaduInstance: lambda does not divide N");
    }
}

Rat radu_lower_bound(const RaduInstance& inst, const Cusp& cusp) {
    if (cusp.level != inst.N)
        throw std::invalid_argument("radu_lower_bound: cusp level != instance N");
    long a = cusp.a, c = cusp.c, N = inst.N, m = inst.m;
    long kappa = std::gcd(m * m - 1, 24L);
    Rat best;
    bool first = true;
    for (long l = 0; l < m; ++l) {
        Rat tot(0);
        for (auto& [d, rd] : inst.r) {
            long g = std::gcd(d * (a + l * c * kappa), m * c);
            tot += Rat(rd) * Rat(g * g) / Rat(d * m);
        }
        if (first || tot < best) {
            best = tot;
            first = false;
        }
    }
    Rat prefac = Rat(N) / Rat(24 * std::gcd(c * c, N));
    Rat stot(0);
    for (auto& [lam, sl] : inst.s) {
        long g = std::gcd(lam, c);
        stot += Rat(sl * g * g) / Rat(lam);
    }
    return prefac * (best + stot);
}

QSeries expand(const EtaQuotient& eq, long T) {
    long ws = eq.weighted_exp_sum();
    if (ws % 24 != 0)
        throw non_integral_error("expand: non-integral q-power (sum delta r = " +
                                 std::to_string(ws) + ", not divisible by 24)");
    long lead = ws / 24;
    long width = T - lead;
    if (width < 1)
        throw precision_error("expand: T too small for leading exponent", lead + 1);
    return eta_product(eq.product_spec(), width).shifted(lead);
}

}  // namespace qcong
