#include "qcong/localize.hpp"

#include <json.hpp>

#include "qcong/etaq.hpp"
#include "qcong/ladder.hpp"

namespace qcong {

namespace {

using PolyMap = std::map<long, Rat>;

void add_into(PolyMap& dst, const PolyMap& src, const Rat& c) {
    for (auto& [k, v] : src) {
        Rat t = v * c;
        if (t == 0) continue;
        auto it = dst.find(k);
        if (it == dst.end()) {
            dst.emplace(k, std::move(t));
        } else {
            it->second += t;
            if (it->second == 0) dst.erase(it);
        }
    }
}

PolyMap mul_poly(const PolyMap& a, const PolyMap& b) {
    PolyMap out;
    for (auto& [i, av] : a)
        for (auto& [j, bv] : b) {
            Rat t = av * bv;
            if (t == 0) continue;
            auto it = out.find(i + j);
            if (it == out.end()) {
                out.emplace(i + j, std::move(t));
            } else {
                it->second += t;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

// (1+5x)^e as a polynomial map, e >= 0.
PolyMap binom_pow(long e) {
    PolyMap out;
    for (long k = 0; k <= e; ++k) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(e),
                     static_cast<unsigned long>(k));
        out[k] = Rat(b * pow5(static_cast<unsigned long>(k)));
    }
    return out;
}

// Synthetic division of P by (1+5x); nullopt when not divisible.
std::optional<PolyMap> divide_1p5x(const PolyMap& p) {
    if (p.empty()) return PolyMap{};
    long d = p.rbegin()->first;
    PolyMap q;
    PolyMap rem = p;
    for (long k = d - 1; k >= -1; --k) {
        auto it = rem.find(k + 1);
        Rat c = (it == rem.end()) ? Rat(0) : it->second;
        if (k < 0) {
            if (c != 0) return std::nullopt;
            break;
        }
        if (c != 0) {
            Rat qk = c / 5;
            q[k] = qk;
            rem.erase(k + 1);
            auto lo = rem.find(k);
            if (lo == rem.end()) {
                rem.emplace(k, -qk);
            } else {
                lo->second -= qk;
                if (lo->second == 0) rem.erase(lo);
            }
        }
    }
    return q;
}

QSeries one_plus_5x(const QSeries& x) {
    return add(QSeries::one(x.trunc()), scale(x, Rat(5)));
}

QSeries x_reference(long T) {
    return expand(EtaQuotient(10, {{2, 1}, {10, 3}, {1, -3}, {5, -1}}), T);
}

QSeries z_reference(long T) {
    return expand(EtaQuotient(10, {{2, 5}, {5, 1}, {1, -5}, {10, -1}}), T);
}

long floordiv(long a, long b) {  // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

Rat pow5_rat(long e) {
    if (e >= 0) return Rat(pow5(static_cast<unsigned long>(e)));
    return Rat(1) / Rat(pow5(static_cast<unsigned long>(-e)));
}

}  // namespace

XPoly::XPoly(long de, std::map<long, Rat> coeffs) : denom_exp(de) {
    if (de < 0) throw std::invalid_argument("XPoly: negative denominator exponent");
    for (auto& [k, v] : coeffs)
        if (v != 0) num.emplace(k, v);
}

long XPoly::degree() const {
    if (num.empty()) throw std::logic_error("XPoly::degree of zero polynomial");
    return num.rbegin()->first;
}

long XPoly::low() const {
    if (num.empty()) throw std::logic_error("XPoly::low of zero polynomial");
    return num.begin()->first;
}

Rat XPoly::coeff(long m) const {
    auto it = num.find(m);
    return it == num.end() ? Rat(0) : it->second;
}

XPoly XPoly::with_denom(long e) const {
    if (e < denom_exp)
        throw std::invalid_argument("XPoly::with_denom: cannot lower exponent");
    XPoly out;
    out.denom_exp = e;
    out.num = mul_poly(num, binom_pow(e - denom_exp));
    return out;
}

XPoly XPoly::reduced() const {
    XPoly out = *this;
    while (out.denom_exp > 0) {
        auto q = divide_1p5x(out.num);
        if (!q) break;
        out.num = std::move(*q);
        --out.denom_exp;
    }
    return out;
}

bool XPoly::same_function(const XPoly& o) const {
    long e = std::max(denom_exp, o.denom_exp);
    return mul_poly(num, binom_pow(e - denom_exp)) ==
           mul_poly(o.num, binom_pow(e - o.denom_exp));
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    long e = std::max(a.denom_exp, b.denom_exp);
    XPoly out;
    out.denom_exp = e;
    out.num = mul_poly(a.num, binom_pow(e - a.denom_exp));
    add_into(out.num, mul_poly(b.num, binom_pow(e - b.denom_exp)), Rat(1));
    return out;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly out;
    out.denom_exp = a.denom_exp + b.denom_exp;
    out.num = mul_poly(a.num, b.num);
    return out;
}

XPoly scale(const XPoly& a, const Rat& c) {
    XPoly out;
    out.denom_exp = a.denom_exp;
    if (c != 0)
        for (auto& [k, v] : a.num) out.num[k] = v * c;
    return out;
}

std::string XPoly::json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto& [m, v] : num) coeffs.push_back({m, rat_str(v)});
    return nlohmann::json{{"denom_exp", denom_exp}, {"coeffs", coeffs}}.dump();
}

std::pair<QSeries, QSeries> reference_series(long T) {
    if (T < 2) throw std::invalid_argument("reference_series: T must be >= 2");
    QSeries x = x_reference(T);
    QSeries z = z_reference(T);
    if (z.at(0) != 1) throw series_error("reference_series: z(0) != 1");
    for (long e = 1; e < T; ++e)
        if (z.at(e) != 5 * x.at(e))
            throw series_error("reference_series: z = 1 + 5x fails at q^" +
                               std::to_string(e));
    if (x.at(1) != 1) throw series_error("reference_series: x != q + O(q^2)");
    return {std::move(x), std::move(z)};
}

namespace {

// Core of to_xpoly against caller-provided x-powers. xpow_at(m) must return
// x^m with trunc > deg_bound + margin. Subtractions run on a dense mutable
// window to avoid per-step series copies.
template <typename XPowAt>
XPoly extract_xpoly(const QSeries& G, long denom_exp, long deg_bound, long margin,
                    XPowAt&& xpow_at, const QSeries& zpow_de) {
    long window = deg_bound + margin;
    if (G.trunc() <= window)
        throw precision_error("to_xpoly: series precision below deg_bound + margin",
                              window + 1);
    QSeries R0 = mul(G, zpow_de);
    if (R0.min_exp() < 0) {
        for (long e = R0.min_exp(); e < 0; ++e)
            if (R0.at(e) != 0)
                throw not_representable_error(
                    "to_xpoly: negative q-valuation (not a polynomial in x)", e);
    }
    std::vector<Rat> res(window + 1);
    for (long e = std::max(0L, R0.min_exp()); e <= window; ++e) res[e] = R0.at(e);
    std::map<long, Rat> coeffs;
    for (long m = 0; m <= deg_bound; ++m) {
        Rat p = res[m];
        if (p == 0) continue;
        coeffs[m] = p;
        const QSeries& xm = xpow_at(m);
        for (long e = m; e <= window; ++e) {
            const Rat& c = xm.at(e);
            if (c != 0) res[e] -= p * c;
        }
    }
    for (long e = deg_bound + 1; e <= window; ++e)
        if (res[e] != 0)
            throw not_representable_error(
                "to_xpoly: not representable at degree bound " +
                    std::to_string(deg_bound) + ", residual at q^" + std::to_string(e),
                e);
    XPoly out;
    out.denom_exp = denom_exp;
    out.num = std::move(coeffs);
    return out;
}

}  // namespace

XPoly to_xpoly(const QSeries& G, long denom_exp, long deg_bound, long margin) {
    if (deg_bound < 0 || margin < 1)
        throw std::invalid_argument("to_xpoly: need deg_bound >= 0, margin >= 1");
    long window = deg_bound + margin;
    QSeries x = x_reference(window + 2);
    std::vector<QSeries> xpow;
    xpow.reserve(deg_bound + 1);
    xpow.push_back(QSeries::one(window + 2));
    for (long m = 1; m <= deg_bound; ++m) xpow.push_back(mul(xpow.back(), x));
    QSeries zpow = pow(one_plus_5x(x), denom_exp);
    return extract_xpoly(G, denom_exp, deg_bound, margin,
                         [&](long m) -> const QSeries& { return xpow[m]; }, zpow);
}

QSeries from_xpoly(const XPoly& p, long T) {
    QSeries x = x_reference(T + 1);
    QSeries acc = QSeries::zero(0, T);
    QSeries X = QSeries::one(T + 1);
    long next = 0;
    for (auto& [m, v] : p.num) {
        while (next < m) {
            X = mul(X, x).truncated(T + 1);
            ++next;
        }
        acc = add(acc, scale(X.truncated(T), v));
    }
    if (p.denom_exp > 0)
        acc = mul(acc, pow(invert(one_plus_5x(x)), p.denom_exp)).truncated(T);
    return acc;
}

const ModEqTables& ModEqTables::standard() {
    static const ModEqTables t = {
        // a_j(tau), coefficients of x^0..x^5
        {{{0, -1, -20, -150, -500, -625},
          {0, -15, -305, -2325, -7875, -10000},
          {0, -85, -1750, -13525, -46500, -60000},
          {0, -215, -4475, -35000, -122000, -160000},
          {0, -205, -4300, -34000, -120000, -160000}}},
        // b_k(tau), coefficients of z^0..z^5
        {{{0, 0, 0, 0, 0, -1},
          {1, 5, 5, 5, 5, -16},
          {-4, -15, 10, 35, 60, -96},
          {6, 15, -35, 40, 240, -256},
          {-4, -5, 20, -80, 320, -256},
          {1, 0, 0, 0, 0, 0}}},
    };
    return t;
}

namespace {

// sum coeffs[deg] * S^deg, all series truncated to T.
QSeries poly_of_series(const std::array<long, 6>& coeffs, const QSeries& S, long T) {
    QSeries acc = scale(QSeries::one(T), Rat(coeffs[0]));
    QSeries P = QSeries::one(T);
    for (int deg = 1; deg < 6; ++deg) {
        P = mul(P, S).truncated(T);
        if (coeffs[deg] != 0) acc = add(acc, scale(P, Rat(coeffs[deg])));
    }
    return acc;
}

}  // namespace

QSeries modeq_residual(const ModEqTables& tables, char which, long T) {
    if (which != 'x' && which != 'z')
        throw std::invalid_argument("modeq_residual: which must be 'x' or 'z'");
    long Tsub = T / 5 + 2;
    if (which == 'x') {
        QSeries x = x_reference(T + 1);
        QSeries x5 = substitute_power(x_reference(Tsub), 5).truncated(T + 1);
        // x^5 has valuation 5; pad the substituted series window down to match
        QSeries res = QSeries::zero(0, T);
        QSeries P = QSeries::one(T + 1);
        for (int j = 0; j < 5; ++j) {
            QSeries aj5 = poly_of_series(tables.a[j], x5, T + 1);
            res = add(res, mul(aj5, P).truncated(T));
            P = mul(P, x).truncated(T + 1);
        }
        res = add(res, P.truncated(T));  // + x^5
        return res;
    }
    QSeries z = z_reference(T + 1);
    QSeries z5 = substitute_power(z_reference(Tsub), 5).truncated(T + 1);
    QSeries res = QSeries::zero(0, T);
    QSeries P = QSeries::one(T + 1);
    for (int k = 0; k < 5; ++k) {
        QSeries bk5 = poly_of_series(tables.b[k], z5, T + 1);
        res = add(res, mul(bk5, P).truncated(T));
        P = mul(P, z).truncated(T + 1);
    }
    res = add(res, P.truncated(T));  // + z^5
    return res;
}

QSeries modeq_residual(char which, long T) {
    return modeq_residual(ModEqTables::standard(), which, T);
}

Rat fit_b3_z2_coefficient(long T) {
    ModEqTables t = ModEqTables::standard();
    t.b[3][2] = 0;
    QSeries r0 = modeq_residual(t, 'z', T);
    // residual(c) = r0 + c * z(5tau)^2 z^3
    QSeries z = z_reference(T + 1);
    QSeries z5 = substitute_power(z_reference(T / 5 + 2), 5).truncated(T + 1);
    QSeries mult = mul(mul(z5, z5), mul(mul(z, z), z)).truncated(T);
    auto v = mult.valuation();
    if (!v) throw series_error("fit_b3_z2_coefficient: degenerate multiplier");
    Rat c = -r0.at(*v) / mult.at(*v);
    QSeries check = add(r0, scale(mult, c));
    if (!check.is_zero())
        throw series_error("fit_b3_z2_coefficient: no constant closes the equation");
    return c;
}

long theta0(long m) {
    if (m < 1) throw std::invalid_argument("theta0: m must be >= 1");
    return m <= 4 ? 0 : floordiv(5 * m - 1, 7) - 2;
}

long theta1(long m) {
    if (m < 1) throw std::invalid_argument("theta1: m must be >= 1");
    return m <= 7 ? 0 : floordiv(5 * m - 2, 7) - 5;
}

long pi0(long m, long r) {
    return std::max(0L, floordiv(5 * r - m + 2, 7) - 5);
}

long pi1(long m, long r) {
    return floordiv(5 * r - m, 7);
}

void UMonomialEngine::ensure_series(long T) {
    if (T <= series_T_) return;
    series_T_ = T;
    xpow_.clear();
    inv15_.clear();
    zpow_.clear();
    QSeries x = x_reference(T);
    xpow_.push_back(QSeries::one(T));
    xpow_.push_back(x);
    inv15_.push_back(QSeries::one(T));
    inv15_.push_back(invert(one_plus_5x(x)).truncated(T));
}

const QSeries& UMonomialEngine::zpow_series(long e) {
    auto it = zpow_.find(e);
    if (it != zpow_.end() && it->second.trunc() >= series_T_) return it->second;
    QSeries z = pow(one_plus_5x(xpow_[1]), e);
    return zpow_.insert_or_assign(e, std::move(z)).first->second;
}

const QSeries& UMonomialEngine::xpow_series(long m) {
    while (static_cast<long>(xpow_.size()) <= m)
        xpow_.push_back(mul(xpow_.back(), xpow_[1]).truncated(series_T_));
    return xpow_[m];
}

const QSeries& UMonomialEngine::inv15_pow_series(long n) {
    while (static_cast<long>(inv15_.size()) <= n)
        inv15_.push_back(mul(inv15_.back(), inv15_[1]).truncated(series_T_));
    return inv15_[n];
}

XPoly UMonomialEngine::direct(int i, long m, long n) {
    if (i != 0 && i != 1) throw std::invalid_argument("u_monomial: i must be 0 or 1");
    if (m < 0 || n < 0) throw std::invalid_argument("u_monomial: m, n must be >= 0");
    auto key = std::make_tuple(i, m, n);
    if (auto it = direct_memo_.find(key); it != direct_memo_.end()) return it->second;
    const long margin = 25;
    // numerator degree is max(5m+9, 5n+5) for i=0 and max(5m, 5n) for i=1
    long deg_bound = (i == 0 ? std::max(5 * m + 9, 5 * n + 5) : std::max(5 * m, 5 * n)) + 5;
    long outT = deg_bound + margin + 2;
    long inT = 5 * outT + 6;
    ensure_series(inT);
    QSeries W = xpow_series(m);
    if (n > 0) W = mul(W, inv15_pow_series(n)).truncated(inT);
    QSeries G = apply_u(i, W);
    long de = denom_exp_for(i, n);
    XPoly out = extract_xpoly(
        G, de, deg_bound, margin, [&](long k) -> const QSeries& { return xpow_series(k); },
        zpow_series(de).truncated(deg_bound + margin + 2));
    return direct_memo_.emplace(key, std::move(out)).first->second;
}

const XPoly& UMonomialEngine::u_xpow(int i, long m) {
    auto key = std::make_pair(i, m);
    auto it = upow_x_.find(key);
    if (it != upow_x_.end()) return it->second;
    XPoly val;
    if (m <= 4) {
        val = direct(i, m, 0);
    } else {
        // x^m = -sum_j a_j(5tau) x^{m+j-5} pulled through U^(i)
        const auto& tabs = ModEqTables::standard();
        for (int j = 0; j < 5; ++j) {
            std::map<long, Rat> aj;
            for (long d = 0; d < 6; ++d)
                if (tabs.a[j][d] != 0) aj[d] = Rat(tabs.a[j][d]);
            val = val + scale(XPoly(0, aj) * u_xpow(i, m + j - 5), Rat(-1));
        }
    }
    return upow_x_.emplace(key, std::move(val)).first->second;
}

const XPoly& UMonomialEngine::u_zpow(int i, long j) {
    auto key = std::make_pair(i, j);
    auto it = upow_z_.find(key);
    if (it != upow_z_.end()) return it->second;
    XPoly val;
    if (j == 0) {
        val = u_xpow(i, 0);  // U^(i)(z^0) = U^(i)(1)
    } else if (j > 0) {
        // z^j = (1+5x)^j expanded binomially
        for (long r = 0; r <= j; ++r) {
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(j),
                         static_cast<unsigned long>(r));
            val = val + scale(u_xpow(i, r),
                              Rat(b * pow5(static_cast<unsigned long>(r))));
        }
    } else {
        // z^j = -sum_{k=1..5} (b_k(5tau)/b_0(5tau)) z^{j+k} pulled through
        // U^(i); b_k/b_0 = -b_k(1+5x)/(1+5x)^5.
        const auto& tabs = ModEqTables::standard();
        for (int k = 1; k <= 5; ++k) {
            std::map<long, Rat> bk_x;
            for (long d = 0; d < 6; ++d) {
                if (tabs.b[k][d] == 0) continue;
                for (auto& [deg, v] : binom_pow(d)) {
                    bk_x[deg] += Rat(tabs.b[k][d]) * v;
                }
            }
            for (auto itc = bk_x.begin(); itc != bk_x.end();)
                itc = (itc->second == 0) ? bk_x.erase(itc) : std::next(itc);
            XPoly ratio(5, bk_x);  // -(b_k/b_0) has numerator +b_k(1+5x)
            val = val + ratio * u_zpow(i, j + k);
        }
    }
    return upow_z_.emplace(key, std::move(val)).first->second;
}

XPoly UMonomialEngine::recur_zpow(int i, long j) {
    if (i != 0 && i != 1) throw std::invalid_argument("recur_zpow: i must be 0 or 1");
    return u_zpow(i, j);
}

XPoly UMonomialEngine::recur(int i, long m, long n) {
    if (i != 0 && i != 1) throw std::invalid_argument("u_monomial: i must be 0 or 1");
    if (m < 0 || n < 0) throw std::invalid_argument("u_monomial: m, n must be >= 0");
    // x^m / (1+5x)^n = 5^{-m} sum_r (-1)^{m-r} C(m,r) z^{r-n}
    XPoly acc;
    for (long r = 0; r <= m; ++r) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m),
                     static_cast<unsigned long>(r));
        Rat c = Rat((m - r) % 2 == 0 ? b : -b) / Rat(pow5(static_cast<unsigned long>(m)));
        acc = acc + scale(u_zpow(i, r - n), c);
    }
    return acc;
}

Int HTable::at(long m, long n, long r) const {
    auto it = entries.find({m, n, r});
    return it == entries.end() ? Int(0) : it->second;
}

std::string HTable::csv() const {
    std::string out = "i,m,n,r,h\n";
    for (auto& [key, h] : entries) {
        auto [m, n, r] = key;
        out += std::to_string(i) + "," + std::to_string(m) + "," + std::to_string(n) +
               "," + std::to_string(r) + "," + h.get_str() + "\n";
    }
    return out;
}

HTable h_table(UMonomialEngine& eng, int i, long m_max, long n_max) {
    HTable t;
    t.i = i;
    eng.direct(i, m_max, n_max);  // largest cell first: sizes the series caches once
    for (long m = 0; m <= m_max; ++m) {
        for (long n = 0; n <= n_max; ++n) {
            XPoly p = eng.direct(i, m, n);
            for (auto& [r, coeff] : p.num) {
                long pi = (i == 0) ? pi0(m, r) : pi1(m, r);
                Rat h = coeff * pow5_rat(-pi);
                if (h.get_den() != 1)
                    throw series_error(
                        "h_table: non-integer discrete-array entry at (i,m,n,r) = (" +
                        std::to_string(i) + "," + std::to_string(m) + "," +
                        std::to_string(n) + "," + std::to_string(r) + ")");
                t.entries[{m, n, r}] = Int(h.get_num());
            }
        }
    }
    return t;
}

VMembershipReport v_membership(const XPoly& p, int i, long n) {
    if (i != 0 && i != 1) throw std::invalid_argument("v_membership: i must be 0 or 1");
    VMembershipReport rep;
    if (p.is_zero()) {
        rep.member = rep.denom_ok = rep.valuations_ok = true;
        return rep;
    }
    rep.denom_ok = (p.denom_exp == n);
    rep.valuations_ok = true;
    for (auto& [m, coeff] : p.num) {
        if (m < 1) {
            rep.valuations_ok = false;
            continue;
        }
        long th = (i == 0) ? theta0(m) : theta1(m);
        Rat s = coeff * pow5_rat(-th);
        if (s.get_den() != 1) rep.valuations_ok = false;
        rep.s[m] = s;
    }
    if (i == 1) {
        auto sval = [&](long m) -> std::optional<Int> {
            auto it = rep.s.find(m);
            if (it == rep.s.end()) return Int(0);
            if (it->second.get_den() != 1) return std::nullopt;
            return Int(it->second.get_num());
        };
        bool all_int = true;
        Int c1(0), c2(0);
        for (auto [m, w] : {std::pair<long, long>{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 1}}) {
            auto v = sval(m);
            if (!v) { all_int = false; break; }
            c1 += w * *v;
        }
        if (all_int) {
            for (auto [m, w] : {std::pair<long, long>{4, 4}, {6, 1}, {7, 1}, {8, 1}}) {
                auto v = sval(m);
                if (!v) { all_int = false; break; }
                c2 += w * *v;
            }
        }
        if (all_int) {
            rep.residues[0] = mod_long(c1, 5);
            rep.residues[1] = mod_long(c2, 5);
            rep.congruences_ok = (rep.residues[0] == 0 && rep.residues[1] == 0);
        } else {
            rep.congruences_ok = false;
        }
    }
    rep.member = rep.denom_ok && rep.valuations_ok && rep.congruences_ok;
    return rep;
}

std::string VMembershipReport::json() const {
    nlohmann::json s_led = nlohmann::json::array();
    for (auto& [m, v] : s) s_led.push_back({m, rat_str(v)});
    return nlohmann::json{{"member", member},
                          {"denom_ok", denom_ok},
                          {"valuations_ok", valuations_ok},
                          {"congruences_ok", congruences_ok},
                          {"residues", residues},
                          {"s", s_led}}
        .dump();
}

bool LinearForm::integral() const {
    for (auto& [k, v] : coeffs) {
        (void)k;
        if (v.get_den() != 1) return false;
    }
    return true;
}

std::string LinearForm::str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (auto& [k, v] : coeffs) {
        if (!out.empty()) out += " + ";
        out += rat_str(v) + "*s(" + std::to_string(k) + ")";
    }
    return out;
}

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
    LinearForm out = a;
    for (auto& [k, v] : b.coeffs) {
        out.coeffs[k] += v;
        if (out.coeffs[k] == 0) out.coeffs.erase(k);
    }
    return out;
}

LinearForm scale(const LinearForm& a, const Rat& c) {
    LinearForm out;
    if (c != 0)
        for (auto& [k, v] : a.coeffs) out.coeffs[k] = v * c;
    return out;
}

LinearForm t_hat(long w, const HTable& h1, const HTable& h0) {
    if (w < 1 || w > 8) throw std::invalid_argument("t_hat: w must be in 1..8");
    if (h1.i != 1 || h0.i != 0)
        throw std::invalid_argument("t_hat: tables must be (h1, h0)");
    LinearForm out;
    for (long r = 1; r <= 5 * w - 4; ++r) {
        for (long m = 1; m <= 5 * r; ++m) {
            long def = theta1(m) + pi1(m, r) + pi0(r, w) - theta1(w) - 1;
            if (def >= 0) continue;
            Int prod = h1.at(m, 0, r) * h0.at(r, 0, w);
            if (prod == 0) continue;
            out.coeffs[m] += Rat(prod) * pow5_rat(def);
            if (out.coeffs[m] == 0) out.coeffs.erase(m);
        }
    }
    for (auto& [m, v] : out.coeffs) {
        (void)v;
        if (m > 8)
            throw series_error("t_hat: support escaped s(1)..s(8) at s(" +
                               std::to_string(m) + ")");
    }
    return out;
}

IdealReduction ideal_membership(const LinearForm& form) {
    if (!form.integral())
        throw non_integral_error("ideal_membership: non-integer coefficients");
    std::array<Int, 9> c{};
    for (auto& [k, v] : form.coeffs) {
        if (k < 1 || k > 8)
            throw std::invalid_argument("ideal_membership: symbol outside s(1)..s(8)");
        c[k] = Int(v.get_num());
    }
    // s(5) = g1 - (s1+s2+s3+2 s4): substitute s(5) -> -(s1+s2+s3+2 s4) mod g1
    c[1] -= c[5];
    c[2] -= c[5];
    c[3] -= c[5];
    c[4] -= 2 * c[5];
    c[5] = 0;
    // s(8) -> -(4 s4 + s6 + s7) mod g2
    c[4] -= 4 * c[8];
    c[6] -= c[8];
    c[7] -= c[8];
    c[8] = 0;
    IdealReduction red;
    red.member = true;
    for (long k : {1L, 2L, 3L, 4L, 6L, 7L}) {
        red.eliminated[k] = c[k];
        red.residues[k] = mod_long(c[k], 5);
        if (red.residues[k] != 0) red.member = false;
    }
    return red;
}

std::string IdealReduction::json() const {
    nlohmann::json elim, res;
    for (auto& [k, v] : eliminated) elim["s" + std::to_string(k)] = v.get_str();
    for (auto& [k, v] : residues) res["s" + std::to_string(k)] = v;
    return nlohmann::json{{"member", member}, {"eliminated", elim}, {"residues_mod5", res}}
        .dump();
}

Main2Report verify_main2(long alpha_max) {
    if (alpha_max < 1) throw std::invalid_argument("verify_main2: alpha_max must be >= 1");
    Main2Report rep;
    rep.pass = true;
    const long margin = 25;
    Int psi_top = psi(alpha_max);
    if (psi_top.fits_slong_p() == 0)
        throw std::invalid_argument("verify_main2: alpha_max too large");
    // numerator degrees follow d_1 = 9, d_{a+1} = 5 d_a (+9 after a U^(0) step)
    std::vector<long> deg(alpha_max + 1);
    deg[1] = 9;
    for (long a = 2; a <= alpha_max; ++a)
        deg[a] = 5 * deg[a - 1] + ((a - 1) % 2 == 0 ? 9 : 0);
    long T_top = deg[alpha_max] + 5 + margin + 2;
    QSeries base = generating_series(3, required_base_precision(alpha_max, T_top));
    auto chain = build_chain(alpha_max, T_top, base);
    for (auto& state : chain) {
        long alpha = state.alpha;
        Main2AlphaResult res;
        res.alpha = alpha;
        res.psi_value = psi(alpha);
        long ps = res.psi_value.get_si();
        XPoly p = to_xpoly(state.series, ps, deg[alpha] + 5, margin);
        p = scale(p, pow5_rat(-(alpha / 2)));
        res.integral = true;
        for (auto& [m, v] : p.num) {
            (void)m;
            if (v.get_den() != 1) res.integral = false;
        }
        res.degree = p.is_zero() ? 0 : p.degree();
        res.membership = v_membership(p, alpha % 2 == 1 ? 1 : 0, ps);
        res.v_member = res.membership.member;
        if (!res.integral || !res.v_member) rep.pass = false;
        rep.per_alpha.push_back(std::move(res));
    }
    return rep;
}

std::string Main2Report::json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& r : per_alpha) {
        arr.push_back({{"alpha", r.alpha},
                       {"psi", r.psi_value.get_str()},
                       {"degree", r.degree},
                       {"integral", r.integral},
                       {"v_member", r.v_member}});
    }
    return nlohmann::json{{"pass", pass}, {"alpha", arr}}.dump();
}

}  // namespace qcong
