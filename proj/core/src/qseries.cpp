#include "qcong/qseries.hpp"

#include <algorithm>
#include <json.hpp>

namespace qcong {

namespace {

long cdiv(long a, long b) {  // ceil(a/b), b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

QSeries::QSeries(long min_exp, std::vector<Rat> coeffs)
    : min_exp_(min_exp), c_(std::move(coeffs)) {
    if (c_.empty()) throw series_error("QSeries: zero-length series");
}

QSeries QSeries::zero(long min_exp, long trunc) {
    if (trunc <= min_exp) throw series_error("QSeries: zero-length series");
    return QSeries(min_exp, std::vector<Rat>(trunc - min_exp));
}

QSeries QSeries::one(long trunc) {
    auto s = zero(0, trunc);
    s.c_[0] = 1;
    return s;
}

QSeries QSeries::monomial(const Rat& c, long exp, long trunc) {
    if (exp >= trunc) throw series_error("monomial: exponent at or beyond trunc");
    auto s = zero(std::min(exp, 0L), trunc);
    s.c_[exp - s.min_exp_] = c;
    return s;
}

const Rat& QSeries::at(long e) const {
    if (e < min_exp_ || e >= trunc())
        throw std::out_of_range("QSeries::at: exponent " + std::to_string(e) +
                                " outside [" + std::to_string(min_exp_) + ", " +
                                std::to_string(trunc()) + ")");
    return c_[e - min_exp_];
}

Rat QSeries::coeff_or_zero(long e) const {
    if (e >= trunc())
        throw std::out_of_range("QSeries::coeff_or_zero: exponent beyond trunc");
    if (e < min_exp_) return Rat(0);
    return c_[e - min_exp_];
}

std::optional<long> QSeries::valuation() const {
    for (long i = 0; i < size(); ++i)
        if (c_[i] != 0) return min_exp_ + i;
    return std::nullopt;
}

bool QSeries::integral() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rat& q) { return q.get_den() == 1; });
}

QSeries QSeries::truncated(long new_trunc) const {
    if (new_trunc > trunc())
        throw precision_error("QSeries::truncated: cannot extend precision", new_trunc);
    if (new_trunc <= min_exp_) throw series_error("QSeries: zero-length series");
    return QSeries(min_exp_, std::vector<Rat>(c_.begin(), c_.begin() + (new_trunc - min_exp_)));
}

QSeries QSeries::shifted(long k) const {
    return QSeries(min_exp_ + k, c_);
}

QSeries add(const QSeries& a, const QSeries& b) {
    long lo = std::min(a.min_exp(), b.min_exp());
    long hi = std::min(a.trunc(), b.trunc());
    if (hi <= lo) throw series_error("add: zero-length overlap");
    std::vector<Rat> c(hi - lo);
    for (long e = lo; e < hi; ++e) {
        Rat v = (e >= a.min_exp() ? a.at(e) : Rat(0));
        if (e >= b.min_exp()) v += b.at(e);
        c[e - lo] = std::move(v);
    }
    return QSeries(lo, std::move(c));
}

QSeries sub(const QSeries& a, const QSeries& b) {
    return add(a, scale(b, Rat(-1)));
}

QSeries scale(const QSeries& a, const Rat& c) {
    std::vector<Rat> out(a.coeffs());
    for (auto& v : out) v *= c;
    return QSeries(a.min_exp(), std::move(out));
}

QSeries mul(const QSeries& a, const QSeries& b) {
    long lo = a.min_exp() + b.min_exp();
    long hi = std::min(a.trunc() + b.min_exp(), b.trunc() + a.min_exp());
    if (hi <= lo) throw series_error("mul: zero-length result window");
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    const long block = 2048;
    // Integer fast path: the convolution runs on bare mpz accumulators.
    if (a.integral() && b.integral()) {
        std::vector<Int> acc(hi - lo);
        for (long i0 = 0; i0 < a.size(); i0 += block) {
            long i1 = std::min(i0 + block, a.size());
            for (long i = i0; i < i1; ++i) {
                if (ac[i] == 0) continue;
                mpz_srcptr ai = ac[i].get_num_mpz_t();
                long jmax = std::min<long>(b.size(), (hi - lo) - i);
                for (long j = 0; j < jmax; ++j) {
                    if (bc[j] != 0)
                        mpz_addmul(acc[i + j].get_mpz_t(), ai, bc[j].get_num_mpz_t());
                }
            }
        }
        std::vector<Rat> out(hi - lo);
        for (long k = 0; k < hi - lo; ++k)
            if (acc[k] != 0) out[k] = Rat(std::move(acc[k]));
        return QSeries(lo, std::move(out));
    }
    std::vector<Rat> out(hi - lo);
    // Schoolbook convolution, blocked over the left factor for locality on
    // large windows.
    for (long i0 = 0; i0 < a.size(); i0 += block) {
        long i1 = std::min(i0 + block, a.size());
        for (long i = i0; i < i1; ++i) {
            if (ac[i] == 0) continue;
            long jmax = std::min<long>(b.size(), (hi - lo) - i);
            for (long j = 0; j < jmax; ++j) {
                if (bc[j] != 0) out[i + j] += ac[i] * bc[j];
            }
        }
    }
    return QSeries(lo, std::move(out));
}

QSeries invert(const QSeries& a) {
    auto v = a.valuation();
    if (!v) throw non_invertible_error("invert: non-invertible series (zero)");
    long val = *v;
    long k = a.trunc() - val;  // relative precision
    std::vector<Rat> out(k);
    const Rat& lead = a.at(val);
    out[0] = Rat(1) / lead;
    for (long n = 1; n < k; ++n) {
        Rat acc(0);
        for (long j = 1; j <= n; ++j) {
            const Rat& aj = a.at(val + j);
            if (aj != 0) acc += aj * out[n - j];
        }
        out[n] = -acc / lead;
    }
    return QSeries(-val, std::move(out));
}

QSeries pow(const QSeries& a, long k) {
    if (k == 0) return QSeries::one(std::max(1L, a.trunc()));
    if (k < 0) return pow(invert(a), -k);
    // binary powering, most-significant bit first
    int top = 63;
    while (((k >> top) & 1) == 0) --top;
    QSeries r = a;
    for (int bit = top - 1; bit >= 0; --bit) {
        r = mul(r, r);
        if ((k >> bit) & 1) r = mul(r, a);
    }
    return r;
}

QSeries substitute_power(const QSeries& a, long d) {
    if (d < 1) throw std::invalid_argument("substitute_power: d must be >= 1");
    long lo = d * a.min_exp();
    long hi = d * a.trunc();
    std::vector<Rat> out(hi - lo);
    for (long i = 0; i < a.size(); ++i) out[i * d] = a.coeffs()[i];
    return QSeries(lo, std::move(out));
}

QSeries atkin_u(const QSeries& a, long d) {
    if (d < 1) throw std::invalid_argument("atkin_u: d must be >= 1");
    long lo = cdiv(a.min_exp(), d);
    long hi = cdiv(a.trunc(), d);
    if (hi <= lo)
        throw precision_error("atkin_u: no known coefficient at a multiple of " +
                                  std::to_string(d),
                              d * (lo + 1));
    std::vector<Rat> out(hi - lo);
    for (long n = lo; n < hi; ++n) out[n - lo] = a.at(d * n);
    return QSeries(lo, std::move(out));
}

EtaProductSpec::EtaProductSpec(std::initializer_list<std::pair<long, long>> fs)
    : factors(fs) {
    for (auto& [r, e] : factors) {
        (void)e;
        if (r < 1) throw std::invalid_argument("EtaProductSpec: r must be >= 1");
    }
}

namespace detail {

std::vector<std::pair<long, int>> pentagonal_terms(long r, long T) {
    std::vector<std::pair<long, int>> out;
    for (long k = 1;; ++k) {
        long e1 = r * (k * (3 * k - 1) / 2);
        long e2 = r * (k * (3 * k + 1) / 2);
        int s = (k % 2 == 1) ? -1 : 1;
        bool any = false;
        if (e1 < T) { out.emplace_back(e1, s); any = true; }
        if (e2 < T) { out.emplace_back(e2, s); any = true; }
        if (!any) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

void mul_fr_int(std::vector<Int>& s, long r) {
    const long T = static_cast<long>(s.size());
    auto terms = pentagonal_terms(r, T);
    for (long n = T - 1; n >= 0; --n) {
        mpz_ptr acc = s[n].get_mpz_t();
        for (auto& [e, sg] : terms) {
            if (e > n) break;
            if (sg > 0)
                mpz_add(acc, acc, s[n - e].get_mpz_t());
            else
                mpz_sub(acc, acc, s[n - e].get_mpz_t());
        }
    }
}

void div_fr_int(std::vector<Int>& s, long r) {
    const long T = static_cast<long>(s.size());
    auto terms = pentagonal_terms(r, T);
    for (long n = 0; n < T; ++n) {
        mpz_ptr acc = s[n].get_mpz_t();
        for (auto& [e, sg] : terms) {
            if (e > n) break;
            if (sg > 0)
                mpz_sub(acc, acc, s[n - e].get_mpz_t());
            else
                mpz_add(acc, acc, s[n - e].get_mpz_t());
        }
    }
}

namespace {

bool all_integral(const std::vector<Rat>& s) {
    return std::all_of(s.begin(), s.end(),
                       [](const Rat& q) { return q.get_den() == 1; });
}

// Numerator view of a canonical integer rational; denominators stay 1 under
// integer add/sub so canonical form is preserved.
inline mpz_ptr numref(Rat& q) { return mpq_numref(q.get_mpq_t()); }

}  // namespace

void mul_fr_rat(std::vector<Rat>& s, long r) {
    const long T = static_cast<long>(s.size());
    auto terms = pentagonal_terms(r, T);
    if (all_integral(s)) {
        for (long n = T - 1; n >= 0; --n) {
            mpz_ptr acc = numref(s[n]);
            for (auto& [e, sg] : terms) {
                if (e > n) break;
                if (sg > 0)
                    mpz_add(acc, acc, numref(s[n - e]));
                else
                    mpz_sub(acc, acc, numref(s[n - e]));
            }
        }
        return;
    }
    for (long n = T - 1; n >= 0; --n) {
        for (auto& [e, sg] : terms) {
            if (e > n) break;
            if (sg > 0)
                s[n] += s[n - e];
            else
                s[n] -= s[n - e];
        }
    }
}

void div_fr_rat(std::vector<Rat>& s, long r) {
    const long T = static_cast<long>(s.size());
    auto terms = pentagonal_terms(r, T);
    if (all_integral(s)) {
        for (long n = 0; n < T; ++n) {
            mpz_ptr acc = numref(s[n]);
            for (auto& [e, sg] : terms) {
                if (e > n) break;
                if (sg > 0)
                    mpz_sub(acc, acc, numref(s[n - e]));
                else
                    mpz_add(acc, acc, numref(s[n - e]));
            }
        }
        return;
    }
    for (long n = 0; n < T; ++n) {
        for (auto& [e, sg] : terms) {
            if (e > n) break;
            if (sg > 0)
                s[n] -= s[n - e];
            else
                s[n] += s[n - e];
        }
    }
}

std::vector<Int> pow_fr_int(long r, long e, long T) {
    auto terms = pentagonal_terms(r, T);
    std::vector<Int> h(T);
    h[0] = 1;
    for (long n = 1; n < T; ++n) {
        Int acc(0);
        mpz_ptr ap = acc.get_mpz_t();
        for (auto& [j, sg] : terms) {
            if (j > n) break;
            long m = (e + 1) * j - n;
            long signedmult = sg * m;
            if (signedmult > 0)
                mpz_addmul_ui(ap, h[n - j].get_mpz_t(), static_cast<unsigned long>(signedmult));
            else if (signedmult < 0)
                mpz_submul_ui(ap, h[n - j].get_mpz_t(), static_cast<unsigned long>(-signedmult));
        }
        if (!mpz_divisible_ui_p(ap, static_cast<unsigned long>(n)))
            throw series_error("pow_fr_int: recurrence produced a non-integer");
        mpz_divexact_ui(h[n].get_mpz_t(), ap, static_cast<unsigned long>(n));
    }
    return h;
}

}  // namespace detail

QSeries eta_product(const EtaProductSpec& spec, long T) {
    if (T < 1) throw std::invalid_argument("eta_product: T must be >= 1");
    for (auto& [r, e] : spec.factors) {
        (void)e;
        if (r < 1) throw std::invalid_argument("eta_product: r must be >= 1");
    }
    // Largest |e| first: it can seed the accumulator via the power recurrence
    // without a dense*dense product.
    auto factors = spec.factors;
    std::stable_sort(factors.begin(), factors.end(), [](auto& a, auto& b) {
        return std::abs(a.second) > std::abs(b.second);
    });
    const long kPowThreshold = 32;
    std::vector<Int> s(T);
    s[0] = 1;
    bool trivial = true;
    for (auto& [r, e] : factors) {
        if (e == 0) continue;
        if (std::abs(e) >= kPowThreshold) {
            auto h = detail::pow_fr_int(r, e, T);
            if (trivial) {
                s = std::move(h);
            } else {
                std::vector<Int> out(T);
                for (long i = 0; i < T; ++i) {
                    if (s[i] == 0) continue;
                    for (long j = 0; j + i < T; ++j)
                        if (h[j] != 0) out[i + j] += s[i] * h[j];
                }
                s = std::move(out);
            }
        } else {
            for (long c = 0; c < std::abs(e); ++c) {
                if (e > 0)
                    detail::mul_fr_int(s, r);
                else
                    detail::div_fr_int(s, r);
            }
        }
        trivial = false;
    }
    std::vector<Rat> out(T);
    for (long i = 0; i < T; ++i)
        if (s[i] != 0) out[i] = Rat(s[i]);
    return QSeries(0, std::move(out));
}

CongruenceReport congruent_zero(const QSeries& a, long M, long n_max) {
    if (M < 1) throw std::invalid_argument("congruent_zero: modulus must be >= 1");
    if (n_max >= a.trunc())
        throw precision_error("congruent_zero: window end beyond trunc", n_max + 1);
    CongruenceReport rep;
    rep.modulus = M;
    rep.checked_from = a.min_exp();
    rep.checked_to = n_max;
    rep.pass = true;
    for (long e = a.min_exp(); e <= n_max; ++e) {
        const Rat& c = a.at(e);
        if (c.get_den() != 1)
            throw non_integral_error("congruent_zero: non-integral series at q^" +
                                     std::to_string(e));
        Int r = Int(c.get_num()) % M;
        if (r != 0) {
            rep.pass = false;
            rep.first_failure = e;
            rep.residue = ((r % M) + M) % M;
            break;
        }
    }
    return rep;
}

std::string QSeries::json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long i = 0; i < size(); ++i) {
        if (c_[i] != 0)
            coeffs.push_back({min_exp_ + i, rat_str(c_[i])});
    }
    nlohmann::json j{{"min_exp", min_exp_}, {"trunc", trunc()}, {"coeffs", coeffs}};
    return j.dump();
}

QSeries QSeries::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    long lo = j.at("min_exp").get<long>();
    long hi = j.at("trunc").get<long>();
    auto s = QSeries::zero(lo, hi);
    std::vector<Rat> c(hi - lo);
    for (auto& item : j.at("coeffs")) {
        long e = item.at(0).get<long>();
        if (e < lo || e >= hi) throw series_error("from_json: exponent outside window");
        c[e - lo] = rat_parse(item.at(1).get<std::string>());
    }
    return QSeries(lo, std::move(c));
}

}  // namespace qcong
