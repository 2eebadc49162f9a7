// qcong: batch verification front-end. Every subcommand recomputes one slice
// of the toolkit's checks and emits a deterministic report (JSON or
// tab-separated text); exit 0 iff every sub-check passed, 1 on a failed
// check, 2 on usage errors. Timing goes to stderr, never into reports.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>

#include "qcong/etaq.hpp"
#include "qcong/ladder.hpp"
#include "qcong/localize.hpp"
#include "qcong/partitions.hpp"
#include "qcong/printed.hpp"
#include "qcong/report.hpp"
#include "qcong/sturm.hpp"

using namespace qcong;

namespace {

struct Options {
    long precision = 2000;
    long alpha = 0;
    long nmax = 0;
    long modulus = 0;
    std::string format = "json";
    std::string out;
    std::string eta;
};

void emit(const Report& rep, const Options& opt) {
    std::string payload = opt.format == "text" ? rep.text() : rep.json() + "\n";
    if (opt.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(opt.out);
        if (!f) throw std::runtime_error("cannot open output file " + opt.out);
        f << payload;
    }
}

nlohmann::json series_json(const QSeries& s) {
    return nlohmann::json::parse(s.json());
}

Report cmd_expand(const Options& opt) {
    Report rep{"expand"};
    auto eq = EtaQuotient::parse(opt.eta);
    auto s = expand(eq, opt.precision > 1 ? opt.precision : 64);
    rep.add("expand " + eq.str(), true, series_json(s));
    return rep;
}

Report cmd_eta_check(const Options& opt) {
    Report rep{"eta-check"};
    auto eq = EtaQuotient::parse(opt.eta);
    auto r = newman_check(eq);
    rep.add("exponent sum = 0", r.exp_sum_zero, {{"value", r.exp_sum}});
    rep.add("sum delta*r = 0 mod 24", r.weighted_sum_24, {{"value", r.weighted_sum}});
    rep.add("sum (N/delta)*r = 0 mod 24", r.dual_weighted_24,
            {{"value", r.dual_weighted_sum}});
    rep.add("product delta^r is a rational square", r.square_product);
    return rep;
}

Report cmd_cusp_orders(const Options& opt) {
    Report rep{"cusp-orders"};
    auto eq = EtaQuotient::parse(opt.eta);
    nlohmann::json rows = nlohmann::json::array();
    for (auto& c : cusps_of(eq.level))
        rows.push_back({{"cusp", c.str()}, {"order", rat_str(ligozat_order(eq, c))}});
    rep.add("orders of " + eq.str(), true, rows);
    return rep;
}

Report cmd_table1(const Options&) {
    Report rep{"table1"};
    EtaQuotient phi(50, {{25, 1}, {50, 2}, {1, -1}, {2, -2}});
    EtaQuotient x(50, {{2, 1}, {10, 3}, {1, -3}, {5, -1}});
    EtaQuotient x5(50, {{10, 1}, {50, 3}, {5, -3}, {25, -1}});
    EtaQuotient z5(50, {{10, 5}, {25, 1}, {5, -5}, {50, -1}});
    auto cusps = cusps_of(50);
    rep.add("12 cusps of Gamma0(50)", cusps.size() == 12,
            {{"count", cusps.size()}});
    std::vector<Discrepancy> combo_ds;
    for (auto& row : printed::cusp_order_table()) {
        Cusp c(row.a, row.c, 50);
        Rat vphi = ligozat_order(phi, c), vx = ligozat_order(x, c),
            vx5 = ligozat_order(x5, c), vz5 = ligozat_order(z5, c);
        bool ok = vphi == row.phi && vx == row.x && vx5 == row.x5 && vz5 == row.z5;
        rep.add("orders at " + row.label, ok,
                {{"phi", rat_str(vphi)},
                 {"x", rat_str(vx)},
                 {"x(5t)", rat_str(vx5)},
                 {"z(5t)", rat_str(vz5)}});
        for (long k = 0; k <= 4; ++k) {
            Rat combo = vphi + k * vx - 29 * vx5 + 5 * vz5;
            if (combo != row.combo[k])
                combo_ds.push_back({row.label + " combination k=" + std::to_string(k),
                                    std::to_string(row.combo[k]), rat_str(combo)});
        }
    }
    bool combos_known = true;
    for (auto& d : combo_ds)
        combos_known &= d.where.find("/5]") != std::string::npos && d.printed == "4" &&
                        d.recomputed == "24";
    rep.add("combination column recomputed from the row orders", combos_known,
            nlohmann::json::parse(discrepancies_json(combo_ds)));
    rep.add("row labels", true,
            {{"note", "published labels carry subscript 10; rows are matched by "
                      "cusp value at level 50"}});
    return rep;
}

Report cmd_radu_bounds(const Options&) {
    Report rep{"radu-bounds"};
    RaduInstance inst(50, {{1, -1}, {2, -2}, {25, 1}, {50, 2}}, 5, 0, 10, {});
    struct Row { Cusp c; Rat exact; long printed; } rows[] = {
        {Cusp(1, 10, 10), Rat(1), 1},
        {Cusp(1, 5, 10), Rat(4) / Rat(5), 1},
        {Cusp(1, 2, 10), Rat(-5), -5},
        {Cusp(0, 1, 10), Rat(-4), -4},
    };
    for (auto& row : rows) {
        Rat b = radu_lower_bound(inst, row.c);
        Int up;
        mpz_cdiv_q(up.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
        rep.add("ord bound at " + row.c.str(), b == row.exact && up == row.printed,
                {{"exact", rat_str(b)}, {"integer_bound", up.get_si()}});
    }
    return rep;
}

Report cmd_ladder_verify(const Options& opt) {
    Report rep{"ladder-verify"};
    long alpha = opt.alpha > 0 ? opt.alpha : 1;
    long nmax = opt.nmax > 0 ? opt.nmax : 50;
    if (opt.modulus > 0) {
        // exploratory override: check the progression against a chosen modulus
        long m = pow5(2 * alpha).get_si();
        long t = gamma_offset(alpha).get_si();
        auto table = table_from_series(3, m * nmax + t);
        auto vals = progression_values(table, m, t, nmax + 1);
        std::vector<Rat> c(vals.size());
        for (size_t i = 0; i < vals.size(); ++i) c[i] = Rat(vals[i]);
        auto cz = congruent_zero(QSeries(0, std::move(c)), opt.modulus, nmax);
        nlohmann::json d{{"alpha", alpha},
                         {"modulus", opt.modulus},
                         {"n_max", nmax},
                         {"pass", cz.pass},
                         {"first_failure", nullptr}};
        if (cz.first_failure) d["first_failure"] = *cz.first_failure;
        rep.add("a_3(" + std::to_string(m) + "n+" + std::to_string(t) + ") = 0 mod " +
                    std::to_string(opt.modulus),
                cz.pass, d);
        return rep;
    }
    auto fam = check_family(alpha, nmax);
    rep.add("a_3(" + pow5(2 * alpha).get_str() + "n+" + gamma_offset(alpha).get_str() +
                ") = 0 mod " + std::to_string(fam.modulus),
            fam.pass, nlohmann::json::parse(fam.json()));
    return rep;
}

Report cmd_xpoly(const Options& opt) {
    Report rep{"xpoly"};
    long alpha = opt.alpha > 0 ? opt.alpha : 1;
    long deg = 9;
    for (long a = 2; a <= alpha; ++a) deg = 5 * deg + ((a - 1) % 2 == 0 ? 9 : 0);
    auto state = build_L(alpha, deg + 32);
    long ps = psi(alpha).get_si();
    auto p = scale(to_xpoly(state.series, ps, deg + 5, 25),
                   Rat(1) / Rat(pow5(alpha / 2)));
    rep.add("(1+5x)^" + std::to_string(ps) + " L_" + std::to_string(alpha) + " / 5^" +
                std::to_string(alpha / 2),
            true, nlohmann::json::parse(p.json()));
    if (alpha == 1) {
        auto ds = compare_coeffs("L1", printed::L1_numerator(), p.num);
        bool known = ds.size() == 1 && ds[0].recomputed == "780000";
        rep.add("published numerator comparison", ds.empty() || known,
                nlohmann::json::parse(discrepancies_json(ds)));
    }
    return rep;
}

Report cmd_appendix_a(const Options&) {
    Report rep{"appendix-a"};
    UMonomialEngine eng;
    for (int k = 0; k < 5; ++k) {
        auto p = eng.direct(0, k, 0);
        auto ds = compare_coeffs("U0(x^" + std::to_string(k) + ")",
                                 printed::u0_identities()[k], p.num);
        bool ok = ds.empty() ||
                  (k == 0 && ds.size() == 1 && ds[0].recomputed == "780000");
        rep.add("U0(x^" + std::to_string(k) + ") identity", ok,
                nlohmann::json::parse(discrepancies_json(ds)));
    }
    return rep;
}

Report cmd_modeq(const Options& opt) {
    Report rep{"modeq"};
    long T = opt.precision > 50 ? opt.precision : 1000;
    rep.add("x-equation residual = 0 to O(q^" + std::to_string(T) + ")",
            modeq_residual('x', T).is_zero());
    rep.add("z-equation residual = 0 to O(q^" + std::to_string(T) + ")",
            modeq_residual('z', T).is_zero());
    Rat fit = fit_b3_z2_coefficient(std::min(T, 400L));
    rep.add("fitted z^2 coefficient of b_3", fit == Rat(-35),
            {{"fit", rat_str(fit)}});
    return rep;
}

Report cmd_h_table(const Options& opt) {
    Report rep{"h-table"};
    UMonomialEngine eng;
    long m_max = 25, n_max = 15;
    auto h0 = h_table(eng, 0, m_max, n_max);
    auto h1 = h_table(eng, 1, m_max, n_max);
    rep.add("h_0 integral on m <= 25, n <= 15", true,
            {{"entries", h0.entries.size()}});
    rep.add("h_1 integral on m <= 25, n <= 15", true,
            {{"entries", h1.entries.size()}});
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!f) throw std::runtime_error("cannot open output file " + opt.out);
        f << h0.csv() << h1.csv();
        std::cerr << "wrote " << opt.out << "\n";
    }
    return rep;
}

Report cmd_h_congruences(const Options&) {
    Report rep{"h-congruences"};
    UMonomialEngine eng;
    auto h0 = h_table(eng, 0, 25, 15);
    auto h1 = h_table(eng, 1, 25, 15);
    bool cong = true;
    for (auto* t : {&h0, &h1})
        for (auto& [key, h] : t->entries) {
            auto [m, n, r] = key;
            (void)h;
            if (n >= 5 && mod_long(t->at(m, n, r) - t->at(m, n - 5, r), 5) != 0)
                cong = false;
        }
    rep.add("h_i(m,n,r) = h_i(m,n-5,r) mod 5", cong);
    bool matrix = true;
    for (long n = 0; n <= 15; ++n) {
        for (long m = 1; m <= 5; ++m)
            matrix &= mod_long(h1.at(m, n, 1), 5) == printed::h1_residue_matrix()[0][m - 1];
        for (long m = 4; m <= 8; ++m)
            matrix &= mod_long(h1.at(m, n, 2), 5) == printed::h1_residue_matrix()[1][m - 4];
    }
    rep.add("2x5 residue matrix of h_1", matrix);
    return rep;
}

Report cmd_that_verify(const Options&) {
    Report rep{"that-verify"};
    UMonomialEngine eng;
    auto h1 = h_table(eng, 1, 10, 0);
    auto h0 = h_table(eng, 0, 2, 0);
    std::vector<LinearForm> t(9);
    for (long w = 1; w <= 8; ++w) {
        t[w] = t_hat(w, h1, h0);
        auto ds = compare_coeffs("t(" + std::to_string(w) + ")",
                                 printed::t_hat_lines()[w], t[w].coeffs);
        rep.add("t(" + std::to_string(w) + ") matches the published line", ds.empty(),
                nlohmann::json::parse(discrepancies_json(ds)));
    }
    auto agg1 = t[1] + t[2] + t[3] + scale(t[4], Rat(2)) + t[5];
    auto agg2 = scale(t[4], Rat(4)) + t[6] + t[7] + t[8];
    auto ds1 = compare_coeffs("aggregate1", printed::aggregate_1(), agg1.coeffs);
    bool known = ds1.size() == 1 && ds1[0].printed == "5132732957" &&
                 ds1[0].recomputed == "51327329578";
    rep.add("first aggregate vs published (one expected digit drop at s(7))", known,
            nlohmann::json::parse(discrepancies_json(ds1)));
    rep.add("second aggregate vs published",
            compare_coeffs("aggregate2", printed::aggregate_2(), agg2.coeffs).empty());
    auto red1 = ideal_membership(agg1);
    auto red2 = ideal_membership(agg2);
    rep.add("first aggregate reduces to 0 mod <5, g1, g2>", red1.member,
            nlohmann::json::parse(red1.json()));
    rep.add("second aggregate reduces to 0 mod <5, g1, g2>", red2.member,
            nlohmann::json::parse(red2.json()));
    return rep;
}

Report cmd_main2_verify(const Options& opt) {
    Report rep{"main2-verify"};
    long alpha = opt.alpha > 0 ? opt.alpha : 4;
    auto r = verify_main2(alpha);
    for (auto& a : r.per_alpha)
        rep.add("alpha = " + std::to_string(a.alpha) + ": integral and V-member",
                a.integral && a.v_member,
                {{"psi", a.psi_value.get_str()}, {"degree", a.degree}});
    return rep;
}

Report cmd_sturm_verify(const Options&) {
    Report rep{"sturm-verify"};
    auto j1 = std::async(std::launch::async,
                         [] { return verify_isolated(SturmJob(5, 49, 31, 7, 109)); });
    auto j2 = std::async(std::launch::async,
                         [] { return verify_isolated(SturmJob(9, 121, 36, 11, 256)); });
    auto b1 = std::async(std::launch::async, [] { return build_F_check(1); });
    auto b2 = std::async(std::launch::async, [] { return build_F_check(2); });
    auto r1 = j1.get();
    auto r2 = j2.get();
    rep.add("a_5(49n+31) = 0 mod 7 up to the bound", r1.pass,
            nlohmann::json::parse(r1.json()));
    rep.add("a_9(121n+36) = 0 mod 11 up to the bound", r2.pass,
            nlohmann::json::parse(r2.json()));
    auto f1 = b1.get();
    auto f2 = b2.get();
    // The exact form of the U-image identity does not hold over Z (the f_1
    // power substitution in its derivation is a mod-p step); report both the
    // exact and the mod-p status.
    rep.add("U_49 image identity, exact over Z", f1.exact_equal,
            nlohmann::json::parse(f1.json()));
    rep.add("U_49 image identity mod 7", f1.congruent_mod_p);
    rep.add("U_121 image identity, exact over Z", f2.exact_equal,
            nlohmann::json::parse(f2.json()));
    rep.add("U_121 image identity mod 11", f2.congruent_mod_p);
    return rep;
}

Report cmd_all(const Options& opt) {
    Report rep{"all"};
    using Clock = std::chrono::steady_clock;
    struct Item {
        std::string name;
        std::function<Report()> fn;
    };
    Options eta_opt = opt;
    eta_opt.eta = "50: 1^-1 2^-2 25^1 50^2";
    Options ladder_opt = opt;
    ladder_opt.alpha = 2;
    ladder_opt.nmax = opt.nmax > 0 ? opt.nmax : 200;
    // listed in dependency order: series-level checks, the ladder, the
    // localization machinery, the isolated congruences
    std::vector<Item> items = {
        {"eta-check", [&] { return cmd_eta_check(eta_opt); }},
        {"table1", [&] { return cmd_table1(opt); }},
        {"radu-bounds", [&] { return cmd_radu_bounds(opt); }},
        {"modeq", [&] { return cmd_modeq(opt); }},
        {"ladder-verify", [&] { return cmd_ladder_verify(ladder_opt); }},
        {"xpoly", [&] { return cmd_xpoly(opt); }},
        {"appendix-a", [&] { return cmd_appendix_a(opt); }},
        {"h-congruences", [&] { return cmd_h_congruences(opt); }},
        {"that-verify", [&] { return cmd_that_verify(opt); }},
        {"main2-verify", [&] { return cmd_main2_verify(opt); }},
        {"sturm-verify", [&] { return cmd_sturm_verify(opt); }},
    };
    // independent sub-jobs run in parallel; assembly stays in listed order
    struct Timed {
        Report rep;
        long ms;
    };
    std::vector<std::future<Timed>> futs;
    for (auto& item : items)
        futs.push_back(std::async(std::launch::async, [&item] {
            auto t0 = Clock::now();
            Report r = item.fn();
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          Clock::now() - t0)
                          .count();
            return Timed{std::move(r), static_cast<long>(ms)};
        }));
    for (size_t k = 0; k < items.size(); ++k) {
        Timed tr = futs[k].get();
        std::cerr << items[k].name << ": " << tr.ms << " ms\n";
        for (auto& c : tr.rep.checks)
            rep.add(items[k].name + ": " + c.name, c.pass, c.details);
    }
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series verification toolkit for the a_3 congruence family"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--precision", opt.precision, "working precision T");
    app.add_option("--alpha", opt.alpha, "ladder index");
    app.add_option("--nmax", opt.nmax, "progression window");
    app.add_option("--modulus", opt.modulus, "override modulus");
    app.add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", opt.out, "write the report to a file");

    std::map<std::string, Report (*)(const Options&)> simple = {
        {"expand", cmd_expand},           {"eta-check", cmd_eta_check},
        {"cusp-orders", cmd_cusp_orders}, {"table1", cmd_table1},
        {"radu-bounds", cmd_radu_bounds}, {"ladder-verify", cmd_ladder_verify},
        {"xpoly", cmd_xpoly},             {"appendix-a", cmd_appendix_a},
        {"modeq", cmd_modeq},             {"h-table", cmd_h_table},
        {"h-congruences", cmd_h_congruences}, {"that-verify", cmd_that_verify},
        {"main2-verify", cmd_main2_verify},   {"sturm-verify", cmd_sturm_verify},
        {"all", cmd_all},
    };
    std::map<std::string, std::string> help = {
        {"expand", "q-expansion of an eta-quotient"},
        {"eta-check", "modularity criterion report"},
        {"cusp-orders", "orders of an eta-quotient at every cusp of its level"},
        {"table1", "the 12-row cusp-order table over level 50"},
        {"radu-bounds", "order lower bounds for the first ladder element"},
        {"ladder-verify", "congruence family check at one alpha"},
        {"xpoly", "localized form of L_alpha"},
        {"appendix-a", "the five initial U^(0)(x^k) identities"},
        {"modeq", "modular-equation residuals and the b_3 fit"},
        {"h-table", "discrete arrays h_0, h_1 (CSV with --out)"},
        {"h-congruences", "array congruences in n and the residue matrix"},
        {"that-verify", "t-hat lines, aggregates, ideal membership"},
        {"main2-verify", "integrality and V-membership of the ladder"},
        {"sturm-verify", "the two isolated congruences"},
        {"all", "every suite in dependency order (budget on stderr)"},
    };
    std::map<std::string, CLI::App*> subs;
    for (auto& [name, fn] : simple) {
        (void)fn;
        auto* sc = app.add_subcommand(name, help[name]);
        sc->fallthrough();  // parent-level flags may follow the subcommand
        if (name == "expand" || name == "eta-check" || name == "cusp-orders")
            sc->add_option("eta", opt.eta, "eta-quotient, e.g. \"50: 1^-1 2^-2 25^1 50^2\"")
                ->required();
        subs[name] = sc;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (auto& [name, fn] : simple) {
            if (subs[name]->parsed()) {
                Report rep = fn(opt);
                emit(rep, opt);
                return rep.pass() ? 0 : 1;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
