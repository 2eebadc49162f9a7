#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qcong/rational.hpp"

namespace qcong {

// A place where a published value and its independent recomputation differ.
// Published values are never silently adopted or corrected: golden tests
// compare and report.
struct Discrepancy {
    std::string where;
    std::string printed;
    std::string recomputed;
};

std::string discrepancies_json(const std::vector<Discrepancy>& ds);

// Published coefficient lists and tables, transcribed as printed.
namespace printed {

// Numerator of L_1 over (1+5x)^5 (the same list opens the U^(0)(1) identity).
const std::map<long, Int>& L1_numerator();

// The five U^(0)(x^k) identities, k = 0..4: numerators over (1+5x)^5.
const std::array<std::map<long, Int>, 5>& u0_identities();

// t-hat(w) linear forms, w = 1..8 (index 0 unused); exact rationals.
const std::array<std::map<long, Rat>, 9>& t_hat_lines();

// The two aggregate forms t(1)+t(2)+t(3)+2t(4)+t(5) and 4t(4)+t(6)+t(7)+t(8).
const std::map<long, Int>& aggregate_1();
const std::map<long, Int>& aggregate_2();

// Cusp-order table rows: label as published, the four function orders, and
// the published combination-column values for k = 0..4.
struct CuspOrderRow {
    std::string label;  // as published, e.g. "[1/25]_10"
    long a, c;          // cusp identity at level 50
    long phi, x, x5, z5;
    std::array<long, 5> combo;
};
const std::vector<CuspOrderRow>& cusp_order_table();

// Residue matrix of the h_1 congruences: rows (h_1(m,n,1))_{m=1..5} and
// (h_1(m,n,2))_{m=4..8} mod 5.
const std::array<std::array<long, 5>, 2>& h1_residue_matrix();

}  // namespace printed

// coefficient-by-coefficient comparison helpers
std::vector<Discrepancy> compare_coeffs(const std::string& where,
                                        const std::map<long, Int>& printed_vals,
                                        const std::map<long, Rat>& recomputed);
std::vector<Discrepancy> compare_coeffs(const std::string& where,
                                        const std::map<long, Rat>& printed_vals,
                                        const std::map<long, Rat>& recomputed);

}  // namespace qcong
