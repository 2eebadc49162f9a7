#include "qcong/printed.hpp"

#include <json.hpp>

namespace qcong {

namespace printed {

namespace {

std::map<long, Int> make_int_map(long lo, const std::vector<const char*>& vals) {
    std::map<long, Int> out;
    for (size_t k = 0; k < vals.size(); ++k) out[lo + static_cast<long>(k)] = Int(vals[k]);
    return out;
}

}  // namespace

const std::map<long, Int>& L1_numerator() {
    static const auto m = make_int_map(
        1, {"1", "40", "794", "9125", "64475", "286000", "7800000", "1200000", "800000"});
    return m;
}

const std::array<std::map<long, Int>, 5>& u0_identities() {
    static const std::array<std::map<long, Int>, 5> arr = {
        L1_numerator(),
        make_int_map(2, {"121", "9484", "321025", "6327850", "81874125", "738217500",
                         "4780850000", "22488800000", "76460000000", "183600000000",
                         "296000000000", "288000000000", "128000000000"}),
        make_int_map(2, {"140", "35245", "2808365", "117376000", "3100037500",
                         "56831205625", "763507050000", "7771895500000",
                         "61182640000000", "376797500000000", "1823151200000000",
                         "6913681600000000", "20347776000000000", "45594240000000000",
                         "75238400000000000", "86272000000000000", "61440000000000000",
                         "20480000000000000"}),
        make_int_map(2, {"64", "59136", "10547620", "850378650", "40530512250",
                         "1298590915000", "30103152240625", "528858099450000",
                         "7262462532500000", "79624221710000000", "707157357820000000",
                         "5136043622800000000", "30674128864000000000",
                         "150938497280000000000", "611049315200000000000",
                         "2024736448000000000000", "5439398912000000000000",
                         "11668643840000000000000", "19525324800000000000000",
                         "24567808000000000000000", "21872640000000000000000",
                         "12288000000000000000000", "3276800000000000000000"}),
        make_int_map(
            2, {"13", "54342", "21645560", "3231134475", "261994052875",
                "13648364390000", "501535624578125", "13781722427603125",
                "294509461032250000", "5030953041631500000", "70082663702580000000",
                "807847198383100000000", "7788550590672000000000",
                "63288334721120000000000", "435690966505600000000000",
                "2548759030153600000000000", "12682694057728000000000000",
                "53629451281920000000000000", "192118376960000000000000000",
                "579878492672000000000000000", "1462436904960000000000000000",
                "3044539924480000000000000000", "5141902131200000000000000000",
                "6869368832000000000000000000", "6987448320000000000000000000",
                "5085593600000000000000000000", "2359296000000000000000000000",
                "524288000000000000000000000"}),
    };
    return arr;
}

const std::array<std::map<long, Rat>, 9>& t_hat_lines() {
    auto fifth = [](const char* v) { return Rat(Int(v), 5); };
    auto whole = [](const char* v) { return Rat(Int(v)); };
    static const std::array<std::map<long, Rat>, 9> arr = {
        std::map<long, Rat>{},  // unused index 0
        std::map<long, Rat>{},  // t-hat(1) = 0
        {{1, fifth("4961")}, {2, fifth("10406")}, {3, fifth("6171")},
         {4, fifth("4575812")}, {5, fifth("2991921")}, {6, whole("236628")},
         {7, whole("58408")}, {8, whole("8848")}},
        {{1, fifth("388844")}, {2, fifth("815624")}, {3, fifth("483684")},
         {4, fifth("1151708938")}, {5, fifth("753195134")}, {6, whole("59571099")},
         {7, whole("14704214")}, {8, whole("2227484")}},
        {{1, whole("2632405")}, {2, whole("5521630")}, {3, whole("3274455")},
         {4, whole("18352874062")}, {5, whole("12003016215")}, {6, whole("4746698523")},
         {7, whole("1171649878")}, {8, whole("177488668")}},
        {{1, whole("51888370")}, {2, whole("108839020")}, {3, whole("64544070")},
         {4, whole("767043871640")}, {5, whole("501666289570")},
         {6, whole("198388915200")}, {7, whole("48969267200")}, {8, whole("7418163200")}},
        {{1, whole("671367825")}, {2, whole("1408234950")}, {3, whole("835116075")},
         {4, whole("20258321552900")}, {5, whole("13249576649825")},
         {6, whole("5239683382500")}, {7, whole("1293335645000")},
         {8, whole("195922370000")}},
        {{1, whole("6053383500")}, {2, whole("12697341000")}, {3, whole("7529818500")},
         {4, whole("371382334240250")}, {5, whole("242896720484750")},
         {6, whole("96056103747375")}, {7, whole("23709978986750")},
         {8, whole("3591732195500")}},
        {{1, whole("39202970000")}, {2, whole("82230620000")}, {3, whole("48764670000")},
         {4, whole("4989377344380000")}, {5, whole("3263230087870000")},
         {6, whole("1290479615910000")}, {7, whole("318535141260000")},
         {8, whole("48253645560000")}},
    };
    return arr;
}

const std::map<long, Int>& aggregate_1() {
    static const auto m = make_int_map(
        1, {"57231941", "120047486", "71190951", "803980876714", "525823559411",
            "207942119973", "5132732957", "7775376868"});
    return m;
}

const std::map<long, Int>& aggregate_2() {
    static const auto m = make_int_map(
        1, {"45938250945", "96358282470", "57142702395", "5381091411669398",
            "3519424397069435", "1391794389833967", "343543142491262",
            "52042010080172"});
    return m;
}

const std::vector<CuspOrderRow>& cusp_order_table() {
    static const std::vector<CuspOrderRow> rows = {
        {"[inf]_10", 1, 50, 5, 1, 5, 0, {-140, -139, -138, -137, -136}},
        {"[1/25]_10", 1, 25, 4, 0, 0, 0, {4, 4, 4, 4, 4}},
        {"[1/10]_10", 1, 10, 0, 1, 0, 1, {5, 6, 7, 8, 9}},
        {"[1/5]_10", 1, 5, 0, 0, -1, -1, {4, 4, 4, 4, 4}},
        {"[3/10]_10", 3, 10, 0, 1, 0, 1, {5, 6, 7, 8, 9}},
        {"[2/5]_10", 2, 5, 0, 0, -1, -1, {4, 4, 4, 4, 4}},
        {"[1/2]_10", 1, 2, -5, 0, 0, 1, {0, 0, 0, 0, 0}},
        {"[3/5]_10", 3, 5, 0, 0, -1, -1, {4, 4, 4, 4, 4}},
        {"[7/10]_10", 7, 10, 0, 1, 0, 1, {5, 6, 7, 8, 9}},
        {"[4/5]_10", 4, 5, 0, 0, -1, -1, {4, 4, 4, 4, 4}},
        {"[9/10]_10", 9, 10, 0, 1, 0, 1, {5, 6, 7, 8, 9}},
        {"[0]_10", 0, 1, -4, -5, -1, -1, {20, 15, 10, 5, 0}},
    };
    return rows;
}

const std::array<std::array<long, 5>, 2>& h1_residue_matrix() {
    static const std::array<std::array<long, 5>, 2> m = {{{1, 1, 1, 2, 1},
                                                          {4, 0, 1, 1, 1}}};
    return m;
}

}  // namespace printed

std::string discrepancies_json(const std::vector<Discrepancy>& ds) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& d : ds)
        arr.push_back({{"where", d.where}, {"printed", d.printed}, {"recomputed", d.recomputed}});
    return arr.dump();
}

std::vector<Discrepancy> compare_coeffs(const std::string& where,
                                        const std::map<long, Rat>& printed_vals,
                                        const std::map<long, Rat>& recomputed) {
    std::vector<Discrepancy> out;
    auto keyname = [&](long k) { return where + " x^" + std::to_string(k); };
    for (auto& [k, pv] : printed_vals) {
        auto it = recomputed.find(k);
        Rat rv = (it == recomputed.end()) ? Rat(0) : it->second;
        if (rv != pv) out.push_back({keyname(k), rat_str(pv), rat_str(rv)});
    }
    for (auto& [k, rv] : recomputed) {
        if (!printed_vals.count(k)) out.push_back({keyname(k), "0", rat_str(rv)});
    }
    return out;
}

std::vector<Discrepancy> compare_coeffs(const std::string& where,
                                        const std::map<long, Int>& printed_vals,
                                        const std::map<long, Rat>& recomputed) {
    std::map<long, Rat> p;
    for (auto& [k, v] : printed_vals) p[k] = Rat(v);
    return compare_coeffs(where, p, recomputed);
}

}  // namespace qcong
