#include "qcong/partitions.hpp"

#include <json.hpp>

namespace qcong {

QSeries generating_series(long d, long T) {
    if (d < 1) throw std::invalid_argument("generating_series: d must be >= 1");
    if (T < 1) throw std::invalid_argument("generating_series: T must be >= 1");
    EtaProductSpec spec;
    spec.factors.emplace_back(1, -1);
    if (d > 1) spec.factors.emplace_back(2, -(d - 1));
    return eta_product(spec, T);
}

PartitionTable table_from_series(long d, long N) {
    QSeries s = generating_series(d, N + 1);
    PartitionTable t;
    t.d = d;
    t.values.reserve(N + 1);
    for (long n = 0; n <= N; ++n) {
        const Rat& c = s.at(n);
        if (c.get_den() != 1)
            throw non_integral_error("table_from_series: non-integral coefficient");
        t.values.emplace_back(c.get_num());
    }
    return t;
}

PartitionTable dp_oracle(long d, long N) {
    if (d < 1) throw std::invalid_argument("dp_oracle: d must be >= 1");
    if (N < 0) throw std::invalid_argument("dp_oracle: N must be >= 0");
    PartitionTable t;
    t.d = d;
    t.values.assign(N + 1, Int(0));
    t.values[0] = 1;
    for (long part = 1; part <= N; ++part) {
        long copies = (part % 2 == 0) ? d : 1;
        for (long c = 0; c < copies; ++c)
            for (long n = part; n <= N; ++n) t.values[n] += t.values[n - part];
    }
    return t;
}

std::vector<Int> progression_values(const PartitionTable& table, long m, long t,
                                    long count) {
    if (m < 1 || t < 0 || count < 1)
        throw std::invalid_argument("progression_values: bad arguments");
    if (m * (count - 1) + t > table.max_n())
        throw std::out_of_range("progression_values: table holds a_d(0.." +
                                std::to_string(table.max_n()) + "), need index " +
                                std::to_string(m * (count - 1) + t));
    std::vector<Int> out;
    out.reserve(count);
    for (long n = 0; n < count; ++n) out.push_back(table.values[m * n + t]);
    return out;
}

std::string PartitionTable::json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& v : values) arr.push_back(v.get_str());
    return arr.dump();
}

}  // namespace qcong
