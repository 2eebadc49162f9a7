#pragma once

#include <vector>

#include "qcong/qseries.hpp"

namespace qcong {

// a_d(n): partitions of n with unrestricted odd parts and d-colored even
// parts. a_1 = p, a_2 = Chan's cubic partitions.
struct PartitionTable {
    long d = 1;
    std::vector<Int> values;  // a_d(0..N)

    long max_n() const { return static_cast<long>(values.size()) - 1; }
    std::string json() const;  // array of decimal strings
};

// Generating function 1/(f_1 f_2^{d-1}) to O(q^T); d = 1 is the classical
// partition series.
QSeries generating_series(long d, long T);

// Same coefficients as a table, via the series route; integrality asserted.
PartitionTable table_from_series(long d, long N);

// Independent route: coin-change dynamic programming, no series machinery.
// Each even part size contributes d item types.
PartitionTable dp_oracle(long d, long N);

// [a_d(t), a_d(m+t), a_d(2m+t), ...], count values.
std::vector<Int> progression_values(const PartitionTable& table, long m, long t,
                                    long count);

}  // namespace qcong
