#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace qcong {

// One named sub-check of a verification job.
struct Check {
    std::string name;
    bool pass = false;
    nlohmann::json details;  // stable content only, no timings
};

// Report a verification command emits; JSON schema "qcong-report/1", text
// form is stable tab-separated lines. Byte-for-byte deterministic for a
// given config.
struct Report {
    std::string command;
    std::vector<Check> checks;

    void add(std::string name, bool pass, nlohmann::json details = {});
    bool pass() const;
    std::string json() const;
    std::string text() const;
};

}  // namespace qcong
