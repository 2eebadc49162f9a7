#include "qcong/report.hpp"

namespace qcong {

void Report::add(std::string name, bool p, nlohmann::json details) {
    checks.push_back({std::move(name), p, std::move(details)});
}

bool Report::pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string Report::json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& c : checks) {
        nlohmann::json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.details.is_null() && !(c.details.is_object() && c.details.empty()))
            j["details"] = c.details;
        arr.push_back(std::move(j));
    }
    return nlohmann::json{{"schema", "qcong-report/1"},
                          {"command", command},
                          {"pass", pass()},
                          {"checks", arr}}
        .dump(2);
}

std::string Report::text() const {
    std::string out;
    for (auto& c : checks) {
        out += c.name;
        out += '\t';
        out += c.pass ? "pass" : "fail";
        if (!c.details.is_null() && !(c.details.is_object() && c.details.empty())) {
            out += '\t';
            out += c.details.dump();
        }
        out += '\n';
    }
    out += command + "\t" + (pass() ? "pass" : "fail") + "\n";
    return out;
}

}  // namespace qcong
