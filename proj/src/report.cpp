#include "cubic/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace cubic {

bool Report::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["config"] = {{"p", config.p},       {"precision", config.precision}, {"c", config.c},
                   {"order", config.order}, {"seed", config.seed},         {"level", config.level}};
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"inputs", c.inputs},
                               {"expected", c.expected},
                               {"provenance", c.provenance},
                               {"computed", c.computed},
                               {"pass", c.pass}});
    }
    return j.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        out += ch;
        if (ch == '"') out += '"';
    }
    out += '"';
    return out;
}

}  // namespace

std::string Report::to_csv() const {
    std::string out = "name,inputs,expected,provenance,computed,pass\n";
    for (const CheckResult& c : checks) {
        out += csv_field(c.name) + "," + csv_field(c.inputs) + "," + csv_field(c.expected) + "," +
               csv_field(c.provenance) + "," + csv_field(c.computed) + "," +
               (c.pass ? "true" : "false") + "\n";
    }
    return out;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
}

}  // namespace cubic
