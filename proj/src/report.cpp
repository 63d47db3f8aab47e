#include "taut/report.hpp"

#include <sstream>

namespace taut {

bool InvariantReport::all_checks_pass() const {
    for (const auto& c : cross_checks) {
        if (!c.pass) return false;
    }
    return true;
}

void validate(const InvariantReport& r) {
    if (r.graded && euler(*r.graded) != r.euler) {
        throw ConsistencyError(r.formula_id + ": euler " + r.euler.get_str() + " differs from graded dims " +
                               r.graded->to_string());
    }
}

nlohmann::json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

nlohmann::json to_json(const InvariantReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.cross_checks) checks.push_back({{"oracle_id", c.oracle_id}, {"pass", c.pass}});
    nlohmann::json j = {
        {"formula_id", r.formula_id},
        {"n", r.n},
        {"k", r.k},
        {"l", r.l},
        {"inputs", r.inputs},
        {"euler", int_to_json(r.euler)},
        {"graded", r.graded ? to_json(*r.graded) : nlohmann::json(nullptr)},
        {"cross_checks", checks},
        {"flags", r.flags},
    };
    if (!r.extra.empty()) j["extra"] = r.extra;
    return j;
}

namespace {

// Flattens a JSON value into a CSV-safe token (no commas or quotes).
std::string flat(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) {
            if (!out.empty()) out += '|';
            out += x.is_array() ? "[" + flat(x) + "]" : flat(x);
        }
        return out;
    }
    return v.dump();
}

} // namespace

std::string cross_check_cell(const InvariantReport& r) {
    std::string out;
    auto add = [&out](const std::string& item) {
        if (!out.empty()) out += ';';
        out += item;
    };
    for (const auto& c : r.cross_checks) add(c.oracle_id + (c.pass ? "=pass" : "=fail"));
    for (const auto& f : r.flags) add("flag=" + f);
    for (const auto& [key, val] : r.extra) add(key + "=" + flat(val));
    return out;
}

std::string to_csv_row(const InvariantReport& r) {
    std::ostringstream os;
    os << r.formula_id << ',' << r.n << ',' << r.k << ',' << r.l << ',' << r.euler.get_str() << ','
       << (r.graded ? r.graded->to_compact() : std::string()) << ',' << cross_check_cell(r);
    return os.str();
}

std::string render_csv(const std::vector<InvariantReport>& rows) {
    std::string out = std::string(kCsvHeader) + '\n';
    for (const auto& r : rows) out += to_csv_row(r) + '\n';
    return out;
}

std::string render_json(const std::vector<InvariantReport>& rows, const nlohmann::json& meta) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    nlohmann::json doc = {{"meta", meta}, {"reports", arr}};
    return doc.dump(2) + '\n';
}

} // namespace taut
