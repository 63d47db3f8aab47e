#pragma once

#include "taut/graded.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace taut {

struct CrossCheck {
    std::string oracle_id;
    bool pass = false;
};

// One computed invariant: a table cell of the CLI.
struct InvariantReport {
    std::string formula_id;
    int n = 0;
    int k = 0;
    int l = 0;
    nlohmann::json inputs = nlohmann::json::object();
    std::optional<GradedDim> graded;
    Int euler;
    std::vector<CrossCheck> cross_checks;
    std::vector<std::string> flags;
    // Auxiliary named values (e.g. the naive prediction of rank3_check).
    std::map<std::string, nlohmann::json> extra;

    bool all_checks_pass() const;
};

// Throws ConsistencyError when a graded report's euler disagrees with its graded dims.
void validate(const InvariantReport& r);

nlohmann::json int_to_json(const Int& x);
nlohmann::json to_json(const InvariantReport& r);

inline constexpr const char* kCsvHeader = "formula_id,n,k,l,euler,graded,cross_checks";

// The cross_checks cell: "id=pass;id=fail;flag=name;key=value".
std::string cross_check_cell(const InvariantReport& r);
std::string to_csv_row(const InvariantReport& r);
std::string render_csv(const std::vector<InvariantReport>& rows);
std::string render_json(const std::vector<InvariantReport>& rows, const nlohmann::json& meta);

} // namespace taut
