#include "hilbert/json_io.hpp"

namespace hilbert {

using nlohmann::ordered_json;

ordered_json curve_to_json(const Curve& c) {
    ordered_json j;
    j["schema"] = kSchemaTag;
    j["family"] = c.family;
    j["order"] = c.order;
    j["entry"] = {entry_cell(c).col, entry_cell(c).row};
    j["exit"] = {exit_cell(c).col, exit_cell(c).row};
    ordered_json cells = ordered_json::array();
    for (Cell cell : c.cells) {
        cells.push_back({cell.col, cell.row});
    }
    j["cells"] = std::move(cells);
    return j;
}

std::string curve_to_csv(const Curve& c) {
    std::string out;
    out.reserve(c.cells.size() * 8);
    for (Cell cell : c.cells) {
        out += std::to_string(cell.col);
        out += ',';
        out += std::to_string(cell.row);
        out += '\n';
    }
    return out;
}

ordered_json report_to_json(const CheckReport& r) {
    ordered_json j;
    j["check"] = r.check;
    j["family"] = r.family;
    j["order"] = r.order;
    j["passed"] = r.passed;
    if (r.violation_index) j["violation_index"] = *r.violation_index;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

ordered_json reports_to_json(const std::vector<CheckReport>& reports, int max_order) {
    ordered_json j;
    j["schema"] = kSchemaTag;
    j["max_order"] = max_order;
    j["all_passed"] = all_passed(reports);
    ordered_json checks = ordered_json::array();
    for (const CheckReport& r : reports) checks.push_back(report_to_json(r));
    j["checks"] = std::move(checks);
    return j;
}

ordered_json locality_to_json(const LocalityReport& r) {
    ordered_json j;
    j["schema"] = kSchemaTag;
    j["family"] = r.family;
    j["order"] = r.order;
    j["metric"] = "artifact-defined: squared cell distance over index lag";
    j["exhaustive"] = r.exhaustive;
    j["jump_count"] = r.jump_count;
    ordered_json lags = ordered_json::array();
    for (const LocalityLag& lag : r.lags) {
        ordered_json l;
        l["lag"] = lag.lag;
        l["pairs"] = lag.pair_count;
        l["worst"] = lag.worst;
        l["mean"] = lag.mean;
        l["worst_ratio"] = {lag.worst_num, lag.worst_den};
        l["mean_ratio"] = {lag.mean_num, lag.mean_den};
        lags.push_back(std::move(l));
    }
    j["lags"] = std::move(lags);
    return j;
}

}  // namespace hilbert
