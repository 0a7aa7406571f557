#include "sprees/report.hpp"

#include <fstream>

namespace sprees {

nlohmann::ordered_json report_to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = r.command;
    j["field"] = r.field;
    j["order"] = r.order;
    j["seed"] = r.seed;
    j["inputs"] = r.inputs;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = c.status;
        if (c.optional) cj["optional"] = true;
        if (!c.data.empty()) cj["data"] = c.data;
        cj["time_ms"] = c.time_ms;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["budget"] = {{"max_pairs", r.budget.max_pairs},
                   {"max_basis", r.budget.max_basis},
                   {"max_total_degree", r.budget.max_total_degree},
                   {"max_seconds", r.budget.max_seconds},
                   {"pairs_processed", r.budget_stats.pairs_processed},
                   {"basis_size", r.budget_stats.basis_size},
                   {"max_degree_seen", r.budget_stats.max_degree_seen}};
    j["status"] = r.budget_exceeded() ? "budget-exceeded" : (r.pass() ? "pass" : "fail");
    return j;
}

std::string report_to_text(const Report& r) {
    std::string out;
    int passed = 0, total = 0;
    for (const auto& c : r.checks) {
        if (c.status == "info") continue;
        ++total;
        if (c.status == "pass") ++passed;
        out += "[" + c.status + "] " + c.name;
        if (!c.data.empty()) out += "  " + c.data.dump();
        out += "\n";
    }
    out += "checks: " + std::to_string(passed) + "/" + std::to_string(total);
    out += r.budget_exceeded() ? "  status: budget-exceeded"
                               : (r.pass() ? "  status: pass" : "  status: fail");
    out += "\n";
    return out;
}

void write_report_file(const Report& r, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write report file '" + path + "'");
    f << report_to_json(r).dump(2) << "\n";
}

}  // namespace sprees
