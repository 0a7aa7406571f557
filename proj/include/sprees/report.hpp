/*
 * report.hpp
 * Machine-readable verification reports. Byte-stable for a fixed seed,
 * field, order, and version once timing fields are stripped.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sprees/budget.hpp"

namespace sprees {

inline constexpr const char* kToolName = "sprees";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

struct CheckRecord {
    std::string name;
    std::string status;  // pass | fail | inconclusive | budget-exceeded | info
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    double time_ms = 0.0;
    bool optional = false;  // optional checks do not gate the overall status

    // budget-exceeded is reported separately (exit code 3), it is not a
    // verification failure
    bool gating_failure() const { return !optional && status == "fail"; }
};

struct Report {
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    std::vector<CheckRecord> checks;
    std::string field;
    std::string order;
    std::uint64_t seed = 0;
    BudgetStats budget_stats;
    ComputationBudget budget;

    bool pass() const {
        for (const auto& c : checks)
            if (c.gating_failure()) return false;
        return true;
    }
    bool budget_exceeded() const {
        for (const auto& c : checks)
            if (c.status == "budget-exceeded") return true;
        return false;
    }

    void add(CheckRecord c) { checks.push_back(std::move(c)); }
};

nlohmann::ordered_json report_to_json(const Report& r);
std::string report_to_text(const Report& r);
void write_report_file(const Report& r, const std::string& path);

}  // namespace sprees
