/*
 * budget.hpp
 * Computation budgets. Exceeding any cap aborts with a structured error,
 * never a wrong answer.
 */
#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sprees {

struct ComputationBudget {
    std::int64_t max_pairs = 200000;       // S-pairs processed per basis run
    std::int64_t max_basis = 50000;        // basis elements per run
    std::int64_t max_total_degree = 60;    // degree of any S-pair lcm
    double max_seconds = 600.0;            // wall clock per basis run

    static ComputationBudget standard() { return {}; }
};

struct BudgetStats {
    std::int64_t pairs_processed = 0;
    std::int64_t basis_size = 0;
    std::int64_t max_degree_seen = 0;
    double seconds = 0.0;
};

class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(std::string what, BudgetStats stats)
        : std::runtime_error(std::move(what)), stats(stats) {}
    BudgetStats stats;
};

class BudgetClock {
  public:
    BudgetClock() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace sprees
