/*
 * grading.hpp
 * Integer multigradings: a weight matrix assigning a degree vector to each
 * variable. Used for homogeneity checks and quasi-homogeneous families.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sprees/monomial.hpp"

namespace sprees {

class Multigrading {
  public:
    Multigrading() = default;
    // weights[r][j] = degree component r of variable j
    explicit Multigrading(std::vector<std::vector<std::int64_t>> weights)
        : weights_(std::move(weights)) {
        for (const auto& row : weights_)
            if (row.size() != weights_.front().size())
                throw std::invalid_argument("ragged grading matrix");
    }

    static Multigrading standard(std::size_t nvars) {
        return Multigrading({std::vector<std::int64_t>(nvars, 1)});
    }
    static Multigrading weights(std::vector<std::int64_t> w) {
        return Multigrading({std::move(w)});
    }

    std::size_t rows() const { return weights_.size(); }
    std::size_t cols() const { return weights_.empty() ? 0 : weights_.front().size(); }
    const std::vector<std::vector<std::int64_t>>& matrix() const { return weights_; }

    bool positive() const {
        // every variable has a positive weight in some row combination;
        // here: first row strictly positive is what the verifiers use
        if (weights_.empty()) return false;
        for (std::int64_t w : weights_.front())
            if (w <= 0) return false;
        return true;
    }

    std::vector<std::int64_t> degree(const Monomial& m) const {
        if (m.nvars() != cols())
            throw std::invalid_argument("grading/ring mismatch");
        std::vector<std::int64_t> d(rows(), 0);
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t j = 0; j < cols(); ++j)
                d[r] += weights_[r][j] * m.exp(j);
        return d;
    }

    bool operator==(const Multigrading& o) const { return weights_ == o.weights_; }

  private:
    std::vector<std::vector<std::int64_t>> weights_;
};

// Result of a homogeneity test: either the common degree vector, or a pair
// of differing term degrees as the inhomogeneity witness.
struct DegreeReport {
    bool homogeneous = true;
    std::vector<std::int64_t> degree;       // valid when homogeneous (zero ideal: empty)
    std::vector<std::int64_t> other_degree; // valid when inhomogeneous
};

}  // namespace sprees
