/*
 * monomial.hpp
 * Exponent-vector monomials with a cached total degree.
 */
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sprees {

// Exponents stay tiny in this problem family; the cap guards against
// runaway loops, not against legitimate inputs.
inline constexpr int kMaxExponent = 1 << 24;

class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        deg_ = 0;
        for (int e : exps_) {
            if (e < 0 || e > kMaxExponent) throw std::domain_error("exponent out of range");
            deg_ += e;
        }
    }

    std::size_t nvars() const { return exps_.size(); }
    int exp(std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exps() const { return exps_; }
    std::int64_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

    friend Monomial mono_mul(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars())
            throw std::invalid_argument("monomial ring mismatch (variable counts differ)");
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            int s = a.exps_[i] + b.exps_[i];
            if (s > kMaxExponent) throw std::domain_error("exponent overflow");
            r.exps_[i] = s;
        }
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    friend bool mono_divides(const Monomial& a, const Monomial& b) {
        // a | b
        if (a.nvars() != b.nvars())
            throw std::invalid_argument("monomial ring mismatch (variable counts differ)");
        for (std::size_t i = 0; i < a.nvars(); ++i)
            if (a.exps_[i] > b.exps_[i]) return false;
        return true;
    }

    friend Monomial mono_div(const Monomial& a, const Monomial& b) {
        // a / b, requires b | a
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            r.exps_[i] = a.exps_[i] - b.exps_[i];
            if (r.exps_[i] < 0) throw std::domain_error("non-divisible monomial quotient");
        }
        r.deg_ = a.deg_ - b.deg_;
        return r;
    }

    friend Monomial mono_lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        r.deg_ = 0;
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
            r.deg_ += r.exps_[i];
        }
        return r;
    }

    friend bool mono_coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.nvars(); ++i)
            if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
        return true;
    }

    // Squarefree part, used by the monomial radical.
    Monomial squarefree() const {
        Monomial r(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) r.exps_[i] = exps_[i] > 0 ? 1 : 0;
        r.deg_ = std::accumulate(r.exps_.begin(), r.exps_.end(), std::int64_t(0));
        return r;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < nvars(); ++i)
            if (exps_[i] > 0) s.push_back(i);
        return s;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (is_one()) return "1";
        std::string s;
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (exps_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += names[i];
            if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
        }
        return s;
    }

  private:
    std::vector<int> exps_;
    std::int64_t deg_ = 0;
};

}  // namespace sprees
