/*
 * ideal.hpp
 * An ideal is a generator list in a ring context plus a write-once cache of
 * its reduced Groebner basis, the canonical form used for equality.
 */
#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "sprees/groebner.hpp"
#include "sprees/polynomial.hpp"

namespace sprees {

template <class K>
class Ideal {
  public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}

    Ideal(RingPtr ring, std::vector<Polynomial<K>> gens) : ring_(std::move(ring)) {
        for (auto& g : gens) {
            require_same_ring(ring_, g.ring());
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_), cache_(o.cache_snapshot()) {}
    Ideal& operator=(const Ideal& o) {
        if (this != &o) {
            ring_ = o.ring_;
            gens_ = o.gens_;
            std::lock_guard<std::mutex> lk(mu_);
            cache_ = o.cache_snapshot();
        }
        return *this;
    }
    Ideal(Ideal&& o) noexcept
        : ring_(std::move(o.ring_)), gens_(std::move(o.gens_)), cache_(o.cache_snapshot()) {}
    Ideal& operator=(Ideal&& o) {
        if (this != &o) {
            ring_ = std::move(o.ring_);
            gens_ = std::move(o.gens_);
            std::lock_guard<std::mutex> lk(mu_);
            cache_ = o.cache_snapshot();
        }
        return *this;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial<K>>& generators() const { return gens_; }
    bool trivially_zero() const { return gens_.empty(); }

    // Computes on first use; idempotent fill (the reduced basis is unique).
    const GroebnerBasis<K>& reduced_gb(
        const ComputationBudget& budget = ComputationBudget::standard()) const {
        {
            std::lock_guard<std::mutex> lk(mu_);
            if (cache_) return *cache_;
        }
        auto gb = std::make_shared<GroebnerBasis<K>>(buchberger(ring_, gens_, budget));
        std::lock_guard<std::mutex> lk(mu_);
        if (!cache_) cache_ = std::move(gb);
        return *cache_;
    }

    bool has_cached_gb() const {
        std::lock_guard<std::mutex> lk(mu_);
        return cache_ != nullptr;
    }

    // For constructions that already know the reduced basis of their result.
    void prime_cache(GroebnerBasis<K> gb) const {
        std::lock_guard<std::mutex> lk(mu_);
        if (!cache_) cache_ = std::make_shared<GroebnerBasis<K>>(std::move(gb));
    }

  private:
    std::shared_ptr<GroebnerBasis<K>> cache_snapshot() const {
        std::lock_guard<std::mutex> lk(mu_);
        return cache_;
    }

    RingPtr ring_;
    std::vector<Polynomial<K>> gens_;
    mutable std::mutex mu_;
    mutable std::shared_ptr<GroebnerBasis<K>> cache_;
};

template <class K>
bool member(const Polynomial<K>& f, const Ideal<K>& I,
            const ComputationBudget& budget = ComputationBudget::standard()) {
    require_same_ring(f.ring(), I.ring());
    if (f.is_zero()) return true;
    return normal_form(f, I.reduced_gb(budget).elements).is_zero();
}

template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J,
                 const ComputationBudget& budget = ComputationBudget::standard()) {
    require_same_ring(I.ring(), J.ring());
    const auto& a = I.reduced_gb(budget).elements;
    const auto& b = J.reduced_gb(budget).elements;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// Every generator of J lies in I.
template <class K>
bool ideal_contains(const Ideal<K>& I, const Ideal<K>& J,
                    const ComputationBudget& budget = ComputationBudget::standard()) {
    for (const auto& g : J.generators())
        if (!member(g, I, budget)) return false;
    return true;
}

template <class K>
bool is_unit_ideal(const Ideal<K>& I,
                   const ComputationBudget& budget = ComputationBudget::standard()) {
    const auto& gb = I.reduced_gb(budget).elements;
    return gb.size() == 1 && gb.front().size() == 1 && gb.front().leading_monomial().is_one();
}

}  // namespace sprees
