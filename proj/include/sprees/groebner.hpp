/*
 * groebner.hpp
 * Buchberger's algorithm with the Gebauer-Moeller pair update, normal
 * forms, and reduced bases. Deterministic: normal selection strategy
 * (smallest lcm in the term order, ties by pair index), first-divisor
 * reduction in basis order.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "sprees/budget.hpp"
#include "sprees/polynomial.hpp"

namespace sprees {

template <class K>
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial<K>> elements;  // monic
    bool reduced = false;
    BudgetStats stats;
};

// Full remainder: no monomial of the result is divisible by any leading
// monomial of G. f - result lies in (G).
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G) {
    if (G.empty() || f.is_zero()) return f;
    const RingPtr& ring = f.ring();
    Polynomial<K> tail = f;
    std::vector<typename Polynomial<K>::Term> kept;
    while (!tail.is_zero()) {
        bool reduced_once = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            if (mono_divides(g.leading_monomial(), tail.leading_monomial())) {
                K c = tail.leading_coeff() / g.leading_coeff();
                Monomial m = mono_div(tail.leading_monomial(), g.leading_monomial());
                tail = tail.sub_scaled(c, m, g);
                reduced_once = true;
                break;
            }
        }
        if (!reduced_once) {
            // leading term is irreducible; peel it off
            kept.push_back(tail.terms().front());
            std::vector<typename Polynomial<K>::Term> rest(tail.terms().begin() + 1,
                                                           tail.terms().end());
            tail = Polynomial<K>(ring, std::move(rest));
        }
    }
    return Polynomial<K>(ring, std::move(kept));
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
    const Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial<K> left = Polynomial<K>::monomial(
        f.ring(), field_traits<K>::one(f.ring()->field), mono_div(l, f.leading_monomial()));
    Polynomial<K> right = Polynomial<K>::monomial(
        g.ring(), f.leading_coeff() / g.leading_coeff(), mono_div(l, g.leading_monomial()));
    return left * f - right * g;
}

namespace detail {

struct Pair {
    std::size_t i, j;  // i < j
    Monomial lcm;
    std::int64_t deg;
};

template <class K>
class PairSet {
  public:
    explicit PairSet(const RingPtr& ring) : ring_(ring) {}

    // Gebauer-Moeller update on appending basis element t = basis[t_idx].
    void update(const std::vector<Polynomial<K>>& basis, std::size_t t_idx) {
        const Monomial& mt = basis[t_idx].leading_monomial();

        std::vector<Pair> fresh;
        fresh.reserve(t_idx);
        for (std::size_t i = 0; i < t_idx; ++i) {
            Monomial l = mono_lcm(basis[i].leading_monomial(), mt);
            fresh.push_back(Pair{i, t_idx, std::move(l), 0});
            fresh.back().deg = fresh.back().lcm.degree();
        }

        // M criterion: drop (i,t) when some (j,t) has lcm properly dividing.
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (fresh[b].lcm != fresh[a].lcm &&
                    mono_divides(fresh[b].lcm, fresh[a].lcm)) {
                    drop[a] = true;
                    break;
                }
            }
        }
        // F criterion: among equal lcms keep the first; product criterion:
        // if any member of the class has coprime leading monomials, drop all.
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            bool coprime_in_class = mono_coprime(basis[fresh[a].i].leading_monomial(), mt);
            for (std::size_t b = a + 1; b < fresh.size(); ++b) {
                if (drop[b] || fresh[b].lcm != fresh[a].lcm) continue;
                drop[b] = true;
                if (mono_coprime(basis[fresh[b].i].leading_monomial(), mt))
                    coprime_in_class = true;
            }
            if (coprime_in_class) drop[a] = true;
        }

        // B criterion: prune old pairs strictly refined by the new element.
        std::vector<Pair> keep;
        keep.reserve(pairs_.size());
        for (auto& p : pairs_) {
            bool gone = mono_divides(mt, p.lcm) &&
                        mono_lcm(basis[p.i].leading_monomial(), mt) != p.lcm &&
                        mono_lcm(basis[p.j].leading_monomial(), mt) != p.lcm;
            if (!gone) keep.push_back(std::move(p));
        }
        pairs_ = std::move(keep);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs_.push_back(std::move(fresh[a]));
    }

    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }

    // Normal strategy: smallest lcm in the term order; ties by (j, i).
    Pair pop() {
        std::size_t best = 0;
        for (std::size_t a = 1; a < pairs_.size(); ++a) {
            int c = order_cmp(ring_->order, pairs_[a].lcm, pairs_[best].lcm);
            if (c < 0 ||
                (c == 0 && (pairs_[a].j < pairs_[best].j ||
                            (pairs_[a].j == pairs_[best].j && pairs_[a].i < pairs_[best].i))))
                best = a;
        }
        Pair p = std::move(pairs_[best]);
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
        return p;
    }

  private:
    RingPtr ring_;
    std::vector<Pair> pairs_;
};

}  // namespace detail

// Unique reduced basis: monic, no monomial of any element divisible by the
// leading monomial of another, sorted ascending by leading monomial.
template <class K>
GroebnerBasis<K> reduce_basis(const GroebnerBasis<K>& gb) {
    const RingPtr& ring = gb.ring;
    std::vector<Polynomial<K>> elems;
    for (const auto& g : gb.elements)
        if (!g.is_zero()) elems.push_back(g.monic());

    // autoreduce to a fixpoint: each element fully reduced by the others
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            std::vector<Polynomial<K>> others;
            others.reserve(elems.size() - 1);
            for (std::size_t j = 0; j < elems.size(); ++j)
                if (j != i) others.push_back(elems[j]);
            Polynomial<K> h = normal_form(elems[i], others).monic();
            if (h != elems[i]) {
                changed = true;
                if (h.is_zero()) {
                    elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(i));
                    --i;
                } else {
                    elems[i] = std::move(h);
                }
            }
        }
    }
    std::sort(elems.begin(), elems.end(), [&](const auto& a, const auto& b) {
        return order_cmp(ring->order, a.leading_monomial(), b.leading_monomial()) < 0;
    });

    GroebnerBasis<K> out;
    out.ring = ring;
    out.elements = std::move(elems);
    out.reduced = true;
    out.stats = gb.stats;
    return out;
}

template <class K>
GroebnerBasis<K> buchberger(const RingPtr& ring, const std::vector<Polynomial<K>>& gens,
                            const ComputationBudget& budget = ComputationBudget::standard()) {
    BudgetClock clock;
    BudgetStats stats;

    GroebnerBasis<K> gb;
    gb.ring = ring;

    std::vector<Polynomial<K>> basis;
    detail::PairSet<K> pairs(ring);
    auto add_element = [&](const Polynomial<K>& p) {
        basis.push_back(p.monic());
        pairs.update(basis, basis.size() - 1);
        if (static_cast<std::int64_t>(basis.size()) > budget.max_basis) {
            stats.basis_size = static_cast<std::int64_t>(basis.size());
            stats.seconds = clock.seconds();
            throw BudgetExceeded("budget exceeded: basis size", stats);
        }
    };

    for (const auto& g : gens) {
        require_same_ring(ring, g.ring());
        if (!g.is_zero()) add_element(g);
    }

    while (!pairs.empty()) {
        if (++stats.pairs_processed > budget.max_pairs) {
            stats.basis_size = static_cast<std::int64_t>(basis.size());
            stats.seconds = clock.seconds();
            throw BudgetExceeded("budget exceeded: pair count", stats);
        }
        if ((stats.pairs_processed & 0x3f) == 0 && clock.seconds() > budget.max_seconds) {
            stats.basis_size = static_cast<std::int64_t>(basis.size());
            stats.seconds = clock.seconds();
            throw BudgetExceeded("budget exceeded: wall clock", stats);
        }

        detail::Pair p = pairs.pop();
        if (p.deg > stats.max_degree_seen) stats.max_degree_seen = p.deg;
        if (p.deg > budget.max_total_degree) {
            stats.basis_size = static_cast<std::int64_t>(basis.size());
            stats.seconds = clock.seconds();
            throw BudgetExceeded("budget exceeded: total degree", stats);
        }
        if (mono_coprime(basis[p.i].leading_monomial(), basis[p.j].leading_monomial()))
            continue;  // product criterion (already filtered; harmless recheck)

        Polynomial<K> h = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
        if (!h.is_zero()) add_element(h);
    }

    stats.basis_size = static_cast<std::int64_t>(basis.size());
    stats.seconds = clock.seconds();
    gb.elements = std::move(basis);
    gb.stats = stats;
    gb.reduced = false;
    return reduce_basis(gb);
}

}  // namespace sprees
