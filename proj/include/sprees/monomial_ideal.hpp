/*
 * monomial_ideal.hpp
 * Complete associated-prime computation for monomial ideals via recursive
 * irreducible decomposition. This is the exact oracle the certificate
 * machinery is checked against.
 */
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "sprees/ideal.hpp"

namespace sprees {

template <class K>
bool is_monomial_ideal(const Ideal<K>& I) {
    for (const auto& g : I.generators())
        if (!g.is_monomial()) return false;
    return true;
}

namespace detail {

inline std::vector<Monomial> minimal_monomial_gens(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.exps() < b.exps(); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && mono_divides(gens[j], gens[i])) { redundant = true; break; }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

inline bool in_monomial_ideal(const std::vector<Monomial>& gens, const Monomial& m) {
    for (const auto& g : gens)
        if (mono_divides(g, m)) return true;
    return false;
}

// all components are irreducible: generated by pure powers of distinct vars
inline void irreducible_components(const std::vector<Monomial>& gens,
                                   std::vector<std::vector<Monomial>>& out) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        auto sup = gens[gi].support();
        if (sup.size() < 2) continue;
        // split g = u * v with u the pure power of the first support variable
        std::size_t n = gens[gi].nvars();
        std::vector<int> ue(n, 0), ve(gens[gi].exps());
        ue[sup[0]] = gens[gi].exp(sup[0]);
        ve[sup[0]] = 0;
        for (Monomial piece : {Monomial(ue), Monomial(ve)}) {
            std::vector<Monomial> next = gens;
            next[gi] = piece;
            irreducible_components(minimal_monomial_gens(next), out);
        }
        return;
    }
    out.push_back(gens);  // every generator is a pure power
}

inline std::vector<Monomial> monomial_list_intersect(const std::vector<Monomial>& a,
                                                     const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    for (const auto& f : a)
        for (const auto& g : b) out.push_back(mono_lcm(f, g));
    return minimal_monomial_gens(out);
}

inline bool monomial_list_contains(const std::vector<Monomial>& big,
                                   const std::vector<Monomial>& small) {
    for (const auto& m : small)
        if (!in_monomial_ideal(big, m)) return false;
    return true;
}

}  // namespace detail

struct MonomialComponent {
    std::vector<Monomial> gens;          // pure powers, minimal
    std::vector<std::size_t> radical;    // support variables, sorted
};

// Irredundant irreducible decomposition. The radicals of the components are
// exactly the associated primes.
template <class K>
std::vector<MonomialComponent> monomial_irreducible_decomposition(const Ideal<K>& I) {
    if (!is_monomial_ideal(I))
        throw std::invalid_argument("monomial decomposition needs a monomial ideal");
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.leading_monomial());
    gens = detail::minimal_monomial_gens(gens);
    if (!gens.empty() && gens.front().is_one())
        return {};  // unit ideal: empty intersection

    if (gens.empty()) {
        // zero ideal: one component, the zero ideal itself
        return {MonomialComponent{{}, {}}};
    }

    std::vector<std::vector<Monomial>> comps;
    detail::irreducible_components(gens, comps);
    // canonicalize and dedupe
    for (auto& c : comps)
        std::sort(c.begin(), c.end(),
                  [](const Monomial& a, const Monomial& b) { return a.exps() < b.exps(); });
    std::sort(comps.begin(), comps.end(),
              [](const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  for (std::size_t i = 0; i < a.size(); ++i)
                      if (!(a[i] == b[i])) return a[i].exps() < b[i].exps();
                  return false;
              });
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

    // drop components containing the intersection of the others
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            std::vector<Monomial> rest;
            bool first = true;
            for (std::size_t j = 0; j < comps.size(); ++j) {
                if (j == i) continue;
                rest = first ? comps[j] : detail::monomial_list_intersect(rest, comps[j]);
                first = false;
            }
            if (first) break;  // single component left
            if (detail::monomial_list_contains(comps[i], rest)) {
                comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }

    std::vector<MonomialComponent> out;
    for (auto& c : comps) {
        std::set<std::size_t> sup;
        for (const auto& m : c)
            for (std::size_t v : m.support()) sup.insert(v);
        out.push_back(MonomialComponent{std::move(c),
                                        std::vector<std::size_t>(sup.begin(), sup.end())});
    }
    return out;
}

// Exact Ass(R/I) for monomial I, as sorted variable-index sets.
template <class K>
std::vector<std::vector<std::size_t>> monomial_ass_primes(const Ideal<K>& I) {
    auto comps = monomial_irreducible_decomposition(I);
    std::set<std::vector<std::size_t>> primes;
    for (const auto& c : comps) primes.insert(c.radical);
    return std::vector<std::vector<std::size_t>>(primes.begin(), primes.end());
}

template <class K>
Ideal<K> monomial_radical(const Ideal<K>& I) {
    if (!is_monomial_ideal(I))
        throw std::invalid_argument("monomial radical needs a monomial ideal");
    std::vector<Monomial> sq;
    for (const auto& g : I.generators()) sq.push_back(g.leading_monomial().squarefree());
    sq = detail::minimal_monomial_gens(sq);
    std::vector<Polynomial<K>> gens;
    for (const auto& m : sq)
        gens.push_back(Polynomial<K>::monomial(I.ring(), field_traits<K>::one(I.ring()->field), m));
    return Ideal<K>(I.ring(), std::move(gens));
}

// variable-generated prime from an index set
template <class K>
Ideal<K> variable_ideal(const RingPtr& ring, const std::vector<std::size_t>& vars) {
    std::vector<Polynomial<K>> gens;
    for (std::size_t v : vars) gens.push_back(Polynomial<K>::variable(ring, v));
    return Ideal<K>(ring, std::move(gens));
}

}  // namespace sprees
