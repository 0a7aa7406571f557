/*
 * Shared test helpers: ring/polynomial builders, deterministic random
 * generators, and independent oracles (naive division, S-pair checks,
 * monomial ideal arithmetic). The oracles deliberately avoid the library's
 * Groebner path so they can vouch for it.
 */
#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "sprees/ideal_ops.hpp"
#include "sprees/parse.hpp"

namespace testsupport {

using namespace sprees;

inline RingPtr qring(const std::vector<std::string>& vars,
                     TermOrder ord = TermOrder::grevlex()) {
    return make_ring(vars, make_rationals(), ord);
}
inline RingPtr fpring(const std::vector<std::string>& vars,
                      TermOrder ord = TermOrder::grevlex(), std::uint32_t p = 32003) {
    return make_ring(vars, make_prime_field(p), ord);
}

template <class K>
Polynomial<K> P(const RingPtr& ring, const std::string& text) {
    return materialize<K>(parse_polynomial_text(text, ring->vars), ring);
}

template <class K>
Ideal<K> ideal_of(const RingPtr& ring, const std::vector<std::string>& polys) {
    std::vector<Polynomial<K>> gens;
    for (const auto& s : polys) gens.push_back(P<K>(ring, s));
    return Ideal<K>(ring, std::move(gens));
}

// ----------------------------------------------------------------- oracles

// Division oracle independent of sprees::normal_form: reduce every
// monomial, first divisor wins, no shared code path beyond Polynomial.
template <class K>
Polynomial<K> naive_remainder(Polynomial<K> f, const std::vector<Polynomial<K>>& G) {
    auto ring = f.ring();
    std::vector<typename Polynomial<K>::Term> rem;
    while (!f.is_zero()) {
        bool hit = false;
        for (const auto& g : G) {
            if (!g.is_zero() && mono_divides(g.leading_monomial(), f.leading_monomial())) {
                K c = f.leading_coeff() / g.leading_coeff();
                Monomial m = mono_div(f.leading_monomial(), g.leading_monomial());
                Polynomial<K> prod =
                    Polynomial<K>::monomial(ring, c, m) * g;
                f = f - prod;
                hit = true;
                break;
            }
        }
        if (!hit) {
            rem.push_back(f.terms().front());
            std::vector<typename Polynomial<K>::Term> rest(f.terms().begin() + 1,
                                                           f.terms().end());
            f = Polynomial<K>(ring, std::move(rest));
        }
    }
    return Polynomial<K>(ring, std::move(rem));
}

// Exhaustive S-pair oracle: a set is a Groebner basis iff every S-poly
// reduces to zero. Uses the naive division above.
template <class K>
bool spair_oracle_is_gb(const std::vector<Polynomial<K>>& G) {
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            const auto& f = G[i];
            const auto& g = G[j];
            Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
            auto ring = f.ring();
            Polynomial<K> sf = Polynomial<K>::monomial(
                ring, field_traits<K>::one(ring->field), mono_div(l, f.leading_monomial()));
            Polynomial<K> sg = Polynomial<K>::monomial(
                ring, f.leading_coeff() / g.leading_coeff(), mono_div(l, g.leading_monomial()));
            Polynomial<K> s = sf * f - sg * g;
            if (!naive_remainder(s, G).is_zero()) return false;
        }
    return true;
}

// Monomial ideals as exponent-vector lists.
inline bool mono_list_divides(const std::vector<Monomial>& gens, const Monomial& m) {
    for (const auto& g : gens)
        if (mono_divides(g, m)) return true;
    return false;
}

inline std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
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

// lcm oracle for intersections of monomial ideals
inline std::vector<Monomial> monomial_intersect_oracle(const std::vector<Monomial>& a,
                                                       const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    for (const auto& f : a)
        for (const auto& g : b) out.push_back(mono_lcm(f, g));
    return minimal_monomials(out);
}

// --------------------------------------------------- deterministic random

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 eng_;
};

template <class K>
Polynomial<K> random_poly(Rng& rng, const RingPtr& ring, int max_terms, int max_exp) {
    int nt = rng.range(1, max_terms);
    std::vector<typename Polynomial<K>::Term> terms;
    for (int t = 0; t < nt; ++t) {
        std::vector<int> e(ring->nvars());
        for (auto& x : e) x = rng.range(0, max_exp);
        long long c = rng.range(1, 9) * (rng.range(0, 1) ? 1 : -1);
        terms.push_back({field_traits<K>::from_int(c, ring->field), Monomial(e)});
    }
    return Polynomial<K>(ring, std::move(terms));
}

template <class K>
Ideal<K> random_ideal(Rng& rng, const RingPtr& ring, int max_gens, int max_terms,
                      int max_exp) {
    int ng = rng.range(1, max_gens);
    std::vector<Polynomial<K>> gens;
    for (int i = 0; i < ng; ++i) {
        auto p = random_poly<K>(rng, ring, max_terms, max_exp);
        if (!p.is_zero()) gens.push_back(p);
    }
    return Ideal<K>(ring, std::move(gens));
}

template <class K>
Polynomial<K> random_monomial_poly(Rng& rng, const RingPtr& ring, int max_exp) {
    std::vector<int> e(ring->nvars());
    bool nonzero = false;
    for (auto& x : e) {
        x = rng.range(0, max_exp);
        if (x) nonzero = true;
    }
    if (!nonzero) e[static_cast<std::size_t>(rng.range(0, static_cast<int>(ring->nvars()) - 1))] = 1;
    return Polynomial<K>::monomial(ring, field_traits<K>::one(ring->field), Monomial(e));
}

template <class K>
Ideal<K> random_monomial_ideal(Rng& rng, const RingPtr& ring, int max_gens, int max_exp) {
    int ng = rng.range(1, max_gens);
    std::vector<Polynomial<K>> gens;
    for (int i = 0; i < ng; ++i) gens.push_back(random_monomial_poly<K>(rng, ring, max_exp));
    return Ideal<K>(ring, std::move(gens));
}

}  // namespace testsupport
