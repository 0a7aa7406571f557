/*
 * certify.hpp
 * Witness certificates for associated primes: Q ∈ Ass(R/I) iff I : w = Q
 * for some w. Membership claims are certified; non-membership is claimed
 * only where an exact criterion exists (maximal ideals via saturation,
 * monomial ideals via the oracle). Everything else is "witness-not-found",
 * which is inconclusive by design.
 */
#pragma once

#include <random>

#include "sprees/monomial_ideal.hpp"
#include "sprees/rees.hpp"

namespace sprees {

enum class CertStatus { verified, witness_not_found, refuted };

inline const char* cert_status_name(CertStatus s) {
    switch (s) {
        case CertStatus::verified: return "verified";
        case CertStatus::witness_not_found: return "witness-not-found";
        case CertStatus::refuted: return "refuted";
    }
    return "?";
}

template <class K>
struct AssCertificate {
    Ideal<K> ideal;
    Ideal<K> claimed_prime;
    Polynomial<K> witness;
    CertStatus status;
};

template <class K>
AssCertificate<K> certify_witness(const Ideal<K>& I, const Ideal<K>& Q,
                                  const Polynomial<K>& w,
                                  const ComputationBudget& budget = ComputationBudget::standard()) {
    require_same_ring(I.ring(), Q.ring());
    require_same_ring(I.ring(), w.ring());
    if (w.is_zero() || member(w, I, budget))
        return {I, Q, w, CertStatus::refuted};
    if (ideal_equal(quotient(I, w, budget), Q, budget))
        return {I, Q, w, CertStatus::verified};
    return {I, Q, w, CertStatus::refuted};
}

struct WitnessSearchOptions {
    std::uint64_t seed = 0;
    int random_tries = 64;
};

// Search order: generators of I : Q by ascending leading monomial, then
// pseudo-random field combinations of those generators.
template <class K>
AssCertificate<K> find_witness(const Ideal<K>& I, const Ideal<K>& Q,
                               const ComputationBudget& budget = ComputationBudget::standard(),
                               const WitnessSearchOptions& opts = {}) {
    require_same_ring(I.ring(), Q.ring());
    const RingPtr& R = I.ring();
    Ideal<K> W = quotient_ideal(I, Q, budget);

    std::vector<Polynomial<K>> cands = W.generators();
    std::sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) {
        int c = order_cmp(R->order, a.leading_monomial(), b.leading_monomial());
        return c != 0 ? c < 0 : poly_cmp(a, b) < 0;
    });
    for (const auto& w : cands) {
        auto cert = certify_witness(I, Q, w, budget);
        if (cert.status == CertStatus::verified) return cert;
    }

    std::mt19937_64 rng(opts.seed);
    auto random_coeff = [&]() -> K {
        if constexpr (std::is_same_v<K, Fp>) {
            std::uint64_t r = rng() % (R->field.modulus - 1);
            return Fp(static_cast<long long>(r + 1), R->field.modulus);
        } else {
            return field_traits<K>::from_int(static_cast<long long>(rng() % 32) + 1,
                                             R->field);
        }
    };
    for (int t = 0; t < opts.random_tries && !cands.empty(); ++t) {
        Polynomial<K> w = Polynomial<K>::zero(R);
        for (const auto& g : cands) w = w + g.scaled(random_coeff());
        if (w.is_zero()) continue;
        auto cert = certify_witness(I, Q, w, budget);
        if (cert.status == CertStatus::verified) return cert;
    }
    return {I, Q, Polynomial<K>::zero(R), CertStatus::witness_not_found};
}

// For homogeneous I (positive grading required), the irrelevant maximal
// ideal M is associated iff I : M^∞ strictly contains I. Since M is
// maximal, the saturation moves iff its first step I : M does, so one
// colon decides the test.
template <class K>
bool graded_max_test(const Ideal<K>& I,
                     const ComputationBudget& budget = ComputationBudget::standard()) {
    const RingPtr& R = I.ring();
    Multigrading g = R->grading ? *R->grading : Multigrading::standard(R->nvars());
    if (!g.positive())
        throw std::domain_error("graded_max_test needs a positive grading");
    for (const auto& f : I.generators())
        if (!f.degree_report(g).homogeneous)
            throw std::domain_error("graded_max_test needs a homogeneous ideal");

    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < R->nvars(); ++i) all.push_back(i);
    Ideal<K> M = variable_ideal<K>(R, all);
    return !ideal_equal(quotient_ideal(I, M, budget), I, budget);
}

// ------------------------------------------------- Lemma 1.5 decomposition

template <class K>
struct Lemma15Component {
    Ideal<K> component;          // φ(q) : (Π_{j≠i} u_j)^∞
    int saturation_exponent;
    Ideal<K> claimed_radical;    // J + (u_i)
    bool radical_verified;       // component ⊆ radical and radical ⊆ √component
};

template <class K>
struct Lemma15Report {
    Ideal<K> image;  // φ(q)
    std::vector<Lemma15Component<K>> components;
    bool intersection_equal;
    std::vector<bool> component_needed;  // dropping component i changes the intersection
    bool irredundant;
    bool all_radicals_verified;
    int embedded_count;  // radicals strictly containing another radical

    bool pass() const { return intersection_equal && irredundant && all_radicals_verified; }
};

// Splits z into u_1..u_n in the primary ideal q (z must be in √q) and
// verifies the colon-saturation decomposition
//   φ(q) = ∩_i ( φ(q) : (u_1…û_i…u_n)^∞ )
// with radicals J + (u_i). For monomial q the base prime J is computed;
// otherwise pass its generators in `radical_base`.
template <class K>
Lemma15Report<K> lemma15_components(const Ideal<K>& q, const std::string& z, int n,
                                    const std::vector<Polynomial<K>>& radical_base = {},
                                    const ComputationBudget& budget = ComputationBudget::standard()) {
    if (n < 1) throw std::invalid_argument("need at least one split variable");
    const RingPtr& R = q.ring();
    std::size_t zi = R->var_index(z);
    if (!radical_member(Polynomial<K>::variable(R, zi), q, budget))
        throw std::domain_error("lemma15_components: z is not in the radical of q");

    // base prime J with √q = J + (z)
    std::vector<Polynomial<K>> Jgens;
    if (!radical_base.empty()) {
        Jgens = radical_base;
    } else if (is_monomial_ideal(q)) {
        auto rad = monomial_radical(q);
        for (const auto& g : rad.generators())
            if (g.leading_monomial().exp(zi) == 0) Jgens.push_back(g);
    } else {
        throw std::invalid_argument(
            "lemma15_components: non-monomial q needs an explicit radical base");
    }

    SplittingSpec spec{{SplitBlock{z, std::vector<int>(static_cast<std::size_t>(n), 1)}}};
    SplitMap<K> sm = splitting_map<K>(spec, R);
    const RingPtr T = sm.map.target;
    Ideal<K> image = apply_map(sm.map, q, budget);

    std::vector<int> to_T(R->nvars(), -1);
    for (std::size_t i = 0; i < R->nvars(); ++i) {
        // every non-split variable keeps its name; z maps to the block
        if (i == zi) continue;
        to_T[i] = static_cast<int>(T->var_index(R->vars[i]));
    }
    const auto& block = sm.blocks[zi];

    Lemma15Report<K> rep{image, {}, true, {}, true, true, 0};
    for (std::size_t i = 0; i < block.size(); ++i) {
        Polynomial<K> prod = Polynomial<K>::constant(T, field_traits<K>::one(T->field));
        for (std::size_t j = 0; j < block.size(); ++j)
            if (j != i) prod = prod * Polynomial<K>::variable(T, block[j]);
        auto sat = saturate(image, prod, budget);

        std::vector<Polynomial<K>> radgens;
        for (const auto& g : Jgens) radgens.push_back(g.mapped(T, to_T));
        radgens.push_back(Polynomial<K>::variable(T, block[i]));
        Ideal<K> radical(T, radgens);

        bool rad_ok = true;
        for (const auto& g : sat.ideal.generators())
            if (!member(g, radical, budget)) { rad_ok = false; break; }
        if (rad_ok)
            for (const auto& g : radical.generators())
                if (!radical_member(g, sat.ideal, budget)) { rad_ok = false; break; }
        if (!rad_ok) rep.all_radicals_verified = false;

        rep.components.push_back(
            Lemma15Component<K>{sat.ideal, sat.exponent, std::move(radical), rad_ok});
    }

    // intersection equality
    Ideal<K> meet = rep.components[0].component;
    for (std::size_t i = 1; i < rep.components.size(); ++i)
        meet = intersect(meet, rep.components[i].component, budget);
    rep.intersection_equal = ideal_equal(meet, image, budget);

    // irredundancy: dropping any component strictly enlarges the intersection
    rep.component_needed.assign(rep.components.size(), true);
    if (rep.components.size() > 1) {
        for (std::size_t i = 0; i < rep.components.size(); ++i) {
            Ideal<K> rest(T);
            bool first = true;
            for (std::size_t j = 0; j < rep.components.size(); ++j) {
                if (j == i) continue;
                rest = first ? rep.components[j].component
                             : intersect(rest, rep.components[j].component, budget);
                first = false;
            }
            if (ideal_equal(rest, image, budget)) {
                rep.component_needed[i] = false;
                rep.irredundant = false;
            }
        }
    }

    // embedded primes among the component radicals
    for (std::size_t i = 0; i < rep.components.size(); ++i)
        for (std::size_t j = 0; j < rep.components.size(); ++j)
            if (i != j &&
                ideal_contains(rep.components[i].claimed_radical,
                               rep.components[j].claimed_radical, budget) &&
                !ideal_equal(rep.components[i].claimed_radical,
                             rep.components[j].claimed_radical, budget)) {
                ++rep.embedded_count;
                break;
            }
    return rep;
}

}  // namespace sprees
