/*
 * families.hpp
 * Builders for the named families: the (t^3,t^4,t^5) toric prime, its
 * duplicated forms I_m, their splittings, and the two extended-Rees
 * presentations (the nine-variable prime with its certified witness
 * elements, and its spread form in 2n+7 variables).
 */
#pragma once

#include <numeric>

#include "sprees/parse.hpp"
#include "sprees/rees.hpp"

namespace sprees {

// Kernel of x ↦ t^3, y ↦ t^4, z ↦ t^5: the height-two prime
// (x^3 - y*z, y^2 - x*z, z^2 - x^2*y). Carries weights (3,4,5).
template <class K>
Ideal<K> family_toric345(const FieldSpec& field,
                         const ComputationBudget& budget = ComputationBudget::standard()) {
    RingPtr S = make_ring({"x", "y", "z"}, field, TermOrder::grevlex(),
                          Multigrading::weights({3, 4, 5}));
    RingPtr T = make_ring({"t"}, field, TermOrder::grevlex());
    RingMap<K> m{S, T,
                 {materialize<K>(parse_polynomial_text("t^3", T->vars), T),
                  materialize<K>(parse_polynomial_text("t^4", T->vars), T),
                  materialize<K>(parse_polynomial_text("t^5", T->vars), T)},
                 {}};
    return kernel(m, budget);
}

// I_m = (x^3 - y*z, y^2 - x*z, z^2 - x^2*y, z1 - z, ..., z<m-3> - z)
// in k[x, y, z, z1..z<m-3>], prime of height m-1.
template <class K>
Ideal<K> family_Im(int m, const FieldSpec& field,
                   const ComputationBudget& budget = ComputationBudget::standard()) {
    if (m < 3) throw std::invalid_argument("family_Im needs m >= 3");
    Ideal<K> I = family_toric345<K>(field, budget);
    return spread_duplicate(I, "z", m - 3);
}

template <class K>
struct Thm51Family {
    Ideal<K> source_ideal;  // I_m
    SplitMap<K> split;      // i-th variable of R_m into v_i variables
    Ideal<K> P;             // φ(I_m)
};

// Split the i-th variable of R_m into v_i variables (all exponents 1) and
// push I_m forward. The target carries scaled weights that keep P
// quasi-homogeneous, so saturation tests against the maximal ideal apply.
template <class K>
Thm51Family<K> family_thm51(int m, const std::vector<int>& v, const FieldSpec& field,
                            const ComputationBudget& budget = ComputationBudget::standard()) {
    if (static_cast<int>(v.size()) != m)
        throw std::invalid_argument("family_thm51 needs one block size per variable");
    for (int vi : v)
        if (vi < 1) throw std::invalid_argument("block sizes must be >= 1");

    Ideal<K> Im = family_Im<K>(m, field, budget);
    const RingPtr& Rm = Im.ring();

    SplittingSpec spec;
    for (int i = 0; i < m; ++i)
        spec.blocks.push_back(
            SplitBlock{Rm->vars[static_cast<std::size_t>(i)],
                       std::vector<int>(static_cast<std::size_t>(v[static_cast<std::size_t>(i)]), 1)});
    SplitMap<K> split = splitting_map<K>(spec, Rm);

    // weights: base weight of variable i, scaled by L / v_i with L = lcm(v)
    std::int64_t L = 1;
    for (int vi : v) L = std::lcm(L, static_cast<std::int64_t>(vi));
    const auto& base_w = Rm->grading->matrix()[0];
    std::vector<std::int64_t> w(split.map.target->nvars(), 0);
    for (std::size_t i = 0; i < split.blocks.size(); ++i)
        for (std::size_t j : split.blocks[i])
            w[j] = base_w[i] * L / v[i];
    RingPtr target = make_ring(split.map.target->vars, field, split.map.target->order,
                               Multigrading::weights(std::move(w)));
    // rebuild images in the graded target
    std::vector<int> ident(target->nvars());
    for (std::size_t i = 0; i < target->nvars(); ++i) ident[i] = static_cast<int>(i);
    for (auto& img : split.map.images) img = img.mapped(target, ident);
    split.map.target = target;

    Ideal<K> P = apply_map(split.map, Im, budget);
    return Thm51Family<K>{std::move(Im), std::move(split), std::move(P)};
}

// The five-generated monomial ideal whose extended Rees algebra drives the
// nine-variable example; generator order is fixed so Z_i indices match the
// witness elements below.
template <class K>
Ideal<K> nine_variable_base_ideal(const FieldSpec& field) {
    RingPtr A = make_ring({"a", "b", "c"}, field, TermOrder::grevlex(),
                          Multigrading::weights({1, 1, 1}));
    const char* gens[] = {"a^2*b^2*c", "b^4", "a*b^3", "a^3*b", "a^4"};
    std::vector<Polynomial<K>> g;
    for (const char* s : gens)
        g.push_back(materialize<K>(parse_polynomial_text(s, A->vars), A));
    return Ideal<K>(A, std::move(g));
}

template <class K>
struct Prop33Family {
    ReesPresentation<K> pres;              // P_Z in k[a,b,c,Z1..Z5,T]
    std::vector<Polynomial<K>> f;          // f1..f18, known elements of P_Z
    Polynomial<K> alpha;                   // colon witness for (a,b,Z1..Z5,T)
    Polynomial<K> beta;                    // colon witness for the maximal ideal
    Ideal<K> Q1;                           // (a,b,Z1..Z5,T)
    Ideal<K> maximal;                      // (a,b,c,Z1..Z5,T)
};

inline const std::vector<std::string>& prop33_f_strings() {
    static const std::vector<std::string> fs = {
        "a^4 - Z5*T",
        "a*Z2 - b*Z3",
        "a*Z4 - b*Z5",
        "a*b^3 - Z3*T",
        "a^3*Z3 - b^3*Z5",
        "a^4*Z2 - b^4*Z5",
        "a^2*Z1 - b^2*c*Z5",
        "a^2*b^2*c - Z1*T",
        "Z1*Z5 - c*Z4^2",
        "Z1*Z2 - c*Z3^2",
        "a*Z1 - b*c*Z4",
        "Z1^2 - c^2*Z3*Z4",
        "Z2*T - b^4",
        "Z2^2*Z4 - Z3^3",
        "Z2^3*Z5 - Z3^4",
        "a*c*Z3 - b*Z1",
        "a^3*b - Z4*T",
        "a^2*Z3 - b^2*Z4",
    };
    return fs;
}
inline const char* prop33_alpha_string() {
    return "a^4*Z2 - a^3*b*Z3 - a*b^3*Z4 + b^4*Z5 - Z2*Z5*T + Z3*Z4*T";
}
inline const char* prop33_beta_string() {
    return "a^5*Z3 - 2*a^3*b^2*Z4 + a^2*b^3*Z5 - a*Z3*Z5*T + b*Z4^2*T";
}

template <class K>
Prop33Family<K> family_prop33(const FieldSpec& field,
                              const ComputationBudget& budget = ComputationBudget::standard()) {
    Ideal<K> J = nine_variable_base_ideal<K>(field);
    ReesPresentation<K> pres = rees_presentation(J, ReesKind::extended_rees, budget);
    const RingPtr& R = pres.ring;

    std::vector<Polynomial<K>> f;
    for (const auto& s : prop33_f_strings())
        f.push_back(materialize<K>(parse_polynomial_text(s, R->vars), R));
    Polynomial<K> alpha = materialize<K>(parse_polynomial_text(prop33_alpha_string(), R->vars), R);
    Polynomial<K> beta = materialize<K>(parse_polynomial_text(prop33_beta_string(), R->vars), R);

    auto var_ideal = [&](const std::vector<std::string>& names) {
        std::vector<Polynomial<K>> gens;
        for (const auto& n : names)
            gens.push_back(Polynomial<K>::variable(R, R->var_index(n)));
        return Ideal<K>(R, std::move(gens));
    };
    Ideal<K> Q1 = var_ideal({"a", "b", "Z1", "Z2", "Z3", "Z4", "Z5", "T"});
    Ideal<K> M = var_ideal({"a", "b", "c", "Z1", "Z2", "Z3", "Z4", "Z5", "T"});

    return Prop33Family<K>{std::move(pres), std::move(f), std::move(alpha), std::move(beta),
                           std::move(Q1), std::move(M)};
}

template <class K>
struct Thm53Family {
    MonomialSpread<K> spread;   // spr(J) in k[a,b,c_1..c_n]
    ReesPresentation<K> pres;   // P_U in k[a,b,c_1..c_n,U_1..U_n,Z2..Z5,T]
    RingMap<K> Phi;             // presentation ring -> nine-variable ring
    Prop33Family<K> nine;       // the nine-variable side, reused by verifiers
};

// Extended Rees presentation of the monomial-fine spreading of the base
// ideal: spr(J) = (a^2 b^2 c_1, ..., a^2 b^2 c_n, b^4, a b^3, a^3 b, a^4)
// presented in 2n+7 variables. Phi sends U_i ↦ Z1, c_i ↦ c, rest identity.
template <class K>
Thm53Family<K> family_thm53(int n, const FieldSpec& field,
                            const ComputationBudget& budget = ComputationBudget::standard()) {
    if (n < 1) throw std::invalid_argument("family_thm53 needs n >= 1");

    Ideal<K> J = nine_variable_base_ideal<K>(field);
    SplittingSpec spec;
    spec.blocks.push_back(SplitBlock{"c", std::vector<int>(static_cast<std::size_t>(n), 1)});
    MonomialSpread<K> spread = spread_monomial_fine(J, spec);

    // order generators as (a^2 b^2 c_i ..., b^4, a b^3, a^3 b, a^4)
    const RingPtr& Su0 = spread.ideal.ring();
    RingPtr Su = make_ring(Su0->vars, field, Su0->order,
                           Multigrading::weights(std::vector<std::int64_t>(Su0->nvars(), 1)));
    std::vector<std::string> gen_strings;
    for (int i = 1; i <= n; ++i)
        gen_strings.push_back("a^2*b^2*" + (n == 1 ? std::string("c") : "c_" + std::to_string(i)));
    gen_strings.insert(gen_strings.end(), {"b^4", "a*b^3", "a^3*b", "a^4"});
    std::vector<Polynomial<K>> ordered;
    for (const auto& s : gen_strings)
        ordered.push_back(materialize<K>(parse_polynomial_text(s, Su->vars), Su));
    Ideal<K> sprJ(Su, ordered);
    {
        // sanity: same ideal as the computed spreading
        Ideal<K> spr_re = retag(spread.ideal, Su);
        if (!ideal_equal(sprJ, spr_re, budget))
            throw std::logic_error("spread generator list out of sync");
    }

    std::vector<std::string> znames;
    for (int i = 1; i <= n; ++i) znames.push_back("U_" + std::to_string(i));
    znames.insert(znames.end(), {"Z2", "Z3", "Z4", "Z5"});
    ReesPresentation<K> pres =
        rees_presentation(sprJ, ReesKind::extended_rees, budget, znames, "T");

    // Phi into the nine-variable presentation ring
    Prop33Family<K> nine = family_prop33<K>(field, budget);
    const RingPtr& SZ = nine.pres.ring;
    const RingPtr& SU = pres.ring;
    std::vector<Polynomial<K>> images;
    for (const auto& name : SU->vars) {
        std::string target_name = name;
        if (name.rfind("c", 0) == 0 && name != "c") target_name = "c";
        if (name.rfind("U_", 0) == 0) target_name = "Z1";
        images.push_back(Polynomial<K>::variable(SZ, SZ->var_index(target_name)));
    }
    RingMap<K> Phi{SU, SZ, std::move(images), {}};

    return Thm53Family<K>{std::move(spread), std::move(pres), std::move(Phi), std::move(nine)};
}

}  // namespace sprees
