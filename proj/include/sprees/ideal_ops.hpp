/*
 * ideal_ops.hpp
 * Ideal arithmetic: sums, products, powers, elimination, intersection,
 * colon ideals, saturation, radical membership, kernels of ring maps,
 * and dimension/height via independent sets of the leading-term ideal.
 */
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sprees/ideal.hpp"

namespace sprees {

// ---------------------------------------------------------------- sums etc.

template <class K>
std::vector<Polynomial<K>> dedup_polys(std::vector<Polynomial<K>> v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return poly_cmp(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& I, const Ideal<K>& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Polynomial<K>> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal<K>(I.ring(), dedup_polys(std::move(gens)));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& I, const Ideal<K>& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Polynomial<K>> gens;
    for (const auto& f : I.generators())
        for (const auto& g : J.generators()) gens.push_back(f * g);
    return Ideal<K>(I.ring(), dedup_polys(std::move(gens)));
}

template <class K>
Ideal<K> ideal_power(const Ideal<K>& I, int e) {
    if (e < 1) throw std::domain_error("ideal power requires exponent >= 1");
    const auto& g = I.generators();
    std::vector<Polynomial<K>> gens;
    // all degree-e monomials in the generators
    std::vector<std::size_t> idx(static_cast<std::size_t>(e), 0);
    if (!g.empty()) {
        while (true) {
            Polynomial<K> p = g[idx[0]];
            for (int k = 1; k < e; ++k) p = p * g[idx[static_cast<std::size_t>(k)]];
            gens.push_back(std::move(p));
            int pos = e - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == g.size() - 1) --pos;
            if (pos < 0) break;
            std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
            for (int k = pos; k < e; ++k) idx[static_cast<std::size_t>(k)] = next;
        }
    }
    return Ideal<K>(I.ring(), dedup_polys(std::move(gens)));
}

// ------------------------------------------------------------- elimination

namespace detail {

inline TermOrder::Kind flat_kind(const TermOrder& o) {
    return o.kind == TermOrder::Kind::block ? TermOrder::Kind::grevlex : o.kind;
}

}  // namespace detail

// I ∩ k[vars not in elim_idx], computed with a block order that eliminates
// the chosen variables. The result lives in a ring on the remaining
// variables with the ambient order kind.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::size_t>& elim_idx,
                   const ComputationBudget& budget = ComputationBudget::standard()) {
    const RingPtr& R = I.ring();
    std::set<std::size_t> elim(elim_idx.begin(), elim_idx.end());
    for (std::size_t i : elim)
        if (i >= R->nvars()) throw std::invalid_argument("eliminate: bad variable index");

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < R->nvars(); ++i)
        if (!elim.count(i)) keep.push_back(i);

    // the restriction of a block-order basis is a basis for the second
    // sub-order, so that is what the kept ring must carry
    const TermOrder::Kind ambient = R->order.kind == TermOrder::Kind::block
                                        ? R->order.block2
                                        : R->order.kind;

    std::optional<Multigrading> kept_grading;
    if (R->grading) {
        std::vector<std::vector<std::int64_t>> w;
        for (const auto& row : R->grading->matrix()) {
            std::vector<std::int64_t> r;
            for (std::size_t i : keep) r.push_back(row[i]);
            w.push_back(std::move(r));
        }
        kept_grading = Multigrading(std::move(w));
    }
    std::vector<std::string> kept_names;
    for (std::size_t i : keep) kept_names.push_back(R->vars[i]);
    RingPtr R2 = make_ring(kept_names, R->field, TermOrder{ambient}, kept_grading);

    if (elim.empty()) {
        std::vector<Polynomial<K>> gens;
        std::vector<int> ident(R->nvars());
        for (std::size_t i = 0; i < R->nvars(); ++i) ident[i] = static_cast<int>(i);
        for (const auto& g : I.generators()) gens.push_back(g.mapped(R2, ident));
        return Ideal<K>(R2, std::move(gens));
    }

    // elimination ring: eliminated block first
    std::vector<std::string> evars;
    for (std::size_t i : elim) evars.push_back(R->vars[i]);
    for (std::size_t i : keep) evars.push_back(R->vars[i]);
    RingPtr E = make_ring(evars, R->field,
                          TermOrder::block(elim.size(), TermOrder::Kind::grevlex, ambient));

    std::vector<int> to_E(R->nvars(), -1);
    {
        std::size_t pos = 0;
        for (std::size_t i : elim) to_E[i] = static_cast<int>(pos++);
        for (std::size_t i : keep) to_E[i] = static_cast<int>(pos++);
    }
    std::vector<Polynomial<K>> egens;
    for (const auto& g : I.generators()) egens.push_back(g.mapped(E, to_E));

    GroebnerBasis<K> gb = buchberger(E, egens, budget);

    // elements free of the eliminated block form the reduced basis downstairs
    std::vector<int> to_R2(E->nvars(), -1);
    for (std::size_t j = 0; j < keep.size(); ++j)
        to_R2[elim.size() + j] = static_cast<int>(j);

    std::vector<Polynomial<K>> down;
    for (const auto& g : gb.elements) {
        bool pure = true;
        for (const auto& t : g.terms()) {
            for (std::size_t i = 0; i < elim.size() && pure; ++i)
                if (t.second.exp(i) != 0) pure = false;
            if (!pure) break;
        }
        if (pure) down.push_back(g.mapped(R2, to_R2));
    }

    Ideal<K> out(R2, down);
    GroebnerBasis<K> cached;
    cached.ring = R2;
    cached.elements = std::move(down);
    cached.reduced = true;
    cached.stats = gb.stats;
    out.prime_cache(std::move(cached));
    return out;
}

// Rebuild an ideal in a structurally identical ring (same names, field,
// order); used to land elimination results back in the caller's ring.
template <class K>
Ideal<K> retag(const Ideal<K>& I, const RingPtr& ring) {
    require_same_ring(I.ring(), ring);
    if (I.ring() == ring) return I;
    std::vector<int> ident(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) ident[i] = static_cast<int>(i);
    std::vector<Polynomial<K>> gens;
    for (const auto& g : I.generators()) gens.push_back(g.mapped(ring, ident));
    Ideal<K> out(ring, std::move(gens));
    if (I.has_cached_gb()) {
        const auto& gb = I.reduced_gb();
        GroebnerBasis<K> c;
        c.ring = ring;
        for (const auto& g : gb.elements) c.elements.push_back(g.mapped(ring, ident));
        c.reduced = true;
        c.stats = gb.stats;
        out.prime_cache(std::move(c));
    }
    return out;
}

// Move a polynomial or ideal to a ring with the same variables but another
// order (or grading).
template <class K>
Ideal<K> change_ring(const Ideal<K>& I, const RingPtr& ring) {
    if (I.ring()->vars != ring->vars || !(I.ring()->field == ring->field))
        throw std::invalid_argument("change_ring: incompatible rings");
    std::vector<int> ident(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) ident[i] = static_cast<int>(i);
    std::vector<Polynomial<K>> gens;
    for (const auto& g : I.generators()) gens.push_back(g.mapped(ring, ident));
    return Ideal<K>(ring, std::move(gens));
}

// ------------------------------------------------------------ intersection

// The smallest generator list we know for an ideal: the cached reduced
// basis when one exists, the raw generators otherwise.
template <class K>
const std::vector<Polynomial<K>>& working_gens(const Ideal<K>& I) {
    return I.has_cached_gb() ? I.reduced_gb().elements : I.generators();
}

// I ∩ J via the one-extra-variable construction: eliminate t from
// t*I + (1-t)*J.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J,
                   const ComputationBudget& budget = ComputationBudget::standard()) {
    require_same_ring(I.ring(), J.ring());
    const RingPtr& R = I.ring();
    std::string tname = fresh_var_name(*R, "t$");

    std::vector<std::string> vars;
    vars.push_back(tname);
    vars.insert(vars.end(), R->vars.begin(), R->vars.end());
    RingPtr C = make_ring(vars, R->field,
                          TermOrder::block(1, TermOrder::Kind::grevlex,
                                           detail::flat_kind(R->order)));
    std::vector<int> up(R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i) up[i] = static_cast<int>(i + 1);

    Polynomial<K> t = Polynomial<K>::variable(C, 0);
    Polynomial<K> one = Polynomial<K>::constant(C, field_traits<K>::one(C->field));
    std::vector<Polynomial<K>> gens;
    for (const auto& g : working_gens(I)) gens.push_back(t * g.mapped(C, up));
    for (const auto& g : working_gens(J)) gens.push_back((one - t) * g.mapped(C, up));

    Ideal<K> big(C, std::move(gens));
    Ideal<K> small = eliminate(big, {0}, budget);
    return retag(small, R);
}

// ------------------------------------------------------- colon, saturation

// Exact division f / d; throws if d does not divide f.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& f, const Polynomial<K>& d) {
    require_same_ring(f.ring(), d.ring());
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial<K> rem = f;
    std::vector<typename Polynomial<K>::Term> q;
    while (!rem.is_zero()) {
        if (!mono_divides(d.leading_monomial(), rem.leading_monomial()))
            throw std::domain_error("divide_exact: not a multiple");
        K c = rem.leading_coeff() / d.leading_coeff();
        Monomial m = mono_div(rem.leading_monomial(), d.leading_monomial());
        rem = rem.sub_scaled(c, m, d);
        q.push_back({std::move(c), std::move(m)});
    }
    return Polynomial<K>(f.ring(), std::move(q));
}

// I : f = (I ∩ (f)) / f
template <class K>
Ideal<K> quotient(const Ideal<K>& I, const Polynomial<K>& f,
                  const ComputationBudget& budget = ComputationBudget::standard()) {
    require_same_ring(I.ring(), f.ring());
    if (f.is_zero()) throw std::domain_error("colon by zero");
    Ideal<K> meet = intersect(I, Ideal<K>(I.ring(), {f}), budget);
    std::vector<Polynomial<K>> gens;
    for (const auto& g : meet.generators()) gens.push_back(divide_exact(g, f));
    return Ideal<K>(I.ring(), dedup_polys(std::move(gens)));
}

// I : J = ∩ over generators of J
template <class K>
Ideal<K> quotient_ideal(const Ideal<K>& I, const Ideal<K>& J,
                        const ComputationBudget& budget = ComputationBudget::standard()) {
    require_same_ring(I.ring(), J.ring());
    if (J.generators().empty())
        throw std::domain_error("colon by the zero ideal");
    bool first = true;
    Ideal<K> acc(I.ring());
    for (const auto& g : J.generators()) {
        Ideal<K> q = quotient(I, g, budget);
        acc = first ? q : intersect(acc, q, budget);
        first = false;
    }
    return acc;
}

template <class K>
struct Saturation {
    Ideal<K> ideal;
    int exponent;  // first k with I : f^k = I : f^(k+1)
};

// Iterated colon until two consecutive results agree.
template <class K>
Saturation<K> saturate(const Ideal<K>& I, const Polynomial<K>& f,
                       const ComputationBudget& budget = ComputationBudget::standard()) {
    if (f.is_zero()) throw std::domain_error("saturation by zero");
    Ideal<K> prev = I;
    for (int k = 0;; ++k) {
        Ideal<K> next = quotient(prev, f, budget);
        if (ideal_equal(next, prev, budget)) return {prev, k};
        prev = std::move(next);
    }
}

// Cross-check route: eliminate y from I + (1 - y*f).
template <class K>
Ideal<K> saturate_extra_variable(const Ideal<K>& I, const Polynomial<K>& f,
                                 const ComputationBudget& budget = ComputationBudget::standard()) {
    if (f.is_zero()) throw std::domain_error("saturation by zero");
    const RingPtr& R = I.ring();
    std::string yname = fresh_var_name(*R, "y$");
    std::vector<std::string> vars;
    vars.push_back(yname);
    vars.insert(vars.end(), R->vars.begin(), R->vars.end());
    RingPtr C = make_ring(vars, R->field,
                          TermOrder::block(1, TermOrder::Kind::grevlex,
                                           detail::flat_kind(R->order)));
    std::vector<int> up(R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i) up[i] = static_cast<int>(i + 1);

    Polynomial<K> y = Polynomial<K>::variable(C, 0);
    Polynomial<K> one = Polynomial<K>::constant(C, field_traits<K>::one(C->field));
    std::vector<Polynomial<K>> gens;
    for (const auto& g : working_gens(I)) gens.push_back(g.mapped(C, up));
    gens.push_back(one - y * f.mapped(C, up));

    Ideal<K> big(C, std::move(gens));
    return retag(eliminate(big, {0}, budget), R);
}

// Saturation by an ideal: iterate I : J until stable.
template <class K>
Saturation<K> saturate_ideal(const Ideal<K>& I, const Ideal<K>& J,
                             const ComputationBudget& budget = ComputationBudget::standard()) {
    Ideal<K> prev = I;
    for (int k = 0;; ++k) {
        Ideal<K> next = quotient_ideal(prev, J, budget);
        if (ideal_equal(next, prev, budget)) return {prev, k};
        prev = std::move(next);
    }
}

// f ∈ √I  iff  1 ∈ I + (1 - y*f)
template <class K>
bool radical_member(const Polynomial<K>& f, const Ideal<K>& I,
                    const ComputationBudget& budget = ComputationBudget::standard()) {
    require_same_ring(f.ring(), I.ring());
    if (f.is_zero()) return true;
    const RingPtr& R = I.ring();
    std::string yname = fresh_var_name(*R, "y$");
    std::vector<std::string> vars = R->vars;
    vars.push_back(yname);
    RingPtr C = make_ring(vars, R->field, TermOrder{detail::flat_kind(R->order)});
    std::vector<int> up(R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i) up[i] = static_cast<int>(i);

    Polynomial<K> y = Polynomial<K>::variable(C, C->nvars() - 1);
    Polynomial<K> one = Polynomial<K>::constant(C, field_traits<K>::one(C->field));
    std::vector<Polynomial<K>> gens;
    for (const auto& g : working_gens(I)) gens.push_back(g.mapped(C, up));
    gens.push_back(one - y * f.mapped(C, up));
    return is_unit_ideal(Ideal<K>(C, std::move(gens)), budget);
}

// ------------------------------------------------------------------- maps

// source-variable -> target-polynomial assignment, with optional relations
// imposed in the target (e.g. t*u - 1 for the Laurent encoding).
template <class K>
struct RingMap {
    RingPtr source;
    RingPtr target;
    std::vector<Polynomial<K>> images;     // one per source variable
    std::vector<Polynomial<K>> relations;  // in the target ring

    void validate() const {
        if (images.size() != source->nvars())
            throw std::invalid_argument("ring map needs one image per source variable");
        if (!(source->field == target->field))
            throw std::invalid_argument("ring map requires matching coefficient fields");
        for (const auto& g : images) require_same_ring(g.ring(), target);
        for (const auto& g : relations) require_same_ring(g.ring(), target);
    }
};

template <class K>
Polynomial<K> apply_map(const RingMap<K>& map, const Polynomial<K>& f,
                        const ComputationBudget& budget = ComputationBudget::standard()) {
    require_same_ring(f.ring(), map.source);
    const RingPtr& T = map.target;
    Polynomial<K> acc = Polynomial<K>::zero(T);
    for (const auto& term : f.terms()) {
        Polynomial<K> prod = Polynomial<K>::constant(T, term.first);
        for (std::size_t i = 0; i < map.source->nvars(); ++i) {
            int e = term.second.exp(i);
            Polynomial<K> pw = map.images[i];
            while (e > 0) {
                if (e & 1) prod = prod * pw;
                e >>= 1;
                if (e) pw = pw * pw;
            }
        }
        acc = acc + prod;
    }
    if (!map.relations.empty()) {
        Ideal<K> rel(T, map.relations);
        acc = normal_form(acc, rel.reduced_gb(budget).elements);
    }
    return acc;
}

template <class K>
Ideal<K> apply_map(const RingMap<K>& map, const Ideal<K>& I,
                   const ComputationBudget& budget = ComputationBudget::standard()) {
    std::vector<Polynomial<K>> gens;
    for (const auto& g : I.generators()) gens.push_back(apply_map(map, g, budget));
    return Ideal<K>(map.target, dedup_polys(std::move(gens)));
}

// Kernel via the graph ideal: in k[target vars, source vars], the ideal
// (x_i - image_i) + relations contracts to ker(map) in k[source vars].
// Source variables whose image is the identically-named target variable are
// identified instead of duplicated.
template <class K>
Ideal<K> kernel(const RingMap<K>& map,
                const ComputationBudget& budget = ComputationBudget::standard()) {
    map.validate();
    const RingPtr& S = map.source;
    const RingPtr& T = map.target;

    std::vector<bool> identified(S->nvars(), false);
    for (std::size_t i = 0; i < S->nvars(); ++i) {
        const std::string& name = S->vars[i];
        if (!T->has_var(name)) continue;
        Polynomial<K> tv = Polynomial<K>::variable(T, T->var_index(name));
        if (map.images[i] == tv)
            identified[i] = true;
        else
            throw std::invalid_argument("kernel: source variable '" + name +
                                        "' collides with a target variable");
    }
    std::vector<std::string> elim_names;  // target vars not identified
    for (const auto& tv : T->vars) {
        bool shared = false;
        for (std::size_t i = 0; i < S->nvars(); ++i)
            if (identified[i] && S->vars[i] == tv) shared = true;
        if (!shared) elim_names.push_back(tv);
    }

    std::vector<std::string> cvars = elim_names;
    cvars.insert(cvars.end(), S->vars.begin(), S->vars.end());
    RingPtr C = make_ring(cvars, S->field,
                          TermOrder::block(elim_names.size(), TermOrder::Kind::grevlex,
                                           detail::flat_kind(S->order)));

    std::vector<int> t_to_C(T->nvars(), -1);
    for (std::size_t j = 0; j < T->nvars(); ++j)
        t_to_C[j] = static_cast<int>(C->var_index(T->vars[j]));
    std::vector<int> s_to_C(S->nvars(), -1);
    for (std::size_t i = 0; i < S->nvars(); ++i)
        s_to_C[i] = static_cast<int>(elim_names.size() + i);

    std::vector<Polynomial<K>> gens;
    for (std::size_t i = 0; i < S->nvars(); ++i) {
        if (identified[i]) continue;
        Polynomial<K> x = Polynomial<K>::variable(C, static_cast<std::size_t>(s_to_C[i]));
        gens.push_back(x - map.images[i].mapped(C, t_to_C));
    }
    for (const auto& r : map.relations) gens.push_back(r.mapped(C, t_to_C));

    Ideal<K> big(C, std::move(gens));
    std::vector<std::size_t> elim_idx(elim_names.size());
    for (std::size_t i = 0; i < elim_names.size(); ++i) elim_idx[i] = i;
    return retag(eliminate(big, elim_idx, budget), S);
}

// ------------------------------------------------------- dimension, height

namespace detail {

inline void independent_set_search(const std::vector<std::vector<std::size_t>>& supports,
                                   std::uint64_t mask, int bits,
                                   std::set<std::uint64_t>& visited, int& best) {
    if (bits <= best) return;
    if (visited.count(mask)) return;
    visited.insert(mask);
    for (const auto& sup : supports) {
        bool inside = true;
        for (std::size_t v : sup)
            if (!(mask >> v & 1)) { inside = false; break; }
        if (inside) {
            // the monomial lives on this variable set; shrink and recurse
            for (std::size_t v : sup)
                independent_set_search(supports, mask & ~(std::uint64_t(1) << v), bits - 1,
                                       visited, best);
            return;
        }
    }
    if (bits > best) best = bits;
}

}  // namespace detail

// Krull dimension of ring/I: the largest set S of variables with
// lt(I) ∩ k[S] = 0. Returns -1 for the unit ideal.
template <class K>
int dimension(const Ideal<K>& I,
              const ComputationBudget& budget = ComputationBudget::standard()) {
    const std::size_t n = I.ring()->nvars();
    if (n > 63) throw std::invalid_argument("dimension: too many variables");
    if (I.generators().empty()) return static_cast<int>(n);
    const auto& gb = I.reduced_gb(budget);
    if (is_unit_ideal(I, budget)) return -1;

    std::vector<std::vector<std::size_t>> supports;
    for (const auto& g : gb.elements) supports.push_back(g.leading_monomial().support());

    std::uint64_t full = n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    int best = -1;
    std::set<std::uint64_t> visited;
    detail::independent_set_search(supports, full, static_cast<int>(n), visited, best);
    return best;
}

template <class K>
int height(const Ideal<K>& I,
           const ComputationBudget& budget = ComputationBudget::standard()) {
    int d = dimension(I, budget);
    if (d < 0) throw std::domain_error("height of the unit ideal is undefined");
    return static_cast<int>(I.ring()->nvars()) - d;
}

}  // namespace sprees
