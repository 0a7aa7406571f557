/*
 * rees.hpp
 * Splitting homomorphisms, the two computable spreading constructions
 * (variable duplication and monomial-fine spreading), and presenting
 * ideals of Rees / extended Rees / Rees-like algebras.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sprees/ideal_ops.hpp"

namespace sprees {

// ------------------------------------------------------------- splittings

// One split variable: z ↦ u_1^{p_1} ... u_n^{p_n}. Variables not listed
// map to themselves. A block of size 1 with exponent 1 keeps its name.
struct SplitBlock {
    std::string var;
    std::vector<int> exponents;  // n = exponents.size(), all >= 1
};

struct SplittingSpec {
    std::vector<SplitBlock> blocks;

    void validate() const {
        for (const auto& b : blocks) {
            if (b.exponents.empty())
                throw std::invalid_argument("split block needs at least one factor");
            for (int p : b.exponents)
                if (p < 1) throw std::invalid_argument("split exponents must be >= 1");
        }
    }
};

template <class K>
struct SplitMap {
    RingMap<K> map;
    // per source variable: the target indices of its block
    std::vector<std::vector<std::size_t>> blocks;
};

// Builds the substitution map. New variables are named <var>_1 .. <var>_n;
// a clash with an existing name is an error.
template <class K>
SplitMap<K> splitting_map(const SplittingSpec& spec, const RingPtr& source) {
    spec.validate();
    for (const auto& b : spec.blocks) (void)source->var_index(b.var);

    std::vector<std::string> tvars;
    std::vector<std::vector<std::size_t>> blocks(source->nvars());
    std::vector<std::vector<int>> powers(source->nvars());

    auto block_of = [&](const std::string& name) -> const SplitBlock* {
        for (const auto& b : spec.blocks)
            if (b.var == name) return &b;
        return nullptr;
    };

    for (std::size_t i = 0; i < source->nvars(); ++i) {
        const std::string& name = source->vars[i];
        const SplitBlock* b = block_of(name);
        if (b == nullptr || (b->exponents.size() == 1 && b->exponents[0] == 1)) {
            blocks[i] = {tvars.size()};
            powers[i] = {1};
            tvars.push_back(name);
            continue;
        }
        for (std::size_t j = 0; j < b->exponents.size(); ++j) {
            std::string uname = name + "_" + std::to_string(j + 1);
            if (source->has_var(uname) ||
                std::find(tvars.begin(), tvars.end(), uname) != tvars.end())
                throw std::invalid_argument("splitting name collision on '" + uname + "'");
            blocks[i].push_back(tvars.size());
            tvars.push_back(uname);
        }
        powers[i] = b->exponents;
    }

    RingPtr target = make_ring(tvars, source->field, TermOrder{source->order.kind});

    std::vector<Polynomial<K>> images;
    for (std::size_t i = 0; i < source->nvars(); ++i) {
        std::vector<int> e(target->nvars(), 0);
        for (std::size_t j = 0; j < blocks[i].size(); ++j) e[blocks[i][j]] = powers[i][j];
        images.push_back(Polynomial<K>::monomial(target, field_traits<K>::one(target->field),
                                                 Monomial(std::move(e))));
    }
    return SplitMap<K>{RingMap<K>{source, target, std::move(images), {}}, std::move(blocks)};
}

// ------------------------------------------------------------- spreadings

// J = I + (z - z_1, ..., z - z_n) in the enlarged ring. The duplicates are
// named <z>1 .. <z>n. n = 0 returns I unchanged.
template <class K>
Ideal<K> spread_duplicate(const Ideal<K>& I, const std::string& z, int n) {
    if (n < 0) throw std::invalid_argument("duplicate count must be >= 0");
    if (n == 0) return I;
    const RingPtr& R = I.ring();
    std::size_t zi = R->var_index(z);

    std::vector<std::string> vars = R->vars;
    for (int j = 1; j <= n; ++j) {
        std::string name = z + std::to_string(j);
        if (std::find(vars.begin(), vars.end(), name) != vars.end())
            throw std::invalid_argument("duplicate name collision on '" + name + "'");
        vars.push_back(name);
    }
    std::optional<Multigrading> grading;
    if (R->grading) {
        auto w = R->grading->matrix();
        for (auto& row : w) {
            for (int j = 0; j < n; ++j) row.push_back(row[zi]);
        }
        grading = Multigrading(w);
    }
    RingPtr R2 = make_ring(vars, R->field, TermOrder{R->order.kind}, grading);

    std::vector<int> up(R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i) up[i] = static_cast<int>(i);

    std::vector<Polynomial<K>> gens;
    for (const auto& g : I.generators()) gens.push_back(g.mapped(R2, up));
    Polynomial<K> zv = Polynomial<K>::variable(R2, zi);
    for (int j = 0; j < n; ++j)
        gens.push_back(zv - Polynomial<K>::variable(R2, R->nvars() + static_cast<std::size_t>(j)));
    return Ideal<K>(R2, std::move(gens));
}

namespace detail {

inline void compositions(int total, int parts, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// Monomial-fine spreading: under the fine grading every homogeneous element
// is a scalar times a monomial, so spr(I) is generated by all monomial
// preimages of the generators under u_{ij} ↦ z_i.
template <class K>
struct MonomialSpread {
    SplitMap<K> split;  // carries the target ring and block layout
    Ideal<K> ideal;
};

template <class K>
MonomialSpread<K> spread_monomial_fine(const Ideal<K>& I, const SplittingSpec& spec) {
    for (const auto& g : I.generators())
        if (!g.is_monomial())
            throw std::invalid_argument("monomial-fine spreading needs a monomial ideal");
    for (const auto& b : spec.blocks)
        for (int p : b.exponents)
            if (p != 1)
                throw std::invalid_argument("monomial-fine spreading uses exponents 1");

    SplitMap<K> split = splitting_map<K>(spec, I.ring());
    const RingPtr T = split.map.target;  // copy: `split` is moved on return
    const auto& blocks = split.blocks;

    std::vector<Monomial> preimages;
    for (const auto& g : I.generators()) {
        const Monomial& m = g.leading_monomial();
        // per source variable, all ways to distribute its exponent over the block
        std::vector<std::vector<std::vector<int>>> choices;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            std::vector<std::vector<int>> comps;
            std::vector<int> cur;
            detail::compositions(m.exp(i), static_cast<int>(blocks[i].size()), cur, comps);
            choices.push_back(std::move(comps));
        }
        std::vector<int> e(T->nvars(), 0);
        std::vector<std::size_t> pick(blocks.size(), 0);
        while (true) {
            std::fill(e.begin(), e.end(), 0);
            for (std::size_t i = 0; i < blocks.size(); ++i)
                for (std::size_t j = 0; j < blocks[i].size(); ++j)
                    e[blocks[i][j]] = choices[i][pick[i]][j];
            preimages.push_back(Monomial(e));
            std::size_t pos = 0;
            while (pos < blocks.size() && pick[pos] + 1 == choices[pos].size())
                pick[pos++] = 0;
            if (pos == blocks.size()) break;
            ++pick[pos];
        }
    }
    // minimal generating set
    std::vector<Monomial> minimal;
    std::sort(preimages.begin(), preimages.end(),
              [](const Monomial& a, const Monomial& b) { return a.exps() < b.exps(); });
    preimages.erase(std::unique(preimages.begin(), preimages.end()), preimages.end());
    for (std::size_t i = 0; i < preimages.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < preimages.size(); ++j)
            if (i != j && mono_divides(preimages[j], preimages[i])) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(preimages[i]);
    }
    std::vector<Polynomial<K>> gens;
    for (const auto& m : minimal)
        gens.push_back(Polynomial<K>::monomial(T, field_traits<K>::one(T->field), m));
    return MonomialSpread<K>{std::move(split), Ideal<K>(T, std::move(gens))};
}

// -------------------------------------------------------- Rees presentations

enum class ReesKind { rees, extended_rees, rees_like };

inline std::string rees_kind_name(ReesKind k) {
    switch (k) {
        case ReesKind::rees: return "rees";
        case ReesKind::extended_rees: return "extended";
        case ReesKind::rees_like: return "reeslike";
    }
    return "?";
}

template <class K>
struct ReesPresentation {
    ReesKind kind;
    RingPtr ring;               // S[Z_1..Z_m (, T)]
    Ideal<K> presenting_ideal;  // ker psi
    RingMap<K> psi;             // ring -> S[t (, T)] with t*T = 1 when extended
    std::vector<std::size_t> z_indices;
    std::optional<std::size_t> t_index;  // index of T in `ring`
};

// Presents the chosen Rees algebra of J = (a_1, ..., a_m): Z_i ↦ a_i t and
// T ↦ t^{-1} (extended) or t^2 (Rees-like). Generator order is preserved so
// Z_i indices match the input list. Optional names override Z1..Zm / T.
template <class K>
ReesPresentation<K> rees_presentation(const Ideal<K>& J, ReesKind kind,
                                      const ComputationBudget& budget = ComputationBudget::standard(),
                                      std::vector<std::string> z_names = {},
                                      std::string t_name = "") {
    const RingPtr& S = J.ring();
    const auto& gens = J.generators();
    if (gens.empty()) throw std::invalid_argument("rees presentation of the zero ideal");
    const std::size_t m = gens.size();

    if (z_names.empty()) {
        for (std::size_t i = 1; i <= m; ++i) z_names.push_back("Z" + std::to_string(i));
    }
    if (z_names.size() != m)
        throw std::invalid_argument("need one presentation variable per generator");
    const bool has_T = kind != ReesKind::rees;
    if (t_name.empty()) t_name = "T";

    // presentation ring S[Z..., T]
    std::vector<std::string> pvars = S->vars;
    for (const auto& zn : z_names) {
        if (std::find(pvars.begin(), pvars.end(), zn) != pvars.end())
            throw std::invalid_argument("presentation name collision on '" + zn + "'");
        pvars.push_back(zn);
    }
    if (has_T) {
        if (std::find(pvars.begin(), pvars.end(), t_name) != pvars.end())
            throw std::invalid_argument("presentation name collision on '" + t_name + "'");
        pvars.push_back(t_name);
    }

    // quasi-homogeneous weights when the base ring carries a positive
    // one-row grading and a shift keeps everything positive
    std::optional<Multigrading> grading;
    if (S->grading && S->grading->rows() == 1 && S->grading->positive()) {
        std::vector<std::int64_t> degs;
        bool all_homog = true;
        for (const auto& g : gens) {
            auto rep = g.degree_report(*S->grading);
            if (!rep.homogeneous) { all_homog = false; break; }
            degs.push_back(rep.degree[0]);
        }
        if (all_homog) {
            std::int64_t mindeg = degs[0];
            for (auto d : degs) mindeg = std::min(mindeg, d);
            std::int64_t mu = kind == ReesKind::rees_like ? 1 : -(mindeg - 1);
            bool ok = true;
            std::vector<std::int64_t> w = S->grading->matrix()[0];
            for (auto d : degs) {
                w.push_back(d + mu);
                if (d + mu <= 0) ok = false;
            }
            if (has_T) {
                std::int64_t tw = kind == ReesKind::rees_like ? 2 * mu : -mu;
                w.push_back(tw);
                if (tw <= 0) ok = false;
            }
            if (ok) grading = Multigrading::weights(std::move(w));
        }
    }

    RingPtr R = make_ring(pvars, S->field, TermOrder{detail::flat_kind(S->order)}, grading);

    // target: S[t] or the Laurent pair S[t, T] with t*T = 1
    std::string lt = "t";
    {
        // avoid clashing with base variables
        std::vector<std::string> taken = S->vars;
        taken.push_back(t_name);
        while (std::find(taken.begin(), taken.end(), lt) != taken.end()) lt += "t";
    }
    std::vector<std::string> tvars = S->vars;
    tvars.push_back(lt);
    if (kind == ReesKind::extended_rees) tvars.push_back(t_name);
    RingPtr Tring = make_ring(tvars, S->field, TermOrder{detail::flat_kind(S->order)});

    std::vector<int> s_to_T(S->nvars());
    for (std::size_t i = 0; i < S->nvars(); ++i) s_to_T[i] = static_cast<int>(i);
    Polynomial<K> t = Polynomial<K>::variable(Tring, S->nvars());

    std::vector<Polynomial<K>> images;
    for (std::size_t i = 0; i < S->nvars(); ++i)
        images.push_back(Polynomial<K>::variable(Tring, i));
    for (std::size_t i = 0; i < m; ++i) images.push_back(gens[i].mapped(Tring, s_to_T) * t);

    std::vector<Polynomial<K>> relations;
    if (kind == ReesKind::extended_rees) {
        Polynomial<K> Tv = Polynomial<K>::variable(Tring, S->nvars() + 1);
        images.push_back(Tv);  // T is identified with the Laurent inverse
        relations.push_back(t * Tv -
                            Polynomial<K>::constant(Tring, field_traits<K>::one(Tring->field)));
    } else if (kind == ReesKind::rees_like) {
        images.push_back(t * t);
    }

    RingMap<K> psi{R, Tring, std::move(images), std::move(relations)};
    Ideal<K> P = kernel(psi, budget);  // lands in R with its grading

    ReesPresentation<K> out{kind, R, std::move(P), std::move(psi), {}, std::nullopt};
    for (std::size_t i = 0; i < m; ++i) out.z_indices.push_back(S->nvars() + i);
    if (has_T) out.t_index = S->nvars() + m;
    return out;
}

}  // namespace sprees
