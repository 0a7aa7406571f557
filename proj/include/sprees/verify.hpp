/*
 * verify.hpp
 * Report-producing verifiers for the three headline statements: the
 * splitting count of embedded primes of P^e, the nine-variable extended
 * Rees prime with its two embedded primes, and its spread form.
 */
#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "sprees/certify.hpp"
#include "sprees/families.hpp"
#include "sprees/report.hpp"

namespace sprees {

namespace detail {

// hands out per-call budgets bounded by a shared deadline
class DeadlineBudget {
  public:
    DeadlineBudget(ComputationBudget base, double total_seconds)
        : base_(base), total_(total_seconds) {}

    ComputationBudget next() const {
        double remaining = total_ - clock_.seconds();
        if (remaining <= 0.0)
            throw BudgetExceeded("budget exceeded: verification deadline", {});
        ComputationBudget b = base_;
        b.max_seconds = std::min(b.max_seconds, remaining);
        return b;
    }

  private:
    ComputationBudget base_;
    double total_;
    BudgetClock clock_;
};

template <class Fn>
void run_check(Report& rep, const std::string& name, bool optional, Fn&& fn) {
    CheckRecord c;
    c.name = name;
    c.optional = optional;
    c.status = "fail";
    BudgetClock clock;
    try {
        fn(c);
    } catch (const BudgetExceeded& e) {
        c.status = "budget-exceeded";
        c.data["error"] = e.what();
    } catch (const std::exception& e) {
        c.status = "fail";
        c.data["error"] = e.what();
    }
    c.time_ms = clock.seconds() * 1000.0;
    rep.add(std::move(c));
}

inline void set_status(CheckRecord& c, bool ok) { c.status = ok ? "pass" : "fail"; }

template <class K>
std::string gens_string(const Ideal<K>& I) {
    std::string s;
    for (const auto& g : I.generators()) {
        if (!s.empty()) s += ", ";
        s += g.to_string();
    }
    return s.empty() ? "0" : s;
}

}  // namespace detail

// ------------------------------------------------------------- Theorem 5.1

// P^e for the split family has exactly Π v_i embedded primes, namely one
// variable picked from each split block; each is certified by an explicit
// witness and has height m.
//
// Completeness of the candidate set: P is quasi-homogeneous of height m-1,
// so an embedded prime of P^e is a quasi-homogeneous prime of height
// exactly m containing P, and the only such primes are the block-choice
// variable ideals enumerated here. Non-candidates of height m are refuted
// unconditionally under --exhaustive: if the saturation of P^e at Q' does
// not move, no associated prime contains Q'.
template <class K>
Report verify_thm51(int m, const std::vector<int>& v, int e, bool exhaustive,
                    const FieldSpec& field,
                    const ComputationBudget& budget = ComputationBudget::standard(),
                    std::uint64_t seed = 0) {
    Report rep;
    rep.command = "verify thm51";
    rep.field = field.to_string();
    rep.order = "grevlex";
    rep.seed = seed;
    rep.budget = budget;
    rep.inputs["m"] = m;
    {
        auto varr = nlohmann::ordered_json::array();
        for (int vi : v) varr.push_back(vi);
        rep.inputs["v"] = varr;
    }
    rep.inputs["e"] = e;
    rep.inputs["exhaustive"] = exhaustive;

    if (m < 3) throw std::invalid_argument("verify thm51 needs m >= 3");
    if (e < 2) throw std::invalid_argument("verify thm51 needs e >= 2");

    std::optional<Thm51Family<K>> famopt;
    detail::run_check(rep, "build_family", false, [&](CheckRecord& c) {
        famopt.emplace(family_thm51<K>(m, v, field, budget));
        c.status = "pass";
    });
    if (!famopt) return rep;
    Thm51Family<K>& fam = *famopt;
    const RingPtr& R = fam.P.ring();

    detail::run_check(rep, "p_height", false, [&](CheckRecord& c) {
        int h = height(fam.P, budget);
        c.data["height"] = h;
        detail::set_status(c, h == m - 1);
    });

    Ideal<K> Pe = ideal_power(fam.P, e);

    // candidates: one variable from each split block
    std::vector<std::vector<std::size_t>> candidates;
    {
        std::vector<std::size_t> pick(fam.split.blocks.size(), 0);
        while (true) {
            std::vector<std::size_t> q;
            for (std::size_t i = 0; i < fam.split.blocks.size(); ++i)
                q.push_back(fam.split.blocks[i][pick[i]]);
            std::sort(q.begin(), q.end());
            candidates.push_back(std::move(q));
            std::size_t pos = 0;
            while (pos < pick.size() && pick[pos] + 1 == fam.split.blocks[pos].size())
                pick[pos++] = 0;
            if (pos == pick.size()) break;
            ++pick[pos];
        }
    }

    long long expected = 1;
    for (int vi : v) expected *= vi;

    int verified = 0;
    for (const auto& cand : candidates) {
        Ideal<K> Q = variable_ideal<K>(R, cand);
        std::string label = "candidate";
        for (std::size_t idx : cand) label += "_" + R->vars[idx];
        detail::run_check(rep, label, false, [&](CheckRecord& c) {
            auto cert = find_witness(Pe, Q, budget, WitnessSearchOptions{seed, 64});
            c.data["status"] = cert_status_name(cert.status);
            if (cert.status == CertStatus::verified) {
                c.data["witness"] = cert.witness.to_string();
                int h = height(Q, budget);
                c.data["height"] = h;
                detail::set_status(c, h == m);
                if (c.status == "pass") ++verified;
            } else {
                c.status = "fail";
            }
        });
    }

    detail::run_check(rep, "embedded_count", false, [&](CheckRecord& c) {
        c.data["expected"] = expected;
        c.data["verified"] = verified;
        detail::set_status(c, verified == expected);
    });

    if (exhaustive) {
        // spot-refute every other height-m variable prime: the saturation
        // of P^e at it must not move
        std::set<std::vector<std::size_t>> cand_set(candidates.begin(), candidates.end());
        std::vector<std::size_t> subset;
        std::vector<std::vector<std::size_t>> rest;
        std::function<void(std::size_t)> gen = [&](std::size_t start) {
            if (static_cast<int>(subset.size()) == m) {
                if (!cand_set.count(subset)) rest.push_back(subset);
                return;
            }
            for (std::size_t i = start; i < R->nvars(); ++i) {
                subset.push_back(i);
                gen(i + 1);
                subset.pop_back();
            }
        };
        gen(0);
        for (const auto& s : rest) {
            Ideal<K> Q = variable_ideal<K>(R, s);
            std::string label = "refute";
            for (std::size_t idx : s) label += "_" + R->vars[idx];
            detail::run_check(rep, label, false, [&](CheckRecord& c) {
                auto sat = saturate_ideal(Pe, Q, budget);
                bool unmoved = ideal_equal(sat.ideal, Pe, budget);
                c.data["saturation_moved"] = !unmoved;
                detail::set_status(c, unmoved);
            });
        }
    }
    return rep;
}

// --------------------------------------------------------- Proposition 3.3

// Fast tier: the eighteen kernel memberships, the two product identities
// (exact over the rationals), and the Groebner-level facts about the
// nine-variable prime. Deep tier adds the second-power colon computations.
template <class K>
Report verify_prop33(bool deep, const FieldSpec& field,
                     const ComputationBudget& budget = ComputationBudget::standard(),
                     std::uint64_t seed = 0, double deep_seconds = 1800.0) {
    Report rep;
    rep.command = "verify prop33";
    rep.field = field.to_string();
    rep.order = "grevlex";
    rep.seed = seed;
    rep.budget = budget;
    rep.inputs["deep"] = deep;

    // identity checks are exact rational arithmetic regardless of the
    // working field
    std::optional<Prop33Family<Rat>> famq_opt;
    detail::run_check(rep, "build_presentation_q", false, [&](CheckRecord& c) {
        famq_opt.emplace(family_prop33<Rat>(make_rationals(), budget));
        c.status = "pass";
    });
    if (!famq_opt) return rep;
    Prop33Family<Rat>& famq = *famq_opt;
    for (std::size_t i = 0; i < famq.f.size(); ++i) {
        detail::run_check(rep, "psi_f" + std::to_string(i + 1) + "_zero", false,
                          [&](CheckRecord& c) {
                              detail::set_status(
                                  c, apply_map(famq.pres.psi, famq.f[i]).is_zero());
                          });
    }
    auto aq = Polynomial<Rat>::variable(famq.pres.ring, 0);
    auto cq = Polynomial<Rat>::variable(famq.pres.ring, 2);
    detail::run_check(rep, "alpha_product_identity", false, [&](CheckRecord& c) {
        c.data["identity"] = "a*alpha = f1*f2 - f3*f4";
        detail::set_status(c, aq * famq.alpha == famq.f[0] * famq.f[1] - famq.f[2] * famq.f[3]);
    });
    detail::run_check(rep, "beta_product_identity", false, [&](CheckRecord& c) {
        c.data["identity"] = "c*beta = f1*f16 + f11*f17 - f3*f8";
        detail::set_status(
            c, cq * famq.beta == famq.f[0] * famq.f[15] + famq.f[10] * famq.f[16] -
                                     famq.f[2] * famq.f[7]);
    });
    detail::run_check(rep, "beta_identity_as_printed", false, [&](CheckRecord& c) {
        // the combination f1*f16 + f11*f17 - f8*f18 appearing in the source
        // text does not close; the corrected combination above does
        bool matches = cq * famq.beta == famq.f[0] * famq.f[15] + famq.f[10] * famq.f[16] -
                                             famq.f[7] * famq.f[17];
        c.data["matches"] = matches;
        c.data["note"] = "known transcription error; informational only";
        c.status = "info";
    });

    // Groebner-level facts over the working field
    std::optional<Prop33Family<K>> fam_opt;
    detail::run_check(rep, "build_presentation", false, [&](CheckRecord& c) {
        fam_opt.emplace(family_prop33<K>(field, budget));
        c.status = "pass";
    });
    if (!fam_opt) return rep;
    Prop33Family<K>& fam = *fam_opt;
    const Ideal<K>& P = fam.pres.presenting_ideal;
    detail::run_check(rep, "pz_height_5", false, [&](CheckRecord& c) {
        c.data["basis_size"] = P.reduced_gb(budget).elements.size();
        int h = height(P, budget);
        c.data["height"] = h;
        detail::set_status(c, h == 5);
    });
    detail::run_check(rep, "pz_contains_no_variable", false, [&](CheckRecord& c) {
        bool ok = true;
        for (std::size_t i = 0; i < fam.pres.ring->nvars(); ++i)
            if (member(Polynomial<K>::variable(fam.pres.ring, i), P, budget)) ok = false;
        detail::set_status(c, ok);
    });

    // leading-term sanity under lex a > b > c > Z1 > ... > Z5 > T: the
    // factorizations that would put alpha or beta in P^2 are impossible
    RingPtr lexring = make_ring(fam.pres.ring->vars, field, TermOrder::lex());
    Ideal<K> Plex = change_ring(P, lexring);
    detail::run_check(rep, "pz_lex_basis", false, [&](CheckRecord& c) {
        c.data["size"] = Plex.reduced_gb(budget).elements.size();
        c.status = "pass";
    });
    if (!Plex.has_cached_gb()) return rep;
    const auto& gblex = Plex.reduced_gb(budget).elements;
    auto no_lt_divides = [&](const char* text) {
        Monomial m =
            materialize<K>(parse_polynomial_text(text, lexring->vars), lexring).leading_monomial();
        for (const auto& g : gblex)
            if (mono_divides(g.leading_monomial(), m)) return false;
        return true;
    };
    detail::run_check(rep, "alpha_leading_term_sanity", false, [&](CheckRecord& c) {
        auto alpha_lex = materialize<K>(
            parse_polynomial_text(prop33_alpha_string(), lexring->vars), lexring);
        bool lm_ok = alpha_lex.leading_monomial() ==
                     materialize<K>(parse_polynomial_text("a^4*Z2", lexring->vars), lexring)
                         .leading_monomial();
        c.data["lm_is_a4Z2"] = lm_ok;
        detail::set_status(c, lm_ok && no_lt_divides("a^3") && no_lt_divides("Z2"));
    });
    detail::run_check(rep, "beta_leading_term_sanity", false, [&](CheckRecord& c) {
        auto beta_lex = materialize<K>(
            parse_polynomial_text(prop33_beta_string(), lexring->vars), lexring);
        bool lm_ok = beta_lex.leading_monomial() ==
                     materialize<K>(parse_polynomial_text("a^5*Z3", lexring->vars), lexring)
                         .leading_monomial();
        c.data["lm_is_a5Z3"] = lm_ok;
        detail::set_status(c, lm_ok && no_lt_divides("a^3") && no_lt_divides("a*Z3"));
    });

    if (!deep) return rep;

    detail::DeadlineBudget deadline(budget, deep_seconds);
    Ideal<K> P2 = ideal_power(Ideal<K>(fam.pres.ring, working_gens(P)), 2);

    detail::run_check(rep, "alpha_not_in_p2", true, [&](CheckRecord& c) {
        detail::set_status(c, !member(fam.alpha, P2, deadline.next()));
    });
    detail::run_check(rep, "beta_not_in_p2", true, [&](CheckRecord& c) {
        detail::set_status(c, !member(fam.beta, P2, deadline.next()));
    });

    detail::run_check(rep, "radical_p2_colon_alpha", true, [&](CheckRecord& c) {
        Ideal<K> W = quotient(P2, fam.alpha, deadline.next());
        bool all_in = true;
        for (const auto& g : fam.Q1.generators())
            if (!radical_member(g, W, deadline.next())) all_in = false;
        bool c_out = !radical_member(Polynomial<K>::variable(fam.pres.ring, 2), W,
                                     deadline.next());
        c.data["q1_generators_in"] = all_in;
        c.data["c_excluded"] = c_out;
        detail::set_status(c, all_in && c_out);
    });
    detail::run_check(rep, "radical_p2_colon_beta", true, [&](CheckRecord& c) {
        Ideal<K> W = quotient(P2, fam.beta, deadline.next());
        bool all_in = true;
        for (const auto& g : fam.maximal.generators())
            if (!radical_member(g, W, deadline.next())) all_in = false;
        c.data["maximal_generators_in"] = all_in;
        detail::set_status(c, all_in);
    });
    return rep;
}

// ----------------------------------------------- other presentation kinds

// Optional stretch: the plain Rees and Rees-like presentations of the same
// base ideal. Fast tier checks height and primality sanity; the deep tier
// determines the status of every candidate embedded prime of the square:
// witness certificates for membership, the maximal-ideal socle test and
// saturation for exact refutation.
template <class K>
Report verify_remark(ReesKind kind, bool deep, const FieldSpec& field,
                     const ComputationBudget& budget = ComputationBudget::standard(),
                     std::uint64_t seed = 0, double deep_seconds = 1800.0) {
    if (kind == ReesKind::extended_rees)
        throw std::invalid_argument(
            "verify remark covers the rees and reeslike kinds; use verify prop33 for "
            "the extended presentation");
    Report rep;
    rep.command = "verify remark";
    rep.field = field.to_string();
    rep.order = "grevlex";
    rep.seed = seed;
    rep.budget = budget;
    rep.inputs["kind"] = rees_kind_name(kind);
    rep.inputs["deep"] = deep;

    std::optional<ReesPresentation<K>> pres_opt;
    detail::run_check(rep, "build_presentation", false, [&](CheckRecord& c) {
        pres_opt.emplace(rees_presentation(nine_variable_base_ideal<K>(field), kind, budget));
        c.status = "pass";
    });
    if (!pres_opt) return rep;
    ReesPresentation<K>& pres = *pres_opt;
    const RingPtr& R = pres.ring;
    const Ideal<K>& P = pres.presenting_ideal;
    const int expected_height = kind == ReesKind::rees ? 4 : 5;

    detail::run_check(rep, "height", false, [&](CheckRecord& c) {
        int h = height(P, budget);
        c.data["height"] = h;
        c.data["expected"] = expected_height;
        detail::set_status(c, h == expected_height);
    });
    detail::run_check(rep, "contains_no_variable", false, [&](CheckRecord& c) {
        bool ok = true;
        for (std::size_t i = 0; i < R->nvars(); ++i)
            if (member(Polynomial<K>::variable(R, i), P, budget)) ok = false;
        detail::set_status(c, ok);
    });
    if (!deep) return rep;

    detail::DeadlineBudget deadline(budget, deep_seconds);
    Ideal<K> P2 = ideal_power(Ideal<K>(R, working_gens(P)), 2);
    auto vars_ideal = [&](const std::vector<std::string>& names) {
        std::vector<std::size_t> idx;
        for (const auto& n : names) idx.push_back(R->var_index(n));
        return variable_ideal<K>(R, idx);
    };
    const std::vector<std::string> zs = {"Z1", "Z2", "Z3", "Z4", "Z5"};
    auto with = [&](std::vector<std::string> base) {
        base.insert(base.end(), zs.begin(), zs.end());
        return base;
    };

    detail::run_check(rep, "eight_variable_prime_associated", true, [&](CheckRecord& c) {
        auto cert = find_witness(P2, vars_ideal(with({"a", "b"})), deadline.next(),
                                 WitnessSearchOptions{seed, 64});
        c.data["status"] = cert_status_name(cert.status);
        if (cert.status == CertStatus::verified) c.data["witness"] = cert.witness.to_string();
        detail::set_status(c, cert.status == CertStatus::verified);
    });
    if (kind == ReesKind::rees) {
        // (a,b,c,Z1..Z5) is the maximal ideal here; the socle test is exact
        detail::run_check(rep, "maximal_ideal_not_associated", true, [&](CheckRecord& c) {
            detail::set_status(c, !graded_max_test(P2, deadline.next()));
        });
        return rep;
    }

    detail::run_check(rep, "nine_variable_c_prime_associated", true, [&](CheckRecord& c) {
        auto cert = find_witness(P2, vars_ideal(with({"a", "b", "c"})), deadline.next(),
                                 WitnessSearchOptions{seed, 64});
        c.data["status"] = cert_status_name(cert.status);
        if (cert.status == CertStatus::verified) c.data["witness"] = cert.witness.to_string();
        detail::set_status(c, cert.status == CertStatus::verified);
    });
    detail::run_check(rep, "maximal_ideal_not_associated", true, [&](CheckRecord& c) {
        detail::set_status(c, !graded_max_test(P2, deadline.next()));
    });
    detail::run_check(rep, "t_prime_not_associated", true, [&](CheckRecord& c) {
        // saturation unmoved: no associated prime contains (a,b,Z1..Z5,T)
        auto Q = vars_ideal(with({"a", "b", "T"}));
        auto sat = saturate_ideal(P2, Q, deadline.next());
        detail::set_status(c, ideal_equal(sat.ideal, P2, deadline.next()));
    });
    return rep;
}

// ------------------------------------------------------------- Theorem 5.3

// Certifies the maximal ideal of the spread presentation as embedded in
// P_U^2 and exhibits a second embedded prime containing the n+7 variables
// of Q'_U = (a, b, U_1..U_n, Z2..Z5, T); its exact variable count is open.
template <class K>
Report verify_thm53(int n, bool deep, const FieldSpec& field,
                    const ComputationBudget& budget = ComputationBudget::standard(),
                    std::uint64_t seed = 0, double deep_seconds = 1800.0) {
    Report rep;
    rep.command = "verify thm53";
    rep.field = field.to_string();
    rep.order = "grevlex";
    rep.seed = seed;
    rep.budget = budget;
    rep.inputs["n"] = n;
    rep.inputs["deep"] = deep;
    if (n < 1 || n > 2)
        throw std::invalid_argument("verify thm53 supports n in {1, 2} at desk scale");

    std::optional<Thm53Family<K>> famopt;
    detail::run_check(rep, "build_family", false, [&](CheckRecord& c) {
        famopt.emplace(family_thm53<K>(n, field, budget));
        c.status = "pass";
    });
    if (!famopt) return rep;
    Thm53Family<K>& fam = *famopt;
    const RingPtr& SU = fam.pres.ring;
    const Ideal<K>& PU = fam.pres.presenting_ideal;
    const Ideal<K>& PZ = fam.nine.pres.presenting_ideal;

    detail::run_check(rep, "pu_height", false, [&](CheckRecord& c) {
        int h = height(PU, budget);
        c.data["height"] = h;
        c.data["expected"] = n + 4;
        detail::set_status(c, h == n + 4);
    });
    detail::run_check(rep, "phi_maps_pu_into_pz", false, [&](CheckRecord& c) {
        bool ok = true;
        for (const auto& g : PU.reduced_gb(budget).elements)
            if (!member(apply_map(fam.Phi, g), PZ, budget)) ok = false;
        detail::set_status(c, ok);
    });

    if (!deep) return rep;

    detail::DeadlineBudget deadline(budget, deep_seconds);
    Ideal<K> PU2 = ideal_power(Ideal<K>(SU, working_gens(PU)), 2);

    detail::run_check(rep, "maximal_ideal_associated", true, [&](CheckRecord& c) {
        detail::set_status(c, graded_max_test(PU2, deadline.next()));
    });

    // transported witness for the second embedded prime: prefer a certified
    // witness for Q_Z on the nine-variable side, fall back to the stored
    // colon witness alpha; either must avoid c and Z1 to transport
    Ideal<K> PZ2 = ideal_power(Ideal<K>(fam.nine.pres.ring, working_gens(PZ)), 2);
    Polynomial<K> gZ = fam.nine.alpha;
    std::string witness_kind = "alpha";
    detail::run_check(rep, "witness_transport", false, [&](CheckRecord& c) {
        auto cert = find_witness(PZ2, fam.nine.Q1, deadline.next(),
                                 WitnessSearchOptions{seed, 16});
        if (cert.status == CertStatus::verified) {
            const auto& w = cert.witness;
            std::size_t ci = fam.nine.pres.ring->var_index("c");
            std::size_t z1i = fam.nine.pres.ring->var_index("Z1");
            bool clean = true;
            for (const auto& t : w.terms())
                if (t.second.exp(ci) != 0 || t.second.exp(z1i) != 0) clean = false;
            if (clean) {
                gZ = w;
                witness_kind = "certified";
            }
        }
        c.data["witness_kind"] = witness_kind;
        c.status = "pass";
    });
    // lift along Phi: shared names keep their meaning
    std::vector<int> lift(fam.nine.pres.ring->nvars(), -1);
    for (std::size_t i = 0; i < fam.nine.pres.ring->nvars(); ++i) {
        const std::string& name = fam.nine.pres.ring->vars[i];
        if (name == "c" || name == "Z1") continue;  // witness avoids these
        lift[i] = static_cast<int>(SU->var_index(name));
    }
    Polynomial<K> gU = gZ.mapped(SU, lift);

    detail::run_check(rep, "witness_not_in_pu2", true, [&](CheckRecord& c) {
        c.data["witness_kind"] = witness_kind;
        detail::set_status(c, !member(gU, PU2, deadline.next()));
    });
    detail::run_check(rep, "second_prime_radical", true, [&](CheckRecord& c) {
        Ideal<K> W = quotient(PU2, gU, deadline.next());
        std::vector<std::string> qprime = {"a", "b", "Z2", "Z3", "Z4", "Z5", "T"};
        for (int i = 1; i <= n; ++i) qprime.push_back("U_" + std::to_string(i));
        bool all_in = true;
        for (const auto& name : qprime)
            if (!radical_member(Polynomial<K>::variable(SU, SU->var_index(name)), W,
                                deadline.next()))
                all_in = false;
        bool cs_out = true;
        for (int i = 1; i <= n; ++i) {
            std::string cname = n == 1 ? "c" : "c_" + std::to_string(i);
            if (radical_member(Polynomial<K>::variable(SU, SU->var_index(cname)), W,
                               deadline.next()))
                cs_out = false;
        }
        c.data["qprime_generators_in"] = all_in;
        c.data["c_variables_excluded"] = cs_out;
        c.data["variable_lower_bound"] = n + 7;
        detail::set_status(c, all_in && cs_out);
    });
    return rep;
}

}  // namespace sprees
