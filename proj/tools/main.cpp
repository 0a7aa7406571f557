/*
 * sprees command-line tool: Groebner bases, ideal operations, the family
 * builders, and the verification commands, with JSON reports.
 */
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "sprees/verify.hpp"

using namespace sprees;

namespace {

struct GlobalOpts {
    std::string field = "fp:32003";
    bool field_given = false;
    std::string order = "grevlex";
    bool order_given = false;
    std::int64_t budget_pairs = 200000;
    double budget_seconds = 600.0;
    std::string json_path;
    std::uint64_t seed = 0;

    ComputationBudget budget() const {
        ComputationBudget b;
        b.max_pairs = budget_pairs;
        b.max_seconds = budget_seconds;
        return b;
    }
};

struct Args {
    std::string command;
    std::string file, poly, map, kind, spec, var, which, ideal, prime, witness, assmode;
    std::string vlist;
    int m = 3, n = 1, e = 2, count = 1;
    bool exhaustive = false, deep = false;

    std::vector<int> v() const {
        std::vector<int> out;
        std::stringstream vs(vlist);
        std::string num;
        while (std::getline(vs, num, ',')) {
            try {
                out.push_back(std::stoi(num));
            } catch (const std::exception&) {
                throw CLI::ValidationError("--v", "expected a comma-separated integer list");
            }
        }
        return out;
    }
};

int finish(Report& rep, const GlobalOpts& g) {
    std::cout << report_to_text(rep);
    if (!g.json_path.empty()) write_report_file(rep, g.json_path);
    if (rep.budget_exceeded()) return 3;
    return rep.pass() ? 0 : 1;
}

FieldSpec resolve_field(const GlobalOpts& g, const IdealFileData* file) {
    if (!g.field_given && file && file->field_declared) return file->field;
    return parse_field_spec(g.field);
}
TermOrder resolve_order(const GlobalOpts& g, const IdealFileData* file) {
    if (!g.order_given && file && file->order_declared) return file->order;
    return parse_order_spec(g.order);
}

std::string ideal_output(const RingPtr& ring, const std::vector<std::string>& polys) {
    return print_ideal_file(ring->vars, ring->field, ring->order, polys);
}

template <class K>
std::vector<std::string> poly_strings(const std::vector<Polynomial<K>>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(p.to_string());
    return out;
}

SplittingSpec parse_split_spec(const std::string& text) {
    // "z=3" (block of three, exponents 1) or "z=2,1;x=2"
    SplittingSpec spec;
    std::stringstream ss(text);
    std::string blockstr;
    while (std::getline(ss, blockstr, ';')) {
        if (blockstr.empty()) continue;
        auto eq = blockstr.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--spec", "expected var=<n> or var=p1,p2,...");
        SplitBlock b;
        b.var = blockstr.substr(0, eq);
        std::string rhs = blockstr.substr(eq + 1);
        if (rhs.find(',') == std::string::npos) {
            int n = std::stoi(rhs);
            b.exponents.assign(static_cast<std::size_t>(n), 1);
        } else {
            std::stringstream rs(rhs);
            std::string num;
            while (std::getline(rs, num, ',')) b.exponents.push_back(std::stoi(num));
        }
        spec.blocks.push_back(std::move(b));
    }
    if (spec.blocks.empty()) throw CLI::ValidationError("--spec", "empty splitting spec");
    return spec;
}

template <class K>
Report base_report(const std::string& command, const FieldSpec& field, const TermOrder& order,
                   const GlobalOpts& g) {
    Report rep;
    rep.command = command;
    rep.field = field.to_string();
    rep.order = order.to_string();
    rep.seed = g.seed;
    rep.budget = g.budget();
    return rep;
}

template <class K>
int run(const GlobalOpts& g, const Args& a) {
    const std::string& cmd = a.command;

    if (cmd == "gb" || cmd == "nf" || cmd == "member" || cmd == "radical-member" ||
        cmd == "rees" || cmd == "split" || cmd == "spread" || cmd == "ass" ||
        cmd == "certify") {
        auto file = parse_ideal_file(cmd == "certify" ? a.ideal : a.file);
        FieldSpec field = resolve_field(g, &file);
        TermOrder order = resolve_order(g, &file);
        RingPtr ring = make_ring(file.vars, field, order);
        Ideal<K> I = materialize_ideal<K>(file, ring);
        Report rep = base_report<K>(cmd, field, order, g);
        rep.inputs["file"] = cmd == "certify" ? a.ideal : a.file;

        if (cmd == "gb") {
            detail::run_check(rep, "groebner_basis", false, [&](CheckRecord& c) {
                const auto& gb = I.reduced_gb(g.budget());
                std::cout << ideal_output(ring, poly_strings(gb.elements));
                c.data["size"] = gb.elements.size();
                rep.budget_stats = gb.stats;
                c.status = "pass";
            });
        } else if (cmd == "nf") {
            rep.inputs["poly"] = a.poly;
            detail::run_check(rep, "normal_form", false, [&](CheckRecord& c) {
                auto f = materialize<K>(parse_polynomial_text(a.poly, ring->vars), ring);
                auto r = normal_form(f, I.reduced_gb(g.budget()).elements);
                std::cout << r.to_string() << "\n";
                c.data["result"] = r.to_string();
                c.status = "pass";
            });
        } else if (cmd == "member") {
            rep.inputs["poly"] = a.poly;
            detail::run_check(rep, "member", false, [&](CheckRecord& c) {
                auto f = materialize<K>(parse_polynomial_text(a.poly, ring->vars), ring);
                bool in = member(f, I, g.budget());
                std::cout << (in ? "true" : "false") << "\n";
                c.data["member"] = in;
                c.status = "pass";
            });
        } else if (cmd == "radical-member") {
            rep.inputs["poly"] = a.poly;
            detail::run_check(rep, "radical_member", false, [&](CheckRecord& c) {
                auto f = materialize<K>(parse_polynomial_text(a.poly, ring->vars), ring);
                bool in = radical_member(f, I, g.budget());
                std::cout << (in ? "true" : "false") << "\n";
                c.data["radical_member"] = in;
                c.status = "pass";
            });
        } else if (cmd == "rees") {
            rep.inputs["kind"] = a.kind;
            ReesKind kind;
            if (a.kind == "rees") kind = ReesKind::rees;
            else if (a.kind == "extended") kind = ReesKind::extended_rees;
            else if (a.kind == "reeslike") kind = ReesKind::rees_like;
            else throw CLI::ValidationError("--kind", "want rees|extended|reeslike");
            detail::run_check(rep, "rees_presentation", false, [&](CheckRecord& c) {
                auto pres = rees_presentation(I, kind, g.budget());
                const auto& gb = pres.presenting_ideal.reduced_gb(g.budget());
                std::cout << ideal_output(pres.ring, poly_strings(gb.elements));
                c.data["ring_vars"] = pres.ring->nvars();
                c.data["size"] = gb.elements.size();
                c.status = "pass";
            });
        } else if (cmd == "split") {
            rep.inputs["spec"] = a.spec;
            detail::run_check(rep, "split", false, [&](CheckRecord& c) {
                auto sm = splitting_map<K>(parse_split_spec(a.spec), ring);
                auto J = apply_map(sm.map, I, g.budget());
                std::cout << ideal_output(sm.map.target, poly_strings(J.generators()));
                c.data["target_vars"] = sm.map.target->nvars();
                c.status = "pass";
            });
        } else if (cmd == "spread") {
            rep.inputs["kind"] = a.kind;
            detail::run_check(rep, "spread", false, [&](CheckRecord& c) {
                if (a.kind == "dup") {
                    if (a.var.empty())
                        throw CLI::ValidationError("--var", "duplication needs a variable");
                    auto J = spread_duplicate(I, a.var, a.count);
                    std::cout << ideal_output(J.ring(), poly_strings(J.generators()));
                } else if (a.kind == "monomial") {
                    if (a.spec.empty())
                        throw CLI::ValidationError("--spec", "monomial spreading needs a spec");
                    auto spr = spread_monomial_fine(I, parse_split_spec(a.spec));
                    std::cout << ideal_output(spr.ideal.ring(),
                                              poly_strings(spr.ideal.generators()));
                } else {
                    throw CLI::ValidationError("--kind", "want dup|monomial");
                }
                c.status = "pass";
            });
        } else if (cmd == "ass") {
            if (a.assmode != "monomial")
                throw CLI::ValidationError("ass", "only 'ass monomial' is available");
            detail::run_check(rep, "associated_primes", false, [&](CheckRecord& c) {
                auto primes = monomial_ass_primes(I);
                auto arr = nlohmann::ordered_json::array();
                for (const auto& p : primes) {
                    std::string line;
                    for (std::size_t vi : p) {
                        if (!line.empty()) line += ", ";
                        line += ring->vars[vi];
                    }
                    std::cout << "(" << line << ")\n";
                    arr.push_back(line);
                }
                c.data["count"] = primes.size();
                c.data["primes"] = arr;
                c.status = "pass";
            });
        } else {  // certify
            auto pfile = parse_ideal_file(a.prime);
            if (pfile.vars != file.vars)
                throw CLI::ValidationError("--prime", "prime file must use the same variables");
            Ideal<K> Q = materialize_ideal<K>(pfile, ring);
            rep.inputs["prime"] = a.prime;
            detail::run_check(rep, "certificate", false, [&](CheckRecord& c) {
                AssCertificate<K> cert =
                    a.witness.empty()
                        ? find_witness(I, Q, g.budget(), WitnessSearchOptions{g.seed, 64})
                        : certify_witness(I, Q,
                                          materialize<K>(
                                              parse_polynomial_text(a.witness, ring->vars), ring),
                                          g.budget());
                c.data["status"] = cert_status_name(cert.status);
                std::cout << cert_status_name(cert.status);
                if (cert.status == CertStatus::verified) {
                    c.data["witness"] = cert.witness.to_string();
                    std::cout << "  witness: " << cert.witness.to_string();
                }
                std::cout << "\n";
                c.status = cert.status == CertStatus::verified
                               ? "pass"
                               : (cert.status == CertStatus::refuted ? "fail" : "inconclusive");
            });
        }
        return finish(rep, g);
    }

    if (cmd == "kernel") {
        auto file = parse_map_file(a.map);
        FieldSpec field =
            !g.field_given && file.field_declared ? file.field : parse_field_spec(g.field);
        TermOrder order = parse_order_spec(g.order);
        RingPtr S = make_ring(file.source_vars, field, order);
        RingPtr T = make_ring(file.target_vars, field, order);
        RingMap<K> m{S, T, {}, {}};
        for (const auto& p : file.images) m.images.push_back(materialize<K>(p, T));
        for (const auto& p : file.relations) m.relations.push_back(materialize<K>(p, T));
        Report rep = base_report<K>("kernel", field, order, g);
        rep.inputs["map"] = a.map;
        detail::run_check(rep, "kernel", false, [&](CheckRecord& c) {
            auto Kr = kernel(m, g.budget());
            const auto& gb = Kr.reduced_gb(g.budget());
            std::cout << ideal_output(S, poly_strings(gb.elements));
            c.data["size"] = gb.elements.size();
            c.status = "pass";
        });
        return finish(rep, g);
    }

    if (cmd == "family") {
        FieldSpec field = parse_field_spec(g.field);
        Report rep = base_report<K>("family " + a.which, field, parse_order_spec(g.order), g);
        detail::run_check(rep, "family", false, [&](CheckRecord& c) {
            if (a.which == "toric345") {
                auto I = family_toric345<K>(field, g.budget());
                std::cout << ideal_output(I.ring(),
                                          poly_strings(I.reduced_gb(g.budget()).elements));
            } else if (a.which == "im") {
                auto I = family_Im<K>(a.m, field, g.budget());
                std::cout << ideal_output(I.ring(), poly_strings(I.generators()));
            } else if (a.which == "thm51") {
                auto fam = family_thm51<K>(a.m, a.v(), field, g.budget());
                std::cout << ideal_output(fam.P.ring(), poly_strings(fam.P.generators()));
            } else if (a.which == "prop33") {
                auto fam = family_prop33<K>(field, g.budget());
                std::cout << ideal_output(
                    fam.pres.ring,
                    poly_strings(fam.pres.presenting_ideal.reduced_gb(g.budget()).elements));
            } else if (a.which == "thm53") {
                auto fam = family_thm53<K>(a.n, field, g.budget());
                std::cout << ideal_output(
                    fam.pres.ring,
                    poly_strings(fam.pres.presenting_ideal.reduced_gb(g.budget()).elements));
            } else {
                throw CLI::ValidationError("family", "want toric345|im|thm51|prop33|thm53");
            }
            c.status = "pass";
        });
        return finish(rep, g);
    }

    if (cmd == "verify") {
        FieldSpec field = parse_field_spec(g.field);
        Report rep;
        if (a.which == "thm51")
            rep = verify_thm51<K>(a.m, a.v(), a.e, a.exhaustive, field, g.budget(), g.seed);
        else if (a.which == "prop33")
            rep = verify_prop33<K>(a.deep, field, g.budget(), g.seed);
        else if (a.which == "thm53")
            rep = verify_thm53<K>(a.n, a.deep, field, g.budget(), g.seed);
        else if (a.which == "remark")
            rep = verify_remark<K>(a.kind == "reeslike" ? ReesKind::rees_like
                                                        : ReesKind::rees,
                                   a.deep, field, g.budget(), g.seed);
        else
            throw CLI::ValidationError("verify", "want thm51|prop33|thm53|remark");
        return finish(rep, g);
    }

    throw CLI::ValidationError("command", "unknown command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sprees: splittings, spreadings, Rees presentations, and "
                 "associated-prime certificates"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    Args a;
    app.add_option("--field", g.field, "coefficient field: q or fp:<prime>")
        ->each([&](const std::string&) { g.field_given = true; });
    app.add_option("--order", g.order, "term order: lex or grevlex")
        ->each([&](const std::string&) { g.order_given = true; });
    app.add_option("--budget-pairs", g.budget_pairs, "S-pair budget per basis run");
    app.add_option("--budget-seconds", g.budget_seconds, "wall-clock budget per basis run");
    app.add_option("--json", g.json_path, "write a JSON report to this path");
    app.add_option("--seed", g.seed, "seed for witness search");

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
    gb->add_option("file", a.file)->required();

    auto* nf = app.add_subcommand("nf", "normal form of a polynomial");
    nf->add_option("poly", a.poly)->required();
    nf->add_option("file", a.file)->required();

    auto* mem = app.add_subcommand("member", "ideal membership");
    mem->add_option("poly", a.poly)->required();
    mem->add_option("file", a.file)->required();

    auto* rmem = app.add_subcommand("radical-member", "radical membership");
    rmem->add_option("poly", a.poly)->required();
    rmem->add_option("file", a.file)->required();

    auto* ker = app.add_subcommand("kernel", "kernel of a ring map");
    ker->add_option("--map", a.map)->required();

    auto* rees = app.add_subcommand("rees", "Rees-algebra presentation ideal");
    rees->add_option("--kind", a.kind, "rees|extended|reeslike")->required();
    rees->add_option("file", a.file)->required();

    auto* split = app.add_subcommand("split", "apply a splitting substitution");
    split->add_option("--spec", a.spec, "e.g. z=3 or z=2,1;x=2")->required();
    split->add_option("file", a.file)->required();

    auto* spread = app.add_subcommand("spread", "variable duplication or monomial spreading");
    spread->add_option("--kind", a.kind, "dup|monomial")->required();
    spread->add_option("--var", a.var, "variable to duplicate (dup)");
    spread->add_option("--count", a.count, "number of duplicates (dup)");
    spread->add_option("--spec", a.spec, "block spec (monomial), e.g. c=3");
    spread->add_option("file", a.file)->required();

    auto* family = app.add_subcommand("family", "built-in families");
    family->add_option("which", a.which, "toric345|im|thm51|prop33|thm53")->required();
    family->add_option("--m", a.m, "number of base variables");
    family->add_option("--v", a.vlist, "comma-separated split sizes, e.g. 2,1,1");
    family->add_option("--n", a.n, "spreading size");

    auto* verify = app.add_subcommand("verify", "verification reports");
    verify->add_option("which", a.which, "thm51|prop33|thm53|remark")->required();
    verify->add_option("--kind", a.kind, "rees|reeslike (remark)");
    verify->add_option("--m", a.m, "number of base variables (thm51)");
    verify->add_option("--v", a.vlist, "comma-separated split sizes (thm51)");
    verify->add_option("--e", a.e, "power to test (thm51)");
    verify->add_flag("--exhaustive", a.exhaustive, "also refute non-candidates (thm51)");
    verify->add_flag("--deep", a.deep, "run the deep tier (prop33, thm53)");
    verify->add_option("--n", a.n, "spreading size (thm53)");

    auto* ass = app.add_subcommand("ass", "associated primes (monomial ideals)");
    ass->add_option("mode", a.assmode, "monomial")->required();
    ass->add_option("file", a.file)->required();

    auto* certify = app.add_subcommand("certify", "witness certificate for a claimed prime");
    certify->add_option("--ideal", a.ideal)->required();
    certify->add_option("--prime", a.prime, "claimed prime, same variables")->required();
    certify->add_option("--witness", a.witness, "witness polynomial (searched if absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage errors exit 2
    }

    try {
        for (auto* sub : {gb, nf, mem, rmem, ker, rees, split, spread, family, verify, ass,
                          certify})
            if (sub->parsed()) a.command = sub->get_name();

        FieldSpec field = parse_field_spec(g.field);
        if (field.kind == FieldSpec::Kind::rationals) return run<Rat>(g, a);
        return run<Fp>(g, a);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
