/*
 * parse.hpp
 * Text formats: polynomial expressions, ideal files, ring-map files.
 *
 * Expression grammar (whitespace insignificant, `#` starts a comment):
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor (['*'] factor)*          -- '*' optional
 *   factor := base ['^' integer]
 *   base   := coefficient | variable | '(' expr ')'
 *   coefficient := integer ['/' integer]
 *
 * Ideal file: optional comment/blank lines, then a header
 *   ring x, y, z [over q|fp:<p>] [order lex|grevlex]
 * followed by one polynomial expression per line.
 *
 * Map file:
 *   source x, y, z [over ...]
 *   target t, u
 *   x -> t^3            (one arrow line per source variable)
 *   relation t*u - 1    (optional, repeatable)
 */
#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "sprees/field.hpp"
#include "sprees/ideal.hpp"
#include "sprees/ideal_ops.hpp"
#include "sprees/polynomial.hpp"
#include "sprees/ring.hpp"

namespace sprees {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line, col;
};

// Field-independent parse result: exact rational coefficients on exponent
// vectors over a fixed variable list.
struct ParsedPoly {
    std::vector<std::pair<mpq_class, std::vector<int>>> terms;
};

ParsedPoly parse_polynomial_text(const std::string& text,
                                 const std::vector<std::string>& vars, int line_no = 1);

struct IdealFileData {
    std::vector<std::string> vars;
    FieldSpec field;
    bool field_declared = false;
    TermOrder order;
    bool order_declared = false;
    std::vector<ParsedPoly> polys;
    std::vector<std::string> poly_sources;
};

IdealFileData parse_ideal_text(const std::string& text);
IdealFileData parse_ideal_file(const std::string& path);

struct MapFileData {
    std::vector<std::string> source_vars;
    std::vector<std::string> target_vars;
    FieldSpec field;
    bool field_declared = false;
    std::vector<ParsedPoly> images;     // one per source variable, in order
    std::vector<ParsedPoly> relations;  // over the target variables
};

MapFileData parse_map_text(const std::string& text);
MapFileData parse_map_file(const std::string& path);

FieldSpec parse_field_spec(const std::string& text);    // "q" or "fp:<p>"
TermOrder parse_order_spec(const std::string& text);    // "lex" or "grevlex"

template <class K>
Polynomial<K> materialize(const ParsedPoly& p, const RingPtr& ring) {
    std::vector<typename Polynomial<K>::Term> terms;
    for (const auto& [q, exps] : p.terms) {
        K num = field_traits<K>::from_int(0, ring->field);
        if constexpr (std::is_same_v<K, Rat>) {
            num = Rat(q);
        } else {
            mpz_class n = q.get_num(), d = q.get_den();
            mpz_class pz(ring->field.modulus);
            mpz_class nr = n % pz, dr = d % pz;
            K kn(nr.get_si(), ring->field.modulus);
            K kd(dr.get_si(), ring->field.modulus);
            if (kd.is_zero())
                throw std::domain_error("coefficient denominator vanishes mod p");
            num = kn / kd;
        }
        terms.push_back({num, Monomial(exps)});
    }
    return Polynomial<K>(ring, std::move(terms));
}

template <class K>
Ideal<K> materialize_ideal(const IdealFileData& data, const RingPtr& ring) {
    std::vector<Polynomial<K>> gens;
    for (const auto& p : data.polys) gens.push_back(materialize<K>(p, ring));
    return Ideal<K>(ring, std::move(gens));
}

std::string print_ideal_file(const std::vector<std::string>& vars, const FieldSpec& field,
                             const TermOrder& order,
                             const std::vector<std::string>& poly_lines);

}  // namespace sprees
