#include "sprees/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace sprees {

namespace {

struct Token {
    enum class Kind { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };
    Kind kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    Lexer(const std::string& s, int line_no) : s_(s), line_(line_no) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= s_.size()) return {Token::Kind::end, "", line, col};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                t += s_[pos_], advance();
            return {Token::Kind::number, t, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string t;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                t += s_[pos_], advance();
            return {Token::Kind::ident, t, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Kind::plus, "+", line, col};
            case '-': return {Token::Kind::minus, "-", line, col};
            case '*': return {Token::Kind::star, "*", line, col};
            case '^': return {Token::Kind::caret, "^", line, col};
            case '/': return {Token::Kind::slash, "/", line, col};
            case '(': return {Token::Kind::lparen, "(", line, col};
            case ')': return {Token::Kind::rparen, ")", line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            if (s_[pos_] == '\n') { ++line_; col_ = 0; }
            advance();
        }
    }
    void advance() { ++pos_; ++col_; }
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_, col_ = 1;
};

// Dense-exponent integer polynomial used during evaluation.
struct EvalPoly {
    std::map<std::vector<int>, mpq_class> terms;
    std::size_t nvars;

    explicit EvalPoly(std::size_t n) : nvars(n) {}
    static EvalPoly constant(std::size_t n, const mpq_class& c) {
        EvalPoly p(n);
        if (c != 0) p.terms[std::vector<int>(n, 0)] = c;
        return p;
    }
    static EvalPoly var(std::size_t n, std::size_t i) {
        EvalPoly p(n);
        std::vector<int> e(n, 0);
        e[i] = 1;
        p.terms[e] = 1;
        return p;
    }
    EvalPoly operator+(const EvalPoly& o) const {
        EvalPoly r = *this;
        for (const auto& [e, c] : o.terms) {
            auto& slot = r.terms[e];
            slot += c;
            if (slot == 0) r.terms.erase(e);
        }
        return r;
    }
    EvalPoly negated() const {
        EvalPoly r(nvars);
        for (const auto& [e, c] : terms) r.terms[e] = -c;
        return r;
    }
    EvalPoly operator-(const EvalPoly& o) const { return *this + o.negated(); }
    EvalPoly operator*(const EvalPoly& o) const {
        EvalPoly r(nvars);
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                std::vector<int> e(nvars);
                for (std::size_t i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
                auto& slot = r.terms[e];
                slot += c1 * c2;
                if (slot == 0) r.terms.erase(e);
            }
        return r;
    }
    EvalPoly pow(long n) const {
        EvalPoly r = constant(nvars, 1);
        EvalPoly b = *this;
        while (n > 0) {
            if (n & 1) r = r * b;
            n >>= 1;
            if (n) b = b * b;
        }
        return r;
    }
};

class ExprParser {
  public:
    ExprParser(const std::string& text, const std::vector<std::string>& vars, int line_no)
        : lex_(text, line_no), vars_(vars) {
        cur_ = lex_.next();
    }

    EvalPoly parse() {
        EvalPoly p = expr();
        if (cur_.kind != Token::Kind::end)
            throw ParseError("unexpected trailing input '" + cur_.text + "'", cur_.line,
                             cur_.col);
        return p;
    }

  private:
    void bump() { cur_ = lex_.next(); }

    EvalPoly expr() {
        bool neg = false;
        if (cur_.kind == Token::Kind::minus) { neg = true; bump(); }
        else if (cur_.kind == Token::Kind::plus) { bump(); }
        EvalPoly acc = term();
        if (neg) acc = acc.negated();
        while (cur_.kind == Token::Kind::plus || cur_.kind == Token::Kind::minus) {
            bool sub = cur_.kind == Token::Kind::minus;
            bump();
            EvalPoly t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    EvalPoly term() {
        EvalPoly acc = factor();
        while (true) {
            if (cur_.kind == Token::Kind::star) {
                bump();
                acc = acc * factor();
            } else if (cur_.kind == Token::Kind::number ||
                       cur_.kind == Token::Kind::ident ||
                       cur_.kind == Token::Kind::lparen) {
                acc = acc * factor();  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    EvalPoly factor() {
        EvalPoly b = base();
        if (cur_.kind == Token::Kind::caret) {
            bump();
            if (cur_.kind != Token::Kind::number)
                throw ParseError("exponent must be a non-negative integer", cur_.line,
                                 cur_.col);
            long e = 0;
            try {
                e = std::stol(cur_.text);
            } catch (const std::exception&) {
                throw ParseError("exponent too large", cur_.line, cur_.col);
            }
            if (e > (1 << 20))
                throw ParseError("exponent too large", cur_.line, cur_.col);
            bump();
            return b.pow(e);
        }
        return b;
    }

    EvalPoly base() {
        if (cur_.kind == Token::Kind::number) {
            mpq_class c(cur_.text);
            bump();
            if (cur_.kind == Token::Kind::slash) {
                bump();
                if (cur_.kind != Token::Kind::number)
                    throw ParseError("expected denominator after '/'", cur_.line, cur_.col);
                mpq_class d(cur_.text);
                if (d == 0) throw ParseError("zero denominator", cur_.line, cur_.col);
                bump();
                c /= d;
            }
            c.canonicalize();
            return EvalPoly::constant(vars_.size(), c);
        }
        if (cur_.kind == Token::Kind::ident) {
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == cur_.text) {
                    bump();
                    return EvalPoly::var(vars_.size(), i);
                }
            throw ParseError("unknown variable '" + cur_.text + "'", cur_.line, cur_.col);
        }
        if (cur_.kind == Token::Kind::lparen) {
            bump();
            EvalPoly p = expr();
            if (cur_.kind != Token::Kind::rparen)
                throw ParseError("expected ')'", cur_.line, cur_.col);
            bump();
            return p;
        }
        throw ParseError("expected a coefficient, variable, or '('", cur_.line, cur_.col);
    }

    Lexer lex_;
    Token cur_;
    const std::vector<std::string>& vars_;
};

std::vector<std::string> split_commas(const std::string& s, int line_no) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    for (const auto& v : out)
        if (v.empty()) throw ParseError("empty name in list", line_no, 1);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool is_blank_or_comment(const std::string& line) {
    std::string t = strip(line);
    return t.empty() || t[0] == '#';
}

}  // namespace

ParsedPoly parse_polynomial_text(const std::string& text,
                                 const std::vector<std::string>& vars, int line_no) {
    ExprParser p(text, vars, line_no);
    EvalPoly e = p.parse();
    ParsedPoly out;
    for (const auto& [exps, c] : e.terms) out.terms.push_back({c, exps});
    return out;
}

FieldSpec parse_field_spec(const std::string& text) {
    if (text == "q" || text == "Q") return make_rationals();
    if (text.rfind("fp:", 0) == 0) {
        long p = 0;
        try {
            p = std::stol(text.substr(3));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad field spec '" + text + "'");
        }
        if (p <= 0 || p > 2147483647)
            throw std::invalid_argument("bad field spec '" + text + "'");
        return make_prime_field(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("bad field spec '" + text + "' (want q or fp:<prime>)");
}

TermOrder parse_order_spec(const std::string& text) {
    if (text == "lex") return TermOrder::lex();
    if (text == "grevlex") return TermOrder::grevlex();
    throw std::invalid_argument("bad order spec '" + text + "' (want lex or grevlex)");
}

namespace {

// "x, y, z over fp:32003 order grevlex" -> names + optional clauses
void parse_ring_clause(const std::string& rest, int line_no, std::vector<std::string>& vars,
                       FieldSpec& field, bool& field_declared, TermOrder& order,
                       bool& order_declared) {
    std::string names = rest;
    std::string tail;
    std::size_t over_pos = rest.find(" over ");
    std::size_t order_pos = rest.find(" order ");
    std::size_t cut = std::min(over_pos == std::string::npos ? rest.size() : over_pos,
                               order_pos == std::string::npos ? rest.size() : order_pos);
    names = rest.substr(0, cut);
    tail = rest.substr(cut);

    vars = split_commas(names, line_no);
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw ParseError("duplicate variable '" + vars[i] + "'", line_no, 1);

    std::istringstream ts(tail);
    std::string word;
    while (ts >> word) {
        if (word == "over") {
            std::string spec;
            if (!(ts >> spec)) throw ParseError("expected field after 'over'", line_no, 1);
            field = parse_field_spec(spec);
            field_declared = true;
        } else if (word == "order") {
            std::string spec;
            if (!(ts >> spec)) throw ParseError("expected order after 'order'", line_no, 1);
            order = parse_order_spec(spec);
            order_declared = true;
        } else {
            throw ParseError("unexpected token '" + word + "' in ring header", line_no, 1);
        }
    }
}

}  // namespace

IdealFileData parse_ideal_text(const std::string& text) {
    IdealFileData data;
    data.field = make_prime_field(32003);
    data.order = TermOrder::grevlex();

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::string t = strip(line);
        if (!have_header) {
            if (t.rfind("ring ", 0) != 0)
                throw ParseError("expected 'ring <vars> [over ...] [order ...]' header",
                                 line_no, 1);
            parse_ring_clause(t.substr(5), line_no, data.vars, data.field,
                              data.field_declared, data.order, data.order_declared);
            have_header = true;
            continue;
        }
        data.polys.push_back(parse_polynomial_text(t, data.vars, line_no));
        data.poly_sources.push_back(t);
    }
    if (!have_header) throw ParseError("missing ring header", line_no ? line_no : 1, 1);
    return data;
}

IdealFileData parse_ideal_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open ideal file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_ideal_text(ss.str());
}

MapFileData parse_map_text(const std::string& text) {
    MapFileData data;
    data.field = make_prime_field(32003);

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::map<std::string, ParsedPoly> arrow;
    std::vector<std::string> arrow_order;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::string t = strip(line);
        if (t.rfind("source ", 0) == 0) {
            TermOrder dummy_order;
            bool dummy_flag = false;
            parse_ring_clause(t.substr(7), line_no, data.source_vars, data.field,
                              data.field_declared, dummy_order, dummy_flag);
        } else if (t.rfind("target ", 0) == 0) {
            data.target_vars = split_commas(t.substr(7), line_no);
        } else if (t.rfind("relation ", 0) == 0) {
            if (data.target_vars.empty())
                throw ParseError("relation before target declaration", line_no, 1);
            data.relations.push_back(
                parse_polynomial_text(t.substr(9), data.target_vars, line_no));
        } else {
            std::size_t pos = t.find("->");
            if (pos == std::string::npos)
                throw ParseError("expected 'source', 'target', 'relation', or 'var -> image'",
                                 line_no, 1);
            std::string lhs = strip(t.substr(0, pos));
            std::string rhs = strip(t.substr(pos + 2));
            if (data.source_vars.empty() || data.target_vars.empty())
                throw ParseError("arrow line before source/target declarations", line_no, 1);
            if (arrow.count(lhs))
                throw ParseError("duplicate image for '" + lhs + "'", line_no, 1);
            arrow[lhs] = parse_polynomial_text(rhs, data.target_vars, line_no);
            arrow_order.push_back(lhs);
        }
    }
    if (data.source_vars.empty()) throw ParseError("missing source declaration", 1, 1);
    if (data.target_vars.empty()) throw ParseError("missing target declaration", 1, 1);
    for (const auto& v : data.source_vars) {
        auto it = arrow.find(v);
        if (it == arrow.end())
            throw ParseError("missing image for source variable '" + v + "'", 1, 1);
        data.images.push_back(it->second);
    }
    for (const auto& [k, v] : arrow) {
        (void)v;
        if (std::find(data.source_vars.begin(), data.source_vars.end(), k) ==
            data.source_vars.end())
            throw ParseError("image given for unknown variable '" + k + "'", 1, 1);
    }
    return data;
}

MapFileData parse_map_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open map file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_map_text(ss.str());
}

std::string print_ideal_file(const std::vector<std::string>& vars, const FieldSpec& field,
                             const TermOrder& order,
                             const std::vector<std::string>& poly_lines) {
    std::string out = "ring ";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ", ";
        out += vars[i];
    }
    out += " over " + field.to_string() + " order " + order.to_string() + "\n";
    for (const auto& p : poly_lines) out += p + "\n";
    return out;
}

}  // namespace sprees
