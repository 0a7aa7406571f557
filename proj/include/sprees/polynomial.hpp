/*
 * polynomial.hpp
 * Canonical sparse polynomials: terms sorted strictly descending in the
 * ring's order, no zero coefficients, no duplicate monomials. Two equal
 * polynomials have identical term lists.
 */
#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sprees/field.hpp"
#include "sprees/monomial.hpp"
#include "sprees/ring.hpp"

namespace sprees {

template <class K>
class Polynomial {
  public:
    using Term = std::pair<K, Monomial>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) { check_field(); }

    // Normalizes: sorts descending, merges duplicates, drops zeros.
    Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
        check_field();
        for (const auto& t : terms)
            if (t.second.nvars() != ring_->nvars())
                throw std::invalid_argument("term/ring variable count mismatch");
        std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return order_cmp(ring_->order, a.second, b.second) > 0;
        });
        terms_.reserve(terms.size());
        for (auto& t : terms) {
            if (!terms_.empty() && terms_.back().second == t.second) {
                terms_.back().first = terms_.back().first + t.first;
                if (terms_.back().first.is_zero()) terms_.pop_back();
            } else if (!t.first.is_zero()) {
                terms_.push_back(std::move(t));
            }
        }
    }

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, K c) {
        Polynomial p(ring);
        if (!c.is_zero()) p.terms_.push_back({std::move(c), Monomial(ring->nvars())});
        return p;
    }

    static Polynomial variable(RingPtr ring, std::size_t i) {
        std::vector<int> e(ring->nvars(), 0);
        e.at(i) = 1;
        Polynomial p(ring);
        p.terms_.push_back({field_traits<K>::one(ring->field), Monomial(std::move(e))});
        return p;
    }

    static Polynomial monomial(RingPtr ring, K c, Monomial m) {
        Polynomial p(ring);
        if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw std::domain_error("leading monomial of zero polynomial");
        return terms_.front().second;
    }
    const K& leading_coeff() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return terms_.front().first;
    }

    std::int64_t total_degree() const {
        std::int64_t d = -1;
        for (const auto& t : terms_)
            if (t.second.degree() > d) d = t.second.degree();
        return d;  // -1 for the zero polynomial
    }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_binomial_or_less() const { return terms_.size() <= 2; }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({-t.first, t.second});
        return r;
    }

    Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

    Polynomial operator*(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        std::vector<Term> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_)
                acc.push_back({a.first * b.first, mono_mul(a.second, b.second)});
        return Polynomial(ring_, std::move(acc));
    }

    Polynomial scaled(const K& c) const {
        Polynomial r(ring_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.first * c, t.second});
        return r;
    }

    // this - c * m * g, the division-algorithm step. Single sorted merge.
    Polynomial sub_scaled(const K& c, const Monomial& m, const Polynomial& g) const {
        require_same_ring(ring_, g.ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < g.terms_.size()) {
            if (j == g.terms_.size()) {
                r.terms_.push_back(terms_[i++]);
                continue;
            }
            Monomial gm = mono_mul(m, g.terms_[j].second);
            if (i == terms_.size()) {
                K cc = -(c * g.terms_[j].first);
                if (!cc.is_zero()) r.terms_.push_back({std::move(cc), std::move(gm)});
                ++j;
                continue;
            }
            int cmp = order_cmp(ring_->order, terms_[i].second, gm);
            if (cmp > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                K cc = -(c * g.terms_[j].first);
                if (!cc.is_zero()) r.terms_.push_back({std::move(cc), std::move(gm)});
                ++j;
            } else {
                K cc = terms_[i].first - c * g.terms_[j].first;
                if (!cc.is_zero()) r.terms_.push_back({std::move(cc), std::move(gm)});
                ++i; ++j;
            }
        }
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        if (leading_coeff().is_one()) return *this;
        return scaled(leading_coeff().inverse());
    }

    bool operator==(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Rebuild in another ring, sending variable i here to index_map[i] there.
    // index_map[i] == -1 requires exponent 0 on variable i.
    Polynomial mapped(const RingPtr& target, const std::vector<int>& index_map) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::vector<int> e(target->nvars(), 0);
            for (std::size_t i = 0; i < ring_->nvars(); ++i) {
                int x = t.second.exp(i);
                if (x == 0) continue;
                if (index_map[i] < 0)
                    throw std::invalid_argument(
                        "polynomial involves a variable dropped by the ring change");
                e[static_cast<std::size_t>(index_map[i])] += x;
            }
            out.push_back({t.first, Monomial(std::move(e))});
        }
        return Polynomial(target, std::move(out));
    }

    DegreeReport degree_report(const Multigrading& g) const {
        DegreeReport rep;
        bool first = true;
        for (const auto& t : terms_) {
            auto d = g.degree(t.second);
            if (first) {
                rep.degree = d;
                first = false;
            } else if (d != rep.degree) {
                rep.homogeneous = false;
                rep.other_degree = d;
                return rep;
            }
        }
        return rep;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const K& c = terms_[i].first;
            const Monomial& m = terms_[i].second;
            std::string cs = c.to_string();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (i == 0) {
                if (neg) s += "-";
            } else {
                s += neg ? " - " : " + ";
            }
            if (m.is_one()) {
                s += cs;
            } else {
                if (cs != "1") s += cs + "*";
                s += m.to_string(ring_->vars);
            }
        }
        return s;
    }

  private:
    void check_field() const {
        if (ring_->field.kind != field_traits<K>::kind)
            throw std::invalid_argument("coefficient type does not match ring field");
    }

    Polynomial merged(const Polynomial& o, bool subtract) const {
        require_same_ring(ring_, o.ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (i == terms_.size()) {
                K c = subtract ? -o.terms_[j].first : o.terms_[j].first;
                r.terms_.push_back({std::move(c), o.terms_[j].second});
                ++j;
                continue;
            }
            if (j == o.terms_.size()) {
                r.terms_.push_back(terms_[i++]);
                continue;
            }
            int cmp = order_cmp(ring_->order, terms_[i].second, o.terms_[j].second);
            if (cmp > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                K c = subtract ? -o.terms_[j].first : o.terms_[j].first;
                r.terms_.push_back({std::move(c), o.terms_[j].second});
                ++j;
            } else {
                K c = subtract ? terms_[i].first - o.terms_[j].first
                               : terms_[i].first + o.terms_[j].first;
                if (!c.is_zero()) r.terms_.push_back({std::move(c), terms_[i].second});
                ++i; ++j;
            }
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

// Deterministic total order on polynomials of one ring; used for sorting
// and deduplicating generator lists.
template <class K>
int poly_cmp(const Polynomial<K>& a, const Polynomial<K>& b) {
    const auto& ord = a.ring()->order;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t n = ta.size() < tb.size() ? ta.size() : tb.size();
    for (std::size_t i = 0; i < n; ++i) {
        int c = order_cmp(ord, ta[i].second, tb[i].second);
        if (c != 0) return c;
        if (ta[i].first != tb[i].first)
            return ta[i].first.to_string() < tb[i].first.to_string() ? -1 : 1;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

}  // namespace sprees
