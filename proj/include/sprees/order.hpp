/*
 * order.hpp
 * Term orders: lex, graded reverse lex, and block (elimination) orders.
 */
#pragma once

#include <stdexcept>
#include <string>

#include "sprees/monomial.hpp"

namespace sprees {

struct TermOrder {
    enum class Kind { lex, grevlex, block };
    Kind kind = Kind::grevlex;
    // block only: the first `block_split` variables form the eliminated block.
    std::size_t block_split = 0;
    Kind block1 = Kind::grevlex;
    Kind block2 = Kind::grevlex;

    bool operator==(const TermOrder& o) const {
        if (kind != o.kind) return false;
        if (kind != Kind::block) return true;
        return block_split == o.block_split && block1 == o.block1 && block2 == o.block2;
    }

    static TermOrder lex() { return {Kind::lex}; }
    static TermOrder grevlex() { return {Kind::grevlex}; }
    static TermOrder block(std::size_t split, Kind b1 = Kind::grevlex,
                           Kind b2 = Kind::grevlex) {
        if (b1 == Kind::block || b2 == Kind::block)
            throw std::invalid_argument("nested block orders are not supported");
        return {Kind::block, split, b1, b2};
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::lex: return "lex";
            case Kind::grevlex: return "grevlex";
            case Kind::block: return "block:" + std::to_string(block_split);
        }
        return "?";
    }
};

namespace detail {

// Compare a[lo,hi) vs b[lo,hi) under a simple (non-block) order kind.
inline int cmp_range(TermOrder::Kind kind, const Monomial& a, const Monomial& b,
                     std::size_t lo, std::size_t hi) {
    if (kind == TermOrder::Kind::lex) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
        }
        return 0;
    }
    // grevlex: higher total degree wins. On equal degree, scan exponents
    // from the last variable towards the first; at the first index where
    // they differ, the monomial with the SMALLER exponent is the larger
    // one. E.g. with x > y > z: y^2 > x*z (z-exponents 0 < 1) and
    // x^2*y > z^2.
    std::int64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a.exp(i); db += b.exp(i); }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

}  // namespace detail

// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
inline int order_cmp(const TermOrder& ord, const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("monomial ring mismatch in order comparison");
    const std::size_t n = a.nvars();
    switch (ord.kind) {
        case TermOrder::Kind::lex:
            return detail::cmp_range(TermOrder::Kind::lex, a, b, 0, n);
        case TermOrder::Kind::grevlex:
            return detail::cmp_range(TermOrder::Kind::grevlex, a, b, 0, n);
        case TermOrder::Kind::block: {
            const std::size_t k = ord.block_split;
            int c = detail::cmp_range(ord.block1, a, b, 0, k);
            if (c != 0) return c;
            return detail::cmp_range(ord.block2, a, b, k, n);
        }
    }
    return 0;
}

inline bool order_less(const TermOrder& ord, const Monomial& a, const Monomial& b) {
    return order_cmp(ord, a, b) < 0;
}

}  // namespace sprees
