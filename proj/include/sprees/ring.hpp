/*
 * ring.hpp
 * Polynomial ring contexts: variables, field, term order, optional grading.
 */
#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sprees/field.hpp"
#include "sprees/grading.hpp"
#include "sprees/order.hpp"

namespace sprees {

struct PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

struct PolyRing {
    std::vector<std::string> vars;
    FieldSpec field;
    TermOrder order;
    std::optional<Multigrading> grading;

    std::size_t nvars() const { return vars.size(); }

    std::size_t var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        throw std::invalid_argument("unknown variable '" + name + "'");
    }
    bool has_var(const std::string& name) const {
        return std::find(vars.begin(), vars.end(), name) != vars.end();
    }
};

inline RingPtr make_ring(std::vector<std::string> vars, FieldSpec field,
                         TermOrder order = TermOrder::grevlex(),
                         std::optional<Multigrading> grading = std::nullopt) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable name '" + v + "'");
    }
    if (grading && grading->cols() != vars.size())
        throw std::invalid_argument("grading column count must match variable count");
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(vars);
    r->field = field;
    r->order = order;
    r->grading = std::move(grading);
    return r;
}

// Structural compatibility; rings constructed independently but describing
// the same ambient ring are interchangeable.
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    return a->vars == b->vars && a->field == b->field && a->order == b->order;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw std::invalid_argument("ring mismatch");
}

// A variable name based on `base` that does not collide with ring variables.
inline std::string fresh_var_name(const PolyRing& ring, const std::string& base) {
    if (!ring.has_var(base)) return base;
    for (int i = 0;; ++i) {
        std::string cand = base + std::to_string(i);
        if (!ring.has_var(cand)) return cand;
    }
}

}  // namespace sprees
