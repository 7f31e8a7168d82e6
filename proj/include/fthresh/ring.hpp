#ifndef FTHRESH_RING_HPP
#define FTHRESH_RING_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fthresh/errors.hpp"
#include "fthresh/monomial.hpp"

namespace fthresh {

struct VariableSpec {
    std::string name;
    std::int64_t degree = 1; // positive weight

    bool operator==(const VariableSpec& o) const {
        return name == o.name && degree == o.degree;
    }
};

// The ambient weighted polynomial ring B = k[T_1..T_n]. Shared immutably by
// every polynomial built over it; the attached order is the canonical term
// order for those polynomials.
template <class F>
struct RingBase {
    F field;
    std::vector<VariableSpec> vars;
    MonomialOrder order;

    std::size_t arity() const { return vars.size(); }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i].name == name) return int(i);
        return -1;
    }

    bool same_structure(const RingBase& o) const {
        return field == o.field && vars == o.vars && order.elim_block == o.order.elim_block;
    }
};

template <class F>
using RingPtr = std::shared_ptr<const RingBase<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<VariableSpec> vars, std::size_t elim_block = 0) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.name.empty()) throw MathError("empty variable name");
        if (v.degree < 1) throw MathError("variable " + v.name + " must have positive degree");
        if (v.degree > (std::int64_t(1) << 16))
            throw MathError("variable weight too large: " + v.name);
        if (!seen.insert(v.name).second)
            throw MathError("duplicate variable name: " + v.name);
    }
    MonomialOrder order;
    order.weights.reserve(vars.size());
    for (const auto& v : vars) order.weights.push_back(v.degree);
    order.elim_block = elim_block;
    return std::shared_ptr<RingBase<F>>(
        new RingBase<F>{std::move(field), std::move(vars), std::move(order)});
}

template <class F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    if (a == b) return;
    if (!a || !b || !a->same_structure(*b))
        throw MathError("operands live in different rings (arity/field mismatch)");
}

} // namespace fthresh

#endif
