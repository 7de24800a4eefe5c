#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "constituents.hpp"
#include "context.hpp"
#include "formula.hpp"
#include "term.hpp"

namespace boolalg {

// A finite interpretation: a nonempty universe of element ids plus a
// set-valued assignment to variables. Sets are kept as sorted vectors.
struct interpretation {
    std::vector<std::uint32_t> universe;
    std::map<std::string, std::vector<std::uint32_t>> assignment;
};

namespace detail {

inline std::vector<std::uint32_t> set_union(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<std::uint32_t> set_intersection(const std::vector<std::uint32_t>& a,
                                                   const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<std::uint32_t> set_difference(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

// Structural evaluation: 0 ↦ ∅, 1 ↦ U, ' ↦ complement in U, ∪/∩ ↦ the
// set operations.
inline std::vector<std::uint32_t> eval_term(const interpretation& i, const term& t) {
    switch (t.k()) {
        case term::kind::zero:
            return {};
        case term::kind::one:
            return i.universe;
        case term::kind::var: {
            auto it = i.assignment.find(t.name());
            if (it == i.assignment.end()) throw unbound_variable(t.name());
            return it->second;
        }
        case term::kind::complement:
            return detail::set_difference(i.universe, eval_term(i, t.child()));
        case term::kind::union_:
            return detail::set_union(eval_term(i, t.left()), eval_term(i, t.right()));
        case term::kind::intersection:
            return detail::set_intersection(eval_term(i, t.left()), eval_term(i, t.right()));
    }
    return {};
}

inline bool eval_formula(const interpretation& i, const basic_formula& f) {
    bool empty = eval_term(i, f.lhs).empty();
    return f.is_eq() ? empty : !empty;
}

// The canonical model of p = 0: the universe is the set of σ indices whose
// constituents are NOT in C(p), and each variable is interpreted as the
// members where its bit is positive. Every constituent outside C(p) comes
// out nonempty, so this single model witnesses everything p = 0 fails to
// force. Throws no_model when C(p) is full (then p = 0 has no model over
// a nonempty universe).
inline interpretation canonical_model(const term& p, const var_context& ctx) {
    auto c = constituents(p, ctx);
    if (c.all())
        throw no_model("every constituent is forced empty; the equation has no model");
    interpretation model;
    const std::size_t n = std::size_t{1} << ctx.size();
    for (sigma_t sigma = 0; sigma < n; ++sigma)
        if (!c.test(sigma)) model.universe.push_back(sigma);
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        std::vector<std::uint32_t> value;
        for (auto sigma : model.universe)
            if ((sigma >> i) & 1u) value.push_back(sigma);
        model.assignment.emplace(ctx.at(i), std::move(value));
    }
    return model;
}

struct sat_result {
    bool satisfiable = false;
    std::optional<interpretation> witness;  // present when satisfiable
    // UNSAT certificates: either the reduced equation is itself
    // unsatisfiable, or a negated premiss (index into the input list)
    // has all its constituents among the equations' constituents.
    bool equations_unsatisfiable = false;
    std::optional<std::size_t> offending_formula;
};

// Satisfiability of a conjunction of basic formulas. Equations are merged
// into a single p0 = 0; the list is satisfiable iff C(p0) is not full and
// no negated equation is covered by C(p0). The witness is always the
// canonical model of p0.
inline sat_result decide_sat(const std::vector<basic_formula>& formulas,
                             const var_context& ctx) {
    for (const auto& f : formulas)
        for (const auto& v : free_vars(f.lhs))
            if (!ctx.contains(v))
                throw context_mismatch("formula variable '" + v + "' is not in the context");

    std::vector<basic_formula> equations;
    for (const auto& f : formulas)
        if (f.is_eq()) equations.push_back(f);

    term p0 = reduce(equations);
    auto c0 = constituents(p0, ctx);
    if (c0.all()) return {false, std::nullopt, true, std::nullopt};

    for (std::size_t idx = 0; idx < formulas.size(); ++idx) {
        if (!formulas[idx].is_neq()) continue;
        if (constituents(formulas[idx].lhs, ctx).is_subset_of(c0))
            return {false, std::nullopt, false, idx};
    }
    return {true, canonical_model(p0, ctx), false, std::nullopt};
}

// The truth of a basic formula under an interpretation depends only on
// which constituents are nonempty; a profile records exactly that. Any
// profile with at least one nonempty cell is realizable (give each
// nonempty cell a singleton), which is what makes profile enumeration a
// complete oracle for basic-formula arguments.
struct emptiness_profile {
    var_context context;
    boost::dynamic_bitset<> nonempty;  // size 2^k, at least one bit set

    bool satisfies(const basic_formula& f) const {
        auto c = constituents(f.lhs, context);
        bool intersects = false;
        for (auto sigma : c.members())
            if (nonempty.test(sigma)) {
                intersects = true;
                break;
            }
        return f.is_eq() ? !intersects : intersects;
    }

    // The singleton realization: element ids are the nonempty σ indices.
    interpretation realize() const {
        interpretation model;
        for (std::size_t sigma = 0; sigma < nonempty.size(); ++sigma)
            if (nonempty.test(sigma)) model.universe.push_back(static_cast<sigma_t>(sigma));
        for (std::size_t i = 0; i < context.size(); ++i) {
            std::vector<std::uint32_t> value;
            for (auto sigma : model.universe)
                if ((sigma >> i) & 1u) value.push_back(sigma);
            model.assignment.emplace(context.at(i), std::move(value));
        }
        return model;
    }
};

// Maximum variable count for the exhaustive oracle: 2^(2^k) - 1 profiles.
inline constexpr std::size_t oracle_max_vars = 4;

// Brute-force validity: enumerate every emptiness profile over the
// argument's variables; the argument is valid iff every profile
// satisfying all premisses satisfies the conclusion. Deterministic and
// independent of the constituent-inclusion machinery.
inline bool oracle_valid(const argument& arg) {
    var_context ctx = infer_context(arg);
    if (ctx.size() > oracle_max_vars)
        throw context_too_large("the profile oracle supports at most " +
                                std::to_string(oracle_max_vars) + " variables; argument has " +
                                std::to_string(ctx.size()));

    const std::uint32_t cells = std::uint32_t{1} << ctx.size();
    auto mask_of = [&](const term& t) {
        std::uint32_t m = 0;
        for (auto sigma : constituents(t, ctx).members()) m |= std::uint32_t{1} << sigma;
        return m;
    };

    std::vector<std::pair<std::uint32_t, bool>> premisses;  // (mask, is_eq)
    premisses.reserve(arg.premisses.size());
    for (const auto& f : arg.premisses) premisses.emplace_back(mask_of(f.lhs), f.is_eq());
    const std::uint32_t conclusion_mask = mask_of(arg.conclusion.lhs);
    const bool conclusion_eq = arg.conclusion.is_eq();

    const std::uint64_t profile_count = std::uint64_t{1} << cells;
    for (std::uint64_t profile = 1; profile < profile_count; ++profile) {
        auto holds = [&](std::uint32_t mask, bool is_eq) {
            bool intersects = (mask & profile) != 0;
            return is_eq ? !intersects : intersects;
        };
        bool all_premisses = true;
        for (const auto& [mask, is_eq] : premisses)
            if (!holds(mask, is_eq)) {
                all_premisses = false;
                break;
            }
        if (all_premisses && !holds(conclusion_mask, conclusion_eq)) return false;
    }
    return true;
}

}  // namespace boolalg
