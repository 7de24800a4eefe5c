#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arguments.hpp"
#include "constituents.hpp"
#include "context.hpp"
#include "elimination.hpp"
#include "formula.hpp"
#include "semantics.hpp"
#include "term.hpp"

namespace boolalg {

// The two-way translation q ≠ 0 ⇌ V·q' = 0 with a fresh class symbol V.
// The two sides are not equivalent formula-by-formula (V ↦ ∅ satisfies
// the V-equation no matter what q is), but substituting one for the
// other preserves whole-argument validity.
struct v_translation {
    basic_formula original;    // q ≠ 0
    std::string v_var;
    basic_formula v_equation;  // V·q' = 0
};

inline v_translation to_v_equation(const basic_formula& f, std::set<std::string> avoid = {}) {
    if (!f.is_neq())
        throw polarity_error("to_v_equation expects a negated equation");
    for (const auto& v : free_vars(f.lhs)) avoid.insert(v);
    std::string v = fresh_numbered("_V", 1, avoid)[0];
    return {f, v, basic_formula::eq(term::var(v) & simplify(~f.lhs))};
}

// Inverse direction: V·s = 0 ⇝ s' ≠ 0. When s is syntactically a
// complement the inner term is returned directly, so a translation made
// by to_v_equation round-trips to the original negated equation.
inline basic_formula from_v_equation(const v_translation& vt) {
    const term& lhs = vt.v_equation.lhs;
    if (lhs.k() == term::kind::intersection && lhs.left().k() == term::kind::var &&
        lhs.left().name() == vt.v_var) {
        term s = lhs.right();
        if (s.k() == term::kind::complement) return basic_formula::neq(s.child());
        return basic_formula::neq(simplify(~s));
    }
    throw error("v_equation is not of the form V & s");
}

// Validity of p = 0, q1 ≠ 0, ..., qn ≠ 0 ∴ q ≠ 0 decided entirely with
// equations: the argument is valid iff for some j the all-equational
// argument p = 0, V1·q1' = 0, ..., Vn·qn' = 0 ∴ Vj·q' = 0 is valid over
// the context extended with the fresh V variables. With no negated
// premisses a single fresh V is introduced for the conclusion alone.
inline validity_report check_valid_via_v(const term& p, const std::vector<term>& neg_premisses,
                                         const term& conclusion_neq) {
    std::vector<term> all_terms{p};
    all_terms.insert(all_terms.end(), neg_premisses.begin(), neg_premisses.end());
    all_terms.push_back(conclusion_neq);
    var_context base = infer_context(all_terms);

    std::set<std::string> avoid(base.vars().begin(), base.vars().end());
    const std::size_t n = neg_premisses.size();
    auto v_names = fresh_numbered("_V", n == 0 ? 1 : n, avoid);
    var_context extended = base.extended(v_names);  // V variables after the base ones

    std::vector<basic_formula> eq_premisses{basic_formula::eq(p)};
    for (std::size_t i = 0; i < n; ++i)
        eq_premisses.push_back(
            basic_formula::eq(term::var(v_names[i]) & simplify(~neg_premisses[i])));

    const std::size_t tries = n == 0 ? 1 : n;
    validity_report last;
    for (std::size_t j = 0; j < tries; ++j) {
        basic_formula v_conclusion =
            basic_formula::eq(term::var(v_names[j]) & simplify(~conclusion_neq));
        last = check_equational(eq_premisses, v_conclusion, extended);
        if (last.valid) {
            if (last.certificate) last.certificate->neg_premiss_index = (n == 0) ? std::nullopt
                                                                                 : std::optional<std::size_t>(j);
            return last;
        }
    }

    validity_report report;
    report.valid = false;
    report.route = decision_route::equational_args;
    report.countermodel = canonical_model(p | conclusion_neq, base);
    return report;
}

// One-one elimination through Boole's V-translation: convert q ≠ 0 into
// the V-equation, merge with p = 0, eliminate x, then split the result
// about V. The V-free part is the eliminant; the V part, taken modulo
// the eliminant's constituents (they are already forced empty, so they
// carry no information), translates back into the residual negated
// equation. Matches eliminate_one_one constituent-for-constituent.
inline elimination_result eliminate_one_one_via_v(const term& p, const term& q,
                                                  const std::string& x) {
    std::set<std::string> seen;
    std::vector<std::string> order;
    detail::collect_vars(p, seen, &order);
    detail::collect_vars(q, seen, &order);
    std::vector<std::string> ys;
    for (const auto& v : order)
        if (v != x) ys.push_back(v);
    var_context ctx_y(ys);

    std::set<std::string> avoid = seen;
    avoid.insert(x);
    std::string v = fresh_numbered("_V", 1, avoid)[0];

    term merged = p | (term::var(v) & simplify(~q));
    term total = substitute(merged, {{x, term::one()}}) &
                 substitute(merged, {{x, term::zero()}});

    term eliminant = simplify(substitute(total, {{v, term::zero()}}));
    auto ideal = constituents(eliminant, ctx_y);
    auto at_v1 = constituents(substitute(total, {{v, term::one()}}), ctx_y);

    auto inner = at_v1 - ideal;            // V-factor of the split, modulo the ideal
    auto residual_set = ~inner - ideal;    // V·s = 0 ⇝ s' ≠ 0, again modulo the ideal
    return {eliminant, {x}, simplify(term_from_set(residual_set))};
}

}  // namespace boolalg
