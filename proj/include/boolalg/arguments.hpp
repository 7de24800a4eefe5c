#pragma once

#include <optional>
#include <vector>

#include "constituents.hpp"
#include "context.hpp"
#include "formula.hpp"
#include "semantics.hpp"

namespace boolalg {

// Which theorem decided the argument.
enum class decision_route {
    equational_args,          // C(conclusion) ⊆ ∪ C(premisses), equations only
    eq_conclusion,            // negated premisses dropped, then as above
    neg_conclusion,           // some C(q_j) ⊆ C(p0) ∪ C(q)
    trivial_unsat_premisses,  // the premisses have no model
};

inline const char* route_name(decision_route r) {
    switch (r) {
        case decision_route::equational_args: return "equational-arguments";
        case decision_route::eq_conclusion: return "equational-conclusion";
        case decision_route::neg_conclusion: return "negated-conclusion";
        case decision_route::trivial_unsat_premisses: return "unsatisfiable-premisses";
    }
    return "?";
}

// A validity certificate: a constituent-set inclusion, checkable in
// linear time. For the negated-conclusion route, neg_premiss_index is
// the least j (0-based, into the list of negated premisses) for which
// the inclusion holds.
struct inclusion_certificate {
    constituent_set included;
    constituent_set covering;
    std::optional<std::size_t> neg_premiss_index;
};

struct validity_report {
    bool valid = false;
    decision_route route = decision_route::equational_args;
    std::optional<inclusion_certificate> certificate;  // present when valid (unless trivial)
    std::optional<interpretation> countermodel;        // present when invalid
};

// Equational arguments: p1=0, ..., pm=0 ∴ p=0 is valid iff
// C(p) ⊆ C(p1) ∪ ··· ∪ C(pm). When invalid, the canonical model of the
// reduced premiss equation is a countermodel.
inline validity_report check_equational(const std::vector<basic_formula>& premisses,
                                        const basic_formula& conclusion,
                                        const var_context& ctx) {
    if (!conclusion.is_eq())
        throw polarity_error("check_equational expects an equational conclusion");
    term p0 = reduce(premisses);  // throws polarity_error on a negated premiss
    auto covering = constituents(p0, ctx);
    auto included = constituents(conclusion.lhs, ctx);

    validity_report report;
    report.route = decision_route::equational_args;
    report.valid = included.is_subset_of(covering);
    report.certificate = inclusion_certificate{included, covering, std::nullopt};
    if (!report.valid) report.countermodel = canonical_model(p0, ctx);
    return report;
}

inline validity_report check_equational(const std::vector<basic_formula>& premisses,
                                        const basic_formula& conclusion) {
    argument arg{premisses, conclusion};
    return check_equational(premisses, conclusion, infer_context(arg));
}

// Equational conclusion with mixed premisses: if the premisses are
// unsatisfiable the argument holds trivially; otherwise the negated
// premisses can be dropped without changing the verdict.
inline validity_report check_eq_conclusion(const std::vector<basic_formula>& premisses,
                                           const basic_formula& conclusion,
                                           const var_context& ctx) {
    if (!conclusion.is_eq())
        throw polarity_error("check_eq_conclusion expects an equational conclusion");

    auto sat = decide_sat(premisses, ctx);
    if (!sat.satisfiable) {
        validity_report report;
        report.valid = true;
        report.route = decision_route::trivial_unsat_premisses;
        return report;
    }

    std::vector<basic_formula> equations;
    bool any_negated = false;
    for (const auto& f : premisses)
        (f.is_eq() ? equations.push_back(f) : (void)(any_negated = true));

    validity_report report = check_equational(equations, conclusion, ctx);
    if (any_negated) report.route = decision_route::eq_conclusion;
    return report;
}

inline validity_report check_eq_conclusion(const std::vector<basic_formula>& premisses,
                                           const basic_formula& conclusion) {
    argument arg{premisses, conclusion};
    return check_eq_conclusion(premisses, conclusion, infer_context(arg));
}

// Negated conclusion: with p0 the reduced equational premisses and
// q1≠0, ..., qn≠0 the negated ones, the argument is valid iff for some j
// C(q_j) ⊆ C(p0) ∪ C(q) — a disjunction of equational arguments. The
// countermodel when invalid is the canonical model of p0 ∪ q. With no
// negated premisses the argument reduces to the definitional test:
// valid iff premisses plus q = 0 are jointly unsatisfiable, i.e. iff
// C(p0) ∪ C(q) is full.
inline validity_report check_neg_conclusion(const std::vector<basic_formula>& premisses,
                                            const basic_formula& conclusion,
                                            const var_context& ctx) {
    if (!conclusion.is_neq())
        throw polarity_error("check_neg_conclusion expects a negated conclusion");

    auto sat = decide_sat(premisses, ctx);
    if (!sat.satisfiable) {
        validity_report report;
        report.valid = true;
        report.route = decision_route::trivial_unsat_premisses;
        return report;
    }

    std::vector<basic_formula> equations;
    std::vector<term> negated;
    for (const auto& f : premisses)
        f.is_eq() ? equations.push_back(f) : negated.push_back(f.lhs);

    term p0 = reduce(equations);
    auto c0 = constituents(p0, ctx);
    auto cq = constituents(conclusion.lhs, ctx);
    auto covering = c0 | cq;

    validity_report report;
    report.route = decision_route::neg_conclusion;

    if (negated.empty()) {
        report.valid = covering.all();
        if (report.valid)
            report.certificate =
                inclusion_certificate{constituent_set::full_set(ctx), covering, std::nullopt};
        else
            report.countermodel = canonical_model(p0 | conclusion.lhs, ctx);
        return report;
    }

    for (std::size_t j = 0; j < negated.size(); ++j) {
        auto cqj = constituents(negated[j], ctx);
        if (cqj.is_subset_of(covering)) {
            report.valid = true;
            report.certificate = inclusion_certificate{cqj, covering, j};
            return report;
        }
    }
    report.valid = false;
    report.countermodel = canonical_model(p0 | conclusion.lhs, ctx);
    return report;
}

inline validity_report check_neg_conclusion(const std::vector<basic_formula>& premisses,
                                            const basic_formula& conclusion) {
    argument arg{premisses, conclusion};
    return check_neg_conclusion(premisses, conclusion, infer_context(arg));
}

// Dispatcher over the argument theorems; equivalent to the definitional
// test UNSAT(premisses ∧ ¬conclusion).
inline validity_report check(const argument& arg) {
    var_context ctx = infer_context(arg);
    detail::check_context_size(ctx);
    return arg.conclusion.is_eq() ? check_eq_conclusion(arg.premisses, arg.conclusion, ctx)
                                  : check_neg_conclusion(arg.premisses, arg.conclusion, ctx);
}

}  // namespace boolalg
