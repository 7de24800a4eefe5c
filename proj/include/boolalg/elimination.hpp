#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "constituents.hpp"
#include "context.hpp"
#include "formula.hpp"
#include "term.hpp"

namespace boolalg {

struct elimination_result {
    term eliminant;                        // asserting eliminant = 0
    std::vector<std::string> eliminated;
    std::optional<term> residual_neq;      // asserting residual_neq ≠ 0 (one-one case)
};

// x = z'·p(0,y) ∪ z·p(1,y)' with a fresh parameter z; valid exactly when
// the side condition (the eliminant) holds. lower/upper give the
// equivalent sandwich form p(0,y) ⊆ x ⊆ p(1,y)'.
struct general_solution {
    std::string solved_var;
    std::string parameter;
    term expression;
    term side_condition;
    term lower_bound;
    term upper_bound;
};

// Solved form for x in a system p=0, q1≠0, ..., qn≠0, with coefficients
// a = p(1,y), b = p(0,y), c_i = q_i(1,y), d_i = q_i(0,y). The constraints
// are the conjuncts restricting the parameters; the system is equivalent
// to their ∃-closure together with the solution expression.
struct parametric_solution {
    std::string solved_var;
    std::string multiplier;                // w
    std::vector<std::string> witnesses;    // v_1, ..., v_n
    term coeff_a;
    term coeff_b;
    std::vector<term> coeff_c;
    std::vector<term> coeff_d;
    std::vector<basic_formula> constraints;
    term solution_expr;
};

namespace detail {

// (p with x := 1, p with x := 0), both simplified.
inline std::pair<term, term> cofactors(const term& p, const std::string& x) {
    return {simplify(substitute(p, {{x, term::one()}})),
            simplify(substitute(p, {{x, term::zero()}}))};
}

}  // namespace detail

// The complete result of eliminating x from p(x,y) = 0: the eliminant
// p(1,y)·p(0,y) = 0, which holds iff some value of x satisfies the
// equation.
inline elimination_result eliminate_one(const term& p, const std::string& x) {
    auto [p1, p0] = detail::cofactors(p, x);
    return {simplify(p1 & p0), {x}, std::nullopt};
}

// The general solution of p(x,y) = 0 for x.
inline general_solution solve_one(const term& p, const std::string& x) {
    auto [p1, p0] = detail::cofactors(p, x);
    std::set<std::string> avoid = free_vars(p);
    avoid.insert(x);
    std::string z = fresh_param("_z", avoid);
    term zv = term::var(z);
    return {x,
            z,
            simplify((~zv & p0) | (zv & ~p1)),
            simplify(p1 & p0),
            p0,
            simplify(~p1)};
}

// Boole's multi-variable eliminant: the product of p(σ,y) over every 0/1
// vector σ for the eliminated variables. Eliminating no variables is the
// identity.
inline elimination_result eliminate_many(const term& p, const std::vector<std::string>& xs) {
    if (xs.empty()) return {p, {}, std::nullopt};
    var_context about(xs);  // validates distinctness
    detail::check_context_size(about);

    const std::size_t n = std::size_t{1} << about.size();
    term product = term::one();
    for (sigma_t sigma = 0; sigma < n; ++sigma) {
        std::map<std::string, term> bindings;
        for (std::size_t i = 0; i < about.size(); ++i)
            bindings.emplace(about.at(i), ((sigma >> i) & 1u) ? term::one() : term::zero());
        term factor = substitute(p, bindings);
        product = sigma == 0 ? factor : (product & factor);
    }
    return {simplify(product), xs, std::nullopt};
}

// Eliminating x from one equation and one negated equation:
// (∃x)[p=0 ∧ q≠0] iff p(1)·p(0) = 0 and q(1)·p(1)' ∪ q(0)·p(0)' ≠ 0.
inline elimination_result eliminate_one_one(const term& p, const term& q,
                                            const std::string& x) {
    auto [p1, p0] = detail::cofactors(p, x);
    auto [q1, q0] = detail::cofactors(q, x);
    return {simplify(p1 & p0), {x}, simplify((q1 & ~p1) | (q0 & ~p0))};
}

// Parametric solution for x in p=0, q1≠0, ..., qn≠0. Each negated
// equation gets a witness parameter v_i (a nonempty subclass of q_i) and
// the remaining freedom is absorbed by an unconstrained w.
inline parametric_solution solve_system(const term& p, const std::vector<term>& qs,
                                        const std::string& x) {
    if (qs.empty())
        throw error("solve_system expects at least one negated equation; use solve_one");

    std::set<std::string> avoid = free_vars(p);
    avoid.insert(x);
    for (const auto& q : qs)
        for (const auto& v : free_vars(q)) avoid.insert(v);

    parametric_solution sol;
    sol.solved_var = x;
    sol.multiplier = fresh_param("_w", avoid);
    sol.witnesses = fresh_numbered("_v", qs.size(), avoid);

    var_context about({x});
    auto pe = expand_about(p, about);
    sol.coeff_a = pe.coefficient(1);
    sol.coeff_b = pe.coefficient(0);
    for (const auto& q : qs) {
        auto qe = expand_about(q, about);
        sol.coeff_c.push_back(qe.coefficient(1));
        sol.coeff_d.push_back(qe.coefficient(0));
    }

    const term& a = sol.coeff_a;
    const term& b = sol.coeff_b;

    sol.constraints.push_back(basic_formula::eq(simplify(a & b)));
    for (std::size_t j = 0; j < qs.size(); ++j) {
        term vj = term::var(sol.witnesses[j]);
        sol.constraints.push_back(basic_formula::neq(vj));
        term bound = (sol.coeff_c[j] & ~a) | (sol.coeff_d[j] & ~b);
        sol.constraints.push_back(basic_formula::eq(simplify(vj & ~bound)));
    }
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = i + 1; j < qs.size(); ++j) {
            term vi = term::var(sol.witnesses[i]);
            term vj = term::var(sol.witnesses[j]);
            term bound = (sol.coeff_c[i] | sol.coeff_d[j]) & (sol.coeff_c[j] | sol.coeff_d[i]);
            sol.constraints.push_back(basic_formula::eq(simplify((vi & vj) & ~bound)));
        }

    term upper = a;  // a ∪ ⋃ v_i·c_i'
    term lower = b;  // b ∪ ⋃ v_i·d_i'
    for (std::size_t i = 0; i < qs.size(); ++i) {
        term vi = term::var(sol.witnesses[i]);
        upper = upper | (vi & ~sol.coeff_c[i]);
        lower = lower | (vi & ~sol.coeff_d[i]);
    }
    term w = term::var(sol.multiplier);
    sol.solution_expr = simplify((w & ~upper) | (~w & lower));
    return sol;
}

}  // namespace boolalg
