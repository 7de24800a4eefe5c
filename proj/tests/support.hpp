#pragma once

// Shared test machinery: the sweep grammar (exhaustive semantic classes
// plus seeded random terms), a flat compiled evaluator over bitmask
// universes, and emptiness-profile realizations. Everything here is
// independent of the engine's constituent-inclusion decision paths so it
// can serve as an oracle against them.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <boolalg/boolalg.hpp>

namespace support {

using boolalg::basic_formula;
using boolalg::sigma_t;
using boolalg::term;
using boolalg::var_context;

// ---- sweep grammar ------------------------------------------------------

// One witness term per semantic class reachable from {0, 1, vars} by at
// most `max_depth` operator applications. Arguments, eliminants and the
// like depend only on the class of each term, so checking one witness
// per class covers the whole syntactic family of that depth.
inline std::vector<term> exhaustive_terms(const var_context& ctx, int max_depth) {
    auto key = [&](const term& t) {
        std::uint32_t m = 0;
        for (auto sigma : boolalg::constituents(t, ctx).members())
            m |= std::uint32_t{1} << sigma;
        return m;
    };

    std::map<std::uint32_t, term> reps;
    std::vector<term> atoms{term::zero(), term::one()};
    for (const auto& v : ctx.vars()) atoms.push_back(term::var(v));
    for (const auto& a : atoms) reps.emplace(key(a), a);

    for (int depth = 0; depth < max_depth; ++depth) {
        std::vector<term> current;
        current.reserve(reps.size());
        for (const auto& [k, t] : reps) current.push_back(t);
        for (const auto& a : current) {
            reps.emplace(key(~a), ~a);
            for (const auto& b : current) {
                reps.emplace(key(a | b), a | b);
                reps.emplace(key(a & b), a & b);
            }
        }
    }
    std::vector<term> out;
    out.reserve(reps.size());
    for (const auto& [k, t] : reps) out.push_back(t);
    return out;
}

inline term random_term(std::mt19937_64& rng, const std::vector<std::string>& vars,
                        int depth) {
    auto pick_atom = [&]() -> term {
        std::uniform_int_distribution<int> d(0, static_cast<int>(vars.size()) + 1);
        int i = d(rng);
        if (i == 0) return term::zero();
        if (i == 1) return term::one();
        return term::var(vars[i - 2]);
    };
    if (depth == 0) return pick_atom();
    std::uniform_int_distribution<int> d(0, 7);
    int r = d(rng);
    if (r < 2) return pick_atom();  // stop early sometimes
    if (r < 4) return ~random_term(rng, vars, depth - 1);
    if (r < 6) return random_term(rng, vars, depth - 1) | random_term(rng, vars, depth - 1);
    return random_term(rng, vars, depth - 1) & random_term(rng, vars, depth - 1);
}

inline basic_formula random_basic_formula(std::mt19937_64& rng,
                                          const std::vector<std::string>& vars, int depth) {
    term t = random_term(rng, vars, depth);
    return (rng() & 1) ? basic_formula::eq(t) : basic_formula::neq(t);
}

// ---- compiled evaluation over bitmask universes --------------------------

// A term flattened to postfix over std::uint32_t element masks; variable
// payloads index into the value array handed to eval. Universes of up to
// 32 elements.
struct compiled_term {
    enum class op : std::uint8_t { push_zero, push_one, push_var, not_op, and_op, or_op };
    std::vector<std::pair<op, std::uint8_t>> code;

    static compiled_term compile(const term& t, const var_context& ctx) {
        compiled_term c;
        c.emit(t, ctx);
        return c;
    }

    std::uint32_t eval(const std::uint32_t* values, std::uint32_t universe) const {
        std::uint32_t stack[64];
        int top = -1;
        for (const auto& [o, payload] : code) {
            switch (o) {
                case op::push_zero: stack[++top] = 0; break;
                case op::push_one: stack[++top] = universe; break;
                case op::push_var: stack[++top] = values[payload]; break;
                case op::not_op: stack[top] = ~stack[top] & universe; break;
                case op::and_op: --top; stack[top] &= stack[top + 1]; break;
                case op::or_op: --top; stack[top] |= stack[top + 1]; break;
            }
        }
        return stack[0];
    }

private:
    void emit(const term& t, const var_context& ctx) {
        switch (t.k()) {
            case term::kind::zero: code.push_back({op::push_zero, 0}); return;
            case term::kind::one: code.push_back({op::push_one, 0}); return;
            case term::kind::var:
                code.push_back({op::push_var,
                                static_cast<std::uint8_t>(ctx.index_of(t.name()))});
                return;
            case term::kind::complement:
                emit(t.child(), ctx);
                code.push_back({op::not_op, 0});
                return;
            case term::kind::union_:
                emit(t.left(), ctx);
                emit(t.right(), ctx);
                code.push_back({op::or_op, 0});
                return;
            case term::kind::intersection:
                emit(t.left(), ctx);
                emit(t.right(), ctx);
                code.push_back({op::and_op, 0});
                return;
        }
    }
};

// ---- profile realizations -------------------------------------------------

// An explicit universe built from an emptiness profile over `ctx`: each
// nonempty constituent cell receives `multiplicity` elements. Variable
// values are element masks.
struct mask_model {
    std::uint32_t universe = 0;
    std::vector<std::uint32_t> values;  // indexed like ctx
    int element_count = 0;
};

inline mask_model realize_profile(std::uint32_t profile, const var_context& ctx,
                                  int multiplicity) {
    mask_model m;
    m.values.assign(ctx.size(), 0);
    int next = 0;
    const std::uint32_t cells = std::uint32_t{1} << ctx.size();
    for (std::uint32_t sigma = 0; sigma < cells; ++sigma) {
        if (!((profile >> sigma) & 1u)) continue;
        for (int rep = 0; rep < multiplicity; ++rep) {
            std::uint32_t element = std::uint32_t{1} << next++;
            m.universe |= element;
            for (std::size_t i = 0; i < ctx.size(); ++i)
                if ((sigma >> i) & 1u) m.values[i] |= element;
        }
    }
    m.element_count = next;
    return m;
}

// All nonzero emptiness profiles over a context (2^(2^k) - 1 of them).
inline std::uint32_t profile_count(const var_context& ctx) {
    return (std::uint32_t{1} << (std::uint32_t{1} << ctx.size()));
}

// Oracle equivalence of a system p=0, q1≠0, ..., qn≠0 with the
// ∃-closure of a parametric solution's constraints plus its solution
// expression, checked over every assignment in explicit universes of
// size 1..max_universe. Returns false at the first discrepancy.
inline bool parametric_equivalent(const term& p, const std::vector<term>& qs,
                                  const std::vector<std::string>& y_names,
                                  int max_universe) {
    boolalg::parametric_solution sol = boolalg::solve_system(p, qs, "x");

    std::vector<std::string> full_names{"x"};
    full_names.insert(full_names.end(), y_names.begin(), y_names.end());
    var_context full(full_names);

    std::vector<std::string> param_names{sol.multiplier};
    param_names.insert(param_names.end(), sol.witnesses.begin(), sol.witnesses.end());
    std::vector<std::string> closure_names = y_names;
    closure_names.insert(closure_names.end(), param_names.begin(), param_names.end());
    var_context closure(closure_names);

    auto cp = compiled_term::compile(p, full);
    std::vector<compiled_term> cqs;
    for (const auto& q : qs) cqs.push_back(compiled_term::compile(q, full));

    std::vector<compiled_term> constraint_terms;
    std::vector<bool> constraint_eq;
    for (const auto& f : sol.constraints) {
        constraint_terms.push_back(compiled_term::compile(f.lhs, closure));
        constraint_eq.push_back(f.is_eq());
    }
    auto cexpr = compiled_term::compile(sol.solution_expr, closure);

    const std::size_t ny = y_names.size();
    const std::size_t np = param_names.size();
    for (int m = 1; m <= max_universe; ++m) {
        const std::uint32_t universe = (std::uint32_t{1} << m) - 1;
        std::vector<std::uint32_t> y_values(ny, 0);
        for (std::uint64_t ybits = 0;; ++ybits) {
            for (std::size_t i = 0; i < ny; ++i)
                y_values[i] = static_cast<std::uint32_t>(ybits >> (i * m)) & universe;

            for (std::uint32_t vx = 0; vx <= universe; ++vx) {
                std::vector<std::uint32_t> lhs_values{vx};
                lhs_values.insert(lhs_values.end(), y_values.begin(), y_values.end());
                bool lhs = cp.eval(lhs_values.data(), universe) == 0;
                for (const auto& cq : cqs)
                    lhs = lhs && cq.eval(lhs_values.data(), universe) != 0;

                bool rhs = false;
                std::vector<std::uint32_t> closure_values(ny + np, 0);
                for (std::size_t i = 0; i < ny; ++i) closure_values[i] = y_values[i];
                for (std::uint64_t pbits = 0; !rhs; ++pbits) {
                    for (std::size_t i = 0; i < np; ++i)
                        closure_values[ny + i] =
                            static_cast<std::uint32_t>(pbits >> (i * m)) & universe;
                    bool ok = true;
                    for (std::size_t ci = 0; ci < constraint_terms.size() && ok; ++ci) {
                        bool empty =
                            constraint_terms[ci].eval(closure_values.data(), universe) == 0;
                        ok = constraint_eq[ci] ? empty : !empty;
                    }
                    if (ok && cexpr.eval(closure_values.data(), universe) == vx) rhs = true;
                    if (pbits >= (std::uint64_t{1} << (np * m)) - 1) break;
                }
                if (lhs != rhs) return false;
            }
            if (ybits >= (std::uint64_t{1} << (ny * m)) - 1) break;
        }
    }
    return true;
}

// The engine-independent satisfiability oracle: some profile makes every
// formula true.
inline bool oracle_sat(const std::vector<basic_formula>& formulas, const var_context& ctx) {
    std::vector<std::pair<std::uint32_t, bool>> masks;
    for (const auto& f : formulas) {
        std::uint32_t m = 0;
        for (auto sigma : boolalg::constituents(f.lhs, ctx).members())
            m |= std::uint32_t{1} << sigma;
        masks.emplace_back(m, f.is_eq());
    }
    for (std::uint32_t profile = 1; profile < profile_count(ctx); ++profile) {
        bool ok = true;
        for (const auto& [m, is_eq] : masks) {
            bool intersects = (m & profile) != 0;
            if (is_eq ? intersects : !intersects) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace support
