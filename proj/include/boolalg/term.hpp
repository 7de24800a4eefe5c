#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace boolalg {

// Identifier rules: [A-Za-z_][A-Za-z0-9_]*. Names starting with '_' are
// reserved for parameters introduced by the solution and elimination
// operations (_z, _w, _v1, _V1, ...); the parser still accepts them so
// printed results stay re-parseable.
inline bool is_valid_var_name(const std::string& name) {
    if (name.empty()) return false;
    auto head = static_cast<unsigned char>(name[0]);
    if (!std::isalpha(head) && name[0] != '_') return false;
    for (char c : name) {
        auto u = static_cast<unsigned char>(c);
        if (!std::isalnum(u) && c != '_') return false;
    }
    return true;
}

// An immutable class-algebra term over union, intersection, complement,
// the constants 0 and 1, and named variables. Terms are values: cheap to
// copy, safe to share, never mutated in place.
class term {
public:
    enum class kind { zero, one, var, complement, union_, intersection };

    term() : n_(zero().n_) {}

    static term zero() {
        static const term t{std::make_shared<const node>(node{kind::zero, {}, nullptr, nullptr})};
        return t;
    }

    static term one() {
        static const term t{std::make_shared<const node>(node{kind::one, {}, nullptr, nullptr})};
        return t;
    }

    static term var(std::string name) {
        if (!is_valid_var_name(name)) throw error("invalid variable name: '" + name + "'");
        return term{std::make_shared<const node>(node{kind::var, std::move(name), nullptr, nullptr})};
    }

    kind k() const { return n_->k; }
    bool is_zero() const { return n_->k == kind::zero; }
    bool is_one() const { return n_->k == kind::one; }

    // kind::var only.
    const std::string& name() const { return n_->name; }

    // kind::complement only.
    term child() const { return term{n_->a}; }

    // binary kinds only.
    term left() const { return term{n_->a}; }
    term right() const { return term{n_->b}; }

    friend term operator~(const term& t) {
        return term{std::make_shared<const node>(node{kind::complement, {}, t.n_, nullptr})};
    }

    friend term operator|(const term& a, const term& b) {
        return term{std::make_shared<const node>(node{kind::union_, {}, a.n_, b.n_})};
    }

    friend term operator&(const term& a, const term& b) {
        return term{std::make_shared<const node>(node{kind::intersection, {}, a.n_, b.n_})};
    }

    // Structural equality.
    friend bool operator==(const term& a, const term& b) {
        if (a.n_ == b.n_) return true;
        if (a.n_->k != b.n_->k) return false;
        switch (a.n_->k) {
            case kind::zero:
            case kind::one:
                return true;
            case kind::var:
                return a.n_->name == b.n_->name;
            case kind::complement:
                return term{a.n_->a} == term{b.n_->a};
            case kind::union_:
            case kind::intersection:
                return term{a.n_->a} == term{b.n_->a} && term{a.n_->b} == term{b.n_->b};
        }
        return false;
    }

    friend bool operator!=(const term& a, const term& b) { return !(a == b); }

private:
    struct node {
        kind k;
        std::string name;
        std::shared_ptr<const node> a;
        std::shared_ptr<const node> b;
    };

    explicit term(std::shared_ptr<const node> n) : n_(std::move(n)) {}

    std::shared_ptr<const node> n_;
};

namespace detail {

inline void collect_vars(const term& t, std::set<std::string>& seen,
                         std::vector<std::string>* in_order) {
    switch (t.k()) {
        case term::kind::zero:
        case term::kind::one:
            return;
        case term::kind::var:
            if (seen.insert(t.name()).second && in_order) in_order->push_back(t.name());
            return;
        case term::kind::complement:
            collect_vars(t.child(), seen, in_order);
            return;
        case term::kind::union_:
        case term::kind::intersection:
            collect_vars(t.left(), seen, in_order);
            collect_vars(t.right(), seen, in_order);
            return;
    }
}

}  // namespace detail

// The set of variable names occurring in t.
inline std::set<std::string> free_vars(const term& t) {
    std::set<std::string> vars;
    detail::collect_vars(t, vars, nullptr);
    return vars;
}

// Simultaneous substitution; variables without a binding are left alone.
inline term substitute(const term& t, const std::map<std::string, term>& bindings) {
    switch (t.k()) {
        case term::kind::zero:
        case term::kind::one:
            return t;
        case term::kind::var: {
            auto it = bindings.find(t.name());
            return it == bindings.end() ? t : it->second;
        }
        case term::kind::complement:
            return ~substitute(t.child(), bindings);
        case term::kind::union_:
            return substitute(t.left(), bindings) | substitute(t.right(), bindings);
        case term::kind::intersection:
            return substitute(t.left(), bindings) & substitute(t.right(), bindings);
    }
    return t;
}

// Standard form of an equation p = q: the term p·q' ∪ p'·q (the symmetric
// difference), which is empty exactly when p and q denote the same class.
inline term standardize(const term& p, const term& q) {
    return (p & ~q) | (~p & q);
}

// One-pass bottom-up constant folding and idempotent/complement cleanup.
// Best-effort for readable output only; semantic equality is decided on
// constituent sets, never on rewritten syntax.
inline term simplify(const term& t) {
    switch (t.k()) {
        case term::kind::zero:
        case term::kind::one:
        case term::kind::var:
            return t;
        case term::kind::complement: {
            term a = simplify(t.child());
            if (a.is_zero()) return term::one();
            if (a.is_one()) return term::zero();
            if (a.k() == term::kind::complement) return a.child();
            return ~a;
        }
        case term::kind::union_: {
            term a = simplify(t.left());
            term b = simplify(t.right());
            if (a.is_zero()) return b;
            if (b.is_zero()) return a;
            if (a.is_one() || b.is_one()) return term::one();
            if (a == b) return a;
            if (b.k() == term::kind::complement && b.child() == a) return term::one();
            if (a.k() == term::kind::complement && a.child() == b) return term::one();
            return a | b;
        }
        case term::kind::intersection: {
            term a = simplify(t.left());
            term b = simplify(t.right());
            if (a.is_one()) return b;
            if (b.is_one()) return a;
            if (a.is_zero() || b.is_zero()) return term::zero();
            if (a == b) return a;
            if (b.k() == term::kind::complement && b.child() == a) return term::zero();
            if (a.k() == term::kind::complement && a.child() == b) return term::zero();
            return a & b;
        }
    }
    return t;
}

}  // namespace boolalg
