#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "formula.hpp"
#include "term.hpp"

namespace boolalg {

// Hard ceiling on context size; everything downstream allocates 2^k bits.
inline constexpr std::size_t max_context_size = 24;

// An ordered list of distinct variable names. The position of a variable
// is what the σ bit encoding refers to, so order is part of the value.
class var_context {
public:
    var_context() : d_(empty_data()) {}

    explicit var_context(std::vector<std::string> names) {
        std::set<std::string> seen;
        for (const auto& n : names) {
            if (!is_valid_var_name(n)) throw error("invalid variable name: '" + n + "'");
            if (!seen.insert(n).second) throw error("duplicate variable in context: '" + n + "'");
        }
        d_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    }

    std::size_t size() const { return d_->size(); }
    bool empty() const { return d_->empty(); }
    const std::vector<std::string>& vars() const { return *d_; }
    const std::string& at(std::size_t i) const { return (*d_)[i]; }

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = std::find(d_->begin(), d_->end(), name);
        if (it == d_->end()) return std::nullopt;
        return static_cast<std::size_t>(it - d_->begin());
    }

    std::size_t index_of(const std::string& name) const {
        auto i = find(name);
        if (!i) throw unbound_variable(name);
        return *i;
    }

    bool contains(const std::string& name) const { return find(name).has_value(); }

    // A new context with the extra names appended (names already present
    // are skipped).
    var_context extended(const std::vector<std::string>& more) const {
        std::vector<std::string> names = *d_;
        for (const auto& n : more)
            if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
        return var_context(std::move(names));
    }

    friend bool operator==(const var_context& a, const var_context& b) {
        return a.d_ == b.d_ || *a.d_ == *b.d_;
    }
    friend bool operator!=(const var_context& a, const var_context& b) { return !(a == b); }

private:
    static std::shared_ptr<const std::vector<std::string>> empty_data() {
        static const auto d = std::make_shared<const std::vector<std::string>>();
        return d;
    }

    std::shared_ptr<const std::vector<std::string>> d_;
};

namespace detail {

inline void collect_in_order(const term& t, std::set<std::string>& seen,
                             std::vector<std::string>& order) {
    collect_vars(t, seen, &order);
}

}  // namespace detail

// Context inference: the free variables of everything involved, ordered
// by first textual occurrence.
inline var_context infer_context(const std::vector<term>& terms) {
    std::set<std::string> seen;
    std::vector<std::string> order;
    for (const auto& t : terms) detail::collect_in_order(t, seen, order);
    return var_context(std::move(order));
}

inline var_context infer_context(const std::vector<basic_formula>& formulas) {
    std::set<std::string> seen;
    std::vector<std::string> order;
    for (const auto& f : formulas) detail::collect_in_order(f.lhs, seen, order);
    return var_context(std::move(order));
}

inline var_context infer_context(const argument& arg) {
    std::set<std::string> seen;
    std::vector<std::string> order;
    for (const auto& f : arg.premisses) detail::collect_in_order(f.lhs, seen, order);
    detail::collect_in_order(arg.conclusion.lhs, seen, order);
    return var_context(std::move(order));
}

// A name with the given reserved prefix that does not collide with
// anything in `avoid`. Tries the bare prefix first, then prefix1,
// prefix2, ... The chosen name is added to `avoid`.
inline std::string fresh_param(const std::string& prefix, std::set<std::string>& avoid) {
    if (!avoid.count(prefix)) {
        avoid.insert(prefix);
        return prefix;
    }
    for (int i = 1;; ++i) {
        std::string candidate = prefix + std::to_string(i);
        if (!avoid.count(candidate)) {
            avoid.insert(candidate);
            return candidate;
        }
    }
}

// n fresh names prefix1, prefix2, ... skipping collisions; all are added
// to `avoid`.
inline std::vector<std::string> fresh_numbered(const std::string& prefix, std::size_t n,
                                               std::set<std::string>& avoid) {
    std::vector<std::string> names;
    int counter = 1;
    while (names.size() < n) {
        std::string candidate = prefix + std::to_string(counter++);
        if (avoid.count(candidate)) continue;
        avoid.insert(candidate);
        names.push_back(std::move(candidate));
    }
    return names;
}

}  // namespace boolalg
