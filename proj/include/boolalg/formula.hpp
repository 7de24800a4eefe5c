#pragma once

#include <vector>

#include "term.hpp"

namespace boolalg {

enum class polarity { eq, neq };

// A basic formula in standard form: lhs = 0 or lhs ≠ 0. Inputs of the
// shape p = q are standardized to (p △ q) = 0 at parse time.
struct basic_formula {
    term lhs;
    polarity pol = polarity::eq;

    static basic_formula eq(term t) { return {std::move(t), polarity::eq}; }
    static basic_formula neq(term t) { return {std::move(t), polarity::neq}; }

    bool is_eq() const { return pol == polarity::eq; }
    bool is_neq() const { return pol == polarity::neq; }

    friend bool operator==(const basic_formula& a, const basic_formula& b) {
        return a.pol == b.pol && a.lhs == b.lhs;
    }
    friend bool operator!=(const basic_formula& a, const basic_formula& b) {
        return !(a == b);
    }
};

struct argument {
    std::vector<basic_formula> premisses;  // may be empty
    basic_formula conclusion;
};

}  // namespace boolalg
