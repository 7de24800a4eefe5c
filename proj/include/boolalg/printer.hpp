#pragma once

#include <string>

#include "formula.hpp"
#include "term.hpp"

namespace boolalg {

enum class print_style { ascii, unicode };

namespace detail {

// Precedence for minimal parenthesization: union 0, intersection 1,
// complement 2, atoms 3. Binary operators associate to the left.
inline int precedence(const term& t) {
    switch (t.k()) {
        case term::kind::union_: return 0;
        case term::kind::intersection: return 1;
        case term::kind::complement: return 2;
        default: return 3;
    }
}

inline std::string print_rec(const term& t, int required, print_style style) {
    const bool uni = style == print_style::unicode;
    std::string s;
    switch (t.k()) {
        case term::kind::zero: s = "0"; break;
        case term::kind::one: s = "1"; break;
        case term::kind::var: s = t.name(); break;
        case term::kind::complement:
            s = print_rec(t.child(), 2, style) + (uni ? "′" : "'");
            break;
        case term::kind::union_:
            s = print_rec(t.left(), 0, style) + (uni ? " ∪ " : " | ") +
                print_rec(t.right(), 1, style);
            break;
        case term::kind::intersection:
            s = print_rec(t.left(), 1, style) + (uni ? " ∩ " : " & ") +
                print_rec(t.right(), 2, style);
            break;
    }
    if (precedence(t) < required) return "(" + s + ")";
    return s;
}

}  // namespace detail

// Inverse of parse_term: the printed form parses back to a structurally
// identical term (ascii style; unicode is display-only).
inline std::string print_term(const term& t, print_style style = print_style::ascii) {
    return detail::print_rec(t, 0, style);
}

inline std::string print_formula(const basic_formula& f,
                                 print_style style = print_style::ascii) {
    const bool uni = style == print_style::unicode;
    return print_term(f.lhs, style) + (f.is_eq() ? " = 0" : (uni ? " ≠ 0" : " != 0"));
}

}  // namespace boolalg
