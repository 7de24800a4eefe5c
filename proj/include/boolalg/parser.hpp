#pragma once

#include <optional>
#include <string>
#include <vector>

#include "constituents.hpp"
#include "context.hpp"
#include "formula.hpp"
#include "term.hpp"

namespace boolalg {

namespace detail {

struct token {
    enum class kind {
        ident, zero, one, prime, amp, pipe, lparen, rparen,
        eq, neq, leq, geq, end
    };
    kind k;
    std::string text;
    int column;  // 1-based
};

inline std::vector<token> lex(const std::string& src, int line) {
    std::vector<token> out;
    std::size_t i = 0;
    auto col = [&] { return static_cast<int>(i) + 1; };
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#') break;  // comment to end of line
        int start = col();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({token::kind::ident, src.substr(i, j - i), start});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if ((c != '0' && c != '1') ||
                (i + 1 < src.size() &&
                 (std::isalnum(static_cast<unsigned char>(src[i + 1])) || src[i + 1] == '_')))
                throw syntax_error("unknown token starting with '" + std::string(1, c) + "'",
                                   line, start);
            out.push_back({c == '0' ? token::kind::zero : token::kind::one,
                           std::string(1, c), start});
            ++i;
            continue;
        }
        switch (c) {
            case '\'': out.push_back({token::kind::prime, "'", start}); ++i; continue;
            case '&': out.push_back({token::kind::amp, "&", start}); ++i; continue;
            case '*': out.push_back({token::kind::amp, "*", start}); ++i; continue;
            case '|': out.push_back({token::kind::pipe, "|", start}); ++i; continue;
            case '(': out.push_back({token::kind::lparen, "(", start}); ++i; continue;
            case ')': out.push_back({token::kind::rparen, ")", start}); ++i; continue;
            case '=': out.push_back({token::kind::eq, "=", start}); ++i; continue;
            case '!':
                if (i + 1 < src.size() && src[i + 1] == '=') {
                    out.push_back({token::kind::neq, "!=", start});
                    i += 2;
                    continue;
                }
                throw syntax_error("unknown token '!'", line, start);
            case '<':
                if (i + 1 < src.size() && src[i + 1] == '=') {
                    out.push_back({token::kind::leq, "<=", start});
                    i += 2;
                    continue;
                }
                throw syntax_error("unknown token '<'", line, start);
            case '>':
                if (i + 1 < src.size() && src[i + 1] == '=') {
                    out.push_back({token::kind::geq, ">=", start});
                    i += 2;
                    continue;
                }
                throw syntax_error("unknown token '>'", line, start);
            default:
                throw syntax_error("unknown token '" + std::string(1, c) + "'", line, start);
        }
    }
    out.push_back({token::kind::end, "", static_cast<int>(src.size()) + 1});
    return out;
}

// Recursive descent over the token list. Grammar, loosest first:
//   formula := categorical | term (('='|'!='|'<='|'>=') term)
//   term    := inter ('|' inter)*
//   inter   := post (('&'|'*') post)*
//   post    := atom ("'")*
//   atom    := '0' | '1' | ident | '(' term ')'
class line_parser {
public:
    line_parser(std::vector<token> tokens, int line)
        : tokens_(std::move(tokens)), line_(line) {}

    term parse_term_all() {
        term t = parse_union();
        expect_end();
        return t;
    }

    basic_formula parse_formula_all() {
        if (auto cat = parse_categorical()) return *cat;
        term lhs = parse_union();
        const token& rel = peek();
        switch (rel.k) {
            case token::kind::eq: {
                advance();
                term rhs = parse_union();
                expect_end();
                if (rhs.is_zero()) return basic_formula::eq(lhs);
                if (lhs.is_zero()) return basic_formula::eq(rhs);
                return basic_formula::eq(standardize(lhs, rhs));
            }
            case token::kind::neq: {
                advance();
                term rhs = parse_union();
                expect_end();
                if (rhs.is_zero()) return basic_formula::neq(lhs);
                if (lhs.is_zero()) return basic_formula::neq(rhs);
                return basic_formula::neq(standardize(lhs, rhs));
            }
            case token::kind::leq: {
                advance();
                term rhs = parse_union();
                expect_end();
                return basic_formula::eq(lhs & ~rhs);
            }
            case token::kind::geq: {
                advance();
                term rhs = parse_union();
                expect_end();
                return basic_formula::eq(rhs & ~lhs);
            }
            default:
                throw syntax_error("expected '=', '!=', '<=' or '>='", line_, rel.column);
        }
    }

    // nullopt when the line does not commit to the categorical templates
    // (All/No/Some <var> is ...); malformed committed input throws.
    std::optional<basic_formula> parse_categorical() {
        if (tokens_.size() < 3) return std::nullopt;
        const token& head = tokens_[0];
        if (head.k != token::kind::ident ||
            (head.text != "All" && head.text != "No" && head.text != "Some"))
            return std::nullopt;
        if (tokens_[1].k != token::kind::ident) return std::nullopt;
        if (tokens_[2].k != token::kind::ident || tokens_[2].text != "is") return std::nullopt;

        pos_ = 3;
        term subject = term::var(tokens_[1].text);
        bool negated_predicate = false;
        if (peek().k == token::kind::ident && peek().text == "not") {
            if (head.text != "Some")
                throw syntax_error("'is not' is only valid after 'Some'", line_, peek().column);
            advance();
            negated_predicate = true;
        }
        if (peek().k != token::kind::ident)
            throw syntax_error("expected a variable after 'is'", line_, peek().column);
        term predicate = term::var(peek().text);
        advance();
        expect_end();

        if (head.text == "All") return basic_formula::eq(subject & ~predicate);
        if (head.text == "No") return basic_formula::eq(subject & predicate);
        return negated_predicate ? basic_formula::neq(subject & ~predicate)
                                 : basic_formula::neq(subject & predicate);
    }

private:
    const token& peek() const { return tokens_[pos_]; }
    void advance() { ++pos_; }

    void expect_end() {
        if (peek().k != token::kind::end)
            throw syntax_error("unexpected trailing input '" + peek().text + "'", line_,
                               peek().column);
    }

    term parse_union() {
        term t = parse_inter();
        while (peek().k == token::kind::pipe) {
            advance();
            t = t | parse_inter();
        }
        return t;
    }

    term parse_inter() {
        term t = parse_postfix();
        while (peek().k == token::kind::amp) {
            advance();
            t = t & parse_postfix();
        }
        return t;
    }

    term parse_postfix() {
        term t = parse_atom();
        while (peek().k == token::kind::prime) {
            advance();
            t = ~t;
        }
        return t;
    }

    term parse_atom() {
        const token& tok = peek();
        switch (tok.k) {
            case token::kind::zero: advance(); return term::zero();
            case token::kind::one: advance(); return term::one();
            case token::kind::ident: advance(); return term::var(tok.text);
            case token::kind::lparen: {
                advance();
                term t = parse_union();
                if (peek().k != token::kind::rparen)
                    throw syntax_error("expected ')'", line_, peek().column);
                advance();
                return t;
            }
            default:
                throw syntax_error("expected a term", line_, tok.column);
        }
    }

    std::vector<token> tokens_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline term parse_term(const std::string& src, int line = 1) {
    return detail::line_parser(detail::lex(src, line), line).parse_term_all();
}

inline basic_formula parse_formula(const std::string& src, int line = 1) {
    return detail::line_parser(detail::lex(src, line), line).parse_formula_all();
}

// One of the four Aristotelian categorical forms over two variables.
enum class categorical_kind { a, e, i, o };

struct categorical_form {
    categorical_kind form;
    std::string subject;
    std::string predicate;

    basic_formula to_formula() const {
        term s = term::var(subject);
        term p = term::var(predicate);
        switch (form) {
            case categorical_kind::a: return basic_formula::eq(s & ~p);
            case categorical_kind::e: return basic_formula::eq(s & p);
            case categorical_kind::i: return basic_formula::neq(s & p);
            case categorical_kind::o: return basic_formula::neq(s & ~p);
        }
        return basic_formula::eq(term::zero());
    }

    std::string text() const {
        switch (form) {
            case categorical_kind::a: return "All " + subject + " is " + predicate;
            case categorical_kind::e: return "No " + subject + " is " + predicate;
            case categorical_kind::i: return "Some " + subject + " is " + predicate;
            case categorical_kind::o: return "Some " + subject + " is not " + predicate;
        }
        return "";
    }
};

// Recognize the categorical templates without parsing the rest of the
// formula grammar; nullopt when the input is not of that shape.
inline std::optional<categorical_form> try_parse_categorical(const std::string& src,
                                                             int line = 1) {
    auto tokens = detail::lex(src, line);
    detail::line_parser parser(tokens, line);
    auto formula = parser.parse_categorical();
    if (!formula) return std::nullopt;
    // Re-derive the labelled form from the tokens.
    categorical_form cat;
    cat.subject = tokens[1].text;
    bool has_not = tokens[3].k == detail::token::kind::ident && tokens[3].text == "not";
    cat.predicate = tokens[has_not ? 4 : 3].text;
    if (tokens[0].text == "All") cat.form = categorical_kind::a;
    else if (tokens[0].text == "No") cat.form = categorical_kind::e;
    else cat.form = has_not ? categorical_kind::o : categorical_kind::i;
    return cat;
}

// The reverse translation: a basic formula matches a categorical form
// when it has exactly two variables and its constituent pattern is one
// of the four table rows (in either variable order).
inline std::optional<categorical_form> match_categorical(const basic_formula& f) {
    var_context ctx = infer_context(std::vector<term>{f.lhs});
    if (ctx.size() != 2) return std::nullopt;
    auto members = constituents(f.lhs, ctx).members();
    const std::string& u = ctx.at(0);
    const std::string& v = ctx.at(1);
    bool is_eq = f.is_eq();
    if (members == std::vector<sigma_t>{1})  // u & v'
        return categorical_form{is_eq ? categorical_kind::a : categorical_kind::o, u, v};
    if (members == std::vector<sigma_t>{2})  // v & u'
        return categorical_form{is_eq ? categorical_kind::a : categorical_kind::o, v, u};
    if (members == std::vector<sigma_t>{3})  // u & v
        return categorical_form{is_eq ? categorical_kind::e : categorical_kind::i, u, v};
    return std::nullopt;
}

// A parsed input file: formula lines, optionally split by a `|-` line
// from a single conclusion line. `#` starts a comment.
struct source_document {
    std::vector<basic_formula> premisses;
    std::optional<basic_formula> conclusion;

    argument to_argument() const {
        if (!conclusion) throw error("document has no conclusion (missing '|-' line)");
        return argument{premisses, *conclusion};
    }
};

inline source_document parse_document(const std::string& text) {
    source_document doc;
    bool seen_turnstile = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line =
            nl == std::string::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        ++line_no;
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;

        std::string body = line.substr(0, line.find('#'));
        std::size_t first = body.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        std::size_t last = body.find_last_not_of(" \t\r");
        std::string trimmed = body.substr(first, last - first + 1);

        if (trimmed == "|-") {
            if (seen_turnstile) throw syntax_error("duplicate '|-' line", line_no, 1);
            seen_turnstile = true;
            continue;
        }
        basic_formula f = parse_formula(body, line_no);
        if (!seen_turnstile) {
            doc.premisses.push_back(std::move(f));
        } else {
            if (doc.conclusion)
                throw syntax_error("only one conclusion may follow '|-'", line_no, 1);
            doc.conclusion = std::move(f);
        }
    }
    if (seen_turnstile && !doc.conclusion)
        throw syntax_error("'|-' must be followed by a conclusion", line_no, 1);
    return doc;
}

}  // namespace boolalg
