#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "context.hpp"
#include "formula.hpp"
#include "term.hpp"

namespace boolalg {

// σ is stored as an unsigned integer; bit i (least significant = first
// context variable) holds σ(i+1). The CLI renders σ in display order
// (σ1 leftmost), which for this encoding is simply bit 0 first.
using sigma_t = std::uint32_t;

struct sigma_index {
    sigma_t bits = 0;
    var_context context;
};

// σ rendered with σ1 leftmost, e.g. bits 0b10110 over k=5 -> "01101".
inline std::string sigma_string(sigma_t sigma, std::size_t k) {
    std::string s(k, '0');
    for (std::size_t i = 0; i < k; ++i)
        if ((sigma >> i) & 1u) s[i] = '1';
    return s;
}

// 1-based position in the conventional constituent listing, which starts
// from x1·x2···xk and ends at x1'·x2'···xk'.
inline std::uint64_t listing_position(sigma_t sigma, std::size_t k) {
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < k; ++i)
        if ((sigma >> i) & 1u) value |= std::uint64_t{1} << (k - 1 - i);
    return (std::uint64_t{1} << k) - value;
}

// The constituent term C_σ(x): the product x1^σ1 · x2^σ2 ··· xk^σk where
// x^1 = x and x^0 = x'. Over an empty context the product is 1.
inline term constituent_term(const var_context& ctx, sigma_t sigma) {
    if (ctx.empty()) return term::one();
    term result = ((sigma >> 0) & 1u) ? term::var(ctx.at(0)) : ~term::var(ctx.at(0));
    for (std::size_t i = 1; i < ctx.size(); ++i) {
        term literal = ((sigma >> i) & 1u) ? term::var(ctx.at(i)) : ~term::var(ctx.at(i));
        result = result & literal;
    }
    return result;
}

struct constituent {
    sigma_index sigma;
    term to_term() const { return constituent_term(sigma.context, sigma.bits); }
};

namespace detail {

inline void check_context_size(const var_context& ctx) {
    if (ctx.size() > max_context_size)
        throw context_too_large("context has " + std::to_string(ctx.size()) +
                                " variables; at most " + std::to_string(max_context_size) +
                                " are supported");
}

// Bit σ is set iff variable i is positive in σ.
inline boost::dynamic_bitset<> var_bit_pattern(std::size_t k, std::size_t i) {
    const std::size_t n = std::size_t{1} << k;
    boost::dynamic_bitset<> m;
    if (k < 6) {
        m.resize(n);
        for (std::size_t sigma = 0; sigma < n; ++sigma)
            if ((sigma >> i) & 1u) m.set(sigma);
        return m;
    }
    static constexpr unsigned long low_patterns[6] = {
        0xAAAAAAAAAAAAAAAAul, 0xCCCCCCCCCCCCCCCCul, 0xF0F0F0F0F0F0F0F0ul,
        0xFF00FF00FF00FF00ul, 0xFFFF0000FFFF0000ul, 0xFFFFFFFF00000000ul};
    const std::size_t nblocks = n / 64;
    for (std::size_t b = 0; b < nblocks; ++b) {
        unsigned long block =
            i < 6 ? low_patterns[i] : (((b >> (i - 6)) & 1u) ? ~0ul : 0ul);
        m.append(block);
    }
    return m;
}

}  // namespace detail

// The set of constituents of a term: a bitset over the 2^k σ indices of a
// context. Two terms over the same context denote the same class in every
// interpretation exactly when their constituent sets are equal, so this is
// the engine's canonical semantic object.
class constituent_set {
public:
    explicit constituent_set(var_context ctx) : ctx_(std::move(ctx)) {
        detail::check_context_size(ctx_);
        bits_.resize(std::size_t{1} << ctx_.size());
    }

    static constituent_set empty_set(var_context ctx) { return constituent_set(std::move(ctx)); }

    static constituent_set full_set(var_context ctx) {
        constituent_set s(std::move(ctx));
        s.bits_.set();
        return s;
    }

    const var_context& context() const { return ctx_; }
    std::size_t sigma_count() const { return bits_.size(); }

    bool test(sigma_t sigma) const { return bits_.test(sigma); }
    void set(sigma_t sigma, bool value = true) { bits_.set(sigma, value); }

    std::size_t count() const { return bits_.count(); }
    bool none() const { return bits_.none(); }
    bool all() const { return bits_.all(); }

    bool is_subset_of(const constituent_set& other) const {
        check_same_context(*this, other);
        return bits_.is_subset_of(other.bits_);
    }

    // Member σ indices in increasing order.
    std::vector<sigma_t> members() const {
        std::vector<sigma_t> out;
        for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
             i = bits_.find_next(i))
            out.push_back(static_cast<sigma_t>(i));
        return out;
    }

    friend constituent_set operator|(constituent_set a, const constituent_set& b) {
        check_same_context(a, b);
        a.bits_ |= b.bits_;
        return a;
    }

    friend constituent_set operator&(constituent_set a, const constituent_set& b) {
        check_same_context(a, b);
        a.bits_ &= b.bits_;
        return a;
    }

    friend constituent_set operator-(constituent_set a, const constituent_set& b) {
        check_same_context(a, b);
        a.bits_ -= b.bits_;
        return a;
    }

    friend constituent_set operator~(constituent_set a) {
        a.bits_.flip();
        return a;
    }

    friend bool operator==(const constituent_set& a, const constituent_set& b) {
        return a.ctx_ == b.ctx_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const constituent_set& a, const constituent_set& b) {
        return !(a == b);
    }

private:
    static void check_same_context(const constituent_set& a, const constituent_set& b) {
        if (a.ctx_ != b.ctx_)
            throw context_mismatch("constituent sets built over different contexts");
    }

    var_context ctx_;
    boost::dynamic_bitset<> bits_;
};

// t(σ): substitute the 0/1 vector σ for the context variables and fold;
// the result of a variable-free term is always 0 or 1.
inline int eval_at_sigma(const term& t, const var_context& ctx, sigma_t sigma) {
    switch (t.k()) {
        case term::kind::zero:
            return 0;
        case term::kind::one:
            return 1;
        case term::kind::var:
            return static_cast<int>((sigma >> ctx.index_of(t.name())) & 1u);
        case term::kind::complement:
            return 1 - eval_at_sigma(t.child(), ctx, sigma);
        case term::kind::union_:
            return eval_at_sigma(t.left(), ctx, sigma) | eval_at_sigma(t.right(), ctx, sigma);
        case term::kind::intersection:
            return eval_at_sigma(t.left(), ctx, sigma) & eval_at_sigma(t.right(), ctx, sigma);
    }
    return 0;
}

inline int eval_at_sigma(const term& t, const sigma_index& sigma) {
    return eval_at_sigma(t, sigma.context, sigma.bits);
}

namespace detail {

inline boost::dynamic_bitset<> constituent_bits(const term& t, const var_context& ctx) {
    const std::size_t n = std::size_t{1} << ctx.size();
    switch (t.k()) {
        case term::kind::zero:
            return boost::dynamic_bitset<>(n);
        case term::kind::one: {
            boost::dynamic_bitset<> b(n);
            b.set();
            return b;
        }
        case term::kind::var:
            return var_bit_pattern(ctx.size(), ctx.index_of(t.name()));
        case term::kind::complement:
            return constituent_bits(t.child(), ctx).flip();
        case term::kind::union_:
            return constituent_bits(t.left(), ctx) | constituent_bits(t.right(), ctx);
        case term::kind::intersection:
            return constituent_bits(t.left(), ctx) & constituent_bits(t.right(), ctx);
    }
    return boost::dynamic_bitset<>(n);
}

}  // namespace detail

// C(t) over ctx: σ is a member iff t(σ) = 1. Computed structurally (the
// constituent calculus: union ↦ or, intersection ↦ and, complement ↦ not);
// eval_at_sigma provides the independent pointwise route.
inline constituent_set constituents(const term& t, const var_context& ctx) {
    detail::check_context_size(ctx);
    constituent_set s(ctx);
    auto bits = detail::constituent_bits(t, ctx);
    for (auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next(i))
        s.set(static_cast<sigma_t>(i));
    return s;
}

// A term expanded about a sub-list of its variables: coefficients are
// terms in the remaining variables, one per σ over `about`.
struct expansion {
    var_context about;
    std::vector<term> coefficients;  // indexed by σ, size 2^|about|

    const term& coefficient(sigma_t sigma) const { return coefficients.at(sigma); }
};

inline expansion expand_about(const term& t, const var_context& about) {
    detail::check_context_size(about);
    expansion e{about, {}};
    const std::size_t n = std::size_t{1} << about.size();
    e.coefficients.reserve(n);
    for (sigma_t sigma = 0; sigma < n; ++sigma) {
        std::map<std::string, term> bindings;
        for (std::size_t i = 0; i < about.size(); ++i)
            bindings.emplace(about.at(i),
                             ((sigma >> i) & 1u) ? term::one() : term::zero());
        e.coefficients.push_back(simplify(substitute(t, bindings)));
    }
    return e;
}

// The union over all σ of coefficient(σ)·C_σ, i.e. the expanded form as a
// single term. Reassembly denotes the same class as the original term.
inline term reassemble(const expansion& e) {
    term result = term::zero();
    bool first = true;
    for (sigma_t sigma = 0; sigma < e.coefficients.size(); ++sigma) {
        term piece = e.coefficients[sigma] & constituent_term(e.about, sigma);
        result = first ? piece : (result | piece);
        first = false;
    }
    return result;
}

// 0 for the empty set, otherwise the union of the member constituent
// terms in increasing σ order.
inline term term_from_set(const constituent_set& s) {
    auto members = s.members();
    if (members.empty()) return term::zero();
    term result = constituent_term(s.context(), members[0]);
    for (std::size_t i = 1; i < members.size(); ++i)
        result = result | constituent_term(s.context(), members[i]);
    return result;
}

// A list of equations p1 = 0, ..., pn = 0 merged into the single
// equivalent equation p1 ∪ ··· ∪ pn = 0 (right-associated). An empty
// list yields 0 (= 0).
inline term reduce(const std::vector<basic_formula>& equations) {
    for (const auto& f : equations)
        if (!f.is_eq())
            throw polarity_error("reduce expects equations only; got a negated equation");
    if (equations.empty()) return term::zero();
    term result = equations.back().lhs;
    for (std::size_t i = equations.size() - 1; i-- > 0;) result = equations[i].lhs | result;
    return result;
}

}  // namespace boolalg
