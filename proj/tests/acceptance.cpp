// Acceptance suite: one pass/fail line per criterion, exit 0 only when
// every criterion passes. Ground truths come from the engine-independent
// oracles (emptiness-profile enumeration and explicit finite universes),
// never from the constituent-inclusion decision paths under test.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <boolalg/boolalg.hpp>
#include <boolalg/cli.hpp>

#include "support.hpp"

using namespace boolalg;
using support::compiled_term;
using support::exhaustive_terms;
using support::profile_count;
using support::random_term;
using support::realize_profile;

namespace {

int failures = 0;

struct outcome {
    bool pass = true;
    long long cases = 0;
    std::string note;

    void fail(const std::string& why) {
        if (pass) note = why;
        pass = false;
    }
};

void report(int number, const std::string& title, const outcome& o, double seconds) {
    std::ostringstream line;
    line << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL") << " - " << title
         << " (" << o.cases << " cases, " << std::fixed << std::setprecision(2) << seconds
         << "s)";
    if (!o.pass) line << " [" << o.note << "]";
    std::cout << line.str() << "\n";
    if (!o.pass) ++failures;
}

template <typename F>
void run_criterion(int number, const std::string& title, F body) {
    outcome o;
    auto start = std::chrono::steady_clock::now();
    body(o);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, title, o, seconds);
}

std::string describe(const argument& arg) {
    std::string s;
    for (const auto& f : arg.premisses) s += print_formula(f) + "; ";
    return s + "|- " + print_formula(arg.conclusion);
}

// ---------------------------------------------------------------------

void criterion_1(outcome& o) {
    // Exhaustive sweep: every argument over the k=2 depth-2 semantic
    // classes with up to two premisses.
    var_context ctx2({"x", "y"});
    auto reps = exhaustive_terms(ctx2, 3);  // all 16 two-variable classes
    std::vector<basic_formula> formulas;
    for (const auto& t : reps) {
        formulas.push_back(basic_formula::eq(t));
        formulas.push_back(basic_formula::neq(t));
    }
    auto try_one = [&](const argument& arg) {
        ++o.cases;
        if (check(arg).valid != oracle_valid(arg)) o.fail("engine/oracle split on " + describe(arg));
    };
    for (const auto& c : formulas) {
        try_one(argument{{}, c});
        for (const auto& p1 : formulas) {
            try_one(argument{{p1}, c});
            for (const auto& p2 : formulas) try_one(argument{{p1, p2}, c});
        }
    }

    // Seeded random sweep: k = 3, up to three premisses, depth <= 3.
    std::mt19937_64 rng(20240101);
    std::uniform_int_distribution<int> premiss_count(0, 3);
    for (int i = 0; i < 10000; ++i) {
        std::vector<basic_formula> premisses;
        int n = premiss_count(rng);
        for (int j = 0; j < n; ++j)
            premisses.push_back(support::random_basic_formula(rng, {"x", "y", "z"}, 3));
        argument arg{premisses, support::random_basic_formula(rng, {"x", "y", "z"}, 3)};
        try_one(arg);
    }
}

void criterion_2(outcome& o) {
    static const char forms[] = {'A', 'E', 'I', 'O'};

    // Ground truth: the profile oracle over all 256 moods.
    std::set<std::pair<int, std::string>> oracle_list;
    for (int figure = 1; figure <= 4; ++figure)
        for (char major : forms)
            for (char minor : forms)
                for (char conclusion : forms) {
                    ++o.cases;
                    argument arg = cli::syllogism_argument(figure, major, minor, conclusion);
                    if (oracle_valid(arg))
                        oracle_list.emplace(figure, std::string{major, minor, conclusion});
                }

    // Engine route: the CLI subcommand.
    std::ostringstream out, err;
    if (run_cli({"--json", "syllogisms"}, out, err) != 0) {
        o.fail("syllogisms subcommand failed");
        return;
    }
    auto doc = nlohmann::json::parse(out.str());
    std::set<std::pair<int, std::string>> engine_list;
    for (const auto& entry : doc["valid"])
        engine_list.emplace(entry["figure"].get<int>(), entry["mood"].get<std::string>());

    if (engine_list != oracle_list) o.fail("engine list differs from oracle list");
    if (oracle_list.size() != 15) o.fail("oracle found " + std::to_string(oracle_list.size()) + " valid moods");

    // The classical unconditionally-valid forms, and the nine forms that
    // need existential import.
    std::set<std::pair<int, std::string>> classical{
        {1, "AAA"}, {1, "EAE"}, {1, "AII"}, {1, "EIO"}, {2, "EAE"},
        {2, "AEE"}, {2, "EIO"}, {2, "AOO"}, {3, "IAI"}, {3, "AII"},
        {3, "OAO"}, {3, "EIO"}, {4, "AEE"}, {4, "IAI"}, {4, "EIO"}};
    if (oracle_list != classical) o.fail("oracle list is not the classical fifteen");

    std::set<std::pair<int, std::string>> import{
        {1, "AAI"}, {1, "EAO"}, {2, "EAO"}, {2, "AEO"}, {3, "AAI"},
        {3, "EAO"}, {4, "AAI"}, {4, "EAO"}, {4, "AEO"}};
    for (const auto& mood : import)
        if (engine_list.count(mood)) o.fail("existential-import mood accepted: " + mood.second);
}

void criterion_3(outcome& o) {
    var_context full({"x", "y1", "y2"});
    var_context ys({"y1", "y2"});
    std::mt19937_64 rng(20240103);
    std::vector<term> sweep = exhaustive_terms(full, 5);
    for (int i = 0; i < 3000; ++i) sweep.push_back(random_term(rng, {"x", "y1", "y2"}, 3));

    for (const auto& p : sweep) {
        ++o.cases;
        term eliminant = eliminate_one(p, "x").eliminant;
        general_solution sol = solve_one(p, "x");
        var_context expr_ctx({"y1", "y2", sol.parameter});
        auto cp = compiled_term::compile(p, full);
        auto ce = compiled_term::compile(eliminant, ys);
        auto cx = compiled_term::compile(sol.expression, expr_ctx);

        for (int multiplicity = 1; multiplicity <= 2; ++multiplicity) {
            for (std::uint32_t profile = 1; profile < profile_count(ys); ++profile) {
                auto m = realize_profile(profile, ys, multiplicity);
                bool vanishes = ce.eval(m.values.data(), m.universe) == 0;
                bool solvable = false;
                for (std::uint32_t vx = 0; vx <= m.universe && !solvable; ++vx) {
                    std::uint32_t values[3] = {vx, m.values[0], m.values[1]};
                    solvable = cp.eval(values, m.universe) == 0;
                }
                if (vanishes != solvable) {
                    o.fail("eliminant incomplete for " + print_term(p));
                    return;
                }
                if (!vanishes) continue;
                // soundness: every z solves; completeness: z := x recovers x
                for (std::uint32_t v = 0; v <= m.universe; ++v) {
                    std::uint32_t expr_values[3] = {m.values[0], m.values[1], v};
                    std::uint32_t solved = cx.eval(expr_values, m.universe);
                    std::uint32_t p_values[3] = {solved, m.values[0], m.values[1]};
                    if (cp.eval(p_values, m.universe) != 0) {
                        o.fail("solution unsound for " + print_term(p));
                        return;
                    }
                    std::uint32_t q_values[3] = {v, m.values[0], m.values[1]};
                    if (cp.eval(q_values, m.universe) == 0 && solved != v) {
                        o.fail("z := x fails to recover a solution of " + print_term(p));
                        return;
                    }
                }
            }
        }
    }
}

void criterion_4(outcome& o) {
    var_context full({"x", "y", "z"});
    std::mt19937_64 rng(20240104);
    std::vector<term> sweep = exhaustive_terms(full, 5);
    for (int i = 0; i < 2000; ++i) sweep.push_back(random_term(rng, {"x", "y", "z"}, 3));

    const std::vector<std::pair<std::string, std::string>> pairs{
        {"x", "y"}, {"x", "z"}, {"y", "z"}};
    for (const auto& p : sweep) {
        for (const auto& [a, b] : pairs) {
            ++o.cases;
            term many = eliminate_many(p, {a, b}).eliminant;
            term ab = eliminate_one(eliminate_one(p, a).eliminant, b).eliminant;
            term ba = eliminate_one(eliminate_one(p, b).eliminant, a).eliminant;
            std::vector<term> all{many, ab, ba};
            var_context rest = infer_context(all);
            auto reference = constituents(many, rest);
            if (constituents(ab, rest) != reference || constituents(ba, rest) != reference) {
                o.fail("order dependence eliminating {" + a + "," + b + "} from " + print_term(p));
                return;
            }
        }
    }
}

void criterion_5(outcome& o) {
    var_context full({"x", "y1", "y2"});
    var_context ys({"y1", "y2"});

    // Constituent-identical (eliminant, residual) pairs on the full sweep.
    auto reps = exhaustive_terms(full, 5);
    auto pair_matches = [&](const term& p, const term& q) {
        auto direct = eliminate_one_one(p, q, "x");
        auto via_v = eliminate_one_one_via_v(p, q, "x");
        std::vector<term> all{direct.eliminant, *direct.residual_neq, via_v.eliminant,
                              *via_v.residual_neq};
        var_context joint = infer_context(all);
        return constituents(direct.eliminant, joint) == constituents(via_v.eliminant, joint) &&
               constituents(*direct.residual_neq, joint) ==
                   constituents(*via_v.residual_neq, joint);
    };
    for (const auto& p : reps)
        for (const auto& q : reps) {
            ++o.cases;
            if (!pair_matches(p, q)) {
                o.fail("pipeline mismatch on p=" + print_term(p) + ", q=" + print_term(q));
                return;
            }
        }

    // Both routes match the direct quantifier semantics on a seeded sample.
    std::mt19937_64 rng(20240105);
    for (int i = 0; i < 2000; ++i) {
        ++o.cases;
        term p = random_term(rng, {"x", "y1", "y2"}, 3);
        term q = random_term(rng, {"x", "y1", "y2"}, 3);
        if (!pair_matches(p, q)) {
            o.fail("pipeline mismatch on p=" + print_term(p) + ", q=" + print_term(q));
            return;
        }
        auto r = eliminate_one_one(p, q, "x");
        auto cp = compiled_term::compile(p, full);
        auto cq = compiled_term::compile(q, full);
        auto ce = compiled_term::compile(r.eliminant, ys);
        auto cr = compiled_term::compile(*r.residual_neq, ys);
        for (int multiplicity = 1; multiplicity <= 2; ++multiplicity) {
            for (std::uint32_t profile = 1; profile < profile_count(ys); ++profile) {
                auto m = realize_profile(profile, ys, multiplicity);
                bool rhs = ce.eval(m.values.data(), m.universe) == 0 &&
                           cr.eval(m.values.data(), m.universe) != 0;
                bool lhs = false;
                for (std::uint32_t vx = 0; vx <= m.universe && !lhs; ++vx) {
                    std::uint32_t values[3] = {vx, m.values[0], m.values[1]};
                    lhs = cp.eval(values, m.universe) == 0 && cq.eval(values, m.universe) != 0;
                }
                if (lhs != rhs) {
                    o.fail("one-one eliminant wrong for p=" + print_term(p) + ", q=" + print_term(q));
                    return;
                }
            }
        }
    }
}

void criterion_6(outcome& o) {
    // Frozen instances plus a seeded sample, n in {1,2} negated equations,
    // universes of size 1 and 2 (size 3 for the distinguished instance).
    term x = term::var("x"), y = term::var("y");
    struct instance {
        term p;
        std::vector<term> qs;
        std::vector<std::string> ys;
    };
    std::vector<instance> instances{
        {x & ~y, {x}, {"y"}},
        {term::zero(), {y & x, y & ~x}, {"y"}},
        {x & ~y, {term::one()}, {"y"}},
    };
    std::mt19937_64 rng(20240106);
    for (int i = 0; i < 60; ++i) {
        instance inst;
        inst.ys = {"y1", "y2"};
        inst.p = random_term(rng, {"x", "y1", "y2"}, 3);
        inst.qs.push_back(random_term(rng, {"x", "y1", "y2"}, 3));
        if (i % 2 == 0) inst.qs.push_back(random_term(rng, {"x", "y1", "y2"}, 3));
        instances.push_back(inst);
    }
    for (int i = 0; i < 60; ++i) {
        instance inst;
        inst.ys = {"y"};
        inst.p = random_term(rng, {"x", "y"}, 3);
        inst.qs.push_back(random_term(rng, {"x", "y"}, 3));
        if (i % 2 == 0) inst.qs.push_back(random_term(rng, {"x", "y"}, 3));
        instances.push_back(inst);
    }

    for (const auto& inst : instances) {
        ++o.cases;
        if (!support::parametric_equivalent(inst.p, inst.qs, inst.ys, 2)) {
            o.fail("parametric closure differs from the source system for p=" +
                   print_term(inst.p));
            return;
        }
    }

    // The two-negated-equation instance: solvable for x exactly when the
    // universe gives y at least two elements.
    var_context xy({"x", "y"});
    auto cxy = compiled_term::compile(x & y, xy);
    auto cxny = compiled_term::compile(~x & y, xy);
    for (int m = 1; m <= 3; ++m) {
        const std::uint32_t universe = (std::uint32_t{1} << m) - 1;
        for (std::uint32_t vy = 0; vy <= universe; ++vy) {
            ++o.cases;
            bool solvable = false;
            for (std::uint32_t vx = 0; vx <= universe && !solvable; ++vx) {
                std::uint32_t values[2] = {vx, vy};
                solvable = cxy.eval(values, universe) != 0 && cxny.eval(values, universe) != 0;
            }
            int size = 0;
            for (std::uint32_t b = vy; b; b >>= 1) size += static_cast<int>(b & 1);
            if (solvable != (size >= 2)) {
                o.fail("the two-negated-equation instance misbehaves at |y|=" +
                       std::to_string(size));
                return;
            }
        }
    }
}

void criterion_7(outcome& o) {
    // Exhaustive: k = 2 base variables, one or two negated premisses.
    var_context ctx2({"x", "y"});
    auto reps = exhaustive_terms(ctx2, 3);  // all 16 two-variable classes
    auto agree = [&](const term& p, const std::vector<term>& negs, const term& q) {
        std::vector<basic_formula> premisses{basic_formula::eq(p)};
        for (const auto& t : negs) premisses.push_back(basic_formula::neq(t));
        bool direct = check(argument{premisses, basic_formula::neq(q)}).valid;
        bool via_v = check_valid_via_v(p, negs, q).valid;
        return direct == via_v;
    };

    for (const auto& p : reps)
        for (const auto& q0 : reps)
            for (const auto& q : reps) {
                ++o.cases;
                if (!agree(p, {q0}, q)) {
                    o.fail("V-method split on one negated premiss");
                    return;
                }
            }
    for (const auto& p : reps)
        for (const auto& q0 : reps)
            for (const auto& q1 : reps)
                for (const auto& q : reps) {
                    ++o.cases;
                    if (!agree(p, {q0, q1}, q)) {
                        o.fail("V-method split on two negated premisses");
                        return;
                    }
                }

    // Seeded larger cases: k = 3 base variables.
    std::mt19937_64 rng(20240107);
    std::uniform_int_distribution<int> neg_count(0, 2);
    for (int i = 0; i < 10000; ++i) {
        ++o.cases;
        term p = random_term(rng, {"x", "y", "z"}, 3);
        std::vector<term> negs;
        int n = neg_count(rng);
        for (int j = 0; j < n; ++j) negs.push_back(random_term(rng, {"x", "y", "z"}, 3));
        term q = random_term(rng, {"x", "y", "z"}, 3);
        if (!agree(p, negs, q)) {
            o.fail("V-method split on a random case");
            return;
        }
    }
}

void criterion_8(outcome& o) {
    std::mt19937_64 rng(20240108);
    for (int i = 0; i < 10000; ++i) {
        ++o.cases;
        term t = random_term(rng, {"x", "y", "z", "w1", "w2"}, 5);
        if (parse_term(print_term(t)) != t) {
            o.fail("print/parse round trip broke on " + print_term(t));
            return;
        }
    }

    for (int k = 0; k <= 3; ++k) {
        std::vector<std::string> names;
        for (int i = 0; i < k; ++i) names.push_back("v" + std::to_string(i + 1));
        var_context ctx(names);
        const std::uint32_t sets = std::uint32_t{1} << (std::uint32_t{1} << k);
        for (std::uint32_t bits = 0; bits < sets; ++bits) {
            ++o.cases;
            constituent_set s(ctx);
            for (sigma_t sigma = 0; sigma < (sigma_t{1} << k); ++sigma)
                if ((bits >> sigma) & 1u) s.set(sigma);
            if (constituents(term_from_set(s), ctx) != s) {
                o.fail("term_from_set/constituents round trip broke at k=" + std::to_string(k));
                return;
            }
        }
    }
}

void criterion_9(outcome& o) {
    std::ostringstream out, err;
    int code = run_cli({"--json", "dnf", "x1 & x2 | x1' & x2'"}, out, err);
    ++o.cases;
    if (code != 0) {
        o.fail("dnf exited with " + std::to_string(code));
        return;
    }
    auto doc = nlohmann::json::parse(out.str());
    auto positions = nlohmann::json::array();
    for (const auto& c : doc["constituents"]) positions.push_back(c["listing"]);
    if (positions != nlohmann::json::array({1, 4})) o.fail("constituent set is not {C_1, C_4}");
    const auto& model = doc["canonical_model"];
    if (model.is_null() || model["universe"].size() != 2)
        o.fail("canonical model universe is not two elements");
    auto x1 = model["assignment"]["x1"], x2 = model["assignment"]["x2"];
    if (x1.size() != 1 || x2.size() != 1 || x1 == x2)
        o.fail("variable interpretations are not disjoint singletons");
    if (model["universe_listing"] != nlohmann::json::array({2, 3}))
        o.fail("universe is not {C_2, C_3} in listing order");

    std::ostringstream text_out, text_err;
    run_cli({"dnf", "x1 & x2 | x1' & x2'"}, text_out, text_err);
    std::string text = text_out.str();
    if (text.find("C_1 [11] = x1 & x2") == std::string::npos ||
        text.find("C_4 [00] = x1' & x2'") == std::string::npos)
        o.fail("text rendering differs from the worked example");
}

}  // namespace

int main() {
    run_criterion(1, "argument validity agrees with the profile oracle", criterion_1);
    run_criterion(2, "syllogisms: the fifteen unconditional moods, oracle-grounded", criterion_2);
    run_criterion(3, "single-variable eliminant and general solution", criterion_3);
    run_criterion(4, "multi-variable eliminant equals iterated elimination", criterion_4);
    run_criterion(5, "one-one elimination: direct, V-pipeline, and semantics", criterion_5);
    run_criterion(6, "parametric solutions are equivalent to their systems", criterion_6);
    run_criterion(7, "V-method validity agrees with the direct route", criterion_7);
    run_criterion(8, "print/parse and constituent-set round trips", criterion_8);
    run_criterion(9, "two-variable worked example through the CLI", criterion_9);

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
