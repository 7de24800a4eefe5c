#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolalg.hpp"

namespace boolalg {
namespace cli {

using nlohmann::json;

struct options {
    bool json_output = false;
    bool unicode = false;
    std::size_t max_vars = 16;

    print_style style() const {
        return unicode ? print_style::unicode : print_style::ascii;
    }
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void ensure_context_size(const var_context& ctx, const options& opts) {
    if (ctx.size() > opts.max_vars)
        throw context_too_large("problem uses " + std::to_string(ctx.size()) +
                                " variables; the limit is " + std::to_string(opts.max_vars) +
                                " (raise with --max-vars, hard cap " +
                                std::to_string(max_context_size) + ")");
}

// ---- σ rendering -----------------------------------------------------

// σ indices ordered as the conventional constituent listing (C_1 = the
// all-positive constituent first).
inline std::vector<sigma_t> listing_sorted(std::vector<sigma_t> sigmas, std::size_t k) {
    std::sort(sigmas.begin(), sigmas.end(), [k](sigma_t a, sigma_t b) {
        return listing_position(a, k) < listing_position(b, k);
    });
    return sigmas;
}

inline std::string sigma_label(sigma_t sigma, std::size_t k) {
    return k == 0 ? std::string("ε") : sigma_string(sigma, k);
}

inline std::string sigma_set_text(const std::vector<sigma_t>& sorted, std::size_t k) {
    std::string s = "{";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) s += ", ";
        s += sigma_label(sorted[i], k);
    }
    return s + "}";
}

inline std::string listing_comment(const std::vector<sigma_t>& sorted, std::size_t k) {
    std::string s;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) s += ", ";
        s += "C_" + std::to_string(listing_position(sorted[i], k));
    }
    return s.empty() ? "none" : s;
}

inline json sigma_set_json(const std::vector<sigma_t>& sorted, std::size_t k) {
    json arr = json::array();
    for (auto sigma : sorted) arr.push_back(sigma_string(sigma, k));
    return arr;
}

// ---- interpretations -------------------------------------------------

inline void print_model_text(std::ostream& out, const interpretation& m,
                             const var_context& ctx, const std::string& indent) {
    const std::size_t k = ctx.size();
    auto universe = listing_sorted({m.universe.begin(), m.universe.end()}, k);
    out << indent << "universe: " << sigma_set_text(universe, k) << "   # "
        << listing_comment(universe, k) << "\n";
    for (const auto& name : ctx.vars()) {
        auto it = m.assignment.find(name);
        if (it == m.assignment.end()) continue;
        auto value = listing_sorted({it->second.begin(), it->second.end()}, k);
        out << indent << name << " = " << sigma_set_text(value, k) << "   # "
            << listing_comment(value, k) << "\n";
    }
}

inline json model_json(const interpretation& m, const var_context& ctx) {
    const std::size_t k = ctx.size();
    auto universe = listing_sorted({m.universe.begin(), m.universe.end()}, k);
    json j;
    j["universe"] = sigma_set_json(universe, k);
    json positions = json::array();
    for (auto sigma : universe) positions.push_back(listing_position(sigma, k));
    j["universe_listing"] = positions;
    json assign = json::object();
    for (const auto& name : ctx.vars()) {
        auto it = m.assignment.find(name);
        if (it == m.assignment.end()) continue;
        assign[name] = sigma_set_json(listing_sorted({it->second.begin(), it->second.end()}, k), k);
    }
    j["assignment"] = assign;
    return j;
}

inline std::string context_text(const var_context& ctx) {
    std::string s;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (i) s += ", ";
        s += ctx.at(i);
    }
    return s.empty() ? "(none)" : s;
}

inline json context_json(const var_context& ctx) {
    json arr = json::array();
    for (const auto& v : ctx.vars()) arr.push_back(v);
    return arr;
}

// ---- validity reports -------------------------------------------------

// Certificates render over their own context (the V route extends the
// argument's context with fresh V variables); countermodels are always
// over the argument's base context.
inline void print_report_text(std::ostream& out, const validity_report& rep,
                              const var_context& ctx) {
    out << (rep.valid ? "valid" : "invalid") << "\n";
    out << "route: " << route_name(rep.route) << "\n";
    const var_context& shown = rep.certificate ? rep.certificate->included.context() : ctx;
    out << "context: " << context_text(shown) << "\n";
    if (rep.certificate) {
        const auto& cert = *rep.certificate;
        const std::size_t k = shown.size();
        out << "certificate: " << sigma_set_text(listing_sorted(cert.included.members(), k), k)
            << " <= " << sigma_set_text(listing_sorted(cert.covering.members(), k), k) << "\n";
        if (cert.neg_premiss_index)
            out << "via negated premiss " << (*cert.neg_premiss_index + 1) << "\n";
    }
    if (rep.countermodel) {
        out << "countermodel:\n";
        print_model_text(out, *rep.countermodel, ctx, "  ");
    }
}

inline json report_json(const validity_report& rep, const var_context& ctx) {
    json j;
    j["valid"] = rep.valid;
    j["route"] = route_name(rep.route);
    const var_context& shown = rep.certificate ? rep.certificate->included.context() : ctx;
    j["context"] = context_json(shown);
    if (rep.certificate) {
        const std::size_t k = shown.size();
        json cert;
        cert["included"] = sigma_set_json(listing_sorted(rep.certificate->included.members(), k), k);
        cert["covering"] = sigma_set_json(listing_sorted(rep.certificate->covering.members(), k), k);
        cert["via_negated_premiss"] = rep.certificate->neg_premiss_index
                                           ? json(*rep.certificate->neg_premiss_index + 1)
                                           : json(nullptr);
        j["certificate"] = cert;
    } else {
        j["certificate"] = nullptr;
    }
    j["countermodel"] =
        rep.countermodel ? model_json(*rep.countermodel, ctx) : json(nullptr);
    return j;
}

inline void emit_json(std::ostream& out, json j) {
    out << j.dump(2) << "\n";
}

// ---- subcommands -------------------------------------------------------

inline int cmd_dnf(const options& opts, const std::string& src, std::ostream& out) {
    term t = parse_term(src);
    var_context ctx = infer_context(std::vector<term>{t});
    ensure_context_size(ctx, opts);
    const std::size_t k = ctx.size();
    auto c = constituents(t, ctx);
    auto members = listing_sorted(c.members(), k);

    // Display expansion in listing order; the engine's own normal form
    // (term_from_set) uses increasing σ.
    term display = term::zero();
    for (std::size_t i = 0; i < members.size(); ++i) {
        term piece = constituent_term(ctx, members[i]);
        display = i == 0 ? piece : (display | piece);
    }

    std::optional<interpretation> model;
    if (!c.all()) model = canonical_model(t, ctx);

    if (opts.json_output) {
        json j;
        j["schema"] = 1;
        j["command"] = "dnf";
        j["term"] = print_term(t);
        j["context"] = context_json(ctx);
        j["sigma_count"] = c.sigma_count();
        j["full_expansion"] = print_term(display);
        json cons = json::array();
        for (auto sigma : members)
            cons.push_back(json{{"listing", listing_position(sigma, k)},
                                {"sigma", sigma_string(sigma, k)},
                                {"term", print_term(constituent_term(ctx, sigma))}});
        j["constituents"] = cons;
        j["canonical_model"] = model ? model_json(*model, ctx) : json(nullptr);
        emit_json(out, j);
        return 0;
    }

    out << "context: " << context_text(ctx) << "\n";
    out << "full expansion: " << print_term(display, opts.style()) << "\n";
    out << "constituents (" << members.size() << " of " << c.sigma_count() << "):";
    if (members.empty()) out << " none";
    for (std::size_t i = 0; i < members.size(); ++i)
        out << (i ? ", " : " ") << "C_" << listing_position(members[i], k) << " ["
            << sigma_label(members[i], k) << "] = "
            << print_term(constituent_term(ctx, members[i]), opts.style());
    out << "\n";
    if (model) {
        out << "canonical model of the equation term = 0:\n";
        print_model_text(out, *model, ctx, "  ");
    } else {
        out << "canonical model of the equation term = 0: none (all constituents forced empty)\n";
    }
    return 0;
}

inline int cmd_check(const options& opts, const std::string& path, std::ostream& out) {
    source_document doc = parse_document(read_file(path));
    argument arg = doc.to_argument();
    var_context ctx = infer_context(arg);
    ensure_context_size(ctx, opts);
    validity_report rep = check(arg);
    if (opts.json_output) {
        json j = report_json(rep, ctx);
        j["schema"] = 1;
        j["command"] = "check";
        emit_json(out, j);
    } else {
        print_report_text(out, rep, ctx);
    }
    return rep.valid ? 0 : 1;
}

inline int cmd_sat(const options& opts, const std::string& path, std::ostream& out) {
    source_document doc = parse_document(read_file(path));
    if (doc.conclusion) throw error("'sat' expects a plain formula list (no '|-' line)");
    var_context ctx = infer_context(doc.premisses);
    ensure_context_size(ctx, opts);
    sat_result r = decide_sat(doc.premisses, ctx);

    if (opts.json_output) {
        json j;
        j["schema"] = 1;
        j["command"] = "sat";
        j["satisfiable"] = r.satisfiable;
        j["context"] = context_json(ctx);
        j["witness"] = r.witness ? model_json(*r.witness, ctx) : json(nullptr);
        if (r.satisfiable)
            j["reason"] = nullptr;
        else if (r.equations_unsatisfiable)
            j["reason"] = json{{"equations_unsatisfiable", true}};
        else
            j["reason"] = json{{"covered_negated_premiss", *r.offending_formula + 1}};
        emit_json(out, j);
    } else {
        out << (r.satisfiable ? "SAT" : "UNSAT") << "\n";
        if (r.witness) {
            out << "witness:\n";
            print_model_text(out, *r.witness, ctx, "  ");
        } else if (r.equations_unsatisfiable) {
            out << "reason: the equations alone are unsatisfiable (constituents cover everything)\n";
        } else {
            out << "reason: premiss " << (*r.offending_formula + 1)
                << " is covered by the equations' constituents\n";
        }
    }
    return r.satisfiable ? 0 : 1;
}

inline int cmd_reduce(const options& opts, const std::string& path, std::ostream& out) {
    source_document doc = parse_document(read_file(path));
    if (doc.conclusion) throw error("'reduce' expects a plain formula list (no '|-' line)");
    var_context ctx = infer_context(doc.premisses);
    ensure_context_size(ctx, opts);
    term merged = reduce(doc.premisses);
    if (opts.json_output) {
        json j;
        j["schema"] = 1;
        j["command"] = "reduce";
        j["equation"] = print_term(merged);
        emit_json(out, j);
    } else {
        out << "equation: " << print_term(merged, opts.style()) << " = 0\n";
    }
    return 0;
}

inline int cmd_eliminate(const options& opts, const std::vector<std::string>& vars,
                         const std::string& path, std::ostream& out) {
    source_document doc = parse_document(read_file(path));
    if (doc.conclusion) throw error("'eliminate' expects a plain formula list (no '|-' line)");
    var_context ctx = infer_context(doc.premisses);
    ensure_context_size(ctx.extended(vars), opts);

    std::vector<basic_formula> equations;
    std::vector<term> negated;
    for (const auto& f : doc.premisses)
        f.is_eq() ? equations.push_back(f) : negated.push_back(f.lhs);

    term p = reduce(equations);
    elimination_result r;
    if (negated.empty()) {
        r = eliminate_many(p, vars);
    } else if (negated.size() == 1 && vars.size() == 1) {
        r = eliminate_one_one(p, negated[0], vars[0]);
    } else {
        throw error("elimination with negated equations supports exactly one negated "
                    "equation and one variable (two or more negated equations admit no "
                    "quantifier-free eliminant; see 'solve')");
    }

    if (opts.json_output) {
        json j;
        j["schema"] = 1;
        j["command"] = "eliminate";
        j["eliminated"] = r.eliminated;
        j["eliminant"] = print_term(r.eliminant);
        j["residual_neq"] = r.residual_neq ? json(print_term(*r.residual_neq)) : json(nullptr);
        emit_json(out, j);
    } else {
        out << "eliminated:";
        if (r.eliminated.empty()) out << " (none)";
        for (std::size_t i = 0; i < r.eliminated.size(); ++i)
            out << (i ? ", " : " ") << r.eliminated[i];
        out << "\n";
        out << "eliminant: " << print_term(r.eliminant, opts.style()) << " = 0\n";
        if (r.residual_neq)
            out << "residual: " << print_term(*r.residual_neq, opts.style()) << " != 0\n";
    }
    return 0;
}

inline int cmd_solve(const options& opts, const std::string& var, const std::string& path,
                     std::ostream& out) {
    source_document doc = parse_document(read_file(path));
    if (doc.conclusion) throw error("'solve' expects a plain formula list (no '|-' line)");
    var_context ctx = infer_context(doc.premisses);
    ensure_context_size(ctx, opts);

    std::vector<basic_formula> equations;
    std::vector<term> negated;
    for (const auto& f : doc.premisses)
        f.is_eq() ? equations.push_back(f) : negated.push_back(f.lhs);
    term p = reduce(equations);

    if (negated.empty()) {
        general_solution g = solve_one(p, var);
        if (opts.json_output) {
            json j;
            j["schema"] = 1;
            j["command"] = "solve";
            j["kind"] = "general";
            j["solved_var"] = g.solved_var;
            j["parameter"] = g.parameter;
            j["solution"] = print_term(g.expression);
            j["side_condition"] = print_term(g.side_condition);
            j["lower_bound"] = print_term(g.lower_bound);
            j["upper_bound"] = print_term(g.upper_bound);
            emit_json(out, j);
        } else {
            out << "solved variable: " << g.solved_var << "\n";
            out << "parameter: " << g.parameter << "\n";
            out << "solution: " << g.solved_var << " = "
                << print_term(g.expression, opts.style()) << "\n";
            out << "side condition: " << print_term(g.side_condition, opts.style())
                << " = 0\n";
            out << "bounds: " << print_term(g.lower_bound, opts.style()) << " <= "
                << g.solved_var << " <= " << print_term(g.upper_bound, opts.style()) << "\n";
        }
        return 0;
    }

    parametric_solution s = solve_system(p, negated, var);
    if (opts.json_output) {
        json j;
        j["schema"] = 1;
        j["command"] = "solve";
        j["kind"] = "parametric";
        j["solved_var"] = s.solved_var;
        j["multiplier"] = s.multiplier;
        j["witnesses"] = s.witnesses;
        j["coefficients"] = json{{"a", print_term(s.coeff_a)}, {"b", print_term(s.coeff_b)}};
        json cs = json::array(), ds = json::array();
        for (const auto& c : s.coeff_c) cs.push_back(print_term(c));
        for (const auto& d : s.coeff_d) ds.push_back(print_term(d));
        j["coefficients"]["c"] = cs;
        j["coefficients"]["d"] = ds;
        json constraints = json::array();
        for (const auto& f : s.constraints) constraints.push_back(print_formula(f));
        j["constraints"] = constraints;
        j["solution"] = print_term(s.solution_expr);
        emit_json(out, j);
    } else {
        out << "solved variable: " << s.solved_var << "\n";
        out << "parameters: " << s.multiplier;
        for (const auto& v : s.witnesses) out << ", " << v;
        out << "\n";
        out << "coefficients: a = " << print_term(s.coeff_a, opts.style())
            << ", b = " << print_term(s.coeff_b, opts.style());
        for (std::size_t i = 0; i < s.coeff_c.size(); ++i)
            out << ", c" << (i + 1) << " = " << print_term(s.coeff_c[i], opts.style())
                << ", d" << (i + 1) << " = " << print_term(s.coeff_d[i], opts.style());
        out << "\n";
        out << "constraints:\n";
        for (const auto& f : s.constraints)
            out << "  " << print_formula(f, opts.style()) << "\n";
        out << "solution: " << s.solved_var << " = "
            << print_term(s.solution_expr, opts.style()) << "\n";
    }
    return 0;
}

inline int cmd_translate(const options& opts, const std::string& src, std::ostream& out) {
    auto cat = try_parse_categorical(src);
    basic_formula f = cat ? cat->to_formula() : parse_formula(src);
    std::optional<categorical_form> matched = cat ? cat : match_categorical(f);

    if (opts.json_output) {
        json j;
        j["schema"] = 1;
        j["command"] = "translate";
        j["input"] = src;
        j["direction"] = cat ? "categorical-to-equation" : "equation-to-categorical";
        j["formula"] = print_formula(f);
        j["categorical"] = matched ? json(matched->text()) : json(nullptr);
        emit_json(out, j);
        return 0;
    }
    if (cat)
        out << print_formula(f, opts.style()) << "\n";
    else if (matched)
        out << matched->text() << "\n";
    else
        out << print_formula(f, opts.style()) << "\n";
    return 0;
}

inline int cmd_vcheck(const options& opts, const std::string& path, std::ostream& out,
                      std::ostream& err) {
    source_document doc = parse_document(read_file(path));
    argument arg = doc.to_argument();
    if (!arg.conclusion.is_neq())
        throw error("'vcheck' needs a negated conclusion (the V-method translates "
                    "negated equations)");

    std::vector<basic_formula> equations;
    std::vector<term> negated;
    for (const auto& f : arg.premisses)
        f.is_eq() ? equations.push_back(f) : negated.push_back(f.lhs);
    term p = reduce(equations);

    var_context base = infer_context(arg);
    std::size_t v_count = negated.empty() ? 1 : negated.size();
    if (base.size() + v_count > opts.max_vars)
        throw context_too_large("V-method needs " + std::to_string(base.size() + v_count) +
                                " variables; the limit is " + std::to_string(opts.max_vars));

    validity_report via_v = check_valid_via_v(p, negated, arg.conclusion.lhs);
    validity_report direct = check(arg);
    bool agree = via_v.valid == direct.valid;

    // Countermodels from the V route are over its own base inference
    // (reduced equation first, then the negated premisses, then the
    // conclusion).
    std::vector<term> v_route_terms{p};
    v_route_terms.insert(v_route_terms.end(), negated.begin(), negated.end());
    v_route_terms.push_back(arg.conclusion.lhs);
    var_context v_base = infer_context(v_route_terms);

    if (opts.json_output) {
        json j = report_json(via_v, v_base);
        j["schema"] = 1;
        j["command"] = "vcheck";
        j["direct_valid"] = direct.valid;
        j["agree"] = agree;
        emit_json(out, j);
    } else {
        print_report_text(out, via_v, v_base);
        out << "direct route: " << (direct.valid ? "valid" : "invalid") << "\n";
        out << "agreement: " << (agree ? "yes" : "NO") << "\n";
    }
    if (!agree) {
        err << "error: V-method and direct route disagree\n";
        return 2;
    }
    return via_v.valid ? 0 : 1;
}

inline int cmd_veliminate(const options& opts, const std::string& var, const std::string& path,
                          std::ostream& out, std::ostream& err) {
    source_document doc = parse_document(read_file(path));
    if (doc.conclusion) throw error("'veliminate' expects a plain formula list (no '|-' line)");
    var_context ctx = infer_context(doc.premisses);
    ensure_context_size(ctx, opts);

    std::vector<basic_formula> equations;
    std::vector<term> negated;
    for (const auto& f : doc.premisses)
        f.is_eq() ? equations.push_back(f) : negated.push_back(f.lhs);
    if (negated.size() != 1)
        throw error("'veliminate' needs exactly one negated equation");
    term p = reduce(equations);

    elimination_result via_v = eliminate_one_one_via_v(p, negated[0], var);
    elimination_result direct = eliminate_one_one(p, negated[0], var);

    std::vector<term> all{via_v.eliminant, *via_v.residual_neq, direct.eliminant,
                          *direct.residual_neq};
    var_context jointly = infer_context(all);
    bool agree = constituents(via_v.eliminant, jointly) == constituents(direct.eliminant, jointly) &&
                 constituents(*via_v.residual_neq, jointly) ==
                     constituents(*direct.residual_neq, jointly);

    if (opts.json_output) {
        json j;
        j["schema"] = 1;
        j["command"] = "veliminate";
        j["eliminated"] = via_v.eliminated;
        j["eliminant"] = print_term(via_v.eliminant);
        j["residual_neq"] = print_term(*via_v.residual_neq);
        j["direct_eliminant"] = print_term(direct.eliminant);
        j["direct_residual_neq"] = print_term(*direct.residual_neq);
        j["agree"] = agree;
        emit_json(out, j);
    } else {
        out << "eliminated: " << var << "\n";
        out << "eliminant: " << print_term(via_v.eliminant, opts.style()) << " = 0\n";
        out << "residual: " << print_term(*via_v.residual_neq, opts.style()) << " != 0\n";
        out << "direct route: eliminant " << print_term(direct.eliminant, opts.style())
            << " = 0, residual " << print_term(*direct.residual_neq, opts.style())
            << " != 0\n";
        out << "agreement: " << (agree ? "yes" : "NO") << "\n";
    }
    if (!agree) {
        err << "error: V-pipeline and direct route disagree\n";
        return 2;
    }
    return 0;
}

// ---- syllogisms ---------------------------------------------------------

inline basic_formula categorical_formula(char form, const term& subject, const term& predicate) {
    switch (form) {
        case 'A': return basic_formula::eq(subject & ~predicate);
        case 'E': return basic_formula::eq(subject & predicate);
        case 'I': return basic_formula::neq(subject & predicate);
        default: return basic_formula::neq(subject & ~predicate);  // 'O'
    }
}

// Premiss term pairs per figure; the conclusion is always S-P.
inline argument syllogism_argument(int figure, char major, char minor, char conclusion) {
    term s = term::var("S"), p = term::var("P"), m = term::var("M");
    std::pair<term, term> major_pair = (figure == 1 || figure == 3)
                                           ? std::make_pair(m, p)
                                           : std::make_pair(p, m);
    std::pair<term, term> minor_pair = (figure == 1 || figure == 2)
                                           ? std::make_pair(s, m)
                                           : std::make_pair(m, s);
    return argument{{categorical_formula(major, major_pair.first, major_pair.second),
                     categorical_formula(minor, minor_pair.first, minor_pair.second)},
                    categorical_formula(conclusion, s, p)};
}

inline const char* syllogism_name(int figure, const std::string& mood) {
    static const std::pair<std::pair<int, const char*>, const char*> names[] = {
        {{1, "AAA"}, "Barbara"},  {{1, "EAE"}, "Celarent"}, {{1, "AII"}, "Darii"},
        {{1, "EIO"}, "Ferio"},    {{2, "EAE"}, "Cesare"},   {{2, "AEE"}, "Camestres"},
        {{2, "EIO"}, "Festino"},  {{2, "AOO"}, "Baroco"},   {{3, "IAI"}, "Disamis"},
        {{3, "AII"}, "Datisi"},   {{3, "OAO"}, "Bocardo"},  {{3, "EIO"}, "Ferison"},
        {{4, "AEE"}, "Calemes"},  {{4, "IAI"}, "Dimatis"},  {{4, "EIO"}, "Fresison"},
    };
    for (const auto& [key, name] : names)
        if (key.first == figure && mood == key.second) return name;
    return nullptr;
}

inline int cmd_syllogisms(const options& opts, std::ostream& out) {
    static const char forms[] = {'A', 'E', 'I', 'O'};
    std::vector<std::pair<int, std::string>> valid;
    for (int figure = 1; figure <= 4; ++figure)
        for (char major : forms)
            for (char minor : forms)
                for (char conclusion : forms) {
                    argument arg = syllogism_argument(figure, major, minor, conclusion);
                    if (check(arg).valid)
                        valid.emplace_back(figure, std::string{major, minor, conclusion});
                }

    if (opts.json_output) {
        json j;
        j["schema"] = 1;
        j["command"] = "syllogisms";
        j["total_moods"] = 256;
        j["valid_count"] = valid.size();
        json list = json::array();
        for (const auto& [figure, mood] : valid) {
            const char* name = syllogism_name(figure, mood);
            list.push_back(json{{"figure", figure},
                                {"mood", mood},
                                {"name", name ? json(name) : json(nullptr)}});
        }
        j["valid"] = list;
        emit_json(out, j);
    } else {
        out << "valid moods (" << valid.size() << " of 256):\n";
        for (const auto& [figure, mood] : valid) {
            out << mood << "-" << figure;
            if (const char* name = syllogism_name(figure, mood)) out << "  " << name;
            out << "\n";
        }
    }
    return 0;
}

}  // namespace cli

// Entry point shared by the binary and the tests. `args` excludes the
// program name. Returns the process exit code: 0 ok/valid/SAT,
// 1 invalid/UNSAT, 2 error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symbolic engine for the algebra of classes: normal forms, argument "
                 "validity, satisfiability, variable elimination and solution"};
    app.name("boolalg");
    app.fallthrough();

    cli::options opts;
    app.add_flag("--json", opts.json_output, "emit a machine-readable JSON report");
    app.add_flag("--unicode", opts.unicode, "render terms with the set-operation glyphs");
    app.add_option("--max-vars", opts.max_vars, "variable limit for a single problem")
        ->default_val(16)
        ->check(CLI::Range(1, static_cast<int>(max_context_size)));
    app.require_subcommand(1);

    std::vector<std::string> term_words;
    std::vector<std::string> translate_words;
    std::string file;
    std::vector<std::string> elim_vars;
    std::string solve_var;

    auto* dnf = app.add_subcommand("dnf", "full expansion and constituent set of a term");
    dnf->add_option("term", term_words, "term text")->required();

    auto* chk = app.add_subcommand("check", "decide validity of an argument file");
    chk->add_option("file", file, "argument file (premisses, '|-', conclusion)")->required();

    auto* sat = app.add_subcommand("sat", "decide satisfiability of a formula list");
    sat->add_option("file", file, "formula file")->required();

    auto* elim = app.add_subcommand("eliminate", "eliminate variables from a system");
    elim->add_option("-x,--vars", elim_vars, "variables to eliminate")
        ->required()
        ->delimiter(',');
    elim->add_option("file", file, "formula file")->required();

    auto* solve = app.add_subcommand("solve", "solve a system for a variable");
    solve->add_option("-x,--var", solve_var, "variable to solve for")->required();
    solve->add_option("file", file, "formula file")->required();

    auto* red = app.add_subcommand("reduce", "merge equations into a single equation");
    red->add_option("file", file, "formula file")->required();

    auto* tr = app.add_subcommand("translate",
                                  "translate categorical propositions to equations and back");
    tr->add_option("proposition", translate_words, "proposition or formula text")->required();

    auto* vchk = app.add_subcommand("vcheck", "argument validity via the V-equation method");
    vchk->add_option("file", file, "argument file")->required();

    auto* velim = app.add_subcommand("veliminate",
                                     "one-one elimination via the V-equation pipeline");
    velim->add_option("-x,--var", solve_var, "variable to eliminate")->required();
    velim->add_option("file", file, "formula file")->required();

    auto* syl = app.add_subcommand("syllogisms", "evaluate all 256 syllogistic moods");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);  // help/version
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto join = [](const std::vector<std::string>& words) {
        std::string s;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i) s += " ";
            s += words[i];
        }
        return s;
    };

    try {
        if (dnf->parsed()) return cli::cmd_dnf(opts, join(term_words), out);
        if (chk->parsed()) return cli::cmd_check(opts, file, out);
        if (sat->parsed()) return cli::cmd_sat(opts, file, out);
        if (elim->parsed()) return cli::cmd_eliminate(opts, elim_vars, file, out);
        if (solve->parsed()) return cli::cmd_solve(opts, solve_var, file, out);
        if (red->parsed()) return cli::cmd_reduce(opts, file, out);
        if (tr->parsed()) return cli::cmd_translate(opts, join(translate_words), out);
        if (vchk->parsed()) return cli::cmd_vcheck(opts, file, out, err);
        if (velim->parsed()) return cli::cmd_veliminate(opts, solve_var, file, out, err);
        if (syl->parsed()) return cli::cmd_syllogisms(opts, out);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace boolalg
