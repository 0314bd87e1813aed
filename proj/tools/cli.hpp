#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyprime/polyprime.hpp"

namespace polyprime::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
    std::string subcommand;
    std::string grid;
    std::string file;
    std::string order_json;
    std::size_t budget_pairs = GroebnerBudget{}.max_pairs;
    std::size_t budget_elems = GroebnerBudget{}.max_elements;
    std::size_t max_cycle_len = 0; // 0: unbounded
    std::string format = "text";
    std::uint64_t seed = 0;
    std::size_t random_orders = QuadraticSearchConfig{}.random_rankings;
    bool no_timings = false;
    bool dot = false;
    bool cycles = false;
    bool no_quadratic = false;
    std::string oracle = "elimination";
    std::string ideal = "minors";
    int sweep_n = 0;
    unsigned threads = 0;
};

class UsageError : public Error {
public:
    using Error::Error;
};

/// Replaces the two-character sequence "\n" with a newline.
inline std::string unescape_grid(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == 'n') {
            out.push_back('\n');
            ++i;
        } else {
            out.push_back(s[i]);
        }
    }
    return out;
}

inline Polyomino load_polyomino(const CliConfig& c) {
    if (c.grid.empty() == c.file.empty()) throw UsageError("exactly one of --grid or --file is required");
    std::string text;
    if (!c.grid.empty()) {
        text = unescape_grid(c.grid);
    } else {
        std::ifstream in(c.file);
        if (!in) throw UsageError("cannot read " + c.file);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        return polyomino_from_json(j);
    }
    return parse_grid(text);
}

inline OrderSpec load_order(const CliConfig& c) {
    if (c.order_json.empty()) return OrderSpec{};
    try {
        return order_spec_from_json(Json::parse(c.order_json));
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid --order JSON: ") + e.what());
    }
}

inline VerifyConfig verify_config(const CliConfig& c) {
    VerifyConfig v;
    v.order = load_order(c);
    v.budget = {c.budget_pairs, c.budget_elems};
    v.quadratic_search = !c.no_quadratic;
    v.search.seed = c.seed;
    v.search.random_rankings = c.random_orders;
    v.search.budget = v.budget;
    return v;
}

inline int enumeration_cap() {
    if (const char* env = std::getenv("POLYPRIME_CAP")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) return cap;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("POLYPRIME_CAP must be a positive integer, got '") + env + "'");
    }
    return kDefaultEnumerationCap;
}

inline void print_report_text(std::ostream& out, const VerificationReport& r) {
    auto b = [](std::optional<bool> v) { return v ? (*v ? "true" : "false") : "n/a"; };
    out << "cells: " << r.cells() << "\n";
    out << "simple: " << (r.simple ? "true" : "false") << "\n";
    out << "weakly chordal: " << b(r.weakly_chordal) << "\n";
    out << "ideals equal: " << b(r.ideals_equal) << "\n";
    out << "gap witness: " << (r.gap_witness ? to_string(*r.gap_witness, r.vars) : "none") << "\n";
    if (r.quadratic_searched)
        out << "quadratic order: " << (r.quadratic_order ? to_json(*r.quadratic_order).dump() : "not found") << "\n";
    out << "order: " << to_json(r.order).dump() << "\n";
    if (!r.error.empty()) out << "error: " << r.error << "\n";
    for (const auto& v : r.violations) out << "VIOLATION: " << v << "\n";
}

inline int execute(const CliConfig& c, std::ostream& out) {
    const bool json = c.format == "json";
    const std::size_t max_len = c.max_cycle_len ? c.max_cycle_len : std::numeric_limits<std::size_t>::max();

    if (c.subcommand == "sweep") {
        SweepOptions opts;
        opts.cap = enumeration_cap();
        opts.threads = c.threads;
        const SweepSummary s = sweep(c.sweep_n, verify_config(c), opts);
        if (json) {
            out << to_json(s, !c.no_timings).dump(2) << "\n";
        } else {
            out << "polyominoes: " << s.total << "\n";
            for (const auto& [n, t] : s.sizes)
                out << "  n=" << n << ": " << t.count << " (simple " << t.simple << ", non-simple " << t.non_simple
                    << ", weakly chordal " << t.weakly_chordal << ", I=J " << t.ideals_equal << ", witness "
                    << t.with_witness << ")\n";
            out << "violations: " << s.violations.size() << "\n";
            out << "budget errors: " << s.budget_errors.size() << "\n";
            for (const auto& r : s.non_simple)
                out << "non-simple " << to_json(r.polyomino)["cells"].dump() << ": I=J "
                    << (r.ideals_equal == true ? "true" : "false") << ", witness "
                    << (r.gap_witness ? to_string(*r.gap_witness, r.vars) : "none") << "\n";
            for (const auto& r : s.violations) out << to_json(r, !c.no_timings).dump(2) << "\n";
            if (!c.no_timings) out << "wall seconds: " << s.wall_seconds << "\n";
        }
        return s.ok() ? kExitOk : kExitViolation;
    }

    const Polyomino p = load_polyomino(c);

    if (c.subcommand == "parse") {
        if (json)
            out << to_json(p).dump() << "\n";
        else
            out << to_grid_string(p);
        return kExitOk;
    }
    if (c.subcommand == "check-simple") {
        const bool s = is_simple(p);
        if (json)
            out << Json{{"simple", s}}.dump() << "\n";
        else
            out << (s ? "true" : "false") << "\n";
        return kExitOk;
    }
    if (c.subcommand == "graph") {
        const IntervalGraph g = build_interval_graph(p);
        if (c.dot) {
            out << to_dot(g);
            return kExitOk;
        }
        if (c.cycles) {
            const auto cyc = chordless_cycles(g.graph, 4, max_len);
            if (json) {
                out << to_json(cyc).dump() << "\n";
            } else {
                for (const auto& cy : cyc) {
                    for (std::size_t k = 0; k < cy.v.size(); ++k)
                        out << (k ? " " : "") << "v" << cy.v[k] + 1 << " h" << cy.h[k] + 1;
                    out << "\n";
                }
            }
            return kExitOk;
        }
        if (json) {
            out << to_json(g).dump() << "\n";
        } else {
            out << "vertical intervals: " << g.v_side.size() << "\n";
            out << "horizontal intervals: " << g.h_side.size() << "\n";
            for (const auto& e : g.edges) out << "v" << e.v + 1 << " -- h" << e.h + 1 << " " << to_string(e.point) << "\n";
            out << "weakly chordal: " << (is_weakly_chordal(g.graph) ? "true" : "false") << "\n";
        }
        return kExitOk;
    }

    const VariableSet vars = grid_variables(p);
    const OrderSpec spec = load_order(c);
    const MonomialOrder order = spec.resolve(vars);
    const GroebnerBudget budget{c.budget_pairs, c.budget_elems};

    auto emit_list = [&](const std::vector<Binomial>& bs, Json meta) {
        if (json) {
            meta["elements"] = to_json(bs, vars);
            out << meta.dump() << "\n";
        } else {
            for (const auto& b : bs) out << to_string(b, vars) << "\n";
        }
    };

    if (c.subcommand == "gens") {
        emit_list(inner_minors(p, vars), Json{{"variables", vars.names()}});
        return kExitOk;
    }
    if (c.subcommand == "toric") {
        if (c.oracle == "cycles") {
            emit_list(toric_ideal_cycles(p, max_len), Json{{"oracle", "cycles"}});
        } else if (c.oracle == "elimination") {
            const GroebnerBasis gb = toric_ideal_elimination(p, order, budget);
            if (json) {
                Json j = to_json(gb, vars);
                j["oracle"] = "elimination";
                out << j.dump() << "\n";
            } else {
                out << "order: " << to_json(describe(order, vars)).dump() << "\n";
                for (const auto& b : gb.elements) out << to_string(b, vars) << "\n";
            }
        } else {
            throw UsageError("--oracle must be elimination or cycles");
        }
        return kExitOk;
    }
    if (c.subcommand == "gb") {
        GroebnerBasis gb;
        if (c.ideal == "minors")
            gb = buchberger(inner_minors(p, vars), order, budget);
        else if (c.ideal == "toric")
            gb = toric_ideal_elimination(p, order, budget);
        else
            throw UsageError("--ideal must be minors or toric");
        if (json) {
            out << to_json(gb, vars).dump() << "\n";
        } else {
            out << "order: " << to_json(describe(order, vars)).dump() << "\n";
            for (const auto& b : gb.elements) out << to_string(b, vars) << "\n";
        }
        return kExitOk;
    }
    if (c.subcommand == "verify") {
        const VerificationReport r = verify_polyomino(p, verify_config(c));
        if (json)
            out << to_json(r, !c.no_timings).dump(2) << "\n";
        else
            print_report_text(out, r);
        return (r.violations.empty() && r.complete) ? kExitOk : kExitViolation;
    }
    throw UsageError("unknown subcommand " + c.subcommand);
}

/// Parses argv, runs the subcommand and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polyomino ideal verification toolkit", "polyprime"};
    app.require_subcommand(1);
    CliConfig c;

    auto add_common = [&c](CLI::App* sub, bool input) {
        if (input) {
            sub->add_option("--grid", c.grid, "inline ASCII grid ('\\n' separates rows)");
            sub->add_option("--file", c.file, "ASCII grid or JSON polyomino file");
        }
        sub->add_option("--order", c.order_json, "monomial order spec as JSON");
        sub->add_option("--budget-pairs", c.budget_pairs, "S-pair budget")->check(CLI::PositiveNumber);
        sub->add_option("--budget-elems", c.budget_elems, "basis element budget")->check(CLI::PositiveNumber);
        sub->add_option("--max-cycle-len", c.max_cycle_len, "maximum cycle length (0: unbounded)");
        sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", c.seed, "seed for randomized order search");
        sub->add_option("--random-orders", c.random_orders, "number of random rankings tried by the order search");
        sub->add_flag("--no-timings", c.no_timings, "omit timing fields");
    };

    struct Sub {
        const char* name;
        const char* help;
    };
    const std::vector<Sub> subs{{"parse", "echo the canonical form"},
                                {"check-simple", "decide whether the polyomino is simple"},
                                {"graph", "emit the interval graph G(P)"},
                                {"gens", "list the inner 2-minors"},
                                {"toric", "generators of the toric ideal J_P"},
                                {"gb", "reduced Groebner basis under an order"},
                                {"verify", "full verification report"}};
    for (const Sub& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        add_common(sub, true);
        sub->callback([&c, name = std::string(s.name)] { c.subcommand = name; });
        if (std::string(s.name) == "graph") {
            sub->add_flag("--dot", c.dot, "emit DOT instead");
            sub->add_flag("--cycles", c.cycles, "list chordless cycles");
        }
        if (std::string(s.name) == "toric")
            sub->add_option("--oracle", c.oracle, "elimination or cycles")->check(CLI::IsMember({"elimination", "cycles"}));
        if (std::string(s.name) == "gb")
            sub->add_option("--ideal", c.ideal, "minors or toric")->check(CLI::IsMember({"minors", "toric"}));
        if (std::string(s.name) == "verify") sub->add_flag("--no-quadratic", c.no_quadratic, "skip the order search");
    }
    CLI::App* sw = app.add_subcommand("sweep", "verify every fixed polyomino up to n cells");
    sw->add_option("n", c.sweep_n, "maximum cell count")->required()->check(CLI::PositiveNumber);
    sw->add_option("--threads", c.threads, "worker threads (0: all cores)");
    sw->add_flag("--no-quadratic", c.no_quadratic, "skip the order search");
    add_common(sw, false);
    sw->callback([&c] { c.subcommand = "sweep"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        return execute(c, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapExceeded& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EmptyInput& e) {
        err << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadChar& e) {
        err << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Disconnected& e) {
        err << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitViolation;
    }
}

} // namespace polyprime::cli
