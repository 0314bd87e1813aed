#pragma once

// JSON forms of polyominoes, graphs, cycles, orders, bases and reports.
//
//   polyomino   {"cells": [[x,y], ...]}
//   graph       {"v": m, "h": n, "edges": [[p,q,[x,y]], ...]}      (0-based p, q)
//   cycles      [["v1","h1","v2","h2"], ...]
//   order       {"kind": "degrevlex", "ranking": [names] | "row-major", "blocks": [...]}
//   basis       {"order": order, "elements": ["x(..)*x(..) - x(..)*x(..)", ...]}
//   report      polyprime.report/1, summary polyprime.sweep/1 (see README)

#include <string>

#include <json.hpp>

#include "polyprime/verify.hpp"

namespace polyprime {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "polyprime.report/1";
inline constexpr const char* kSweepSchema = "polyprime.sweep/1";

inline Json to_json(const Polyomino& p) {
    Json cells = Json::array();
    for (const Cell& c : p.cells()) cells.push_back({c.corner.x, c.corner.y});
    return Json{{"cells", cells}};
}

inline Polyomino polyomino_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        throw ParseError("expected an object with a \"cells\" array");
    std::vector<Cell> cells;
    for (const Json& c : j["cells"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
            throw ParseError("each cell must be an [x, y] integer pair");
        cells.push_back(Cell{{c[0].get<int>(), c[1].get<int>()}});
    }
    if (cells.empty()) throw EmptyInput();
    return Polyomino::from_cells(std::move(cells));
}

inline Json to_json(const IntervalGraph& g) {
    Json edges = Json::array();
    for (const LabeledEdge& e : g.edges) edges.push_back({e.v, e.h, {e.point.x, e.point.y}});
    return Json{{"v", g.v_side.size()}, {"h", g.h_side.size()}, {"edges", edges}};
}

inline Json to_json(const std::vector<GraphCycle>& cycles) {
    Json out = Json::array();
    for (const GraphCycle& c : cycles) {
        Json seq = Json::array();
        for (std::size_t k = 0; k < c.v.size(); ++k) {
            seq.push_back("v" + std::to_string(c.v[k] + 1));
            seq.push_back("h" + std::to_string(c.h[k] + 1));
        }
        out.push_back(seq);
    }
    return out;
}

inline Json to_json(const OrderSpec& s) {
    Json j{{"kind", to_string(s.kind)}};
    if (s.ranking == RankingPreset::explicit_names)
        j["ranking"] = s.names;
    else
        j["ranking"] = to_string(s.ranking);
    if (s.kind == OrderKind::block) {
        Json blocks = Json::array();
        for (const OrderBlock& b : s.blocks) blocks.push_back({{"size", b.size}, {"kind", to_string(b.kind)}});
        j["blocks"] = blocks;
    }
    return j;
}

inline OrderSpec order_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("order spec needs a string \"kind\"");
    OrderSpec s;
    s.kind = parse_order_kind(j["kind"].get<std::string>());
    if (j.contains("ranking")) {
        const Json& r = j["ranking"];
        if (r.is_string()) {
            const std::string name = r.get<std::string>();
            if (name == "row-major") s.ranking = RankingPreset::row_major;
            else if (name == "column-major") s.ranking = RankingPreset::column_major;
            else if (name == "diagonal") s.ranking = RankingPreset::diagonal;
            else throw ParseError("unknown ranking preset '" + name + "'");
        } else if (r.is_array()) {
            s.ranking = RankingPreset::explicit_names;
            for (const Json& n : r) {
                if (!n.is_string()) throw ParseError("ranking entries must be variable names");
                s.names.push_back(n.get<std::string>());
            }
        } else {
            throw ParseError("ranking must be a preset name or a list of variable names");
        }
    }
    if (s.kind == OrderKind::block) {
        if (!j.contains("blocks") || !j["blocks"].is_array()) throw ParseError("block order needs \"blocks\"");
        for (const Json& b : j["blocks"]) {
            if (!b.contains("size") || !b["size"].is_number_unsigned()) throw ParseError("block needs a size");
            OrderBlock blk{b["size"].get<std::size_t>(),
                           b.contains("kind") ? parse_order_kind(b["kind"].get<std::string>()) : OrderKind::degrevlex};
            s.blocks.push_back(blk);
        }
    }
    return s;
}

inline Json to_json(const std::vector<Binomial>& bs, const VariableSet& vars) {
    Json out = Json::array();
    for (const Binomial& b : bs) out.push_back(to_string(b, vars));
    return out;
}

inline Json to_json(const GroebnerBasis& gb, const VariableSet& vars) {
    return Json{{"order", to_json(describe(gb.order, vars))},
                {"reduced", gb.reduced},
                {"elements", to_json(gb.elements, vars)}};
}

template <class T>
Json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return Json(*v);
}

inline Json to_json(const VerificationReport& r, bool timings = true) {
    Json j;
    j["schema"] = kReportSchema;
    j["id"] = to_json(r.polyomino)["cells"];
    j["cells"] = r.cells();
    j["simple"] = r.simple;
    j["weaklyChordal"] = optional_json(r.weakly_chordal);
    j["idealsEqual"] = optional_json(r.ideals_equal);
    j["engineConsistent"] = optional_json(r.engine_consistent);
    j["gapWitness"] = r.gap_witness ? Json(to_string(*r.gap_witness, r.vars)) : Json(nullptr);
    j["quadraticOrder"] = r.quadratic_order ? to_json(*r.quadratic_order) : Json(nullptr);
    j["quadraticSearched"] = r.quadratic_searched;
    j["order"] = to_json(r.order);
    j["complete"] = r.complete;
    j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
    j["violations"] = r.violations;
    if (timings) {
        Json t = Json::object();
        for (const auto& [stage, seconds] : r.timings) t[stage] = seconds;
        j["timings"] = t;
    }
    return j;
}

inline Json to_json(const SweepSummary& s, bool timings = true) {
    Json j;
    j["schema"] = kSweepSchema;
    j["nMax"] = s.n_max;
    j["total"] = s.total;
    Json sizes = Json::array();
    for (const auto& [n, t] : s.sizes) {
        sizes.push_back({{"cells", n},
                         {"count", t.count},
                         {"simple", t.simple},
                         {"nonSimple", t.non_simple},
                         {"weaklyChordal", t.weakly_chordal},
                         {"idealsEqual", t.ideals_equal},
                         {"withWitness", t.with_witness},
                         {"quadraticFound", t.quadratic_found}});
    }
    j["sizes"] = sizes;
    Json violations = Json::array();
    for (const auto& r : s.violations) violations.push_back(to_json(r, timings));
    j["violations"] = violations;
    Json errors = Json::array();
    for (const auto& r : s.budget_errors) errors.push_back(to_json(r, timings));
    j["budgetErrors"] = errors;
    Json table = Json::array();
    for (const auto& r : s.non_simple) {
        table.push_back({{"id", to_json(r.polyomino)["cells"]},
                         {"weaklyChordal", optional_json(r.weakly_chordal)},
                         {"idealsEqual", optional_json(r.ideals_equal)},
                         {"gapWitness", r.gap_witness ? Json(to_string(*r.gap_witness, r.vars)) : Json(nullptr)}});
    }
    j["nonSimple"] = table;
    j["aborted"] = s.aborted;
    if (timings) j["wallSeconds"] = s.wall_seconds;
    return j;
}

} // namespace polyprime
