#pragma once

// Polyomino ideal I_P, the toric ideal J_P of the edge ring of G(P), and
// tools that compare them.

#include <algorithm>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polyprime/graph.hpp"
#include "polyprime/groebner.hpp"

namespace polyprime {

/// x(i,j) for every vertex of P, sorted by (x, y).
inline VariableSet grid_variables(const Polyomino& p) { return VariableSet::grid(p.vertices()); }

/// One minor x_lo*x_hi - x_(lo.x,hi.y)*x_(hi.x,lo.y) per inner interval.
inline std::vector<Binomial> inner_minors(const Polyomino& p, const VariableSet& vars) {
    std::vector<Binomial> out;
    const std::size_t n = vars.size();
    auto x = [&](GridPoint pt) { return Monomial::variable(n, *vars.find(pt)); };
    for (const Interval& iv : inner_intervals(p)) {
        const auto [a, b] = iv.anti_diagonal();
        out.emplace_back(x(iv.lo) * x(iv.hi), x(a) * x(b));
    }
    return out;
}

inline std::vector<Binomial> inner_minors(const Polyomino& p) { return inner_minors(p, grid_variables(p)); }

// ---------------------------------------------------------------------------
// Rankings and order specifications

enum class RankingPreset { row_major, column_major, diagonal, explicit_names };

inline std::string to_string(RankingPreset r) {
    switch (r) {
    case RankingPreset::row_major: return "row-major";
    case RankingPreset::column_major: return "column-major";
    case RankingPreset::diagonal: return "diagonal";
    case RankingPreset::explicit_names: return "explicit";
    }
    return "?";
}

/// Ranking of grid variables; ranking[0] is the largest variable.
///   row-major:    by (y, x) descending
///   column-major: by (x, y) descending
///   diagonal:     by (x + y, y) descending
/// Variables without a grid point keep their index order after the grid ones.
inline std::vector<std::size_t> grid_ranking(const VariableSet& vars, RankingPreset preset) {
    std::vector<std::size_t> r(vars.size());
    std::iota(r.begin(), r.end(), std::size_t{0});
    auto key = [&](std::size_t i) -> std::pair<int, int> {
        const auto& p = vars.point(i);
        if (!p) return {std::numeric_limits<int>::min(), -static_cast<int>(i)};
        switch (preset) {
        case RankingPreset::row_major: return {p->y, p->x};
        case RankingPreset::column_major: return {p->x, p->y};
        case RankingPreset::diagonal: return {p->x + p->y, p->y};
        case RankingPreset::explicit_names: break;
        }
        return {0, -static_cast<int>(i)};
    };
    std::stable_sort(r.begin(), r.end(), [&](std::size_t a, std::size_t b) { return key(a) > key(b); });
    return r;
}

/// Order description independent of a particular variable set; resolved
/// against one with `resolve`.
struct OrderSpec {
    OrderKind kind = OrderKind::degrevlex;
    RankingPreset ranking = RankingPreset::row_major;
    std::vector<std::string> names; // explicit ranking
    std::vector<OrderBlock> blocks; // block orders only

    MonomialOrder resolve(const VariableSet& vars) const {
        std::vector<std::size_t> r;
        if (ranking == RankingPreset::explicit_names) {
            for (const std::string& n : names) r.push_back(vars.index_of(n));
            if (r.size() != vars.size()) throw Error("explicit ranking must list every variable exactly once");
        } else {
            r = grid_ranking(vars, ranking);
        }
        return MonomialOrder(kind, std::move(r), blocks);
    }

    friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

/// An order with explicit ranking written back as a spec.
inline OrderSpec describe(const MonomialOrder& order, const VariableSet& vars) {
    OrderSpec s;
    s.kind = order.kind();
    s.ranking = RankingPreset::explicit_names;
    for (std::size_t i : order.ranking()) s.names.push_back(vars.name(i));
    if (order.kind() == OrderKind::block) s.blocks = order.blocks();
    return s;
}

inline MonomialOrder default_grid_order(const VariableSet& vars) { return OrderSpec{}.resolve(vars); }

// ---------------------------------------------------------------------------
// The toric map

/// φ(x_ij) = v_p h_q where V_p, H_q are the maximal intervals through (i,j).
/// Auxiliary variables are numbered v_1..v_m then h_1..h_n.
class ToricMap {
public:
    explicit ToricMap(const Polyomino& p) : graph_(build_interval_graph(p)), vars_(grid_variables(p)) {
        image_.resize(vars_.size());
        std::vector<char> seen(vars_.size(), 0);
        for (const LabeledEdge& e : graph_.edges) {
            const std::size_t i = *vars_.find(e.point);
            image_[i] = {e.v, e.h};
            seen[i] = 1;
        }
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (!seen[i]) throw InternalInconsistency("vertex " + vars_.name(i) + " has no interval pair");
    }

    const IntervalGraph& graph() const { return graph_; }
    const VariableSet& grid_vars() const { return vars_; }
    std::size_t v_count() const { return graph_.v_side.size(); }
    std::size_t h_count() const { return graph_.h_side.size(); }
    std::size_t aux_count() const { return v_count() + h_count(); }

    /// (p, q) with φ(x_i) = v_p h_q.
    std::pair<std::size_t, std::size_t> image(std::size_t i) const { return image_.at(i); }

    /// φ(m) over the auxiliary variables v_1..v_m, h_1..h_n.
    Monomial apply(const Monomial& m) const {
        if (m.size() != vars_.size()) throw VariableSetMismatch(vars_.size(), m.size());
        std::vector<Monomial::Exponent> e(aux_count(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            e[image_[i].first] = static_cast<Monomial::Exponent>(e[image_[i].first] + m[i]);
            e[v_count() + image_[i].second] = static_cast<Monomial::Exponent>(e[v_count() + image_[i].second] + m[i]);
        }
        return Monomial(std::move(e));
    }

    /// φ(plus) = φ(minus), i.e. the binomial lies in ker φ.
    bool balanced(const Binomial& b) const { return apply(b.plus()) == apply(b.minus()); }

    /// Grid variables followed by v1..vm, h1..hn.
    VariableSet elimination_vars() const {
        VariableSet vs = vars_;
        for (std::size_t p = 0; p < v_count(); ++p) vs.add("v" + std::to_string(p + 1));
        for (std::size_t q = 0; q < h_count(); ++q) vs.add("h" + std::to_string(q + 1));
        return vs;
    }

private:
    IntervalGraph graph_;
    VariableSet vars_;
    std::vector<std::pair<std::size_t, std::size_t>> image_;
};

/// ker φ as ⟨x_ij - v_p h_q⟩ ∩ K[x], computed with a block order that puts
/// the auxiliary variables first, then re-reduced under `grid_order`.
inline GroebnerBasis toric_ideal_elimination(const ToricMap& phi, const MonomialOrder& grid_order,
                                             const GroebnerBudget& budget = {}) {
    const std::size_t n = phi.grid_vars().size();
    if (grid_order.size() != n) throw VariableSetMismatch(n, grid_order.size());
    const std::size_t total = n + phi.aux_count();

    std::vector<std::size_t> ranking;
    for (std::size_t a = 0; a < phi.aux_count(); ++a) ranking.push_back(n + a);
    for (std::size_t g : grid_order.ranking()) ranking.push_back(g);
    const MonomialOrder elim(OrderKind::block, std::move(ranking),
                             {OrderBlock{phi.aux_count(), OrderKind::degrevlex}, OrderBlock{n, OrderKind::degrevlex}});

    std::vector<Binomial> gens;
    gens.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [p, q] = phi.image(i);
        gens.emplace_back(Monomial::variable(total, i),
                          Monomial::variable(total, n + p) * Monomial::variable(total, n + phi.v_count() + q));
    }
    const GroebnerBasis full = buchberger(gens, elim, budget);

    std::vector<Binomial> kept;
    for (const Binomial& b : full.elements) {
        auto grid_only = [n](const Monomial& m) {
            for (std::size_t i = n; i < m.size(); ++i)
                if (m[i]) return false;
            return true;
        };
        if (grid_only(b.plus()) && grid_only(b.minus())) kept.emplace_back(b.plus().truncated(n), b.minus().truncated(n));
    }
    return buchberger(kept, grid_order, budget);
}

inline GroebnerBasis toric_ideal_elimination(const Polyomino& p, const MonomialOrder& grid_order,
                                             const GroebnerBudget& budget = {}) {
    return toric_ideal_elimination(ToricMap(p), grid_order, budget);
}

/// Binomials f_C of all chordless cycles of G(P) with at most `max_len`
/// vertices, in the grid variables.
inline std::vector<Binomial> toric_ideal_cycles(const ToricMap& phi,
                                                std::size_t max_len = std::numeric_limits<std::size_t>::max(),
                                                std::size_t budget = kDefaultCycleBudget) {
    std::vector<Binomial> out;
    for (const GraphCycle& c : chordless_cycles(phi.graph().graph, 4, max_len, budget))
        out.push_back(graph_cycle_binomial(phi.graph(), phi.grid_vars(), c));
    return out;
}

inline std::vector<Binomial> toric_ideal_cycles(const Polyomino& p,
                                                std::size_t max_len = std::numeric_limits<std::size_t>::max(),
                                                std::size_t budget = kDefaultCycleBudget) {
    return toric_ideal_cycles(ToricMap(p), max_len, budget);
}

// ---------------------------------------------------------------------------
// Quadratic Groebner basis search

struct QuadraticSearchConfig {
    std::vector<OrderKind> kinds{OrderKind::degrevlex, OrderKind::lex, OrderKind::deglex};
    std::vector<RankingPreset> rankings{RankingPreset::row_major, RankingPreset::column_major,
                                        RankingPreset::diagonal};
    std::size_t random_rankings = 32;
    std::uint64_t seed = 0;
    GroebnerBudget budget{};
};

struct QuadraticOrderResult {
    MonomialOrder order;
    GroebnerBasis basis;
};

/// Candidate orders in search order: presets × kinds, then seeded random
/// rankings × kinds.
inline std::vector<MonomialOrder> quadratic_search_orders(const VariableSet& vars, const QuadraticSearchConfig& cfg) {
    std::vector<std::vector<std::size_t>> rankings;
    for (RankingPreset r : cfg.rankings) rankings.push_back(grid_ranking(vars, r));
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t k = 0; k < cfg.random_rankings; ++k) {
        std::vector<std::size_t> r(vars.size());
        std::iota(r.begin(), r.end(), std::size_t{0});
        std::shuffle(r.begin(), r.end(), rng);
        rankings.push_back(std::move(r));
    }
    std::vector<MonomialOrder> out;
    for (const auto& r : rankings)
        for (OrderKind k : cfg.kinds) {
            MonomialOrder o(k, r);
            if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(std::move(o));
        }
    return out;
}

/// First order of the search family whose reduced basis of ⟨gens⟩ is
/// squarefree and quadratic. Orders whose Buchberger run exceeds the budget
/// are skipped; if nothing is found and some run was cut short, throws
/// BudgetExceeded instead of reporting NotFound.
inline std::optional<QuadraticOrderResult> find_quadratic_order(const std::vector<Binomial>& gens,
                                                                const VariableSet& vars,
                                                                const QuadraticSearchConfig& cfg = {}) {
    for (const Binomial& g : gens)
        if (g.plus().degree() != 2 || g.minus().degree() != 2)
            throw Error("quadratic order search requires quadratic generators");
    bool truncated = false;
    for (const MonomialOrder& order : quadratic_search_orders(vars, cfg)) {
        try {
            GroebnerBasis gb = buchberger(gens, order, cfg.budget);
            if (is_squarefree_quadratic(gb)) return QuadraticOrderResult{order, std::move(gb)};
        } catch (const BudgetExceeded&) {
            truncated = true;
        }
    }
    if (truncated) throw BudgetExceeded("quadratic order search: some candidate orders exceeded the budget");
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Gap witnesses

namespace detail {

inline long support_area(const Binomial& b, const VariableSet& vars) {
    int x0 = std::numeric_limits<int>::max(), y0 = x0, x1 = std::numeric_limits<int>::min(), y1 = x1;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!b.plus()[i] && !b.minus()[i]) continue;
        const auto& p = vars.point(i);
        if (!p) continue;
        x0 = std::min(x0, p->x);
        x1 = std::max(x1, p->x);
        y0 = std::min(y0, p->y);
        y1 = std::max(y1, p->y);
    }
    if (x0 > x1) return 0;
    return static_cast<long>(x1 - x0) * (y1 - y0);
}

} // namespace detail

/// A binomial of J_P outside I_P of minimal degree, or nullopt when the
/// ideals coincide. Candidates are the chordless-cycle generators and the
/// reduced basis of J_P; ties are broken by the area of the bounding box of
/// the support, then by canonical form. The result has canonical sign.
inline std::optional<Binomial> witness_gap(const VariableSet& vars, const std::vector<Binomial>& cycle_gens,
                                           const GroebnerBasis& gb_j, const GroebnerBasis& gb_i) {
    std::vector<Binomial> candidates;
    for (const Binomial& b : cycle_gens) candidates.push_back(b.canonical());
    for (const Binomial& b : gb_j.elements) candidates.push_back(b.canonical());
    std::sort(candidates.begin(), candidates.end(), [&](const Binomial& a, const Binomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        const long aa = detail::support_area(a, vars), ab = detail::support_area(b, vars);
        if (aa != ab) return aa < ab;
        return b < a;
    });
    for (const Binomial& c : candidates)
        if (!ideal_member(c, gb_i)) return c;
    return std::nullopt;
}

struct GapAnalysis {
    VariableSet vars;
    std::vector<Binomial> minors;
    GroebnerBasis gb_i;
    GroebnerBasis gb_j;
    std::optional<Binomial> witness;
};

inline GapAnalysis analyse_gap(const Polyomino& p, const MonomialOrder& order, const GroebnerBudget& budget = {},
                               std::size_t cycle_budget = kDefaultCycleBudget) {
    const ToricMap phi(p);
    GapAnalysis out;
    out.vars = phi.grid_vars();
    out.minors = inner_minors(p, out.vars);
    out.gb_i = buchberger(out.minors, order, budget);
    out.gb_j = toric_ideal_elimination(phi, order, budget);
    out.witness = witness_gap(out.vars, toric_ideal_cycles(phi, std::numeric_limits<std::size_t>::max(), cycle_budget),
                              out.gb_j, out.gb_i);
    return out;
}

inline std::optional<Binomial> witness_gap(const Polyomino& p, const GroebnerBudget& budget = {}) {
    const VariableSet vars = grid_variables(p);
    return analyse_gap(p, default_grid_order(vars), budget).witness;
}

} // namespace polyprime
