#pragma once

// Cycle machinery on the interval graph G(P) and on the polyomino itself.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "polyprime/binomial.hpp"
#include "polyprime/intervals.hpp"

namespace polyprime {

/// Undirected simple graph stored as an adjacency matrix plus sorted lists.
class SimpleGraph {
public:
    explicit SimpleGraph(std::size_t n) : n_(n), matrix_(n * n, 0), adj_(n) {}

    static SimpleGraph from_bipartite(const BipartiteGraph& g) {
        const std::size_t m = g.left_size();
        SimpleGraph s(m + g.right_size());
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q : g.left_neighbours(p)) s.add_edge(p, m + q);
        return s;
    }

    SimpleGraph complement() const {
        SimpleGraph c(n_);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = a + 1; b < n_; ++b)
                if (!adjacent(a, b)) c.add_edge(a, b);
        return c;
    }

    void add_edge(std::size_t a, std::size_t b) {
        if (a == b || matrix_[a * n_ + b]) return;
        matrix_[a * n_ + b] = matrix_[b * n_ + a] = 1;
        adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
        adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
    }

    std::size_t size() const { return n_; }
    bool adjacent(std::size_t a, std::size_t b) const { return matrix_[a * n_ + b] != 0; }
    const std::vector<std::size_t>& neighbours(std::size_t a) const { return adj_[a]; }

private:
    std::size_t n_;
    std::vector<char> matrix_;
    std::vector<std::vector<std::size_t>> adj_;
};

inline constexpr std::size_t kDefaultCycleBudget = 1'000'000;

/// Visits every chordless (induced) cycle with min_len..max_len vertices
/// exactly once. A cycle is reported starting at its smallest vertex and
/// continuing towards the smaller of that vertex's two cycle neighbours.
/// The visitor returns false to stop early; the function then returns false.
/// Throws LimitExceeded once `budget` partial paths have been explored.
inline bool for_each_chordless_cycle(const SimpleGraph& g, std::size_t min_len, std::size_t max_len,
                                     const std::function<bool(const std::vector<std::size_t>&)>& visit,
                                     std::size_t budget = kDefaultCycleBudget) {
    min_len = std::max<std::size_t>(min_len, 3);
    max_len = std::min(max_len, g.size());
    if (min_len > max_len) return true;

    std::vector<std::size_t> path;
    std::vector<char> on_path(g.size(), 0);
    std::size_t explored = 0;

    // Returns false when the visitor asked to stop.
    std::function<bool()> extend = [&]() -> bool {
        const std::size_t s = path.front();
        const std::size_t last = path.back();
        for (std::size_t w : g.neighbours(last)) {
            if (w <= s || on_path[w]) continue;
            if (path.size() >= 2) {
                bool chord = false;
                for (std::size_t k = 1; k + 1 < path.size(); ++k) {
                    if (g.adjacent(w, path[k])) {
                        chord = true;
                        break;
                    }
                }
                if (chord) continue;
                if (g.adjacent(w, s)) {
                    const std::size_t len = path.size() + 1;
                    if (path[1] < w && len >= min_len && len <= max_len) {
                        path.push_back(w);
                        const bool go_on = visit(path);
                        path.pop_back();
                        if (!go_on) return false;
                    }
                    continue;
                }
            }
            if (path.size() + 2 > max_len) continue;
            if (++explored > budget) throw LimitExceeded(budget);
            path.push_back(w);
            on_path[w] = 1;
            const bool go_on = extend();
            on_path[w] = 0;
            path.pop_back();
            if (!go_on) return false;
        }
        return true;
    };

    for (std::size_t s = 0; s < g.size(); ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        const bool go_on = extend();
        on_path[s] = 0;
        if (!go_on) return false;
    }
    return true;
}

/// Alternating cycle v[0], h[0], v[1], h[1], ..., v[r-1], h[r-1] of a
/// bipartite graph, stored in canonical form: v[0] is the smallest
/// v-index and h[0] < h[r-1].
struct GraphCycle {
    std::vector<std::size_t> v;
    std::vector<std::size_t> h;

    std::size_t length() const { return 2 * v.size(); }
    friend auto operator<=>(const GraphCycle&, const GraphCycle&) = default;
};

/// Lexicographically least rotation/reflection starting at a v-vertex.
inline GraphCycle canonical_cycle(const GraphCycle& c) {
    const std::size_t r = c.v.size();
    std::optional<GraphCycle> best;
    for (std::size_t start = 0; start < r; ++start) {
        for (int dir = 0; dir < 2; ++dir) {
            GraphCycle cand;
            for (std::size_t k = 0; k < r; ++k) {
                if (dir == 0) {
                    cand.v.push_back(c.v[(start + k) % r]);
                    cand.h.push_back(c.h[(start + k) % r]);
                } else {
                    // Reverse walk: v[start], h[start-1], v[start-1], ...
                    cand.v.push_back(c.v[(start + r - k) % r]);
                    cand.h.push_back(c.h[(start + 2 * r - k - 1) % r]);
                }
            }
            if (!best || cand < *best) best = std::move(cand);
        }
    }
    return *best;
}

/// Chordless cycles of a bipartite graph with length in [min_len, max_len],
/// each once, in canonical form and deterministic order.
inline std::vector<GraphCycle> chordless_cycles(const BipartiteGraph& g, std::size_t min_len, std::size_t max_len,
                                                std::size_t budget = kDefaultCycleBudget) {
    const SimpleGraph s = SimpleGraph::from_bipartite(g);
    const std::size_t m = g.left_size();
    std::vector<GraphCycle> out;
    for_each_chordless_cycle(
        s, std::max<std::size_t>(min_len, 4), max_len,
        [&](const std::vector<std::size_t>& path) {
            // Smallest vertex is a v-vertex because v ids precede h ids.
            GraphCycle c;
            for (std::size_t k = 0; k < path.size(); k += 2) {
                c.v.push_back(path[k]);
                c.h.push_back(path[k + 1] - m);
            }
            out.push_back(std::move(c));
            return true;
        },
        budget);
    std::sort(out.begin(), out.end(), [](const GraphCycle& a, const GraphCycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a < b;
    });
    return out;
}

/// A chordless cycle of length >= 6, if one exists.
inline std::optional<GraphCycle> find_long_chordless_cycle(const BipartiteGraph& g,
                                                           std::size_t budget = kDefaultCycleBudget) {
    const SimpleGraph s = SimpleGraph::from_bipartite(g);
    const std::size_t m = g.left_size();
    std::optional<GraphCycle> found;
    for_each_chordless_cycle(
        s, 6, s.size(),
        [&](const std::vector<std::size_t>& path) {
            GraphCycle c;
            for (std::size_t k = 0; k < path.size(); k += 2) {
                c.v.push_back(path[k]);
                c.h.push_back(path[k + 1] - m);
            }
            found = std::move(c);
            return false;
        },
        budget);
    return found;
}

/// Every cycle longer than 4 has a chord. Only this one-sided condition is
/// checked; see complement_has_long_hole for the complement side.
inline bool is_weakly_chordal(const BipartiteGraph& g, std::size_t budget = kDefaultCycleBudget) {
    return !find_long_chordless_cycle(g, budget).has_value();
}

/// Diagnostic only: whether the complement of G contains a chordless cycle
/// of length >= 5.
inline bool complement_has_long_hole(const BipartiteGraph& g, std::size_t budget = kDefaultCycleBudget) {
    const SimpleGraph c = SimpleGraph::from_bipartite(g).complement();
    bool found = false;
    for_each_chordless_cycle(
        c, 5, c.size(),
        [&](const std::vector<std::size_t>&) {
            found = true;
            return false;
        },
        budget);
    return found;
}

/// Closed sequence a_1, ..., a_m = a_1 of lattice points.
struct PolyoCycle {
    std::vector<GridPoint> points;

    /// Number of distinct vertices (m - 1).
    std::size_t vertex_count() const { return points.empty() ? 0 : points.size() - 1; }
    friend bool operator==(const PolyoCycle&, const PolyoCycle&) = default;
};

namespace detail {

inline std::optional<Orientation> segment_orientation(GridPoint a, GridPoint b) {
    if (a.y == b.y && a.x != b.x) return Orientation::horizontal;
    if (a.x == b.x && a.y != b.y) return Orientation::vertical;
    return std::nullopt;
}

/// Whether [a, b] (axis-parallel) consists of edges of P.
inline bool is_edge_interval(const Polyomino& p, GridPoint a, GridPoint b) {
    const auto o = segment_orientation(a, b);
    if (!o) return false;
    if (*o == Orientation::horizontal) {
        for (int x = std::min(a.x, b.x); x < std::max(a.x, b.x); ++x)
            if (!p.has_horizontal_edge({x, a.y})) return false;
    } else {
        for (int y = std::min(a.y, b.y); y < std::max(a.y, b.y); ++y)
            if (!p.has_vertical_edge({a.x, y})) return false;
    }
    return true;
}

} // namespace detail

/// Checks conditions (i) and (ii) of a cycle in P plus vertex distinctness.
inline bool is_valid_polyo_cycle(const Polyomino& p, const PolyoCycle& c) {
    const auto& a = c.points;
    if (a.size() < 5 || a.front() != a.back()) return false;
    const std::size_t n = a.size() - 1;
    if (n % 2 != 0) return false;
    std::set<GridPoint> distinct(a.begin(), a.end() - 1);
    if (distinct.size() != n) return false;
    std::vector<Orientation> orient;
    for (std::size_t i = 0; i < n; ++i) {
        if (!detail::is_edge_interval(p, a[i], a[i + 1])) return false;
        orient.push_back(*detail::segment_orientation(a[i], a[i + 1]));
    }
    for (std::size_t i = 0; i < n; ++i)
        if (orient[i] == orient[(i + 1) % n]) return false;
    return true;
}

/// V_{i1}∩H_{j1}, V_{i2}∩H_{j1}, V_{i2}∩H_{j2}, ..., V_{i1}∩H_{jr}, closed.
inline PolyoCycle graph_cycle_to_polyo_cycle(const IntervalGraph& g, const GraphCycle& c) {
    const std::size_t r = c.v.size();
    PolyoCycle out;
    auto at = [&](std::size_t v, std::size_t h) {
        auto pt = g.label(v, h);
        if (!pt) throw MissingVertex("v" + std::to_string(v + 1) + " and h" + std::to_string(h + 1) + " do not meet in V(P)");
        return *pt;
    };
    for (std::size_t k = 0; k < r; ++k) {
        out.points.push_back(at(c.v[k], c.h[k]));
        out.points.push_back(at(c.v[(k + 1) % r], c.h[k]));
    }
    out.points.push_back(out.points.front());
    return out;
}

/// Every maximal edge interval contains at most two vertices of the cycle.
inline bool is_primitive(const Polyomino& p, const PolyoCycle& c) {
    const MaximalIntervals mi = maximal_edge_intervals(p);
    const std::set<GridPoint> verts(c.points.begin(), c.points.empty() ? c.points.end() : c.points.end() - 1);
    auto ok = [&](const std::vector<EdgeInterval>& side) {
        for (const EdgeInterval& e : side) {
            std::size_t count = 0;
            for (GridPoint v : verts) count += e.contains(v) ? 1 : 0;
            if (count > 2) return false;
        }
        return true;
    };
    return ok(mi.vertical) && ok(mi.horizontal);
}

/// ∏ x_{a_1} x_{a_3} ... - ∏ x_{a_2} x_{a_4} ... over grid variables.
inline Binomial cycle_binomial(const VariableSet& vars, const PolyoCycle& c) {
    Monomial odd(vars.size());
    Monomial even(vars.size());
    const std::size_t n = c.vertex_count();
    for (std::size_t i = 0; i < n; ++i) {
        auto idx = vars.find(c.points[i]);
        if (!idx) throw MissingVertex("cycle vertex " + to_string(c.points[i]) + " is not a variable");
        (i % 2 == 0 ? odd : even) *= Monomial::variable(vars.size(), *idx);
    }
    return Binomial(std::move(odd), std::move(even));
}

/// Graph-side f_C: ∏ x_{V_{ik} ∩ H_{jk}} - ∏ x_{V_{i(k+1)} ∩ H_{jk}}.
inline Binomial graph_cycle_binomial(const IntervalGraph& g, const VariableSet& vars, const GraphCycle& c) {
    const std::size_t r = c.v.size();
    Monomial plus(vars.size());
    Monomial minus(vars.size());
    auto var = [&](std::size_t v, std::size_t h) {
        auto pt = g.label(v, h);
        if (!pt) throw MissingVertex("graph cycle uses a non-edge");
        return Monomial::variable(vars.size(), vars.index_of(VariableSet::grid_name(*pt)));
    };
    for (std::size_t k = 0; k < r; ++k) {
        plus *= var(c.v[k], c.h[k]);
        minus *= var(c.v[(k + 1) % r], c.h[k]);
    }
    return Binomial(std::move(plus), std::move(minus));
}

/// Two non-adjacent intervals [a_i, a_{i+1}] and [a_j, a_{j+1}] of a cycle
/// meeting at a lattice point that is an endpoint of neither.
struct SelfCrossing {
    std::size_t first = 0;
    std::size_t second = 0;
    GridPoint point;
};

inline std::optional<SelfCrossing> find_self_crossing(const PolyoCycle& c) {
    const auto& a = c.points;
    const std::size_t n = c.vertex_count();
    auto on_segment = [](GridPoint p, GridPoint s, GridPoint t) {
        return std::min(s.x, t.x) <= p.x && p.x <= std::max(s.x, t.x) && std::min(s.y, t.y) <= p.y &&
               p.y <= std::max(s.y, t.y) && (s.x == t.x ? p.x == s.x : p.y == s.y);
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue; // adjacent through the wrap-around
            const GridPoint s1 = a[i], t1 = a[i + 1], s2 = a[j], t2 = a[j + 1];
            // Candidate points: the lattice points of the first segment.
            const int x0 = std::min(s1.x, t1.x), x1 = std::max(s1.x, t1.x);
            const int y0 = std::min(s1.y, t1.y), y1 = std::max(s1.y, t1.y);
            for (int x = x0; x <= x1; ++x) {
                for (int y = y0; y <= y1; ++y) {
                    const GridPoint e{x, y};
                    if (e == s1 || e == t1 || e == s2 || e == t2) continue;
                    if (on_segment(e, s2, t2)) return SelfCrossing{i, j, e};
                }
            }
        }
    }
    return std::nullopt;
}

inline bool has_self_crossing(const Polyomino&, const PolyoCycle& c) { return find_self_crossing(c).has_value(); }

/// For a perpendicular crossing at e, the pair (v, h) of maximal intervals
/// through e; it joins two vertices of the graph cycle, i.e. is a chord
/// whenever it is not already a cycle edge.
inline std::optional<std::pair<std::size_t, std::size_t>> crossing_chord(const IntervalGraph& g,
                                                                         const SelfCrossing& x) {
    auto through = g.intervals_through(x.point);
    if (!through || !g.graph.has_edge(through->first, through->second)) return std::nullopt;
    return through;
}

} // namespace polyprime
