#pragma once

// Maximal horizontal/vertical edge intervals of a polyomino and the
// bipartite interval graph G(P) they induce.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyprime/grid.hpp"

namespace polyprime {

enum class Orientation { horizontal, vertical };

/// A run of consecutive cell edges on one grid line. For a horizontal
/// interval `line` is y and the span covers x in [first, last]; for a
/// vertical interval `line` is x and the span covers y.
struct EdgeInterval {
    Orientation orientation = Orientation::horizontal;
    int line = 0;
    int first = 0;
    int last = 0;

    friend constexpr auto operator<=>(const EdgeInterval&, const EdgeInterval&) = default;

    int length() const { return last - first; }

    GridPoint point_at(int t) const {
        return orientation == Orientation::horizontal ? GridPoint{t, line} : GridPoint{line, t};
    }

    bool contains(GridPoint p) const {
        if (orientation == Orientation::horizontal) return p.y == line && first <= p.x && p.x <= last;
        return p.x == line && first <= p.y && p.y <= last;
    }

    std::vector<GridPoint> points() const {
        std::vector<GridPoint> out;
        for (int t = first; t <= last; ++t) out.push_back(point_at(t));
        return out;
    }

    /// V_p ∩ H_q for a vertical/horizontal pair, if the segments meet.
    friend std::optional<GridPoint> intersect(const EdgeInterval& vertical, const EdgeInterval& horizontal) {
        const GridPoint p{vertical.line, horizontal.line};
        if (vertical.contains(p) && horizontal.contains(p)) return p;
        return std::nullopt;
    }
};

struct MaximalIntervals {
    std::vector<EdgeInterval> vertical;
    std::vector<EdgeInterval> horizontal;
};

/// Scans each grid line and merges consecutive cell edges into maximal runs.
/// Ordered by line, then span start.
inline MaximalIntervals maximal_edge_intervals(const Polyomino& p) {
    MaximalIntervals out;
    const int w = p.width();
    const int h = p.height();
    auto scan = [](Orientation o, int lines, int steps, auto has_edge, std::vector<EdgeInterval>& dst) {
        for (int line = 0; line <= lines; ++line) {
            int t = 0;
            while (t < steps) {
                if (!has_edge(line, t)) {
                    ++t;
                    continue;
                }
                const int begin = t;
                while (t < steps && has_edge(line, t)) ++t;
                dst.push_back(EdgeInterval{o, line, begin, t});
            }
        }
    };
    scan(Orientation::vertical, w, h, [&](int x, int y) { return p.has_vertical_edge({x, y}); }, out.vertical);
    scan(Orientation::horizontal, h, w, [&](int y, int x) { return p.has_horizontal_edge({x, y}); },
         out.horizontal);
    return out;
}

/// Plain bipartite graph with sides 0..left-1 and 0..right-1.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::size_t left, std::size_t right)
        : left_(left), right_(right), adjacent_(left * right, 0), left_adj_(left), right_adj_(right) {}

    void add_edge(std::size_t p, std::size_t q) {
        if (adjacent_[p * right_ + q]) return;
        adjacent_[p * right_ + q] = 1;
        left_adj_[p].push_back(q);
        right_adj_[q].push_back(p);
        std::sort(left_adj_[p].begin(), left_adj_[p].end());
        std::sort(right_adj_[q].begin(), right_adj_[q].end());
        ++edge_count_;
    }

    std::size_t left_size() const { return left_; }
    std::size_t right_size() const { return right_; }
    std::size_t edge_count() const { return edge_count_; }
    bool has_edge(std::size_t p, std::size_t q) const { return adjacent_[p * right_ + q] != 0; }
    const std::vector<std::size_t>& left_neighbours(std::size_t p) const { return left_adj_[p]; }
    const std::vector<std::size_t>& right_neighbours(std::size_t q) const { return right_adj_[q]; }

    /// Same graph with left and right sides exchanged.
    BipartiteGraph swapped() const {
        BipartiteGraph g(right_, left_);
        for (std::size_t p = 0; p < left_; ++p)
            for (std::size_t q : left_adj_[p]) g.add_edge(q, p);
        return g;
    }

    static BipartiteGraph complete(std::size_t left, std::size_t right) {
        BipartiteGraph g(left, right);
        for (std::size_t p = 0; p < left; ++p)
            for (std::size_t q = 0; q < right; ++q) g.add_edge(p, q);
        return g;
    }

private:
    std::size_t left_ = 0;
    std::size_t right_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<char> adjacent_;
    std::vector<std::vector<std::size_t>> left_adj_;
    std::vector<std::vector<std::size_t>> right_adj_;
};

struct LabeledEdge {
    std::size_t v = 0;
    std::size_t h = 0;
    GridPoint point;

    friend constexpr auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

/// G(P): left side = maximal vertical intervals, right side = maximal
/// horizontal intervals, edge {v_p, h_q} labelled by V_p ∩ H_q ∈ V(P).
struct IntervalGraph {
    std::vector<EdgeInterval> v_side;
    std::vector<EdgeInterval> h_side;
    std::vector<LabeledEdge> edges; // sorted by (v, h)
    BipartiteGraph graph;

    std::optional<GridPoint> label(std::size_t v, std::size_t h) const {
        auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{v, h},
                                   [](const LabeledEdge& e, const std::pair<std::size_t, std::size_t>& k) {
                                       return std::pair{e.v, e.h} < k;
                                   });
        if (it == edges.end() || it->v != v || it->h != h) return std::nullopt;
        return it->point;
    }

    /// Indices (v, h) of the maximal intervals through a vertex of P.
    std::optional<std::pair<std::size_t, std::size_t>> intervals_through(GridPoint p) const {
        std::optional<std::size_t> v;
        std::optional<std::size_t> h;
        for (std::size_t i = 0; i < v_side.size(); ++i)
            if (v_side[i].contains(p)) v = i;
        for (std::size_t j = 0; j < h_side.size(); ++j)
            if (h_side[j].contains(p)) h = j;
        if (!v || !h) return std::nullopt;
        return std::pair{*v, *h};
    }
};

inline IntervalGraph build_interval_graph(const Polyomino& p) {
    MaximalIntervals mi = maximal_edge_intervals(p);
    IntervalGraph g;
    g.v_side = std::move(mi.vertical);
    g.h_side = std::move(mi.horizontal);
    g.graph = BipartiteGraph(g.v_side.size(), g.h_side.size());

    // Index horizontal intervals by line so each vertex finds its pair directly.
    std::map<int, std::vector<std::size_t>> h_by_line;
    for (std::size_t j = 0; j < g.h_side.size(); ++j) h_by_line[g.h_side[j].line].push_back(j);

    const std::vector<GridPoint> verts = p.vertices();
    for (std::size_t i = 0; i < g.v_side.size(); ++i) {
        const EdgeInterval& vi = g.v_side[i];
        for (int y = vi.first; y <= vi.last; ++y) {
            const GridPoint pt{vi.line, y};
            if (!std::binary_search(verts.begin(), verts.end(), pt)) continue;
            auto it = h_by_line.find(y);
            if (it == h_by_line.end()) continue;
            for (std::size_t j : it->second) {
                if (g.h_side[j].contains(pt)) {
                    g.edges.push_back({i, j, pt});
                    g.graph.add_edge(i, j);
                }
            }
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

inline bool is_connected(const BipartiteGraph& g) {
    const std::size_t n = g.left_size() + g.right_size();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        const bool left = u < g.left_size();
        const auto& nbrs = left ? g.left_neighbours(u) : g.right_neighbours(u - g.left_size());
        for (std::size_t w : nbrs) {
            const std::size_t id = left ? w + g.left_size() : w;
            if (!seen[id]) {
                seen[id] = 1;
                ++count;
                stack.push_back(id);
            }
        }
    }
    return count == n;
}

/// DOT rendering for inspection.
inline std::string to_dot(const IntervalGraph& g) {
    std::string out = "graph G {\n";
    for (std::size_t i = 0; i < g.v_side.size(); ++i) out += "  v" + std::to_string(i + 1) + " [shape=box];\n";
    for (std::size_t j = 0; j < g.h_side.size(); ++j) out += "  h" + std::to_string(j + 1) + ";\n";
    for (const LabeledEdge& e : g.edges)
        out += "  v" + std::to_string(e.v + 1) + " -- h" + std::to_string(e.h + 1) + " [label=\"" +
               to_string(e.point) + "\"];\n";
    out += "}\n";
    return out;
}

} // namespace polyprime
