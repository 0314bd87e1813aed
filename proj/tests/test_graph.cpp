#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "polyprime/graph.hpp"

using namespace polyprime;

namespace {

BipartiteGraph cycle6() {
    BipartiteGraph g(3, 3);
    g.add_edge(0, 0);
    g.add_edge(1, 0);
    g.add_edge(1, 1);
    g.add_edge(2, 1);
    g.add_edge(2, 2);
    g.add_edge(0, 2);
    return g;
}

std::vector<Polyomino> all_up_to(int n) {
    std::vector<Polyomino> out;
    for (int k = 1; k <= n; ++k) {
        auto level = enumerate_polyominoes(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

BipartiteGraph random_bipartite(std::mt19937& rng, std::size_t m, std::size_t n, double p) {
    BipartiteGraph g(m, n);
    std::bernoulli_distribution coin(p);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}

std::set<GridPoint> point_set(const PolyoCycle& c) { return {c.points.begin(), c.points.end() - 1}; }

std::size_t brute_four_cycles(const BipartiteGraph& g) {
    std::size_t count = 0;
    for (std::size_t a = 0; a < g.left_size(); ++a)
        for (std::size_t b = a + 1; b < g.left_size(); ++b)
            for (std::size_t c = 0; c < g.right_size(); ++c)
                for (std::size_t d = c + 1; d < g.right_size(); ++d)
                    if (g.has_edge(a, c) && g.has_edge(a, d) && g.has_edge(b, c) && g.has_edge(b, d)) ++count;
    return count;
}

// Perpendicular segments meeting at a point interior to both, or collinear
// overlapping segments sharing a non-endpoint point.
bool crosses(const std::vector<GridPoint>& cyc) {
    const std::size_t n = cyc.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            const GridPoint a = cyc[i], b = cyc[i + 1], c = cyc[j], d = cyc[j + 1];
            for (int x = std::min(a.x, b.x); x <= std::max(a.x, b.x); ++x)
                for (int y = std::min(a.y, b.y); y <= std::max(a.y, b.y); ++y) {
                    const GridPoint e{x, y};
                    if (e == a || e == b || e == c || e == d) continue;
                    const bool on_cd = std::min(c.x, d.x) <= x && x <= std::max(c.x, d.x) &&
                                       std::min(c.y, d.y) <= y && y <= std::max(c.y, d.y);
                    if (on_cd) return true;
                }
        }
    return false;
}

} // namespace

TEST(ChordlessCycles, SixCycle) {
    const BipartiteGraph c6 = cycle6();
    EXPECT_EQ(chordless_cycles(c6, 6, 6).size(), 1u);
    EXPECT_EQ(chordless_cycles(c6, 4, 4).size(), 0u);
    EXPECT_FALSE(is_weakly_chordal(c6));
    ASSERT_TRUE(find_long_chordless_cycle(c6).has_value());
    EXPECT_EQ(find_long_chordless_cycle(c6)->length(), 6u);
}

TEST(ChordlessCycles, CompleteBipartite) {
    const BipartiteGraph k33 = BipartiteGraph::complete(3, 3);
    EXPECT_TRUE(chordless_cycles(k33, 6, 100).empty());
    EXPECT_EQ(brute_four_cycles(k33), 9u);
    EXPECT_EQ(chordless_cycles(k33, 4, 4).size(), brute_four_cycles(k33));
    EXPECT_TRUE(is_weakly_chordal(k33));
    EXPECT_FALSE(complement_has_long_hole(k33));
}

TEST(ChordlessCycles, CanonicalAndSorted) {
    const auto cycles = chordless_cycles(BipartiteGraph::complete(3, 4), 4, 8);
    EXPECT_EQ(cycles.size(), 18u);
    EXPECT_TRUE(std::is_sorted(cycles.begin(), cycles.end()));
    for (const GraphCycle& c : cycles) EXPECT_EQ(canonical_cycle(c), c);
}

TEST(ChordlessCycles, MatchInducedSubgraphOracleOnPolyominoes) {
    for (const Polyomino& p : all_up_to(5)) {
        const BipartiteGraph& g = build_interval_graph(p).graph;
        if (g.left_size() + g.right_size() > 20) continue;
        const auto expected = oracle::induced_cycle_counts(oracle::adjacency(g));
        std::map<std::size_t, std::size_t> got;
        for (const GraphCycle& c : chordless_cycles(g, 4, 1000)) ++got[c.length()];
        ASSERT_EQ(got, expected) << to_grid_string(p);
    }
}

TEST(ChordlessCycles, MatchInducedSubgraphOracleOnRandomGraphs) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const BipartiteGraph g = random_bipartite(rng, 5, 6, 0.45);
        const auto expected = oracle::induced_cycle_counts(oracle::adjacency(g));
        std::map<std::size_t, std::size_t> got;
        for (const GraphCycle& c : chordless_cycles(g, 4, 1000)) ++got[c.length()];
        ASSERT_EQ(got, expected);
        const bool long_hole = expected.upper_bound(4) != expected.end();
        ASSERT_EQ(is_weakly_chordal(g), !long_hole);
    }
}

TEST(ChordlessCycles, BudgetIsEnforced) {
    EXPECT_THROW(chordless_cycles(BipartiteGraph::complete(4, 4), 4, 8, 3), LimitExceeded);
}

TEST(WeakChordality, SideSwapInvariance) {
    for (const Polyomino& p : all_up_to(6)) {
        const BipartiteGraph& g = build_interval_graph(p).graph;
        ASSERT_EQ(is_weakly_chordal(g), is_weakly_chordal(g.swapped()));
    }
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const BipartiteGraph g = random_bipartite(rng, 4, 6, 0.5);
        ASSERT_EQ(is_weakly_chordal(g), is_weakly_chordal(g.swapped()));
        ASSERT_EQ(chordless_cycles(g, 4, 100).size(), chordless_cycles(g.swapped(), 4, 100).size());
    }
}

TEST(WeakChordality, SmallPolyominoes) {
    for (const Polyomino& p : all_up_to(6)) ASSERT_TRUE(is_weakly_chordal(build_interval_graph(p).graph));
}

TEST(PolyoCycle, SingleCell) {
    const Polyomino p = parse_grid("#");
    const IntervalGraph g = build_interval_graph(p);
    const auto cycles = chordless_cycles(g.graph, 4, 4);
    ASSERT_EQ(cycles.size(), 1u);
    const PolyoCycle c = graph_cycle_to_polyo_cycle(g, cycles[0]);
    EXPECT_EQ(c.vertex_count(), 4u);
    EXPECT_EQ(point_set(c), (std::set<GridPoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    EXPECT_TRUE(is_valid_polyo_cycle(p, c));
    EXPECT_TRUE(is_primitive(p, c));
    EXPECT_FALSE(has_self_crossing(p, c));
}

TEST(PolyoCycle, SquareOuterFourCycle) {
    const Polyomino p = parse_grid(oracle::kSquare);
    const IntervalGraph g = build_interval_graph(p);
    const PolyoCycle c = graph_cycle_to_polyo_cycle(g, GraphCycle{{0, 2}, {0, 2}});
    EXPECT_EQ(point_set(c), (std::set<GridPoint>{{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
    EXPECT_TRUE(is_valid_polyo_cycle(p, c));
    EXPECT_TRUE(is_primitive(p, c));
}

TEST(PolyoCycle, SquareSixCycleIsStaircase) {
    const Polyomino p = parse_grid(oracle::kSquare);
    const IntervalGraph g = build_interval_graph(p);
    const PolyoCycle c = graph_cycle_to_polyo_cycle(g, GraphCycle{{0, 1, 2}, {0, 1, 2}});
    EXPECT_EQ(c.vertex_count(), 6u);
    EXPECT_TRUE(is_valid_polyo_cycle(p, c));
    EXPECT_TRUE(is_primitive(p, c));
}

TEST(PolyoCycle, MissingVertexIsReported) {
    const Polyomino p = parse_grid("#.#\n###");
    const IntervalGraph g = build_interval_graph(p);
    // Find a vertical/horizontal pair without a common vertex.
    for (std::size_t v = 0; v < g.v_side.size(); ++v)
        for (std::size_t h = 0; h < g.h_side.size(); ++h)
            if (!g.graph.has_edge(v, h)) {
                EXPECT_THROW(graph_cycle_to_polyo_cycle(g, GraphCycle{{v, v}, {h, h}}), MissingVertex);
                return;
            }
    FAIL() << "no missing pair";
}

TEST(PolyoCycle, NonPrimitiveCycleInStrip) {
    const Polyomino p = parse_grid("###");
    const auto found = oracle::search_cycles(p, 8, [&](const std::vector<GridPoint>& cyc) {
        const auto mi = maximal_edge_intervals(p);
        for (const auto* side : {&mi.vertical, &mi.horizontal})
            for (const EdgeInterval& e : *side) {
                std::size_t k = 0;
                for (std::size_t i = 0; i + 1 < cyc.size(); ++i) k += e.contains(cyc[i]);
                if (k >= 3) return true;
            }
        return false;
    });
    ASSERT_TRUE(found.has_value());
    const PolyoCycle c{*found};
    EXPECT_TRUE(is_valid_polyo_cycle(p, c));
    EXPECT_FALSE(is_primitive(p, c));
}

TEST(PolyoCycle, ValidityRejectsBrokenSequences) {
    const Polyomino p = parse_grid(oracle::kSquare);
    // Not closed.
    EXPECT_FALSE(is_valid_polyo_cycle(p, PolyoCycle{{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 1}}}));
    // Two consecutive horizontal steps.
    EXPECT_FALSE(is_valid_polyo_cycle(p, PolyoCycle{{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 0}}}));
    // Leaves the polyomino.
    EXPECT_FALSE(is_valid_polyo_cycle(p, PolyoCycle{{{0, 0}, {3, 0}, {3, 2}, {0, 2}, {0, 0}}}));
}

TEST(CycleBinomial, FormulasAgree) {
    const Polyomino cell = parse_grid("#");
    const VariableSet cv = VariableSet::grid(cell.vertices());
    const Binomial f = cycle_binomial(cv, PolyoCycle{{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}});
    EXPECT_EQ(to_string(f, cv), "x(0,0)*x(1,1) - x(0,1)*x(1,0)");

    const Polyomino sq = parse_grid(oracle::kSquare);
    const VariableSet sv = VariableSet::grid(sq.vertices());
    const Binomial g = cycle_binomial(sv, PolyoCycle{{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 0}}});
    EXPECT_EQ(to_string(g, sv), "x(0,0)*x(2,2) - x(0,2)*x(2,0)");
}

TEST(CycleBinomial, AnnulusEightCycle) {
    const Polyomino p = parse_grid(oracle::kAnnulus);
    const IntervalGraph g = build_interval_graph(p);
    const VariableSet vars = VariableSet::grid(p.vertices());
    const GraphCycle c{{0, 1, 2, 3}, {0, 1, 2, 3}};
    const PolyoCycle pc = graph_cycle_to_polyo_cycle(g, c);
    ASSERT_TRUE(is_valid_polyo_cycle(p, pc));
    EXPECT_EQ(pc.vertex_count(), 8u);
    const Binomial a = cycle_binomial(vars, pc);
    const Binomial b = graph_cycle_binomial(g, vars, c);
    EXPECT_EQ(a.degree(), 4u);
    EXPECT_EQ(a, b);
}

TEST(Bijection, FourCyclesSmallPolyominoes) {
    for (const Polyomino& p : all_up_to(5)) {
        const IntervalGraph g = build_interval_graph(p);
        const VariableSet vars = VariableSet::grid(p.vertices());
        std::set<std::set<GridPoint>> from_graph;
        for (const GraphCycle& c : chordless_cycles(g.graph, 4, 4)) {
            const PolyoCycle pc = graph_cycle_to_polyo_cycle(g, c);
            ASSERT_TRUE(is_valid_polyo_cycle(p, pc));
            ASSERT_TRUE(is_primitive(p, pc));
            ASSERT_EQ(cycle_binomial(vars, pc), graph_cycle_binomial(g, vars, c));
            from_graph.insert(point_set(pc));
        }
        std::set<std::set<GridPoint>> from_search;
        oracle::search_cycles(p, 4, [&](const std::vector<GridPoint>& cyc) {
            const PolyoCycle pc{cyc};
            if (is_primitive(p, pc)) from_search.insert(point_set(pc));
            return false;
        });
        ASSERT_EQ(from_graph, from_search) << to_grid_string(p);
    }
}

TEST(Bijection, SimpleFourCyclesBoundInnerIntervals) {
    for (const Polyomino& p : all_up_to(6)) {
        const IntervalGraph g = build_interval_graph(p);
        for (const GraphCycle& c : chordless_cycles(g.graph, 4, 4)) {
            const auto pts = point_set(graph_cycle_to_polyo_cycle(g, c));
            const GridPoint lo = *pts.begin(), hi = *pts.rbegin();
            for (int x = lo.x; x < hi.x; ++x)
                for (int y = lo.y; y < hi.y; ++y) {
                    ASSERT_TRUE(p.contains(GridPoint{x, y})) << to_grid_string(p);
                }
        }
    }
}

TEST(Bijection, AnnulusHasNonInnerFourCycle) {
    const Polyomino p = parse_grid(oracle::kAnnulus);
    const IntervalGraph g = build_interval_graph(p);
    bool hole = false;
    for (const GraphCycle& c : chordless_cycles(g.graph, 4, 4)) {
        const auto pts = point_set(graph_cycle_to_polyo_cycle(g, c));
        const GridPoint lo = *pts.begin(), hi = *pts.rbegin();
        bool inner = true;
        for (int x = lo.x; x < hi.x; ++x)
            for (int y = lo.y; y < hi.y; ++y)
                if (!p.contains(GridPoint{x, y})) inner = false;
        if (pts == std::set<GridPoint>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
            EXPECT_FALSE(inner);
        }
        hole = hole || !inner;
    }
    EXPECT_TRUE(hole);
}

TEST(SelfCrossing, HandBuiltCrossingInSquare) {
    const Polyomino p = parse_grid(oracle::kSquare);
    const PolyoCycle c{{{0, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 0}, {0, 0}, {0, 1}}};
    ASSERT_TRUE(is_valid_polyo_cycle(p, c));
    const auto x = find_self_crossing(c);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(x->point, (GridPoint{1, 1}));
    const IntervalGraph g = build_interval_graph(p);
    const auto chord = crossing_chord(g, *x);
    ASSERT_TRUE(chord.has_value());
    EXPECT_EQ(g.label(chord->first, chord->second), (GridPoint{1, 1}));
}

TEST(SelfCrossing, BruteForceSearchFindsOne) {
    const Polyomino p = parse_grid(oracle::kSquare);
    const IntervalGraph g = build_interval_graph(p);
    const auto found = oracle::search_cycles(p, 8, [](const std::vector<GridPoint>& cyc) { return crosses(cyc); });
    ASSERT_TRUE(found.has_value());
    const PolyoCycle c{*found};
    ASSERT_TRUE(has_self_crossing(p, c));
    const auto chord = crossing_chord(g, *find_self_crossing(c));
    ASSERT_TRUE(chord.has_value());
    // The chord joins two interval-vertices that the cycle passes through.
    const auto pts = point_set(c);
    bool v_used = false, h_used = false;
    for (GridPoint q : pts) {
        v_used = v_used || g.v_side[chord->first].contains(q);
        h_used = h_used || g.h_side[chord->second].contains(q);
    }
    EXPECT_TRUE(v_used && h_used);
}

TEST(SelfCrossing, ChordlessImagesDoNotCross) {
    for (const Polyomino& p : all_up_to(6)) {
        const IntervalGraph g = build_interval_graph(p);
        for (const GraphCycle& c : chordless_cycles(g.graph, 4, 1000)) {
            const PolyoCycle pc = graph_cycle_to_polyo_cycle(g, c);
            ASSERT_FALSE(has_self_crossing(p, pc));
            ASSERT_FALSE(crosses(pc.points));
        }
    }
}
