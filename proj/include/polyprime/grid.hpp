#pragma once

// Integer-grid model of polyominoes: cells, intervals, connectivity,
// inner intervals, hole detection and fixed-polyomino enumeration.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyprime/errors.hpp"

namespace polyprime {

struct GridPoint {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
    constexpr GridPoint operator+(GridPoint o) const { return {x + o.x, y + o.y}; }

    /// Componentwise partial order a <= b.
    constexpr bool below_or_equal(GridPoint o) const { return x <= o.x && y <= o.y; }
};

inline std::string to_string(GridPoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

/// Axis-aligned rectangle [lo, hi] of lattice points.
struct Interval {
    GridPoint lo;
    GridPoint hi;

    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;

    constexpr bool contains(GridPoint p) const { return lo.below_or_equal(p) && p.below_or_equal(hi); }
    constexpr std::pair<GridPoint, GridPoint> diagonal() const { return {lo, hi}; }
    constexpr std::pair<GridPoint, GridPoint> anti_diagonal() const {
        return {{lo.x, hi.y}, {hi.x, lo.y}};
    }
};

/// Unordered pair of lattice points at distance one, stored with first < second.
using GridEdge = std::pair<GridPoint, GridPoint>;

/// Unit square [corner, corner + (1,1)].
struct Cell {
    GridPoint corner;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;

    constexpr Interval interval() const { return {corner, corner + GridPoint{1, 1}}; }

    constexpr std::array<GridPoint, 4> vertices() const {
        return {corner, corner + GridPoint{0, 1}, corner + GridPoint{1, 0}, corner + GridPoint{1, 1}};
    }

    constexpr std::array<GridEdge, 4> edges() const {
        const GridPoint a = corner;
        return {GridEdge{a, a + GridPoint{1, 0}}, GridEdge{a, a + GridPoint{0, 1}},
                GridEdge{a + GridPoint{1, 0}, a + GridPoint{1, 1}},
                GridEdge{a + GridPoint{0, 1}, a + GridPoint{1, 1}}};
    }

    constexpr std::array<Cell, 4> neighbours() const {
        return {Cell{{corner.x - 1, corner.y}}, Cell{{corner.x + 1, corner.y}},
                Cell{{corner.x, corner.y - 1}}, Cell{{corner.x, corner.y + 1}}};
    }
};

/// True iff the cells are edge-connected. The empty set counts as connected.
inline bool is_connected(std::span<const Cell> cells) {
    if (cells.empty()) return true;
    const std::set<Cell> all(cells.begin(), cells.end());
    std::set<Cell> seen{*all.begin()};
    std::vector<Cell> stack{*all.begin()};
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        for (const Cell& n : c.neighbours()) {
            if (all.contains(n) && seen.insert(n).second) stack.push_back(n);
        }
    }
    return seen.size() == all.size();
}

/// A finite, nonempty, edge-connected set of cells translated so that
/// min x = min y = 0. Cells are kept sorted, so equality is set equality.
class Polyomino {
public:
    /// Normalizes and validates an arbitrary cell collection.
    static Polyomino from_cells(std::vector<Cell> cells) {
        if (cells.empty()) throw EmptyInput();
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        if (!is_connected(cells)) throw Disconnected();
        int mx = cells.front().corner.x;
        int my = cells.front().corner.y;
        for (const Cell& c : cells) {
            mx = std::min(mx, c.corner.x);
            my = std::min(my, c.corner.y);
        }
        for (Cell& c : cells) c.corner = {c.corner.x - mx, c.corner.y - my};
        std::sort(cells.begin(), cells.end());
        return Polyomino(std::move(cells));
    }

    static Polyomino from_points(std::span<const GridPoint> corners) {
        std::vector<Cell> cells;
        cells.reserve(corners.size());
        for (GridPoint p : corners) cells.push_back(Cell{p});
        return from_cells(std::move(cells));
    }

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }
    bool contains(GridPoint corner) const { return contains(Cell{corner}); }

    /// Number of cell columns / rows of the bounding box.
    int width() const {
        int w = 0;
        for (const Cell& c : cells_) w = std::max(w, c.corner.x + 1);
        return w;
    }
    int height() const {
        int h = 0;
        for (const Cell& c : cells_) h = std::max(h, c.corner.y + 1);
        return h;
    }
    Interval bounding_interval() const { return {{0, 0}, {width(), height()}}; }

    /// V(P), sorted lexicographically by (x, y).
    std::vector<GridPoint> vertices() const {
        std::vector<GridPoint> out;
        out.reserve(cells_.size() * 4);
        for (const Cell& c : cells_)
            for (GridPoint v : c.vertices()) out.push_back(v);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// E(P), sorted.
    std::vector<GridEdge> edges() const {
        std::vector<GridEdge> out;
        out.reserve(cells_.size() * 4);
        for (const Cell& c : cells_)
            for (const GridEdge& e : c.edges()) out.push_back(e);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool has_horizontal_edge(GridPoint left) const {
        return contains(left) || contains(GridPoint{left.x, left.y - 1});
    }
    bool has_vertical_edge(GridPoint bottom) const {
        return contains(bottom) || contains(GridPoint{bottom.x - 1, bottom.y});
    }

    friend auto operator<=>(const Polyomino&, const Polyomino&) = default;

private:
    explicit Polyomino(std::vector<Cell> cells) : cells_(std::move(cells)) {}
    std::vector<Cell> cells_;
};

/// Parses rows of '#' (cell) and '.' (empty). The first text row is the
/// highest y row; ragged rows are padded with '.'.
inline Polyomino parse_grid(std::string_view text) {
    std::vector<std::string_view> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view row = text.substr(start, end - start);
        if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
        rows.push_back(row);
        start = end + 1;
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();

    std::vector<Cell> cells;
    const int height = static_cast<int>(rows.size());
    for (int r = 0; r < height; ++r) {
        const std::string_view row = rows[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] == '#')
                cells.push_back(Cell{{static_cast<int>(c), height - 1 - r}});
            else if (row[c] != '.')
                throw BadChar(row[c], static_cast<std::size_t>(r) + 1, c + 1);
        }
    }
    if (cells.empty()) throw EmptyInput();
    return Polyomino::from_cells(std::move(cells));
}

/// Minimal bounding box rendering, one '\n'-terminated line per row, top row first.
inline std::string to_grid_string(const Polyomino& p) {
    const int w = p.width();
    const int h = p.height();
    std::string out;
    out.reserve(static_cast<std::size_t>((w + 1) * h));
    for (int y = h - 1; y >= 0; --y) {
        for (int x = 0; x < w; ++x) out.push_back(p.contains(GridPoint{x, y}) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

/// True iff every cell of the bounding box outside P reaches, through
/// cells outside P, a cell outside the bounding box. `padding` widens the
/// witness interval; any padding >= 1 gives the same answer.
inline bool is_simple(const Polyomino& p, int padding = 1) {
    padding = std::max(padding, 1);
    const int w = p.width() + 2 * padding;
    const int h = p.height() + 2 * padding;
    auto index = [&](int x, int y) { return static_cast<std::size_t>(y) * w + x; };
    std::vector<char> blocked(static_cast<std::size_t>(w) * h, 0);
    for (const Cell& c : p.cells()) blocked[index(c.corner.x + padding, c.corner.y + padding)] = 1;

    std::vector<char> seen(blocked.size(), 0);
    std::vector<std::pair<int, int>> stack{{0, 0}};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto [x, y] = stack.back();
        stack.pop_back();
        constexpr std::array<std::pair<int, int>, 4> steps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
        for (const auto& [dx, dy] : steps) {
            const int nx = x + dx;
            const int ny = y + dy;
            if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
            const std::size_t i = index(nx, ny);
            if (blocked[i] || seen[i]) continue;
            seen[i] = 1;
            ++reached;
            stack.emplace_back(nx, ny);
        }
    }
    return reached + p.size() == blocked.size();
}

/// All inner intervals [(i,j),(k,l)], i<k, j<l, whose cells all lie in P,
/// ordered lexicographically by (lo, hi).
inline std::vector<Interval> inner_intervals(const Polyomino& p) {
    std::vector<Interval> out;
    const int w = p.width();
    const int h = p.height();
    for (const Cell& base : p.cells()) {
        const GridPoint lo = base.corner;
        // Grow rows upwards while the column run stays full; the widest
        // admissible width shrinks monotonically with height.
        int max_w = 0;
        while (lo.x + max_w < w && p.contains(GridPoint{lo.x + max_w, lo.y})) ++max_w;
        for (int dy = 0; lo.y + dy < h && max_w > 0; ++dy) {
            int run = 0;
            while (run < max_w && p.contains(GridPoint{lo.x + run, lo.y + dy})) ++run;
            max_w = run;
            for (int dx = 1; dx <= max_w; ++dx) out.push_back({lo, {lo.x + dx, lo.y + dy + 1}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The 8 symmetries of the square lattice applied to a cell set; result re-normalized.
inline Polyomino transform(const Polyomino& p, int symmetry) {
    std::vector<Cell> cells;
    cells.reserve(p.size());
    for (const Cell& c : p.cells()) {
        // Act on the doubled cell centre (2x+1, 2y+1); centre - 1 stays even.
        int x = 2 * c.corner.x + 1;
        int y = 2 * c.corner.y + 1;
        if (symmetry & 1) x = -x;
        if (symmetry & 2) y = -y;
        if (symmetry & 4) std::swap(x, y);
        cells.push_back(Cell{{(x - 1) / 2, (y - 1) / 2}});
    }
    return Polyomino::from_cells(std::move(cells));
}

inline constexpr int kDefaultEnumerationCap = 8;

/// Every fixed polyomino with exactly n cells, once each, sorted by cell list.
inline std::vector<Polyomino> enumerate_polyominoes(int n, int cap = kDefaultEnumerationCap) {
    if (n < 1 || n > cap) throw CapExceeded(n, cap);
    std::set<Polyomino> level{Polyomino::from_points(std::array{GridPoint{0, 0}})};
    for (int size = 2; size <= n; ++size) {
        std::set<Polyomino> next;
        for (const Polyomino& p : level) {
            for (const Cell& c : p.cells()) {
                for (const Cell& nb : c.neighbours()) {
                    if (p.contains(nb)) continue;
                    std::vector<Cell> grown = p.cells();
                    grown.push_back(nb);
                    next.insert(Polyomino::from_cells(std::move(grown)));
                }
            }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

} // namespace polyprime
