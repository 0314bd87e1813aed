#pragma once

// Variables, exponent-vector monomials and monomial orders.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyprime/errors.hpp"
#include "polyprime/grid.hpp"

namespace polyprime {

/// Ordered list of uniquely named variables. Grid variables carry the
/// lattice point they stand for.
class VariableSet {
public:
    VariableSet() = default;

    std::size_t add(std::string name, std::optional<GridPoint> point = std::nullopt) {
        if (index_.contains(name)) throw Error("duplicate variable name " + name);
        const std::size_t i = names_.size();
        index_.emplace(name, i);
        names_.push_back(std::move(name));
        points_.push_back(point);
        return i;
    }

    /// x(i,j) for every lattice point, in the given order.
    static VariableSet grid(const std::vector<GridPoint>& points) {
        VariableSet vs;
        for (GridPoint p : points) vs.add(grid_name(p), p);
        return vs;
    }

    static std::string grid_name(GridPoint p) { return "x" + to_string(p); }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    const std::optional<GridPoint>& point(std::size_t i) const { return points_.at(i); }

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index_of(const std::string& name) const {
        auto i = find(name);
        if (!i) throw Error("unknown variable " + name);
        return *i;
    }
    std::optional<std::size_t> find(GridPoint p) const { return find(grid_name(p)); }

    friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::vector<std::optional<GridPoint>> points_;
    std::map<std::string, std::size_t> index_;
};

/// Exponent vector over a fixed number of variables.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
        for (Exponent e : exps_) degree_ += e;
    }

    static Monomial variable(std::size_t nvars, std::size_t i, Exponent power = 1) {
        Monomial m(nvars);
        m.exps_[i] = power;
        m.degree_ = power;
        return m;
    }

    std::size_t size() const { return exps_.size(); }
    unsigned degree() const { return degree_; }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    bool is_squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
    }

    /// Bit i%64 set when variable i occurs; a cheap necessary test for divisibility.
    std::uint64_t support_mask() const {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i]) mask |= std::uint64_t{1} << (i % 64);
        return mask;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    bool coprime(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] && other.exps_[i]) return false;
        return true;
    }

    Monomial& operator*=(const Monomial& o) {
        check_size(o);
        for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] = static_cast<Exponent>(exps_[i] + o.exps_[i]);
        degree_ += o.degree_;
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    /// this / divisor; divisor must divide this.
    Monomial quotient(const Monomial& divisor) const {
        Monomial q(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
        q.degree_ = degree_ - divisor.degree_;
        return q;
    }

    /// (this / divisor) * factor without building the quotient.
    Monomial replace(const Monomial& divisor, const Monomial& factor) const {
        Monomial r(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            r.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i] + factor.exps_[i]);
        r.degree_ = degree_ - divisor.degree_ + factor.degree_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_size(b);
        Monomial l(a.exps_.size());
        for (std::size_t i = 0; i < a.exps_.size(); ++i) {
            l.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            l.degree_ += l.exps_[i];
        }
        return l;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_size(b);
        Monomial g(a.exps_.size());
        for (std::size_t i = 0; i < a.exps_.size(); ++i) {
            g.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
            g.degree_ += g.exps_[i];
        }
        return g;
    }

    /// Monomial over the first `n` variables (remaining exponents dropped).
    Monomial truncated(std::size_t n) const {
        return Monomial(std::vector<Exponent>(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(n)));
    }
    /// Same exponents, padded with zeros up to `n` variables.
    Monomial extended(std::size_t n) const {
        std::vector<Exponent> e = exps_;
        e.resize(n, 0);
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    /// Structural (index-lexicographic) order for containers; not a monomial order.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

private:
    void check_size(const Monomial& o) const {
        if (o.exps_.size() != exps_.size()) throw VariableSetMismatch(exps_.size(), o.exps_.size());
    }

    std::vector<Exponent> exps_;
    unsigned degree_ = 0;
};

inline std::string to_string(const Monomial& m, const VariableSet& vars) {
    if (m.is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!out.empty()) out += "*";
        out += vars.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

enum class OrderKind { lex, deglex, degrevlex, block };

inline std::string to_string(OrderKind k) {
    switch (k) {
    case OrderKind::lex: return "lex";
    case OrderKind::deglex: return "deglex";
    case OrderKind::degrevlex: return "degrevlex";
    case OrderKind::block: return "block";
    }
    return "?";
}

inline OrderKind parse_order_kind(const std::string& s) {
    if (s == "lex") return OrderKind::lex;
    if (s == "deglex") return OrderKind::deglex;
    if (s == "degrevlex") return OrderKind::degrevlex;
    if (s == "block") return OrderKind::block;
    throw ParseError("unknown order kind '" + s + "'");
}

struct OrderBlock {
    std::size_t size = 0;
    OrderKind kind = OrderKind::degrevlex;

    friend bool operator==(const OrderBlock&, const OrderBlock&) = default;
};

/// A monomial order given by a kind and a variable ranking: ranking[0] is
/// the largest variable. Block orders compare consecutive ranking blocks in
/// turn, each block with its own inner (non-block) order.
class MonomialOrder {
public:
    MonomialOrder() = default;

    MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking, std::vector<OrderBlock> blocks = {})
        : kind_(kind), ranking_(std::move(ranking)), blocks_(std::move(blocks)) {
        std::vector<std::size_t> check = ranking_;
        std::sort(check.begin(), check.end());
        for (std::size_t i = 0; i < check.size(); ++i)
            if (check[i] != i) throw Error("order ranking is not a permutation");
        if (kind_ == OrderKind::block) {
            std::size_t total = 0;
            for (const OrderBlock& b : blocks_) {
                if (b.kind == OrderKind::block) throw Error("nested block orders are not supported");
                total += b.size;
            }
            if (total != ranking_.size()) throw Error("block sizes do not cover the ranking");
        } else {
            blocks_ = {OrderBlock{ranking_.size(), kind_}};
        }
    }

    /// Variables ranked 0 > 1 > ... > n-1.
    static MonomialOrder natural(OrderKind kind, std::size_t n) {
        std::vector<std::size_t> r(n);
        std::iota(r.begin(), r.end(), std::size_t{0});
        return MonomialOrder(kind, std::move(r));
    }

    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& ranking() const { return ranking_; }
    const std::vector<OrderBlock>& blocks() const { return blocks_; }
    std::size_t size() const { return ranking_.size(); }

    /// -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (a.size() != ranking_.size()) throw VariableSetMismatch(ranking_.size(), a.size());
        if (b.size() != ranking_.size()) throw VariableSetMismatch(ranking_.size(), b.size());
        std::size_t begin = 0;
        for (const OrderBlock& blk : blocks_) {
            const int c = compare_range(blk.kind, a, b, begin, begin + blk.size);
            if (c != 0) return c;
            begin += blk.size;
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.ranking_ == b.ranking_ && a.blocks_ == b.blocks_;
    }

private:
    int compare_range(OrderKind kind, const Monomial& a, const Monomial& b, std::size_t begin,
                      std::size_t end) const {
        if (kind != OrderKind::lex) {
            unsigned da = 0;
            unsigned db = 0;
            for (std::size_t k = begin; k < end; ++k) {
                da += a[ranking_[k]];
                db += b[ranking_[k]];
            }
            if (da != db) return da > db ? 1 : -1;
        }
        if (kind == OrderKind::degrevlex) {
            for (std::size_t k = end; k-- > begin;) {
                const std::size_t v = ranking_[k];
                if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
            }
            return 0;
        }
        for (std::size_t k = begin; k < end; ++k) {
            const std::size_t v = ranking_[k];
            if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        }
        return 0;
    }

    OrderKind kind_ = OrderKind::degrevlex;
    std::vector<std::size_t> ranking_;
    std::vector<OrderBlock> blocks_;
};

enum class Ordering { less, equal, greater };

inline Ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    const int c = order.compare(a, b);
    return c < 0 ? Ordering::less : (c > 0 ? Ordering::greater : Ordering::equal);
}

} // namespace polyprime
