#pragma once

// Buchberger's algorithm specialised to pure-difference binomials.
//
// Dividing a monomial by a binomial u - w replaces a factor u by w, so the
// normal form of a monomial is again a monomial and the normal form of a
// binomial a - b is NF(a) - NF(b). All arithmetic therefore stays inside
// the class of +1/-1 binomials and no field operations are needed.

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "polyprime/binomial.hpp"

namespace polyprime {

struct GroebnerBudget {
    std::size_t max_pairs = 100'000;
    std::size_t max_elements = 10'000;
};

/// Basis elements are stored leading term first (plus = leading term).
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Binomial> elements;
    bool reduced = false;

    std::size_t nvars() const { return order.size(); }
};

struct GroebnerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_coprime = 0;
    std::size_t zero_reductions = 0;
};

namespace detail {

struct Reducer {
    Monomial lead;
    Monomial trail;
    std::uint64_t mask;
};

inline Monomial normal_form(Monomial m, std::span<const Reducer> reducers) {
    bool changed = true;
    while (changed) {
        changed = false;
        const std::uint64_t mask = m.support_mask();
        for (const Reducer& r : reducers) {
            if ((r.mask & ~mask) != 0 || !r.lead.divides(m)) continue;
            m = m.replace(r.lead, r.trail);
            changed = true;
            break;
        }
    }
    return m;
}

inline std::vector<Reducer> make_reducers(std::span<const Binomial> basis, const MonomialOrder& order) {
    std::vector<Reducer> out;
    out.reserve(basis.size());
    for (const Binomial& b : basis) {
        const Binomial o = b.oriented(order);
        out.push_back({o.plus(), o.minus(), o.plus().support_mask()});
    }
    return out;
}

inline void check_vars(std::size_t expected, const Binomial& b) {
    if (b.size() != expected) throw VariableSetMismatch(expected, b.size());
}

} // namespace detail

/// Normal form of a monomial modulo the leading terms of `basis`.
inline Monomial normal_form(const Monomial& m, std::span<const Binomial> basis, const MonomialOrder& order) {
    const auto reducers = detail::make_reducers(basis, order);
    return detail::normal_form(m, reducers);
}

/// Full reduction of f by `basis`; the result is Zero or a binomial whose
/// terms are both irreducible, leading term first.
inline BinomialOrZero reduce(const Binomial& f, std::span<const Binomial> basis, const MonomialOrder& order) {
    detail::check_vars(order.size(), f);
    for (const Binomial& b : basis) detail::check_vars(order.size(), b);
    const auto reducers = detail::make_reducers(basis, order);
    Monomial a = detail::normal_form(f.plus(), reducers);
    Monomial b = detail::normal_form(f.minus(), reducers);
    if (a == b) return Zero{};
    if (order.less(a, b)) std::swap(a, b);
    return Binomial(std::move(a), std::move(b));
}

/// Reduced Groebner basis of the ideal generated by `gens`.
///
/// Pairs are processed by the normal strategy: smallest lcm degree first,
/// ties broken by lcm under the order and then by insertion indices, so the
/// run is deterministic. New pairs go through the Gebauer-Moeller update,
/// which includes the coprime-leading-term criterion.
inline GroebnerBasis buchberger(std::span<const Binomial> gens, const MonomialOrder& order,
                                const GroebnerBudget& budget = {}, GroebnerStats* stats = nullptr) {
    for (const Binomial& g : gens) detail::check_vars(order.size(), g);

    std::vector<detail::Reducer> elements; // every element ever added
    std::vector<char> active;
    std::vector<detail::Reducer> reducers; // active elements, in insertion order

    struct Pair {
        unsigned degree;
        Monomial lcm;
        std::size_t i;
        std::size_t j;
    };
    const auto earlier = [&order](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        const int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    std::set<Pair, decltype(earlier)> pairs(earlier);
    GroebnerStats local;
    GroebnerStats& st = stats ? *stats : local;

    const auto rebuild_reducers = [&] {
        reducers.clear();
        for (std::size_t k = 0; k < elements.size(); ++k)
            if (active[k]) reducers.push_back(elements[k]);
    };

    const auto insert = [&](Monomial a, Monomial b) {
        a = detail::normal_form(std::move(a), reducers);
        b = detail::normal_form(std::move(b), reducers);
        if (a == b) {
            ++st.zero_reductions;
            return;
        }
        if (order.less(a, b)) std::swap(a, b);
        if (elements.size() >= budget.max_elements)
            throw BudgetExceeded("Groebner basis exceeded " + std::to_string(budget.max_elements) + " elements");
        const std::size_t h = elements.size();
        elements.push_back({a, b, a.support_mask()});
        active.push_back(1);
        const Monomial& lh = elements[h].lead;

        // Candidate pairs {g, h} with every active g.
        std::vector<Pair> fresh;
        for (std::size_t g = 0; g < h; ++g) {
            if (!active[g]) continue;
            Monomial l = lcm(elements[g].lead, lh);
            const unsigned d = l.degree();
            fresh.push_back(Pair{d, std::move(l), g, h});
        }
        std::vector<char> keep(fresh.size(), 1);
        // A pair whose lcm is divisible by another candidate's lcm is redundant;
        // among equal lcms the first survives. Coprime pairs take part in this
        // step before they are dropped themselves.
        for (std::size_t x = 0; x < fresh.size(); ++x) {
            const bool coprime = elements[fresh[x].i].lead.coprime(lh);
            if (coprime) continue;
            for (std::size_t y = 0; y < fresh.size(); ++y) {
                if (x == y || !keep[y]) continue;
                if (!fresh[y].lcm.divides(fresh[x].lcm)) continue;
                if (fresh[y].lcm == fresh[x].lcm && y > x) continue;
                keep[x] = 0;
                break;
            }
        }
        // Equal-lcm groups containing a coprime pair are discarded entirely.
        for (std::size_t x = 0; x < fresh.size(); ++x) {
            if (!keep[x]) continue;
            for (std::size_t y = 0; y < fresh.size(); ++y) {
                if (fresh[y].lcm == fresh[x].lcm && elements[fresh[y].i].lead.coprime(lh)) {
                    keep[x] = 0;
                    break;
                }
            }
        }
        // Old pairs made redundant by h.
        for (auto it = pairs.begin(); it != pairs.end();) {
            if (lh.divides(it->lcm) && !(lcm(elements[it->i].lead, lh) == it->lcm) &&
                !(lcm(elements[it->j].lead, lh) == it->lcm))
                it = pairs.erase(it);
            else
                ++it;
        }
        for (std::size_t x = 0; x < fresh.size(); ++x) {
            if (keep[x])
                pairs.insert(std::move(fresh[x]));
            else
                ++st.pairs_coprime;
        }
        // Elements whose leading term h divides leave the active basis.
        for (std::size_t g = 0; g < h; ++g)
            if (active[g] && lh.divides(elements[g].lead)) active[g] = 0;
        rebuild_reducers();
    };

    for (const Binomial& g : gens) insert(g.plus(), g.minus());

    while (!pairs.empty()) {
        const Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        if (++st.pairs_considered > budget.max_pairs)
            throw BudgetExceeded("Groebner computation exceeded " + std::to_string(budget.max_pairs) + " S-pairs");
        const detail::Reducer& f = elements[p.i];
        const detail::Reducer& g = elements[p.j];
        Monomial a = p.lcm.replace(f.lead, f.trail);
        Monomial b = p.lcm.replace(g.lead, g.trail);
        insert(std::move(a), std::move(b));
    }

    // Active leading terms are pairwise non-divisible except for duplicates,
    // which the minimalization below removes.
    std::vector<detail::Reducer> basis = reducers;
    std::sort(basis.begin(), basis.end(),
              [&order](const detail::Reducer& a, const detail::Reducer& b) { return order.less(a.lead, b.lead); });
    std::vector<detail::Reducer> minimal;
    for (const detail::Reducer& r : basis) {
        const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                           [&r](const detail::Reducer& m) { return m.lead.divides(r.lead); });
        if (!redundant) minimal.push_back(r);
    }
    // Tail-reduce.
    GroebnerBasis gb{order, {}, true};
    gb.elements.reserve(minimal.size());
    for (const detail::Reducer& r : minimal) gb.elements.emplace_back(r.lead, detail::normal_form(r.trail, minimal));
    return gb;
}

inline GroebnerBasis buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order,
                                const GroebnerBudget& budget = {}, GroebnerStats* stats = nullptr) {
    return buchberger(std::span<const Binomial>(gens), order, budget, stats);
}

inline bool ideal_member(const Binomial& f, const GroebnerBasis& gb) {
    return is_zero(reduce(f, gb.elements, gb.order));
}

/// Outcome of both ideal-equality decision routes.
struct IdealComparison {
    bool by_mutual_reduction = false;
    bool by_reduced_basis = false;
    GroebnerBasis basis_a;
    GroebnerBasis basis_b;

    bool equal() const { return by_mutual_reduction; }
    bool consistent() const { return by_mutual_reduction == by_reduced_basis; }
};

inline IdealComparison compare_ideals(const GroebnerBasis& a, std::span<const Binomial> gens_a,
                                      const GroebnerBasis& b, std::span<const Binomial> gens_b) {
    IdealComparison out;
    out.by_mutual_reduction = std::all_of(gens_a.begin(), gens_a.end(), [&](const Binomial& g) { return ideal_member(g, b); }) &&
                              std::all_of(gens_b.begin(), gens_b.end(), [&](const Binomial& g) { return ideal_member(g, a); });
    out.by_reduced_basis = a.reduced && b.reduced && a.order == b.order && a.elements == b.elements;
    out.basis_a = a;
    out.basis_b = b;
    return out;
}

inline IdealComparison compare_ideals(std::span<const Binomial> gens_a, std::span<const Binomial> gens_b,
                                      const MonomialOrder& order, const GroebnerBudget& budget = {}) {
    GroebnerBasis a = buchberger(gens_a, order, budget);
    GroebnerBasis b = buchberger(gens_b, order, budget);
    return compare_ideals(a, gens_a, b, gens_b);
}

/// True iff ⟨gens_a⟩ = ⟨gens_b⟩. Both decision routes are evaluated and
/// must agree.
inline bool ideal_equal(std::span<const Binomial> gens_a, std::span<const Binomial> gens_b,
                        const MonomialOrder& order, const GroebnerBudget& budget = {}) {
    const IdealComparison c = compare_ideals(gens_a, gens_b, order, budget);
    if (!c.consistent())
        throw InternalInconsistency("mutual reduction and reduced-basis identity disagree on ideal equality");
    return c.equal();
}

inline bool ideal_equal(const std::vector<Binomial>& a, const std::vector<Binomial>& b, const MonomialOrder& order,
                        const GroebnerBudget& budget = {}) {
    return ideal_equal(std::span<const Binomial>(a), std::span<const Binomial>(b), order, budget);
}

/// Every element has degree 2 in both terms and squarefree terms.
inline bool is_squarefree_quadratic(const GroebnerBasis& gb) {
    return std::all_of(gb.elements.begin(), gb.elements.end(), [](const Binomial& b) {
        return b.plus().degree() == 2 && b.minus().degree() == 2 && b.plus().is_squarefree() &&
               b.minus().is_squarefree();
    });
}

} // namespace polyprime
