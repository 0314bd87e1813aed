#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "polyprime/groebner.hpp"

using namespace polyprime;

namespace {

Monomial mono(std::vector<Monomial::Exponent> e) { return Monomial(std::move(e)); }

Monomial random_monomial(std::mt19937& rng, std::size_t n, unsigned degree) {
    std::vector<Monomial::Exponent> e(n, 0);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (unsigned k = 0; k < degree; ++k) ++e[pick(rng)];
    return Monomial(std::move(e));
}

std::vector<MonomialOrder> orders_for(std::size_t n) {
    std::vector<std::size_t> rev(n);
    for (std::size_t i = 0; i < n; ++i) rev[i] = n - 1 - i;
    std::vector<MonomialOrder> out{MonomialOrder::natural(OrderKind::lex, n),
                                   MonomialOrder::natural(OrderKind::deglex, n),
                                   MonomialOrder::natural(OrderKind::degrevlex, n),
                                   MonomialOrder(OrderKind::degrevlex, rev), MonomialOrder(OrderKind::lex, rev)};
    if (n >= 2)
        out.emplace_back(OrderKind::block, rev,
                         std::vector<OrderBlock>{{1, OrderKind::degrevlex}, {n - 1, OrderKind::degrevlex}});
    return out;
}

// Every S-pair of the basis reduces to zero by the basis.
bool s_pairs_vanish(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
            const Binomial& f = gb.elements[i];
            const Binomial& g = gb.elements[j];
            const Monomial l = lcm(f.plus(), g.plus());
            const Monomial a = l.replace(f.plus(), f.minus());
            const Monomial b = l.replace(g.plus(), g.minus());
            if (a == b) continue;
            if (!is_zero(reduce(Binomial(a, b), gb.elements, gb.order))) return false;
        }
    return true;
}

void expect_reduced(const GroebnerBasis& gb) {
    ASSERT_TRUE(gb.reduced);
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        const Binomial& b = gb.elements[i];
        ASSERT_TRUE(gb.order.greater(b.plus(), b.minus()));
        for (std::size_t j = 0; j < gb.elements.size(); ++j) {
            ASSERT_FALSE(gb.elements[j].plus().divides(b.minus()));
            if (i != j) {
                ASSERT_FALSE(gb.elements[j].plus().divides(b.plus()));
            }
        }
        if (i) {
            ASSERT_TRUE(gb.order.less(gb.elements[i - 1].plus(), b.plus()));
        }
    }
    EXPECT_TRUE(s_pairs_vanish(gb));
}

std::vector<Binomial> random_quadrics(std::mt19937& rng, std::size_t n, std::size_t count) {
    std::vector<Binomial> out;
    while (out.size() < count) {
        Monomial a = random_monomial(rng, n, 2), b = random_monomial(rng, n, 2);
        if (a == b) continue;
        out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

} // namespace

TEST(MonomialOrder, Examples) {
    const MonomialOrder lex = MonomialOrder::natural(OrderKind::lex, 3);
    EXPECT_EQ(compare(lex, mono({1, 0, 0}), mono({0, 1, 0})), Ordering::greater);
    const MonomialOrder drl = MonomialOrder::natural(OrderKind::degrevlex, 3);
    // Same degree; the last differing variable decides and x3 > 0 loses.
    EXPECT_EQ(compare(drl, mono({1, 0, 1}), mono({0, 2, 0})), Ordering::less);
    const MonomialOrder dl = MonomialOrder::natural(OrderKind::deglex, 3);
    EXPECT_EQ(compare(dl, mono({1, 0, 1}), mono({0, 2, 0})), Ordering::greater);
    EXPECT_EQ(compare(lex, mono({0, 0, 3}), mono({1, 0, 0})), Ordering::less);
    EXPECT_EQ(compare(dl, mono({0, 0, 3}), mono({1, 0, 0})), Ordering::greater);
    for (const MonomialOrder& o : orders_for(3)) EXPECT_EQ(compare(o, mono({2, 1, 0}), mono({2, 1, 0})), Ordering::equal);
}

TEST(MonomialOrder, RankingDecides) {
    const MonomialOrder o(OrderKind::lex, {2, 0, 1});
    EXPECT_TRUE(o.greater(mono({0, 0, 1}), mono({5, 0, 0})));
    EXPECT_TRUE(o.greater(mono({1, 0, 0}), mono({0, 3, 0})));
}

TEST(MonomialOrder, BlockOrderEliminates) {
    const MonomialOrder o(OrderKind::block, {0, 1, 2},
                          {{1, OrderKind::degrevlex}, {2, OrderKind::degrevlex}});
    EXPECT_TRUE(o.greater(mono({1, 0, 0}), mono({0, 4, 4})));
    EXPECT_TRUE(o.greater(mono({1, 1, 0}), mono({1, 0, 1})));
}

TEST(MonomialOrder, Errors) {
    const MonomialOrder o = MonomialOrder::natural(OrderKind::lex, 2);
    EXPECT_THROW(o.compare(mono({1, 0}), mono({1, 0, 0})), VariableSetMismatch);
    EXPECT_THROW(MonomialOrder(OrderKind::lex, {0, 0}), Error);
    EXPECT_THROW(MonomialOrder(OrderKind::block, {0, 1}, {{1, OrderKind::lex}}), Error);
    EXPECT_EQ(parse_order_kind("degrevlex"), OrderKind::degrevlex);
    EXPECT_THROW(parse_order_kind("revlex"), Error);
}

TEST(MonomialOrder, TotalMultiplicativeWellOrder) {
    std::mt19937 rng(3);
    for (const MonomialOrder& o : orders_for(4)) {
        const Monomial one(4);
        for (int trial = 0; trial < 400; ++trial) {
            const Monomial a = random_monomial(rng, 4, rng() % 5);
            const Monomial b = random_monomial(rng, 4, rng() % 5);
            const Monomial c = random_monomial(rng, 4, rng() % 5);
            const Monomial m = random_monomial(rng, 4, rng() % 3);
            const int ab = o.compare(a, b);
            ASSERT_EQ(ab, -o.compare(b, a));
            ASSERT_EQ(ab == 0, a == b);
            ASSERT_EQ(o.compare(a * m, b * m), ab);
            if (o.less(a, b) && o.less(b, c)) {
                ASSERT_TRUE(o.less(a, c));
            }
            if (!a.is_one()) {
                ASSERT_TRUE(o.greater(a, one));
            }
        }
    }
}

TEST(Monomial, Arithmetic) {
    const Monomial a = mono({2, 1, 0}), b = mono({1, 1, 3});
    EXPECT_EQ(lcm(a, b), mono({2, 1, 3}));
    EXPECT_EQ(gcd(a, b), mono({1, 1, 0}));
    EXPECT_TRUE(mono({1, 0, 0}).divides(a));
    EXPECT_FALSE(a.divides(b));
    EXPECT_EQ(a.quotient(mono({1, 1, 0})), mono({1, 0, 0}));
    EXPECT_EQ(a.replace(mono({0, 1, 0}), mono({0, 0, 2})), mono({2, 0, 2}));
    EXPECT_TRUE(mono({1, 0, 0}).coprime(mono({0, 2, 1})));
    EXPECT_FALSE(a.is_squarefree());
    EXPECT_EQ(b.degree(), 5u);
}

TEST(Binomial, Basics) {
    EXPECT_THROW(Binomial(mono({1, 0}), mono({1, 0})), Error);
    const Binomial b(mono({0, 2}), mono({1, 1}));
    const MonomialOrder lex = MonomialOrder::natural(OrderKind::lex, 2);
    EXPECT_EQ(b.oriented(lex).plus(), mono({1, 1}));
    EXPECT_EQ(b.leading(lex), mono({1, 1}));
    EXPECT_TRUE(b.same_up_to_sign(b.negated()));
    EXPECT_EQ(b.canonical(), b.negated().canonical());
    EXPECT_TRUE(is_zero(difference(mono({1, 1}), mono({1, 1}))));
    EXPECT_FALSE(is_zero(difference(mono({1, 1}), mono({0, 2}))));
}

TEST(Reduce, Examples) {
    const VariableSet vars = VariableSet::grid({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    const Binomial minor(mono({1, 0, 0, 1}), mono({0, 1, 1, 0}));
    const MonomialOrder o = MonomialOrder::natural(OrderKind::degrevlex, 4);
    EXPECT_TRUE(is_zero(reduce(minor, std::vector{minor}, o)));
    const auto r = reduce(minor, std::vector<Binomial>{}, o);
    ASSERT_FALSE(is_zero(r));
    EXPECT_TRUE(std::get<Binomial>(r).same_up_to_sign(minor));
    EXPECT_EQ(to_string(r, vars), to_string(minor.oriented(o), vars));
}

TEST(Buchberger, SingleGenerator) {
    const Binomial minor(mono({1, 0, 0, 1}), mono({0, 1, 1, 0}));
    for (const MonomialOrder& o : orders_for(4)) {
        const GroebnerBasis gb = buchberger(std::vector{minor}, o);
        ASSERT_EQ(gb.elements.size(), 1u);
        EXPECT_TRUE(gb.elements[0].same_up_to_sign(minor));
    }
}

TEST(Buchberger, LinearChain) {
    // x - y, y - z under lex x > y > z.
    const Binomial xy(mono({1, 0, 0}), mono({0, 1, 0}));
    const Binomial yz(mono({0, 1, 0}), mono({0, 0, 1}));
    const GroebnerBasis gb = buchberger(std::vector{xy, yz}, MonomialOrder::natural(OrderKind::lex, 3));
    ASSERT_EQ(gb.elements.size(), 2u);
    EXPECT_EQ(gb.elements[0], Binomial(mono({0, 1, 0}), mono({0, 0, 1})));
    EXPECT_EQ(gb.elements[1], Binomial(mono({1, 0, 0}), mono({0, 0, 1})));
}

TEST(Buchberger, TwistedCubic) {
    // Minors of [[a b c],[b c d]]: ac - b^2, ad - bc, bd - c^2.
    const std::vector<Binomial> gens{Binomial(mono({1, 0, 1, 0}), mono({0, 2, 0, 0})),
                                     Binomial(mono({1, 0, 0, 1}), mono({0, 1, 1, 0})),
                                     Binomial(mono({0, 1, 0, 1}), mono({0, 0, 2, 0}))};
    const GroebnerBasis drl = buchberger(gens, MonomialOrder::natural(OrderKind::degrevlex, 4));
    EXPECT_EQ(drl.elements.size(), 3u);
    expect_reduced(drl);
    const GroebnerBasis lex = buchberger(gens, MonomialOrder::natural(OrderKind::lex, 4));
    expect_reduced(lex);
    // a^2 d - b^3 lies in the ideal: both sides map to s^6 t^3.
    const Binomial cubic(mono({2, 0, 0, 1}), mono({0, 3, 0, 0}));
    EXPECT_TRUE(ideal_member(cubic, drl));
    EXPECT_TRUE(ideal_member(cubic, lex));
    EXPECT_FALSE(ideal_member(Binomial(mono({2, 0, 0, 0}), mono({0, 0, 0, 2})), drl));
}

TEST(Buchberger, BudgetIsEnforced) {
    const std::vector<Binomial> gens{Binomial(mono({1, 0, 1, 0}), mono({0, 2, 0, 0})),
                                     Binomial(mono({1, 0, 0, 1}), mono({0, 1, 1, 0})),
                                     Binomial(mono({0, 1, 0, 1}), mono({0, 0, 2, 0}))};
    const MonomialOrder lex = MonomialOrder::natural(OrderKind::lex, 4);
    EXPECT_THROW(buchberger(gens, lex, GroebnerBudget{1, 10'000}), BudgetExceeded);
    EXPECT_THROW(buchberger(gens, lex, GroebnerBudget{100'000, 2}), BudgetExceeded);
}

TEST(Buchberger, VariableMismatch) {
    const Binomial b(mono({1, 0}), mono({0, 1}));
    EXPECT_THROW(buchberger(std::vector{b}, MonomialOrder::natural(OrderKind::lex, 3)), VariableSetMismatch);
}

TEST(Buchberger, DeterministicUnderPermutation) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        auto gens = random_quadrics(rng, 5, 4);
        for (const MonomialOrder& o : orders_for(5)) {
            const GroebnerBasis a = buchberger(gens, o);
            auto shuffled = gens;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            for (auto& g : shuffled)
                if (rng() % 2) g = g.negated();
            const GroebnerBasis b = buchberger(shuffled, o);
            ASSERT_EQ(a.elements, b.elements);
        }
    }
}

TEST(Buchberger, RandomBasesAreReduced) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const auto gens = random_quadrics(rng, 5, 1 + rng() % 4);
        for (const MonomialOrder& o : orders_for(5)) {
            const GroebnerBasis gb = buchberger(gens, o);
            expect_reduced(gb);
            for (const Binomial& g : gens) ASSERT_TRUE(ideal_member(g, gb));
        }
    }
}

TEST(Buchberger, MembershipMatchesDenseLinearAlgebra) {
    std::mt19937 rng(29);
    std::size_t positives = 0, negatives = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + rng() % 2;
        const auto gens = random_quadrics(rng, n, 1 + rng() % 3);
        const oracle::DenseIdeal dense(n, gens);
        const auto orders = orders_for(n);
        std::vector<GroebnerBasis> bases;
        for (const MonomialOrder& o : orders) bases.push_back(buchberger(gens, o));
        for (int q = 0; q < 8; ++q) {
            const unsigned d = 2 + rng() % 5;
            Monomial a = random_monomial(rng, n, d);
            Monomial b = a;
            if (q % 2 == 0) {
                // Walk with generator moves to produce (likely) members.
                for (int step = 0; step < 4; ++step) {
                    const Binomial& g = gens[rng() % gens.size()];
                    if (g.plus().divides(b)) b = b.replace(g.plus(), g.minus());
                    else if (g.minus().divides(b)) b = b.replace(g.minus(), g.plus());
                }
            } else {
                b = random_monomial(rng, n, d);
            }
            if (a == b) continue;
            const Binomial f(a, b);
            const bool expected = dense.contains(f);
            (expected ? positives : negatives)++;
            for (const GroebnerBasis& gb : bases) ASSERT_EQ(ideal_member(f, gb), expected);
        }
    }
    EXPECT_GT(positives, 20u);
    EXPECT_GT(negatives, 20u);
}

TEST(IdealEqual, RoutesAgree) {
    const Binomial minor(mono({1, 0, 0, 1}), mono({0, 1, 1, 0}));
    const MonomialOrder o = MonomialOrder::natural(OrderKind::degrevlex, 4);
    EXPECT_TRUE(ideal_equal(std::vector{minor}, std::vector{minor.negated()}, o));
    const Binomial other(mono({2, 0, 0, 0}), mono({0, 0, 0, 2}));
    EXPECT_FALSE(ideal_equal(std::vector{minor}, std::vector{minor, other}, o));
    const IdealComparison c = compare_ideals(std::vector{minor}, std::vector{minor, other}, o);
    EXPECT_TRUE(c.consistent());
    EXPECT_FALSE(c.equal());
}

TEST(IdealEqual, InconsistencyIsDetected) {
    // Equal ideals given by bases under different orders: the reduced-basis
    // route cannot agree, and the comparison reports it.
    const std::vector<Binomial> gens{Binomial(mono({1, 0, 1, 0}), mono({0, 2, 0, 0})),
                                     Binomial(mono({1, 0, 0, 1}), mono({0, 1, 1, 0})),
                                     Binomial(mono({0, 1, 0, 1}), mono({0, 0, 2, 0}))};
    const GroebnerBasis a = buchberger(gens, MonomialOrder::natural(OrderKind::lex, 4));
    const GroebnerBasis b = buchberger(gens, MonomialOrder::natural(OrderKind::degrevlex, 4));
    const IdealComparison c = compare_ideals(a, gens, b, gens);
    EXPECT_TRUE(c.by_mutual_reduction);
    EXPECT_FALSE(c.by_reduced_basis);
    EXPECT_FALSE(c.consistent());
}

TEST(Groebner, SquarefreeQuadraticCheck) {
    const Binomial sq(mono({2, 0}), mono({0, 2}));
    const Binomial sf(mono({1, 1, 0, 0}), mono({0, 0, 1, 1}));
    EXPECT_FALSE(is_squarefree_quadratic(GroebnerBasis{MonomialOrder::natural(OrderKind::lex, 2), {sq}, true}));
    EXPECT_TRUE(is_squarefree_quadratic(GroebnerBasis{MonomialOrder::natural(OrderKind::lex, 4), {sf}, true}));
}
