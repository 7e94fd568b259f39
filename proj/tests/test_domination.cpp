#include <random>

#include <gtest/gtest.h>

#include <domcover/bounds.hpp>
#include <domcover/domination.hpp>

using namespace domcover;

namespace {

constexpr DominationKind plain = DominationKind::plain;
constexpr DominationKind total = DominationKind::total;
constexpr DominationKind connected = DominationKind::connected;

Graph torus(std::size_t a, std::size_t b) { return cartesian_product(cycle(a), cycle(b)); }

}  // namespace

TEST(Verifiers, Dominating) {
    for (const Graph& g : {petersen(), cycle(7), grid(3, 3)}) {
        VertexSet all(g.order());
        all.set();
        EXPECT_TRUE(is_dominating(g, all));
    }
    // a minimum set of Petersen: 1, 3, d (ids 0, 2, 8)
    EXPECT_TRUE(is_dominating(petersen(), make_set(10, {0, 2, 8})));
    EXPECT_FALSE(is_dominating(cycle(6), make_set(6, {0})));
}

TEST(Verifiers, TotalDominating) {
    EXPECT_TRUE(is_total_dominating(cycle(4), make_set(4, {0, 1})));
    Graph with_isolated = from_edge_list(3, {{0, 1}});
    VertexSet all(3);
    all.set();
    EXPECT_FALSE(is_total_dominating(with_isolated, all));
    for (Vertex v = 0; v < 10; ++v) EXPECT_FALSE(is_total_dominating(petersen(), make_set(10, {v})));
}

TEST(Verifiers, ConnectedDominating) {
    EXPECT_TRUE(is_connected_dominating(cycle(5), make_set(5, {0, 1, 2})));
    EXPECT_TRUE(is_dominating(cycle(6), make_set(6, {0, 3})));
    EXPECT_FALSE(is_connected_dominating(cycle(6), make_set(6, {0, 3})));
    EXPECT_TRUE(is_connected_dominating(path(2), make_set(2, {0})));
    EXPECT_FALSE(is_connected_dominating(path(2), make_set(2, {})));
}

TEST(Verifiers, Efficient) {
    Graph n = torus(3, 3);
    for (Vertex v = 0; v < 9; ++v) EXPECT_FALSE(is_efficient_dominating(n, make_set(9, {v})));
    EXPECT_TRUE(is_efficient_dominating(Graph::from_edges(1, {}), make_set(1, {0})));
    EXPECT_FALSE(is_efficient_dominating(cycle(6), make_set(6, {0, 2, 4})));
    EXPECT_TRUE(is_efficient_dominating(cycle(6), make_set(6, {0, 3})));
}

TEST(Solver, NamedGraphValues) {
    struct Case {
        Graph g;
        DominationKind kind;
        std::size_t value;
    };
    const std::vector<Case> cases{
        {petersen(), plain, 3},      {petersen(), total, 4},      {petersen(), connected, 4},
        {dodecahedron(), plain, 6},  {dodecahedron(), total, 8},  {dodecahedron(), connected, 10},
        {torus(3, 3), plain, 3},
    };
    for (const auto& c : cases) {
        auto cert = domination_number(c.g, c.kind);
        EXPECT_TRUE(cert.optimal);
        EXPECT_EQ(cert.value, c.value) << c.g.name() << " " << to_string(c.kind);
        EXPECT_EQ(cert.set.count(), cert.value);
        EXPECT_TRUE(verify(c.g, cert.set, c.kind));
    }
}

TEST(Solver, ConnectedDominationOfCycles) {
    for (std::size_t n = 3; n <= 12; ++n) {
        auto cert = domination_number(cycle(n), connected);
        EXPECT_TRUE(cert.optimal);
        EXPECT_EQ(cert.value, n - 2);
    }
}

TEST(Solver, Preconditions) {
    EXPECT_THROW(domination_number(Graph{}, plain), DominationError);
    EXPECT_THROW(domination_number(from_edge_list(3, {{0, 1}}), total), DominationError);
    EXPECT_THROW(domination_number(from_edge_list(4, {{0, 1}, {2, 3}}), connected), DominationError);
    EXPECT_THROW(brute_force_number(cycle(25), plain), DominationError);
    // isolated vertices are fine for plain domination
    EXPECT_EQ(domination_number(from_edge_list(3, {{0, 1}}), plain).value, 2u);
}

TEST(Solver, BudgetExhaustionReturnsIncumbent) {
    auto cert = domination_number(dodecahedron(), connected, 5);
    EXPECT_FALSE(cert.optimal);
    EXPECT_TRUE(is_connected_dominating(dodecahedron(), cert.set));
    EXPECT_GE(cert.value, 10u);
}

TEST(BruteForce, SmallCases) {
    EXPECT_EQ(brute_force_number(cycle(6), plain), 2u);
    for (std::size_t n = 3; n <= 15; ++n) EXPECT_EQ(brute_force_number(cycle(n), plain), (n + 2) / 3);
    EXPECT_EQ(brute_force_number(Graph::from_edges(1, {}), plain), 1u);
    EXPECT_EQ(brute_force_number(petersen(), plain), 3u);
    EXPECT_EQ(brute_force_number(petersen(), total), 4u);
    EXPECT_EQ(brute_force_number(petersen(), connected), 4u);
}

TEST(Greedy, HandTraceOnC5) {
    auto t = greedy_dominating_set(cycle(5));
    EXPECT_EQ(t.order, (std::vector<Vertex>{0, 2}));
    EXPECT_EQ(t.white_counts, (std::vector<std::size_t>{3, 2}));
    EXPECT_EQ(t.final_set, make_set(5, {0, 2}));
}

TEST(Greedy, SingleVertex) {
    auto t = greedy_dominating_set(Graph::from_edges(1, {}));
    EXPECT_EQ(t.order, (std::vector<Vertex>{0}));
    EXPECT_EQ(t.white_counts, (std::vector<std::size_t>{1}));
}

TEST(Greedy, PetersenWithinHarmonicFactor) {
    auto t = greedy_dominating_set(petersen());
    EXPECT_TRUE(is_dominating(petersen(), t.final_set));
    // H(3) * 3 = 11/2
    EXPECT_LE(Rational(static_cast<long long>(t.final_set.count())), harmonic(3) * 3);
    EXPECT_LE(t.final_set.count(), 5u);
}

TEST(Greedy, EachChoiceWasMaximal) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_connected(1 + rng() % 15, 0.3, rng);
        auto t = greedy_dominating_set(g);
        std::vector<bool> white(g.order(), true);
        for (std::size_t step = 0; step < t.order.size(); ++step) {
            std::size_t best = 0;
            for (Vertex v = 0; v < g.order(); ++v) {
                std::size_t w = white[v];
                for (Vertex u : g.neighbors(v)) w += white[u];
                best = std::max(best, w);
            }
            EXPECT_EQ(t.white_counts[step], best);
            white[t.order[step]] = false;
            for (Vertex u : g.neighbors(t.order[step])) white[u] = false;
        }
        EXPECT_TRUE(std::none_of(white.begin(), white.end(), [](bool b) { return b; }));
    }
}

TEST(PerfectCode, DiagonalCodes) {
    for (std::size_t n : {5u, 10u, 15u}) {
        auto s = diagonal_perfect_code(n);
        EXPECT_EQ(s.count(), n * n / 5);
        // independent check: count dominators of each (i, j) from coordinates
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                int hits = 0;
                const std::size_t around[5][2] = {{i, j}, {(i + 1) % n, j}, {(i + n - 1) % n, j},
                                                  {i, (j + 1) % n}, {i, (j + n - 1) % n}};
                for (auto& c : around) hits += s.test(c[0] * n + c[1]) ? 1 : 0;
                EXPECT_EQ(hits, 1);
            }
        }
        EXPECT_TRUE(is_efficient_dominating(torus(n, n), s));
    }
    EXPECT_THROW(diagonal_perfect_code(12), DominationError);
    EXPECT_THROW(diagonal_perfect_code(0), DominationError);
}

// ---------------------------------------------------------------------------
// properties over random graphs

TEST(SolverProperties, AgreesWithBruteForce) {
    std::mt19937_64 rng(314159);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng() % 12;
        Graph g = random_connected(n, std::uniform_real_distribution<double>(0.0, 0.7)(rng), rng);
        for (auto kind : {plain, total, connected}) {
            if (kind == total && has_isolated_vertex(g)) continue;
            auto cert = domination_number(g, kind);
            ASSERT_TRUE(cert.optimal);
            ASSERT_TRUE(verify(g, cert.set, kind));
            ASSERT_EQ(cert.value, brute_force_number(g, kind)) << to_graph6(g) << " " << to_string(kind);
        }
    }
}

TEST(SolverProperties, ChainSandwichAndGreedy) {
    std::mt19937_64 rng(271828);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + rng() % 14;
        Graph g = random_connected(n, std::uniform_real_distribution<double>(0.0, 0.8)(rng), rng);
        const auto st = stats(g);
        const auto gamma = domination_number(g, plain).value;
        const auto gamma_t = domination_number(g, total).value;
        const auto gamma_c = domination_number(g, connected).value;
        EXPECT_LE(gamma, gamma_t);
        EXPECT_LE(gamma, gamma_c);

        auto [lo, hi] = classical_bounds(g, plain);
        EXPECT_TRUE(check_value(gamma, lo, hi, "gamma").empty());
        auto [tlo, thi] = classical_bounds(g, total);
        EXPECT_TRUE(check_value(gamma_t, tlo, thi, "gamma_t").empty());

        auto greedy = greedy_dominating_set(g).final_set.count();
        EXPECT_LE(Rational(static_cast<long long>(greedy)), harmonic(st.max_degree) * static_cast<long long>(gamma));
    }
}

TEST(SolverProperties, EfficientSetsMeetTheDegreeBound) {
    // r-regular graphs with a perfect code: C_{3m} (r=2) and the 5-divisible tori (r=4)
    for (std::size_t m = 1; m <= 6; ++m) {
        Graph c = cycle(3 * m);
        VertexSet s(3 * m);
        for (std::size_t i = 0; i < 3 * m; i += 3) s.set(i);
        ASSERT_TRUE(is_efficient_dominating(c, s));
        EXPECT_EQ(domination_number(c, plain).value, s.count());
        EXPECT_EQ(s.count() * 3, c.order());
    }
    auto code = diagonal_perfect_code(5);
    EXPECT_EQ(domination_number(torus(5, 5), plain).value, code.count());
}
