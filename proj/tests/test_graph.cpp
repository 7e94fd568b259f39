#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include <domcover/graph.hpp>

using namespace domcover;

namespace {

std::size_t degree_sum(const Graph& g) {
    std::size_t s = 0;
    for (Vertex v = 0; v < g.order(); ++v) s += g.degree(v);
    return s;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

}  // namespace

TEST(Graph, TriangleFromEdgeList) {
    Graph g = from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    EXPECT_EQ(g.order(), 3u);
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(g, cycle(3));
}

TEST(Graph, C5HasAllDegreesTwo) {
    Graph g = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    for (Vertex v = 0; v < 5; ++v) {
        std::size_t count = 0;
        for (Vertex u = 0; u < 5; ++u) count += g.adjacent(v, u) ? 1 : 0;
        EXPECT_EQ(count, 2u);
    }
}

TEST(Graph, RejectsBadEdges) {
    EXPECT_THROW(from_edge_list(2, {{0, 0}}), GraphError);
    EXPECT_THROW(from_edge_list(3, {{0, 1}, {1, 0}}), GraphError);
    EXPECT_THROW(from_edge_list(3, {{0, 1}, {0, 1}}), GraphError);
    EXPECT_THROW(from_edge_list(3, {{0, 3}}), GraphError);
}

TEST(Graph, AdjacencyIsSortedAndSymmetric) {
    Graph g = from_edge_list(5, {{4, 0}, {2, 0}, {3, 1}, {0, 1}});
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& a = g.neighbors(v);
        EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
        for (Vertex u : a) EXPECT_TRUE(g.adjacent(u, v));
    }
}

TEST(Generators, NamedGraphs) {
    auto p = stats(petersen());
    EXPECT_EQ(p.n, 10u);
    EXPECT_EQ(p.m, 15u);
    EXPECT_EQ(p.regular_degree, 3u);
    EXPECT_TRUE(p.connected);

    auto d = stats(dodecahedron());
    EXPECT_EQ(d.n, 20u);
    EXPECT_EQ(d.m, 30u);
    EXPECT_EQ(d.regular_degree, 3u);
    EXPECT_TRUE(d.connected);

    EXPECT_THROW(cycle(2), GraphError);
    EXPECT_THROW(grid(0, 3), GraphError);
}

TEST(Generators, TorusC3C3) {
    Graph n = cartesian_product(cycle(3), cycle(3));
    auto st = stats(n);
    EXPECT_EQ(st.n, 9u);
    EXPECT_EQ(st.regular_degree, 4u);
    EXPECT_EQ(st.m, 18u);
}

TEST(Generators, GridEdgeCount) {
    for (std::size_t r = 1; r <= 6; ++r) {
        for (std::size_t c = 1; c <= 9; ++c) {
            Graph g = grid(r, c);
            EXPECT_EQ(g.order(), r * c);
            EXPECT_EQ(g.size(), r * (c - 1) + c * (r - 1));
        }
    }
    EXPECT_EQ(grid(5, 8).size(), 67u);
}

TEST(Generators, HandshakeOnGenerators) {
    std::vector<Graph> gs{cycle(7), path(6), petersen(), dodecahedron(), grid(4, 5), complete(6),
                          cartesian_product(cycle(4), path(5)), cartesian_product(petersen(), cycle(3))};
    for (const auto& g : gs) EXPECT_EQ(degree_sum(g), 2 * g.size()) << g.name();
}

TEST(Generators, CartesianProductDegrees) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph a = random_graph(1 + rng() % 6, 0.5, rng), b = random_graph(1 + rng() % 6, 0.5, rng);
        Graph p = cartesian_product(a, b);
        for (Vertex u = 0; u < a.order(); ++u)
            for (Vertex v = 0; v < b.order(); ++v)
                EXPECT_EQ(p.degree(u * b.order() + v), a.degree(u) + b.degree(v));
    }
}

TEST(Stats, SingleVertex) {
    auto st = stats(Graph::from_edges(1, {}));
    EXPECT_EQ(st.max_degree, 0u);
    EXPECT_EQ(st.min_degree, 0u);
    EXPECT_TRUE(st.connected);
}

TEST(Stats, Disconnected) {
    Graph g = from_edge_list(4, {{0, 1}, {2, 3}});
    EXPECT_FALSE(stats(g).connected);
    EXPECT_EQ(component_count(g), 2u);
    EXPECT_TRUE(induces_connected(g, make_set(4, {0, 1})));
    EXPECT_FALSE(induces_connected(g, make_set(4, {0, 2})));
}

TEST(Graph6, KnownString) {
    Graph g = parse_graph6("D?{");
    EXPECT_EQ(g.order(), 5u);
    EXPECT_EQ(to_graph6(g), "D?{");
}

TEST(Graph6, StandardEncodingOfSmallGraphs) {
    EXPECT_EQ(to_graph6(complete(4)), "C~");
    EXPECT_EQ(to_graph6(path(2)), "A_");
    EXPECT_EQ(to_graph6(Graph::from_edges(1, {})), "@");
}

TEST(Graph6, Errors) {
    EXPECT_THROW(parse_graph6(""), GraphError);
    EXPECT_THROW(parse_graph6("D?{?"), GraphError);   // trailing garbage
    EXPECT_THROW(parse_graph6("D?"), GraphError);     // too few bytes
    EXPECT_THROW(parse_graph6("D?\x01"), GraphError); // byte out of range
}

TEST(Graph6, TriangleRoundTrip) {
    Graph g = parse_graph6(to_graph6(cycle(3)));
    EXPECT_EQ(g.size(), 3u);
}

TEST(Graph6, RoundTripRandomCorpus) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = rng() % 21;
        Graph g = random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng);
        EXPECT_EQ(parse_graph6(to_graph6(g)), g);
    }
    Graph big = random_graph(70, 0.1, rng);  // 4-byte size header
    EXPECT_EQ(parse_graph6(to_graph6(big)), big);
}

TEST(EdgeListFormat, RoundTripAndErrors) {
    std::stringstream ss;
    write_edge_list(ss, petersen());
    EXPECT_EQ(read_edge_list(ss), petersen());

    std::istringstream short_list("3 2\n0 1\n");
    EXPECT_THROW(read_edge_list(short_list), GraphError);
    std::istringstream dup("3 2\n0 1\n1 0\n");
    EXPECT_THROW(read_edge_list(dup), GraphError);
}

TEST(ReadGraph, DetectsFormat) {
    std::istringstream g6("  " + to_graph6(petersen()) + "\n");
    EXPECT_EQ(read_graph(g6), petersen());
    std::istringstream el("2 1\n0 1\n");
    EXPECT_EQ(read_graph(el), path(2));
}
