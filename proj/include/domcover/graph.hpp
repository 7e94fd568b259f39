#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace domcover {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Dense bitset over the vertex ids 0..n-1 of one graph.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Raised for malformed input: bad edge lists, bad graph6, bad files.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline VertexSet make_set(std::size_t n, std::initializer_list<Vertex> members = {}) {
    VertexSet s(n);
    for (Vertex v : members) s.set(v);
    return s;
}

inline std::vector<Vertex> members(const VertexSet& s) {
    std::vector<Vertex> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.push_back(v);
    return out;
}

/// Simple undirected graph with sorted adjacency lists. Immutable once built;
/// two graphs compare equal iff their labelled edge sets coincide.
class Graph {
public:
    Graph() = default;

    /// Builds from an explicit edge list. Self-loops, repeated edges (in either
    /// orientation) and out-of-range endpoints are rejected.
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges, std::string name = {}) {
        Graph g;
        g.adj_.assign(n, {});
        g.name_ = std::move(name);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) {
                throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                 "} has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
            }
            if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (Vertex v = 0; v < n; ++v) {
            auto& a = g.adj_[v];
            std::sort(a.begin(), a.end());
            if (auto it = std::adjacent_find(a.begin(), a.end()); it != a.end()) {
                throw GraphError("duplicate edge {" + std::to_string(std::min(v, *it)) + "," +
                                 std::to_string(std::max(v, *it)) + "}");
            }
        }
        g.m_ = edges.size();
        return g;
    }

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return m_; }
    const std::string& name() const { return name_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    bool adjacent(Vertex u, Vertex v) const {
        const auto& a = adj_.at(u);
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// Edges {u,v} with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < adj_.size(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    VertexSet open_neighborhood(Vertex v) const {
        VertexSet s(order());
        for (Vertex u : adj_.at(v)) s.set(u);
        return s;
    }

    VertexSet closed_neighborhood(Vertex v) const {
        auto s = open_neighborhood(v);
        s.set(v);
        return s;
    }

    Graph with_name(std::string name) const {
        Graph g = *this;
        g.name_ = std::move(name);
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
    std::string name_;
};

inline Graph from_edge_list(std::size_t n, const std::vector<Edge>& edges) {
    return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// structure

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;
    bool connected = false;
    std::optional<std::size_t> regular_degree;
};

/// Component label per vertex, labels numbered in order of lowest member.
inline std::vector<std::size_t> component_labels(const Graph& g, std::size_t* count = nullptr) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(g.order(), unset);
    std::size_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[s] != unset) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v)) {
                if (label[u] == unset) {
                    label[u] = next;
                    stack.push_back(u);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return label;
}

inline std::size_t component_count(const Graph& g) {
    std::size_t c = 0;
    component_labels(g, &c);
    return c;
}

/// An empty graph counts as disconnected; a single vertex is connected.
inline bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

/// Whether the subgraph induced by `s` is connected (false for the empty set).
inline bool induces_connected(const Graph& g, const VertexSet& s) {
    auto first = s.find_first();
    if (first == VertexSet::npos) return false;
    VertexSet seen(g.order());
    seen.set(first);
    std::vector<Vertex> stack{first};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v)) {
            if (s.test(u) && !seen.test(u)) {
                seen.set(u);
                stack.push_back(u);
            }
        }
    }
    return seen == s;
}

inline GraphStats stats(const Graph& g) {
    GraphStats st;
    st.n = g.order();
    st.m = g.size();
    if (st.n == 0) return st;
    st.min_degree = g.degree(0);
    for (Vertex v = 0; v < st.n; ++v) {
        st.max_degree = std::max(st.max_degree, g.degree(v));
        st.min_degree = std::min(st.min_degree, g.degree(v));
    }
    st.connected = is_connected(g);
    if (st.min_degree == st.max_degree) st.regular_degree = st.max_degree;
    return st;
}

inline std::size_t max_degree(const Graph& g) { return stats(g).max_degree; }

inline bool has_isolated_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

/// Subgraph induced by `s`, relabelled to 0..|s|-1 in increasing id order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<std::size_t> index(g.order(), 0);
    std::size_t k = 0;
    for (Vertex v : members(s)) index[v] = k++;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (s.test(u) && s.test(v)) edges.emplace_back(index[u], index[v]);
    return Graph::from_edges(k, edges);
}

// ---------------------------------------------------------------------------
// generators

inline Graph cycle(std::size_t n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e, "C" + std::to_string(n));
}

inline Graph path(std::size_t n) {
    if (n < 1) throw GraphError("path needs at least 1 vertex");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e, "P" + std::to_string(n));
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e, "K" + std::to_string(n));
}

/// Petersen graph labelled as in the usual drawing with outer cycle 1..5 and
/// inner vertices a..e: ids 0-4 are 1-5, ids 5-9 are a-e. Spokes are 1a, 2d,
/// 3b, 4e, 5c and the inner 5-cycle is a-b-c-d-e.
inline Graph petersen() {
    enum : Vertex { v1, v2, v3, v4, v5, a, b, c, d, e };
    return Graph::from_edges(10,
                             {{v1, v2}, {v2, v3}, {v3, v4}, {v4, v5}, {v5, v1},
                              {v1, a},  {v2, d},  {v3, b},  {v4, e},  {v5, c},
                              {a, b},   {b, c},   {c, d},   {d, e},   {e, a}},
                             "petersen");
}

/// Dodecahedron labelled by its double-cover projection onto petersen():
/// ids 0-9 carry the labels 1-5,a-e and ids 10-19 the primed copies, so
/// vertex v lies over petersen vertex v % 10. Inner 5-cycle a-b-c-d-e, middle
/// 10-cycle 1-2'-3-4'-5-1'-2-3'-4-5', outer 5-cycle a'-b'-c'-d'-e'.
inline Graph dodecahedron() {
    enum : Vertex { v1, v2, v3, v4, v5, a, b, c, d, e, p1, p2, p3, p4, p5, pa, pb, pc, pd, pe };
    return Graph::from_edges(20,
                             {// inner pentagon and its spokes
                              {a, b}, {b, c}, {c, d}, {d, e}, {e, a},
                              {v1, a}, {v3, b}, {v5, c}, {v2, d}, {v4, e},
                              // middle decagon
                              {v1, p2}, {p2, v3}, {v3, p4}, {p4, v5}, {v5, p1},
                              {p1, v2}, {v2, p3}, {p3, v4}, {v4, p5}, {p5, v1},
                              // outer spokes and pentagon
                              {p2, pd}, {p4, pe}, {p1, pa}, {p3, pb}, {p5, pc},
                              {pa, pb}, {pb, pc}, {pc, pd}, {pd, pe}, {pe, pa}},
                             "dodecahedron");
}

/// rows x cols grid; vertex (r, c) has id r*cols + c.
inline Graph grid(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) throw GraphError("grid needs rows, cols >= 1");
    std::vector<Edge> e;
    for (Vertex r = 0; r < rows; ++r) {
        for (Vertex c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(r * cols + c, r * cols + c + 1);
            if (r + 1 < rows) e.emplace_back(r * cols + c, (r + 1) * cols + c);
        }
    }
    return Graph::from_edges(rows * cols, e, "grid" + std::to_string(rows) + "x" + std::to_string(cols));
}

/// Cartesian product; vertex (u, v) has id u * |V(h)| + v.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const std::size_t nh = h.order();
    std::vector<Edge> e;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (auto [a, b] : h.edges()) e.emplace_back(u * nh + a, u * nh + b);
    }
    for (auto [a, b] : g.edges()) {
        for (Vertex v = 0; v < nh; ++v) e.emplace_back(a * nh + v, b * nh + v);
    }
    std::string name;
    if (!g.name().empty() && !h.name().empty()) name = g.name() + "x" + h.name();
    return Graph::from_edges(g.order() * nh, e, name);
}

/// Random spanning tree plus each remaining pair with probability p.
template <class Rng>
Graph random_connected(std::size_t n, double p, Rng& rng) {
    if (n < 1) throw GraphError("random_connected needs n >= 1");
    std::vector<Vertex> order(n);
    for (Vertex i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    std::vector<Edge> e;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        Vertex u = order[i], v = order[pick(rng)];
        present[u][v] = present[v][u] = true;
        e.emplace_back(u, v);
    }
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!present[u][v] && coin(rng)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

/// Uniform-ish random r-regular graph by the pairing model with restarts.
template <class Rng>
Graph random_regular(std::size_t n, std::size_t r, Rng& rng, bool require_connected = true) {
    if ((n * r) % 2 != 0 || r >= n) throw GraphError("no simple " + std::to_string(r) + "-regular graph on " +
                                                     std::to_string(n) + " vertices");
    std::vector<Vertex> points(n * r);
    for (;;) {
        for (std::size_t i = 0; i < points.size(); ++i) points[i] = i / r;
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<Edge> e;
        std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
        bool ok = true;
        for (std::size_t i = 0; ok && i < points.size(); i += 2) {
            Vertex u = points[i], v = points[i + 1];
            if (u == v || present[u][v]) ok = false;
            else {
                present[u][v] = present[v][u] = true;
                e.emplace_back(u, v);
            }
        }
        if (!ok) continue;
        Graph g = Graph::from_edges(n, e);
        if (!require_connected || is_connected(g)) return g;
    }
}

// ---------------------------------------------------------------------------
// graph6

namespace detail {

inline void append_graph6_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

}  // namespace detail

/// Standard graph6: size header, then the upper triangle column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, offset 63.
inline std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    detail::append_graph6_size(out, n);
    int bits = 0, acc = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    // tolerate the optional header and a trailing newline
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw GraphError("graph6: empty input");
    for (char ch : text) {
        if (ch < 63 || ch > 126) throw GraphError("graph6: byte out of range 63..126");
    }
    std::size_t pos = 0;
    auto take = [&](int count) {
        std::size_t v = 0;
        for (int i = 0; i < count; ++i) {
            if (pos >= text.size()) throw GraphError("graph6: truncated size header");
            v = (v << 6) | static_cast<std::size_t>(text[pos++] - 63);
        }
        return v;
    };
    std::size_t n;
    if (text[0] != 126) {
        n = take(1);
    } else if (text.size() > 1 && text[1] != 126) {
        pos = 1;
        n = take(3);
    } else {
        pos = 2;
        n = take(6);
    }
    const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - pos != nbytes) {
        throw GraphError("graph6: expected " + std::to_string(nbytes) + " data bytes for n=" + std::to_string(n) +
                         ", found " + std::to_string(text.size() - pos));
    }
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (nbits % 6 != 0) {
        int last = text.back() - 63;
        if (last & ((1 << (6 - nbits % 6)) - 1)) throw GraphError("graph6: nonzero padding bits");
    }
    return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// plain edge-list text: "n m" then m lines "u v"

inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline Graph read_edge_list(std::istream& is) {
    std::size_t n, m;
    if (!(is >> n >> m)) throw GraphError("edge list: missing 'n m' header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Vertex u, v;
        if (!(is >> u >> v)) throw GraphError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        edges.emplace_back(u, v);
    }
    std::string extra;
    if (is >> extra) throw GraphError("edge list: trailing data '" + extra + "'");
    return Graph::from_edges(n, edges);
}

/// Reads either format: a first byte that is a digit means edge list,
/// anything else is taken as graph6 (first non-empty line).
inline Graph read_graph(std::istream& is) {
    std::string all((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    auto start = all.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw GraphError("empty graph input");
    if (all[start] >= '0' && all[start] <= '9') {
        std::istringstream ss(all.substr(start));
        return read_edge_list(ss);
    }
    auto end = all.find('\n', start);
    return parse_graph6(std::string_view(all).substr(start, end == std::string::npos ? std::string::npos : end - start));
}

}  // namespace domcover
