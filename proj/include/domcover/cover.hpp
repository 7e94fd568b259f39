#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace domcover {

using Permutation = std::vector<std::size_t>;

inline bool is_permutation_of_range(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (auto x : p) {
        if (x >= p.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

/// One permutation of the sheets {0..k-1} per base edge. The permutation of
/// edge {u,v}, u < v, acts on the arc u->v; the arc v->u uses its inverse.
class VoltageAssignment {
public:
    /// `perms[i]` belongs to `base.edges()[i]`.
    VoltageAssignment(Graph base, std::size_t k, std::vector<Permutation> perms)
        : base_(std::move(base)), k_(k), perms_(std::move(perms)) {
        if (k_ < 1) throw GraphError("fold count must be at least 1");
        if (perms_.size() != base_.size()) {
            throw GraphError("voltage assignment needs " + std::to_string(base_.size()) + " permutations, got " +
                             std::to_string(perms_.size()));
        }
        inverse_.resize(perms_.size());
        for (std::size_t e = 0; e < perms_.size(); ++e) {
            if (perms_[e].size() != k_ || !is_permutation_of_range(perms_[e])) {
                throw GraphError("voltage on edge " + std::to_string(e) + " is not a permutation of 0.." +
                                 std::to_string(k_ - 1));
            }
            inverse_[e].resize(k_);
            for (std::size_t i = 0; i < k_; ++i) inverse_[e][perms_[e][i]] = i;
        }
    }

    static VoltageAssignment identity(Graph base, std::size_t k) {
        Permutation id(k);
        std::iota(id.begin(), id.end(), 0);
        std::vector<Permutation> perms(base.size(), id);
        return VoltageAssignment(std::move(base), k, std::move(perms));
    }

    const Graph& base() const { return base_; }
    std::size_t folds() const { return k_; }
    const std::vector<Permutation>& permutations() const { return perms_; }

    /// Sheet reached from sheet `i` over `from` when walking the arc from->to.
    std::size_t walk(Vertex from, Vertex to, std::size_t i) const {
        const std::size_t e = edge_index(std::min(from, to), std::max(from, to));
        return from < to ? perms_[e][i] : inverse_[e][i];
    }

    friend bool operator==(const VoltageAssignment& a, const VoltageAssignment& b) {
        return a.base_ == b.base_ && a.k_ == b.k_ && a.perms_ == b.perms_;
    }

private:
    std::size_t edge_index(Vertex u, Vertex v) const {
        // edges() is sorted lexicographically, so locate by counting
        std::size_t idx = 0;
        for (Vertex w = 0; w < u; ++w)
            for (Vertex x : base_.neighbors(w))
                if (x > w) ++idx;
        for (Vertex x : base_.neighbors(u)) {
            if (x == v) return idx;
            if (x > u) ++idx;
        }
        throw GraphError("no base edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }

    Graph base_;
    std::size_t k_;
    std::vector<Permutation> perms_;
    std::vector<Permutation> inverse_;
};

/// Vertex map from a total graph onto a base graph. Nothing is checked on
/// construction; see verify_projection().
struct CoveringProjection {
    Graph total;
    Graph base;
    std::vector<Vertex> map;

    Vertex operator()(Vertex v) const { return map.at(v); }

    /// Fold count implied by the vertex counts. Only meaningful for a verified
    /// projection over a connected base.
    std::size_t folds() const { return base.order() == 0 ? 0 : total.order() / base.order(); }
};

enum class Violation {
    none,
    shape,           // map length or entries out of range
    not_onto,
    degree_mismatch,
    not_injective,   // two neighbours of v share an image
    not_adjacent,    // a neighbour of v maps outside N_F(pi(v))
    fiber_size,      // fibers differ in size over a connected base
};

inline const char* to_string(Violation v) {
    switch (v) {
        case Violation::none: return "ok";
        case Violation::shape: return "shape";
        case Violation::not_onto: return "not-onto";
        case Violation::degree_mismatch: return "degree-mismatch";
        case Violation::not_injective: return "not-injective";
        case Violation::not_adjacent: return "not-adjacent";
        case Violation::fiber_size: return "fiber-size";
    }
    return "?";
}

struct ProjectionVerdict {
    Violation violation = Violation::none;
    std::string detail;
    std::size_t folds = 0;  // common fiber size, 0 when fibers differ

    bool ok() const { return violation == Violation::none; }
    explicit operator bool() const { return ok(); }
};

inline ProjectionVerdict verify_projection(const CoveringProjection& p) {
    const auto& g = p.total;
    const auto& f = p.base;
    auto fail = [](Violation v, std::string why) { return ProjectionVerdict{v, std::move(why), 0}; };

    if (p.map.size() != g.order()) {
        return fail(Violation::shape, "map has " + std::to_string(p.map.size()) + " entries for " +
                                          std::to_string(g.order()) + " vertices");
    }
    std::vector<std::size_t> fiber_size(f.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (p.map[v] >= f.order()) return fail(Violation::shape, "vertex " + std::to_string(v) + " maps out of range");
        ++fiber_size[p.map[v]];
    }
    for (Vertex x = 0; x < f.order(); ++x) {
        if (fiber_size[x] == 0) return fail(Violation::not_onto, "base vertex " + std::to_string(x) + " has no preimage");
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != f.degree(p.map[v])) {
            return fail(Violation::degree_mismatch, "deg(" + std::to_string(v) + ")=" + std::to_string(g.degree(v)) +
                                                        " but deg(pi(v))=" + std::to_string(f.degree(p.map[v])));
        }
    }
    std::vector<Vertex> image;
    for (Vertex v = 0; v < g.order(); ++v) {
        image.clear();
        for (Vertex u : g.neighbors(v)) image.push_back(p.map[u]);
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
            return fail(Violation::not_injective, "two neighbours of " + std::to_string(v) + " share an image");
        }
        for (Vertex x : image) {
            if (!f.adjacent(p.map[v], x)) {
                return fail(Violation::not_adjacent, "neighbour of " + std::to_string(v) + " maps to " +
                                                         std::to_string(x) + ", not adjacent to " +
                                                         std::to_string(p.map[v]));
            }
        }
    }
    ProjectionVerdict ok;
    const bool uniform = std::all_of(fiber_size.begin(), fiber_size.end(),
                                     [&](std::size_t s) { return s == fiber_size[0]; });
    if (uniform) {
        ok.folds = fiber_size[0];
    } else if (is_connected(f)) {
        return fail(Violation::fiber_size, "fibers differ in size over a connected base");
    }
    return ok;
}

inline CoveringProjection identity_projection(const Graph& g) {
    std::vector<Vertex> map(g.order());
    std::iota(map.begin(), map.end(), 0);
    return {g, g, std::move(map)};
}

/// `outer` covers the total graph of `inner`; the result maps outer.total
/// straight onto inner.base.
inline CoveringProjection compose(const CoveringProjection& outer, const CoveringProjection& inner) {
    std::vector<Vertex> map(outer.map.size());
    for (Vertex v = 0; v < map.size(); ++v) map[v] = inner.map.at(outer.map[v]);
    return {outer.total, inner.base, std::move(map)};
}

/// Derived cover of a voltage assignment. Lifted vertex (v, i) gets id v*k + i.
inline CoveringProjection lift(const VoltageAssignment& voltages) {
    const Graph& f = voltages.base();
    const std::size_t k = voltages.folds();
    if (!is_connected(f)) throw GraphError("lift: base graph must be connected for a k-fold cover");
    std::vector<Edge> edges;
    edges.reserve(f.size() * k);
    const auto& perms = voltages.permutations();
    const auto base_edges = f.edges();
    for (std::size_t e = 0; e < base_edges.size(); ++e) {
        auto [u, v] = base_edges[e];
        for (std::size_t i = 0; i < k; ++i) edges.emplace_back(u * k + i, v * k + perms[e][i]);
    }
    Graph total = Graph::from_edges(f.order() * k, edges);
    std::vector<Vertex> map(total.order());
    for (Vertex x = 0; x < map.size(); ++x) map[x] = x / k;
    return {std::move(total), f, std::move(map)};
}

inline VoltageAssignment random_voltages(const Graph& base, std::size_t k, std::uint64_t seed) {
    if (k < 1) throw GraphError("fold count must be at least 1");
    std::mt19937_64 rng(seed);
    std::vector<Permutation> perms(base.size(), Permutation(k));
    for (auto& p : perms) {
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
    }
    return VoltageAssignment(base, k, std::move(perms));
}

inline VertexSet fiber(const CoveringProjection& p, Vertex v) {
    if (v >= p.base.order()) throw GraphError("fiber: base vertex " + std::to_string(v) + " out of range");
    VertexSet s(p.total.order());
    for (Vertex x = 0; x < p.map.size(); ++x)
        if (p.map[x] == v) s.set(x);
    return s;
}

/// pi^{-1}(s) for a set of base vertices.
inline VertexSet preimage(const CoveringProjection& p, const VertexSet& s) {
    VertexSet out(p.total.order());
    for (Vertex x = 0; x < p.map.size(); ++x)
        if (s.test(p.map[x])) out.set(x);
    return out;
}

/// A subgraph of some base graph: a vertex subset plus edges among it.
struct Subgraph {
    VertexSet vertices;
    std::vector<Edge> edges;

    static Subgraph induced(const Graph& g, const VertexSet& s) {
        Subgraph sub{s, {}};
        for (auto [u, v] : g.edges())
            if (s.test(u) && s.test(v)) sub.edges.emplace_back(u, v);
        return sub;
    }

    static Subgraph whole(const Graph& g) {
        VertexSet all(g.order());
        all.set();
        return {all, g.edges()};
    }
};

/// Lift of a base subgraph, relabelled; `vertices[i]` is the total-graph id of
/// local vertex i.
struct SubgraphLift {
    Graph graph;
    std::vector<Vertex> vertices;
};

inline SubgraphLift preimage_subgraph(const CoveringProjection& p, const Subgraph& sub) {
    const Graph& f = p.base;
    if (sub.vertices.size() != f.order()) throw GraphError("subgraph vertex set sized for a different base");
    std::vector<std::vector<bool>> wanted(f.order(), std::vector<bool>(f.order(), false));
    for (auto [u, v] : sub.edges) {
        if (u >= f.order() || v >= f.order() || !f.adjacent(u, v))
            throw GraphError("subgraph edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not a base edge");
        if (!sub.vertices.test(u) || !sub.vertices.test(v))
            throw GraphError("subgraph edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} leaves the subgraph's vertex set");
        wanted[u][v] = wanted[v][u] = true;
    }
    SubgraphLift out;
    std::vector<std::size_t> local(p.total.order(), 0);
    for (Vertex x = 0; x < p.total.order(); ++x) {
        if (sub.vertices.test(p.map.at(x))) {
            local[x] = out.vertices.size();
            out.vertices.push_back(x);
        }
    }
    std::vector<Edge> edges;
    for (auto [x, y] : p.total.edges()) {
        if (sub.vertices.test(p.map[x]) && sub.vertices.test(p.map[y]) && wanted[p.map[x]][p.map[y]])
            edges.emplace_back(local[x], local[y]);
    }
    out.graph = Graph::from_edges(out.vertices.size(), edges);
    return out;
}

// ---------------------------------------------------------------------------
// files

/// Header "k n_total n_base", then one "g_vertex f_vertex" line per total vertex.
inline void write_projection(std::ostream& os, const CoveringProjection& p) {
    os << p.folds() << ' ' << p.total.order() << ' ' << p.base.order() << '\n';
    for (Vertex v = 0; v < p.map.size(); ++v) os << v << ' ' << p.map[v] << '\n';
}

struct ProjectionFile {
    std::size_t k = 0;
    std::size_t n_total = 0;
    std::size_t n_base = 0;
    std::vector<Vertex> map;
};

inline ProjectionFile read_projection(std::istream& is) {
    ProjectionFile pf;
    if (!(is >> pf.k >> pf.n_total >> pf.n_base)) throw GraphError("projection file: missing 'k n_total n_base' header");
    pf.map.assign(pf.n_total, 0);
    std::vector<bool> seen(pf.n_total, false);
    for (std::size_t i = 0; i < pf.n_total; ++i) {
        Vertex g, f;
        if (!(is >> g >> f)) throw GraphError("projection file: expected " + std::to_string(pf.n_total) + " lines");
        if (g >= pf.n_total || seen[g]) throw GraphError("projection file: bad or repeated vertex " + std::to_string(g));
        if (f >= pf.n_base) throw GraphError("projection file: image " + std::to_string(f) + " out of range");
        seen[g] = true;
        pf.map[g] = f;
    }
    return pf;
}

/// Attaches graphs to a parsed projection file, checking the header agrees.
inline CoveringProjection make_projection(const ProjectionFile& pf, const Graph& total, const Graph& base) {
    if (pf.n_total != total.order() || pf.n_base != base.order())
        throw GraphError("projection file sizes do not match the supplied graphs");
    if (pf.n_base * pf.k != pf.n_total) throw GraphError("projection file: k * n_base != n_total");
    return {total, base, pf.map};
}

/// One line per base edge: "u v p_0 ... p_{k-1}".
inline void write_voltages(std::ostream& os, const VoltageAssignment& va) {
    const auto edges = va.base().edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        os << edges[e].first << ' ' << edges[e].second;
        for (auto x : va.permutations()[e]) os << ' ' << x;
        os << '\n';
    }
}

/// Lines may name an edge in either orientation; "v u" with v > u gives the
/// permutation of arc v->u and is inverted on read.
inline VoltageAssignment read_voltages(std::istream& is, const Graph& base, std::size_t k) {
    const auto edges = base.edges();
    std::vector<Permutation> perms(edges.size());
    std::vector<bool> seen(edges.size(), false);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        Vertex u, v;
        if (!(ls >> u >> v)) throw GraphError("voltage file line " + std::to_string(lineno) + ": expected 'u v'");
        Permutation p;
        std::size_t x;
        while (ls >> x) p.push_back(x);
        if (p.size() != k || !is_permutation_of_range(p))
            throw GraphError("voltage file line " + std::to_string(lineno) + ": not a permutation of 0.." +
                             std::to_string(k - 1));
        if (u > v) {
            Permutation inv(k);
            for (std::size_t i = 0; i < k; ++i) inv[p[i]] = i;
            p = std::move(inv);
            std::swap(u, v);
        }
        auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
        if (it == edges.end() || *it != Edge{u, v})
            throw GraphError("voltage file line " + std::to_string(lineno) + ": no such base edge");
        auto e = static_cast<std::size_t>(it - edges.begin());
        if (seen[e]) throw GraphError("voltage file line " + std::to_string(lineno) + ": edge given twice");
        seen[e] = true;
        perms[e] = std::move(p);
    }
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!seen[e]) throw GraphError("voltage file: missing edge {" + std::to_string(edges[e].first) + "," +
                                       std::to_string(edges[e].second) + "}");
    return VoltageAssignment(base, k, std::move(perms));
}

}  // namespace domcover
