#pragma once

#include <algorithm>
#include <cmath>
#include <iterator>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "cover.hpp"
#include "domination.hpp"
#include "rational.hpp"

namespace domcover {

/// H(d) = 1 + 1/2 + ... + 1/d.
inline Rational harmonic(std::size_t d) {
    if (d < 1) throw std::invalid_argument("harmonic number needs d >= 1");
    Rational h = 0;
    for (std::size_t i = 1; i <= d; ++i) h += Rational(1, static_cast<long long>(i));
    return h;
}

/// A named bound. With `is_sqrt` the bound is sqrt(value) rather than value.
struct Bound {
    std::string name;
    Rational value;
    bool is_sqrt = false;

    /// Exact comparisons against an integer parameter value.
    bool at_most(std::size_t x) const {
        Rational xr(static_cast<long long>(x));
        return is_sqrt ? value <= xr * xr : value <= xr;
    }
    bool at_least(std::size_t x) const {
        Rational xr(static_cast<long long>(x));
        return is_sqrt ? value >= xr * xr : value >= xr;
    }
    double approx() const {
        double v = static_cast<double>(value);
        return is_sqrt ? std::sqrt(v) : v;
    }
    std::string exact_string() const {
        return is_sqrt ? "sqrt(" + to_fraction_string(value) + ")" : to_fraction_string(value);
    }
};

/// Whether lower bound `lo` <= upper bound `hi`, exactly.
inline bool bound_le(const Bound& lo, const Bound& hi) {
    if (lo.is_sqrt == hi.is_sqrt) return lo.value <= hi.value;
    if (lo.is_sqrt) return hi.value >= 0 && lo.value <= hi.value * hi.value;
    return lo.value <= 0 || lo.value * lo.value <= hi.value;
}

struct BoundReport {
    std::string base_id;
    std::string total_id;
    std::size_t k = 0;
    DominationKind kind = DominationKind::plain;
    std::vector<Bound> lowers;
    std::vector<Bound> uppers;
    std::size_t exact_F = 0;
    std::optional<std::size_t> exact_G;          // present only for an optimal solve
    std::optional<std::size_t> best_found_G;     // solver incumbent when exact_G is absent
    std::optional<std::size_t> witness_G;        // size of the constructive lifted witness
    Rational H_Delta = 1;
    std::optional<Rational> c_obs;               // plain kind with exact_G only
    std::vector<std::string> violations;
    std::vector<std::string> notes;

    bool ok() const { return violations.empty(); }
};

inline Rational fold_times(std::size_t k, std::size_t x) {
    return Rational(static_cast<long long>(k) * static_cast<long long>(x));
}

/// Every bound on the parameter of a k-fold cover G of F that follows from
/// the base value `exact_F`, the fold and the degree data of F.
inline BoundReport cover_bounds(std::size_t exact_F, std::size_t k, DominationKind kind,
                                std::optional<std::size_t> regularity, std::size_t max_deg) {
    BoundReport rep;
    rep.k = k;
    rep.kind = kind;
    rep.exact_F = exact_F;
    rep.H_Delta = max_deg >= 1 ? harmonic(max_deg) : Rational(1);
    const Rational kF = fold_times(k, exact_F);
    const auto kk = static_cast<long long>(k);

    rep.lowers.push_back({"fold", Rational(kk)});
    rep.lowers.push_back({"base", Rational(static_cast<long long>(exact_F))});
    rep.lowers.push_back({"geometric", kF, true});
    if (kind == DominationKind::plain && max_deg >= 1) rep.lowers.push_back({"harmonic", kF / rep.H_Delta});
    if (kind == DominationKind::plain && max_deg == 2) rep.lowers.push_back({"cycle", kF * Rational(2, 3)});
    if (kind != DominationKind::connected && regularity) {
        if (*regularity == 3) rep.lowers.push_back({"cubic", kF * Rational(3, 5)});
        if (*regularity == 4 || *regularity == 5) rep.lowers.push_back({"quartic-quintic", kF / 2});
    }

    if (kind == DominationKind::connected) {
        rep.uppers.push_back({"connector", Rational(kk * (static_cast<long long>(exact_F) + 2) - 2)});
    } else {
        rep.uppers.push_back({"lift", kF});
    }
    return rep;
}

/// Bounds that hold for any graph of the given shape, independent of covers.
inline std::pair<std::vector<Bound>, std::vector<Bound>> classical_bounds(const Graph& g, DominationKind kind) {
    const auto st = stats(g);
    const auto n = static_cast<long long>(st.n);
    std::vector<Bound> lo, hi;
    if (kind == DominationKind::total) {
        if (st.max_degree >= 1) lo.push_back({"open-neighbourhood", Rational(n, static_cast<long long>(st.max_degree))});
        if (st.min_degree >= 3) hi.push_back({"min-degree-3", Rational(n, 2)});
        if (st.min_degree >= 5) hi.push_back({"min-degree-5", Rational(2453 * n, 6500)});
    } else {
        lo.push_back({"closed-neighbourhood", Rational(n, static_cast<long long>(st.max_degree) + 1)});
        if (kind == DominationKind::plain) {
            if (st.min_degree >= 3) hi.push_back({"min-degree-3", Rational(3 * n, 8)});
            if (st.min_degree >= 5) hi.push_back({"min-degree-5", Rational(n, 3)});
        }
    }
    return {lo, hi};
}

/// Checks `value` against every bound; returns descriptions of failures.
inline std::vector<std::string> check_value(std::size_t value, const std::vector<Bound>& lowers,
                                            const std::vector<Bound>& uppers, const std::string& what) {
    std::vector<std::string> bad;
    for (const auto& b : lowers)
        if (!b.at_most(value))
            bad.push_back(what + " = " + std::to_string(value) + " below lower bound " + b.name + " = " + b.exact_string());
    for (const auto& b : uppers)
        if (!b.at_least(value))
            bad.push_back(what + " = " + std::to_string(value) + " above upper bound " + b.name + " = " + b.exact_string());
    return bad;
}

// ---------------------------------------------------------------------------
// constructive witnesses

/// Union of the fibers over `s`. For a (total) dominating set of the base the
/// result is a (total) dominating set of the cover with k|s| vertices.
inline VertexSet lift_dominating_set(const CoveringProjection& p, const VertexSet& s, DominationKind kind) {
    if (kind == DominationKind::connected)
        throw std::invalid_argument("lift_dominating_set: use connect_lifted_trees for connected domination");
    if (s.size() != p.base.order() || !verify(p.base, s, kind))
        throw std::invalid_argument(std::string("lift_dominating_set: set is not ") +
                                    (kind == DominationKind::total ? "total " : "") + "dominating in the base");
    return preimage(p, s);
}

struct ConnectorCertificate {
    std::vector<VertexSet> components;         // lifted trees T_1..T_k, in total-graph ids
    std::vector<std::vector<Vertex>> paths;    // each from the grown blob to a new tree, endpoints included
    VertexSet result;
};

/// BFS spanning tree of g[s] rooted at the lowest member, neighbours in id order.
inline std::vector<Edge> spanning_tree(const Graph& g, const VertexSet& s) {
    std::vector<Edge> tree;
    auto root = s.find_first();
    if (root == VertexSet::npos) return tree;
    VertexSet seen(g.order());
    seen.set(root);
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex u : g.neighbors(v)) {
            if (s.test(u) && !seen.test(u)) {
                seen.set(u);
                tree.emplace_back(std::min(u, v), std::max(u, v));
                q.push(u);
            }
        }
    }
    return tree;
}

/// Connects the k lifted copies of a spanning tree of the base set by short
/// paths, yielding a connected dominating set of the cover with at most
/// k(|s|+2)-2 vertices.
inline ConnectorCertificate connect_lifted_trees(const CoveringProjection& p, const VertexSet& s) {
    const Graph& g = p.total;
    if (s.size() != p.base.order() || !is_connected_dominating(p.base, s))
        throw std::invalid_argument("connect_lifted_trees: set is not a connected dominating set of the base");
    if (!is_connected(g)) throw std::invalid_argument("connect_lifted_trees: total graph must be connected");

    const auto tree = spanning_tree(p.base, s);
    const auto lifted = preimage_subgraph(p, Subgraph{s, tree});
    std::size_t ncomp = 0;
    const auto label = component_labels(lifted.graph, &ncomp);
    const std::size_t k = p.folds();
    if (ncomp != k)
        throw std::logic_error("connect_lifted_trees: tree lifted to " + std::to_string(ncomp) + " components, expected " +
                               std::to_string(k));

    ConnectorCertificate cert;
    cert.components.assign(ncomp, VertexSet(g.order()));
    std::vector<std::size_t> owner(g.order(), ncomp);
    for (std::size_t i = 0; i < lifted.vertices.size(); ++i) {
        cert.components[label[i]].set(lifted.vertices[i]);
        owner[lifted.vertices[i]] = label[i];
    }

    VertexSet blob = cert.components[0];
    std::vector<bool> joined(ncomp, false);
    joined[0] = true;
    constexpr auto unset = static_cast<std::size_t>(-1);
    for (std::size_t step = 1; step < ncomp; ++step) {
        // multi-source BFS from the blob; nearest vertex of an unjoined tree,
        // lowest id among the nearest
        std::vector<std::size_t> dist(g.order(), unset);
        std::vector<Vertex> parent(g.order(), g.order());
        std::vector<Vertex> layer;
        for (Vertex v : members(blob)) {
            dist[v] = 0;
            layer.push_back(v);
        }
        Vertex target = g.order();
        while (!layer.empty() && target == g.order()) {
            std::vector<Vertex> next;
            for (Vertex v : layer) {
                for (Vertex u : g.neighbors(v)) {
                    if (dist[u] != unset) continue;
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    next.push_back(u);
                }
            }
            std::sort(next.begin(), next.end());
            for (Vertex u : next) {
                if (owner[u] < ncomp && !joined[owner[u]]) {
                    target = u;
                    break;
                }
            }
            layer = std::move(next);
        }
        if (target == g.order()) throw std::logic_error("connect_lifted_trees: a lifted tree is unreachable");
        if (dist[target] > 3)
            throw std::logic_error("connect_lifted_trees: connecting path has " + std::to_string(dist[target]) +
                                   " edges, more than 3");
        std::vector<Vertex> route;
        for (Vertex v = target; dist[v] != 0; v = parent[v]) route.push_back(v);
        route.push_back(route.empty() ? target : parent[route.back()]);
        std::reverse(route.begin(), route.end());
        for (Vertex v : route) blob.set(v);
        joined[owner[target]] = true;
        blob |= cert.components[owner[target]];
        cert.paths.push_back(std::move(route));
    }
    cert.result = blob;
    return cert;
}

// ---------------------------------------------------------------------------
// full sandwich for one cover

struct SandwichOptions {
    std::uint64_t budget = default_node_budget;
};

/// Solves F (and G, within budget) exactly for `kind` and checks every
/// applicable bound, plus the constructive upper-bound witnesses.
inline BoundReport check_sandwich(const CoveringProjection& p, DominationKind kind, const SandwichOptions& opt = {}) {
    const Graph& f = p.base;
    const Graph& g = p.total;
    const auto verdict = verify_projection(p);
    if (!verdict) throw std::invalid_argument(std::string("check_sandwich: invalid projection: ") + verdict.detail);
    if (!is_connected(f)) throw std::invalid_argument("check_sandwich: base graph must be connected");

    const auto fs = stats(f);
    const std::size_t k = verdict.folds;
    const auto base_cert = domination_number(f, kind, opt.budget);
    if (!base_cert.optimal) throw std::runtime_error("check_sandwich: base graph not solved within budget");

    BoundReport rep = cover_bounds(base_cert.value, k, kind, fs.regular_degree, fs.max_degree);
    rep.base_id = to_graph6(f);
    rep.total_id = to_graph6(g);

    auto [glo, ghi] = classical_bounds(g, kind);
    rep.lowers.insert(rep.lowers.end(), glo.begin(), glo.end());
    rep.uppers.insert(rep.uppers.end(), ghi.begin(), ghi.end());

    auto [flo, fhi] = classical_bounds(f, kind);
    for (auto& v : check_value(base_cert.value, flo, fhi, "base value")) rep.violations.push_back(v);

    for (const auto& lo : rep.lowers)
        for (const auto& hi : rep.uppers)
            if (!bound_le(lo, hi))
                rep.violations.push_back("lower bound " + lo.name + " = " + lo.exact_string() + " exceeds upper bound " +
                                         hi.name + " = " + hi.exact_string());

    // constructive witnesses
    if (kind == DominationKind::connected) {
        const auto conn = connect_lifted_trees(p, base_cert.set);
        rep.witness_G = conn.result.count();
        if (!is_connected_dominating(g, conn.result)) rep.violations.push_back("connector witness is not connected dominating");
        for (const auto& path : conn.paths)
            if (path.size() > 4) rep.violations.push_back("connector path longer than 3 edges");
    } else {
        const auto lifted = lift_dominating_set(p, base_cert.set, kind);
        rep.witness_G = lifted.count();
        if (!verify(g, lifted, kind)) rep.violations.push_back("lifted witness does not dominate the cover");
        if (lifted.count() != k * base_cert.value) rep.violations.push_back("lifted witness size differs from k|S|");
    }
    std::vector<Bound> cover_uppers;
    std::copy_if(rep.uppers.begin(), rep.uppers.end(), std::back_inserter(cover_uppers),
                 [](const Bound& b) { return b.name == "lift" || b.name == "connector"; });
    for (auto& v : check_value(*rep.witness_G, {}, cover_uppers, "witness size")) rep.violations.push_back(v);

    const auto cover_cert = domination_number(g, kind, opt.budget);
    if (!verify(g, cover_cert.set, kind)) rep.violations.push_back("solver returned an invalid set for the cover");
    if (cover_cert.optimal) {
        rep.exact_G = cover_cert.value;
        for (auto& v : check_value(cover_cert.value, rep.lowers, rep.uppers, "cover value")) rep.violations.push_back(v);
        if (kind == DominationKind::plain) rep.c_obs = Rational(static_cast<long long>(cover_cert.value)) / fold_times(k, base_cert.value);
    } else {
        rep.best_found_G = cover_cert.value;
        rep.notes.push_back("cover value skipped (budget): best found " + std::to_string(cover_cert.value));
    }
    return rep;
}

}  // namespace domcover
