#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace domcover {

enum class DominationKind { plain, total, connected };

inline const char* to_string(DominationKind k) {
    switch (k) {
        case DominationKind::plain: return "plain";
        case DominationKind::total: return "total";
        case DominationKind::connected: return "connected";
    }
    return "?";
}

inline DominationKind parse_kind(const std::string& s) {
    if (s == "plain") return DominationKind::plain;
    if (s == "total") return DominationKind::total;
    if (s == "connected") return DominationKind::connected;
    throw std::invalid_argument("unknown domination kind '" + s + "' (plain|total|connected)");
}

/// Solver precondition failures (isolated vertex for total, disconnected
/// graph for connected, empty graph, oversized input).
class DominationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// verifiers

inline bool is_dominating(const Graph& g, const VertexSet& s) {
    VertexSet covered = s;
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        for (Vertex u : g.neighbors(v)) covered.set(u);
    return covered.all();
}

inline bool is_total_dominating(const Graph& g, const VertexSet& s) {
    VertexSet covered(g.order());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        for (Vertex u : g.neighbors(v)) covered.set(u);
    return covered.all();
}

inline bool is_connected_dominating(const Graph& g, const VertexSet& s) {
    return s.any() && is_dominating(g, s) && induces_connected(g, s);
}

/// Closed neighbourhoods of `s` partition V (each vertex dominated exactly once).
inline bool is_efficient_dominating(const Graph& g, const VertexSet& s) {
    std::vector<int> hits(g.order(), 0);
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        ++hits[v];
        for (Vertex u : g.neighbors(v)) ++hits[u];
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

inline bool verify(const Graph& g, const VertexSet& s, DominationKind kind) {
    switch (kind) {
        case DominationKind::plain: return is_dominating(g, s);
        case DominationKind::total: return is_total_dominating(g, s);
        case DominationKind::connected: return is_connected_dominating(g, s);
    }
    return false;
}

inline void check_preconditions(const Graph& g, DominationKind kind) {
    if (g.order() == 0) throw DominationError("domination number of the empty graph is undefined");
    if (kind == DominationKind::total && has_isolated_vertex(g))
        throw DominationError("total domination needs a graph without isolated vertices");
    if (kind == DominationKind::connected && !is_connected(g))
        throw DominationError("connected domination needs a connected graph");
}

// ---------------------------------------------------------------------------
// greedy

struct GreedyTrace {
    std::vector<Vertex> order;
    std::vector<std::size_t> white_counts;  // w(v_i) at the moment v_i was chosen
    VertexSet final_set;
};

/// Repeatedly takes a vertex with the most white (undominated) vertices in its
/// closed neighbourhood, lowest id on ties.
inline GreedyTrace greedy_dominating_set(const Graph& g) {
    const std::size_t n = g.order();
    GreedyTrace trace;
    trace.final_set.resize(n);
    std::vector<bool> white(n, true);
    std::size_t remaining = n;
    while (remaining > 0) {
        Vertex best = 0;
        std::size_t best_w = 0;
        for (Vertex v = 0; v < n; ++v) {
            std::size_t w = white[v] ? 1 : 0;
            for (Vertex u : g.neighbors(v)) w += white[u] ? 1 : 0;
            if (w > best_w) {
                best_w = w;
                best = v;
            }
        }
        trace.order.push_back(best);
        trace.white_counts.push_back(best_w);
        trace.final_set.set(best);
        if (white[best]) {
            white[best] = false;
            --remaining;
        }
        for (Vertex u : g.neighbors(best)) {
            if (white[u]) {
                white[u] = false;
                --remaining;
            }
        }
    }
    return trace;
}

/// Connected greedy from `start`: grow through the frontier, always taking the
/// frontier vertex with the most white vertices around it. Needs g connected.
inline VertexSet greedy_connected_from(const Graph& g, Vertex start) {
    const std::size_t n = g.order();
    VertexSet set(n), dominated = g.closed_neighborhood(start);
    set.set(start);
    while (!dominated.all()) {
        Vertex best = n;
        std::size_t best_w = 0;
        for (auto f = dominated.find_first(); f != VertexSet::npos; f = dominated.find_next(f)) {
            if (set.test(f)) continue;
            std::size_t w = 0;
            for (Vertex u : g.neighbors(f)) w += dominated.test(u) ? 0 : 1;
            if (best == n || w > best_w) {
                best = f;
                best_w = w;
            }
        }
        set.set(best);
        for (Vertex u : g.neighbors(best)) dominated.set(u);
    }
    return set;
}

// ---------------------------------------------------------------------------
// exact branch and bound

struct DominationCertificate {
    DominationKind kind = DominationKind::plain;
    VertexSet set;
    std::size_t value = 0;
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t default_node_budget = 50'000'000;

namespace detail {

/// Fixed-width bitset for the search; W 64-bit words.
template <std::size_t W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    bool none() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    bool any() const { return !none(); }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < W; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < W; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    std::size_t count_and(const Bits& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < W; ++i) c += static_cast<std::size_t>(std::popcount(w[i] & o.w[i]));
        return c;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < W; ++i) w[i] &= o.w[i];
        return *this;
    }
    Bits minus(const Bits& o) const {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend bool operator==(const Bits&, const Bits&) = default;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < W; ++i) {
            for (auto x = w[i]; x; x &= x - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        }
    }
};

template <std::size_t W>
class Solver {
public:
    using Set = Bits<W>;

    Solver(const Graph& g, DominationKind kind, std::uint64_t budget) : g_(g), kind_(kind), budget_(budget) {
        n_ = g.order();
        open_.resize(n_);
        closed_.resize(n_);
        deg_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex u : g.neighbors(v)) open_[v].set(u);
            closed_[v] = open_[v];
            closed_[v].set(v);
            deg_[v] = g.degree(v);
            max_deg_ = std::max(max_deg_, deg_[v]);
            all_.set(v);
        }
        hist_.assign(max_deg_ + 2, 0);
        scratch_.assign(n_ + 2, std::vector<std::size_t>(n_, 0));
    }

    /// `incumbent` must be a valid set of the requested kind.
    DominationCertificate run(const VertexSet& incumbent) {
        best_size_ = incumbent.count();
        best_.w = {};
        for (auto v = incumbent.find_first(); v != VertexSet::npos; v = incumbent.find_next(v)) best_.set(v);

        if (kind_ == DominationKind::connected) {
            for (Vertex r = 0; r < n_ && !aborted_ && best_size_ > 1; ++r) {
                Set chosen, excluded;
                chosen.set(r);
                for (Vertex v = 0; v < r; ++v) excluded.set(v);
                connected_search(chosen, closed_[r], excluded, 1);
            }
        } else {
            const auto& reach = kind_ == DominationKind::plain ? closed_ : open_;
            cover_search(reach, Set{}, Set{}, Set{}, 0);
        }

        DominationCertificate cert;
        cert.kind = kind_;
        cert.set.resize(n_);
        best_.for_each([&](std::size_t v) { cert.set.set(v); });
        cert.value = best_size_;
        cert.optimal = !aborted_;
        cert.nodes_explored = nodes_;
        return cert;
    }

private:
    bool tick() {
        if (++nodes_ > budget_) aborted_ = true;
        return !aborted_;
    }

    void improve(const Set& chosen, std::size_t size) {
        if (size < best_size_) {
            best_size_ = size;
            best_ = chosen;
        }
    }

    /// Fewest extra vertices whose gains can add up to `need`; nullopt if the
    /// available gains cannot reach it at all.
    std::optional<std::size_t> gain_bound(std::size_t need) {
        std::size_t taken = 0, acc = 0;
        for (std::size_t gain = hist_.size(); gain-- > 1 && acc < need;) {
            while (hist_[gain] > 0 && acc < need) {
                --hist_[gain];
                acc += gain;
                ++taken;
            }
        }
        std::fill(hist_.begin(), hist_.end(), 0);
        if (acc < need) return std::nullopt;
        return taken;
    }

    // plain / total: every vertex must land in reach[v] of some chosen v.
    // Branch on the undominated vertex with the fewest admissible dominators.
    void cover_search(const std::vector<Set>& reach, const Set& chosen, const Set& dominated, Set excluded,
                      std::size_t size) {
        if (!tick()) return;
        const Set undominated = all_.minus(dominated);
        if (undominated.none()) {
            improve(chosen, size);
            return;
        }
        if (size + 1 >= best_size_) return;

        const Set allowed = all_.minus(excluded).minus(chosen);
        std::vector<std::size_t>& gains = gain_scratch(size);
        allowed.for_each([&](std::size_t v) {
            gains[v] = reach[v].count_and(undominated);
            ++hist_[gains[v]];
        });
        auto lb = gain_bound(undominated.count());
        if (!lb || size + *lb >= best_size_) return;

        std::size_t pivot = n_, fewest = std::numeric_limits<std::size_t>::max();
        undominated.for_each([&](std::size_t u) {
            if (fewest == 0) return;
            std::size_t c = reach[u].count_and(allowed);
            if (c < fewest) {
                fewest = c;
                pivot = u;
            }
        });
        if (fewest == 0) return;

        std::vector<std::size_t> cands;
        (reach[pivot] & allowed).for_each([&](std::size_t v) { cands.push_back(v); });
        std::stable_sort(cands.begin(), cands.end(),
                         [&](std::size_t a, std::size_t b) { return gains[a] > gains[b]; });
        for (std::size_t c : cands) {
            Set next = chosen;
            next.set(c);
            cover_search(reach, next, dominated | reach[c], excluded, size + 1);
            if (aborted_) return;
            excluded.set(c);
        }
    }

    // connected: grow a connected set whose minimum vertex is its root;
    // include/exclude branching on a frontier vertex.
    void connected_search(const Set& chosen, const Set& dominated, const Set& excluded, std::size_t size) {
        if (!tick()) return;
        const Set undominated = all_.minus(dominated);
        if (undominated.none()) {
            improve(chosen, size);
            return;
        }
        if (size + 1 >= best_size_) return;

        const Set allowed = all_.minus(excluded).minus(chosen);
        std::vector<std::size_t>& gains = gain_scratch(size);
        // A later vertex a has a tree parent in the final set; that parent is
        // either dominated already or is counted by its own closed neighbourhood.
        allowed.for_each([&](std::size_t v) {
            std::size_t w = closed_[v].count_and(undominated);
            std::size_t cap = deg_[v] - 1 + (undominated.test(v) ? 1 : 0);
            gains[v] = std::min(w, cap);
            ++hist_[gains[v]];
        });
        auto lb = gain_bound(undominated.count());
        if (!lb || size + *lb >= best_size_) return;

        // Layered reachability through admissible vertices: an undominated
        // vertex first reachable from layer d costs at least d more vertices.
        Set reached = chosen, layer = chosen, covered = dominated;
        std::size_t depth = 0;
        Set frontier;
        while (!undominated.subset_of(covered)) {
            Set next;
            layer.for_each([&](std::size_t v) { next |= open_[v]; });
            next = (next & allowed).minus(reached);
            if (depth == 0) frontier = next;
            if (next.none()) return;
            ++depth;
            if (size + depth >= best_size_) return;
            reached |= next;
            next.for_each([&](std::size_t v) { covered |= closed_[v]; });
            layer = next;
        }

        std::size_t pick = n_;
        frontier.for_each([&](std::size_t v) {
            if (pick == n_ || gains[v] > gains[pick]) pick = v;
        });
        Set with = chosen;
        with.set(pick);
        connected_search(with, dominated | closed_[pick], excluded, size + 1);
        if (aborted_) return;
        Set without = excluded;
        without.set(pick);
        connected_search(chosen, dominated, without, size);
    }

    std::vector<std::size_t>& gain_scratch(std::size_t depth) { return scratch_[depth]; }

    const Graph& g_;
    DominationKind kind_;
    std::uint64_t budget_;
    std::size_t n_ = 0;
    std::size_t max_deg_ = 0;
    std::vector<Set> open_, closed_;
    std::vector<std::size_t> deg_;
    Set all_;
    std::vector<std::size_t> hist_;
    std::vector<std::vector<std::size_t>> scratch_;

    Set best_;
    std::size_t best_size_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

template <std::size_t W>
DominationCertificate solve_with(const Graph& g, DominationKind kind, std::uint64_t budget, const VertexSet& start) {
    Solver<W> solver(g, kind, budget);
    return solver.run(start);
}

}  // namespace detail

/// Starting incumbent for the exact solver.
inline VertexSet initial_upper_bound(const Graph& g, DominationKind kind) {
    const std::size_t n = g.order();
    switch (kind) {
        case DominationKind::plain: return greedy_dominating_set(g).final_set;
        case DominationKind::total: {
            // greedy dominating set, then give every chosen vertex a partner
            VertexSet s = greedy_dominating_set(g).final_set;
            VertexSet out = s;
            for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
                bool has = false;
                for (Vertex u : g.neighbors(v)) has = has || out.test(u);
                if (!has) out.set(g.neighbors(v).front());
            }
            return out;
        }
        case DominationKind::connected: {
            VertexSet best(n);
            best.set();
            for (Vertex r = 0; r < n; ++r) {
                VertexSet s = greedy_connected_from(g, r);
                if (s.count() < best.count()) best = s;
            }
            return best;
        }
    }
    return {};
}

/// Exact minimum dominating set of the requested kind by branch and bound.
/// When the node budget runs out the best set found so far is returned with
/// optimal = false.
inline DominationCertificate domination_number(const Graph& g, DominationKind kind,
                                               std::uint64_t budget = default_node_budget) {
    check_preconditions(g, kind);
    const VertexSet start = initial_upper_bound(g, kind);
    const std::size_t n = g.order();
    if (n <= 64) return detail::solve_with<1>(g, kind, budget, start);
    if (n <= 128) return detail::solve_with<2>(g, kind, budget, start);
    if (n <= 256) return detail::solve_with<4>(g, kind, budget, start);
    if (n <= 512) return detail::solve_with<8>(g, kind, budget, start);
    throw DominationError("exact solver supports at most 512 vertices, got " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// brute force oracle

inline constexpr std::size_t brute_force_limit = 24;

/// Exhaustive search over subsets in order of increasing size.
inline std::size_t brute_force_number(const Graph& g, DominationKind kind) {
    check_preconditions(g, kind);
    const std::size_t n = g.order();
    if (n > brute_force_limit) throw DominationError("brute force limited to 24 vertices");
    std::vector<std::uint32_t> open(n, 0), closed(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : g.neighbors(v)) open[v] |= 1u << u;
        closed[v] = open[v] | (1u << v);
    }
    const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    auto connected = [&](std::uint32_t s) {
        std::uint32_t seen = s & (~s + 1), grow = seen;
        while (grow) {
            std::uint32_t next = 0;
            for (auto x = grow; x; x &= x - 1) next |= open[std::countr_zero(x)];
            grow = next & s & ~seen;
            seen |= grow;
        }
        return seen == s;
    };
    for (std::size_t size = 1; size <= n; ++size) {
        // Gosper's hack over size-subsets
        std::uint64_t s = (std::uint64_t{1} << size) - 1;
        while (s < (std::uint64_t{1} << n)) {
            const auto set = static_cast<std::uint32_t>(s);
            std::uint32_t cov = 0;
            for (auto x = set; x; x &= x - 1)
                cov |= kind == DominationKind::total ? open[std::countr_zero(x)] : closed[std::countr_zero(x)];
            if (cov == full && (kind != DominationKind::connected || connected(set))) return size;
            std::uint64_t c = s & (~s + 1), r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n;  // unreachable for valid inputs
}

// ---------------------------------------------------------------------------
// perfect codes on tori

/// {(i, j) : 2i + j = 0 mod 5} in cartesian_product(cycle(n), cycle(n)),
/// vertex (i, j) having id i*n + j.
inline VertexSet diagonal_perfect_code(std::size_t n) {
    if (n == 0 || n % 5 != 0) throw DominationError("diagonal perfect code needs n a positive multiple of 5");
    VertexSet s(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((2 * i + j) % 5 == 0) s.set(i * n + j);
    return s;
}

}  // namespace domcover
