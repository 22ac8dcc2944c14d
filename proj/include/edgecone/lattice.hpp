#pragma once

// Integer points of the edge cone of a bipartite graph. Every integer point of
// the cone is a nonnegative integer combination of edge vectors; we produce the
// combination as an integral transshipment from the first side of each
// component to the second. Perfect matchings are the decompositions of the
// all-ones vector.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgecone/cone.hpp"
#include "edgecone/errors.hpp"
#include "edgecone/graph.hpp"

namespace edgecone {

/// Nonnegative integer multiplicity per edge (indexed like Graph::edges()).
struct EdgeDecomposition {
    std::vector<std::int64_t> multiplicities;

    IntVector sum(const Graph& g) const {
        IntVector out(g.vertex_count(), 0);
        for (EdgeIndex i = 0; i < multiplicities.size(); ++i) {
            out[g.edge(i).u] += multiplicities[i];
            out[g.edge(i).v] += multiplicities[i];
        }
        return out;
    }
};

/// Either a decomposition or a violated inequality proving none exists.
struct DecompositionResult {
    std::optional<EdgeDecomposition> decomposition;
    std::optional<Violation> absence;

    bool found() const { return decomposition.has_value(); }
};

/// Necessary condition for an integer point to lie in a bipartite edge cone.
inline bool parity_check(std::span<const std::int64_t> b) {
    std::int64_t s = 0;
    for (auto x : b) s += x;
    return s % 2 == 0;
}

namespace detail {

/// Edmonds-Karp on a small residual network with integer capacities.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

    std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
        const std::size_t id = to_.size();
        to_.push_back(to);
        cap_.push_back(cap);
        adj_[from].push_back(id);
        to_.push_back(from);
        cap_.push_back(0);
        adj_[to].push_back(id + 1);
        return id;
    }

    std::int64_t max_flow(std::size_t s, std::size_t t) {
        std::int64_t total = 0;
        while (true) {
            std::vector<std::size_t> via(adj_.size(), kNone);
            std::queue<std::size_t> q;
            q.push(s);
            std::vector<bool> seen(adj_.size(), false);
            seen[s] = true;
            while (!q.empty() && !seen[t]) {
                std::size_t v = q.front();
                q.pop();
                for (std::size_t arc : adj_[v]) {
                    if (cap_[arc] > 0 && !seen[to_[arc]]) {
                        seen[to_[arc]] = true;
                        via[to_[arc]] = arc;
                        q.push(to_[arc]);
                    }
                }
            }
            if (!seen[t]) return total;
            std::int64_t push = std::numeric_limits<std::int64_t>::max();
            for (std::size_t v = t; v != s; v = to_[via[v] ^ 1]) push = std::min(push, cap_[via[v]]);
            for (std::size_t v = t; v != s; v = to_[via[v] ^ 1]) {
                cap_[via[v]] -= push;
                cap_[via[v] ^ 1] += push;
            }
            total += push;
        }
    }

    /// Flow currently on a forward arc.
    std::int64_t flow(std::size_t arc) const { return cap_[arc ^ 1]; }
    std::int64_t residual(std::size_t arc) const { return cap_[arc]; }

    std::vector<bool> reachable_from(std::size_t s) const {
        std::vector<bool> seen(adj_.size(), false);
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t arc : adj_[v])
                if (cap_[arc] > 0 && !seen[to_[arc]]) {
                    seen[to_[arc]] = true;
                    stack.push_back(to_[arc]);
                }
        }
        return seen;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> to_;
    std::vector<std::int64_t> cap_;
};

inline void require_bipartite(const Graph& g, const std::string& what) {
    if (!g.is_bipartite()) throw DomainError(what + " requires a bipartite graph");
}

inline Violation violation_of(Hyperplane h, std::optional<Sense> sense, std::span<const std::int64_t> b) {
    const std::int64_t v = h.evaluate(b);
    return Violation{std::move(h), sense, Rational(v)};
}

}  // namespace detail

/// Writes b as a sum of edge vectors with nonnegative integer multiplicities,
/// or returns a violated constraint (x_v >= 0 or H_A^-) showing b is outside
/// the cone.
inline DecompositionResult integer_decompose(const Graph& g, std::span<const std::int64_t> b) {
    detail::require_bipartite(g, "integer decomposition");
    const std::size_t n = g.vertex_count();
    if (b.size() != n)
        throw DimensionMismatch("point has " + std::to_string(b.size()) + " coordinates, graph has " +
                                std::to_string(n) + " vertices");

    DecompositionResult result;
    std::optional<VertexIndex> most_negative;
    for (VertexIndex v = 0; v < n; ++v)
        if (b[v] < 0 && (!most_negative || b[v] < b[*most_negative])) most_negative = v;
    if (most_negative) {
        result.absence = detail::violation_of(Hyperplane::coordinate(n, *most_negative), Sense::AtLeastZero, b);
        return result;
    }

    std::vector<bool> on_first(n, false);
    for (std::size_t k = 0; k < g.components().size(); ++k)
        for (VertexIndex v : g.bipartition(k)->first) on_first[v] = true;

    const std::size_t source = n, sink = n + 1;
    detail::FlowNetwork net(n + 2);
    std::int64_t supply = 0;
    for (VertexIndex v = 0; v < n; ++v)
        if (on_first[v]) supply += b[v];
    // Edge capacity above any feasible flow, so a minimum cut never uses an edge arc.
    const std::int64_t unbounded = supply + 1;

    std::vector<std::size_t> terminal_arc(n);
    for (VertexIndex v = 0; v < n; ++v)
        terminal_arc[v] = on_first[v] ? net.add_arc(source, v, b[v]) : net.add_arc(v, sink, b[v]);
    std::vector<std::size_t> edge_arc(g.edge_count());
    for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        edge_arc[i] = on_first[e.u] ? net.add_arc(e.u, e.v, unbounded) : net.add_arc(e.v, e.u, unbounded);
    }
    net.max_flow(source, sink);

    bool sources_saturated = true;
    for (VertexIndex v = 0; v < n; ++v)
        if (on_first[v] && net.residual(terminal_arc[v]) > 0) sources_saturated = false;

    if (!sources_saturated) {
        // First-side vertices still reachable in the residual network form a set
        // A with b(A) > b(N(A)).
        const auto reach = net.reachable_from(source);
        std::vector<VertexIndex> a;
        for (VertexIndex v = 0; v < n; ++v)
            if (on_first[v] && reach[v]) a.push_back(v);
        result.absence = detail::violation_of(Hyperplane::independent_set(g, VertexSet(std::move(a))),
                                              Sense::AtMostZero, b);
        return result;
    }

    for (std::size_t k = 0; k < g.components().size(); ++k) {
        const auto& bp = *g.bipartition(k);
        bool deficit = false;
        for (VertexIndex v : bp.second)
            if (net.residual(terminal_arc[v]) > 0) deficit = true;
        if (deficit) {
            // The first side was fully shipped, so this component's second side asks for more.
            result.absence =
                detail::violation_of(Hyperplane::independent_set(g, bp.second), Sense::AtMostZero, b);
            return result;
        }
    }

    EdgeDecomposition d;
    d.multiplicities.resize(g.edge_count());
    for (EdgeIndex i = 0; i < g.edge_count(); ++i) d.multiplicities[i] = net.flow(edge_arc[i]);
    if (d.sum(g) != IntVector(b.begin(), b.end())) throw std::logic_error("transshipment does not reproduce the target");
    result.decomposition = std::move(d);
    return result;
}

/// Classical augmenting-path maximum matching on a bipartite graph.
inline std::vector<EdgeIndex> maximum_matching(const Graph& g) {
    detail::require_bipartite(g, "augmenting-path matching");
    const std::size_t n = g.vertex_count();
    std::vector<bool> on_first(n, false);
    for (std::size_t k = 0; k < g.components().size(); ++k)
        for (VertexIndex v : g.bipartition(k)->first) on_first[v] = true;

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> mate(n, none);
    std::vector<bool> visited;
    auto augment = [&](auto&& self, VertexIndex u) -> bool {
        for (VertexIndex w : g.neighbors(u)) {
            if (visited[w]) continue;
            visited[w] = true;
            if (mate[w] == none || self(self, mate[w])) {
                mate[w] = u;
                mate[u] = w;
                return true;
            }
        }
        return false;
    };
    for (VertexIndex u = 0; u < n; ++u) {
        if (!on_first[u] || mate[u] != none) continue;
        visited.assign(n, false);
        augment(augment, u);
    }

    std::vector<EdgeIndex> out;
    for (EdgeIndex i = 0; i < g.edge_count(); ++i)
        if (mate[g.edge(i).u] == g.edge(i).v) out.push_back(i);
    return out;
}

/// Independent set with |A| > |N(A)| of largest deficiency, scanning sets
/// smallest first and keeping the first one of each deficiency. nullopt when
/// every independent set satisfies the marriage condition.
inline std::optional<VertexSet> hall_violator(const Graph& g, std::size_t max_n = kDefaultMaxVertices) {
    std::optional<VertexSet> best;
    std::ptrdiff_t best_deficiency = 0;
    for_each_independent_set(g, max_n, [&](const VertexSet& a) {
        const auto deficiency =
            static_cast<std::ptrdiff_t>(a.size()) - static_cast<std::ptrdiff_t>(neighbor_set(g, a).size());
        if (deficiency > best_deficiency) {
            best_deficiency = deficiency;
            best = a;
        }
        return true;
    });
    return best;
}

struct MatchingResult {
    bool perfect = false;
    std::vector<EdgeIndex> matching;  // when perfect
    std::optional<VertexSet> violator;  // when not: |A| > |N(A)|
};

/// Perfect matching exists iff the all-ones vector lies in the edge cone.
inline MatchingResult has_perfect_matching(const Graph& g, std::size_t max_n = kDefaultMaxVertices) {
    detail::require_bipartite(g, "perfect matching via the marriage condition");
    const std::size_t n = g.vertex_count();
    MatchingResult r;
    r.perfect = membership(g, RationalVector(n, Rational(1)), max_n).member;
    if (r.perfect) {
        auto d = integer_decompose(g, IntVector(n, 1));
        if (!d.found()) throw std::logic_error("all-ones vector is in the cone but has no integer decomposition");
        for (EdgeIndex i = 0; i < g.edge_count(); ++i)
            if (d.decomposition->multiplicities[i] > 0) r.matching.push_back(i);
    } else {
        r.violator = hall_violator(g, max_n);
        if (!r.violator) throw std::logic_error("all-ones vector is outside the cone but no Hall violator exists");
    }
    return r;
}

}  // namespace edgecone
