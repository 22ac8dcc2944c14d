#pragma once

// Simple undirected graphs: ingestion, components, bipartitions, neighbor and
// independent sets, and the incidence-matrix columns (edge vectors).
//
// Vertices are addressed by 0-based index in first-appearance order; labels are
// kept only for I/O.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgecone/errors.hpp"
#include "edgecone/rational.hpp"

namespace edgecone {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// Default cap on vertex count for operations that enumerate subsets.
inline constexpr std::size_t kDefaultMaxVertices = 20;

/// Sorted, deduplicated set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<VertexIndex> items) : VertexSet(std::vector<VertexIndex>(items)) {}
    explicit VertexSet(std::vector<VertexIndex> items) : items_(std::move(items)) {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    static VertexSet from_mask(std::uint64_t mask) {
        VertexSet s;
        for (VertexIndex i = 0; mask != 0; ++i, mask >>= 1)
            if (mask & 1u) s.items_.push_back(i);
        return s;
    }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    VertexIndex front() const { return items_.front(); }
    VertexIndex back() const { return items_.back(); }
    VertexIndex operator[](std::size_t i) const { return items_[i]; }
    const std::vector<VertexIndex>& indices() const { return items_; }

    bool contains(VertexIndex v) const { return std::binary_search(items_.begin(), items_.end(), v); }

    bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
    }

    VertexSet minus(const VertexSet& other) const {
        VertexSet out;
        std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                            std::back_inserter(out.items_));
        return out;
    }

    VertexSet united(const VertexSet& other) const {
        VertexSet out;
        std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                       std::back_inserter(out.items_));
        return out;
    }

    VertexSet intersected(const VertexSet& other) const {
        VertexSet out;
        std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                              std::back_inserter(out.items_));
        return out;
    }

    // Lexicographic on the sorted index sequence: {0} < {0,1} < {0,1,2} < {0,2} < {1}.
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<VertexIndex> items_;
};

struct Edge {
    VertexIndex u;  // u < v
    VertexIndex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Bipartition of one connected component. `first` holds the component's
/// smallest vertex index; an isolated vertex has an empty `second`.
struct Bipartition {
    VertexSet first;
    VertexSet second;
};

/// Immutable simple graph with eagerly computed components and bipartitions.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Throws ParseError on loops, duplicate edges or
    /// out-of-range endpoints.
    Graph(std::vector<std::string> labels, const std::vector<std::pair<VertexIndex, VertexIndex>>& edges)
        : labels_(std::move(labels)), neighbors_(labels_.size()) {
        std::set<std::pair<VertexIndex, VertexIndex>> seen;
        for (auto [a, b] : edges) {
            if (a >= labels_.size() || b >= labels_.size())
                throw ParseError("edge endpoint out of range");
            if (a == b) throw ParseError("loop at vertex '" + labels_[a] + "'");
            Edge e{std::min(a, b), std::max(a, b)};
            if (!seen.emplace(e.u, e.v).second)
                throw ParseError("duplicate edge '" + labels_[e.u] + " " + labels_[e.v] + "'");
            edges_.push_back(e);
            neighbors_[e.u].push_back(e.v);
            neighbors_[e.v].push_back(e.u);
        }
        for (auto& n : neighbors_) std::sort(n.begin(), n.end());
        compute_components();
    }

    /// Graph on vertices v1..vn; edges given by 0-based index pairs.
    static Graph numbered(std::size_t n, const std::vector<std::pair<VertexIndex, VertexIndex>>& edges) {
        std::vector<std::string> labels;
        for (std::size_t i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
        return Graph(std::move(labels), edges);
    }

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(VertexIndex v) const { return labels_.at(v); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeIndex i) const { return edges_.at(i); }
    const std::vector<VertexIndex>& neighbors(VertexIndex v) const { return neighbors_.at(v); }

    std::optional<VertexIndex> index_of(std::string_view label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) return std::nullopt;
        return static_cast<VertexIndex>(it - labels_.begin());
    }

    bool adjacent(VertexIndex a, VertexIndex b) const {
        const auto& n = neighbors_.at(a);
        return std::binary_search(n.begin(), n.end(), b);
    }

    /// Components ordered by their smallest vertex.
    const std::vector<VertexSet>& components() const { return components_; }
    std::size_t component_of(VertexIndex v) const { return component_of_.at(v); }
    const std::optional<Bipartition>& bipartition(std::size_t component) const {
        return bipartitions_.at(component);
    }

    bool is_connected() const { return components_.size() == 1; }

    bool is_bipartite() const {
        return std::all_of(bipartitions_.begin(), bipartitions_.end(), [](const auto& b) { return b.has_value(); });
    }

    std::string edge_label(EdgeIndex i) const {
        const auto& e = edges_.at(i);
        return labels_[e.u] + " " + labels_[e.v];
    }

private:
    void compute_components() {
        const std::size_t n = labels_.size();
        component_of_.assign(n, n);
        std::vector<int> color(n, -1);
        for (VertexIndex start = 0; start < n; ++start) {
            if (component_of_[start] != n) continue;
            const std::size_t id = components_.size();
            std::vector<VertexIndex> members;
            bool bipartite = true;
            std::queue<VertexIndex> q;
            q.push(start);
            component_of_[start] = id;
            color[start] = 0;
            while (!q.empty()) {
                VertexIndex v = q.front();
                q.pop();
                members.push_back(v);
                for (VertexIndex w : neighbors_[v]) {
                    if (component_of_[w] == n) {
                        component_of_[w] = id;
                        color[w] = 1 - color[v];
                        q.push(w);
                    } else if (color[w] == color[v]) {
                        bipartite = false;
                    }
                }
            }
            VertexSet comp(members);
            if (bipartite) {
                // BFS from the smallest vertex colors it 0, so side 0 is the normalized first side.
                std::vector<VertexIndex> s0, s1;
                for (VertexIndex v : comp) (color[v] == 0 ? s0 : s1).push_back(v);
                bipartitions_.push_back(Bipartition{VertexSet(std::move(s0)), VertexSet(std::move(s1))});
            } else {
                bipartitions_.push_back(std::nullopt);
            }
            components_.push_back(std::move(comp));
        }
    }

    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexIndex>> neighbors_;
    std::vector<VertexSet> components_;
    std::vector<std::size_t> component_of_;
    std::vector<std::optional<Bipartition>> bipartitions_;
};

/// Reads the edge-list format: one edge per line as two whitespace-separated
/// labels, a single label declares a vertex, blank lines and `#` lines are
/// skipped. Vertices are numbered in order of first appearance.
inline Graph parse_graph(std::string_view text) {
    std::vector<std::string> labels;
    std::map<std::string, VertexIndex, std::less<>> index;
    std::vector<std::pair<VertexIndex, VertexIndex>> edges;
    std::set<std::pair<VertexIndex, VertexIndex>> seen;

    auto intern = [&](const std::string& label) {
        auto [it, inserted] = index.emplace(label, labels.size());
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::istringstream tokens{std::string(line)};
        std::vector<std::string> words;
        for (std::string w; tokens >> w;) words.push_back(std::move(w));
        if (words.empty() || words.front().front() == '#') continue;

        if (words.size() == 1) {
            intern(words[0]);
        } else if (words.size() == 2) {
            if (words[0] == words[1]) throw ParseError("loop at vertex '" + words[0] + "'", line_no);
            VertexIndex a = intern(words[0]);
            VertexIndex b = intern(words[1]);
            if (!seen.emplace(std::min(a, b), std::max(a, b)).second)
                throw ParseError("duplicate edge '" + words[0] + " " + words[1] + "'", line_no);
            edges.emplace_back(a, b);
        } else {
            throw ParseError("expected one or two labels, found " + std::to_string(words.size()), line_no);
        }
    }
    return Graph(std::move(labels), edges);
}

namespace detail {
inline void check_range(const Graph& g, const VertexSet& a) {
    if (!a.empty() && a.back() >= g.vertex_count())
        throw DomainError("vertex index " + std::to_string(a.back() + 1) + " out of range");
}
}  // namespace detail

/// Vertices adjacent to at least one member of `a`.
inline VertexSet neighbor_set(const Graph& g, const VertexSet& a) {
    detail::check_range(g, a);
    std::vector<VertexIndex> out;
    for (VertexIndex v : a) out.insert(out.end(), g.neighbors(v).begin(), g.neighbors(v).end());
    return VertexSet(std::move(out));
}

inline bool is_independent(const Graph& g, const VertexSet& a) {
    detail::check_range(g, a);
    for (VertexIndex v : a)
        for (VertexIndex w : g.neighbors(v))
            if (w > v && a.contains(w)) return false;
    return true;
}

inline void check_enumeration_gate(const Graph& g, std::size_t max_n) {
    if (max_n > 63) max_n = 63;
    if (g.vertex_count() > max_n)
        throw GateExceeded("exponential enumeration refused: graph has " + std::to_string(g.vertex_count()) +
                           " vertices, gate is " + std::to_string(max_n));
}

/// Calls `visit(const VertexSet&)` for every nonempty independent set, smallest
/// first and lexicographically within one size. A visitor returning `false`
/// stops the enumeration.
template <class Visitor>
void for_each_independent_set(const Graph& g, std::size_t max_n, Visitor&& visit) {
    check_enumeration_gate(g, max_n);
    const std::size_t n = g.vertex_count();
    std::vector<std::uint64_t> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= std::uint64_t{1} << e.v;
        adj[e.v] |= std::uint64_t{1} << e.u;
    }

    std::vector<VertexIndex> chosen;
    bool stopped = false;
    // Depth-first over increasing indices yields lexicographic order for a fixed size.
    auto extend = [&](auto&& self, std::size_t target, VertexIndex from, std::uint64_t blocked) -> void {
        if (stopped) return;
        if (chosen.size() == target) {
            if (!visit(VertexSet(chosen))) stopped = true;
            return;
        }
        for (VertexIndex v = from; v + (target - chosen.size()) <= n && !stopped; ++v) {
            if (blocked & (std::uint64_t{1} << v)) continue;
            chosen.push_back(v);
            self(self, target, v + 1, blocked | adj[v]);
            chosen.pop_back();
        }
    };
    for (std::size_t size = 1; size <= n && !stopped; ++size) extend(extend, size, 0, 0);
}

inline std::vector<VertexSet> enumerate_independent_sets(const Graph& g, std::size_t max_n = kDefaultMaxVertices) {
    std::vector<VertexSet> out;
    for_each_independent_set(g, max_n, [&](const VertexSet& a) {
        out.push_back(a);
        return true;
    });
    return out;
}

/// Number of bipartite connected components; isolated vertices count.
inline std::size_t count_bipartite_components(const Graph& g) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < g.components().size(); ++k)
        if (g.bipartition(k)) ++c;
    return c;
}

/// Columns of the incidence matrix: e_u + e_v for each edge, in edge order.
inline std::vector<IntVector> edge_vectors(const Graph& g) {
    std::vector<IntVector> out;
    out.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        IntVector a(g.vertex_count(), 0);
        a[e.u] = 1;
        a[e.v] = 1;
        out.push_back(std::move(a));
    }
    return out;
}

/// Whether the subgraph induced on `s` is connected. The empty set is not.
inline bool induced_connected(const Graph& g, const VertexSet& s) {
    detail::check_range(g, s);
    if (s.empty()) return false;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexIndex> stack{s.front()};
    seen[s.front()] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        VertexIndex v = stack.back();
        stack.pop_back();
        ++reached;
        for (VertexIndex w : g.neighbors(v)) {
            if (!seen[w] && s.contains(w)) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return reached == s.size();
}

}  // namespace edgecone
