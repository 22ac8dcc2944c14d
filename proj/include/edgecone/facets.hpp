#pragma once

// Facets of the edge cone. For arbitrary graphs a candidate hyperplane is a
// facet exactly when the edge vectors lying on it span a space of dimension
// dim(cone) - 1. For connected bipartite graphs there is also a purely
// combinatorial test on A ⊊ V1, a facet duality between the two sides, and a
// unique irreducible representation using only A ⊊ V1 and coordinates of V2.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgecone/cone.hpp"
#include "edgecone/errors.hpp"
#include "edgecone/graph.hpp"
#include "edgecone/linalg.hpp"

namespace edgecone {

struct Facet {
    Halfspace halfspace;
    std::vector<EdgeIndex> generators_on;  // edges whose vectors lie on the bounding hyperplane
};

/// Face cut out by a supporting hyperplane.
struct Face {
    std::vector<EdgeIndex> generators_on;
    std::size_t dimension = 0;
    Sense sense = Sense::AtLeastZero;  // side of the hyperplane holding the cone
};

namespace detail {

inline std::size_t rank_of_edges(const Graph& g, const std::vector<EdgeIndex>& edges) {
    std::vector<RationalVector> rows;
    rows.reserve(edges.size());
    for (EdgeIndex i : edges) {
        RationalVector a(g.vertex_count(), 0);
        a[g.edge(i).u] = 1;
        a[g.edge(i).v] = 1;
        rows.push_back(std::move(a));
    }
    return rational_rank(rows);
}

inline Sense natural_sense(const HyperplaneTag& tag, Sense fallback) {
    if (std::holds_alternative<CoordinateTag>(tag)) return Sense::AtLeastZero;
    if (std::holds_alternative<IndependentSetTag>(tag)) return Sense::AtMostZero;
    return fallback;
}

inline void require_connected_bipartite(const Graph& g, const std::string& what) {
    if (!g.is_connected() || !g.is_bipartite() || g.edge_count() == 0)
        throw DomainError(what + " requires a connected bipartite graph with at least one edge");
}

}  // namespace detail

/// Face of the edge cone on `h`. Throws NonSupportingHyperplane when edge
/// vectors lie strictly on both sides.
inline Face face_of(const Graph& g, const Hyperplane& h) {
    if (h.dimension() != g.vertex_count()) throw DimensionMismatch("hyperplane dimension differs from vertex count");
    Face f;
    bool positive = false, negative = false;
    for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        const std::int64_t v = h.normal()[e.u] + h.normal()[e.v];
        if (v == 0)
            f.generators_on.push_back(i);
        else
            (v > 0 ? positive : negative) = true;
    }
    if (positive && negative) throw NonSupportingHyperplane("edge vectors lie strictly on both sides of the hyperplane");
    f.sense = negative ? Sense::AtMostZero
                       : (positive ? Sense::AtLeastZero : detail::natural_sense(h.tag(), Sense::AtLeastZero));
    f.dimension = detail::rank_of_edges(g, f.generators_on);
    return f;
}

inline std::size_t face_dimension(const Graph& g, const Hyperplane& h) { return face_of(g, h).dimension; }

/// A face is a facet when its dimension is dim(cone) - 1. Cones of dimension
/// at most 1 are treated as having no facets.
inline bool is_facet(const Graph& g, const Hyperplane& h) {
    const Face f = face_of(g, h);
    const std::size_t dim = cone_dimension(g);
    return dim >= 2 && f.dimension + 1 == dim;
}

namespace detail {

/// Every coordinate and independent-set hyperplane that cuts a facet, grouped
/// by the facet's generator set.
inline std::map<std::vector<EdgeIndex>, std::vector<Halfspace>> facet_groups(const Graph& g, std::size_t max_n) {
    std::map<std::vector<EdgeIndex>, std::vector<Halfspace>> groups;
    const std::size_t dim = cone_dimension(g);
    if (dim < 2) return groups;
    auto consider = [&](Hyperplane h, Sense sense) {
        Face f = face_of(g, h);
        if (f.dimension + 1 == dim) groups[f.generators_on].push_back(Halfspace{std::move(h), sense});
    };
    for (VertexIndex i = 0; i < g.vertex_count(); ++i)
        consider(Hyperplane::coordinate(g.vertex_count(), i), Sense::AtLeastZero);
    auto sets = enumerate_independent_sets(g, max_n);
    std::sort(sets.begin(), sets.end());
    for (const auto& a : sets) consider(Hyperplane::independent_set(g, a), Sense::AtMostZero);
    return groups;
}

inline bool is_coordinate(const Halfspace& h) { return std::holds_alternative<CoordinateTag>(h.hyperplane.tag()); }

inline const VertexSet* independent_set_of(const Halfspace& h) {
    const auto* t = std::get_if<IndependentSetTag>(&h.hyperplane.tag());
    return t ? &t->set : nullptr;
}

/// Output order: coordinate facets by index, then A-facets by lexicographic A.
inline bool facet_order(const Facet& x, const Facet& y) {
    const auto* cx = std::get_if<CoordinateTag>(&x.halfspace.hyperplane.tag());
    const auto* cy = std::get_if<CoordinateTag>(&y.halfspace.hyperplane.tag());
    if (cx && cy) return cx->vertex < cy->vertex;
    if (cx || cy) return cx != nullptr;
    const auto* ax = independent_set_of(x.halfspace);
    const auto* ay = independent_set_of(y.halfspace);
    if (ax && ay) return *ax < *ay;
    return ax != nullptr && ay == nullptr;
}

/// Tag for a facet in the unique bipartite representation: the A ⊊ V1 if one
/// cuts it, otherwise a coordinate of a vertex in V2.
inline Halfspace canonical_tag(const Graph& g, const std::vector<Halfspace>& group) {
    const Bipartition& bp = *g.bipartition(0);
    const Halfspace* chosen = nullptr;
    for (const auto& h : group) {
        const auto* a = independent_set_of(h);
        if (a && a->is_subset_of(bp.first) && a->size() < bp.first.size()) {
            if (chosen && independent_set_of(*chosen))
                throw std::logic_error("two distinct subsets of the first side cut the same facet");
            chosen = &h;
        }
    }
    if (chosen) return *chosen;
    for (const auto& h : group) {
        const auto* c = std::get_if<CoordinateTag>(&h.hyperplane.tag());
        if (c && bp.second.contains(c->vertex)) return h;
    }
    throw std::logic_error("facet has neither a first-side subset tag nor a second-side coordinate tag");
}

}  // namespace detail

/// All facets, one per generator set. Each facet is tagged by a coordinate
/// when one cuts it; otherwise, for connected bipartite graphs, by its
/// A ⊊ V1 when one exists; otherwise by the lexicographically smallest A.
inline std::vector<Facet> facets(const Graph& g, std::size_t max_n = kDefaultMaxVertices) {
    const bool connected_bipartite = g.is_connected() && g.is_bipartite();
    std::vector<Facet> out;
    for (auto& [on, group] : detail::facet_groups(g, max_n)) {
        const Halfspace* best = nullptr;
        for (const auto& h : group)
            if (detail::is_coordinate(h)) {
                best = &h;
                break;
            }
        if (!best && connected_bipartite) {
            const auto& first = g.bipartition(0)->first;
            for (const auto& h : group) {
                const auto* a = detail::independent_set_of(h);
                if (a && a->is_subset_of(first) && a->size() < first.size()) {
                    best = &h;
                    break;
                }
            }
        }
        if (!best) best = &group.front();  // groups are filled in lexicographic order of A
        out.push_back(Facet{*best, on});
    }
    std::sort(out.begin(), out.end(), detail::facet_order);
    return out;
}

/// Affine hull plus exactly one halfspace per facet. A ray gets the single
/// coordinate halfspace that orients it; the zero cone gets none.
inline ConeRepresentation irreducible_representation(const Graph& g, std::size_t max_n = kDefaultMaxVertices) {
    ConeRepresentation rep;
    rep.dimension = g.vertex_count();
    rep.kind = RepresentationKind::Irreducible;
    rep.equations = affine_hull(g);
    const std::size_t dim = cone_dimension(g);
    if (dim == 1) {
        const auto& e = g.edge(0);
        rep.halfspaces.push_back({Hyperplane::coordinate(g.vertex_count(), e.u), Sense::AtLeastZero});
    } else if (dim >= 2) {
        for (auto& f : facets(g, max_n)) rep.halfspaces.push_back(std::move(f.halfspace));
    }
    return rep;
}

enum class Side { First, Second };

namespace detail {
inline std::pair<const VertexSet&, const VertexSet&> sides(const Graph& g, Side side) {
    const Bipartition& bp = *g.bipartition(0);
    if (side == Side::First) return {bp.first, bp.second};
    return {bp.second, bp.first};
}

inline void require_proper_subset(const Graph& g, const VertexSet& a, const VertexSet& own, const char* what) {
    detail::check_range(g, a);
    if (a.empty() || !a.is_subset_of(own) || a.size() == own.size())
        throw DomainError(std::string(what) + " requires a nonempty proper subset of one side of the bipartition");
}
}  // namespace detail

/// Combinatorial facet test for A ⊊ (chosen side), connected bipartite G:
///  (a) <A ∪ N(A)> is connected and misses exactly one vertex, which is on A's side; or
///  (b) <A ∪ N(A)> and <(other \ N(A)) ∪ (own \ A)> are both connected
///      (together they always cover every vertex).
inline bool bipartite_facet_check(const Graph& g, const VertexSet& a, Side side = Side::First) {
    detail::require_connected_bipartite(g, "bipartite facet check");
    auto [own, other] = detail::sides(g, side);
    detail::require_proper_subset(g, a, own, "bipartite facet check");

    const VertexSet n_a = neighbor_set(g, a);
    const VertexSet inner = a.united(n_a);
    const bool inner_connected = induced_connected(g, inner);

    std::vector<VertexIndex> all(g.vertex_count());
    for (VertexIndex i = 0; i < all.size(); ++i) all[i] = i;
    const VertexSet missing = VertexSet(all).minus(inner);
    if (inner_connected && missing.size() == 1 && own.contains(missing.front())) return true;

    const VertexSet outer = other.minus(n_a).united(own.minus(a));
    return inner_connected && induced_connected(g, outer) && inner.united(outer).size() == g.vertex_count();
}

/// The same facet described from the other side: a coordinate halfspace
/// x_v >= 0 when N(A) is the whole other side (then A = own \ {v}), otherwise
/// H_B^- with B = other \ N(A), for which N(B) = own \ A.
inline Halfspace dual_facet(const Graph& g, const VertexSet& a, Side side = Side::First) {
    if (!bipartite_facet_check(g, a, side)) throw DomainError("dual facet requires a facet-defining set");
    auto [own, other] = detail::sides(g, side);
    const VertexSet n_a = neighbor_set(g, a);
    if (n_a == other) {
        const VertexSet rest = own.minus(a);
        if (rest.size() != 1) throw std::logic_error("facet with N(A) = other side must omit exactly one vertex");
        return Halfspace{Hyperplane::coordinate(g.vertex_count(), rest.front()), Sense::AtLeastZero};
    }
    const VertexSet b = other.minus(n_a);
    if (neighbor_set(g, b) != own.minus(a)) throw std::logic_error("dual facet set has unexpected neighborhood");
    return Halfspace{Hyperplane::independent_set(g, b), Sense::AtMostZero};
}

/// The unique irreducible representation whose independent-set tags are proper
/// subsets of the first side and whose coordinate tags are vertices of the
/// second side. The first side is the one holding the smallest vertex index.
inline ConeRepresentation canonical_representation(const Graph& g, std::size_t max_n = kDefaultMaxVertices) {
    detail::require_connected_bipartite(g, "canonical representation");
    check_enumeration_gate(g, max_n);
    ConeRepresentation rep;
    rep.dimension = g.vertex_count();
    rep.kind = RepresentationKind::CanonicalBipartite;
    rep.equations = affine_hull(g);
    if (g.vertex_count() == 2) {
        // A single edge spans a ray; orient it with the second side's coordinate.
        rep.halfspaces.push_back(
            {Hyperplane::coordinate(g.vertex_count(), g.bipartition(0)->second.front()), Sense::AtLeastZero});
        return rep;
    }
    std::vector<Facet> tagged;
    for (const auto& [on, group] : detail::facet_groups(g, max_n)) tagged.push_back({detail::canonical_tag(g, group), on});
    std::sort(tagged.begin(), tagged.end(), detail::facet_order);
    for (auto& f : tagged) rep.halfspaces.push_back(std::move(f.halfspace));
    return rep;
}

/// Reduces the full representation of a connected bipartite graph: drops
/// independent sets meeting both sides, drops halfspaces that are not facets,
/// and keeps one canonically tagged halfspace per facet.
inline ConeRepresentation remove_redundant(const Graph& g, const ConeRepresentation& rep) {
    if (rep.kind != RepresentationKind::Full) throw DomainError("remove_redundant expects a full representation");
    detail::require_connected_bipartite(g, "redundancy removal");
    if (rep.dimension != g.vertex_count()) throw DimensionMismatch("representation dimension differs from vertex count");
    if (g.vertex_count() == 2) return canonical_representation(g);

    const Bipartition& bp = *g.bipartition(0);
    const std::size_t dim = cone_dimension(g);
    std::map<std::vector<EdgeIndex>, std::vector<Halfspace>> groups;
    for (const auto& h : rep.halfspaces) {
        if (const auto* a = detail::independent_set_of(h)) {
            if (!a->intersected(bp.first).empty() && !a->intersected(bp.second).empty()) continue;
        }
        Face f = face_of(g, h.hyperplane);
        if (f.dimension + 1 != dim) continue;
        groups[f.generators_on].push_back(h);
    }
    ConeRepresentation out;
    out.dimension = rep.dimension;
    out.kind = RepresentationKind::CanonicalBipartite;
    out.equations = rep.equations;
    std::vector<Facet> tagged;
    for (const auto& [on, group] : groups) tagged.push_back({detail::canonical_tag(g, group), on});
    std::sort(tagged.begin(), tagged.end(), detail::facet_order);
    for (auto& f : tagged) out.halfspaces.push_back(std::move(f.halfspace));
    return out;
}

}  // namespace edgecone
