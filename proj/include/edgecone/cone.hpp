#pragma once

// Halfspace description of the edge cone: dimension, affine hull, the full
// representation over coordinates and independent sets, and membership.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "edgecone/errors.hpp"
#include "edgecone/graph.hpp"
#include "edgecone/linalg.hpp"
#include "edgecone/rational.hpp"

namespace edgecone {

/// Coordinate hyperplane x_i = 0.
struct CoordinateTag {
    VertexIndex vertex;
    friend bool operator==(const CoordinateTag&, const CoordinateTag&) = default;
};

/// Hyperplane sum_{A} x_i = sum_{N(A)} x_i of an independent set A.
struct IndependentSetTag {
    VertexSet set;
    friend bool operator==(const IndependentSetTag&, const IndependentSetTag&) = default;
};

/// Side-sum equation of one bipartite component (index into Graph::components()).
struct AffineComponentTag {
    std::size_t component;
    friend bool operator==(const AffineComponentTag&, const AffineComponentTag&) = default;
};

/// Computed without combinatorial origin (oracle output).
struct UntaggedTag {
    friend bool operator==(const UntaggedTag&, const UntaggedTag&) = default;
};

using HyperplaneTag = std::variant<CoordinateTag, IndependentSetTag, AffineComponentTag, UntaggedTag>;

/// Linear hyperplane {x : <normal, x> = 0} with a primitive integer normal.
class Hyperplane {
public:
    /// Normalizes `normal` to be primitive. Throws on the zero vector.
    explicit Hyperplane(IntVector normal, HyperplaneTag tag = UntaggedTag{})
        : normal_(make_primitive(std::move(normal))), tag_(std::move(tag)) {
        if (std::all_of(normal_.begin(), normal_.end(), [](auto c) { return c == 0; }))
            throw DomainError("hyperplane normal must be nonzero");
    }

    static Hyperplane coordinate(std::size_t n, VertexIndex i) {
        if (i >= n) throw DomainError("coordinate index out of range");
        IntVector a(n, 0);
        a[i] = 1;
        return Hyperplane(std::move(a), CoordinateTag{i});
    }

    /// e_A - e_{N(A)}. Requires A nonempty and independent.
    static Hyperplane independent_set(const Graph& g, const VertexSet& a) {
        if (a.empty()) throw DomainError("independent-set hyperplane needs a nonempty set");
        if (!is_independent(g, a)) throw DomainError("vertex set is not independent");
        IntVector normal(g.vertex_count(), 0);
        for (VertexIndex v : a) normal[v] = 1;
        for (VertexIndex v : neighbor_set(g, a)) normal[v] = -1;
        return Hyperplane(std::move(normal), IndependentSetTag{a});
    }

    const IntVector& normal() const { return normal_; }
    const HyperplaneTag& tag() const { return tag_; }
    std::size_t dimension() const { return normal_.size(); }

    Rational evaluate(std::span<const Rational> x) const { return dot(normal_, x); }
    std::int64_t evaluate(std::span<const std::int64_t> x) const { return dot(normal_, x); }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

private:
    IntVector normal_;
    HyperplaneTag tag_;
};

enum class Sense { AtLeastZero, AtMostZero };

/// Closed halfspace {x : <normal, x> >= 0} or {x : <normal, x> <= 0}.
struct Halfspace {
    Hyperplane hyperplane;
    Sense sense;

    /// Amount by which x violates the inequality; nonpositive when satisfied.
    Rational violation(std::span<const Rational> x) const {
        Rational v = hyperplane.evaluate(x);
        return sense == Sense::AtLeastZero ? Rational(-v) : v;
    }
    bool contains(std::span<const Rational> x) const { return violation(x) <= 0; }

    /// Normal oriented so that the halfspace reads <inward, x> >= 0.
    IntVector inward_normal() const {
        IntVector a = hyperplane.normal();
        if (sense == Sense::AtMostZero)
            for (auto& c : a) c = -c;
        return a;
    }

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

enum class RepresentationKind { Full, Irreducible, CanonicalBipartite };

/// The constraint that excludes a point, as reported by membership tests.
struct Violation {
    Hyperplane hyperplane;
    std::optional<Sense> sense;  // nullopt for an affine-hull equation
    Rational value;              // <normal, x>
};

struct MembershipResult {
    bool member = false;
    std::optional<Violation> witness;
};

/// aff(cone) ∩ (intersection of halfspaces).
struct ConeRepresentation {
    std::size_t dimension = 0;  // ambient: number of vertices
    std::vector<Hyperplane> equations;
    std::vector<Halfspace> halfspaces;
    RepresentationKind kind = RepresentationKind::Full;

    /// Reports the most violated constraint; ties go to the earliest one
    /// (halfspaces in stored order, then equations).
    MembershipResult check(std::span<const Rational> x) const {
        if (x.size() != dimension)
            throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, graph has " +
                                    std::to_string(dimension) + " vertices");
        MembershipResult r{true, std::nullopt};
        Rational worst = 0;
        for (const auto& h : halfspaces) {
            Rational v = h.hyperplane.evaluate(x);
            Rational amount = h.sense == Sense::AtLeastZero ? Rational(-v) : v;
            if (amount > worst) {
                worst = amount;
                r.member = false;
                r.witness = Violation{h.hyperplane, h.sense, v};
            }
        }
        for (const auto& e : equations) {
            Rational v = e.evaluate(x);
            Rational amount = v < 0 ? Rational(-v) : v;
            if (amount > worst) {
                worst = amount;
                r.member = false;
                r.witness = Violation{e, std::nullopt, v};
            }
        }
        return r;
    }

    bool contains(std::span<const Rational> x) const { return check(x).member; }
};

/// dim of the edge cone, n - c0(G). Cross-checked against the exact rank of
/// the edge vectors; a disagreement is an internal error.
inline std::size_t cone_dimension(const Graph& g) {
    const std::size_t dim = g.vertex_count() - count_bipartite_components(g);
    std::vector<RationalVector> cols;
    for (const auto& a : edge_vectors(g)) cols.push_back(to_rational(a));
    const std::size_t r = rational_rank(cols);
    if (r != dim)
        throw std::logic_error("edge cone dimension " + std::to_string(dim) + " disagrees with incidence rank " +
                               std::to_string(r));
    return dim;
}

/// One equation per bipartite component: sum over its first side equals sum
/// over its second side. An isolated vertex v contributes x_v = 0.
inline std::vector<Hyperplane> affine_hull(const Graph& g) {
    std::vector<Hyperplane> out;
    for (std::size_t k = 0; k < g.components().size(); ++k) {
        const auto& bp = g.bipartition(k);
        if (!bp) continue;
        IntVector normal(g.vertex_count(), 0);
        for (VertexIndex v : bp->first) normal[v] = 1;
        for (VertexIndex v : bp->second) normal[v] = -1;
        out.emplace_back(std::move(normal), AffineComponentTag{k});
    }
    return out;
}

/// All coordinate halfspaces x_i >= 0 followed by H_A^- for every nonempty
/// independent set A, in lexicographic order of A.
inline ConeRepresentation full_representation(const Graph& g, std::size_t max_n = kDefaultMaxVertices) {
    ConeRepresentation rep;
    rep.dimension = g.vertex_count();
    rep.kind = RepresentationKind::Full;
    rep.equations = affine_hull(g);
    for (VertexIndex i = 0; i < g.vertex_count(); ++i)
        rep.halfspaces.push_back({Hyperplane::coordinate(g.vertex_count(), i), Sense::AtLeastZero});

    auto sets = enumerate_independent_sets(g, max_n);
    std::sort(sets.begin(), sets.end());
    // Distinct independent sets give distinct normals (A is the positive support),
    // but keep the first tag per normal so the output never repeats a halfspace.
    std::map<IntVector, bool> seen;
    for (const auto& a : sets) {
        auto h = Hyperplane::independent_set(g, a);
        if (seen.emplace(h.normal(), true).second) rep.halfspaces.push_back({std::move(h), Sense::AtMostZero});
    }
    return rep;
}

inline MembershipResult membership(const Graph& g, std::span<const Rational> x,
                                   std::size_t max_n = kDefaultMaxVertices) {
    if (x.size() != g.vertex_count())
        throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, graph has " +
                                std::to_string(g.vertex_count()) + " vertices");
    return full_representation(g, max_n).check(x);
}

}  // namespace edgecone
