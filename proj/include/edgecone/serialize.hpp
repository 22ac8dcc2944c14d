#pragma once

// JSON documents for representations, facets, decompositions and reports.
// Key order is fixed (ordered_json) so output is byte-for-byte reproducible.

#include <string>
#include <vector>

#include "json.hpp"

#include "edgecone/cone.hpp"
#include "edgecone/facets.hpp"
#include "edgecone/graph.hpp"
#include "edgecone/lattice.hpp"
#include "edgecone/oracle.hpp"

namespace edgecone::io {

using Json = nlohmann::ordered_json;

inline Json labels_of(const Graph& g, const VertexSet& s) {
    Json out = Json::array();
    for (VertexIndex v : s) out.push_back(g.label(v));
    return out;
}

inline Json to_json(const Graph& g, const HyperplaneTag& tag) {
    return std::visit(
        [&](const auto& t) -> Json {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, CoordinateTag>)
                return Json{{"type", "coordinate"}, {"vertex", g.label(t.vertex)}};
            else if constexpr (std::is_same_v<T, IndependentSetTag>)
                return Json{{"type", "independent_set"}, {"vertices", labels_of(g, t.set)}};
            else if constexpr (std::is_same_v<T, AffineComponentTag>)
                return Json{{"type", "affine_component"}, {"component", t.component}};
            else
                return Json{{"type", "untagged"}};
        },
        tag);
}

inline const char* sense_symbol(std::optional<Sense> s) {
    if (!s) return "=0";
    return *s == Sense::AtLeastZero ? ">=0" : "<=0";
}

inline Json constraint_json(const Graph& g, const Hyperplane& h, std::optional<Sense> sense) {
    return Json{{"normal", h.normal()}, {"sense", sense_symbol(sense)}, {"tag", to_json(g, h.tag())}};
}

inline Json to_json(const Graph& g, const Halfspace& h) { return constraint_json(g, h.hyperplane, h.sense); }

inline const char* kind_name(RepresentationKind k) {
    switch (k) {
        case RepresentationKind::Full: return "full";
        case RepresentationKind::Irreducible: return "irreducible";
        case RepresentationKind::CanonicalBipartite: return "canonical_bipartite";
    }
    return "unknown";
}

inline Json to_json(const Graph& g, const ConeRepresentation& rep) {
    Json eqs = Json::array(), hs = Json::array();
    for (const auto& e : rep.equations) eqs.push_back(constraint_json(g, e, std::nullopt));
    for (const auto& h : rep.halfspaces) hs.push_back(to_json(g, h));
    return Json{{"vertices", g.labels()}, {"kind", kind_name(rep.kind)}, {"equations", eqs}, {"halfspaces", hs}};
}

inline Json to_json(const Graph& g, const Facet& f) {
    Json edges = Json::array();
    for (EdgeIndex i : f.generators_on) edges.push_back(Json::array({g.label(g.edge(i).u), g.label(g.edge(i).v)}));
    return Json{{"halfspace", to_json(g, f.halfspace)}, {"generators_on", f.generators_on}, {"generator_edges", edges}};
}

inline Json to_json(const Graph& g, const Violation& v) {
    return Json{{"constraint", constraint_json(g, v.hyperplane, v.sense)}, {"value", to_string(v.value)}};
}

inline Json point_json(const RationalVector& x) {
    Json out = Json::array();
    for (const auto& c : x) out.push_back(to_string(c));
    return out;
}

/// Edge label ("u v") to multiplicity, positive multiplicities only, edge order.
inline Json to_json(const Graph& g, const EdgeDecomposition& d) {
    Json out = Json::object();
    for (EdgeIndex i = 0; i < d.multiplicities.size(); ++i)
        if (d.multiplicities[i] != 0) out[g.edge_label(i)] = d.multiplicities[i];
    return out;
}

inline Json to_json(const oracle::ValidationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
        if (!c.witness.empty()) j["witness"] = c.witness;
        checks.push_back(std::move(j));
    }
    return Json{{"passed", r.passed()}, {"facet_count", r.facet_count}, {"checks", checks}};
}

}  // namespace edgecone::io
