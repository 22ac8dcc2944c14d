#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.
//
// Exit codes: 0 success, 1 the input violates a hypothesis of the requested
// operation (or validation failed), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "edgecone/cone.hpp"
#include "edgecone/errors.hpp"
#include "edgecone/facets.hpp"
#include "edgecone/graph.hpp"
#include "edgecone/lattice.hpp"
#include "edgecone/oracle.hpp"
#include "edgecone/serialize.hpp"

namespace edgecone::cli {

enum class Format { Json, Plain };

namespace detail {

using io::Json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string linear_form(const Graph& g, const IntVector& a) {
    std::string out;
    for (VertexIndex i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const auto mag = a[i] < 0 ? -a[i] : a[i];
        if (out.empty())
            out += a[i] < 0 ? "-" : "";
        else
            out += a[i] < 0 ? " - " : " + ";
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "x[" + g.label(i) + "]";
    }
    return out;
}

inline std::string tag_text(const Graph& g, const HyperplaneTag& tag) {
    if (const auto* c = std::get_if<CoordinateTag>(&tag)) return "coordinate " + g.label(c->vertex);
    if (const auto* a = std::get_if<IndependentSetTag>(&tag)) {
        std::string s = "A = {";
        bool first = true;
        for (VertexIndex v : a->set) {
            s += (first ? "" : ", ") + g.label(v);
            first = false;
        }
        return s + "}";
    }
    if (const auto* k = std::get_if<AffineComponentTag>(&tag)) return "component " + std::to_string(k->component);
    return "untagged";
}

inline std::string constraint_text(const Graph& g, const Hyperplane& h, std::optional<Sense> sense) {
    const char* rel = !sense ? " = 0" : (*sense == Sense::AtLeastZero ? " >= 0" : " <= 0");
    return linear_form(g, h.normal()) + rel + "   [" + tag_text(g, h.tag()) + "]";
}

inline std::string representation_text(const Graph& g, const ConeRepresentation& rep) {
    std::string out = std::string("kind: ") + io::kind_name(rep.kind) + "\n";
    for (const auto& e : rep.equations) out += "  " + constraint_text(g, e, std::nullopt) + "\n";
    for (const auto& h : rep.halfspaces) out += "  " + constraint_text(g, h.hyperplane, h.sense) + "\n";
    return out;
}

struct Context {
    Graph graph;
    Format format;
    std::size_t max_n;
    std::ostream& out;
};

inline RationalVector read_point(const Graph& g, const std::string& text) {
    RationalVector x = parse_rational_vector(text);
    if (x.size() != g.vertex_count())
        throw ParseError("vector has " + std::to_string(x.size()) + " coordinates but the graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
    return x;
}

inline void emit(Context& ctx, const Json& doc, const std::string& plain) {
    if (ctx.format == Format::Json)
        ctx.out << doc.dump(2) << "\n";
    else
        ctx.out << plain;
}

inline std::string vertices_line(const Graph& g) {
    std::string s = "vertices:";
    for (const auto& l : g.labels()) s += " " + l;
    return s + "\n";
}

inline int cmd_dim(Context& ctx) {
    const auto& g = ctx.graph;
    const std::size_t d = cone_dimension(g);
    Json doc{{"vertices", g.labels()},
             {"dimension", d},
             {"bipartite_components", count_bipartite_components(g)}};
    emit(ctx, doc, vertices_line(g) + "dimension: " + std::to_string(d) + "\n");
    return 0;
}

inline int cmd_repr(Context& ctx, bool canonical) {
    const auto& g = ctx.graph;
    const auto rep = canonical ? canonical_representation(g, ctx.max_n) : full_representation(g, ctx.max_n);
    emit(ctx, io::to_json(g, rep), vertices_line(g) + representation_text(g, rep));
    return 0;
}

inline int cmd_facets(Context& ctx) {
    const auto& g = ctx.graph;
    const auto fs = facets(g, ctx.max_n);
    const std::size_t dim = cone_dimension(g);
    Json list = Json::array(), faces = Json::array();
    std::string plain = vertices_line(g) + "cone dimension: " + std::to_string(dim) + "\nfacets: " +
                        std::to_string(fs.size()) + "\n";
    for (const auto& f : fs) {
        list.push_back(io::to_json(g, f));
        plain += "  " + constraint_text(g, f.halfspace.hyperplane, f.halfspace.sense) + "\n";
    }
    std::string plain_faces;
    for (VertexIndex i = 0; i < g.vertex_count(); ++i) {
        const auto h = Hyperplane::coordinate(g.vertex_count(), i);
        const auto face = face_of(g, h);
        if (dim >= 2 && face.dimension + 1 == dim) continue;
        faces.push_back(Json{{"vertex", g.label(i)}, {"dimension", face.dimension}});
        plain_faces += "  x[" + g.label(i) + "] = 0 cuts a face of dimension " + std::to_string(face.dimension) + "\n";
    }
    if (!plain_faces.empty()) plain += "non-facet coordinate faces:\n" + plain_faces;
    Json doc{{"vertices", g.labels()},
             {"cone_dimension", dim},
             {"facet_count", fs.size()},
             {"facets", list},
             {"non_facet_coordinate_faces", faces}};
    emit(ctx, doc, plain);
    return 0;
}

inline int cmd_member(Context& ctx, const std::string& vec) {
    const auto& g = ctx.graph;
    const auto x = read_point(g, vec);
    const auto r = membership(g, x, ctx.max_n);
    Json doc{{"vertices", g.labels()}, {"point", io::point_json(x)}, {"member", r.member}};
    std::string plain = vertices_line(g) + "point: " + to_string(x) + "\nmember: " + (r.member ? "true" : "false") + "\n";
    if (r.witness) {
        doc["witness"] = io::to_json(g, *r.witness);
        plain += "violated: " + constraint_text(g, r.witness->hyperplane, r.witness->sense) +
                 " (value " + to_string(r.witness->value) + ")\n";
    }
    emit(ctx, doc, plain);
    return 0;
}

inline int cmd_decompose(Context& ctx, const std::string& vec) {
    const auto& g = ctx.graph;
    const auto x = read_point(g, vec);
    IntVector b;
    for (const auto& c : x) {
        if (!is_integral(c)) throw DomainError("integer decomposition requires an integer vector");
        b.push_back(to_int64(boost::multiprecision::numerator(c)));
    }
    const auto r = integer_decompose(g, b);
    Json doc{{"vertices", g.labels()}, {"point", io::point_json(x)}, {"found", r.found()}};
    std::string plain = vertices_line(g) + "point: " + to_string(x) + "\n";
    if (r.found()) {
        doc["decomposition"] = io::to_json(g, *r.decomposition);
        plain += "decomposition:\n";
        for (EdgeIndex i = 0; i < g.edge_count(); ++i)
            if (r.decomposition->multiplicities[i] != 0)
                plain += "  " + g.edge_label(i) + ": " + std::to_string(r.decomposition->multiplicities[i]) + "\n";
    } else {
        doc["violated"] = io::to_json(g, *r.absence);
        plain += "no decomposition; violated: " + constraint_text(g, r.absence->hyperplane, r.absence->sense) +
                 " (value " + to_string(r.absence->value) + ")\n";
    }
    emit(ctx, doc, plain);
    return 0;
}

inline int cmd_matching(Context& ctx) {
    const auto& g = ctx.graph;
    const auto r = has_perfect_matching(g, ctx.max_n);
    Json doc{{"vertices", g.labels()}, {"perfect_matching", r.perfect}};
    std::string plain = vertices_line(g) + "perfect matching: " + (r.perfect ? "true" : "false") + "\n";
    if (r.perfect) {
        Json edges = Json::array();
        for (EdgeIndex i : r.matching) {
            edges.push_back(Json::array({g.label(g.edge(i).u), g.label(g.edge(i).v)}));
            plain += "  " + g.edge_label(i) + "\n";
        }
        doc["matching"] = edges;
    } else {
        const auto n_a = neighbor_set(g, *r.violator);
        doc["violator"] = Json{{"set", io::labels_of(g, *r.violator)}, {"neighbors", io::labels_of(g, n_a)}};
        plain += "violator: |A| = " + std::to_string(r.violator->size()) + " > |N(A)| = " + std::to_string(n_a.size()) +
                 "   [" + tag_text(g, IndependentSetTag{*r.violator}) + "]\n";
    }
    emit(ctx, doc, plain);
    return 0;
}

inline std::string report_text(const oracle::ValidationReport& rep) {
    std::string s = std::string("validation: ") + (rep.passed() ? "pass" : "FAIL") + "\n";
    for (const auto& c : rep.checks)
        s += "  " + c.name + ": " + (c.passed ? "pass" : "FAIL") + " (" + std::to_string(c.cases) + " cases)" +
             (c.witness.empty() ? "" : " " + c.witness) + "\n";
    return s;
}

inline int cmd_validate(Context& ctx) {
    const auto rep = oracle::cross_validate(ctx.graph, {.max_n = ctx.max_n});
    Json doc{{"vertices", ctx.graph.labels()}, {"report", io::to_json(rep)}};
    emit(ctx, doc, vertices_line(ctx.graph) + report_text(rep));
    return rep.passed() ? 0 : 1;
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name. When `summary` is
/// set, a one-line human summary goes to `err` after a successful command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool summary = false) {
    CLI::App app{"Halfspace representations, facets and matchings of graph edge cones", "edgecone"};
    app.require_subcommand(1);
    app.fallthrough();

    std::size_t max_n = kDefaultMaxVertices;
    bool force_oracle = false;
    std::string format_name = "json";
    app.add_option("--max-n", max_n, "Vertex limit for subset enumeration")->check(CLI::Range(1, 63));
    app.add_flag("--oracle", force_oracle, "Also cross-validate against the brute-force oracle");
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "plain"}));

    std::string path, vector_text;
    auto add = [&](const char* name, const char* help, bool takes_vector) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("graph", path, "Edge-list file")->required();
        if (takes_vector) sub->add_option("vector", vector_text, "Comma-separated exact rationals")->required();
        return sub;
    };
    auto* dim = add("dim", "Dimension of the edge cone", false);
    auto* repr = add("repr", "Full representation over coordinates and independent sets", false);
    auto* canonical = add("canonical", "Unique irreducible representation (connected bipartite graphs)", false);
    auto* facet_cmd = add("facets", "Facets of the edge cone", false);
    auto* member = add("member", "Membership of a point", true);
    auto* decompose = add("decompose", "Integer decomposition of a lattice point (bipartite graphs)", true);
    auto* matching = add("matching", "Perfect matching or a marriage-condition violator (bipartite graphs)", false);
    auto* validate = add("validate", "Cross-validate against the brute-force oracle", false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        detail::Context ctx{parse_graph(detail::read_file(path)), format_name == "plain" ? Format::Plain : Format::Json,
                            max_n, out};
        int code = 0;
        std::ostringstream buffer;
        detail::Context inner{ctx.graph, ctx.format, ctx.max_n, buffer};
        if (dim->parsed()) code = detail::cmd_dim(inner);
        else if (repr->parsed()) code = detail::cmd_repr(inner, false);
        else if (canonical->parsed()) code = detail::cmd_repr(inner, true);
        else if (facet_cmd->parsed()) code = detail::cmd_facets(inner);
        else if (member->parsed()) code = detail::cmd_member(inner, vector_text);
        else if (decompose->parsed()) code = detail::cmd_decompose(inner, vector_text);
        else if (matching->parsed()) code = detail::cmd_matching(inner);
        else if (validate->parsed()) code = detail::cmd_validate(inner);

        if (force_oracle && !validate->parsed()) {
            const auto rep = oracle::cross_validate(ctx.graph, {.max_n = max_n});
            if (ctx.format == Format::Json) {
                auto doc = io::Json::parse(buffer.str());
                doc["oracle"] = io::to_json(rep);
                out << doc.dump(2) << "\n";
            } else {
                out << buffer.str() << detail::report_text(rep);
            }
            if (!rep.passed()) code = 1;
        } else {
            out << buffer.str();
        }
        if (summary) err << app.get_subcommands().front()->get_name() << ": " << (code == 0 ? "ok" : "failed") << "\n";
        return code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "rejected: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace edgecone::cli
