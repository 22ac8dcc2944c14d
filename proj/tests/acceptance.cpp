// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "edgecone/edgecone.hpp"
#include "fixtures.hpp"

using namespace edgecone;
namespace fx = edgecone::fixtures;

namespace {

struct Outcome {
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;  // first failure

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

struct Criterion {
    int number;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> body;
};

std::string set_text(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g.label(s[i]);
    return out + "}";
}

std::string graph_text(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " vertices [";
    for (EdgeIndex i = 0; i < g.edge_count(); ++i) out += (i ? "; " : "") + g.edge_label(i);
    return out + "]";
}

const std::vector<Graph>& connected_graphs() {
    static const std::vector<Graph> battery = fx::connected_battery(500, 20240611);
    return battery;
}

// Connected bipartite graphs from the battery plus 8-vertex ones.
const std::vector<Graph>& connected_bipartite_graphs() {
    static const std::vector<Graph> battery = [] {
        std::vector<Graph> out;
        for (const auto& g : connected_graphs())
            if (g.is_bipartite() && g.edge_count() > 0) out.push_back(g);
        std::mt19937_64 rng(8);
        for (int k = 0; k < 100; ++k) out.push_back(fx::random_connected_bipartite(8, rng));
        out.push_back(fx::complete_bipartite(4, 4));
        return out;
    }();
    return battery;
}

// Adds every bipartite labeled graph on at most 5 vertices, connected or not.
const std::vector<Graph>& bipartite_graphs() {
    static const std::vector<Graph> battery = [] {
        std::vector<Graph> out = connected_bipartite_graphs();
        for (std::size_t n = 1; n <= 5; ++n)
            for (auto& g : fx::all_labeled_graphs(n))
                if (g.is_bipartite() && !g.is_connected()) out.push_back(std::move(g));
        return out;
    }();
    return battery;
}

std::set<std::vector<EdgeIndex>> on_sets(const std::vector<Facet>& fs) {
    std::set<std::vector<EdgeIndex>> out;
    for (const auto& f : fs) out.insert(f.generators_on);
    return out;
}

std::vector<VertexSet> proper_subsets(const VertexSet& side) {
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << side.size()); ++mask) {
        std::vector<VertexIndex> pick;
        for (std::size_t i = 0; i < side.size(); ++i)
            if (mask >> i & 1u) pick.push_back(side[i]);
        out.emplace_back(pick);
    }
    return out;
}

Outcome star_facets() {
    Outcome o;
    const Graph star = fx::k13();
    const auto fs = facets(star);
    o.cases = 1;
    if (fs.size() != 3) o.fail("expected 3 facets, got " + std::to_string(fs.size()));
    for (std::size_t i = 0; i < fs.size() && i < 3; ++i) {
        const auto* c = std::get_if<CoordinateTag>(&fs[i].halfspace.hyperplane.tag());
        if (!c || c->vertex != i || fs[i].halfspace.sense != Sense::AtLeastZero)
            o.fail("facet " + std::to_string(i) + " is not the coordinate halfspace of leaf " + star.label(i));
    }
    const auto center = Hyperplane::coordinate(4, 3);
    if (is_facet(star, center)) o.fail("center coordinate reported as a facet");
    const std::size_t dim = face_dimension(star, center);
    if (dim != 1)
        o.fail("center coordinate face has dimension " + std::to_string(dim) +
               ", expected 1 (x_center = 0 holds only at the origin of this cone)");
    return o;
}

Outcome complete_bipartite_facets() {
    Outcome o;
    for (std::size_t m = 2; m <= 4; ++m)
        for (std::size_t n = m; n <= 4; ++n) {
            ++o.cases;
            const Graph g = fx::complete_bipartite(m, n);
            const std::string name = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
            const auto fs = facets(g);
            if (fs.size() != m + n) o.fail(name + ": " + std::to_string(fs.size()) + " facets");
            for (std::size_t i = 0; i < fs.size(); ++i) {
                const auto* c = std::get_if<CoordinateTag>(&fs[i].halfspace.hyperplane.tag());
                if (!c || c->vertex != i) o.fail(name + ": facet " + std::to_string(i) + " is not x_" + g.label(i));
            }
            IntVector expected(m + n, -1);
            for (std::size_t i = 0; i < m; ++i) expected[i] = 1;
            const auto hull = affine_hull(g);
            if (hull.size() != 1 || hull[0].normal() != expected) o.fail(name + ": affine hull differs");
        }
    return o;
}

Outcome dimension_identity() {
    Outcome o;
    for (const auto& g : connected_graphs()) {
        ++o.cases;
        std::vector<RationalVector> cols;
        for (const auto& a : edge_vectors(g)) cols.push_back(to_rational(a));
        const std::size_t rank = rational_rank(cols);
        const std::size_t formula = g.vertex_count() - count_bipartite_components(g);
        if (rank != formula)
            o.fail(graph_text(g) + ": n - c0 = " + std::to_string(formula) + ", rank = " + std::to_string(rank));
    }
    return o;
}

Outcome representation_correctness() {
    Outcome o;
    oracle::Random rng(4);
    for (const auto& g : connected_graphs()) {
        const auto gens = edge_vectors(g);
        const std::size_t n = g.vertex_count();
        const auto rep = full_representation(g);
        std::vector<RationalVector> points;
        if (gens.empty()) {
            points.emplace_back(n, Rational(0));
            points.emplace_back(n, Rational(1));
            for (const auto& x : points) {
                ++o.cases;
                const bool zero = std::all_of(x.begin(), x.end(), [](const Rational& c) { return c == 0; });
                if (rep.contains(x) != zero) o.fail(graph_text(g) + ": zero cone membership");
            }
            continue;
        }
        const oracle::FourierMotzkinCone fm(gens, n);
        for (const auto& x : oracle::membership_battery(gens, n, 50, 50, rng)) {
            ++o.cases;
            if (rep.contains(x) != fm.contains(x)) o.fail(graph_text(g) + " at " + to_string(x));
        }
    }
    return o;
}

Outcome facet_triple_agreement() {
    Outcome o;
    for (const auto& g : connected_bipartite_graphs()) {
        ++o.cases;
        const auto gens = edge_vectors(g);
        const auto rank_sets = on_sets(facets(g));

        std::set<std::vector<EdgeIndex>> combinatorial;
        if (cone_dimension(g) >= 2) {
            for (Side side : {Side::First, Side::Second}) {
                const auto& own = side == Side::First ? g.bipartition(0)->first : g.bipartition(0)->second;
                for (const auto& a : proper_subsets(own)) {
                    if (!bipartite_facet_check(g, a, side)) continue;
                    const auto direct = face_of(g, Hyperplane::independent_set(g, a)).generators_on;
                    const auto dual = face_of(g, dual_facet(g, a, side).hyperplane).generators_on;
                    if (direct != dual) o.fail(graph_text(g) + ": dual of " + set_text(g, a) + " cuts another face");
                    combinatorial.insert(direct);
                }
            }
        }

        std::set<std::vector<EdgeIndex>> brute;
        for (const auto& h : oracle::brute_force_facets(gens, g.vertex_count()))
            brute.insert(oracle::generators_on(gens, h));

        if (rank_sets != brute || combinatorial != brute)
            o.fail(graph_text(g) + ": rank " + std::to_string(rank_sets.size()) + ", combinatorial " +
                   std::to_string(combinatorial.size()) + ", brute force " + std::to_string(brute.size()));
    }
    return o;
}

Outcome irreducibility_and_uniqueness() {
    Outcome o;
    for (const auto& g : connected_bipartite_graphs()) {
        const auto gens = edge_vectors(g);
        const auto rep = canonical_representation(g);
        for (std::size_t i = 0; i < rep.halfspaces.size(); ++i) {
            ++o.cases;
            const auto w = oracle::irreducibility_witness(gens, rep, i);
            if (!w) {
                o.fail(graph_text(g) + ": no witness for halfspace " + std::to_string(i));
                continue;
            }
            bool relaxed = true;
            for (std::size_t j = 0; j < rep.halfspaces.size(); ++j)
                if (j != i && !rep.halfspaces[j].contains(*w)) relaxed = false;
            for (const auto& e : rep.equations)
                if (e.evaluate(*w) != 0) relaxed = false;
            if (!relaxed) o.fail(graph_text(g) + ": witness " + to_string(*w) + " leaves the relaxed set");
            if (oracle::fm_membership(gens, *w)) o.fail(graph_text(g) + ": witness " + to_string(*w) + " is in the cone");
        }

        if (cone_dimension(g) < 2) continue;
        const auto& first = g.bipartition(0)->first;
        std::map<std::vector<EdgeIndex>, VertexSet> cut_by;
        for (const auto& a : proper_subsets(first)) {
            const auto h = Hyperplane::independent_set(g, a);
            if (!is_facet(g, h)) continue;
            ++o.cases;
            const auto [it, fresh] = cut_by.emplace(face_of(g, h).generators_on, a);
            if (!fresh) o.fail(graph_text(g) + ": " + set_text(g, it->second) + " and " + set_text(g, a) + " cut one facet");
        }
    }
    return o;
}

Outcome marriage_equivalence() {
    Outcome o;
    for (const auto& g : bipartite_graphs()) {
        ++o.cases;
        const std::size_t n = g.vertex_count();
        bool hall = true;
        for (const auto& a : enumerate_independent_sets(g))
            if (a.size() > neighbor_set(g, a).size()) hall = false;
        const bool ones = membership(g, RationalVector(n, Rational(1))).member;
        const bool augmenting = 2 * maximum_matching(g).size() == n;
        if (hall != ones || ones != augmenting) {
            o.fail(graph_text(g) + ": hall " + std::to_string(hall) + ", all-ones " + std::to_string(ones) +
                   ", augmenting " + std::to_string(augmenting));
            continue;
        }
        const auto r = has_perfect_matching(g);
        if (r.perfect != hall) o.fail(graph_text(g) + ": has_perfect_matching disagrees");
        if (r.perfect) {
            std::vector<int> hits(n, 0);
            for (EdgeIndex i : r.matching) {
                ++hits[g.edge(i).u];
                ++hits[g.edge(i).v];
            }
            if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
                o.fail(graph_text(g) + ": matching does not cover every vertex exactly once");
        } else if (!r.violator || !is_independent(g, *r.violator) ||
                   r.violator->size() <= neighbor_set(g, *r.violator).size()) {
            o.fail(graph_text(g) + ": violator does not violate the marriage condition");
        }
    }
    return o;
}

Outcome lattice_identity() {
    Outcome o;
    std::mt19937_64 rng(9);
    auto check_found = [&](const Graph& g, const IntVector& b, const char* what) {
        const auto r = integer_decompose(g, b);
        if (!r.found()) {
            o.fail(graph_text(g) + ": " + what + " point " + to_string(to_rational(b)) + " not decomposed");
            return;
        }
        if (r.decomposition->sum(g) != b) o.fail(graph_text(g) + ": decomposition does not re-sum");
        for (auto m : r.decomposition->multiplicities)
            if (m < 0) o.fail(graph_text(g) + ": negative multiplicity");
        if (!parity_check(b)) o.fail(graph_text(g) + ": decomposed point with odd coordinate sum");
    };

    for (const auto& g : bipartite_graphs()) {
        const std::size_t n = g.vertex_count();
        for (int t = 0; t < 200; ++t) {
            ++o.cases;
            EdgeDecomposition d;
            for (EdgeIndex i = 0; i < g.edge_count(); ++i) d.multiplicities.push_back(static_cast<std::int64_t>(rng() % 6));
            check_found(g, d.sum(g), "generated");
        }
        // integer points passing real membership: the 0/1 box and random small points
        const auto rep = full_representation(g);
        std::vector<IntVector> points;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            IntVector b(n);
            for (std::size_t v = 0; v < n; ++v) b[v] = (mask >> v) & 1u;
            points.push_back(std::move(b));
        }
        for (int t = 0; t < 100; ++t) {
            IntVector b(n);
            for (auto& c : b) c = static_cast<std::int64_t>(rng() % 5);
            points.push_back(std::move(b));
        }
        for (const auto& b : points) {
            if (!rep.contains(to_rational(b))) {
                if (integer_decompose(g, b).found()) o.fail(graph_text(g) + ": decomposed a point outside the cone");
                continue;
            }
            ++o.cases;
            check_found(g, b, "member");
        }
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "star: three leaf-coordinate facets, center face of dimension 1", 1.0, star_facets},
        {2, "complete bipartite K_{m,n}, 2<=m<=n<=4: m+n coordinate facets and one hull equation", 5.0,
         complete_bipartite_facets},
        {3, "dimension identity n - c0 = rank on the connected battery", 60.0, dimension_identity},
        {4, "full representation agrees with Fourier-Motzkin membership", 600.0, representation_correctness},
        {5, "rank, combinatorial and brute-force facets coincide", 0.0, facet_triple_agreement},
        {6, "canonical representation is irreducible with unique first-side tags", 0.0,
         irreducibility_and_uniqueness},
        {7, "marriage condition, all-ones membership and augmenting paths agree", 0.0, marriage_equivalence},
        {8, "integer points of bipartite cones decompose into edges", 0.0, lattice_identity},
    };

    std::cout << "battery: " << connected_graphs().size() << " connected graphs, "
              << connected_bipartite_graphs().size() << " connected bipartite, " << bipartite_graphs().size()
              << " bipartite\n";
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds)
            o.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3f s", seconds);
        std::cout << (o.passed ? "PASS" : "FAIL") << "  [" << c.number << "] " << c.name << "  (" << o.cases
                  << " cases, " << timing << ")";
        if (!o.passed) std::cout << "\n      " << o.detail;
        std::cout << "\n";
        failures += !o.passed;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << "\n";
    return failures == 0 ? 0 : 1;
}
