#pragma once

// Brute-force polyhedral computations that know nothing about graphs:
// facet enumeration from generators by scanning subsets, and cone membership
// by Fourier-Motzkin elimination of the combination multipliers. These are
// the reference answers the graph-theoretic routines are tested against.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "edgecone/cone.hpp"
#include "edgecone/errors.hpp"
#include "edgecone/facets.hpp"
#include "edgecone/graph.hpp"
#include "edgecone/linalg.hpp"
#include "edgecone/rational.hpp"

namespace edgecone::oracle {

inline constexpr std::size_t kMaxGenerators = 21;  // every simple graph on 7 vertices
inline constexpr std::size_t kMaxDimension = 10;

inline void check_gate(const std::vector<IntVector>& generators, std::size_t dimension) {
    if (generators.size() > kMaxGenerators || dimension > kMaxDimension)
        throw GateExceeded("oracle refused: " + std::to_string(generators.size()) + " generators in dimension " +
                           std::to_string(dimension) + " (limits " + std::to_string(kMaxGenerators) + ", " +
                           std::to_string(kMaxDimension) + ")");
    for (const auto& g : generators)
        if (g.size() != dimension) throw DimensionMismatch("generator length differs from dimension");
}

/// Homogeneous linear system over integers: equalities <a, x> = 0 and rows
/// <a, x> <= 0 (or >= 0, per sense).
struct InequalitySystem {
    struct Row {
        std::vector<Integer> normal;
        Sense sense;
    };
    std::vector<Row> rows;
    std::vector<std::vector<Integer>> equalities;

    bool contains(std::span<const Rational> x) const {
        auto eval = [&](const std::vector<Integer>& a) {
            if (a.size() != x.size()) throw DimensionMismatch("point length differs from system dimension");
            Rational s = 0;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != 0) s += Rational(a[i]) * x[i];
            return s;
        };
        for (const auto& e : equalities)
            if (eval(e) != 0) return false;
        for (const auto& r : rows) {
            Rational v = eval(r.normal);
            if (r.sense == Sense::AtMostZero ? v > 0 : v < 0) return false;
        }
        return true;
    }
};

namespace detail {

using Row = std::vector<Integer>;

inline void normalize(Row& r) {
    Integer g = 0;
    for (const auto& c : r) g = boost::multiprecision::gcd(g, c);
    if (g > 1)
        for (auto& c : r) c /= g;
}

inline int sign(const Integer& z) { return z > 0 ? 1 : (z < 0 ? -1 : 0); }

}  // namespace detail

/// Projection of {(lambda, x) : sum lambda_j g_j = x, lambda >= 0} onto x,
/// computed once by Fourier-Motzkin elimination of lambda in index order.
/// Inequalities carry the set of original rows they were derived from; rows
/// whose history is too large (Chernikov) or contains another row's history
/// (Kohler) are redundant and pruned.
class FourierMotzkinCone {
public:
    FourierMotzkinCone(const std::vector<IntVector>& generators, std::size_t dimension) : dimension_(dimension) {
        check_gate(generators, dimension);
        const std::size_t q = generators.size();
        const std::size_t width = q + dimension;

        std::vector<detail::Row> equalities;
        for (std::size_t i = 0; i < dimension; ++i) {
            detail::Row r(width, 0);
            for (std::size_t j = 0; j < q; ++j) r[j] = generators[j][i];
            r[q + i] = -1;
            equalities.push_back(std::move(r));
        }
        std::vector<Inequality> ineqs;
        for (std::size_t j = 0; j < q; ++j) {
            detail::Row r(width, 0);
            r[j] = -1;
            ineqs.push_back({std::move(r), std::uint32_t{1} << j});
        }

        // Substitute equalities first: each one that still mentions a multiplier removes it exactly.
        std::vector<bool> eliminated(q, false);
        while (true) {
            auto pivot_row = equalities.end();
            std::size_t col = q;
            for (auto it = equalities.begin(); it != equalities.end() && pivot_row == equalities.end(); ++it)
                for (std::size_t j = 0; j < q; ++j)
                    if ((*it)[j] != 0) {
                        pivot_row = it;
                        col = j;
                        break;
                    }
            if (pivot_row == equalities.end()) break;
            const detail::Row p = *pivot_row;
            equalities.erase(pivot_row);
            const Integer pk = p[col];
            const Integer mult = pk < 0 ? Integer(-pk) : pk;
            const int psign = detail::sign(pk);
            auto substitute = [&](detail::Row& r) {
                if (r[col] == 0) return;
                const Integer rk = r[col];
                for (std::size_t c = 0; c < width; ++c) r[c] = mult * r[c] - psign * rk * p[c];
                detail::normalize(r);
            };
            for (auto& e : equalities) substitute(e);
            for (auto& in : ineqs) substitute(in.row);
            eliminated[col] = true;
        }

        std::size_t fm_steps = 0;
        for (std::size_t col = 0; col < q; ++col) {
            if (eliminated[col]) continue;
            ++fm_steps;
            std::vector<Inequality> pos, neg, next;
            for (auto& in : ineqs) {
                const int s = detail::sign(in.row[col]);
                (s > 0 ? pos : (s < 0 ? neg : next)).push_back(std::move(in));
            }
            for (const auto& p : pos)
                for (const auto& n : neg) {
                    const std::uint32_t history = p.history | n.history;
                    if (static_cast<std::size_t>(std::popcount(history)) > fm_steps + 1) continue;
                    const Integer a = -n.row[col];
                    const Integer b = p.row[col];
                    detail::Row r(width);
                    for (std::size_t c = 0; c < width; ++c) r[c] = a * p.row[c] + b * n.row[c];
                    detail::normalize(r);
                    next.push_back({std::move(r), history});
                }
            ineqs = prune(std::move(next));
        }

        for (auto& e : equalities) {
            if (std::all_of(e.begin(), e.end(), [](const Integer& c) { return c == 0; })) continue;
            system_.equalities.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(q), e.end());
        }
        std::set<std::vector<Integer>> seen;
        for (auto& in : ineqs) {
            std::vector<Integer> a(in.row.begin() + static_cast<std::ptrdiff_t>(q), in.row.end());
            if (std::all_of(a.begin(), a.end(), [](const Integer& c) { return c == 0; })) continue;
            if (seen.insert(a).second) system_.rows.push_back({std::move(a), Sense::AtMostZero});
        }
    }

    std::size_t dimension() const { return dimension_; }
    const InequalitySystem& system() const { return system_; }

    bool contains(std::span<const Rational> x) const {
        if (x.size() != dimension_) throw DimensionMismatch("point length differs from dimension");
        return system_.contains(x);
    }

private:
    struct Inequality {
        detail::Row row;
        std::uint32_t history;
    };

    static std::vector<Inequality> prune(std::vector<Inequality> rows) {
        std::sort(rows.begin(), rows.end(), [](const Inequality& a, const Inequality& b) {
            const int pa = std::popcount(a.history), pb = std::popcount(b.history);
            if (pa != pb) return pa < pb;
            if (a.history != b.history) return a.history < b.history;
            return a.row < b.row;
        });
        std::vector<Inequality> kept;
        for (auto& r : rows) {
            if (std::all_of(r.row.begin(), r.row.end(), [](const Integer& c) { return c == 0; })) continue;
            bool redundant = false;
            for (const auto& k : kept) {
                if ((k.history & r.history) == k.history && (k.history != r.history || k.row == r.row)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back(std::move(r));
        }
        return kept;
    }

    std::size_t dimension_;
    InequalitySystem system_;
};

/// Whether x is a nonnegative combination of the generators.
inline bool fm_membership(const std::vector<IntVector>& generators, std::span<const Rational> x) {
    return FourierMotzkinCone(generators, x.size()).contains(x);
}

/// Facets of the cone generated by `generators`, as inward normals lying in
/// the linear span of the generators (so each facet has exactly one primitive
/// normal). Generators satisfy <normal, g> >= 0. Cones of dimension <= 1 have
/// none. Output sorted by normal.
inline std::vector<Hyperplane> brute_force_facets(const std::vector<IntVector>& generators, std::size_t dimension) {
    check_gate(generators, dimension);
    using linalg::Matrix;
    const std::size_t q = generators.size();
    Matrix<Rational> gens;
    for (const auto& g : generators) gens.push_back(to_rational(g));
    const auto span = linalg::echelon(gens, dimension);
    const std::size_t d = span.rank();
    std::vector<Hyperplane> out;
    if (d <= 1) return out;

    std::set<IntVector> found;
    std::vector<std::uint32_t> covered;  // generator sets of every hyperplane already examined
    std::vector<std::size_t> pick(d - 1);
    for (std::size_t i = 0; i < d - 1; ++i) pick[i] = i;

    while (true) {
        std::uint32_t mask = 0;
        for (auto i : pick) mask |= std::uint32_t{1} << i;
        const bool known = std::any_of(covered.begin(), covered.end(), [&](auto c) { return (c & mask) == mask; });
        if (!known) {
            Matrix<Rational> subset;
            for (auto i : pick) subset.push_back(gens[i]);
            if (linalg::rank(subset) == d - 1) {
                // normal = sum c_k w_k with <normal, s> = 0 for every picked generator s
                Matrix<Rational> system(d - 1, std::vector<Rational>(d, 0));
                for (std::size_t r = 0; r < d - 1; ++r)
                    for (std::size_t k = 0; k < d; ++k)
                        for (std::size_t c = 0; c < dimension; ++c)
                            if (span.rows[k][c] != 0 && subset[r][c] != 0) system[r][k] += span.rows[k][c] * subset[r][c];
                const auto kernel = linalg::nullspace(system, d);
                RationalVector normal(dimension, 0);
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t c = 0; c < dimension; ++c) normal[c] += kernel.front()[k] * span.rows[k][c];
                IntVector a = primitive_integer_multiple(normal);

                bool positive = false, negative = false;
                std::uint32_t on = 0;
                for (std::size_t j = 0; j < q; ++j) {
                    const auto v = dot(a, generators[j]);
                    if (v == 0) on |= std::uint32_t{1} << j;
                    else (v > 0 ? positive : negative) = true;
                }
                covered.push_back(on);
                if (!(positive && negative)) {
                    if (negative)
                        for (auto& c : a) c = -c;
                    found.insert(a);
                }
            }
        }
        // next combination
        std::size_t i = d - 1;
        while (i > 0 && pick[i - 1] == q - (d - 1) + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < d - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
    for (const auto& a : found) out.emplace_back(a);
    return out;
}

/// Indices of the generators lying on the hyperplane.
inline std::vector<std::size_t> generators_on(const std::vector<IntVector>& generators, const Hyperplane& h) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < generators.size(); ++j)
        if (dot(h.normal(), generators[j]) == 0) out.push_back(j);
    return out;
}

/// Primitive inward normal of a halfspace after projecting it onto the linear
/// span of the generators. Two halfspaces agree on the affine hull exactly
/// when their reduced normals coincide.
inline IntVector reduce_modulo_hull(const std::vector<IntVector>& generators, const Halfspace& h) {
    linalg::Matrix<Rational> gens;
    for (const auto& g : generators) gens.push_back(to_rational(g));
    const auto span = linalg::echelon(gens, h.hyperplane.dimension());
    const auto inward = to_rational(h.inward_normal());
    const auto projected = linalg::project_onto_rowspace<Rational>(span.rows, inward);
    if (std::all_of(projected.begin(), projected.end(), [](const Rational& c) { return c == 0; })) return IntVector(h.hyperplane.dimension(), 0);
    return primitive_integer_multiple(projected);
}

/// A point satisfying every equation and every halfspace of `rep` except the
/// one at `index`, which it violates. Built by stepping from the relative
/// interior of that halfspace's face towards the outside. nullopt when the
/// construction fails, which happens when the halfspace is not needed.
inline std::optional<RationalVector> irreducibility_witness(const std::vector<IntVector>& generators,
                                                             const ConeRepresentation& rep, std::size_t index) {
    const Halfspace& target = rep.halfspaces.at(index);
    const IntVector inward = target.inward_normal();
    const std::size_t n = rep.dimension;
    RationalVector base(n, 0);
    const IntVector* outward_step = nullptr;
    for (const auto& g : generators) {
        const auto v = dot(inward, g);
        if (v == 0)
            for (std::size_t c = 0; c < n; ++c) base[c] += g[c];
        else if (v > 0 && !outward_step)
            outward_step = &g;
        else if (v < 0)
            return std::nullopt;  // not a valid inequality for this cone
    }
    if (!outward_step) return std::nullopt;

    Rational step = 1;
    for (std::size_t j = 0; j < rep.halfspaces.size(); ++j) {
        if (j == index) continue;
        const IntVector other = rep.halfspaces[j].inward_normal();
        const Rational slack = dot(other, base);
        const Rational rate = dot(other, *outward_step);  // decrease per unit step
        if (rate <= 0) continue;
        if (slack <= 0) return std::nullopt;
        step = std::min(step, Rational(slack / (2 * rate)));
    }
    RationalVector point = base;
    for (std::size_t c = 0; c < n; ++c) point[c] -= step * (*outward_step)[c];
    return point;
}

/// Deterministic pseudo-random source (fixed algorithm, portable output).
class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}
    /// Uniform-ish integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin() { return (engine_() >> 17) & 1u; }

private:
    std::mt19937_64 engine_;
};

struct ValidationOptions {
    std::size_t random_combinations = 20;
    std::size_t random_points = 20;
    std::uint64_t seed = 1;
    std::size_t max_n = kDefaultMaxVertices;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string witness;  // first disagreement, empty on success
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    std::size_t facet_count = 0;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }
};

/// Test points for membership comparisons: every generator, random
/// nonnegative rational combinations of random generator subsets, random
/// rational points, and the all-ones vector.
inline std::vector<RationalVector> membership_battery(const std::vector<IntVector>& generators, std::size_t dimension,
                                                      std::size_t combinations, std::size_t points, Random& rng) {
    std::vector<RationalVector> out;
    for (const auto& g : generators) out.push_back(to_rational(g));
    for (std::size_t k = 0; k < combinations; ++k) {
        RationalVector x(dimension, 0);
        for (const auto& g : generators) {
            if (!rng.coin()) continue;
            const Rational lambda(rng.between(0, 7), rng.between(1, 4));
            for (std::size_t c = 0; c < dimension; ++c) x[c] += lambda * g[c];
        }
        out.push_back(std::move(x));
    }
    for (std::size_t k = 0; k < points; ++k) {
        RationalVector x(dimension);
        for (auto& c : x) c = Rational(rng.between(-3, 9), rng.between(1, 3));
        // Half of them nudged to be nonnegative so they probe the non-coordinate facets.
        if (k % 2 == 0)
            for (auto& c : x)
                if (c < 0) c = -c;
        out.push_back(std::move(x));
    }
    out.emplace_back(dimension, Rational(1));
    return out;
}

/// Compares the graph-theoretic answers with the brute-force ones.
inline ValidationReport cross_validate(const Graph& g, const ValidationOptions& options = {}) {
    const auto gens = edge_vectors(g);
    const std::size_t n = g.vertex_count();
    check_gate(gens, n);
    ValidationReport report;

    {
        CheckResult c{"dimension", true, 1, {}};
        std::vector<RationalVector> cols;
        for (const auto& a : gens) cols.push_back(to_rational(a));
        const std::size_t formula = n - count_bipartite_components(g);
        const std::size_t rank = rational_rank(cols);
        if (formula != rank) {
            c.passed = false;
            c.witness = "n - c0 = " + std::to_string(formula) + ", rank = " + std::to_string(rank);
        }
        report.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"facets", true, 0, {}};
        const auto lib = facets(g, options.max_n);
        const auto brute = brute_force_facets(gens, n);
        report.facet_count = lib.size();
        std::set<std::vector<std::size_t>> lib_sets, brute_sets;
        std::set<IntVector> lib_normals, brute_normals(
            [&] {
                std::set<IntVector> s;
                for (const auto& h : brute) s.insert(h.normal());
                return s;
            }());
        for (const auto& f : lib) {
            lib_sets.insert(f.generators_on);
            lib_normals.insert(reduce_modulo_hull(gens, f.halfspace));
        }
        for (const auto& h : brute) brute_sets.insert(generators_on(gens, h));
        c.cases = lib.size() + brute.size();
        if (lib_sets != brute_sets || lib_normals != brute_normals) {
            c.passed = false;
            std::vector<std::vector<std::size_t>> diff;
            std::set_symmetric_difference(lib_sets.begin(), lib_sets.end(), brute_sets.begin(), brute_sets.end(),
                                          std::back_inserter(diff));
            c.witness = "library " + std::to_string(lib.size()) + " facets, oracle " + std::to_string(brute.size());
            if (!diff.empty()) {
                c.witness += "; first differing generator set {";
                for (std::size_t i = 0; i < diff.front().size(); ++i)
                    c.witness += (i ? "," : "") + g.edge_label(diff.front()[i]);
                c.witness += "}";
            }
        }
        report.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"membership", true, 0, {}};
        Random rng(options.seed);
        const auto rep = full_representation(g, options.max_n);
        const FourierMotzkinCone fm(gens, n);
        for (const auto& x : membership_battery(gens, n, options.random_combinations, options.random_points, rng)) {
            ++c.cases;
            const bool a = rep.contains(x);
            const bool b = fm.contains(x);
            if (a != b) {
                c.passed = false;
                c.witness = "(" + to_string(x) + "): inequality system says " + (a ? "member" : "non-member") +
                            ", elimination says " + (b ? "member" : "non-member");
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

}  // namespace edgecone::oracle
