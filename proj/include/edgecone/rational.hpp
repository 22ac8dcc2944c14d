#pragma once

// Exact arithmetic primitives shared by every module. Nothing here touches
// floating point.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "edgecone/errors.hpp"

namespace edgecone {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Vertex-indexed exact coordinates.
using RationalVector = std::vector<Rational>;

/// Integer coordinates (hyperplane normals, lattice points).
using IntVector = std::vector<std::int64_t>;

inline RationalVector to_rational(std::span<const std::int64_t> v) {
    RationalVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

inline bool is_integral(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline std::int64_t to_int64(const Integer& z) {
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
        throw Error("integer does not fit in 64 bits: " + z.str());
    return z.convert_to<std::int64_t>();
}

/// Parses "7", "-3/4", "0.125", "+2.5" exactly. Rejects anything else.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { return ParseError("not an exact rational: '" + std::string(text) + "'"); };
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) throw fail();

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto digits = [](std::string_view d) {
        return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    // cpp_int reads a leading 0 as an octal prefix.
    auto decimal = [](std::string_view d) {
        while (d.size() > 1 && d.front() == '0') d.remove_prefix(1);
        return Integer{std::string(d)};
    };

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!digits(num) || !digits(den)) throw fail();
        Integer d = decimal(den);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rational(decimal(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !digits(whole)) || (!frac.empty() && !digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw fail();
        Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
        Integer num = decimal(std::string(whole.empty() ? "0" : whole) + std::string(frac));
        value = Rational(num, scale);
    } else {
        if (!digits(s)) throw fail();
        value = Rational(decimal(s));
    }
    return negative ? Rational(-value) : value;
}

/// "3/2" for non-integers, "3" otherwise. Inverse of parse_rational.
inline std::string to_string(const Rational& q) {
    if (is_integral(q)) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

/// Comma-separated exact rationals, e.g. "3/2,0,1".
inline RationalVector parse_rational_vector(std::string_view text) {
    RationalVector out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string to_string(const RationalVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += to_string(v[i]);
    }
    return out;
}

inline Rational dot(std::span<const std::int64_t> a, std::span<const Rational> x) {
    if (a.size() != x.size()) throw DimensionMismatch("dot product of vectors with different lengths");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] * x[i];
    return s;
}

inline std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors with different lengths");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Divides by the gcd of the nonzero entries. The zero vector is returned unchanged.
inline IntVector make_primitive(IntVector v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

inline bool is_primitive(std::span<const std::int64_t> v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g == 1;
}

/// Smallest positive integer multiple of a rational vector, made primitive.
/// The direction (sign) is preserved.
inline IntVector primitive_integer_multiple(std::span<const Rational> v) {
    Integer lcm_den = 1;
    for (const auto& q : v) lcm_den = boost::multiprecision::lcm(lcm_den, Integer(boost::multiprecision::denominator(q)));
    std::vector<Integer> scaled;
    scaled.reserve(v.size());
    Integer g = 0;
    for (const auto& q : v) {
        Integer z = boost::multiprecision::numerator(q) * (lcm_den / boost::multiprecision::denominator(q));
        g = boost::multiprecision::gcd(g, z);
        scaled.push_back(std::move(z));
    }
    IntVector out;
    out.reserve(v.size());
    for (auto& z : scaled) out.push_back(to_int64(g > 1 ? Integer(z / g) : z));
    return out;
}

}  // namespace edgecone
