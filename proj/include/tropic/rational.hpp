#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tropic/errors.hpp"

namespace tropic {

// Exact arithmetic everywhere: geometric predicates are decided by signs of
// integer determinants or by rational comparisons, never by floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Integer lattice vectors (exponents, lattice points, directions).
using IVec = std::vector<long long>;
// Rational points/vectors.
using QVec = std::vector<Rational>;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) fail(ErrorKind::ParseError, "rational with zero denominator");
    // cpp_rational's two-arg constructor rejects negative denominators
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

// Accepts "p", "-p", "p/q". Canonicalization (lowest terms, positive
// denominator) is inherent to cpp_rational.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) fail(ErrorKind::ParseError, "empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::runtime_error& e) {
        fail(ErrorKind::ParseError, "bad rational literal '" + s + "'");
    }
}

// "p/q", or plain "p" when the value is integral.
inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rational dot(const QVec& a, const IVec& b) {
    Rational acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * Int(b[i]);
    return acc;
}

inline Rational dot(const QVec& a, const QVec& b) {
    Rational acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline long long idot(const IVec& a, const IVec& b) {
    long long acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline IVec isub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline long long ivec_gcd(const IVec& v) {
    long long g = 0;
    for (long long c : v) g = std::gcd(g, c < 0 ? -c : c);
    return g;
}

// v / gcd(|v|), preserving direction.
inline IVec primitive_vector(const IVec& v) {
    long long g = ivec_gcd(v);
    if (g == 0) fail(ErrorKind::ZeroVector, "primitive_vector of zero vector");
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

// Decimal rendering with exact half-away-from-zero rounding; used by the SVG
// writer so output bytes never depend on floating-point formatting.
inline std::string decimal_string(const Rational& r, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int num = numerator(r) * scale * 2 + (r < 0 ? -denominator(r) : denominator(r));
    Int q = num / (denominator(r) * 2);  // truncation toward zero
    bool neg = q < 0;
    if (neg) q = -q;
    std::string ds = q.str();
    if ((int)ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string out = ds.substr(0, ds.size() - digits) + "." + ds.substr(ds.size() - digits);
    // trim trailing zeros but keep at least one decimal
    while (out.back() == '0' && out[out.size() - 2] != '.') out.pop_back();
    return (neg ? "-" : "") + out;
}

}  // namespace tropic
