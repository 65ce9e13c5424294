#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "heckeafl/errors.hpp"

namespace heckeafl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// p-adic valuation of a nonzero integer.
inline long vp_int(Int a, const Int& p) {
    if (a == 0) throw DomainError("vp_int: zero input");
    long v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
}

/// p-adic valuation of a nonzero rational.
inline long vp_rat(const Rational& r, const Int& p) {
    if (r == 0) throw DomainError("vp_rat: zero input");
    return vp_int(num(r), p) - vp_int(den(r), p);
}

inline Int pow_int(const Int& base, long e) {
    Int r = 1, b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
inline Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) { x = (a < 0) ? -1 : 1; y = 0; return a < 0 ? Int(-a) : a; }
    Int x1, y1;
    Int g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline Int inv_mod(const Int& a, const Int& m) {
    Int x, y;
    Int g = egcd(mod_pos(a, m), m, x, y);
    if (g != 1) throw DomainError("inv_mod: not invertible");
    return mod_pos(x, m);
}

/// Canonical residue in [0, m) of a rational with denominator prime to m.
inline Int rat_mod(const Rational& r, const Int& m) {
    return mod_pos(num(r) * inv_mod(mod_pos(den(r), m), m), m);
}

inline Int pow_mod(Int b, Int e, const Int& m) {
    Int r = 1;
    b = mod_pos(b, m);
    while (e > 0) {
        if (e % 2 == 1) r = r * b % m;
        b = b * b % m;
        e /= 2;
    }
    return r;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Serialization used everywhere in JSON output: always "num/den".
inline std::string rat_string(const Rational& r) {
    return num(r).str() + "/" + den(r).str();
}

/// Human form: "3", "-1/2".
inline std::string rat_pretty(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

Rational parse_rational(const std::string& s);

} // namespace heckeafl
