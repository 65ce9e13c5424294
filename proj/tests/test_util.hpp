#pragma once

#include <random>

#include "heckeafl/localfield.hpp"

namespace heckeafl::testutil {

// Deterministic draws; avoid std distributions for cross-platform stability.
inline long rand_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + (long)(rng() % (unsigned long)(hi - lo + 1));
}

inline Rational rand_rational(std::mt19937_64& rng, const PrimeConfig& cfg, long num_bound = 40,
                              long den_bound = 20) {
    Int n(rand_range(rng, -num_bound, num_bound));
    long d = 1;
    do {
        d = rand_range(rng, 1, den_bound);
    } while (d % cfg.p == 0);
    return Rational(n, Int(d));
}

inline Rational rand_nonzero_rational(std::mt19937_64& rng, const PrimeConfig& cfg) {
    Rational r;
    do {
        r = rand_rational(rng, cfg);
    } while (r == 0);
    return r;
}

inline Rational rand_unit_rational(std::mt19937_64& rng, const PrimeConfig& cfg) {
    Rational r;
    do {
        r = rand_rational(rng, cfg);
    } while (r == 0 || num(r) % cfg.p == 0);
    return r;
}

inline FieldElement rand_field_element(std::mt19937_64& rng, const PrimeConfig& cfg) {
    return FieldElement(rand_rational(rng, cfg), rand_rational(rng, cfg), cfg);
}

inline FieldElement rand_nonzero_field_element(std::mt19937_64& rng, const PrimeConfig& cfg) {
    FieldElement e;
    do {
        e = rand_field_element(rng, cfg);
    } while (e.is_zero());
    return e;
}

} // namespace heckeafl::testutil
