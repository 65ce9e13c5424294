#pragma once

#include <map>
#include <random>

#include "heckeafl/localfield.hpp"
#include "heckeafl/qlaurent.hpp"

namespace heckeafl {

/// Exact Laurent polynomial in Z = q^{-s}, the carrier of orbital integral
/// values; value and s-derivative at s = 0 are exact rationals (the
/// derivative in units of log q).
class OrbitalValue {
public:
    OrbitalValue() = default;

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Rational>& laurent() const { return c_; }
    Rational coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rational(0) : it->second;
    }
    void add(int k, const Rational& v) {
        if (v == 0) return;
        auto it = c_.find(k);
        if (it == c_.end()) c_.emplace(k, v);
        else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    OrbitalValue operator+(const OrbitalValue& o) const;
    OrbitalValue operator-(const OrbitalValue& o) const;
    OrbitalValue operator*(const Rational& s) const;
    bool operator==(const OrbitalValue& o) const { return c_ == o.c_; }

    /// Substitute Z -> Z^k (s -> k*s).
    OrbitalValue stretch(int k) const;

    Rational value_at_0() const;
    /// dOrb/ds at s = 0 as the rational multiplier of log q.
    Rational derivative_at_0_logq() const;

    std::string str() const;

private:
    std::map<int, Rational> c_;
};

Rational value_at_0(const OrbitalValue& v);
Rational derivative_at_0(const OrbitalValue& v);

/// Regular semisimple point of the symmetric space S_2(F_0) with invariants.
struct SOrbit {
    Mat2 gamma;
    FieldElement a, d, bc;
    int r = 0;          // v(1 - a*conj(a))
    bool normalized = false;  // v(c) == 0
};

/// gamma(a, b) = [[a, b], [(1-Na)/conj(b), -conj(a) b/conj(b)]].
SOrbit make_gamma(const FieldElement& a, const FieldElement& b);

enum class MatchClass { Split, NonSplit };
MatchClass match_class(const SOrbit& orbit);

/// omega(gamma) = (-1)^{v(det(e, gamma e))} = (-1)^{v(b)}.
int transfer_factor(const SOrbit& orbit);

/// Closed forms of Orb(gamma, phi'_m, s) for normalized orbits.
OrbitalValue orb_S_closed(const SOrbit& orbit, int m);

/// Independent summation oracle over the mirabolic-torus conjugation orbit;
/// valid for any regular semisimple point of S_2(F_0).
OrbitalValue orb_S_oracle(const Mat2& gamma, int m);
OrbitalValue orb_S_oracle(const SOrbit& orbit, int m);

/// Orb(gamma, phi~'_m, s) from the closed forms.
OrbitalValue orb_S_tilde(const SOrbit& orbit, int m);

/// Unitary side: 2x2 matrix with truncated entries; the actual matrix is
/// p^{-shift} times the stored entries, unitary for the identity gram.
struct UOrbit {
    TruncatedElement a, b, c, d;
    int shift = 0;

    long val_a() const { return a.val() - shift; }
    long val_b() const { return b.val() - shift; }
    long val_c() const { return c.val() - shift; }
    long val_d() const { return d.val() - shift; }
};

/// Matched unitary element with the same invariants (a, d, bc) as the orbit;
/// requires r even. Precision N per working config.
UOrbit matched_unitary(const SOrbit& orbit, int N);

/// Orb(g, phi_m) in {0, 1}: evaluates both support criteria of the closed
/// form and cross-asserts them.
int orb_U_support(const UOrbit& g, int m);

struct HomOrbitalCheck {
    OrbitalValue homogeneous;   // in Z' = q^{-s}, even exponents only
    OrbitalValue bridged;       // eta~(g) * Orb(gamma, r^eta_*(f'_m), 2s)
    bool equal = false;
    Rational dhom;              // derivative of the homogeneous side
    Rational dinhom;            // derivative of Orb(gamma, r^eta_*(f'_m), s)
};

/// Homogeneous-side oracle at n = 1: direct Iwasawa-reduction summation of
/// Orb((1,g), 1 (x) f'_m, s), compared against the inhomogeneous route.
HomOrbitalCheck homogeneous_orb_oracle(const Mat2& g, int fprime_index);

/// Seeded orbit samples. r_target selects v(1 - a conj a); the draw is
/// normalized (v(c) = 0, so v(b) = r).
SOrbit sample_orbit(std::mt19937_64& rng, const PrimeConfig& cfg, int r_target);
SOrbit sample_orbit_any(std::mt19937_64& rng, const PrimeConfig& cfg);

/// Random regular semisimple g in GL_2(F) for the homogeneous oracle.
Mat2 sample_gl2(std::mt19937_64& rng, const PrimeConfig& cfg);

} // namespace heckeafl
