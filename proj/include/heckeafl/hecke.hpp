#pragma once

#include <map>
#include <optional>

#include "heckeafl/symfun.hpp"

namespace heckeafl {

/// Spherical Hecke algebra element for GL_n(F), held in Satake coordinates.
struct GLHecke {
    int n = 0;
    GLSatakeElement sat;

    GLHecke operator+(const GLHecke& o) const { return {n, sat + o.sat}; }
    GLHecke operator-(const GLHecke& o) const { return {n, sat - o.sat}; }
    GLHecke operator*(const GLHecke& o) const { return {n, sat * o.sat}; }
    GLHecke operator*(const QLaurent& s) const { return {n, sat * s}; }
    bool operator==(const GLHecke& o) const { return n == o.n && sat == o.sat; }
};

/// Spherical Hecke algebra element for U_n, held in Satake coordinates; may
/// carry its expansion over the f^[t] basis.
struct UHecke {
    int n = 0;
    USatakeElement sat;
    std::optional<std::map<int, QLaurent>> basis_coeffs;  // t -> coefficient of f^[t]

    UHecke operator+(const UHecke& o) const { return {n, sat + o.sat, std::nullopt}; }
    UHecke operator-(const UHecke& o) const { return {n, sat - o.sat, std::nullopt}; }
    UHecke operator*(const QLaurent& s) const { return {n, sat * s, std::nullopt}; }
    bool operator==(const UHecke& o) const { return n == o.n && sat == o.sat; }

    /// Named-basis text "f[2] + 4*f[0]" when basis_coeffs is present.
    std::string basis_str() const;
};

/// Element of the Hecke module of the symmetric space S_2 (n = 1 case),
/// written over the basis phi'_m of K'-orbit indicators.
struct SModuleElement {
    std::map<int, QLaurent> coeff;  // m -> coefficient, finitely supported

    SModuleElement operator+(const SModuleElement& o) const;
    SModuleElement operator-(const SModuleElement& o) const;
    SModuleElement operator*(const QLaurent& s) const;
    bool operator==(const SModuleElement& o) const { return coeff == o.coeff; }
    bool is_zero() const { return coeff.empty(); }
    std::string str() const;
};

enum class QBase { Q, MinusQ };

/// Gaussian binomial [n m] in q, optionally with q -> -q.
QLaurent qbinom(int n, int m, QBase base = QBase::Q);

/// Satake transform of the minuscule basis function of GL_n: q^i sigma_i.
GLHecke sat_gl_minuscule(int n, int i);

/// n = 2 (GL_2 over F) family: Sat(f'_m) = q^m (X^{m+1}-Y^{m+1})/(X-Y).
GLHecke sat_gl2_fprime(int m);

/// U_2 family: Sat(f_m) = q^m sum_{i=-m}^m X^i.
UHecke sat_u2_f(int m);
/// phi_m = f_m - f_{m-1}.
UHecke sat_u2_phi(int m);

/// Restriction of the exterior-power character chi(rho_{n,s}) to the s-basis.
USatakeElement chi_rho(int n, int s);

/// Sat(f^[t]) for even t, solved from the unitriangular system
/// q^{s(n-s)} chi(rho_{n,s}) = sum_i [n-2i, s-i]_{-q} Sat(f^[2i]).
UHecke sat_f_bracket(int n, int t);

/// Base change: substitute unitary Satake parameters and reduce.
UHecke bc(const GLHecke& e);

/// Twist by the unramified quadratic character: x_i -> -x_i.
GLHecke eta_twist(const GLHecke& e);

/// Convolution = product of Satake forms.
UHecke convolve(const UHecke& a, const UHecke& b);
GLHecke convolve(const GLHecke& a, const GLHecke& b);

/// eta-twisted fiber integration H_{K'} -> H_{K'_S} (n = 1, GL_2 source):
/// f'_m maps to (-1)^m sum_i (sum_{j<=m-i} q^j) phi'_i.
SModuleElement r_eta_star(int fprime_index);
/// Same map on the double-coset basis 1_{K' pi^{(m,0)} K'} = f'_m - f'_{m-2}.
SModuleElement r_eta_star_minuscule(int m);

/// The preimage of phi_m under BC^eta_S: the function phi~'_m.
SModuleElement bc_S_eta_inverse(int phi_index);

/// Rewrite an S-module element over the phi~' basis (triangular inversion).
std::map<int, QLaurent> to_phitilde_basis(const SModuleElement& e);

/// Apply BC^eta_S: phi~'_m -> phi_m, landing in the U_2 Hecke algebra.
UHecke bc_S_eta(const SModuleElement& e);

/// Expansion of an n=2 element over the Cartan basis phi_m (leading
/// coefficient of Sat(phi_m) in s_1^m is q^m).
std::map<int, QLaurent> expand_u2_in_phi_basis(const USatakeElement& e);

/// Atomic function phi_t = 1_{K_0 K_t} * 1_{K_t K_0} expanded over the f^[t']
/// basis with multiplicities m(t', t) counted by lattice enumeration at the
/// numeric prime q.
UHecke atomic_phi(int n, int t, long q_value);

/// Same with coefficients as polynomials in q, via interpolation over primes
/// with a cross-check prime.
UHecke atomic_phi_interpolated(int n, int t);

} // namespace heckeafl
