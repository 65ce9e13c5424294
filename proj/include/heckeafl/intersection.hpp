#pragma once

#include "heckeafl/localfield.hpp"
#include "heckeafl/qlaurent.hpp"

namespace heckeafl {

/// Hermitian Gram matrix of a pair of special vectors.
struct FundamentalMatrix {
    Mat2 A;

    explicit FundamentalMatrix(Mat2 a);
    /// A = [[1, conj(a) p^m], [a p^m, p^{2m}]] for a unit a: the Gram matrix
    /// of <g u_0, p^m u_0> when (g u_0, u_0) = a.
    static FundamentalMatrix pair_gram(const FieldElement& a_unit, int m);
};

/// Valuations (a1, a2) of the elementary divisors, a1 <= a2.
std::pair<long, long> fundamental_invariants(const FundamentalMatrix& A);

/// Intersection number of two special divisors with fundamental invariants
/// (0, r), r odd (the non-split lattice regime): (r + 1) / 2.
Rational kr_pairing(const std::pair<long, long>& invariants);

struct IntersectionResult {
    Rational value;
    int r = 0;
    int m = 0;
};

/// Int(g, phi_m) for an orbit with v(1 - a conj a) = r odd:
/// 1 for m >= 1 and (r+1)/2 for m = 0.
IntersectionResult int_g_phi(int r, int m);

/// Degree of the m-th Cartan correspondence: q^{2m-1}(q+1).
Int degree_Tm(int m, long q);
QLaurent degree_Tm_symbolic(int m);

} // namespace heckeafl
