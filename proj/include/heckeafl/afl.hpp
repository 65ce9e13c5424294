#pragma once

#include <cstdint>
#include <vector>

#include "heckeafl/report.hpp"

namespace heckeafl {

/// Fundamental lemma at n = 1: vanishing branch (r odd) and matching branch
/// (r even, against a constructed unitary element), across m <= m_max.
VerificationReport fl_check(const PrimeConfig& cfg, int sample_size, int m_max,
                            std::uint64_t seed);

/// Arithmetic fundamental lemma at n = 1: Int(g, phi_m) = -omega(gamma) *
/// dOrb(gamma, phi~'_m)/log q over the listed odd r and m <= m_max.
VerificationReport afl_check(const PrimeConfig& cfg, const std::vector<int>& r_list, int m_max,
                             std::uint64_t seed);

/// Kernel of the derivative-of-orbital-integral functional: the profiles of
/// phi_m coincide for m >= 1 and differ from phi_0; the lifts of phi_m -
/// phi_1 kill every derivative on the non-split matching locus.
VerificationReport kernel_check(const PrimeConfig& cfg, int m_max, std::uint64_t seed);

/// gcd(P_2, P_3) = 1 with a Bezout certificate, where P_m folds
/// Sat(phi_m - phi_1) into a polynomial in X1 = X + X^{-1} at numeric q.
VerificationReport coprimality_check(const std::vector<long>& q_values);

/// Set-level commutativity of composite Hecke supports at one self-dual
/// lattice (delegates to the lattice module).
VerificationReport comm_check(long p, int n, int t, int t2, long budget_cap = 50'000'000);

} // namespace heckeafl
