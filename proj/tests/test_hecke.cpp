#include <random>

#include "doctest.h"
#include "heckeafl/hecke.hpp"

using namespace heckeafl;

TEST_SUITE_BEGIN("hecke");

TEST_CASE("gaussian binomials") {
    CHECK(qbinom(2, 1) == QLaurent::q_power(1) + QLaurent(1));
    QLaurent b42 = qbinom(4, 2);
    // (q^2+1)(q^2+q+1) expanded
    QLaurent want = (QLaurent::q_power(2) + QLaurent(1)) *
                    (QLaurent::q_power(2) + QLaurent::q_power(1) + QLaurent(1));
    CHECK(b42 == want);
    CHECK(qbinom(2, 1, QBase::MinusQ) == QLaurent(1) - QLaurent::q_power(1));
    CHECK(qbinom(3, 0) == QLaurent(1));
    CHECK_THROWS_AS(qbinom(2, 3), DomainError);
}

TEST_CASE("minuscule satake") {
    for (int n : {2, 3, 4}) {
        CHECK(sat_gl_minuscule(n, 0).sat == GLSatakeElement::unit(n));
        CHECK(sat_gl_minuscule(n, 1).sat ==
              GLSatakeElement::sigma(n, 1) * QLaurent::q_power(1));
        CHECK(sat_gl_minuscule(n, n).sat ==
              GLSatakeElement::sigma(n, n) * QLaurent::q_power(n));
    }
}

TEST_CASE("rank-2 closed forms") {
    CHECK(sat_u2_f(1).sat.str() == "q*s1 + q");
    // q(X + 1 + X^{-1}) at X = 1, q = 3
    CHECK(evaluate(sat_u2_f(1).sat, {Rational(1)}, Rational(3)) == 9);
    USatakeElement phi1 = sat_u2_phi(1).sat;
    CHECK(phi1 == parse_u_satake("q*s1 + q - 1", 2));
    CHECK(sat_u2_phi(0).sat == USatakeElement::unit(2));
    // f'_m expands to q^m * h_m(X, Y)
    for (int m = 0; m <= 8; ++m) {
        MultiLaurent p(2);
        for (int a = 0; a <= m; ++a) p.add_term({a, m - a}, QLaurent::q_power(m));
        CHECK(expand(sat_gl2_fprime(m).sat) == p);
        MultiLaurent u(1);
        for (int i = -m; i <= m; ++i) u.add_term({i}, QLaurent::q_power(m));
        CHECK(expand(sat_u2_f(m).sat) == u);
    }
}

TEST_CASE("exterior power characters") {
    CHECK(chi_rho(2, 1) == USatakeElement::s_basis(2, 1));
    CHECK(chi_rho(3, 1) == USatakeElement::s_basis(3, 1) + USatakeElement::unit(3));
    CHECK(chi_rho(4, 2) == USatakeElement::s_basis(4, 2) + USatakeElement::unit(4) * QLaurent(2));
    // n odd: chi(rho_{5,2}) = s2 + s1 + 2
    CHECK(chi_rho(5, 2) == USatakeElement::s_basis(5, 2) + USatakeElement::s_basis(5, 1) +
                               USatakeElement::unit(5) * QLaurent(2));
}

TEST_CASE("triangular system for f-bracket") {
    CHECK(sat_f_bracket(2, 2).sat == sat_u2_phi(1).sat);
    for (int n : {2, 3, 4, 5, 6}) CHECK(sat_f_bracket(n, 0).sat == USatakeElement::unit(n));
    // Sat(f^[2]) = -[n]_{-q} + q^{n-1} (s1 or s1+1)
    for (int n : {2, 3, 4, 5, 6}) {
        USatakeElement want = USatakeElement::s_basis(n, 1) * QLaurent::q_power(n - 1);
        if (n % 2 == 1) want = want + USatakeElement::unit(n) * QLaurent::q_power(n - 1);
        want = want - USatakeElement::unit(n) * qbinom(n, 1, QBase::MinusQ);
        CHECK(sat_f_bracket(n, 2).sat == want);
    }
    CHECK(sat_f_bracket(3, 2).sat == parse_u_satake("q^2*s1 + q - 1", 3));
}

TEST_CASE("base change") {
    CHECK(bc(GLHecke{2, GLSatakeElement::sigma(2, 1)}).sat == USatakeElement::s_basis(2, 1));
    CHECK(bc(GLHecke{3, GLSatakeElement::sigma(3, 1)}).sat ==
          USatakeElement::s_basis(3, 1) + USatakeElement::unit(3));
    for (int m = 0; m <= 8; ++m) {
        GLHecke lhs = sat_gl2_fprime(m) + sat_gl2_fprime(m - 1) * QLaurent::q_power(1);
        CHECK(bc(lhs).sat == sat_u2_f(m).sat);
    }
    for (int n = 2; n <= 6; ++n)
        for (int s = 1; s <= n / 2; ++s)
            CHECK(bc(GLHecke{n, GLSatakeElement::sigma(n, s)}).sat == chi_rho(n, s));
}

TEST_CASE("bc is an algebra homomorphism") {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + (int)(rng() % 3);
        auto rand_elem = [&]() {
            GLSatakeElement e = GLSatakeElement::unit(n);
            GLHecke h{n, e};
            for (int t = 0; t < 2; ++t) {
                int i = 1 + (int)(rng() % n);
                h = h * QLaurent::q_power((int)(rng() % 2));
                h.sat = h.sat * GLSatakeElement::sigma(n, i);
            }
            return h;
        };
        GLHecke a = rand_elem(), b = rand_elem();
        CHECK(bc(convolve(a, b)).sat == (bc(a).sat * bc(b).sat));
    }
}

TEST_CASE("eta twist") {
    GLHecke s1{2, GLSatakeElement::sigma(2, 1)};
    GLHecke s2{2, GLSatakeElement::sigma(2, 2)};
    CHECK(eta_twist(s1).sat == s1.sat * QLaurent(-1));
    CHECK(eta_twist(s2).sat == s2.sat);
    GLHecke mix = sat_gl2_fprime(3);
    CHECK(eta_twist(eta_twist(mix)) == mix);
}

TEST_CASE("eta-twisted fiber integration") {
    SModuleElement r0 = r_eta_star(0);
    CHECK(r0.coeff.size() == 1);
    CHECK(r0.coeff.at(0) == QLaurent(1));
    SModuleElement r1 = r_eta_star(1);
    CHECK(r1.coeff.at(1) == QLaurent(-1));
    CHECK(r1.coeff.at(0) == -(QLaurent(1) + QLaurent::q_power(1)));
    // double-coset route agrees: 1_{K' pi^{(m,0)} K'} = f'_m - f'_{m-2}
    for (int m = 0; m <= 8; ++m)
        CHECK(r_eta_star_minuscule(m) == r_eta_star(m) - r_eta_star(m - 2));
}

TEST_CASE("phi-tilde basis") {
    CHECK(bc_S_eta_inverse(0).coeff.at(0) == QLaurent(1));
    SModuleElement t1 = bc_S_eta_inverse(1);
    CHECK(t1.coeff.at(1) == QLaurent(-1));
    CHECK(t1.coeff.at(0) == QLaurent(-2));
    SModuleElement t2 = bc_S_eta_inverse(2);
    CHECK(t2.coeff.at(2) == QLaurent(1));
    CHECK(t2.coeff.at(1) == QLaurent(2));
    CHECK(t2.coeff.at(0) == QLaurent(2));
    // triangular inversion round-trips
    SModuleElement e = bc_S_eta_inverse(3) * QLaurent::q_power(1) + bc_S_eta_inverse(1);
    auto coords = to_phitilde_basis(e);
    CHECK(coords.at(3) == QLaurent::q_power(1));
    CHECK(coords.at(1) == QLaurent(1));
}

TEST_CASE("diagram: bc_S_eta after r_eta_star equals bc") {
    for (int m = 0; m <= 8; ++m) {
        UHecke via_s = bc_S_eta(r_eta_star(m));
        UHecke direct = bc(sat_gl2_fprime(m));
        CHECK(via_s.sat == direct.sat);
        // the combination mapping to phi~'_m: f'_m + (q-1)f'_{m-1} - q*f'_{m-2}
        // (telescoped from BC(f'_m + q f'_{m-1}) = f_m)
        SModuleElement lhs = r_eta_star(m) +
                             r_eta_star(m - 1) * (QLaurent::q_power(1) - QLaurent(1)) -
                             r_eta_star(m - 2) * QLaurent::q_power(1);
        CHECK(lhs == bc_S_eta_inverse(m));
        GLHecke combo = sat_gl2_fprime(m) +
                        sat_gl2_fprime(m - 1) * (QLaurent::q_power(1) - QLaurent(1)) -
                        sat_gl2_fprime(m - 2) * QLaurent::q_power(1);
        CHECK(bc(combo).sat == sat_u2_phi(m).sat);
    }
}

TEST_CASE("convolution") {
    UHecke f1 = sat_u2_f(1);
    UHecke one{2, USatakeElement::unit(2), std::nullopt};
    CHECK(convolve(one, f1) == f1);
    // f_1 * f_1 = phi_2 + (q+1) phi_1 + (q^2+q+1) phi_0
    auto coords = expand_u2_in_phi_basis(convolve(f1, f1).sat);
    CHECK(coords.at(2) == QLaurent(1));
    CHECK(coords.at(1) == QLaurent::q_power(1) + QLaurent(1));
    CHECK(coords.at(0) == QLaurent::q_power(2) + QLaurent::q_power(1) + QLaurent(1));
    // commutativity spot checks
    UHecke a = sat_u2_phi(2), b = sat_u2_f(3);
    CHECK(convolve(a, b) == convolve(b, a));
    CHECK_THROWS_AS(convolve(f1, UHecke{4, USatakeElement::unit(4), std::nullopt}), DomainError);
}

TEST_CASE("atomic functions") {
    UHecke phi0 = atomic_phi(2, 0, 3);
    CHECK(phi0.sat == USatakeElement::unit(2));
    UHecke phi2 = atomic_phi(2, 2, 3);
    REQUIRE(phi2.basis_coeffs.has_value());
    CHECK(phi2.basis_coeffs->at(2) == QLaurent(1));
    CHECK(phi2.basis_coeffs->at(0) == QLaurent(4));  // m(0,2) = q+1 at q=3
    CHECK(phi2.basis_str() == "f[2] + 4*f[0]");
    UHecke phi2q = atomic_phi_interpolated(2, 2);
    CHECK(phi2q.basis_coeffs->at(0) == QLaurent::q_power(1) + QLaurent(1));
    // phi_1 (Cartan) = phi_2 (atomic) - (q+1) at n=2, q symbolic
    CHECK(sat_u2_phi(1).sat ==
          phi2q.sat - USatakeElement::unit(2) * (QLaurent::q_power(1) + QLaurent(1)));
}

TEST_SUITE_END();
