#include <random>

#include "doctest.h"
#include "heckeafl/symfun.hpp"
#include "test_util.hpp"

using namespace heckeafl;

TEST_SUITE_BEGIN("symfun");

namespace {

MultiLaurent power_sum(int n, int k) {
    MultiLaurent p(n);
    for (int i = 0; i < n; ++i) {
        ExpVec e(n, 0);
        e[i] = k;
        p.add_term(e, QLaurent(1));
    }
    return p;
}

GLSatakeElement rand_gl(std::mt19937_64& rng, int n, int nterms = 3) {
    GLSatakeElement r;
    r.n = n;
    for (int t = 0; t < nterms; ++t) {
        ExpVec e(n);
        for (int i = 0; i < n; ++i) e[i] = (int)(rng() % 3);
        e[n - 1] -= (int)(rng() % 2);
        QLaurent c = QLaurent::q_power((int)(rng() % 3) - 1, Rational((long)(rng() % 7) - 3));
        auto it = r.coeffs.find(e);
        if (it == r.coeffs.end()) {
            if (!c.is_zero()) r.coeffs.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.coeffs.erase(it);
        }
    }
    return r;
}

USatakeElement rand_u(std::mt19937_64& rng, int n, int nterms = 3) {
    USatakeElement r;
    r.n = n;
    r.m = n / 2;
    for (int t = 0; t < nterms; ++t) {
        ExpVec e(r.m);
        for (int i = 0; i < r.m; ++i) e[i] = (int)(rng() % 3);
        QLaurent c = QLaurent::q_power((int)(rng() % 3) - 1, Rational((long)(rng() % 7) - 3));
        auto it = r.coeffs.find(e);
        if (it == r.coeffs.end()) {
            if (!c.is_zero()) r.coeffs.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.coeffs.erase(it);
        }
    }
    return r;
}

} // namespace

TEST_CASE("qlaurent basics") {
    QLaurent a = QLaurent::q_power(2) + QLaurent(1);
    CHECK(a.str() == "q^2 + 1");
    CHECK((a * a).coeff(4) == 1);
    CHECK(a.negate_q() == a);
    QLaurent b = QLaurent::q_power(1, 3) - QLaurent::q_power(-1, Rational(1, 2));
    CHECK(b.negate_q() == -b);
    CHECK(b.evaluate(2) == Rational(6) - Rational(1, 4));
    CHECK(parse_qlaurent(b.str()) == b);
    CHECK(parse_qlaurent("q^2 - 3*q + 1/2").coeff(1) == -3);
    QLaurent num = QLaurent::q_power(2) - QLaurent(1);
    QLaurent den = QLaurent::q_power(1) - QLaurent(1);
    CHECK(num.divide_exact(den) == QLaurent::q_power(1) + QLaurent(1));
}

TEST_CASE("reduce elementary cases") {
    for (int n : {2, 3, 4}) {
        CHECK(reduce_symmetric(power_sum(n, 1), n) == GLSatakeElement::sigma(n, 1));
        MultiLaurent prod(n);
        prod.add_term(ExpVec(n, 1), QLaurent(1));
        CHECK(reduce_symmetric(prod, n) == GLSatakeElement::sigma(n, n));
        // Newton: sum x_i^2 = s1^2 - 2 s2
        GLSatakeElement want =
            GLSatakeElement::sigma(n, 1) * GLSatakeElement::sigma(n, 1) -
            GLSatakeElement::sigma(n, 2) * QLaurent(2);
        CHECK(reduce_symmetric(power_sum(n, 2), n) == want);
    }
}

TEST_CASE("reduce rejects asymmetric input") {
    MultiLaurent p(2);
    p.add_term({1, 0}, QLaurent(1));
    CHECK_THROWS_AS(reduce_symmetric(p, 2), NotSymmetricError);
    MultiLaurent u(1);
    u.add_term({1}, QLaurent(1));
    CHECK_THROWS_AS(reduce_signed_symmetric(u, 2), NotInvariantError);
}

TEST_CASE("signed reduction elementary cases") {
    // u + 1/u -> s1 at m=1
    MultiLaurent p(1);
    p.add_term({1}, QLaurent(1));
    p.add_term({-1}, QLaurent(1));
    CHECK(reduce_signed_symmetric(p, 2) == USatakeElement::s_basis(2, 1));
    CHECK(reduce_signed_symmetric(p, 3) == USatakeElement::s_basis(3, 1));
    // sum_s (u_s + 1/u_s) -> s1 at m=2
    MultiLaurent p2(2);
    for (int s = 0; s < 2; ++s) {
        ExpVec up(2, 0), dn(2, 0);
        up[s] = 1;
        dn[s] = -1;
        p2.add_term(up, QLaurent(1));
        p2.add_term(dn, QLaurent(1));
    }
    CHECK(reduce_signed_symmetric(p2, 4) == USatakeElement::s_basis(4, 1));
    // (u1+1/u1)(u2+1/u2) -> s2
    MultiLaurent y1(2), y2(2);
    y1.add_term({1, 0}, QLaurent(1));
    y1.add_term({-1, 0}, QLaurent(1));
    y2.add_term({0, 1}, QLaurent(1));
    y2.add_term({0, -1}, QLaurent(1));
    CHECK(reduce_signed_symmetric(y1 * y2, 4) == USatakeElement::s_basis(4, 2));
}

TEST_CASE("expansion inverts reduction") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + (int)(rng() % 3);
        GLSatakeElement e = rand_gl(rng, n);
        CHECK(reduce_symmetric(expand(e), n) == e);
        int un = 2 + (int)(rng() % 5);
        USatakeElement u = rand_u(rng, un);
        CHECK(reduce_signed_symmetric(expand(u), un) == u);
    }
}

TEST_CASE("reduction is multiplicative") {
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + (int)(rng() % 2);
        GLSatakeElement a = rand_gl(rng, n, 2), b = rand_gl(rng, n, 2);
        MultiLaurent pa = expand(a), pb = expand(b);
        CHECK(reduce_symmetric(pa * pb, n) == a * b);
    }
}

TEST_CASE("evaluation") {
    CHECK(evaluate(GLSatakeElement::sigma(2, 1), {Rational(2), Rational(3)}, Rational(3)) == 5);
    CHECK(evaluate(USatakeElement::s_basis(2, 1), {Rational(1)}, Rational(3)) == 2);
    CHECK_THROWS_AS(evaluate(GLSatakeElement::sigma(2, 1), {Rational(2)}, Rational(3)),
                    DomainError);
}

TEST_CASE("univariate gcd") {
    UniPoly x2m1({Rational(-1), Rational(0), Rational(1)});
    UniPoly xm1({Rational(-1), Rational(1)});
    CHECK(gcd_univariate(x2m1, xm1) == xm1.monic());
    UniPoly p({Rational(2), Rational(4)});
    CHECK(gcd_univariate(p, p) == p.monic());
    CHECK_THROWS_AS(gcd_univariate(p, UniPoly()), DomainError);
    auto cert = extended_gcd(x2m1, xm1);
    CHECK(cert.g == xm1.monic());
    CHECK(x2m1 * cert.u + xm1 * cert.v == cert.g);
}

TEST_CASE("canonical text round trip") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 2 + (int)(rng() % 3);
        GLSatakeElement e = rand_gl(rng, n);
        CHECK(parse_gl_satake(e.str(), n) == e);
        USatakeElement u = rand_u(rng, 2 * (1 + (int)(rng() % 2)));
        CHECK(parse_u_satake(u.str(), u.n) == u);
    }
    USatakeElement f1 = USatakeElement::s_basis(2, 1) * QLaurent::q_power(1) +
                        USatakeElement::unit(2) * QLaurent::q_power(1);
    CHECK(f1.str() == "q*s1 + q");
}

TEST_CASE("inversion fold polynomials") {
    // u^3 + u^-3 = y^3 - 3y
    UniPoly t3 = inversion_fold_poly(3);
    CHECK(t3.coeff(3) == 1);
    CHECK(t3.coeff(1) == -3);
    CHECK(t3.coeff(2) == 0);
}

TEST_SUITE_END();
