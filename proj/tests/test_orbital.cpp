#include <random>

#include "doctest.h"
#include "heckeafl/orbital.hpp"

using namespace heckeafl;

TEST_SUITE_BEGIN("orbital");

static const PrimeConfig cfg = PrimeConfig::make(3);

TEST_CASE("gamma construction") {
    FieldElement a(2, Rational(1, 2), cfg);
    FieldElement b(1, 1, cfg);
    SOrbit o = make_gamma(a, b);
    CHECK(o.gamma * o.gamma.conj() == Mat2::identity(cfg));
    CHECK(o.bc == o.gamma.b * o.gamma.c);
    // normalization: v(b) = v(1 - Na) gives v(c) = 0
    FieldElement w = FieldElement::one(cfg) - a.norm();
    FieldElement b2(Rational(pow_int(Int(3), w.val().finite())), 0, cfg);
    CHECK(make_gamma(a, b2).normalized);
    // antidiagonal point
    SOrbit anti = make_gamma(FieldElement::zero(cfg), FieldElement::one(cfg));
    CHECK(anti.gamma.a.is_zero());
    CHECK(anti.gamma.d.is_zero());
    CHECK_THROWS_AS(make_gamma(FieldElement::one(cfg), b), DomainError);
    CHECK_THROWS_AS(make_gamma(a, FieldElement::zero(cfg)), DomainError);
}

TEST_CASE("matching and transfer factor") {
    std::mt19937_64 rng(3);
    for (int r : {-4, -2, 0, 1, 2, 3, 5}) {
        SOrbit o = sample_orbit(rng, cfg, r);
        CHECK(o.r == r);
        CHECK(o.normalized);
        CHECK(match_class(o) == (r % 2 == 0 ? MatchClass::Split : MatchClass::NonSplit));
        CHECK(transfer_factor(o) == ((r % 2 == 0) ? 1 : -1));
    }
}

TEST_CASE("closed forms") {
    std::mt19937_64 rng(5);
    SOrbit r1 = sample_orbit(rng, cfg, 1);
    OrbitalValue v = orb_S_closed(r1, 1);
    CHECK(v.coeff(-1) == -1);
    CHECK(v.coeff(2) == 1);
    CHECK(v.laurent().size() == 2);
    OrbitalValue v0 = orb_S_closed(r1, 0);
    CHECK(v0.coeff(0) == 1);
    CHECK(v0.coeff(1) == -1);
    SOrbit rm2 = sample_orbit(rng, cfg, -2);
    OrbitalValue w = orb_S_closed(rm2, 1);
    CHECK(w.coeff(-1) == -1);
    CHECK(w.laurent().size() == 1);
    CHECK(orb_S_closed(rm2, 0).is_zero());
    SOrbit rm4 = sample_orbit(rng, cfg, -4);
    CHECK(orb_S_closed(rm4, 1).is_zero());  // r < -2m
}

TEST_CASE("oracle equals closed forms") {
    std::mt19937_64 rng(7);
    for (int r : {-6, -4, -2, 0, 1, 2, 3, 4, 5, 6, 7}) {
        for (int rep = 0; rep < 4; ++rep) {
            SOrbit o = sample_orbit(rng, cfg, r);
            for (int m = 0; m <= 5; ++m) CHECK(orb_S_oracle(o, m) == orb_S_closed(o, m));
        }
    }
}

TEST_CASE("oracle on Cartan representatives") {
    // gamma = t_m has a unit contribution at Z^0
    for (int m = 1; m <= 4; ++m) {
        FieldElement b(Rational(pow_int(Int(3), m)), 0, cfg);
        SOrbit o = make_gamma(FieldElement::zero(cfg), b);
        OrbitalValue v = orb_S_oracle(o, m);
        CHECK(v.coeff(0) == 1);
    }
}

TEST_CASE("oracle conjugation covariance") {
    std::mt19937_64 rng(11);
    SOrbit o = sample_orbit(rng, cfg, 3);
    // conjugating by diag(x, 1), v(x) = 1, multiplies Orb by eta(x)|x|^s
    FieldElement x(3, 0, cfg);
    Mat2 conj_gamma{o.gamma.a, o.gamma.b * x.inv(), o.gamma.c * x, o.gamma.d};
    for (int m = 0; m <= 3; ++m) {
        OrbitalValue lhs = orb_S_oracle(conj_gamma, m);
        OrbitalValue base = orb_S_oracle(o, m);
        OrbitalValue rhs;  // -Z^{-1} * base
        for (const auto& [k, v] : base.laurent()) rhs.add(k - 1, -v);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("orbit invariance in (r, m)") {
    std::mt19937_64 rng(13);
    for (int r : {-2, 0, 1, 3}) {
        SOrbit o1 = sample_orbit(rng, cfg, r), o2 = sample_orbit(rng, cfg, r);
        for (int m = 0; m <= 4; ++m) CHECK(orb_S_closed(o1, m) == orb_S_closed(o2, m));
    }
}

TEST_CASE("tilde values and derivatives") {
    std::mt19937_64 rng(17);
    SOrbit r1 = sample_orbit(rng, cfg, 1);
    CHECK(value_at_0(orb_S_tilde(r1, 1)) == 0);
    CHECK(derivative_at_0(orb_S_tilde(r1, 1)) == 1);
    SOrbit r3 = sample_orbit(rng, cfg, 3);
    CHECK(value_at_0(orb_S_tilde(r3, 0)) == 0);
    CHECK(derivative_at_0(orb_S_tilde(r3, 0)) == 2);  // (r+1)/2
    for (int m = 1; m <= 6; ++m) {
        CHECK(derivative_at_0(orb_S_tilde(r3, m)) == 1);
        CHECK(value_at_0(orb_S_tilde(r3, m)) == 0);
    }
    // vanishing branch on odd r for every m
    for (int r : {1, 3, 5, 7})
        for (int m = 0; m <= 6; ++m)
            CHECK(value_at_0(orb_S_tilde(sample_orbit(rng, cfg, r), m)) == 0);
}

TEST_CASE("matched unitary support") {
    std::mt19937_64 rng(19);
    for (int r : {-6, -4, -2, 0, 2, 4}) {
        SOrbit o = sample_orbit(rng, cfg, r);
        UOrbit g = matched_unitary(o, 24);
        for (int m = 0; m <= 4; ++m) {
            int expect = 0;
            if (r == -2 * m) expect = 1;
            if (m == 0 && r >= 0) expect = 1;
            CHECK(orb_U_support(g, m) == expect);
            // FL matching: Orb_U = omega * value(orb_S_tilde), omega = +1 here
            CHECK(Rational(orb_U_support(g, m)) == value_at_0(orb_S_tilde(o, m)));
        }
    }
    SOrbit odd = sample_orbit(rng, cfg, 1);
    CHECK_THROWS_AS(matched_unitary(odd, 24), DomainError);
}

TEST_CASE("homogeneous oracle bridges to the symmetric space") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 12; ++iter) {
        Mat2 g = sample_gl2(rng, cfg);
        for (int m = 0; m <= 3; ++m) {
            HomOrbitalCheck chk = homogeneous_orb_oracle(g, m);
            CHECK(chk.equal);
            // factor 2: d/ds of F(Z'^2) doubles the inhomogeneous derivative
            CHECK(chk.dhom == Rational(2 * eta_tilde_det(g)) * chk.dinhom);
        }
    }
}

TEST_CASE("value profiles separate the tilde basis") {
    std::mt19937_64 rng(29);
    std::vector<std::vector<Rational>> profiles;
    std::vector<int> rs;
    for (int r = -12; r <= 12; ++r)
        if (r >= 0 || r % 2 == 0) rs.push_back(r);
    for (int m = 0; m <= 6; ++m) {
        std::vector<Rational> prof;
        for (int r : rs) prof.push_back(value_at_0(orb_S_tilde(sample_orbit(rng, cfg, r), m)));
        profiles.push_back(std::move(prof));
    }
    for (size_t i = 0; i < profiles.size(); ++i)
        for (size_t j = i + 1; j < profiles.size(); ++j) CHECK(profiles[i] != profiles[j]);
}

TEST_SUITE_END();
