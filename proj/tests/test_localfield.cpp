#include "doctest.h"
#include "heckeafl/localfield.hpp"
#include "test_util.hpp"

using namespace heckeafl;
using testutil::rand_field_element;
using testutil::rand_nonzero_field_element;
using testutil::rand_unit_rational;

TEST_SUITE_BEGIN("localfield");

static const PrimeConfig cfg = PrimeConfig::make(3);

TEST_CASE("config validation") {
    CHECK(cfg.epsilon == 2);  // smallest non-residue mod 3
    CHECK(PrimeConfig::default_epsilon(5) == 2);
    CHECK(PrimeConfig::default_epsilon(7) == 3);
    CHECK_THROWS_AS(PrimeConfig(4, 2, 32), DomainError);
    CHECK_THROWS_AS(PrimeConfig(3, 1, 32), DomainError);   // 1 is a square
    CHECK_THROWS_AS(PrimeConfig(3, 2, 0), DomainError);
}

TEST_CASE("field arithmetic") {
    FieldElement one = FieldElement::one(cfg);
    FieldElement d = FieldElement::delta(cfg);
    // (1 + d)(1 - d) = 1 - eps
    CHECK((one + d) * (one - d) == FieldElement(Rational(1 - cfg.epsilon), 0, cfg));
    // inv(d) = d / eps
    CHECK(d.inv() == FieldElement(0, Rational(1, cfg.epsilon), cfg));
    CHECK(d * d.inv() == one);
    // p + p^2 has valuation 1
    FieldElement s = FieldElement(Rational(cfg.p), 0, cfg) + FieldElement(Rational(cfg.p) * cfg.p, 0, cfg);
    CHECK(s.val() == Valuation(1));
}

TEST_CASE("conjugation") {
    FieldElement d = FieldElement::delta(cfg);
    CHECK(d.conj() == -d);
    CHECK(FieldElement(3, 0, cfg).conj() == FieldElement(3, 0, cfg));
    CHECK(FieldElement(1, 2, cfg).conj() == FieldElement(1, -2, cfg));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        FieldElement a = rand_field_element(rng, cfg), b = rand_field_element(rng, cfg);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("norm trace val") {
    FieldElement one = FieldElement::one(cfg);
    FieldElement d = FieldElement::delta(cfg);
    CHECK((one + d).norm() == FieldElement(Rational(1 - cfg.epsilon), 0, cfg));
    FieldElement p3u(Rational(27) * 5, 0, cfg);
    CHECK(p3u.val() == Valuation(3));
    CHECK(FieldElement(Rational(4, 7), Rational(-2), cfg).trace() ==
          FieldElement(Rational(8, 7), 0, cfg));
    CHECK(FieldElement::zero(cfg).val().is_infinity());
    CHECK(FieldElement(Rational(1, 3), 0, cfg).val() == Valuation(-1));
}

TEST_CASE("valuation laws") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        FieldElement a = rand_nonzero_field_element(rng, cfg);
        FieldElement b = rand_nonzero_field_element(rng, cfg);
        CHECK((a * b).val() == Valuation(a.val().finite() + b.val().finite()));
        FieldElement s = a + b;
        if (!s.is_zero()) {
            long m = std::min(a.val().finite(), b.val().finite());
            CHECK(!(s.val() < Valuation(m)));
            if (a.val().finite() != b.val().finite()) CHECK(s.val() == Valuation(m));
        }
        // unramified: val(norm) = 2 val
        CHECK(a.norm().val() == Valuation(2 * a.val().finite()));
    }
}

TEST_CASE("eta characters") {
    CHECK(eta(FieldElement(Rational(3), 0, cfg)) == -1);
    CHECK(eta(FieldElement(Rational(5), 0, cfg)) == 1);
    CHECK_THROWS_AS(eta(FieldElement::delta(cfg)), DomainError);
    Mat2 m{FieldElement(3, 0, cfg), FieldElement::zero(cfg), FieldElement::zero(cfg),
           FieldElement(Rational(1, 1) / 3, 0, cfg)};
    CHECK(eta_tilde_det(m) == 1);  // det = 1
    Mat2 mp{FieldElement(3, 0, cfg), FieldElement::zero(cfg), FieldElement::zero(cfg),
            FieldElement::one(cfg)};
    CHECK(eta_tilde_det(mp) == -1);
}

TEST_CASE("truncated elements") {
    TruncatedElement t(Int(4), Int(9), 3, cfg);  // mod 27
    CHECK(t.val() == 0);
    TruncatedElement u(Int(0), Int(9), 3, cfg);
    CHECK(u.val() == 2);
    TruncatedElement z(Int(0), Int(0), 3, cfg);
    CHECK_THROWS_AS(z.val(), PrecisionError);
    CHECK_THROWS_AS(TruncatedElement(Int(27), Int(0), 3, cfg).val(), PrecisionError);
    CHECK(t.inv() * t == TruncatedElement(Int(1), Int(0), 3, cfg));
}

TEST_CASE("solve_norm") {
    CHECK_THROWS_AS(solve_norm(Rational(1), 0, cfg), PrecisionError);
    TruncatedElement one = solve_norm(Rational(1), 8, cfg);
    Int m = pow_int(Int(3), 8);
    auto norm_residue = [&](const TruncatedElement& c) {
        return mod_pos(c.xbar() * c.xbar() - Int(cfg.epsilon) * c.ybar() * c.ybar(), m);
    };
    CHECK(norm_residue(one) == 1);
    TruncatedElement ce = solve_norm(Rational(cfg.epsilon), 8, cfg);
    CHECK(norm_residue(ce) == mod_pos(Int(cfg.epsilon), m));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        Rational u = rand_unit_rational(rng, cfg);
        TruncatedElement c = solve_norm(u, 8, cfg);
        CHECK(norm_residue(c) == rat_mod(u, m));
    }
}

TEST_CASE("matrix basics") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        Mat2 g{rand_field_element(rng, cfg), rand_field_element(rng, cfg),
               rand_field_element(rng, cfg), rand_field_element(rng, cfg)};
        if (g.det().is_zero()) continue;
        CHECK(g * g.inv() == Mat2::identity(cfg));
    }
}

TEST_CASE("field element parsing") {
    CHECK(parse_field_element("1/2+3*d", cfg) == FieldElement(Rational(1, 2), 3, cfg));
    CHECK(parse_field_element("-d", cfg) == FieldElement(0, -1, cfg));
    CHECK(parse_field_element("7", cfg) == FieldElement(7, 0, cfg));
    CHECK(parse_field_element("2 - 5/7*d", cfg) == FieldElement(2, Rational(-5, 7), cfg));
}

TEST_SUITE_END();
