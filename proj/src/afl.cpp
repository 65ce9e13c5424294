#include "heckeafl/afl.hpp"

#include "heckeafl/hecke.hpp"
#include "heckeafl/intersection.hpp"
#include "heckeafl/lattice.hpp"
#include "heckeafl/orbital.hpp"

namespace heckeafl {

namespace {

Json orbit_json(const SOrbit& o, int m) {
    return Json{{"a", o.a.str()},
                {"b", o.gamma.b.str()},
                {"r", o.r},
                {"m", m},
                {"omega", transfer_factor(o)}};
}

} // namespace

VerificationReport fl_check(const PrimeConfig& cfg, int sample_size, int m_max,
                            std::uint64_t seed) {
    VerificationReport rep;
    rep.kind = "FL";
    rep.parameters = Json{{"config", config_json(cfg)},
                          {"seed", seed},
                          {"sample_size", sample_size},
                          {"m_max", m_max}};
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0xd1b54a32d192ed03ULL);

    // vanishing branch: r odd
    int odd_done = 0;
    while (odd_done < sample_size) {
        int r = 1 + 2 * (int)(rng() % (unsigned)(m_max + 2));
        SOrbit o = sample_orbit(rng, cfg, r);
        for (int m = 0; m <= m_max; ++m) {
            Rational v = value_at_0(orb_S_tilde(o, m));
            rep.add_case(orbit_json(o, m), rat_string(v), "0/1", "vanishing branch");
        }
        ++odd_done;
    }

    // matching branch: r even, against a constructed unitary element
    int pairs = (sample_size + 1) / 2;
    int even_done = 0;
    while (even_done < pairs) {
        int r = 2 * ((int)(rng() % (unsigned)(2 * m_max + 1)) - m_max);
        SOrbit o = sample_orbit(rng, cfg, r);
        try {
            UOrbit g = matched_unitary(o, std::max(cfg.precision, std::abs(r) + 8));
            int omega = transfer_factor(o);
            for (int m = 0; m <= m_max; ++m) {
                Rational lhs(orb_U_support(g, m));
                Rational rhs = Rational(omega) * value_at_0(orb_S_tilde(o, m));
                rep.add_case(orbit_json(o, m), rat_string(lhs), rat_string(rhs),
                             "matching branch");
            }
        } catch (const PrecisionError& e) {
            ++rep.skipped;
            CaseRow row;
            row.inputs = orbit_json(o, -1);
            row.pass = true;
            row.lhs = row.rhs = "skipped";
            row.note = std::string("precision: ") + e.what();
            rep.cases.push_back(std::move(row));
        }
        ++even_done;
    }
    return rep;
}

VerificationReport afl_check(const PrimeConfig& cfg, const std::vector<int>& r_list, int m_max,
                             std::uint64_t seed) {
    VerificationReport rep;
    rep.kind = "AFL";
    rep.parameters = Json{{"config", config_json(cfg)},
                          {"seed", seed},
                          {"r_list", r_list},
                          {"m_max", m_max}};
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0xe7037ed1a0b428dbULL);
    for (int r : r_list) {
        if (r < 1 || r % 2 == 0)
            throw DomainError("afl_check: r_list must contain positive odd integers");
        SOrbit o = sample_orbit(rng, cfg, r);
        int omega = transfer_factor(o);
        for (int m = 0; m <= m_max; ++m) {
            Rational lhs = int_g_phi(r, m).value;
            Rational rhs = Rational(-omega) * derivative_at_0(orb_S_tilde(o, m));
            Json in = orbit_json(o, m);
            in["int"] = rat_string(lhs);
            rep.add_case(in, rat_string(lhs), rat_string(rhs));
        }
    }
    return rep;
}

VerificationReport kernel_check(const PrimeConfig& cfg, int m_max, std::uint64_t seed) {
    if (m_max < 3) throw DomainError("kernel_check: m_max must be >= 3");
    VerificationReport rep;
    rep.kind = "KERNEL";
    rep.parameters = Json{{"config", config_json(cfg)}, {"seed", seed}, {"m_max", m_max}};
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 5);

    std::vector<int> rs;
    for (int r = 1; r <= 2 * m_max + 1; r += 2) rs.push_back(r);
    std::vector<SOrbit> orbits;
    for (int r : rs) orbits.push_back(sample_orbit(rng, cfg, r));

    auto profile = [&](int m) {
        std::vector<Rational> prof;
        for (const auto& o : orbits) prof.push_back(derivative_at_0(orb_S_tilde(o, m)));
        return prof;
    };
    auto profile_str = [](const std::vector<Rational>& v) {
        std::string s;
        for (const auto& x : v) s += rat_string(x) + ";";
        return s;
    };

    std::vector<Rational> p1 = profile(1);
    for (int m = 2; m <= m_max; ++m)
        rep.add_case(Json{{"m", m}, {"r_list", rs}}, profile_str(profile(m)), profile_str(p1),
                     "derivative profile equals the m = 1 profile");
    std::vector<Rational> p0 = profile(0);
    rep.add_case(Json{{"m", 0}, {"r_list", rs}}, profile_str(p0) == profile_str(p1) ? "equal" : "distinct",
                 "distinct", "phi_0 profile differs from phi_1");

    // the lifts of phi_m - phi_1 have identically vanishing derivative
    for (int m = 2; m <= m_max; ++m)
        for (int r : {1, 3, 5}) {
            SOrbit o = sample_orbit(rng, cfg, r);
            Rational d = derivative_at_0(orb_S_tilde(o, m)) - derivative_at_0(orb_S_tilde(o, 1));
            rep.add_case(Json{{"m", m}, {"r", r}}, rat_string(d), "0/1",
                         "kernel element phi_m - phi_1");
        }
    return rep;
}

VerificationReport coprimality_check(const std::vector<long>& q_values) {
    if (q_values.empty()) throw DomainError("coprimality_check: no q values");
    VerificationReport rep;
    rep.kind = "COPRIME";
    rep.parameters = Json{{"q_values", q_values}};
    for (long q : q_values) {
        auto fold_phi_diff = [&](int m) {
            USatakeElement diff = sat_u2_phi(m).sat - sat_u2_phi(1).sat;
            return fold_to_x1(expand(diff), Rational(q));
        };
        UniPoly P2 = fold_phi_diff(2), P3 = fold_phi_diff(3);
        BezoutCertificate cert = extended_gcd(P2, P3);
        UniPoly lhs = P2 * cert.u + P3 * cert.v;
        bool gcd_one = (cert.g == UniPoly::constant(1));
        bool bezout_ok = (lhs == cert.g);
        Json in{{"q", q},
                {"P2", P2.str()},
                {"P3", P3.str()},
                {"R2", cert.u.str()},
                {"R3", cert.v.str()}};
        rep.add_case(in, gcd_one && bezout_ok ? "1" : cert.g.str(), "1",
                     "gcd with Bezout certificate");
        // sanity: gcd(P2, P2) is not 1
        rep.add_case(Json{{"q", q}, {"sanity", "gcd(P2,P2)"}},
                     gcd_univariate(P2, P2) == UniPoly::constant(1) ? "1" : "nontrivial",
                     "nontrivial");
    }
    return rep;
}

VerificationReport comm_check(long p, int n, int t, int t2, long budget_cap) {
    VerificationReport rep;
    rep.kind = "COMM";
    rep.parameters = Json{{"p", p}, {"n", n}, {"t", t}, {"t2", t2}};
    HermSpace space(n, PrimeConfig::make(p));
    Budget budget;
    budget.cap = budget_cap;
    LatticeOps ops(space, &budget);
    CommutativityReport r = ops.commutativity_check(ops.standard_selfdual(), t, t2);
    Json in{{"left_set_size", r.left_set_size}, {"right_set_size", r.right_set_size}};
    rep.add_case(in, r.equal ? "equal" : "different", "equal", "composite support sets");
    return rep;
}

} // namespace heckeafl
