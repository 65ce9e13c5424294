#include "heckeafl/orbital.hpp"

#include "heckeafl/hecke.hpp"

namespace heckeafl {

OrbitalValue OrbitalValue::operator+(const OrbitalValue& o) const {
    OrbitalValue r = *this;
    for (const auto& [k, v] : o.c_) r.add(k, v);
    return r;
}

OrbitalValue OrbitalValue::operator-(const OrbitalValue& o) const {
    OrbitalValue r = *this;
    for (const auto& [k, v] : o.c_) r.add(k, -v);
    return r;
}

OrbitalValue OrbitalValue::operator*(const Rational& s) const {
    OrbitalValue r;
    if (s == 0) return r;
    for (const auto& [k, v] : c_) r.c_.emplace(k, v * s);
    return r;
}

OrbitalValue OrbitalValue::stretch(int mult) const {
    OrbitalValue r;
    for (const auto& [k, v] : c_) r.c_.emplace(k * mult, v);
    return r;
}

Rational OrbitalValue::value_at_0() const {
    Rational s = 0;
    for (const auto& [k, v] : c_) s += v;
    return s;
}

Rational OrbitalValue::derivative_at_0_logq() const {
    // d/ds q^{-ks} = -k log q * q^{-ks}
    Rational s = 0;
    for (const auto& [k, v] : c_) s -= Rational(k) * v;
    return s;
}

Rational value_at_0(const OrbitalValue& v) { return v.value_at_0(); }
Rational derivative_at_0(const OrbitalValue& v) { return v.derivative_at_0_logq(); }

std::string OrbitalValue::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        bool neg = it->second < 0;
        Rational av = neg ? Rational(-it->second) : it->second;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        bool unit = av == 1 && it->first != 0;
        if (!unit) s += rat_pretty(av);
        if (it->first != 0) {
            if (!unit) s += "*";
            s += "Z";
            if (it->first != 1) s += "^" + std::to_string(it->first);
        }
    }
    return s;
}

SOrbit make_gamma(const FieldElement& a, const FieldElement& b) {
    const PrimeConfig& cfg = a.config();
    if (b.is_zero()) throw DomainError("make_gamma: b must be nonzero");
    FieldElement one = FieldElement::one(cfg);
    FieldElement na = a.norm();
    if (na == one) throw DomainError("make_gamma: norm(a) = 1 is not regular semisimple");
    FieldElement c = (one - na) / b.conj();
    FieldElement d = -(a.conj() * b) / b.conj();
    SOrbit orbit;
    orbit.gamma = Mat2{a, b, c, d};
    // membership in S_2: gamma * conj(gamma) = 1
    Mat2 prod = orbit.gamma * orbit.gamma.conj();
    if (!(prod == Mat2::identity(cfg)))
        throw DomainError("make_gamma: constructed matrix is not in S_2");
    orbit.a = a;
    orbit.d = d;
    orbit.bc = b * c;
    orbit.r = (int)(one - na).val().finite();
    orbit.normalized = !c.is_zero() && c.val() == Valuation(0);
    return orbit;
}

MatchClass match_class(const SOrbit& orbit) {
    return orbit.r % 2 == 0 ? MatchClass::Split : MatchClass::NonSplit;
}

int transfer_factor(const SOrbit& orbit) {
    long vb = orbit.gamma.b.val().finite();
    return vb % 2 == 0 ? 1 : -1;
}

OrbitalValue orb_S_closed(const SOrbit& orbit, int m) {
    if (!orbit.normalized) throw DomainError("orb_S_closed: orbit must have v(c) = 0");
    if (m < 0) throw DomainError("orb_S_closed: m must be >= 0");
    const int r = orbit.r;
    OrbitalValue out;
    if (m == 0) {
        if (r < 0) return out;
        for (int i = 0; i <= r; ++i) out.add(i, (i % 2 == 0) ? 1 : -1);
        return out;
    }
    int sign = (m % 2 == 0) ? 1 : -1;
    if (r < -2 * m) return out;
    out.add(-m, sign);
    if (r > -2 * m) {
        int eta_sign = (r % 2 == 0) ? 1 : -1;
        out.add(r + m, sign * eta_sign);
    }
    return out;
}

OrbitalValue orb_S_oracle(const Mat2& gamma, int m) {
    if (m < 0) throw DomainError("orb_S_oracle: m must be >= 0");
    if (gamma.b.is_zero() || gamma.c.is_zero())
        throw DomainError("orb_S_oracle: point is not regular semisimple");
    long vb = gamma.b.val().finite();
    long vc = gamma.c.val().finite();
    // support of the integrand lies in v(b) - m <= ... bounded window
    long lo = -vc - m, hi = vb + m;
    OrbitalValue out;
    for (long k = lo; k <= hi; ++k) {
        // h^{-1} gamma h with h = diag(x, 1), v(x) = k
        long va = gamma.a.is_zero() ? std::numeric_limits<long>::max() / 2
                                    : gamma.a.val().finite();
        long vd = gamma.d.is_zero() ? std::numeric_limits<long>::max() / 2
                                    : gamma.d.val().finite();
        long minval = std::min({va, vd, vb - k, vc + k});
        if (minval == -m) out.add((int)k, (k % 2 == 0) ? 1 : -1);
    }
    return out;
}

OrbitalValue orb_S_oracle(const SOrbit& orbit, int m) { return orb_S_oracle(orbit.gamma, m); }

OrbitalValue orb_S_tilde(const SOrbit& orbit, int m) {
    if (m < 0) throw DomainError("orb_S_tilde: m must be >= 0");
    OrbitalValue acc = orb_S_closed(orbit, m);
    for (int i = 0; i < m; ++i) acc = acc + orb_S_closed(orbit, i) * Rational(2);
    return acc * Rational(m % 2 == 0 ? 1 : -1);
}

UOrbit matched_unitary(const SOrbit& orbit, int N) {
    const PrimeConfig& cfg = orbit.a.config();
    if (orbit.r % 2 != 0)
        throw DomainError("matched_unitary: orbit matches the non-split side (r odd)");
    const int r = orbit.r;
    const int shift = r < 0 ? -r / 2 : 0;
    FieldElement one = FieldElement::one(cfg);
    // 1 - norm(a) = p^r * u with u a unit of F_0
    FieldElement w = one - orbit.a.norm();
    Rational u = w.x();
    Int pr = pow_int(Int(cfg.p), std::abs(r));
    if (r >= 0) u /= Rational(pr);
    else u *= Rational(pr);
    // g = [[a, conj(c) b/conj(b)], [c, -conj(a) b/conj(b)]] with
    // norm(c) = 1 - norm(a); stored entries are p^{shift} times the values.
    TruncatedElement c0 = solve_norm(u, N, cfg);
    FieldElement ratio = orbit.gamma.b / orbit.gamma.b.conj();  // unit of F
    auto trunc = [&](const FieldElement& e) { return TruncatedElement::from_exact(e, N); };
    UOrbit g;
    g.shift = shift;
    FieldElement pshift(Rational(pow_int(Int(cfg.p), shift)), 0, cfg);
    g.a = trunc(orbit.a * pshift);
    g.d = trunc(orbit.d * pshift);
    // stored_c = p^{shift + r/2} c0 (the exponent is >= 0 in both regimes)
    TruncatedElement psc(pow_int(Int(cfg.p), shift + r / 2), Int(0), N, cfg);
    g.c = psc * c0;
    // stored_b = conj(stored_c) * ratio since ratio is a unit
    g.b = g.c.conj() * trunc(ratio);
    return g;
}

int orb_U_support(const UOrbit& g, int m) {
    if (m < 0) throw DomainError("orb_U_support: m must be >= 0");
    const PrimeConfig& cfg = g.a.config();
    // v(1 - a conj a) with the shift: 1 - p^{-2 shift} a_st conj(a_st)
    Int p2s = pow_int(Int(cfg.p), 2 * g.shift);
    TruncatedElement na = g.a * g.a.conj();
    TruncatedElement one_minus(p2s - na.xbar(), -na.ybar(), na.known_valuation_bound(), cfg);
    long v1 = one_minus.val() - 2 * g.shift;

    bool aA, bB;
    if (m >= 1) {
        aA = (v1 == -2 * m);
        bB = (g.val_a() == -m) && (g.val_b() == -m) && (g.val_c() == -m) && (g.val_d() == -m);
    } else {
        aA = (v1 >= 0);
        bB = (g.val_a() >= 0) && (g.val_b() >= 0) && (g.val_c() >= 0) && (g.val_d() >= 0);
    }
    if (aA != bB) throw DomainError("orb_U_support: support criteria disagree");
    return aA ? 1 : 0;
}

namespace {

long val_or_big(const FieldElement& e) {
    return e.is_zero() ? (1 << 20) : e.val().finite();
}

} // namespace

HomOrbitalCheck homogeneous_orb_oracle(const Mat2& g, int m) {
    if (m < 0) throw DomainError("homogeneous_orb_oracle: m must be >= 0");
    const PrimeConfig& cfg = g.a.config();
    const long p = cfg.p;
    FieldElement detg = g.det();
    if (detg.is_zero()) throw DomainError("homogeneous_orb_oracle: singular matrix");
    Mat2 gamma = g * g.conj().inv();
    if (gamma.b.is_zero() || gamma.c.is_zero())
        throw DomainError("homogeneous_orb_oracle: gamma not regular semisimple");

    long spread = 0;
    for (const FieldElement* e : {&g.a, &g.b, &g.c, &g.d})
        if (!e->is_zero()) spread += std::abs(e->val().finite());
    long R = spread + std::abs(detg.val().finite()) + m + 6;

    // inner integral over GL_2(F_0) for g' = diag(p^{-v},1) g
    auto inner = [&](long v) -> Rational {
        // g' rows: row 1 scaled by p^{-v}
        FieldElement g11 = g.a, g12 = g.b, g21 = g.c, g22 = g.d;
        long shift1 = -v;
        long vdetp = detg.val().finite() - v;
        Rational total = 0;
        long V1 = std::min(val_or_big(g11) + shift1, val_or_big(g21));
        if (V1 > (1 << 19)) return 0;  // zero first column cannot happen
        for (long A = -V1; A <= m - V1; ++A) {
            long B = m - vdetp - A;
            // z-conditions per row
            std::vector<std::pair<FieldElement, long>> balls;
            bool empty = false;
            bool has_ball = false;
            for (int row = 0; row < 2; ++row) {
                const FieldElement& c1 = row == 0 ? g11 : g21;
                const FieldElement& c2 = row == 0 ? g12 : g22;
                long sh = row == 0 ? shift1 : 0;
                if (c1.is_zero()) {
                    if (c2.is_zero()) { empty = true; break; }
                    if (B + c2.val().finite() + sh < 0) { empty = true; break; }
                    continue;
                }
                has_ball = true;
                long rho = -A - c1.val().finite() - sh;
                // ball center p^{B-A} c2/c1 (the global sign of both centers
                // is immaterial for the intersection volume)
                FieldElement center =
                    (c2 / c1) * FieldElement((B - A) >= 0 ? Rational(pow_int(Int(p), B - A))
                                                          : Rational(1, pow_int(Int(p), A - B)),
                                             0, cfg);
                balls.emplace_back(center, rho);
            }
            if (empty) continue;
            if (!has_ball) throw DomainError("homogeneous_orb_oracle: degenerate column");
            // intersect balls in F_0
            bool ok = true;
            long rho_max = std::numeric_limits<long>::min();
            for (const auto& [c, rho] : balls) {
                FieldElement imag(0, c.y(), cfg);
                if (val_or_big(imag) < rho) { ok = false; break; }
                rho_max = std::max(rho_max, rho);
            }
            if (ok && balls.size() == 2) {
                Rational diff = balls[0].first.x() - balls[1].first.x();
                long vd = diff == 0 ? (1 << 20) : vp_rat(diff, Int(p));
                long rho_min = std::min(balls[0].second, balls[1].second);
                if (vd < rho_min) ok = false;
            }
            if (!ok) continue;
            Rational vol = rho_max >= 0 ? Rational(1, pow_int(Int(p), rho_max))
                                        : Rational(pow_int(Int(p), -rho_max));
            total += ((A + B) % 2 == 0 ? vol : -vol);
        }
        return total;
    };

    HomOrbitalCheck out;
    for (long v = -R; v <= R; ++v) {
        Rational term = inner(v);
        if (term != 0) {
            if (std::abs(v) > R - 2)
                throw DomainError("homogeneous_orb_oracle: truncation window too small");
            out.homogeneous.add((int)(2 * v), term);
        }
    }

    // bridge: eta~(g) * Orb(gamma, r^eta_*(f'_m), 2s)
    int et = eta_tilde_det(g);
    SModuleElement rf = r_eta_star(m);
    OrbitalValue bridge;
    for (const auto& [i, cq] : rf.coeff) {
        Rational cval = cq.evaluate(Rational(p));
        bridge = bridge + orb_S_oracle(gamma, i) * cval;
    }
    bridge = bridge.stretch(2) * Rational(et);
    out.bridged = bridge;
    out.equal = (out.homogeneous == out.bridged);
    out.dhom = out.homogeneous.derivative_at_0_logq();
    OrbitalValue inhom;
    for (const auto& [i, cq] : rf.coeff)
        inhom = inhom + orb_S_oracle(gamma, i) * cq.evaluate(Rational(p));
    out.dinhom = inhom.derivative_at_0_logq();
    return out;
}

SOrbit sample_orbit(std::mt19937_64& rng, const PrimeConfig& cfg, int r_target) {
    auto rand_unit = [&]() {
        long v;
        do {
            v = (long)(rng() % 41) - 20;
        } while (v % cfg.p == 0 || v == 0);
        long d;
        do {
            d = 1 + (long)(rng() % 9);
        } while (d % cfg.p == 0);
        return Rational(v, d);
    };
    const long p = cfg.p;
    FieldElement a = FieldElement::zero(cfg);
    if (r_target >= 1) {
        // a = (1 + p^r t) + p^{ceil((r+1)/2)} w delta with t, w units
        Rational x = 1 + Rational(pow_int(Int(p), r_target)) * rand_unit();
        int h = (r_target + 2) / 2;  // >= (r+1)/2, so the delta term has valuation > r
        Rational y = (rng() % 2) ? Rational(pow_int(Int(p), h)) * rand_unit() : Rational(0);
        a = FieldElement(x, y, cfg);
    } else if (r_target == 0) {
        for (;;) {
            a = FieldElement(rand_unit(), (rng() % 2) ? rand_unit() : Rational(0), cfg);
            FieldElement w = FieldElement::one(cfg) - a.norm();
            if (!w.is_zero() && w.val() == Valuation(0)) break;
        }
    } else {
        if (r_target % 2 != 0) throw DomainError("sample_orbit: negative r must be even");
        int mm = -r_target / 2;
        Rational scale(1, pow_int(Int(p), mm));
        a = FieldElement(rand_unit() * scale, ((rng() % 2) ? rand_unit() : Rational(0)) * scale,
                         cfg);
    }
    // normalized: v(b) = v(1 - norm(a)) = r
    Rational pb = r_target >= 0 ? Rational(pow_int(Int(p), r_target))
                                : Rational(1, pow_int(Int(p), -r_target));
    FieldElement b(rand_unit() * pb, (rng() % 2) ? rand_unit() * pb : Rational(0), cfg);
    SOrbit orbit = make_gamma(a, b);
    if (orbit.r != r_target || !orbit.normalized)
        throw DomainError("sample_orbit: construction failed to hit target r");
    return orbit;
}

SOrbit sample_orbit_any(std::mt19937_64& rng, const PrimeConfig& cfg) {
    int r = (int)(rng() % 9) - 2;
    if (r < 0 && r % 2 != 0) r -= 1;
    return sample_orbit(rng, cfg, r);
}

Mat2 sample_gl2(std::mt19937_64& rng, const PrimeConfig& cfg) {
    auto rand_small = [&]() {
        long d = (rng() % 2) ? 1 : 2;
        if (cfg.p == 2) d = 1;
        return Rational((long)(rng() % 11) - 5, d);
    };
    for (;;) {
        Mat2 g{FieldElement(rand_small(), rand_small(), cfg),
               FieldElement(rand_small(), rand_small(), cfg),
               FieldElement(rand_small(), rand_small(), cfg),
               FieldElement(rand_small(), rand_small(), cfg)};
        if (g.det().is_zero()) continue;
        Mat2 gamma = g * g.conj().inv();
        if (gamma.b.is_zero() || gamma.c.is_zero()) continue;
        return g;
    }
}

} // namespace heckeafl
