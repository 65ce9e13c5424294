#include "heckeafl/localfield.hpp"

#include <cctype>
#include <sstream>

namespace heckeafl {

Rational parse_rational(const std::string& s) {
    auto bad = [&]() { return DomainError("cannot parse rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw bad();
        return Rational(n, d);
    } catch (const std::exception&) {
        throw bad();
    }
}

PrimeConfig::PrimeConfig(long p_, long epsilon_, int precision_)
    : p(p_), epsilon(epsilon_), precision(precision_) {
    if (p < 3 || p % 2 == 0 || !is_prime(Int(p)))
        throw DomainError("PrimeConfig: p must be an odd prime");
    Int e = mod_pos(Int(epsilon), Int(p));
    if (e == 0 || pow_mod(e, Int((p - 1) / 2), Int(p)) == 1)
        throw DomainError("PrimeConfig: epsilon must be a non-residue mod p");
    if (precision < 1) throw DomainError("PrimeConfig: precision must be positive");
}

long PrimeConfig::default_epsilon(long p) {
    for (long e = 2; e < p; ++e)
        if (pow_mod(Int(e), Int((p - 1) / 2), Int(p)) != 1) return e;
    throw DomainError("default_epsilon: no non-residue found");
}

PrimeConfig PrimeConfig::make(long p, int precision) {
    return PrimeConfig(p, default_epsilon(p), precision);
}

FieldElement::FieldElement(Rational x, Rational y, const PrimeConfig& cfg)
    : x_(std::move(x)), y_(std::move(y)), cfg_(&cfg) {}

const PrimeConfig& FieldElement::config() const {
    if (!cfg_) throw DomainError("FieldElement: unconfigured");
    return *cfg_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return FieldElement(x_ + o.x_, y_ + o.y_, config());
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    return FieldElement(x_ - o.x_, y_ - o.y_, config());
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    const Rational eps(config().epsilon);
    return FieldElement(x_ * o.x_ + eps * y_ * o.y_, x_ * o.y_ + y_ * o.x_, config());
}
FieldElement FieldElement::operator-() const { return FieldElement(-x_, -y_, config()); }

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DomainError("FieldElement::inv: division by zero");
    const Rational eps(config().epsilon);
    // The norm form is anisotropic over Q_p, so n = 0 only at 0.
    Rational n = x_ * x_ - eps * y_ * y_;
    return FieldElement(x_ / n, -y_ / n, config());
}

FieldElement FieldElement::conj() const { return FieldElement(x_, -y_, config()); }
FieldElement FieldElement::norm() const { return *this * conj(); }
FieldElement FieldElement::trace() const { return FieldElement(x_ * 2, 0, config()); }

Valuation FieldElement::val() const {
    if (is_zero()) return Valuation::infinity();
    const Int p(config().p);
    if (x_ == 0) return Valuation(vp_rat(y_, p));
    if (y_ == 0) return Valuation(vp_rat(x_, p));
    return Valuation(std::min(vp_rat(x_, p), vp_rat(y_, p)));
}

std::string FieldElement::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (x_ != 0) s = rat_pretty(x_);
    if (y_ != 0) {
        if (!s.empty()) s += y_ > 0 ? "+" : "-";
        else if (y_ < 0) s += "-";
        Rational ay = y_ > 0 ? y_ : Rational(-y_);
        if (ay != 1) s += rat_pretty(ay) + "*";
        s += "d";
    }
    return s;
}

int eta(const FieldElement& a) {
    if (!a.in_base_field() || a.is_zero())
        throw DomainError("eta: requires a nonzero element of F0");
    return a.val().finite() % 2 == 0 ? 1 : -1;
}

int eta_tilde(const FieldElement& a) {
    if (a.is_zero()) throw DomainError("eta_tilde: zero input");
    return a.val().finite() % 2 == 0 ? 1 : -1;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}
Mat2 Mat2::operator-(const Mat2& o) const { return Mat2{a - o.a, b - o.b, c - o.c, d - o.d}; }
Mat2 Mat2::conj() const { return Mat2{a.conj(), b.conj(), c.conj(), d.conj()}; }
Mat2 Mat2::conj_transpose() const { return Mat2{a.conj(), c.conj(), b.conj(), d.conj()}; }
FieldElement Mat2::det() const { return a * d - b * c; }
Mat2 Mat2::inv() const {
    FieldElement dt = det();
    if (dt.is_zero()) throw DomainError("Mat2::inv: singular matrix");
    FieldElement di = dt.inv();
    return Mat2{d * di, -(b * di), -(c * di), a * di};
}
Mat2 Mat2::identity(const PrimeConfig& cfg) {
    return Mat2{FieldElement::one(cfg), FieldElement::zero(cfg), FieldElement::zero(cfg),
                FieldElement::one(cfg)};
}
std::string Mat2::str() const {
    return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

int eta_tilde_det(const Mat2& m) { return eta_tilde(m.det()); }

TruncatedElement::TruncatedElement(Int xbar, Int ybar, int N, const PrimeConfig& cfg)
    : xbar_(std::move(xbar)), ybar_(std::move(ybar)), N_(N), cfg_(&cfg) {
    if (N_ < 1) throw PrecisionError("TruncatedElement: precision must be >= 1");
    Int m = modulus();
    xbar_ = mod_pos(xbar_, m);
    ybar_ = mod_pos(ybar_, m);
}

TruncatedElement TruncatedElement::from_exact(const FieldElement& e, int N) {
    Int m = pow_int(Int(e.config().p), N);
    return TruncatedElement(rat_mod(e.x(), m), rat_mod(e.y(), m), N, e.config());
}

const PrimeConfig& TruncatedElement::config() const {
    if (!cfg_) throw DomainError("TruncatedElement: unconfigured");
    return *cfg_;
}

namespace {
int join_prec(const TruncatedElement& a, const TruncatedElement& b) {
    if (&a.config() != &b.config() && !(a.config() == b.config()))
        throw DomainError("TruncatedElement: mixed configs");
    return std::min(a.known_valuation_bound(), b.known_valuation_bound());
}
} // namespace

TruncatedElement TruncatedElement::operator+(const TruncatedElement& o) const {
    int N = join_prec(*this, o);
    return TruncatedElement(xbar_ + o.xbar_, ybar_ + o.ybar_, N, config());
}
TruncatedElement TruncatedElement::operator-(const TruncatedElement& o) const {
    int N = join_prec(*this, o);
    return TruncatedElement(xbar_ - o.xbar_, ybar_ - o.ybar_, N, config());
}
TruncatedElement TruncatedElement::operator*(const TruncatedElement& o) const {
    int N = join_prec(*this, o);
    Int eps(config().epsilon);
    return TruncatedElement(xbar_ * o.xbar_ + eps * ybar_ * o.ybar_,
                            xbar_ * o.ybar_ + ybar_ * o.xbar_, N, config());
}
TruncatedElement TruncatedElement::conj() const {
    return TruncatedElement(xbar_, -ybar_, N_, config());
}
TruncatedElement TruncatedElement::norm() const { return *this * conj(); }

TruncatedElement TruncatedElement::inv() const {
    if (val() != 0) throw PrecisionError("TruncatedElement::inv: not a unit");
    Int m = modulus();
    Int eps(config().epsilon);
    Int n = mod_pos(xbar_ * xbar_ - eps * ybar_ * ybar_, m);
    Int ni = inv_mod(n, m);
    return TruncatedElement(xbar_ * ni, -ybar_ * ni, N_, config());
}

long TruncatedElement::val() const {
    if (is_zero_residue())
        throw PrecisionError("TruncatedElement::val: valuation not resolved below precision");
    const Int p(config().p);
    long v = N_;
    if (xbar_ != 0) v = std::min(v, vp_int(xbar_, p));
    if (ybar_ != 0) v = std::min(v, vp_int(ybar_, p));
    if (v >= N_)
        throw PrecisionError("TruncatedElement::val: valuation not resolved below precision");
    return v;
}

std::string TruncatedElement::str() const {
    return xbar_.str() + "+" + ybar_.str() + "*d mod p^" + std::to_string(N_);
}

TruncatedElement solve_norm(const Rational& target, int N, const PrimeConfig& cfg) {
    if (N < 1) throw PrecisionError("solve_norm: N must be >= 1");
    const Int p(cfg.p);
    if (vp_rat(target, p) != 0) throw DomainError("solve_norm: target must be a unit");
    const Int eps = mod_pos(Int(cfg.epsilon), p);

    // Residue-field solution by direct search; the norm map of F_{q^2} over
    // F_q is surjective on units.
    Int m = pow_int(p, N);
    Int t0 = rat_mod(target, p);
    Int x0 = -1, y0 = -1;
    for (Int x = 0; x < p && x0 < 0; ++x)
        for (Int y = 0; y < p; ++y)
            if (mod_pos(x * x - eps * y * y, p) == t0) { x0 = x; y0 = y; break; }
    if (x0 < 0) throw DomainError("solve_norm: no residue solution (unexpected)");

    // Hensel: one of x, y is a unit; adjust it linearly, doubling precision.
    Int T = rat_mod(target, m);
    Int E(cfg.epsilon);
    Int x = x0, y = y0;
    int k = 1;
    while (k < N) {
        int k2 = std::min(2 * k, N);
        Int mk2 = pow_int(p, k2);
        Int f = mod_pos(x * x - E * y * y - T, mk2);
        if (x % p != 0) {
            Int corr = mod_pos(f * inv_mod(2 * x % mk2, mk2), mk2);
            x = mod_pos(x - corr, mk2);
        } else {
            Int corr = mod_pos(f * inv_mod(mod_pos(-2 * E * y, mk2), mk2), mk2);
            y = mod_pos(y - corr, mk2);
        }
        k = k2;
    }
    TruncatedElement c(x, y, N, cfg);
    if (mod_pos(x * x - E * y * y - T, m) != 0)
        throw PrecisionError("solve_norm: lift failed");
    return c;
}

FieldElement parse_field_element(const std::string& s, const PrimeConfig& cfg) {
    // Grammar: term ( ('+'|'-') term )* with term = rational ['*' 'd'] | ['-'] 'd'.
    Rational x = 0, y = 0;
    size_t i = 0;
    auto skip = [&]() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    skip();
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        skip();
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw DomainError("parse_field_element: expected '+'/'-' in '" + s + "'");
        }
        skip();
        first = false;
        if (i < s.size() && (s[i] == 'd' || s[i] == 'D')) {
            ++i;
            y += sign;
            skip();
            continue;
        }
        size_t j = i;
        while (j < s.size() && (std::isdigit((unsigned char)s[j]) || s[j] == '/')) ++j;
        if (j == i) throw DomainError("parse_field_element: cannot parse '" + s + "'");
        Rational coef = parse_rational(s.substr(i, j - i));
        i = j;
        skip();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip();
            if (i >= s.size() || (s[i] != 'd' && s[i] != 'D'))
                throw DomainError("parse_field_element: expected 'd' in '" + s + "'");
            ++i;
            y += sign * coef;
        } else {
            x += sign * coef;
        }
        skip();
    }
    return FieldElement(x, y, cfg);
}

} // namespace heckeafl
