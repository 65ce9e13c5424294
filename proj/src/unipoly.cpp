#include "heckeafl/unipoly.hpp"

namespace heckeafl {

UniPoly UniPoly::monomial(int deg, const Rational& c) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw DomainError("UniPoly::monic of zero");
    return *this * (Rational(1) / c_.back());
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw DomainError("UniPoly::divmod: division by zero");
    UniPoly r = *this;
    std::vector<Rational> q(std::max<int>(0, degree() - d.degree() + 1), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rational c = r.c_.back() / d.c_.back();
        q[k] = c;
        r = r - d * UniPoly::monomial(k, c);
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly gcd_univariate(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("gcd_univariate: zero input");
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

BezoutCertificate extended_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("extended_gcd: zero input");
    UniPoly r0 = a, r1 = b;
    UniPoly u0 = UniPoly::constant(1), u1;
    UniPoly v0, v1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UniPoly u2 = u0 - q * u1;
        UniPoly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    Rational lc = r0.coeffs().back();
    Rational s = Rational(1) / lc;
    return BezoutCertificate{r0 * s, u0 * s, v0 * s};
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        Rational v = c_[i];
        if (v == 0) continue;
        bool neg = v < 0;
        Rational av = neg ? Rational(-v) : v;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        bool unit_coef = (av == 1) && i != 0;
        if (!unit_coef) s += rat_pretty(av);
        if (i != 0) {
            if (!unit_coef) s += "*";
            s += var;
            if (i != 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace heckeafl
