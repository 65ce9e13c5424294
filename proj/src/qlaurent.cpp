#include "heckeafl/qlaurent.hpp"

#include <cctype>

namespace heckeafl {

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (const auto& [e, v] : o.c_) {
        c_[e] += v;
        trim(e);
    }
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (const auto& [e, v] : o.c_) {
        c_[e] -= v;
        trim(e);
    }
    return *this;
}

QLaurent QLaurent::operator*(const QLaurent& o) const {
    QLaurent r;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : o.c_) {
            r.c_[e1 + e2] += v1 * v2;
            r.trim(e1 + e2);
        }
    return r;
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

QLaurent QLaurent::negate_q() const {
    QLaurent r;
    for (const auto& [e, v] : c_) {
        Rational w = (e % 2 == 0) ? v : -v;
        if (w != 0) r.c_[e] = w;
    }
    return r;
}

Rational QLaurent::evaluate(const Rational& qv) const {
    if (qv == 0) throw DomainError("QLaurent::evaluate: q must be nonzero");
    Rational r = 0;
    for (const auto& [e, v] : c_) {
        Rational t = 1;
        long n = e >= 0 ? e : -e;
        Rational base = e >= 0 ? qv : Rational(1) / qv;
        for (long i = 0; i < n; ++i) t *= base;
        r += v * t;
    }
    return r;
}

int QLaurent::min_exp() const {
    if (c_.empty()) throw DomainError("QLaurent::min_exp of zero");
    return c_.begin()->first;
}
int QLaurent::max_exp() const {
    if (c_.empty()) throw DomainError("QLaurent::max_exp of zero");
    return c_.rbegin()->first;
}

QLaurent QLaurent::divide_exact(const QLaurent& d) const {
    if (d.is_zero()) throw DomainError("QLaurent::divide_exact: division by zero");
    QLaurent rem = *this, quot;
    // Divide by leading term repeatedly; exactness is checked at the end.
    const auto [de, dc] = *d.c_.rbegin();
    while (!rem.is_zero()) {
        const auto [re, rc] = *rem.c_.rbegin();
        QLaurent t = QLaurent::q_power(re - de, rc / dc);
        quot += t;
        rem -= t * d;
        if (!rem.is_zero() && rem.max_exp() >= re)
            throw DomainError("QLaurent::divide_exact: not divisible");
    }
    return quot;
}

std::string QLaurent::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rational v = it->second;
        int e = it->first;
        bool neg = v < 0;
        Rational av = neg ? Rational(-v) : v;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        bool unit_coef = (av == 1) && e != 0;
        if (!unit_coef) s += rat_pretty(av);
        if (e != 0) {
            if (!unit_coef) s += "*";
            s += "q";
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

QLaurent parse_qlaurent(const std::string& s) {
    QLaurent out;
    size_t i = 0;
    auto skip = [&]() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    bool first = true;
    skip();
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw DomainError("parse_qlaurent: expected sign in '" + s + "'");
        }
        first = false;
        Rational coef = 1;
        bool have_coef = false;
        if (i < s.size() && (std::isdigit((unsigned char)s[i]))) {
            size_t j = i;
            while (j < s.size() && (std::isdigit((unsigned char)s[j]) || s[j] == '/')) ++j;
            coef = parse_rational(s.substr(i, j - i));
            i = j;
            have_coef = true;
            skip();
            if (i < s.size() && s[i] == '*') { ++i; skip(); }
        }
        int e = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t j = i;
                if (j < s.size() && s[j] == '-') ++j;
                while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
                e = std::stoi(s.substr(i, j - i));
                i = j;
            }
        } else if (!have_coef) {
            throw DomainError("parse_qlaurent: cannot parse term in '" + s + "'");
        }
        out += QLaurent::q_power(e, sign * coef);
        skip();
    }
    return out;
}

} // namespace heckeafl
