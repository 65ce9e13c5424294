#pragma once

#include <map>
#include <string>

#include "heckeafl/rational.hpp"

namespace heckeafl {

/// Element of Q[q, q^-1], sparse on exponents, no zero coefficients stored.
class QLaurent {
public:
    QLaurent() = default;
    QLaurent(long c) { if (c != 0) c_[0] = c; }                  // NOLINT implicit
    QLaurent(const Rational& c) { if (c != 0) c_[0] = c; }       // NOLINT implicit
    static QLaurent q_power(int e, const Rational& c = 1) {
        QLaurent r;
        if (c != 0) r.c_[e] = c;
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Rational>& coeffs() const { return c_; }
    Rational coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rational(0) : it->second;
    }

    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent operator+(const QLaurent& o) const { QLaurent r = *this; r += o; return r; }
    QLaurent operator-(const QLaurent& o) const { QLaurent r = *this; r -= o; return r; }
    QLaurent operator*(const QLaurent& o) const;
    QLaurent operator-() const;
    bool operator==(const QLaurent& o) const { return c_ == o.c_; }
    bool operator!=(const QLaurent& o) const { return !(*this == o); }

    /// Substitute q -> -q.
    QLaurent negate_q() const;
    /// Exact evaluation at a nonzero rational q.
    Rational evaluate(const Rational& qv) const;
    /// Exact division, throws DomainError if not divisible in Q[q,q^-1].
    QLaurent divide_exact(const QLaurent& d) const;

    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    Rational constant_value() const { return coeff(0); }
    int min_exp() const;
    int max_exp() const;

    /// Canonical text, descending exponents: "q^2 - 3*q + 1/2".
    std::string str() const;

private:
    std::map<int, Rational> c_;
    void trim(int e) { auto it = c_.find(e); if (it != c_.end() && it->second == 0) c_.erase(it); }
};

QLaurent parse_qlaurent(const std::string& s);

} // namespace heckeafl
