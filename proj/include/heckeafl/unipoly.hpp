#pragma once

#include <string>
#include <vector>

#include "heckeafl/rational.hpp"

namespace heckeafl {

/// Dense univariate polynomial over Q (index = degree).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    static UniPoly monomial(int deg, const Rational& c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    Rational coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly monic() const;
    Rational evaluate(const Rational& x) const;
    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

    std::string str(const std::string& var = "X1") const;

private:
    std::vector<Rational> c_;
    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
};

/// Monic gcd via the Euclidean algorithm; both inputs nonzero.
UniPoly gcd_univariate(const UniPoly& a, const UniPoly& b);

/// Extended Euclid: returns (g, u, v) monic g with a*u + b*v = g.
struct BezoutCertificate {
    UniPoly g, u, v;
};
BezoutCertificate extended_gcd(const UniPoly& a, const UniPoly& b);

} // namespace heckeafl
