#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>

#include "heckeafl/rational.hpp"

namespace heckeafl {

/// Residue characteristic and the unit epsilon with delta^2 = epsilon.
/// The base field is Q_p with uniformizer p, so q = p throughout.
struct PrimeConfig {
    long p = 3;
    long epsilon = 2;
    int precision = 32;

    PrimeConfig() = default;
    PrimeConfig(long p_, long epsilon_, int precision_);

    Int pi() const { return Int(p); }
    long q() const { return p; }

    static long default_epsilon(long p);
    static PrimeConfig make(long p, int precision = 32);

    bool operator==(const PrimeConfig& o) const {
        return p == o.p && epsilon == o.epsilon && precision == o.precision;
    }
};

/// Valuation value: an integer or the distinguished infinity of val(0).
class Valuation {
public:
    static Valuation infinity() { Valuation v; v.inf_ = true; return v; }
    Valuation() : v_(0), inf_(false) {}
    explicit Valuation(long v) : v_(v), inf_(false) {}

    bool is_infinity() const { return inf_; }
    long finite() const {
        if (inf_) throw DomainError("Valuation: infinite value where finite required");
        return v_;
    }
    bool operator==(const Valuation& o) const { return inf_ == o.inf_ && (inf_ || v_ == o.v_); }
    bool operator<(const Valuation& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    long v_ = 0;
    bool inf_ = false;
};

/// Element x + y*delta of F = Q_p(delta), delta^2 = epsilon, stored exactly
/// as a pair of rationals whose denominators are prime to p.
class FieldElement {
public:
    FieldElement() : x_(0), y_(0), cfg_(nullptr) {}
    FieldElement(Rational x, Rational y, const PrimeConfig& cfg);
    static FieldElement from_rational(const Rational& x, const PrimeConfig& cfg) {
        return FieldElement(x, 0, cfg);
    }
    static FieldElement delta(const PrimeConfig& cfg) { return FieldElement(0, 1, cfg); }
    static FieldElement zero(const PrimeConfig& cfg) { return FieldElement(0, 0, cfg); }
    static FieldElement one(const PrimeConfig& cfg) { return FieldElement(1, 0, cfg); }

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const PrimeConfig& config() const;

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool in_base_field() const { return y_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }
    bool operator==(const FieldElement& o) const { return x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement conj() const;
    FieldElement norm() const;   // x^2 - eps*y^2, lies in F0
    FieldElement trace() const;  // 2x
    Valuation val() const;

    std::string str() const;

private:
    Rational x_, y_;
    const PrimeConfig* cfg_;
};

/// Quadratic character of F0^x attached to F/F0: (-1)^val.
int eta(const FieldElement& a);
/// The unramified extension to F^x, evaluated on a nonzero element.
int eta_tilde(const FieldElement& a);

/// Dense 2x2 matrix over F; enough matrix algebra for the n=1 orbit side.
struct Mat2 {
    FieldElement a, b, c, d;

    Mat2 operator*(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 conj() const;
    Mat2 conj_transpose() const;
    Mat2 inv() const;
    FieldElement det() const;
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    static Mat2 identity(const PrimeConfig& cfg);
    std::string str() const;
};

/// eta-tilde of det(M) for invertible M.
int eta_tilde_det(const Mat2& m);

/// Residue of x + y*delta modulo p^N, carrying the precision bound.
/// Valuation queries must resolve strictly below the bound.
class TruncatedElement {
public:
    TruncatedElement() : xbar_(0), ybar_(0), N_(0), cfg_(nullptr) {}
    TruncatedElement(Int xbar, Int ybar, int N, const PrimeConfig& cfg);
    static TruncatedElement from_exact(const FieldElement& e, int N);

    const Int& xbar() const { return xbar_; }
    const Int& ybar() const { return ybar_; }
    int known_valuation_bound() const { return N_; }
    const PrimeConfig& config() const;

    TruncatedElement operator+(const TruncatedElement& o) const;
    TruncatedElement operator-(const TruncatedElement& o) const;
    TruncatedElement operator*(const TruncatedElement& o) const;
    TruncatedElement conj() const;
    TruncatedElement norm() const;
    /// Inverse of a unit (valuation 0).
    TruncatedElement inv() const;

    bool is_zero_residue() const { return xbar_ == 0 && ybar_ == 0; }
    bool operator==(const TruncatedElement& o) const {
        return xbar_ == o.xbar_ && ybar_ == o.ybar_ && N_ == o.N_;
    }
    /// Exact valuation; throws PrecisionError when >= N.
    long val() const;

    std::string str() const;

private:
    Int modulus() const { return pow_int(Int(cfg_->p), N_); }
    Int xbar_, ybar_;
    int N_;
    const PrimeConfig* cfg_;
};

/// Solve norm(c) = x^2 - eps*y^2 = target (a p-adic unit) modulo p^N by
/// Hensel lifting from a residue-field solution.
TruncatedElement solve_norm(const Rational& target, int N, const PrimeConfig& cfg);

FieldElement parse_field_element(const std::string& s, const PrimeConfig& cfg);

} // namespace heckeafl
