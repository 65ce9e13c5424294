#pragma once

#include <map>
#include <string>
#include <vector>

#include "heckeafl/qlaurent.hpp"
#include "heckeafl/unipoly.hpp"

namespace heckeafl {

using ExpVec = std::vector<int>;

/// Sparse multivariate Laurent polynomial over Q[q,q^-1]; the workhorse for
/// both Satake coordinate rings (x-variables for GL, u-variables for U).
struct MultiLaurent {
    int nvars = 0;
    std::map<ExpVec, QLaurent> terms;  // lexicographic key order, no zero values

    MultiLaurent() = default;
    explicit MultiLaurent(int nv) : nvars(nv) {}
    static MultiLaurent monomial(int nv, const ExpVec& e, const QLaurent& c);
    static MultiLaurent constant(int nv, const QLaurent& c);

    bool is_zero() const { return terms.empty(); }
    void add_term(const ExpVec& e, const QLaurent& c);

    MultiLaurent operator+(const MultiLaurent& o) const;
    MultiLaurent operator-(const MultiLaurent& o) const;
    MultiLaurent operator*(const MultiLaurent& o) const;
    MultiLaurent operator*(const QLaurent& s) const;
    bool operator==(const MultiLaurent& o) const { return nvars == o.nvars && terms == o.terms; }

    MultiLaurent swap_vars(int i, int j) const;
    MultiLaurent invert_var(int i) const;
    /// x_i -> -x_i for every i (coefficient picks up (-1)^{total degree}).
    MultiLaurent negate_all_vars() const;
    MultiLaurent shift_all_exponents(int s) const;
    Rational evaluate(const std::vector<Rational>& point, const Rational& qv) const;

    bool is_symmetric() const;
    bool is_signed_symmetric() const;  // invariance under swaps and u_i -> u_i^{-1}
};

/// Canonical form of a symmetric Laurent polynomial in x_1..x_n: a polynomial
/// in the elementary symmetric functions s_1..s_{n-1} and s_n^{+-1}.
struct GLSatakeElement {
    int n = 0;
    std::map<ExpVec, QLaurent> coeffs;  // length-n exponent vectors; only the last may be negative

    bool is_zero() const { return coeffs.empty(); }
    GLSatakeElement operator+(const GLSatakeElement& o) const;
    GLSatakeElement operator-(const GLSatakeElement& o) const;
    GLSatakeElement operator*(const GLSatakeElement& o) const;
    GLSatakeElement operator*(const QLaurent& s) const;
    bool operator==(const GLSatakeElement& o) const { return n == o.n && coeffs == o.coeffs; }
    bool operator!=(const GLSatakeElement& o) const { return !(*this == o); }

    static GLSatakeElement unit(int n);
    static GLSatakeElement sigma(int n, int i);

    std::string str() const;
};

/// Canonical form of a W_n-invariant Laurent polynomial in u_1..u_m: a
/// polynomial in s_1..s_m, the elementary symmetric functions of
/// y_s = u_s + u_s^{-1}.
struct USatakeElement {
    int n = 0;  // rank of the unitary group
    int m = 0;  // floor(n/2)
    std::map<ExpVec, QLaurent> coeffs;  // length-m exponent vectors, all >= 0

    bool is_zero() const { return coeffs.empty(); }
    USatakeElement operator+(const USatakeElement& o) const;
    USatakeElement operator-(const USatakeElement& o) const;
    USatakeElement operator*(const USatakeElement& o) const;
    USatakeElement operator*(const QLaurent& s) const;
    bool operator==(const USatakeElement& o) const {
        return n == o.n && m == o.m && coeffs == o.coeffs;
    }
    bool operator!=(const USatakeElement& o) const { return !(*this == o); }

    static USatakeElement unit(int n);
    static USatakeElement s_basis(int n, int i);  // the generator s_i

    std::string str() const;
};

/// Express a symmetric Laurent polynomial in the sigma-basis by iterated
/// leading-term elimination. Throws NotSymmetricError.
GLSatakeElement reduce_symmetric(const MultiLaurent& p, int n);
MultiLaurent expand(const GLSatakeElement& e);

/// Fold a W_n-invariant Laurent polynomial in u_1..u_m through
/// y_s = u_s + u_s^{-1} and reduce. Throws NotInvariantError.
USatakeElement reduce_signed_symmetric(const MultiLaurent& p, int n);
MultiLaurent expand(const USatakeElement& e);

Rational evaluate(const GLSatakeElement& e, const std::vector<Rational>& x_point,
                  const Rational& qv);
Rational evaluate(const USatakeElement& e, const std::vector<Rational>& u_point,
                  const Rational& qv);

/// u^k + u^{-k} as a polynomial in y = u + u^{-1}.
UniPoly inversion_fold_poly(int k);

/// One-variable Laurent polynomial symmetric under X -> X^{-1}, written as a
/// polynomial in X1 = X + X^{-1} with q specialized.
UniPoly fold_to_x1(const MultiLaurent& p, const Rational& qv);

std::string satake_terms_str(const std::map<ExpVec, QLaurent>& coeffs, int nvars);
std::map<ExpVec, QLaurent> parse_satake_terms(const std::string& text, int nvars);
GLSatakeElement parse_gl_satake(const std::string& text, int n);
USatakeElement parse_u_satake(const std::string& text, int n);

} // namespace heckeafl
