#include "heckeafl/intersection.hpp"

namespace heckeafl {

FundamentalMatrix::FundamentalMatrix(Mat2 a) : A(std::move(a)) {
    if (!(A.conj_transpose() == A))
        throw DomainError("FundamentalMatrix: matrix is not hermitian");
    if (A.det().is_zero()) throw DomainError("FundamentalMatrix: singular matrix");
}

FundamentalMatrix FundamentalMatrix::pair_gram(const FieldElement& a_unit, int m) {
    const PrimeConfig& cfg = a_unit.config();
    if (a_unit.is_zero() || !(a_unit.val() == Valuation(0)))
        throw DomainError("pair_gram: pairing must be a unit");
    FieldElement pm(Rational(pow_int(Int(cfg.p), m)), 0, cfg);
    return FundamentalMatrix(Mat2{FieldElement::one(cfg), a_unit.conj() * pm, a_unit * pm,
                                  pm * pm});
}

std::pair<long, long> fundamental_invariants(const FundamentalMatrix& F) {
    long vdet = F.A.det().val().finite();
    long a1 = std::numeric_limits<long>::max();
    for (const FieldElement* e : {&F.A.a, &F.A.b, &F.A.c, &F.A.d})
        if (!e->is_zero()) a1 = std::min(a1, e->val().finite());
    return {a1, vdet - a1};
}

Rational kr_pairing(const std::pair<long, long>& invariants) {
    auto [a1, r] = invariants;
    if (a1 != 0 || r % 2 == 0)
        throw UnimplementedRegimeError(
            "kr_pairing: only fundamental invariants (0, odd) are supported");
    return Rational(r + 1, 2);
}

IntersectionResult int_g_phi(int r, int m) {
    if (r < 1 || r % 2 == 0)
        throw DomainError("int_g_phi: r must be odd and positive");
    if (m < 0) throw DomainError("int_g_phi: m must be >= 0");
    if (m == 0) return {Rational(r + 1, 2), r, m};
    Rational v = kr_pairing({0, 2 * m + r}) - kr_pairing({0, 2 * (m - 1) + r});
    return {v, r, m};
}

Int degree_Tm(int m, long q) {
    if (m < 1) throw DomainError("degree_Tm: m must be >= 1");
    return pow_int(Int(q), 2 * m - 1) * (q + 1);
}

QLaurent degree_Tm_symbolic(int m) {
    if (m < 1) throw DomainError("degree_Tm: m must be >= 1");
    return QLaurent::q_power(2 * m) + QLaurent::q_power(2 * m - 1);
}

} // namespace heckeafl
