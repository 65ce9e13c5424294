#include "heckeafl/hecke.hpp"

#include "heckeafl/lattice.hpp"

namespace heckeafl {

SModuleElement SModuleElement::operator+(const SModuleElement& o) const {
    SModuleElement r = *this;
    for (const auto& [m, c] : o.coeff) {
        auto it = r.coeff.find(m);
        if (it == r.coeff.end()) r.coeff.emplace(m, c);
        else {
            it->second += c;
            if (it->second.is_zero()) r.coeff.erase(it);
        }
    }
    return r;
}

SModuleElement SModuleElement::operator-(const SModuleElement& o) const {
    return *this + o * QLaurent(-1);
}

SModuleElement SModuleElement::operator*(const QLaurent& s) const {
    SModuleElement r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : coeff) r.coeff.emplace(m, c * s);
    return r;
}

std::string SModuleElement::str() const {
    if (coeff.empty()) return "0";
    std::string s;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
        bool neg = it->second.coeffs().rbegin()->second < 0;
        QLaurent c = neg ? -it->second : it->second;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string cs = c.str();
        if (cs != "1") s += (c.coeffs().size() > 1 ? "(" + cs + ")" : cs) + "*";
        s += "phi'[" + std::to_string(it->first) + "]";
    }
    return s;
}

std::string UHecke::basis_str() const {
    if (!basis_coeffs) throw DomainError("UHecke::basis_str: no basis expansion attached");
    if (basis_coeffs->empty()) return "0";
    std::string s;
    for (auto it = basis_coeffs->rbegin(); it != basis_coeffs->rend(); ++it) {
        bool neg = it->second.coeffs().rbegin()->second < 0;
        QLaurent c = neg ? -it->second : it->second;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string cs = c.str();
        if (cs != "1") s += (c.coeffs().size() > 1 ? "(" + cs + ")" : cs) + "*";
        s += "f[" + std::to_string(it->first) + "]";
    }
    return s;
}

QLaurent qbinom(int n, int m, QBase base) {
    if (m < 0 || m > n) throw DomainError("qbinom: need 0 <= m <= n");
    // [n m]_q = [n-1 m]_q + q^{n-m} [n-1 m-1]_q
    std::vector<QLaurent> row(m + 1);
    row[0] = QLaurent(1);
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, m); j >= 1; --j) {
            QLaurent upd = (j == i) ? QLaurent(0) : row[j];
            row[j] = upd + QLaurent::q_power(i - j) * row[j - 1];
        }
    return base == QBase::Q ? row[m] : row[m].negate_q();
}

GLHecke sat_gl_minuscule(int n, int i) {
    if (i < 0 || i > n) throw DomainError("sat_gl_minuscule: index out of range");
    return {n, GLSatakeElement::sigma(n, i) * QLaurent::q_power(i)};
}

GLHecke sat_gl2_fprime(int m) {
    GLHecke r{2, GLSatakeElement{}};
    r.sat.n = 2;
    if (m < 0) return r;
    MultiLaurent p(2);
    for (int a = 0; a <= m; ++a) p.add_term({a, m - a}, QLaurent::q_power(m));
    r.sat = reduce_symmetric(p, 2);
    return r;
}

UHecke sat_u2_f(int m) {
    UHecke r{2, USatakeElement{}, std::nullopt};
    r.sat.n = 2;
    r.sat.m = 1;
    if (m < 0) return r;
    MultiLaurent p(1);
    for (int i = -m; i <= m; ++i) p.add_term({i}, QLaurent::q_power(m));
    r.sat = reduce_signed_symmetric(p, 2);
    return r;
}

UHecke sat_u2_phi(int m) {
    if (m < 0) return UHecke{2, USatakeElement{2, 1, {}}, std::nullopt};
    return sat_u2_f(m) - sat_u2_f(m - 1);
}

namespace {
Rational binom(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    Rational r = 1;
    for (long i = 0; i < b; ++i) r = r * Rational(a - i) / Rational(i + 1);
    return r;
}
} // namespace

USatakeElement chi_rho(int n, int s) {
    int m = n / 2;
    if (s < 0 || s > m) throw DomainError("chi_rho: index out of range");
    USatakeElement out;
    out.n = n;
    out.m = m;
    auto add = [&](int idx, const Rational& c) {
        if (c == 0) return;
        USatakeElement term = USatakeElement::s_basis(n, idx) * QLaurent(c);
        out = out + term;
    };
    if (n % 2 == 0) {
        for (int j = 0; 2 * j <= s; ++j) add(s - 2 * j, binom(m - (s - 2 * j), j));
    } else {
        for (int i = 0; i <= s; ++i) add(s - i, binom(m - (s - i), i / 2));
    }
    return out;
}

UHecke sat_f_bracket(int n, int t) {
    if (t < 0 || t % 2 != 0 || t > n) throw DomainError("sat_f_bracket: bad index");
    int s = t / 2;
    // solve the unitriangular system upward from f^[0] = 1
    std::vector<USatakeElement> f(s + 1);
    f[0] = USatakeElement::unit(n);
    for (int k = 1; k <= s; ++k) {
        USatakeElement rhs = chi_rho(n, k) * QLaurent::q_power(k * (n - k));
        for (int i = 0; i < k; ++i)
            rhs = rhs - f[i] * qbinom(n - 2 * i, k - i, QBase::MinusQ);
        // leading coefficient [n-2k 0]_{-q} = 1
        f[k] = rhs;
    }
    return {n, f[s], std::nullopt};
}

UHecke bc(const GLHecke& e) {
    const int n = e.n;
    const int m = n / 2;
    MultiLaurent full = expand(e.sat);
    MultiLaurent folded(m);
    for (const auto& [ex, c] : full.terms) {
        ExpVec u(m, 0);
        for (int i = 0; i < n; ++i) {
            if (i < m) u[i] += ex[i];
            else if (i >= n - m) u[n - 1 - i] -= ex[i];
            // middle variable of odd n maps to 1
        }
        folded.add_term(u, c);
    }
    return {n, reduce_signed_symmetric(folded, n), std::nullopt};
}

GLHecke eta_twist(const GLHecke& e) {
    GLSatakeElement out;
    out.n = e.n;
    for (const auto& [ex, c] : e.sat.coeffs) {
        long w = 0;
        for (int i = 0; i < e.n; ++i) w += (long)(i + 1) * ex[i];
        auto v = (w % 2 == 0) ? c : -c;
        out.coeffs.emplace(ex, v);
    }
    return {e.n, out};
}

UHecke convolve(const UHecke& a, const UHecke& b) {
    if (a.n != b.n) throw DomainError("convolve: rank mismatch");
    return {a.n, a.sat * b.sat, std::nullopt};
}

GLHecke convolve(const GLHecke& a, const GLHecke& b) {
    if (a.n != b.n) throw DomainError("convolve: rank mismatch");
    return {a.n, a.sat * b.sat};
}

SModuleElement r_eta_star(int m) {
    SModuleElement r;
    if (m < 0) return r;
    for (int i = 0; i <= m; ++i) {
        QLaurent c;
        for (int j = 0; j <= m - i; ++j) c += QLaurent::q_power(j);
        if (m % 2 == 1) c = -c;
        r.coeff.emplace(i, c);
    }
    return r;
}

SModuleElement r_eta_star_minuscule(int m) {
    SModuleElement r;
    if (m < 0) return r;
    for (int i = 0; i <= m; ++i) {
        int k = m - i;
        QLaurent e = (k == 0) ? QLaurent(1) : QLaurent::q_power(k) + QLaurent::q_power(k - 1);
        if (m % 2 == 1) e = -e;
        r.coeff.emplace(i, e);
    }
    return r;
}

SModuleElement bc_S_eta_inverse(int m) {
    SModuleElement r;
    if (m < 0) return r;
    for (int i = 0; i <= m; ++i) {
        QLaurent c((i == m) ? 1 : 2);
        if (m % 2 == 1) c = -c;
        r.coeff.emplace(i, c);
    }
    return r;
}

std::map<int, QLaurent> to_phitilde_basis(const SModuleElement& e) {
    std::map<int, QLaurent> out;
    SModuleElement rem = e;
    while (!rem.is_zero()) {
        auto it = rem.coeff.rbegin();
        int m = it->first;
        QLaurent c = it->second;
        if (m % 2 == 1) c = -c;  // phi~'_m has coefficient (-1)^m at phi'_m
        out.emplace(m, c);
        rem = rem - bc_S_eta_inverse(m) * c;
        if (!rem.is_zero() && rem.coeff.rbegin()->first >= m)
            throw DomainError("to_phitilde_basis: triangular elimination failed");
    }
    return out;
}

UHecke bc_S_eta(const SModuleElement& e) {
    UHecke out{2, USatakeElement{2, 1, {}}, std::nullopt};
    for (const auto& [m, c] : to_phitilde_basis(e)) out = out + sat_u2_phi(m) * c;
    return out;
}

std::map<int, QLaurent> expand_u2_in_phi_basis(const USatakeElement& e) {
    if (e.n != 2) throw DomainError("expand_u2_in_phi_basis: rank 2 only");
    std::map<int, QLaurent> out;
    USatakeElement rem = e;
    while (!rem.is_zero()) {
        int k = rem.coeffs.rbegin()->first[0];
        // Sat(phi_k) has leading coefficient q^k on s1^k
        QLaurent c = rem.coeffs.rbegin()->second * QLaurent::q_power(-k);
        out.emplace(k, c);
        rem = rem - (sat_u2_phi(k).sat * c);
        if (!rem.is_zero() && rem.coeffs.rbegin()->first[0] >= k)
            throw DomainError("expand_u2_in_phi_basis: elimination failed");
    }
    return out;
}

UHecke atomic_phi(int n, int t, long q_value) {
    if (t < 0 || t % 2 != 0 || t > n) throw DomainError("atomic_phi: bad index");
    UHecke out{n, USatakeElement{n, n / 2, {}}, std::map<int, QLaurent>{}};
    for (int tp = 0; tp <= t; tp += 2) {
        long m = m_count_cached(n, tp, t, q_value);
        if (tp == t && m != 1) throw DomainError("atomic_phi: m(t,t) != 1");
        out.sat = out.sat + sat_f_bracket(n, tp).sat * QLaurent(m);
        out.basis_coeffs->emplace(tp, QLaurent(m));
    }
    return out;
}

UHecke atomic_phi_interpolated(int n, int t) {
    if (t < 0 || t % 2 != 0 || t > n) throw DomainError("atomic_phi_interpolated: bad index");
    UHecke out{n, USatakeElement{n, n / 2, {}}, std::map<int, QLaurent>{}};
    for (int tp = 0; tp <= t; tp += 2) {
        UniPoly mpoly = m_count_interpolated(n, tp, t);
        QLaurent c;
        for (int d = 0; d <= mpoly.degree(); ++d)
            c += QLaurent::q_power(d, mpoly.coeff(d));
        if (tp == t && !(c == QLaurent(1)))
            throw DomainError("atomic_phi_interpolated: m(t,t) != 1");
        out.sat = out.sat + sat_f_bracket(n, tp).sat * c;
        out.basis_coeffs->emplace(tp, c);
    }
    return out;
}

} // namespace heckeafl
