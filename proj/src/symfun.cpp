#include "heckeafl/symfun.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace heckeafl {

MultiLaurent MultiLaurent::monomial(int nv, const ExpVec& e, const QLaurent& c) {
    MultiLaurent p(nv);
    p.add_term(e, c);
    return p;
}

MultiLaurent MultiLaurent::constant(int nv, const QLaurent& c) {
    return monomial(nv, ExpVec(nv, 0), c);
}

void MultiLaurent::add_term(const ExpVec& e, const QLaurent& c) {
    if ((int)e.size() != nvars) throw DomainError("MultiLaurent: exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& o) const {
    if (nvars != o.nvars) throw DomainError("MultiLaurent: arity mismatch");
    MultiLaurent r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& o) const {
    if (nvars != o.nvars) throw DomainError("MultiLaurent: arity mismatch");
    MultiLaurent r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, -c);
    return r;
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
    if (nvars != o.nvars) throw DomainError("MultiLaurent: arity mismatch");
    MultiLaurent r(nvars);
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            ExpVec e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiLaurent MultiLaurent::operator*(const QLaurent& s) const {
    MultiLaurent r(nvars);
    for (const auto& [e, c] : terms) r.add_term(e, c * s);
    return r;
}

MultiLaurent MultiLaurent::swap_vars(int i, int j) const {
    MultiLaurent r(nvars);
    for (const auto& [e, c] : terms) {
        ExpVec f = e;
        std::swap(f[i], f[j]);
        r.add_term(f, c);
    }
    return r;
}

MultiLaurent MultiLaurent::invert_var(int i) const {
    MultiLaurent r(nvars);
    for (const auto& [e, c] : terms) {
        ExpVec f = e;
        f[i] = -f[i];
        r.add_term(f, c);
    }
    return r;
}

MultiLaurent MultiLaurent::negate_all_vars() const {
    MultiLaurent r(nvars);
    for (const auto& [e, c] : terms) {
        long deg = std::accumulate(e.begin(), e.end(), 0L);
        r.add_term(e, (deg % 2 == 0) ? c : -c);
    }
    return r;
}

MultiLaurent MultiLaurent::shift_all_exponents(int s) const {
    MultiLaurent r(nvars);
    for (const auto& [e, c] : terms) {
        ExpVec f = e;
        for (auto& v : f) v += s;
        r.add_term(f, c);
    }
    return r;
}

Rational MultiLaurent::evaluate(const std::vector<Rational>& point, const Rational& qv) const {
    if ((int)point.size() != nvars) throw DomainError("MultiLaurent::evaluate: dimension mismatch");
    for (const auto& v : point)
        if (v == 0) throw DomainError("MultiLaurent::evaluate: zero coordinate");
    Rational total = 0;
    for (const auto& [e, c] : terms) {
        Rational t = c.evaluate(qv);
        for (int i = 0; i < nvars; ++i) {
            long k = e[i] >= 0 ? e[i] : -e[i];
            Rational base = e[i] >= 0 ? point[i] : Rational(1) / point[i];
            for (long j = 0; j < k; ++j) t *= base;
        }
        total += t;
    }
    return total;
}

bool MultiLaurent::is_symmetric() const {
    for (int i = 0; i + 1 < nvars; ++i)
        if (!(swap_vars(i, i + 1) == *this)) return false;
    return true;
}

bool MultiLaurent::is_signed_symmetric() const {
    if (!is_symmetric()) return false;
    for (int i = 0; i < nvars; ++i)
        if (!(invert_var(i) == *this)) return false;
    return true;
}

namespace {

/// Elementary symmetric polynomial e_i(x_1..x_n) as a MultiLaurent.
MultiLaurent elementary(int n, int i) {
    MultiLaurent r(n);
    ExpVec idx(i);
    // iterate i-subsets of {0..n-1}
    std::vector<int> comb(i);
    std::iota(comb.begin(), comb.end(), 0);
    if (i == 0) {
        r.add_term(ExpVec(n, 0), QLaurent(1));
        return r;
    }
    while (true) {
        ExpVec e(n, 0);
        for (int k : comb) e[k] = 1;
        r.add_term(e, QLaurent(1));
        int j = i - 1;
        while (j >= 0 && comb[j] == n - i + j) --j;
        if (j < 0) break;
        ++comb[j];
        for (int k = j + 1; k < i; ++k) comb[k] = comb[k - 1] + 1;
    }
    return r;
}

/// Shared leading-term elimination: expresses a symmetric *polynomial* (all
/// exponents >= 0) in the elementary symmetric basis.
std::map<ExpVec, QLaurent> eliminate_polynomial(MultiLaurent p, int n,
                                                const char* err_context) {
    std::vector<MultiLaurent> elem;
    elem.reserve(n + 1);
    for (int i = 0; i <= n; ++i) elem.push_back(elementary(n, i));
    std::map<ExpVec, QLaurent> out;
    while (!p.is_zero()) {
        auto it = p.terms.rbegin();  // lexicographic maximum
        const ExpVec& lam = it->first;
        QLaurent c = it->second;
        for (int i = 0; i + 1 < n; ++i)
            if (lam[i] < lam[i + 1])
                throw NotSymmetricError(std::string(err_context) +
                                        ": leading exponent not dominant");
        ExpVec d(n);
        for (int i = 0; i + 1 < n; ++i) d[i] = lam[i] - lam[i + 1];
        d[n - 1] = lam[n - 1];
        MultiLaurent mono = MultiLaurent::constant(n, c);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < d[i]; ++k) mono = mono * elem[i + 1];
        p = p - mono;
        auto jt = out.find(d);
        if (jt == out.end()) out.emplace(d, c);
        else {
            jt->second += c;
            if (jt->second.is_zero()) out.erase(jt);
        }
    }
    return out;
}

} // namespace

GLSatakeElement reduce_symmetric(const MultiLaurent& p, int n) {
    if (p.nvars != n) throw DomainError("reduce_symmetric: arity mismatch");
    GLSatakeElement r;
    r.n = n;
    if (p.is_zero()) return r;
    if (!p.is_symmetric()) throw NotSymmetricError("reduce_symmetric: input not S_n-invariant");
    int mu = 0;
    for (const auto& [e, c] : p.terms)
        for (int v : e) mu = std::min(mu, v);
    MultiLaurent q = p.shift_all_exponents(-mu);  // clear sigma_n denominators
    auto out = eliminate_polynomial(std::move(q), n, "reduce_symmetric");
    for (auto& [e, c] : out) {
        ExpVec f = e;
        f[n - 1] += mu;
        r.coeffs.emplace(std::move(f), std::move(c));
    }
    return r;
}

MultiLaurent expand(const GLSatakeElement& e) {
    const int n = e.n;
    std::vector<MultiLaurent> elem;
    for (int i = 0; i <= n; ++i) elem.push_back(elementary(n, i));
    MultiLaurent total(n);
    for (const auto& [d, c] : e.coeffs) {
        MultiLaurent mono = MultiLaurent::constant(n, c);
        for (int i = 0; i + 1 < n; ++i)
            for (int k = 0; k < d[i]; ++k) mono = mono * elem[i + 1];
        // sigma_n^k is the monomial (x_1..x_n)^k for any k in Z
        MultiLaurent shifted(n);
        for (const auto& [ex, cc] : mono.terms) {
            ExpVec f = ex;
            for (auto& v : f) v += d[n - 1];
            shifted.add_term(f, cc);
        }
        total = total + shifted;
    }
    return total;
}

UniPoly inversion_fold_poly(int k) {
    // T~_0 = 2, T~_1 = y, T~_{k+1} = y*T~_k - T~_{k-1}; u^k + u^{-k} = T~_k(u + u^{-1})
    if (k == 0) return UniPoly::constant(2);
    UniPoly a = UniPoly::constant(2), b = UniPoly::monomial(1);
    for (int i = 1; i < k; ++i) {
        UniPoly c = UniPoly::monomial(1) * b - a;
        a = b;
        b = c;
    }
    return b;
}

namespace {

/// Fold one u-variable, symmetric under inversion, into y = u + u^{-1}.
MultiLaurent fold_variable(const MultiLaurent& p, int var) {
    MultiLaurent r(p.nvars);
    for (const auto& [e, c] : p.terms) {
        int k = e[var];
        if (k < 0) continue;  // mirrored term handled with its positive partner
        if (k == 0) {
            r.add_term(e, c);
            continue;
        }
        ExpVec mirror = e;
        mirror[var] = -k;
        auto it = p.terms.find(mirror);
        if (it == p.terms.end() || !(it->second == c))
            throw NotInvariantError("fold_variable: not inversion-invariant");
        UniPoly t = inversion_fold_poly(k);
        for (int d = 0; d <= t.degree(); ++d) {
            Rational cd = t.coeff(d);
            if (cd == 0) continue;
            ExpVec f = e;
            f[var] = d;
            r.add_term(f, c * QLaurent(cd));
        }
    }
    return r;
}

} // namespace

USatakeElement reduce_signed_symmetric(const MultiLaurent& p, int n) {
    const int m = n / 2;
    if (p.nvars != m) throw DomainError("reduce_signed_symmetric: arity mismatch");
    USatakeElement r;
    r.n = n;
    r.m = m;
    if (p.is_zero()) return r;
    if (!p.is_signed_symmetric())
        throw NotInvariantError("reduce_signed_symmetric: input not W_n-invariant");
    MultiLaurent folded = p;
    for (int s = 0; s < m; ++s) folded = fold_variable(folded, s);
    if (m == 0) {
        // rank too small for parameters; only constants survive
        if (!folded.is_zero()) r.coeffs.emplace(ExpVec{}, folded.terms.begin()->second);
        return r;
    }
    r.coeffs = eliminate_polynomial(std::move(folded), m, "reduce_signed_symmetric");
    return r;
}

MultiLaurent expand(const USatakeElement& e) {
    const int m = e.m;
    // first expand into y-variables, then substitute y_s = u_s + u_s^{-1}
    GLSatakeElement as_poly;
    as_poly.n = m;
    as_poly.coeffs = e.coeffs;
    if (m == 0) {
        MultiLaurent r(0);
        for (const auto& [ex, c] : e.coeffs) r.add_term(ExpVec{}, c);
        return r;
    }
    MultiLaurent in_y = expand(as_poly);
    MultiLaurent out(m);
    for (const auto& [ey, c] : in_y.terms) {
        MultiLaurent term = MultiLaurent::constant(m, c);
        for (int s = 0; s < m; ++s) {
            MultiLaurent ys(m);
            ExpVec up(m, 0), dn(m, 0);
            up[s] = 1;
            dn[s] = -1;
            ys.add_term(up, QLaurent(1));
            ys.add_term(dn, QLaurent(1));
            for (int k = 0; k < ey[s]; ++k) term = term * ys;
        }
        out = out + term;
    }
    return out;
}

GLSatakeElement GLSatakeElement::unit(int n) {
    GLSatakeElement r;
    r.n = n;
    r.coeffs.emplace(ExpVec(n, 0), QLaurent(1));
    return r;
}

GLSatakeElement GLSatakeElement::sigma(int n, int i) {
    if (i < 0 || i > n) throw DomainError("sigma: index out of range");
    GLSatakeElement r;
    r.n = n;
    if (i == 0) return unit(n);
    ExpVec e(n, 0);
    e[i - 1] = 1;
    r.coeffs.emplace(e, QLaurent(1));
    return r;
}

namespace {
template <typename T>
std::map<ExpVec, QLaurent> add_maps(const std::map<ExpVec, QLaurent>& a,
                                    const std::map<ExpVec, QLaurent>& b, T sign) {
    std::map<ExpVec, QLaurent> r = a;
    for (const auto& [e, c] : b) {
        auto it = r.find(e);
        if (it == r.end()) {
            QLaurent v = sign(c);
            if (!v.is_zero()) r.emplace(e, v);
        } else {
            it->second += sign(c);
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

std::map<ExpVec, QLaurent> mul_maps(const std::map<ExpVec, QLaurent>& a,
                                    const std::map<ExpVec, QLaurent>& b, int nvars) {
    std::map<ExpVec, QLaurent> r;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) {
            ExpVec e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
            auto it = r.find(e);
            if (it == r.end()) {
                QLaurent v = c1 * c2;
                if (!v.is_zero()) r.emplace(std::move(e), std::move(v));
            } else {
                it->second += c1 * c2;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

std::map<ExpVec, QLaurent> scale_map(const std::map<ExpVec, QLaurent>& a, const QLaurent& s) {
    std::map<ExpVec, QLaurent> r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a) r.emplace(e, c * s);
    return r;
}

auto ident = [](const QLaurent& c) { return c; };
auto negate = [](const QLaurent& c) { return -c; };
} // namespace

GLSatakeElement GLSatakeElement::operator+(const GLSatakeElement& o) const {
    if (n != o.n) throw DomainError("GLSatakeElement: rank mismatch");
    GLSatakeElement r;
    r.n = n;
    r.coeffs = add_maps(coeffs, o.coeffs, ident);
    return r;
}
GLSatakeElement GLSatakeElement::operator-(const GLSatakeElement& o) const {
    if (n != o.n) throw DomainError("GLSatakeElement: rank mismatch");
    GLSatakeElement r;
    r.n = n;
    r.coeffs = add_maps(coeffs, o.coeffs, negate);
    return r;
}
GLSatakeElement GLSatakeElement::operator*(const GLSatakeElement& o) const {
    if (n != o.n) throw DomainError("GLSatakeElement: rank mismatch");
    GLSatakeElement r;
    r.n = n;
    r.coeffs = mul_maps(coeffs, o.coeffs, n);
    return r;
}
GLSatakeElement GLSatakeElement::operator*(const QLaurent& s) const {
    GLSatakeElement r;
    r.n = n;
    r.coeffs = scale_map(coeffs, s);
    return r;
}

USatakeElement USatakeElement::unit(int n) {
    USatakeElement r;
    r.n = n;
    r.m = n / 2;
    r.coeffs.emplace(ExpVec(r.m, 0), QLaurent(1));
    return r;
}

USatakeElement USatakeElement::s_basis(int n, int i) {
    USatakeElement r;
    r.n = n;
    r.m = n / 2;
    if (i < 0 || i > r.m) throw DomainError("s_basis: index out of range");
    if (i == 0) return unit(n);
    ExpVec e(r.m, 0);
    e[i - 1] = 1;
    r.coeffs.emplace(e, QLaurent(1));
    return r;
}

USatakeElement USatakeElement::operator+(const USatakeElement& o) const {
    if (n != o.n) throw DomainError("USatakeElement: rank mismatch");
    USatakeElement r;
    r.n = n;
    r.m = m;
    r.coeffs = add_maps(coeffs, o.coeffs, ident);
    return r;
}
USatakeElement USatakeElement::operator-(const USatakeElement& o) const {
    if (n != o.n) throw DomainError("USatakeElement: rank mismatch");
    USatakeElement r;
    r.n = n;
    r.m = m;
    r.coeffs = add_maps(coeffs, o.coeffs, negate);
    return r;
}
USatakeElement USatakeElement::operator*(const USatakeElement& o) const {
    if (n != o.n) throw DomainError("USatakeElement: rank mismatch");
    USatakeElement r;
    r.n = n;
    r.m = m;
    r.coeffs = mul_maps(coeffs, o.coeffs, m);
    return r;
}
USatakeElement USatakeElement::operator*(const QLaurent& s) const {
    USatakeElement r;
    r.n = n;
    r.m = m;
    r.coeffs = scale_map(coeffs, s);
    return r;
}

Rational evaluate(const GLSatakeElement& e, const std::vector<Rational>& x_point,
                  const Rational& qv) {
    if ((int)x_point.size() != e.n) throw DomainError("evaluate: dimension mismatch");
    for (const auto& v : x_point)
        if (v == 0) throw DomainError("evaluate: zero coordinate");
    // elementary symmetric values by the standard recurrence
    std::vector<Rational> es(e.n + 1, Rational(0));
    es[0] = 1;
    for (int i = 0; i < e.n; ++i)
        for (int j = std::min(i + 1, e.n); j >= 1; --j) es[j] += es[j - 1] * x_point[i];
    Rational total = 0;
    for (const auto& [d, c] : e.coeffs) {
        Rational t = c.evaluate(qv);
        for (int i = 0; i < e.n; ++i) {
            long k = d[i] >= 0 ? d[i] : -d[i];
            Rational base = d[i] >= 0 ? es[i + 1] : Rational(1) / es[i + 1];
            for (long j = 0; j < k; ++j) t *= base;
        }
        total += t;
    }
    return total;
}

Rational evaluate(const USatakeElement& e, const std::vector<Rational>& u_point,
                  const Rational& qv) {
    if ((int)u_point.size() != e.m) throw DomainError("evaluate: dimension mismatch");
    std::vector<Rational> y;
    for (const auto& u : u_point) {
        if (u == 0) throw DomainError("evaluate: zero coordinate");
        y.push_back(u + Rational(1) / u);
    }
    GLSatakeElement as_poly;
    as_poly.n = e.m;
    as_poly.coeffs = e.coeffs;
    if (e.m == 0) {
        Rational total = 0;
        for (const auto& [d, c] : e.coeffs) total += c.evaluate(qv);
        return total;
    }
    return evaluate(as_poly, y, qv);
}

UniPoly fold_to_x1(const MultiLaurent& p, const Rational& qv) {
    if (p.nvars != 1) throw DomainError("fold_to_x1: expects one variable");
    UniPoly out;
    for (const auto& [e, c] : p.terms) {
        int k = e[0];
        if (k < 0) continue;
        ExpVec mirror{-k};
        if (k > 0) {
            auto it = p.terms.find(mirror);
            if (it == p.terms.end() || !(it->second == c))
                throw NotInvariantError("fold_to_x1: not inversion-invariant");
        }
        Rational cv = c.evaluate(qv);
        if (k == 0) out = out + UniPoly::constant(cv);
        else out = out + inversion_fold_poly(k) * cv;
    }
    return out;
}

namespace {

long graded(const ExpVec& e) {
    long s = 0;
    for (int v : e) s += std::abs(v);
    return s;
}

std::string coeff_prefix(const QLaurent& c, bool leading, bool bare) {
    // renders "<sign><coef>*"; sign comes from the top coefficient
    if (bare) {
        // constant term: splice the coefficient's own rendering; the term
        // parser re-aggregates the bare q-terms
        std::string cs = c.str();
        if (leading) return cs;
        if (!cs.empty() && cs[0] == '-') return " - " + cs.substr(1);
        return " + " + cs;
    }
    bool neg = c.coeffs().rbegin()->second < 0;
    QLaurent cc = neg ? -c : c;
    std::string cs = cc.str();
    std::string op = leading ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (cc.coeffs().size() > 1) return op + "(" + cs + ")*";
    if (cs == "1") return op;
    return op + cs + "*";
}

} // namespace

std::string satake_terms_str(const std::map<ExpVec, QLaurent>& coeffs, int nvars) {
    if (coeffs.empty()) return "0";
    // canonical order: graded lexicographic, highest first
    std::vector<const std::pair<const ExpVec, QLaurent>*> rows;
    for (const auto& t : coeffs) rows.push_back(&t);
    std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) {
        long ga = graded(a->first), gb = graded(b->first);
        if (ga != gb) return ga > gb;
        return a->first > b->first;
    });
    std::string s;
    for (auto* row : rows) {
        const auto& [e, c] = *row;
        bool is_const = graded(e) == 0;
        s += coeff_prefix(c, s.empty(), is_const);
        bool first_var = true;
        for (int i = 0; i < nvars; ++i) {
            if (e[i] == 0) continue;
            if (!first_var) s += "*";
            first_var = false;
            s += "s" + std::to_string(i + 1);
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

std::string GLSatakeElement::str() const { return satake_terms_str(coeffs, n); }
std::string USatakeElement::str() const { return satake_terms_str(coeffs, m); }

std::map<ExpVec, QLaurent> parse_satake_terms(const std::string& text, int nvars) {
    std::map<ExpVec, QLaurent> out;
    size_t i = 0;
    auto skip = [&]() { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    auto fail = [&](const std::string& why) {
        return DomainError("parse_satake_terms: " + why + " in '" + text + "'");
    };
    skip();
    if (text.substr(i) == "0") return out;
    bool first = true;
    while (i < text.size()) {
        skip();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw fail("expected sign");
        }
        first = false;
        QLaurent coef(1);
        bool have_coef = false;
        if (text[i] == '(') {
            size_t depth = 1, j = i + 1;
            while (j < text.size() && depth) {
                if (text[j] == '(') ++depth;
                if (text[j] == ')') --depth;
                ++j;
            }
            if (depth) throw fail("unbalanced parentheses");
            coef = parse_qlaurent(text.substr(i + 1, j - i - 2));
            i = j;
            have_coef = true;
            skip();
            if (i < text.size() && text[i] == '*') { ++i; skip(); }
        } else if (std::isdigit((unsigned char)text[i]) || text[i] == 'q') {
            // coefficient region: digits, '/', q-powers and inner '*', up to a variable
            size_t j = i;
            while (j < text.size()) {
                char ch = text[j];
                if (std::isdigit((unsigned char)ch) || ch == '/' || ch == 'q' || ch == '^' ||
                    ch == '*' || (ch == '-' && j > i && text[j - 1] == '^')) {
                    ++j;
                    continue;
                }
                break;
            }
            size_t end = j;
            while (end > i && text[end - 1] == '*') --end;
            coef = parse_qlaurent(text.substr(i, end - i));
            i = end;
            have_coef = true;
            skip();
            if (i < text.size() && text[i] == '*') { ++i; skip(); }
        }
        ExpVec e(nvars, 0);
        bool have_var = false;
        while (i < text.size() && text[i] == 's') {
            ++i;
            size_t j = i;
            while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
            if (j == i) throw fail("bad variable");
            int idx = std::stoi(text.substr(i, j - i));
            if (idx < 1 || idx > nvars) throw fail("variable index out of range");
            i = j;
            int ex = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                j = i;
                if (j < text.size() && text[j] == '-') ++j;
                while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
                ex = std::stoi(text.substr(i, j - i));
                i = j;
            }
            e[idx - 1] += ex;
            have_var = true;
            skip();
            if (i < text.size() && text[i] == '*') { ++i; skip(); }
        }
        if (!have_coef && !have_var) throw fail("empty term");
        QLaurent signed_coef = sign == 1 ? coef : -coef;
        auto it = out.find(e);
        if (it == out.end()) out.emplace(e, signed_coef);
        else {
            it->second += signed_coef;
            if (it->second.is_zero()) out.erase(it);
        }
        skip();
    }
    return out;
}

GLSatakeElement parse_gl_satake(const std::string& text, int n) {
    GLSatakeElement r;
    r.n = n;
    r.coeffs = parse_satake_terms(text, n);
    for (const auto& [e, c] : r.coeffs)
        for (int i = 0; i + 1 < n; ++i)
            if (e[i] < 0) throw DomainError("parse_gl_satake: only s_n may carry negative powers");
    return r;
}

USatakeElement parse_u_satake(const std::string& text, int n) {
    USatakeElement r;
    r.n = n;
    r.m = n / 2;
    r.coeffs = parse_satake_terms(text, r.m);
    for (const auto& [e, c] : r.coeffs)
        for (int v : e)
            if (v < 0) throw DomainError("parse_u_satake: negative exponent");
    return r;
}

} // namespace heckeafl
