#include "heckeafl/lattice.hpp"

#include <algorithm>
#include <mutex>
#include <random>

#include "heckeafl/parallel.hpp"

namespace heckeafl {

namespace {

// ---------------------------------------------------------------------------
// Residue arithmetic in (Z/p^E)[delta]
// ---------------------------------------------------------------------------

struct ResidueRing {
    using Elem = OFPair;
    Int mod;
    long p;
    long eps;
    int E;

    ResidueRing(long p_, long eps_, int E_) : mod(pow_int(Int(p_), E_)), p(p_), eps(eps_), E(E_) {}

    OFPair from_pair(const OFPair& x) const { return reduce(x); }
    OFPair to_exact(const OFPair& x, const Int& m) const {
        return {mod_pos(x.a, m), mod_pos(x.b, m)};
    }
    static OFPair zero() { return {Int(0), Int(0)}; }
    static bool is_zero(const OFPair& x) { return x.a == 0 && x.b == 0; }

    OFPair reduce(const OFPair& x) const { return {mod_pos(x.a, mod), mod_pos(x.b, mod)}; }
    OFPair add(const OFPair& x, const OFPair& y) const {
        return {mod_pos(x.a + y.a, mod), mod_pos(x.b + y.b, mod)};
    }
    OFPair sub(const OFPair& x, const OFPair& y) const {
        return {mod_pos(x.a - y.a, mod), mod_pos(x.b - y.b, mod)};
    }
    OFPair mul(const OFPair& x, const OFPair& y) const {
        return {mod_pos(x.a * y.a + eps * x.b * y.b, mod), mod_pos(x.a * y.b + x.b * y.a, mod)};
    }
    OFPair conj(const OFPair& x) const { return {x.a, mod_pos(-x.b, mod)}; }

    /// min p-adic valuation of the two components; E when zero residue.
    int val(const OFPair& x) const {
        if (x.a == 0 && x.b == 0) return E;
        int v = E;
        if (x.a != 0) v = std::min<long>(v, vp_int(x.a, p));
        if (x.b != 0) v = std::min<long>(v, vp_int(x.b, p));
        return v;
    }

    /// Exact division of a residue by p^k (components must be divisible).
    OFPair div_pow(const OFPair& x, int k) const {
        Int pk = pow_int(Int(p), k);
        if (x.a % pk != 0 || x.b % pk != 0)
            throw PrecisionError("ResidueRing::div_pow: not divisible");
        return {x.a / pk, x.b / pk};
    }

    /// Inverse of a unit: conj(u) / norm(u).
    OFPair unit_inverse(const OFPair& u) const {
        Int n = mod_pos(u.a * u.a - eps * u.b * u.b, mod);
        Int ni = inv_mod(n, mod);
        return {mod_pos(u.a * ni, mod), mod_pos(-u.b * ni, mod)};
    }

    OFPair lift(const OFPair& x) const { return x; }
    Int modulus_int() const { return mod; }
};

/// int64 twin of ResidueRing for the hot path; valid when p^E < 2^62.
struct SmallRing {
    struct Elem {
        long long a, b;
    };
    long long mod;
    long p;
    long eps;
    int E;

    static bool fits(long p_, int E_) {
        long long m = 1;
        for (int i = 0; i < E_; ++i) {
            if (m > (3LL << 60) / p_) return false;
            m *= p_;
        }
        return true;
    }

    SmallRing(long p_, long eps_, int E_) : p(p_), eps(eps_), E(E_) {
        mod = 1;
        for (int i = 0; i < E_; ++i) mod *= p_;
    }

    static long long imod(long long x, long long m) {
        long long r = x % m;
        return r < 0 ? r + m : r;
    }
    long long mulm(long long x, long long y) const {
        return (long long)((__int128)x * y % mod);
    }

    Elem from_pair(const OFPair& x) const {
        return {(long long)mod_pos(x.a, Int(mod)).convert_to<long long>(),
                (long long)mod_pos(x.b, Int(mod)).convert_to<long long>()};
    }
    OFPair to_exact(const Elem& x, const Int& m) const {
        long long mm = m.convert_to<long long>();
        return {Int(imod(x.a, mm)), Int(imod(x.b, mm))};
    }
    static Elem zero() { return {0, 0}; }
    static bool is_zero(const Elem& x) { return x.a == 0 && x.b == 0; }

    Elem reduce(const Elem& x) const { return {imod(x.a, mod), imod(x.b, mod)}; }
    Elem add(const Elem& x, const Elem& y) const { return {imod(x.a + y.a, mod), imod(x.b + y.b, mod)}; }
    Elem sub(const Elem& x, const Elem& y) const { return {imod(x.a - y.a, mod), imod(x.b - y.b, mod)}; }
    Elem mul(const Elem& x, const Elem& y) const {
        __int128 a = (__int128)x.a * y.a + (__int128)eps * x.b * y.b;
        __int128 b = (__int128)x.a * y.b + (__int128)x.b * y.a;
        return {(long long)imod((long long)(a % mod), mod), (long long)imod((long long)(b % mod), mod)};
    }
    Elem conj(const Elem& x) const { return {x.a, imod(-x.b, mod)}; }

    int val(const Elem& x) const {
        if (x.a == 0 && x.b == 0) return E;
        int v = E;
        for (long long c : {x.a, x.b}) {
            if (c == 0) continue;
            int w = 0;
            while (c % p == 0) {
                c /= p;
                ++w;
            }
            v = std::min(v, w);
        }
        return v;
    }

    Elem div_pow(const Elem& x, int k) const {
        long long pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        if (x.a % pk != 0 || x.b % pk != 0)
            throw PrecisionError("SmallRing::div_pow: not divisible");
        return {x.a / pk, x.b / pk};
    }

    Elem unit_inverse(const Elem& u) const {
        long long n = imod((long long)(((__int128)u.a * u.a - (__int128)eps * u.b * u.b) % mod), mod);
        // extended euclid for n^{-1} mod `mod`
        long long r0 = mod, r1 = n, s0 = 0, s1 = 1;
        while (r1 != 0) {
            long long q = r0 / r1;
            long long r2 = r0 - q * r1, s2 = s0 - q * s1;
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
        }
        if (r0 != 1) throw PrecisionError("SmallRing::unit_inverse: not a unit");
        long long ni = imod(s0, mod);
        return {mulm(u.a, ni), imod(-mulm(u.b, ni), mod)};
    }

    OFPair lift(const Elem& x) const { return {Int(x.a), Int(x.b)}; }
    Int modulus_int() const { return Int(mod); }
};

OFPair of_zero() { return {Int(0), Int(0)}; }
OFPair of_conj(const OFPair& x) { return {x.a, -x.b}; }
OFPair of_add(const OFPair& x, const OFPair& y) { return {x.a + y.a, x.b + y.b}; }
OFPair of_sub(const OFPair& x, const OFPair& y) { return {x.a - y.a, x.b - y.b}; }
OFPair of_neg(const OFPair& x) { return {-x.a, -x.b}; }
OFPair of_mul(const OFPair& x, const OFPair& y, long eps) {
    return {x.a * y.a + eps * x.b * y.b, x.a * y.b + x.b * y.a};
}
OFPair of_scale_pow(const OFPair& x, const Int& pk) { return {x.a * pk, x.b * pk}; }

/// Determinant of a k x k matrix of exact integer pairs (Laplace expansion;
/// k <= 6 here).
OFPair of_det(const std::vector<OFPair>& m, int k, long eps) {
    if (k == 0) return {Int(1), Int(0)};
    if (k == 1) return m[0];
    if (k == 2) return of_sub(of_mul(m[0], m[3], eps), of_mul(m[1], m[2], eps));
    OFPair total = of_zero();
    std::vector<OFPair> minor((size_t)(k - 1) * (k - 1));
    for (int j = 0; j < k; ++j) {
        for (int r = 1; r < k; ++r) {
            int cc = 0;
            for (int c = 0; c < k; ++c) {
                if (c == j) continue;
                minor[(size_t)(r - 1) * (k - 1) + cc++] = m[(size_t)r * k + c];
            }
        }
        OFPair term = of_mul(m[j], of_det(minor, k - 1, eps), eps);
        total = (j % 2 == 0) ? of_add(total, term) : of_sub(total, term);
    }
    return total;
}

/// Adjugate: adj(A)[i][j] = (-1)^{i+j} det(A with row j, column i removed).
std::vector<OFPair> of_adjugate(const std::vector<OFPair>& m, int n, long eps) {
    std::vector<OFPair> adj((size_t)n * n);
    std::vector<OFPair> minor((size_t)(n - 1) * (n - 1));
    if (n == 1) {
        adj[0] = {Int(1), Int(0)};
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int rr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor[(size_t)rr * (n - 1) + cc++] = m[(size_t)r * n + c];
                }
                ++rr;
            }
            OFPair d = of_det(minor, n - 1, eps);
            adj[(size_t)i * n + j] = ((i + j) % 2 == 0) ? d : of_neg(d);
        }
    return adj;
}

// ---------------------------------------------------------------------------
// Residue field F_{q^2} = F_p(delta)
// ---------------------------------------------------------------------------

struct Fq2 {
    long a = 0, b = 0;
    bool operator==(const Fq2& o) const { return a == o.a && b == o.b; }
};

struct Fq2Ctx {
    long p, eps;
    Fq2 add(Fq2 x, Fq2 y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
    Fq2 sub(Fq2 x, Fq2 y) const { return {((x.a - y.a) % p + p) % p, ((x.b - y.b) % p + p) % p}; }
    Fq2 mul(Fq2 x, Fq2 y) const {
        return {((x.a * y.a + eps * x.b * y.b) % p + p) % p, (x.a * y.b + x.b * y.a) % p};
    }
    Fq2 neg(Fq2 x) const { return {(p - x.a) % p, (p - x.b) % p}; }
    Fq2 conj(Fq2 x) const { return {x.a, (p - x.b) % p}; }  // Frobenius x -> x^q
    bool is_zero(Fq2 x) const { return x.a == 0 && x.b == 0; }
    Fq2 inv(Fq2 x) const {
        long n = ((x.a * x.a - eps * x.b * x.b) % p + p) % p;
        long ni = (long)(Int(inv_mod(Int(n), Int(p))).convert_to<long>());
        return {(x.a * ni) % p, ((p - x.b) * ni) % p};
    }
    Fq2 from_index(long k) const { return {k % p, k / p}; }
    long to_index(Fq2 x) const { return x.a + p * x.b; }
};

/// All k-dimensional subspaces of F_{q^2}^d as row-reduced echelon bases,
/// enumerated in lexicographic order of (pivot columns, free entries).
/// The row buffer is reused across candidates.
void enum_subspaces(const Fq2Ctx& F, int d, int k,
                    const std::function<void(const std::vector<std::vector<Fq2>>&)>& cb) {
    if (k < 0 || k > d) return;
    if (k == 0) {
        cb({});
        return;
    }
    long q2 = F.p * F.p;
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    std::vector<std::vector<Fq2>> rows(k, std::vector<Fq2>(d));
    while (true) {
        // free positions: (row r, col c) with c > piv[r] and c not a pivot
        std::vector<std::pair<int, int>> free_pos;
        std::vector<char> is_piv(d, 0);
        for (int c : piv) is_piv[c] = 1;
        for (int r = 0; r < k; ++r)
            for (int c = piv[r] + 1; c < d; ++c)
                if (!is_piv[c]) free_pos.emplace_back(r, c);
        for (int r = 0; r < k; ++r) std::fill(rows[r].begin(), rows[r].end(), Fq2{0, 0});
        for (int r = 0; r < k; ++r) rows[r][piv[r]] = Fq2{1, 0};
        std::vector<long> odo(free_pos.size(), 0);
        while (true) {
            cb(rows);
            size_t f = 0;
            for (; f < odo.size(); ++f) {
                if (++odo[f] < q2) {
                    rows[free_pos[f].first][free_pos[f].second] = F.from_index(odo[f]);
                    break;
                }
                odo[f] = 0;
                rows[free_pos[f].first][free_pos[f].second] = Fq2{0, 0};
            }
            if (f == odo.size()) break;
        }
        int j = k - 1;
        while (j >= 0 && piv[j] == d - k + j) --j;
        if (j < 0) break;
        ++piv[j];
        for (int i = j + 1; i < k; ++i) piv[i] = piv[i - 1] + 1;
    }
}

uint64_t fnv64(const std::string& s, uint64_t h) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

// ---------------------------------------------------------------------------
// VertexLattice basics
// ---------------------------------------------------------------------------

std::string VertexLattice::key() const {
    std::string s = std::to_string(scale_) + "|";
    for (const auto& e : T_) {
        s += e.a.str();
        s += ",";
        s += e.b.str();
        s += ";";
    }
    return s;
}

std::pair<uint64_t, uint64_t> VertexLattice::hash128() const {
    std::string k = key();
    return {fnv64(k, 14695981039346656037ULL), fnv64(k, 0x9e3779b97f4a7c15ULL)};
}

std::vector<FieldElement> VertexLattice::basis_matrix() const {
    std::vector<FieldElement> out;
    out.reserve(T_.size());
    Rational ps = 1;
    Int pk = pow_int(Int(space_->cfg.p), std::abs(scale_));
    if (scale_ >= 0) ps = Rational(1, pk);
    else ps = Rational(pk);
    for (const auto& e : T_)
        out.emplace_back(Rational(e.a) * ps, Rational(e.b) * ps, space_->cfg);
    return out;
}

// ---------------------------------------------------------------------------
// Canonicalization
// ---------------------------------------------------------------------------

namespace {

struct RawHNF {
    std::vector<OFPair> T;  // exact canonical entries, row-major
    int min_val = 0;        // common p-power already stripped from T
};

/// One canonicalization attempt at working precision E; nullopt asks the
/// caller to retry with a larger E.
template <class Ring>
std::optional<RawHNF> hnf_pass(const Ring& R, int n, long p,
                               const std::vector<std::vector<OFPair>>& cols) {
    using Elem = typename Ring::Elem;
    const int E = R.E;
    std::vector<std::vector<Elem>> M;
    M.reserve(cols.size());
    for (const auto& c : cols) {
        std::vector<Elem> col(n);
        for (int i = 0; i < n; ++i) col[i] = R.from_pair(c[i]);
        M.push_back(std::move(col));
    }
    int valid = E;
    std::vector<int> piv_val(n, 0);

    // Phase 1: triangularize (column j ends up supported on rows >= j with
    // pivot p^{a_j} at row j).
    for (int i = 0; i < n; ++i) {
        int best = -1, bestv = valid;
        for (int c = i; c < (int)M.size(); ++c) {
            int v = R.val(M[c][i]);
            if (v < bestv) {
                bestv = v;
                best = c;
            }
        }
        if (best < 0) return std::nullopt;
        std::swap(M[i], M[best]);
        int a = bestv;
        piv_val[i] = a;
        Elem u = R.div_pow(M[i][i], a);
        Elem uinv = R.unit_inverse(u);
        for (int r = 0; r < n; ++r) M[i][r] = R.mul(M[i][r], uinv);
        for (int c = i + 1; c < (int)M.size(); ++c) {
            if (R.val(M[c][i]) >= valid) { M[c][i] = Ring::zero(); continue; }
            Elem f = R.div_pow(M[c][i], a);
            for (int r = 0; r < n; ++r) M[c][r] = R.sub(M[c][r], R.mul(f, M[i][r]));
        }
        valid -= a;
    }

    // Phase 2: reduce the entries below each pivot to canonical residues
    // (entry at row r > j of column j is reduced mod p^{a_r} via column r).
    int total_a = 0;
    for (int i = 0; i < n; ++i) total_a += piv_val[i];
    if (valid <= total_a + *std::max_element(piv_val.begin(), piv_val.end()) + 2)
        return std::nullopt;
    for (int j = 0; j < n; ++j)
        for (int r = j + 1; r < n; ++r) {
            Int par = pow_int(Int(p), piv_val[r]);
            OFPair canon = R.to_exact(M[j][r], par);
            Elem diff = R.sub(M[j][r], R.from_pair(canon));
            if (R.val(diff) < valid) {
                Elem f = R.div_pow(diff, piv_val[r]);
                for (int rr = 0; rr < n; ++rr)
                    M[j][rr] = R.sub(M[j][rr], R.mul(f, M[r][rr]));
            }
            M[j][r] = R.from_pair(canon);
        }

    RawHNF out;
    out.T.assign((size_t)n * n, of_zero());
    int minv = E;
    for (int j = 0; j < n; ++j) {
        out.T[(size_t)j * n + j] = {pow_int(Int(p), piv_val[j]), Int(0)};
        minv = std::min(minv, piv_val[j]);
        for (int r = j + 1; r < n; ++r) {
            Int par = pow_int(Int(p), piv_val[r]);
            OFPair e = R.to_exact(M[j][r], par);
            out.T[(size_t)r * n + j] = e;
            if (!(e.a == 0 && e.b == 0)) {
                if (e.a != 0) minv = std::min<long>(minv, vp_int(e.a, p));
                if (e.b != 0) minv = std::min<long>(minv, vp_int(e.b, p));
            }
        }
    }
    // strip the common p-power so the canonical matrix is primitive
    if (minv > 0) {
        Int pg = pow_int(Int(p), minv);
        for (auto& e : out.T) {
            e.a /= pg;
            e.b /= pg;
        }
    }
    out.min_val = minv;
    return out;
}

} // namespace

VertexLattice LatticeOps::from_columns(int scale, const std::vector<std::vector<OFPair>>& cols,
                                       int level) const {
    tick();
    const int n = space_->n;
    const long p = space_->cfg.p;
    const long eps = space_->cfg.epsilon;
    if ((int)cols.size() < n) throw DomainError("from_columns: too few columns");
    for (const auto& c : cols)
        if ((int)c.size() != n) throw DomainError("from_columns: bad column length");

    // initial guess covers the typical pivot-sum; the retry loop doubles on
    // the rare precision shortfall
    for (int E = std::max(8, 2 * n * (std::max(scale, 0) + 1) + 2 * level + 12);; E *= 2) {
        std::optional<RawHNF> raw;
        if (SmallRing::fits(p, E)) {
            SmallRing R(p, eps, E);
            raw = hnf_pass(R, n, p, cols);
        } else {
            ResidueRing R(p, eps, E);
            raw = hnf_pass(R, n, p, cols);
        }
        if (!raw) continue;
        VertexLattice L;
        L.n_ = n;
        L.space_ = space_;
        L.T_ = std::move(raw->T);
        L.scale_ = scale - raw->min_val;
        L.level_ = std::max({level, L.scale_ > 0 ? L.scale_ : 0, 0});
        return L;
    }
}

VertexLattice LatticeOps::standard_selfdual() const {
    const int n = space_->n;
    std::vector<std::vector<OFPair>> cols(n, std::vector<OFPair>(n, of_zero()));
    for (int i = 0; i < n; ++i) cols[i][i] = {Int(1), Int(0)};
    return from_columns(0, cols, 0);
}

VertexLattice LatticeOps::standard_chain(int t) const {
    const int n = space_->n;
    if (t < 0 || t % 2 != 0 || t > n) throw DomainError("standard_chain: bad type");
    std::vector<std::vector<OFPair>> cols(n, std::vector<OFPair>(n, of_zero()));
    for (int i = 0; i < n; ++i)
        cols[i][i] = {i < t / 2 ? Int(space_->cfg.p) : Int(1), Int(0)};
    return from_columns(0, cols, 1);
}

// ---------------------------------------------------------------------------
// Dual, sum, intersection
// ---------------------------------------------------------------------------

namespace {
int pivot_val_sum(const VertexLattice& L, long p) {
    int s = 0;
    for (int i = 0; i < L.n(); ++i) s += (int)vp_int(L.entry(i, i).a, Int(p));
    return s;
}
} // namespace

VertexLattice LatticeOps::dual(const VertexLattice& L) const {
    const int n = space_->n;
    const long p = space_->cfg.p;
    const long eps = space_->cfg.epsilon;
    // basis B = p^{-s} T; dual basis J * conj(B^{-1})^T = p^{s - sum_a} J conj(adj T)^T
    std::vector<OFPair> adj = of_adjugate(L.matrix(), n, eps);
    std::vector<std::vector<OFPair>> cols(n, std::vector<OFPair>(n));
    // column j of J*conj(adj)^T: entry i = conj(adj[j][n-1-i])
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            cols[j][i] = of_conj(adj[(size_t)j * n + (n - 1 - i)]);
    int sum_a = pivot_val_sum(L, p);
    return from_columns(sum_a - L.scale(), cols, L.level());
}

VertexLattice LatticeOps::sum(const VertexLattice& A, const VertexLattice& B) const {
    const int n = space_->n;
    const long p = space_->cfg.p;
    int s = std::max(A.scale(), B.scale());
    Int fa = pow_int(Int(p), s - A.scale()), fb = pow_int(Int(p), s - B.scale());
    std::vector<std::vector<OFPair>> cols;
    for (int j = 0; j < n; ++j) {
        std::vector<OFPair> col(n);
        for (int i = 0; i < n; ++i) col[i] = of_scale_pow(A.entry(i, j), fa);
        cols.push_back(std::move(col));
    }
    for (int j = 0; j < n; ++j) {
        std::vector<OFPair> col(n);
        for (int i = 0; i < n; ++i) col[i] = of_scale_pow(B.entry(i, j), fb);
        cols.push_back(std::move(col));
    }
    return from_columns(s, cols, std::max(A.level(), B.level()));
}

VertexLattice LatticeOps::intersect(const VertexLattice& A, const VertexLattice& B) const {
    return dual(sum(dual(A), dual(B)));
}

// ---------------------------------------------------------------------------
// Smith form over the local ring (valuations, optionally adapted bases)
// ---------------------------------------------------------------------------

namespace {

/// Smith valuations of C = p^{-cexp} * Cmat (must be integral): returns the
/// divisor valuations in non-decreasing order. If acc != nullptr it holds
/// columns of an outer basis and is updated so that its columns become
/// adapted to the divisor decomposition (acc <- acc * R^{-1} for the row
/// operations R applied); vals[k] matches adapted column k.
template <class Ring>
std::vector<int> smith_impl(const Ring& R, const std::vector<OFPair>& CmatExact, int n,
                            int cexp, std::vector<std::vector<OFPair>>* acc, long eps) {
    using Elem = typename Ring::Elem;
    std::vector<Elem> Cmat(CmatExact.size());
    for (size_t i = 0; i < CmatExact.size(); ++i) Cmat[i] = R.from_pair(CmatExact[i]);
    Int accmod = R.modulus_int();
    auto acc_reduce = [&](const OFPair& x) { return OFPair{mod_pos(x.a, accmod), mod_pos(x.b, accmod)}; };
    int valid = R.E;
    std::vector<int> vals;
    auto at = [&](int i, int j) -> Elem& { return Cmat[(size_t)i * n + j]; };
    for (int k = 0; k < n; ++k) {
        int bi = -1, bj = -1, bv = valid;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                int v = R.val(at(i, j));
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) throw PrecisionError("smith: rank not resolved");
        if (bi != k) {
            for (int j = 0; j < n; ++j) std::swap(at(bi, j), at(k, j));
            if (acc) std::swap((*acc)[bi], (*acc)[k]);
        }
        if (bj != k)
            for (int i = 0; i < n; ++i) std::swap(at(i, bj), at(i, k));
        // normalize pivot to p^bv
        Elem u = R.div_pow(at(k, k), bv);
        Elem uinv = R.unit_inverse(u);
        for (int j = 0; j < n; ++j) at(k, j) = R.mul(at(k, j), uinv);
        if (acc) {
            // row k scaled by uinv: outer column k picks up the lift of u
            OFPair ul = R.lift(u);
            for (int r = 0; r < (int)(*acc)[k].size(); ++r)
                (*acc)[k][r] = acc_reduce(of_mul((*acc)[k][r], ul, eps));
        }
        // clear column k below and row k to the right
        for (int i = k + 1; i < n; ++i) {
            if (R.val(at(i, k)) >= valid) { at(i, k) = Ring::zero(); continue; }
            Elem f = R.div_pow(at(i, k), bv);
            for (int j = 0; j < n; ++j) at(i, j) = R.sub(at(i, j), R.mul(f, at(k, j)));
            if (acc) {
                // row_i -= f*row_k  =>  outer col_k += f*col_i
                OFPair fl = R.lift(f);
                for (int r = 0; r < (int)(*acc)[k].size(); ++r)
                    (*acc)[k][r] = acc_reduce(of_add((*acc)[k][r], of_mul(fl, (*acc)[i][r], eps)));
            }
        }
        for (int j = k + 1; j < n; ++j) {
            if (R.val(at(k, j)) >= valid) { at(k, j) = Ring::zero(); continue; }
            Elem f = R.div_pow(at(k, j), bv);
            for (int i = 0; i < n; ++i) at(i, j) = R.sub(at(i, j), R.mul(f, at(i, k)));
        }
        valid -= bv;
        if (valid <= 2) throw PrecisionError("smith: precision exhausted");
        vals.push_back(bv - cexp);
    }
    return vals;
}

std::vector<int> smith_valuations(long p, long eps, int E, const std::vector<OFPair>& Cmat,
                                  int n, int cexp, std::vector<std::vector<OFPair>>* acc) {
    if (SmallRing::fits(p, E)) {
        SmallRing R(p, eps, E);
        return smith_impl(R, Cmat, n, cexp, acc, eps);
    }
    ResidueRing R(p, eps, E);
    return smith_impl(R, Cmat, n, cexp, acc, eps);
}

} // namespace

namespace {

/// Elementary divisor valuations of C = B_outer^{-1} p^{extra} B_inner.
std::vector<int> transition_valuations(const HermSpace& space, const VertexLattice& outer,
                                       const VertexLattice& inner, int extra) {
    const int n = space.n;
    const long p = space.cfg.p;
    const long eps = space.cfg.epsilon;
    std::vector<OFPair> adjO = of_adjugate(outer.matrix(), n, eps);
    std::vector<OFPair> Cmat((size_t)n * n, of_zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            OFPair s = of_zero();
            for (int k = 0; k < n; ++k)
                s = of_add(s, of_mul(adjO[(size_t)i * n + k], inner.entry(k, j), eps));
            Cmat[(size_t)i * n + j] = s;
        }
    int sum_a = 0;
    for (int i = 0; i < n; ++i) sum_a += (int)vp_int(outer.entry(i, i).a, Int(p));
    int cexp = sum_a + inner.scale() - outer.scale() - extra;
    int lvl = std::max(outer.level(), inner.level()) + std::abs(extra);
    for (int E = std::max(12, 2 * n + 4 * lvl + std::abs(cexp) + 12);; E *= 2) {
        try {
            return smith_valuations(p, eps, E, Cmat, n, cexp, nullptr);
        } catch (const PrecisionError&) {
            if (E > 4096) throw;
        }
    }
}

} // namespace

struct LatticeOps::Adapted {
    std::vector<int> divisors;                 // sorted ascending
    std::vector<std::vector<OFPair>> acc_cols; // adapted basis columns (exact), scale acc_scale
    int acc_scale = 0;
};

/// Adapted basis of `outer` relative to p^{extra} * inner (inner a sublattice
/// after scaling): columns of `outer` are transformed so that
/// p^{extra}*inner = span(acc_col_i * p^{divisor_i}).
LatticeOps::Adapted LatticeOps::adapt(const VertexLattice& outer, const VertexLattice& inner,
                                      int inner_extra_p) const {
    const int n = space_->n;
    const long p = space_->cfg.p;
    const long eps = space_->cfg.epsilon;
    std::vector<OFPair> adjO = of_adjugate(outer.matrix(), n, eps);
    // Cmat = adj(T_O) * T_I ; C = p^{-cexp} Cmat
    std::vector<OFPair> Cmat((size_t)n * n, of_zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            OFPair sum_ = of_zero();
            for (int k = 0; k < n; ++k)
                sum_ = of_add(sum_, of_mul(adjO[(size_t)i * n + k], inner.entry(k, j), eps));
            Cmat[(size_t)i * n + j] = sum_;
        }
    int cexp = pivot_val_sum(outer, p) + inner.scale() - outer.scale() - inner_extra_p;
    Adapted A;
    A.acc_scale = outer.scale();
    A.acc_cols.assign(n, std::vector<OFPair>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) A.acc_cols[j][i] = outer.entry(i, j);
    int lvl = std::max(outer.level(), inner.level()) + std::abs(inner_extra_p);
    std::vector<std::vector<OFPair>> acc0 = A.acc_cols;
    for (int E = std::max(12, 2 * n + 4 * lvl + std::abs(cexp) + 12);; E *= 2) {
        A.acc_cols = acc0;
        try {
            A.divisors = smith_valuations(p, eps, E, Cmat, n, cexp, &A.acc_cols);
            break;
        } catch (const PrecisionError&) {
            if (E > 4096) throw;
        }
    }
    for (int v : A.divisors)
        if (v < 0) throw DomainError("adapt: inner lattice is not contained in outer");
    return A;
}

bool LatticeOps::is_vertex(const VertexLattice& L) const {
    VertexLattice D = dual(L);
    for (int v : transition_valuations(*space_, D, L, 0))
        if (v < 0 || v > 1) return false;
    return true;
}

int LatticeOps::type_of(const VertexLattice& L) const {
    VertexLattice D = dual(L);
    int t = 0;
    for (int v : transition_valuations(*space_, D, L, 0)) {
        if (v < 0 || v > 1) throw DomainError("type_of: not a vertex lattice");
        t += v;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Residue space machinery and enumerations
// ---------------------------------------------------------------------------

namespace {

/// Value of an exact integer-pair combination divided by p^k, reduced mod p.
/// Requires exact divisibility (i.e. the underlying element is integral).
Fq2 reduce_scaled(const OFPair& H, int k, long p) {
    Int pk = pow_int(Int(p), std::abs(k));
    Int a = H.a, b = H.b;
    if (k > 0) {
        if (a % pk != 0 || b % pk != 0) throw DomainError("reduce_scaled: not integral");
        a /= pk;
        b /= pk;
    } else if (k < 0) {
        a *= pk;
        b *= pk;
    }
    return {(long)mod_pos(a, Int(p)).convert_to<long>(),
            (long)mod_pos(b, Int(p)).convert_to<long>()};
}

/// h(col_i, col_j) numerators for the antidiagonal form: col_i^T J conj(col_j).
OFPair herm_pair(const std::vector<OFPair>& ci, const std::vector<OFPair>& cj, int n, long eps) {
    OFPair s = of_zero();
    for (int r = 0; r < n; ++r)
        s = of_add(s, of_mul(ci[r], of_conj(cj[(size_t)n - 1 - r]), eps));
    return s;
}

std::vector<std::vector<Fq2>> null_space(const Fq2Ctx& F, std::vector<std::vector<Fq2>> A,
                                         int ncols) {
    // Gaussian elimination; returns a basis of the right kernel.
    int nrows = (int)A.size();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int sel = -1;
        for (int i = r; i < nrows; ++i)
            if (!F.is_zero(A[i][c])) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(A[sel], A[r]);
        Fq2 inv = F.inv(A[r][c]);
        for (int j = 0; j < ncols; ++j) A[r][j] = F.mul(A[r][j], inv);
        for (int i = 0; i < nrows; ++i) {
            if (i == r || F.is_zero(A[i][c])) continue;
            Fq2 f = A[i][c];
            for (int j = 0; j < ncols; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<char> is_piv(ncols, 0);
    for (int c : pivot_col) is_piv[c] = 1;
    std::vector<std::vector<Fq2>> basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_piv[c]) continue;
        std::vector<Fq2> v(ncols, Fq2{0, 0});
        v[c] = Fq2{1, 0};
        for (int i = 0; i < (int)pivot_col.size(); ++i)
            v[pivot_col[i]] = F.neg(A[i][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::vector<VertexLattice> LatticeOps::enum_vertex_in(const VertexLattice& selfdual,
                                                      int t) const {
    const int n = space_->n;
    const long p = space_->cfg.p;
    const long eps = space_->cfg.epsilon;
    if (t == 0) return {selfdual};
    if (t < 0 || t % 2 != 0 || t > n) throw DomainError("enum_vertex_in: bad type");
    Fq2Ctx F{p, eps};
    // Gram of the residue space Lambda/p*Lambda
    std::vector<std::vector<OFPair>> cols(n, std::vector<OFPair>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) cols[j][i] = selfdual.entry(i, j);
    std::vector<std::vector<Fq2>> G(n, std::vector<Fq2>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            G[i][j] = reduce_scaled(herm_pair(cols[i], cols[j], n, eps), 2 * selfdual.scale(), p);

    std::vector<VertexLattice> out;
    const int k = t / 2;
    enum_subspaces(F, n, k, [&](const std::vector<std::vector<Fq2>>& rows) {
        // isotropy of W
        for (int a = 0; a < k; ++a)
            for (int b = a; b < k; ++b) {
                Fq2 s{0, 0};
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        s = F.add(s, F.mul(rows[a][i], F.mul(G[i][j], F.conj(rows[b][j]))));
                if (!F.is_zero(s)) return;
            }
        // U = W^perp: kernel of u -> (sum_j u_j G[j][l-th w])
        std::vector<std::vector<Fq2>> A(k, std::vector<Fq2>(n));
        for (int l = 0; l < k; ++l)
            for (int j = 0; j < n; ++j) {
                Fq2 s{0, 0};
                for (int c = 0; c < n; ++c) s = F.add(s, F.mul(G[j][c], F.conj(rows[l][c])));
                A[l][j] = s;
            }
        auto U = null_space(F, A, n);
        // M = preimage of U: columns T*lift(u) plus p*T
        std::vector<std::vector<OFPair>> mc;
        for (const auto& u : U) {
            std::vector<OFPair> col(n, of_zero());
            for (int j = 0; j < n; ++j) {
                if (u[j].a == 0 && u[j].b == 0) continue;
                OFPair lift{Int(u[j].a), Int(u[j].b)};
                for (int i = 0; i < n; ++i)
                    col[i] = of_add(col[i], of_mul(selfdual.entry(i, j), lift, eps));
            }
            mc.push_back(std::move(col));
        }
        for (int j = 0; j < n; ++j) {
            std::vector<OFPair> col(n);
            for (int i = 0; i < n; ++i) col[i] = of_scale_pow(selfdual.entry(i, j), Int(p));
            mc.push_back(std::move(col));
        }
        out.push_back(from_columns(selfdual.scale(), mc, selfdual.level() + 1));
    });
    return out;
}

std::vector<VertexLattice> LatticeOps::enum_selfdual_over(const VertexLattice& M) const {
    const int n = space_->n;
    const long p = space_->cfg.p;
    const long eps = space_->cfg.epsilon;
    VertexLattice D = dual(M);
    Adapted A = adapt(D, M, 0);
    int t = 0;
    for (int v : A.divisors) {
        if (v < 0 || v > 1) throw DomainError("enum_selfdual_over: input is not a vertex lattice");
        t += v;
    }
    if (t == 0) return {M};
    Fq2Ctx F{p, eps};
    // quotient D/M is spanned by the adapted columns with divisor 1
    std::vector<int> qidx;
    for (int i = 0; i < n; ++i)
        if (A.divisors[i] == 1) qidx.push_back(i);
    // form on the quotient: p * h(d_a, d_b) mod p
    std::vector<std::vector<Fq2>> G(t, std::vector<Fq2>(t));
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            G[a][b] = reduce_scaled(herm_pair(A.acc_cols[qidx[a]], A.acc_cols[qidx[b]], n, eps),
                                    2 * A.acc_scale - 1, p);
    std::vector<VertexLattice> out;
    int halft = t / 2;
    int s_star = std::max(M.scale(), A.acc_scale);
    Int fm = pow_int(Int(p), s_star - M.scale());
    Int fd = pow_int(Int(p), s_star - A.acc_scale);
    enum_subspaces(F, t, halft, [&](const std::vector<std::vector<Fq2>>& rows) {
        for (int a = 0; a < halft; ++a)
            for (int b = a; b < halft; ++b) {
                Fq2 s{0, 0};
                for (int i = 0; i < t; ++i)
                    for (int j = 0; j < t; ++j)
                        s = F.add(s, F.mul(rows[a][i], F.mul(G[i][j], F.conj(rows[b][j]))));
                if (!F.is_zero(s)) return;
            }
        std::vector<std::vector<OFPair>> cols;
        for (int j = 0; j < n; ++j) {
            std::vector<OFPair> col(n);
            for (int i = 0; i < n; ++i) col[i] = of_scale_pow(M.entry(i, j), fm);
            cols.push_back(std::move(col));
        }
        for (const auto& w : rows) {
            std::vector<OFPair> col(n, of_zero());
            for (int l = 0; l < t; ++l) {
                if (w[l].a == 0 && w[l].b == 0) continue;
                OFPair lift{Int(w[l].a), Int(w[l].b)};
                for (int i = 0; i < n; ++i)
                    col[i] = of_add(col[i], of_mul(A.acc_cols[qidx[l]][i], lift, eps));
            }
            for (int i = 0; i < n; ++i) col[i] = of_scale_pow(col[i], fd);
            cols.push_back(std::move(col));
        }
        out.push_back(from_columns(s_star, cols, std::max(M.level(), D.level())));
    });
    return out;
}

std::vector<VertexLattice> LatticeOps::vertex_sublattices_of_type(const VertexLattice& L,
                                                                  int t) const {
    const int n = space_->n;
    const long p = space_->cfg.p;
    const long eps = space_->cfg.epsilon;
    int tprime = type_of(L);
    if (t < tprime || (t - tprime) % 2 != 0 || t % 2 != 0 || t > n)
        return {};
    if (t == tprime) return {L};
    VertexLattice D = dual(L);
    Adapted A = adapt(L, D, 1);  // inner = p * dual(L)
    // quotient L / p*dual(L) spanned by columns with divisor 1
    std::vector<int> qidx;
    for (int i = 0; i < n; ++i) {
        if (A.divisors[i] < 0 || A.divisors[i] > 1)
            throw DomainError("vertex_sublattices_of_type: not a vertex lattice");
        if (A.divisors[i] == 1) qidx.push_back(i);
    }
    int d = (int)qidx.size();  // = n - t'
    int kdim = n - t + (t - tprime) / 2;
    if (kdim < 0 || kdim > d) return {};
    Fq2Ctx F{p, eps};
    int s_star = std::max(A.acc_scale, D.scale() - 1);
    Int fl = pow_int(Int(p), s_star - A.acc_scale);
    Int fd = pow_int(Int(p), s_star - (D.scale() - 1));
    std::vector<VertexLattice> out;
    enum_subspaces(F, d, kdim, [&](const std::vector<std::vector<Fq2>>& rows) {
        std::vector<std::vector<OFPair>> cols;
        // p * dual(L) columns
        for (int j = 0; j < n; ++j) {
            std::vector<OFPair> col(n);
            for (int i = 0; i < n; ++i) col[i] = of_scale_pow(D.entry(i, j), fd);
            cols.push_back(std::move(col));
        }
        for (const auto& w : rows) {
            std::vector<OFPair> col(n, of_zero());
            for (int l = 0; l < d; ++l) {
                if (w[l].a == 0 && w[l].b == 0) continue;
                OFPair lift{Int(w[l].a), Int(w[l].b)};
                for (int i = 0; i < n; ++i)
                    col[i] = of_add(col[i], of_mul(A.acc_cols[qidx[l]][i], lift, eps));
            }
            for (int i = 0; i < n; ++i) col[i] = of_scale_pow(col[i], fl);
            cols.push_back(std::move(col));
        }
        VertexLattice cand = from_columns(s_star, cols, L.level() + 1);
        try {
            if (type_of(cand) == t) out.push_back(std::move(cand));
        } catch (const DomainError&) {
            // not a vertex lattice: skip
        }
    });
    return out;
}

// ---------------------------------------------------------------------------
// Counts, correspondences, commutativity
// ---------------------------------------------------------------------------

VertexLattice LatticeOps::random_selfdual(std::uint64_t seed, int steps) const {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    VertexLattice L = standard_selfdual();
    int t = space_->n >= 2 ? 2 : 0;
    if (t == 0) return L;
    for (int s = 0; s < steps; ++s) {
        auto Ms = enum_vertex_in(L, t);
        const VertexLattice& M = Ms[rng() % Ms.size()];
        auto ups = enum_selfdual_over(M);
        L = ups[rng() % ups.size()];
    }
    return L;
}

long LatticeOps::m_count(int tprime, int t, std::uint64_t seed, int base_points) const {
    if (tprime > t) throw DomainError("m_count: requires t' <= t");
    long count = -1;
    for (int b = 0; b < base_points; ++b) {
        VertexLattice sd = random_selfdual(seed + 17 * b + 1, 2);
        VertexLattice base = sd;
        if (tprime > 0) {
            auto cands = enum_vertex_in(sd, tprime);
            std::mt19937_64 rng(seed + 31 * b + 5);
            base = cands[rng() % cands.size()];
        }
        long c = (long)vertex_sublattices_of_type(base, t).size();
        if (count < 0) count = c;
        else if (count != c)
            throw DomainError("m_count: count not constant over base points");
    }
    return count;
}

long m_count_cached(int n, int tprime, int t, long q, std::uint64_t seed) {
    static std::map<std::tuple<int, int, int, long>, long> cache;
    static std::mutex mu;
    std::tuple<int, int, int, long> k{n, tprime, t, q};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    HermSpace space(n, PrimeConfig::make(q));
    Budget budget;
    LatticeOps ops(space, &budget);
    long v = ops.m_count(tprime, t, seed);
    std::lock_guard<std::mutex> lock(mu);
    cache[k] = v;
    return v;
}

UniPoly m_count_interpolated(int n, int tprime, int t, std::uint64_t seed) {
    int d = (t - tprime) / 2;
    // Grassmannian bound on the point count of the fiber; the extra prime
    // below still cross-checks the interpolated polynomial.
    int deg_bound = std::max(d * (n - d), 2 * d * (n - tprime - d));
    static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29};
    int need = deg_bound + 1;
    if (need + 1 > (int)(sizeof(primes) / sizeof(primes[0])))
        throw BudgetExceededError("m_count_interpolated: degree bound too large");
    // Lagrange interpolation through `need` primes
    std::vector<Rational> xs, ys;
    for (int i = 0; i < need; ++i) {
        xs.emplace_back(primes[i]);
        ys.emplace_back(m_count_cached(n, tprime, t, primes[i], seed));
    }
    UniPoly result;
    for (int i = 0; i < need; ++i) {
        UniPoly li = UniPoly::constant(1);
        Rational denom = 1;
        for (int j = 0; j < need; ++j) {
            if (j == i) continue;
            li = li * UniPoly({-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        result = result + li * (ys[i] / denom);
    }
    // cross-check at one further prime
    long qx = primes[need];
    Rational predicted = result.evaluate(Rational(qx));
    long actual = m_count_cached(n, tprime, t, qx, seed);
    if (predicted != Rational(actual))
        throw DomainError("m_count_interpolated: cross-check prime disagrees");
    return result;
}

TLeqResult LatticeOps::T_leq(const VertexLattice& selfdual, int t) const {
    TLeqResult res;
    auto Ms = enum_vertex_in(selfdual, t);
    for (const auto& M : Ms) {
        for (auto& partner : enum_selfdual_over(M)) {
            ++res.total_triples;
            std::string k = partner.key();
            auto it = res.partners.find(k);
            if (it == res.partners.end()) {
                TLeqPartner tp;
                tp.partner = partner;
                tp.witnesses = 1;
                res.partners.emplace(std::move(k), std::move(tp));
            } else {
                ++it->second.witnesses;
            }
        }
    }
    for (auto& [k, tp] : res.partners)
        tp.intersection_type = type_of(intersect(selfdual, tp.partner));
    return res;
}

std::vector<CorrespondencePair> LatticeOps::T_leq_triples(const VertexLattice& selfdual,
                                                          int t) const {
    std::vector<CorrespondencePair> out;
    for (const auto& M : enum_vertex_in(selfdual, t))
        for (auto& partner : enum_selfdual_over(M))
            out.push_back(CorrespondencePair{selfdual, std::move(partner), M});
    return out;
}

std::vector<VertexLattice> LatticeOps::T_exact_support(const VertexLattice& selfdual,
                                                       int t) const {
    TLeqResult r = T_leq(selfdual, t);
    std::vector<VertexLattice> out;
    for (auto& [k, tp] : r.partners)
        if (tp.intersection_type == t) out.push_back(tp.partner);
    return out;
}

CommutativityReport LatticeOps::commutativity_check(const VertexLattice& selfdual, int t,
                                                    int t2) const {
    auto reach = [&](const VertexLattice& L, int tt) {
        std::map<std::string, VertexLattice> seen;
        for (const auto& M : enum_vertex_in(L, tt))
            for (auto& partner : enum_selfdual_over(M)) {
                std::string k = partner.key();
                if (!seen.count(k)) seen.emplace(std::move(k), std::move(partner));
            }
        std::vector<VertexLattice> out;
        out.reserve(seen.size());
        for (auto& [k, v] : seen) out.push_back(std::move(v));
        return out;
    };

    auto composite = [&](int ta, int tb) {
        std::vector<VertexLattice> layer = reach(selfdual, ta);
        std::vector<std::pair<uint64_t, uint64_t>> hashes;
        std::mutex mu;
        std::exception_ptr err;
        parallel_chunks(layer.size(), [&](unsigned, size_t lo, size_t hi) {
            std::vector<std::pair<uint64_t, uint64_t>> local;
            try {
                for (size_t idx = lo; idx < hi; ++idx)
                    for (const auto& M : enum_vertex_in(layer[idx], tb))
                        for (const auto& partner : enum_selfdual_over(M))
                            local.push_back(partner.hash128());
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!err) err = std::current_exception();
                return;
            }
            std::sort(local.begin(), local.end());
            local.erase(std::unique(local.begin(), local.end()), local.end());
            std::lock_guard<std::mutex> lock(mu);
            hashes.insert(hashes.end(), local.begin(), local.end());
        });
        if (err) std::rethrow_exception(err);
        std::sort(hashes.begin(), hashes.end());
        hashes.erase(std::unique(hashes.begin(), hashes.end()), hashes.end());
        return hashes;
    };

    CommutativityReport rep;
    rep.t = t;
    rep.t2 = t2;
    auto s1 = composite(t, t2);
    auto s2 = composite(t2, t);
    rep.left_set_size = s1.size();
    rep.right_set_size = s2.size();
    rep.equal = (s1 == s2);
    return rep;
}

std::pair<int, int> LatticeOps::relative_position(const VertexLattice& L1,
                                                  const VertexLattice& L2) const {
    if (space_->n != 2) throw DomainError("relative_position: implemented for n = 2");
    if (type_of(L1) != 0 || type_of(L2) != 0)
        throw DomainError("relative_position: requires self-dual lattices");
    std::vector<int> vals = transition_valuations(*space_, L1, L2, 0);
    if (vals[0] + vals[1] != 0)
        throw DomainError("relative_position: determinant valuation nonzero");
    return {vals[1], vals[0]};
}

} // namespace heckeafl
