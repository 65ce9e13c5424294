#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heckeafl/localfield.hpp"
#include "heckeafl/unipoly.hpp"

namespace heckeafl {

/// Split hermitian space of dimension n over F/F0; the form is the
/// antidiagonal unit matrix in the standard basis.
struct HermSpace {
    int n;
    PrimeConfig cfg;
    HermSpace(int n_, PrimeConfig cfg_) : n(n_), cfg(std::move(cfg_)) {
        if (n < 1) throw DomainError("HermSpace: dimension must be positive");
    }
};

/// Enumeration budget, counted in canonical forms produced.
struct Budget {
    std::atomic<long> used{0};
    long cap = 5'000'000;
    void tick(long k = 1) {
        if (used.fetch_add(k, std::memory_order_relaxed) + k > cap)
            throw BudgetExceededError("lattice enumeration budget exceeded");
    }
};

/// Element a + b*delta of O_F / exact integer pair; building block of basis
/// matrices. Values are exact (canonical) integers, not residues.
struct OFPair {
    Int a, b;
    bool operator==(const OFPair& o) const { return a == o.a && b == o.b; }
};

/// O_F-lattice in a split hermitian space, held in canonical column Hermite
/// form: basis = p^{-scale} * T with T upper triangular, pivots exact powers
/// of p, entries above a pivot reduced to canonical residues, and the common
/// p-power stripped from (scale, T). Equality of lattices is equality of the
/// canonical data.
class VertexLattice {
public:
    VertexLattice() = default;

    int n() const { return n_; }
    int scale() const { return scale_; }
    int level() const { return level_; }
    const std::vector<OFPair>& matrix() const { return T_; }
    const OFPair& entry(int i, int j) const { return T_[(size_t)i * n_ + j]; }
    const HermSpace& space() const { return *space_; }

    bool operator==(const VertexLattice& o) const {
        return n_ == o.n_ && scale_ == o.scale_ && T_ == o.T_;
    }
    bool operator!=(const VertexLattice& o) const { return !(*this == o); }

    /// Stable text key of the canonical form; also the hashing input.
    std::string key() const;
    /// 128-bit streaming hash of the canonical form.
    std::pair<uint64_t, uint64_t> hash128() const;

    /// Basis matrix over F, columns spanning the lattice.
    std::vector<FieldElement> basis_matrix() const;

    friend class LatticeOps;

private:
    int n_ = 0;
    int scale_ = 0;
    int level_ = 0;
    std::vector<OFPair> T_;
    const HermSpace* space_ = nullptr;
};

/// Triple (left, witness, right) of the correspondence T_{<=t}.
struct CorrespondencePair {
    VertexLattice left;
    VertexLattice right;
    std::optional<VertexLattice> witness;
};

struct TLeqPartner {
    VertexLattice partner;
    long witnesses = 0;
    int intersection_type = -1;
};

struct TLeqResult {
    long total_triples = 0;
    std::map<std::string, TLeqPartner> partners;  // keyed by canonical form
};

struct CommutativityReport {
    size_t left_set_size = 0;
    size_t right_set_size = 0;
    bool equal = false;
    int t = 0, t2 = 0;
};

/// All lattice operations, bound to a hermitian space and a budget.
class LatticeOps {
public:
    explicit LatticeOps(const HermSpace& space, Budget* budget = nullptr)
        : space_(&space), budget_(budget) {}

    const HermSpace& space() const { return *space_; }

    /// Canonicalize the lattice spanned by p^{-scale} * columns.
    VertexLattice from_columns(int scale, const std::vector<std::vector<OFPair>>& cols,
                               int level) const;

    VertexLattice standard_selfdual() const;
    /// Member Xi_t of the standard chain of vertex lattices.
    VertexLattice standard_chain(int t) const;

    VertexLattice dual(const VertexLattice& L) const;
    VertexLattice sum(const VertexLattice& A, const VertexLattice& B) const;
    VertexLattice intersect(const VertexLattice& A, const VertexLattice& B) const;

    bool is_vertex(const VertexLattice& L) const;
    /// Length of dual(L)/L; throws DomainError if L is not a vertex lattice.
    int type_of(const VertexLattice& L) const;

    /// All type-t vertex lattices inside a self-dual lattice, via coisotropic
    /// subspaces of the residue space.
    std::vector<VertexLattice> enum_vertex_in(const VertexLattice& selfdual, int t) const;
    /// All self-dual lattices between M and its dual.
    std::vector<VertexLattice> enum_selfdual_over(const VertexLattice& M) const;
    /// Generic route: all type-t vertex sublattices of a vertex lattice,
    /// enumerated between p*dual(L) and L and filtered by type.
    std::vector<VertexLattice> vertex_sublattices_of_type(const VertexLattice& L, int t) const;

    /// Number of type-t vertex lattices inside a fixed type-t' lattice;
    /// checked constant over base_points random base lattices.
    long m_count(int tprime, int t, std::uint64_t seed = 0, int base_points = 3) const;

    TLeqResult T_leq(const VertexLattice& selfdual, int t) const;
    /// The raw triples (left, witness, right), one per witness.
    std::vector<CorrespondencePair> T_leq_triples(const VertexLattice& selfdual, int t) const;
    std::vector<VertexLattice> T_exact_support(const VertexLattice& selfdual, int t) const;

    /// Set-level commutativity of the degree-t and degree-t' correspondences
    /// seeded at one self-dual lattice; compares the two composite supports.
    CommutativityReport commutativity_check(const VertexLattice& selfdual, int t, int t2) const;

    /// n = 2 only: elementary divisor exponents (m, -m) of L2 relative to L1.
    std::pair<int, int> relative_position(const VertexLattice& L1,
                                          const VertexLattice& L2) const;

    /// Random self-dual lattice by a seeded walk in the building.
    VertexLattice random_selfdual(std::uint64_t seed, int steps = 3) const;

private:
    struct Adapted;  // Smith-adapted basis data
    Adapted adapt(const VertexLattice& outer_T, const VertexLattice& inner,
                  int inner_extra_p) const;
    void tick(long k = 1) const { if (budget_) budget_->tick(k); }

    const HermSpace* space_;
    Budget* budget_;
};

/// m(t', t) with memoization across calls; q must be an odd prime.
long m_count_cached(int n, int tprime, int t, long q, std::uint64_t seed = 0);

/// Polynomial in q interpolated through m_count values at enough primes, with
/// one extra prime as a cross-check. Degree bound: d(n-d), d = (t-t')/2.
UniPoly m_count_interpolated(int n, int tprime, int t, std::uint64_t seed = 0);

} // namespace heckeafl
