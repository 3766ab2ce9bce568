#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qmob/exactmath.hpp"

namespace qmob {

/// Finite poset on indices 0..size-1 with opaque labels.  The order relation
/// is validated eagerly at construction (reflexive, antisymmetric,
/// transitive); a linear extension is precomputed.  Immutable afterwards, so
/// instances are safe to share across threads.
class FinitePoset {
public:
    FinitePoset(int n, std::vector<std::string> labels,
                const std::vector<std::vector<bool>>& leq_matrix);

    /// Builds the reflexive-transitive closure of the given pairs (x ≤ y),
    /// then validates.  A cycle surfaces as an antisymmetry error.
    static FinitePoset from_relations(int n, std::vector<std::string> labels,
                                      const std::vector<std::pair<int, int>>& pairs);

    int size() const { return n_; }
    const std::string& label(int i) const { return labels_[std::size_t(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool leq(int x, int y) const {
        return (up_[row_off(x) + std::size_t(y >> 6)] >> (y & 63)) & 1u;
    }

    /// Indices in an order where x ≤ y implies x appears no later than y.
    const std::vector<int>& linear_extension() const { return topo_; }

    /// Unique minimum / maximum index, or -1 when absent.
    int bottom() const;
    int top() const;
    bool is_bounded() const { return bottom() >= 0 && top() >= 0; }

    /// Cover pairs (x, y) with x covered by y, in lexicographic index order.
    std::vector<std::pair<int, int>> covers() const;

private:
    int n_;
    int words_;
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> up_; // row x: bitset of y with x ≤ y

    std::vector<int> topo_;

    std::size_t row_off(int x) const { return std::size_t(x) * std::size_t(words_); }
    void validate_and_finish();

    FinitePoset() : n_(0), words_(0) {}
};

/// Dense all-pairs Möbius values; entries for incomparable pairs are 0 by
/// convention (μ is only defined on x ≤ y).
struct MobiusTable {
    int size = 0;
    std::vector<Int> values;

    const Int& at(int x, int y) const { return values[std::size_t(x) * size + y]; }
};

/// μ_P(x, y) via the memoized recursion μ(x,x) = 1,
/// μ(x,y) = −Σ_{x ≤ z < y} μ(x,z).  Requires x ≤ y.
Int mobius_pair(const FinitePoset& p, int x, int y);

/// All values μ(x, z) for fixed x, indexed by z (0 for z not above x).
std::vector<Int> mobius_row_from(const FinitePoset& p, int x);

/// All values μ(z, y) for fixed y, indexed by z (0 for z not below y).
std::vector<Int> mobius_col_to(const FinitePoset& p, int y);

MobiusTable mobius_table(const FinitePoset& p);

/// Cartesian product with componentwise order; index (i, j) -> i*|Q| + j,
/// labels combined as "(p,q)".
FinitePoset product(const FinitePoset& p, const FinitePoset& q);

FinitePoset dual(const FinitePoset& p);

/// Indices covering the bottom / covered by the top.  Requires bounded.
std::vector<int> atoms(const FinitePoset& p);
std::vector<int> coatoms(const FinitePoset& p);

/// Every pair has a unique least upper bound and greatest lower bound.
bool is_lattice(const FinitePoset& p);

/// Induced subposet {z : x ≤ z ≤ y} with inherited labels.
FinitePoset interval(const FinitePoset& p, int x, int y);
std::vector<int> interval_elements(const FinitePoset& p, int x, int y);

/// Möbius inversion: f(y) = Σ_{x ≤ y} g(x)·μ(x,y).  If g were the downward
/// accumulation of some f0 then f recovers f0 exactly.  Requires a maximum
/// element (bounded above).
std::vector<Rat> mobius_invert(const FinitePoset& p, const std::vector<Rat>& g);

/// Coatom form of Weisner's identity at the given atom:
/// μ(0,1) + Σ {μ(0,N) : N coatom, atom ≰ N} = 0.
/// Holds on submodule lattices; requires a bounded lattice and an atom.
bool weisner_check(const FinitePoset& p, int atom);

/// Hasse diagram in DOT format: nodes in index order, one edge per cover
/// pair, lexicographically ordered.  Deterministic byte-for-byte.
std::string to_dot(const FinitePoset& p, const std::string& graph_name = "hasse");

} // namespace qmob
