#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qmob/error.hpp"

namespace qmob {

using Int = mpz_class;
using Rat = mpq_class;

/// Ground field of a computation: either F_p for a verified prime p, or the
/// rational numbers standing in for an arbitrary infinite field.  All scalar
/// arithmetic goes through this class so that F_p values stay reduced to the
/// canonical residue range [0, p).
class FieldSpec {
public:
    static FieldSpec prime(const Int& p);
    static FieldSpec rationals();

    bool is_prime() const { return prime_; }
    bool is_infinite() const { return !prime_; }

    /// Characteristic p; only meaningful for prime fields.
    const Int& p() const;

    /// The value of q used by the counting formulas: p for F_p, 1 for an
    /// infinite field (where geometric sums collapse to plain counts).
    Int q_for_counting() const { return prime_ ? p_ : Int(1); }

    Rat normalize(const Rat& x) const;
    Rat add(const Rat& a, const Rat& b) const;
    Rat sub(const Rat& a, const Rat& b) const;
    Rat mul(const Rat& a, const Rat& b) const;
    Rat neg(const Rat& a) const;
    Rat inv(const Rat& a) const;
    Rat div(const Rat& a, const Rat& b) const;

    bool operator==(const FieldSpec& o) const { return prime_ == o.prime_ && p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldSpec(bool prime, Int p) : prime_(prime), p_(std::move(p)) {}

    bool prime_;
    Int p_; // 0 when infinite

    friend class Mat;
};

/// Exact decimal/fraction rendering: "3", "-2", "1/2".
std::string scalar_to_string(const Rat& x);

/// Dense matrix over a FieldSpec, row-major.  Entries over F_p are always the
/// canonical residues.  Zero-sized matrices (0 rows or 0 columns) are valid
/// and represent maps to or from a zero space.
class Mat {
public:
    Mat(const FieldSpec& f, int rows, int cols);
    Mat(const FieldSpec& f, int rows, int cols, std::vector<Rat> entries);

    static Mat identity(const FieldSpec& f, int n);
    static Mat from_rows(const FieldSpec& f, int cols,
                         const std::vector<std::vector<Rat>>& rows);

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }
    void set(int i, int j, const Rat& v) { e_[std::size_t(i) * cols_ + j] = field_.normalize(v); }

    Mat mul(const Mat& rhs) const;
    Mat transpose() const;
    bool is_zero() const;

    std::vector<Rat> row(int i) const;

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

private:
    FieldSpec field_;
    int rows_;
    int cols_;
    std::vector<Rat> e_;
};

/// Reduced row echelon form together with the rank.  Zero rows sink to the
/// bottom; pivots are 1 with zeros above and below.
std::pair<Mat, int> rref(const Mat& m);

/// Subspace of the ambient column space F^n, canonically represented by the
/// RREF basis (one basis vector per row, no zero rows).  Two Subspace objects
/// are equal iff their representations are identical.
class Subspace {
public:
    static Subspace zero(const FieldSpec& f, int ambient);
    static Subspace full(const FieldSpec& f, int ambient);

    /// Span of arbitrary row vectors; canonicalizes via RREF.
    static Subspace span(const FieldSpec& f, int ambient,
                         const std::vector<std::vector<Rat>>& vectors);
    static Subspace span(const Mat& rows_as_vectors);

    const FieldSpec& field() const { return basis_.field(); }
    int ambient() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const std::vector<Rat>& vec) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    explicit Subspace(Mat basis);

    Mat basis_;
    std::vector<int> pivots_;
};

/// Canonical comparison for subspaces of a shared ambient space: by dimension
/// first, then lexicographically by the flattened RREF basis entries.
/// Returns <0, 0, >0.
int cmp(const Subspace& a, const Subspace& b);

/// Solution space of m * x = 0, a subspace of F^cols.
Subspace kernel(const Mat& m);

/// Column space of m, a subspace of F^rows.
Subspace image(const Mat& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Image of a subspace of F^cols under m, a subspace of F^rows.
Subspace apply(const Mat& m, const Subspace& v);

/// Whether a is contained in b (both subspaces of the same ambient space).
bool leq(const Subspace& a, const Subspace& b);

/// s-number: the number of one-dimensional subspaces of a q-vector space of
/// dimension j.  s_0 = 0; for q = 1 this degenerates to j itself.
Int s_number(int j, const Int& q);

/// Gaussian binomial coefficient: the number of l-dimensional subspaces of an
/// n = t dimensional space over F_q, computed as the exact ratio of products
/// of s-numbers (s_t ... s_{t-l+1}) / (s_l ... s_1).  Symmetric in l and t-l;
/// at q = 1 it equals the ordinary binomial coefficient.  The variant that
/// sums s-numbers termwise before dividing is not integral in general
/// (t=4, l=2, q=2 would give 22/4) and is not used.
Int gaussian_binomial(int t, int l, const Int& q);

/// Total number of subspaces of F_q^n, all dimensions.
Int subspace_count(int n, const Int& q);

/// All l-subsets of columns {0..n-1} in lexicographic order; each is a pivot
/// pattern for the RREF enumeration and an independent unit of parallel work.
std::vector<std::vector<int>> pivot_patterns(int n, int l);

/// All subspaces of F_p^n whose RREF basis has exactly the given pivot
/// columns, in lexicographic order of the basis entries.
std::vector<Subspace> subspaces_with_pivots(const FieldSpec& f, int n,
                                            const std::vector<int>& pivots);

/// Lazy stream over every subspace of F_p^n in canonical order: dimension
/// ascending, then lexicographic RREF basis.  Buffers one dimension at a time.
class SubspaceStream {
public:
    SubspaceStream(const FieldSpec& f, int n);

    /// Produces the next subspace; returns false when exhausted.
    bool next(Subspace& out);

private:
    FieldSpec field_;
    int n_;
    int dim_;
    std::size_t pos_;
    std::vector<Subspace> buffer_;

    void fill_buffer();
};

/// Materializes the full list of subspaces of F_p^n in canonical order.
/// Refuses with CapExceeded once more than `cap` subspaces would be produced.
std::vector<Subspace> all_subspaces(const FieldSpec& f, int n, std::uint64_t cap);

} // namespace qmob
