#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmob/error.hpp"
#include "qmob/exactmath.hpp"

namespace qmob {

// Vertices are the contiguous integers 1..n. Arrow identity is the name,
// which allows parallel arrows; names must be unique and nonempty.
struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
};

class Quiver {
  public:
    Quiver(int n_vertices, std::vector<Arrow> arrows);

    int n_vertices() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    // Index into arrows() by name; throws DomainError for unknown names.
    int arrow_index(const std::string& name) const;
    const Arrow& arrow(const std::string& name) const { return arrows_[static_cast<std::size_t>(arrow_index(name))]; }

    // Indices into arrows() of the arrows leaving / entering the vertex.
    std::vector<int> out_arrows(int vertex) const;
    std::vector<int> in_arrows(int vertex) const;

    void check_vertex(int vertex) const;

  private:
    int n_ = 0;
    std::vector<Arrow> arrows_;
};

// Arrow names a1,...,ak, traversed first-to-last; composability
// (target(a_i) = source(a_{i+1})) is checked against a quiver on demand.
struct Path {
    std::vector<std::string> arrows;
};

struct RelationTerm {
    Rat coeff;  // nonzero
    Path path;
};

// A linear combination of parallel paths of length >= 2; representations
// satisfying it have the corresponding matrix combination equal to zero.
struct Relation {
    std::vector<RelationTerm> terms;
};

// Path endpoints; both throw DomainError on empty or non-composable paths.
int path_source(const Quiver& q, const Path& p);
int path_target(const Quiver& q, const Path& p);
void check_path(const Quiver& q, const Path& p);

// Rejects empty relations, zero coefficients, paths of length < 2, and
// terms whose paths are not parallel (shared source and target).
void check_relation(const Quiver& q, const Relation& r);

bool is_acyclic(const Quiver& q);

// Vertices with no outgoing arrow, ascending.
std::vector<int> sinks(const Quiver& q);

// Smallest vertex set containing a and closed under following arrows
// source -> target; equivalently the minimal sinking set containing a.
std::vector<int> reachable(const Quiver& q, int a);
std::vector<int> minimal_sinking(const Quiver& q, int a);

// True iff every arrow with source in S also has target in S.
bool is_sinking(const Quiver& q, const std::vector<int>& S);

std::vector<int> sinking_union(const Quiver& q, const std::vector<std::vector<int>>& sets);

// All out-closed vertex subsets in ascending bitmask order (bit v-1 is
// vertex v), so {} comes first and {1..n} last. Both are always present.
std::vector<std::vector<int>> enumerate_sinking_sets(const Quiver& q);

// The full subquiver on S: vertex i of the result is the i-th smallest
// element of S; arrows keep their names. S must be a valid vertex set.
Quiver full_subquiver(const Quiver& q, const std::vector<int>& S);

// Vertex order with every arrow source-before-target; empty iff cyclic.
std::optional<std::vector<int>> topological_order(const Quiver& q);

}  // namespace qmob
