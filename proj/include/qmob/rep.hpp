#pragma once

#include <string>
#include <vector>

#include "qmob/exactmath.hpp"
#include "qmob/quiver.hpp"

namespace qmob {

// A representation of a bound quiver: one vector space per vertex (given by
// its dimension), one matrix per arrow. The map for arrow a: s -> t has shape
// dims[t-1] x dims[s-1] and acts on column vectors of the source space.
struct Representation {
    FieldSpec field = FieldSpec::rationals();
    Quiver quiver{1, {}};
    std::vector<int> dims;       // indexed by vertex - 1
    std::vector<Mat> maps;       // parallel to quiver.arrows()
    std::vector<Relation> relations;
    std::string name;
};

// A choice of subspace at every vertex. Closure under the structural maps is
// what makes it a subrepresentation; see is_subrep_closed.
struct Subrep {
    std::vector<Subspace> spaces;  // indexed by vertex - 1
};

// Per-vertex matrices of a morphism M -> N (shape dim_N(a) x dim_M(a)).
struct RepMorphism {
    std::vector<Mat> mats;
};

// Empty result means valid: shapes match, entries are normalized for the
// field, and every relation evaluates to the zero matrix.
std::vector<std::string> validate(const Representation& m);

// Matrix of the path a1,...,ak (a1 traversed first): M_{ak} * ... * M_{a1}.
Mat path_matrix(const Representation& m, const Path& p);
Mat evaluate_relation(const Representation& m, const Relation& r);

std::vector<int> dimension_vector(const Representation& m);
int total_dim(const Representation& m);
bool is_thin(const Representation& m);        // every vertex dim <= 1
bool is_semisimple(const Representation& m);  // every structural map zero

Subrep zero_subrep(const Representation& m);
Subrep full_subrep(const Representation& m);
std::vector<int> subrep_dims(const Subrep& u);
int subrep_total_dim(const Subrep& u);

// True iff apply(M_a, U[source]) <= U[target] for every arrow a. Throws
// AmbientMismatch if U does not even live in M's spaces.
bool is_subrep_closed(const Representation& m, const Subrep& u);
void check_subrep(const Representation& m, const Subrep& u);  // NotASubrep

// Canonical order on subreps of one representation: total dimension, then
// per-vertex dimensions lexicographically, then basis entries.
int cmp(const Subrep& a, const Subrep& b);

// Largest semisimple subrepresentation: the full space at sinks, elsewhere
// the intersection of the kernels of the outgoing maps.
Subrep socle(const Representation& m);

// Per-vertex sum of images of incoming maps; zero iff M is semisimple, and
// M/radical is always semisimple.
Subrep radical(const Representation& m);

struct QuotientResult {
    Representation rep;
    RepMorphism projection;  // M -> quotient
    // Ambient coordinates spanning the complement of U at each vertex (the
    // non-pivot columns of U's basis); quotient coordinate j at vertex v
    // reads off coordinate complement_cols[v-1][j] after reduction mod U.
    std::vector<std::vector<int>> complement_cols;
};

QuotientResult quotient(const Representation& m, const Subrep& u);

struct SubToRepResult {
    Representation rep;
    RepMorphism embedding;  // rep -> M, total rank = total_dim(rep)
};

// Materializes a closed subrep as a standalone representation in the
// canonical bases of its subspaces.
SubToRepResult sub_to_rep(const Representation& m, const Subrep& u);

Representation direct_sum(const Representation& m, const Representation& n);
// The two canonical closed subreps of direct_sum(m, n).
Subrep embed_left(const Representation& m, const Representation& n);
Subrep embed_right(const Representation& m, const Representation& n);

// Full space on the vertices of S, zero elsewhere; S must be sinking (out-
// closed), which is exactly what makes the result closed.
Subrep restrict_sinking(const Representation& m, const std::vector<int>& S);

// Dimension of the space of morphisms M -> N.
int hom_dim(const Representation& m, const Representation& n);

// Commuting-square check for phi: M -> N (shape check included).
bool is_morphism(const Representation& m, const Representation& n, const RepMorphism& phi);
int morphism_total_rank(const RepMorphism& phi);

}  // namespace qmob
