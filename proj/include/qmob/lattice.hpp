#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmob/poset.hpp"
#include "qmob/rep.hpp"

namespace qmob {

inline constexpr std::uint64_t kDefaultLatticeCap = 100000;

// The fully enumerated lattice of subrepresentations, in canonical element
// order (total dimension, then per-vertex dimensions, then bases), with a
// poset view indexed the same way.  Element 0 is the zero subrep and the
// last element is the whole representation.
class SubmoduleLattice {
  public:
    SubmoduleLattice(Representation base, std::vector<Subrep> elements);

    const Representation& base() const { return base_; }
    const std::vector<Subrep>& elements() const { return elements_; }
    const Subrep& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const FinitePoset& poset() const { return poset_; }

    int size() const { return static_cast<int>(elements_.size()); }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }

    // Binary search in canonical order; DomainError if absent.
    int index_of(const Subrep& u) const;

  private:
    Representation base_;
    std::vector<Subrep> elements_;
    FinitePoset poset_;
};

// Exhaustive enumeration.  Prime fields run a depth-first search over the
// vertices (topological order when the quiver is acyclic) where each vertex's
// candidates are the subspaces containing the image forced by the maps from
// already-chosen vertices.  Infinite fields require a thin representation
// (InfiniteModeNonThin otherwise) and use subset enumeration.  Refuses with
// CapExceeded once more than `cap` subreps exist; never truncates.
SubmoduleLattice enumerate_subreps(const Representation& m,
                                   std::uint64_t cap = kDefaultLatticeCap,
                                   int threads = 1);

// Subset route for thin representations over any field: subreps correspond
// to support subsets closed under arrows with a nonzero structural map.
SubmoduleLattice enumerate_thin(const Representation& m,
                                std::uint64_t cap = kDefaultLatticeCap);

// mu of the enumerated lattice from the zero subrep to the whole of M.
Int mobius_bruteforce(const SubmoduleLattice& lat);
Int mobius_bruteforce(const Representation& m, std::uint64_t cap = kDefaultLatticeCap,
                      int threads = 1);

std::vector<Subrep> atoms_of(const SubmoduleLattice& lat);
std::vector<Subrep> coatoms_of(const SubmoduleLattice& lat);

// Number of elements of each total dimension (= composition length).
std::map<int, Int> count_by_length(const SubmoduleLattice& lat);

struct OrthoResult {
    bool orthogonal = false;
    // First element of L(M + N) in canonical order that does not split as
    // (U cap M) + (U cap N); absent when orthogonal.
    std::optional<Subrep> witness;
};

OrthoResult is_poset_orthogonal(const Representation& m, const Representation& n,
                                std::uint64_t cap = kDefaultLatticeCap, int threads = 1);

// True iff no subrep of either side admits a nonzero morphism to the other.
bool is_orthocyclic(const Representation& m, const Representation& n,
                    std::uint64_t cap = kDefaultLatticeCap);

// Coatom identity at the given atom: mu(0,1) plus the sum of mu(0,N) over
// coatoms N not containing the atom is zero.  DomainError if the element is
// not an atom of this lattice.
bool weisner_verify(const SubmoduleLattice& lat, const Subrep& atom);

// Elements with bases, Hasse covers, and the mu values from the bottom row
// and into the top column; exact scalars rendered as strings.
nlohmann::ordered_json lattice_to_json(const SubmoduleLattice& lat);

// Hasse diagram, bottom-up rank direction, nodes labelled by dimension
// vectors in canonical order.
std::string lattice_to_dot(const SubmoduleLattice& lat);

}  // namespace qmob
