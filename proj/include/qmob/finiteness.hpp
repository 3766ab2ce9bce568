#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmob/rep.hpp"

namespace qmob {

enum class Verdict { Finite, Infinite, Unknown };

enum class FinitenessReason { FiniteField, Thin, NonThinAcyclic, SocleSquare, Inconclusive };

std::string to_string(Verdict v);
std::string to_string(FinitenessReason r);

struct InfiniteWitness {
    int vertex = 0;                // the quotient's socle has dimension >= 2 here
    std::vector<int> sinking_set;  // sorted; the quotient is by restrict_sinking on it
    Representation quotient;
};

struct FinitenessVerdict {
    Verdict verdict = Verdict::Unknown;
    FinitenessReason reason = FinitenessReason::Inconclusive;
    std::optional<InfiniteWitness> witness;
};

/// Semidecision for whether the submodule lattice is finite.  Finite fields
/// and thin representations are Finite.  Non-thin over the infinite field is
/// Infinite outright when the quiver is acyclic; when it is cyclic, Infinite
/// is returned exactly if some sinking-set quotient has a socle with a vertex
/// of dimension >= 2, and Unknown otherwise (the verdicts Finite and Infinite
/// are proofs, Unknown is honest ignorance).
FinitenessVerdict decide_finiteness(const Representation& m);

/// Witness construction for the acyclic non-thin case over the infinite
/// field: the smallest vertex a with dim >= 2, the union of everything
/// reachable from a's out-neighbors (empty when a is a sink), and the
/// quotient by that sinking restriction, whose socle contains S(a)^2.
/// NotApplicable outside that case.
InfiniteWitness infinite_witness(const Representation& m);

struct SocleSeriesReport {
    std::vector<std::vector<int>> layer_dims;  // dims of Soc(M / Soc^i M)
    std::vector<bool> layer_thin;
    bool all_layers_thin = true;
};

/// The socle series layers of M with per-layer thinness.  Leading layers can
/// all be thin while the lattice is infinite, so this reports, it does not
/// decide.  DomainError when a nonzero representation has zero socle (which
/// happens on cyclic quivers) since the series then stalls.
SocleSeriesReport socle_series_counterexample_check(const Representation& m);

}  // namespace qmob
