#include "qmob/finiteness.hpp"

#include <set>

namespace qmob {

namespace {

void require_valid(const Representation& m) {
    std::vector<std::string> errs = validate(m);
    if (!errs.empty())
        throw ValidationError(errs);
}

// Smallest 1-based vertex with dimension >= 2; 0 when the rep is thin.
int first_wide_vertex(const Representation& m) {
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        if (m.dims[v] >= 2)
            return static_cast<int>(v) + 1;
    return 0;
}

int socle_square_vertex(const Subrep& soc) {
    for (std::size_t v = 0; v < soc.spaces.size(); ++v)
        if (soc.spaces[v].dim() >= 2)
            return static_cast<int>(v) + 1;
    return 0;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Finite: return "Finite";
        case Verdict::Infinite: return "Infinite";
        default: return "Unknown";
    }
}

std::string to_string(FinitenessReason r) {
    switch (r) {
        case FinitenessReason::FiniteField: return "FiniteField";
        case FinitenessReason::Thin: return "Thin";
        case FinitenessReason::NonThinAcyclic: return "NonThinAcyclic";
        case FinitenessReason::SocleSquare: return "SocleSquare";
        default: return "Inconclusive";
    }
}

InfiniteWitness infinite_witness(const Representation& m) {
    require_valid(m);
    if (m.field.is_prime())
        throw NotApplicable("the lattice over a finite field is always finite");
    if (!is_acyclic(m.quiver))
        throw NotApplicable("witness construction needs an acyclic quiver");
    int a = first_wide_vertex(m);
    if (a == 0)
        throw NotApplicable("thin representations have finite lattices");

    // Everything reachable from a's out-neighbors is a sinking set that,
    // being downstream of an acyclic vertex, misses a itself.  Quotienting by
    // its restriction zeroes all maps out of a, so the quotient's socle keeps
    // the full fiber at a.
    std::set<int> acc;
    for (int ai : m.quiver.out_arrows(a)) {
        std::vector<int> r = reachable(m.quiver, m.quiver.arrows()[static_cast<std::size_t>(ai)].target);
        acc.insert(r.begin(), r.end());
    }

    InfiniteWitness w;
    w.vertex = a;
    w.sinking_set.assign(acc.begin(), acc.end());
    w.quotient = quotient(m, restrict_sinking(m, w.sinking_set)).rep;
    if (socle(w.quotient).spaces[static_cast<std::size_t>(a - 1)].dim() < 2)
        throw DomainError("internal: witness socle is not a square at vertex " +
                          std::to_string(a));
    return w;
}

FinitenessVerdict decide_finiteness(const Representation& m) {
    require_valid(m);
    FinitenessVerdict out;
    if (m.field.is_prime()) {
        out.verdict = Verdict::Finite;
        out.reason = FinitenessReason::FiniteField;
        return out;
    }
    if (is_thin(m)) {
        out.verdict = Verdict::Finite;
        out.reason = FinitenessReason::Thin;
        return out;
    }
    if (is_acyclic(m.quiver)) {
        out.verdict = Verdict::Infinite;
        out.reason = FinitenessReason::NonThinAcyclic;
        out.witness = infinite_witness(m);
        return out;
    }
    // Cyclic quiver: look for a socle square in any sinking-set quotient,
    // smallest sets first (the empty set checks the socle of M itself).
    for (const std::vector<int>& s : enumerate_sinking_sets(m.quiver)) {
        Representation q = quotient(m, restrict_sinking(m, s)).rep;
        int v = socle_square_vertex(socle(q));
        if (v != 0) {
            InfiniteWitness w;
            w.vertex = v;
            w.sinking_set = s;
            w.quotient = std::move(q);
            out.verdict = Verdict::Infinite;
            out.reason = FinitenessReason::SocleSquare;
            out.witness = std::move(w);
            return out;
        }
    }
    out.verdict = Verdict::Unknown;
    out.reason = FinitenessReason::Inconclusive;
    return out;
}

SocleSeriesReport socle_series_counterexample_check(const Representation& m) {
    require_valid(m);
    SocleSeriesReport report;
    Representation cur = m;
    while (total_dim(cur) > 0) {
        Subrep soc = socle(cur);
        if (subrep_total_dim(soc) == 0)
            throw DomainError(
                "socle series stalls: a nonzero representation on this quiver has zero "
                "socle, so it has no simple subrepresentation");
        std::vector<int> dims = subrep_dims(soc);
        bool thin = true;
        for (int d : dims) thin = thin && d <= 1;
        report.layer_dims.push_back(std::move(dims));
        report.layer_thin.push_back(thin);
        report.all_layers_thin = report.all_layers_thin && thin;
        cur = quotient(cur, soc).rep;
    }
    return report;
}

}  // namespace qmob
