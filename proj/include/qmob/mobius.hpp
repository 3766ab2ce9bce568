#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qmob/lattice.hpp"

namespace qmob {

enum class MobiusMethod { ClosedForm, BruteForce };

std::string to_string(MobiusMethod m);

struct MobiusReport {
    Int value;
    MobiusMethod method = MobiusMethod::ClosedForm;
    bool semisimple = false;
    Int q_used;  // |K| for a finite coefficient field, 1 for the infinite one
};

/// Moebius value (-1)^t q^{t(t-1)/2} of the lattice of submodules of S^t when
/// the simple S has an endomorphism field with q elements.  t = 0 gives 1.
Int mobius_power(const Int& q, int t);

/// Product of mobius_power(q, a_v) over a dimension vector; the value for a
/// semisimple representation with those multiplicities.  q = 1 encodes the
/// infinite field and requires every entry <= 1, since S^t has infinitely
/// many submodules otherwise.
Int mobius_semisimple(const std::vector<int>& dims, const Int& q);

/// Closed-form Moebius value of a validated representation: 0 as soon as any
/// structural map is nonzero, the semisimple product otherwise.
MobiusReport mobius_rep(const Representation& m);

/// Same value through full lattice enumeration; the cross-check route.
MobiusReport mobius_rep_bruteforce(const Representation& m,
                                   std::uint64_t cap = kDefaultLatticeCap, int threads = 1);

/// Number of simple submodules of S^t, q = |End(S)|: 1 + q + ... + q^{t-1}.
Int count_simple_submodules(const Int& q, int t);

/// Number of maximal submodules of S^t; equal to the simple count.
Int count_maximal(const Int& q, int t);

/// Number of submodules of S^t of composition length l.
Int count_length_l(const Int& q, int t, int l);

/// Moebius inversion at the top of the lattice: given g, returns
///   f(M) = sum over rad M <= N <= M of g(N) * mu(M/N).
/// The interval is materialized through the semisimple quotient M/rad M, so
/// only that quotient has to be enumerable; the value equals the sum over the
/// whole lattice because mu(M/N) vanishes off the interval.
Rat mobius_inversion_module(const Representation& m,
                            const std::function<Rat(const Subrep&)>& g,
                            std::uint64_t cap = kDefaultLatticeCap);

}  // namespace qmob
