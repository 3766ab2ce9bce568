#include "qmob/mobius.hpp"

namespace qmob {

namespace {

Int q_for_formulas(const FieldSpec& f) { return f.is_prime() ? f.p() : Int(1); }

}  // namespace

std::string to_string(MobiusMethod m) {
    return m == MobiusMethod::ClosedForm ? "ClosedForm" : "BruteForce";
}

Int mobius_power(const Int& q, int t) {
    if (q < 1)
        throw DomainError("mobius_power needs q >= 1, got " + q.get_str());
    if (t < 0)
        throw DomainError("mobius_power needs t >= 0, got " + std::to_string(t));
    unsigned long e =
        static_cast<unsigned long>(t) * static_cast<unsigned long>(t > 0 ? t - 1 : 0) / 2;
    Int p;
    mpz_pow_ui(p.get_mpz_t(), q.get_mpz_t(), e);
    return t % 2 == 0 ? p : Int(-p);
}

Int mobius_semisimple(const std::vector<int>& dims, const Int& q) {
    if (q < 1)
        throw DomainError("mobius_semisimple needs q >= 1, got " + q.get_str());
    Int out = 1;
    for (int a : dims) {
        if (a < 0)
            throw DomainError("negative multiplicity " + std::to_string(a));
        if (q == 1 && a >= 2)
            throw InfiniteLattice("S^" + std::to_string(a) +
                                  " over the infinite field has infinitely many submodules");
        out *= mobius_power(q, a);
    }
    return out;
}

MobiusReport mobius_rep(const Representation& m) {
    std::vector<std::string> errs = validate(m);
    if (!errs.empty())
        throw ValidationError(errs);
    MobiusReport r;
    r.method = MobiusMethod::ClosedForm;
    r.semisimple = is_semisimple(m);
    r.q_used = q_for_formulas(m.field);
    if (!r.semisimple) {
        // A nonzero structural map forces mu = 0 whether or not the lattice
        // is even finite.
        r.value = 0;
        return r;
    }
    r.value = mobius_semisimple(m.dims, r.q_used);
    return r;
}

MobiusReport mobius_rep_bruteforce(const Representation& m, std::uint64_t cap, int threads) {
    MobiusReport r;
    r.method = MobiusMethod::BruteForce;
    r.value = mobius_bruteforce(m, cap, threads);
    r.semisimple = is_semisimple(m);
    r.q_used = q_for_formulas(m.field);
    return r;
}

Int count_simple_submodules(const Int& q, int t) {
    if (q < 2)
        throw DomainError("an endomorphism field has at least 2 elements, got q = " +
                          q.get_str());
    if (t < 1)
        throw DomainError("count_simple_submodules needs t >= 1, got " + std::to_string(t));
    return s_number(t, q);
}

Int count_maximal(const Int& q, int t) { return count_simple_submodules(q, t); }

Int count_length_l(const Int& q, int t, int l) {
    if (q < 2)
        throw DomainError("an endomorphism field has at least 2 elements, got q = " +
                          q.get_str());
    if (l < 0 || t < 0 || l > t)
        throw DomainError("count_length_l needs 0 <= l <= t, got l = " + std::to_string(l) +
                          ", t = " + std::to_string(t));
    return gaussian_binomial(t, l, q);
}

Rat mobius_inversion_module(const Representation& m,
                            const std::function<Rat(const Subrep&)>& g, std::uint64_t cap) {
    std::vector<std::string> errs = validate(m);
    if (!errs.empty())
        throw ValidationError(errs);

    // mu(M/N) vanishes unless N contains the radical, so the sum over the
    // whole lattice collapses to the interval [rad M, M], which corresponds
    // to the lattice of the semisimple quotient M / rad M.
    Subrep rad = radical(m);
    QuotientResult qr = quotient(m, rad);
    SubmoduleLattice qlat = enumerate_subreps(qr.rep, cap);

    Rat total = 0;
    for (int i = 0; i < qlat.size(); ++i) {
        const Subrep& w = qlat.element(i);
        // Pull back along the projection: N_v = rad_v + section(W_v), the
        // section planting quotient coordinate j at ambient coordinate
        // complement_cols[v][j].
        Subrep n;
        for (std::size_t v = 0; v < w.spaces.size(); ++v) {
            const Subspace& rv = rad.spaces[v];
            const Subspace& wv = w.spaces[v];
            const std::vector<int>& cols = qr.complement_cols[v];
            Mat rows(m.field, rv.dim() + wv.dim(), rv.ambient());
            for (int r = 0; r < rv.dim(); ++r)
                for (int c = 0; c < rv.ambient(); ++c) rows.set(r, c, rv.basis().at(r, c));
            for (int r = 0; r < wv.dim(); ++r)
                for (int j = 0; j < wv.ambient(); ++j)
                    rows.set(rv.dim() + r, cols[static_cast<std::size_t>(j)],
                             wv.basis().at(r, j));
            n.spaces.push_back(Subspace::span(rows));
        }
        check_subrep(m, n);
        Representation between = quotient(qr.rep, w).rep;  // isomorphic to M/N
        total += g(n) * Rat(mobius_rep(between).value);
    }
    return total;
}

}  // namespace qmob
