#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qmob/lattice.hpp"

using namespace qmob;

namespace {

const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

Quiver pullback_quiver() {  // 1 <-alpha- 2 -beta-> 3
    return Quiver(3, {{"alpha", 2, 1}, {"beta", 2, 3}});
}

Representation l_rep(const FieldSpec& f) {  // K <- K -> 0
    Representation m;
    m.field = f;
    m.quiver = pullback_quiver();
    m.dims = {1, 1, 0};
    m.maps = {Mat(f, 1, 1, {Rat(1)}), Mat(f, 0, 1)};
    return m;
}

Representation m_rep(const FieldSpec& f) {  // 0 <- K -> K
    Representation m;
    m.field = f;
    m.quiver = pullback_quiver();
    m.dims = {0, 1, 1};
    m.maps = {Mat(f, 0, 1), Mat(f, 1, 1, {Rat(1)})};
    return m;
}

Representation n_rep(const FieldSpec& f) {  // K <- K -> K
    Representation m;
    m.field = f;
    m.quiver = pullback_quiver();
    m.dims = {1, 1, 1};
    m.maps = {Mat(f, 1, 1, {Rat(1)}), Mat(f, 1, 1, {Rat(1)})};
    return m;
}

Representation simple_power(const FieldSpec& f, int t) {
    Representation m;
    m.field = f;
    m.quiver = Quiver(1, {});
    m.dims = {t};
    return m;
}

Representation counterex(const FieldSpec& f) {
    Representation m;
    m.field = f;
    m.quiver = Quiver(2, {{"alpha", 1, 2}, {"beta", 2, 1}});
    m.dims = {1, 2};
    m.maps = {Mat(f, 2, 1, {Rat(1), Rat(0)}), Mat(f, 1, 2, {Rat(0), Rat(1)})};
    m.relations = {Relation{{{Rat(1), Path{{"alpha", "beta"}}}}}};
    return m;
}

Representation diamond_rep(const FieldSpec& f) {
    Representation m;
    m.field = f;
    m.quiver = Quiver(4, {{"alpha", 1, 2}, {"beta", 1, 3}, {"gamma", 2, 4}, {"delta", 3, 4}});
    m.dims = {2, 2, 2, 1};
    m.maps = {Mat::identity(f, 2), Mat::identity(f, 2), Mat(f, 1, 2, {Rat(1), Rat(0)}),
              Mat(f, 1, 2, {Rat(0), Rat(1)})};
    return m;
}

Representation simple(const FieldSpec& f, const Quiver& q, int vertex) {
    Representation m;
    m.field = f;
    m.quiver = q;
    m.dims.assign(static_cast<std::size_t>(q.n_vertices()), 0);
    m.dims[static_cast<std::size_t>(vertex - 1)] = 1;
    for (const Arrow& a : q.arrows())
        m.maps.push_back(Mat(f, m.dims[static_cast<std::size_t>(a.target - 1)],
                             m.dims[static_cast<std::size_t>(a.source - 1)]));
    return m;
}

}  // namespace

TEST_CASE("semisimple power lattices match the subspace census") {
    SubmoduleLattice lat = enumerate_subreps(simple_power(F2, 2));
    CHECK(lat.size() == 5);
    CHECK(atoms_of(lat).size() == 3);
    CHECK(coatoms_of(lat).size() == 3);
    CHECK(mobius_bruteforce(lat) == 2);
    CHECK(is_lattice(lat.poset()));

    // First and last elements are the bounds.
    CHECK(subrep_total_dim(lat.element(lat.bottom())) == 0);
    CHECK(subrep_total_dim(lat.element(lat.top())) == 2);

    auto cbl = count_by_length(lat);
    CHECK(cbl[0] == 1);
    CHECK(cbl[1] == 3);
    CHECK(cbl[2] == 1);

    SubmoduleLattice cube = enumerate_subreps(simple_power(F2, 3));
    CHECK(cube.size() == 16);
    CHECK(atoms_of(cube).size() == 7);
    CHECK(coatoms_of(cube).size() == 7);
    CHECK(mobius_bruteforce(cube) == -8);

    SubmoduleLattice quartic = enumerate_subreps(simple_power(F2, 4));
    CHECK(count_by_length(quartic)[2] == 35);
    CHECK(mobius_bruteforce(quartic) == 64);

    CHECK(mobius_bruteforce(simple_power(F3, 2)) == 3);
    CHECK(mobius_bruteforce(simple(F2, pullback_quiver(), 1)) == -1);
    CHECK(mobius_bruteforce(simple(F3, pullback_quiver(), 3)) == -1);
}

TEST_CASE("atom census equals the s-number for every small power") {
    for (const Int& q : {Int(2), Int(3)}) {
        FieldSpec f = FieldSpec::prime(q);
        for (int t = 1; t <= 4; ++t) {
            SubmoduleLattice lat = enumerate_subreps(simple_power(f, t));
            CHECK(Int(atoms_of(lat).size()) == s_number(t, q));
            CHECK(Int(coatoms_of(lat).size()) == s_number(t, q));
            for (int l = 0; l <= t; ++l)
                CHECK(count_by_length(lat)[l] == gaussian_binomial(t, l, q));
        }
    }
}

TEST_CASE("the two-cycle representation has a four-element chain lattice") {
    for (const FieldSpec& f : {F2, F3}) {
        SubmoduleLattice lat = enumerate_subreps(counterex(f));
        REQUIRE(lat.size() == 4);
        CHECK(subrep_dims(lat.element(0)) == std::vector<int>{0, 0});
        CHECK(subrep_dims(lat.element(1)) == std::vector<int>{0, 1});
        CHECK(subrep_dims(lat.element(2)) == std::vector<int>{1, 1});
        CHECK(subrep_dims(lat.element(3)) == std::vector<int>{1, 2});
        // Chain: every pair comparable.
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) CHECK(lat.poset().leq(i, j));
        CHECK(mobius_bruteforce(lat) == 0);
        for (const Subrep& u : lat.elements())
            CHECK(subrep_dims(u) != std::vector<int>{1, 0});
        CHECK(atoms_of(lat).size() == 1);
        CHECK(weisner_verify(lat, atoms_of(lat)[0]));
    }
}

TEST_CASE("thin enumeration over the infinite field lists support subsets") {
    SubmoduleLattice lat = enumerate_subreps(n_rep(QQ));
    REQUIRE(lat.size() == 5);
    CHECK(subrep_dims(lat.element(0)) == std::vector<int>{0, 0, 0});
    CHECK(subrep_dims(lat.element(1)) == std::vector<int>{0, 0, 1});
    CHECK(subrep_dims(lat.element(2)) == std::vector<int>{1, 0, 0});
    CHECK(subrep_dims(lat.element(3)) == std::vector<int>{1, 0, 1});
    CHECK(subrep_dims(lat.element(4)) == std::vector<int>{1, 1, 1});
    CHECK(mobius_bruteforce(lat) == 0);

    CHECK(enumerate_subreps(l_rep(QQ)).size() == 3);
    CHECK(enumerate_subreps(m_rep(QQ)).size() == 3);

    // A semisimple thin rep: subsets are unconstrained.
    Representation s13 = direct_sum(simple(QQ, pullback_quiver(), 1),
                                    simple(QQ, pullback_quiver(), 3));
    CHECK(enumerate_subreps(s13).size() == 4);
    CHECK(mobius_bruteforce(s13) == 1);
}

TEST_CASE("thin-mode subset route agrees with the depth-first search") {
    for (const Representation& m :
         {l_rep(F2), m_rep(F2), n_rep(F3), simple(F2, pullback_quiver(), 2)}) {
        SubmoduleLattice via_subsets = enumerate_thin(m);
        SubmoduleLattice via_dfs = enumerate_subreps(m);
        REQUIRE(via_subsets.size() == via_dfs.size());
        for (int i = 0; i < via_dfs.size(); ++i)
            CHECK(cmp(via_subsets.element(i), via_dfs.element(i)) == 0);
    }
    CHECK_THROWS_AS(enumerate_thin(counterex(F2)), DomainError);
}

TEST_CASE("enumeration refuses infinite non-thin lattices and oversized results") {
    CHECK_THROWS_AS(enumerate_subreps(simple_power(QQ, 2)), InfiniteModeNonThin);
    CHECK_THROWS_AS(enumerate_subreps(counterex(QQ)), InfiniteModeNonThin);

    try {
        enumerate_subreps(simple_power(F2, 2), 3);
        FAIL("cap should have been exceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.count_so_far == 3);
    }
    CHECK_THROWS_AS(enumerate_subreps(n_rep(QQ), 4), CapExceeded);
    // Cap equal to the lattice size is fine.
    CHECK(enumerate_subreps(simple_power(F2, 2), 5).size() == 5);
}

TEST_CASE("invalid representations are rejected before enumeration") {
    Representation bad = counterex(F2);
    bad.relations = {Relation{{{Rat(1), Path{{"beta", "alpha"}}}}}};
    CHECK_THROWS_AS(enumerate_subreps(bad), ValidationError);
}

TEST_CASE("commutative square diamond over small primes") {
    SubmoduleLattice lat = enumerate_subreps(diamond_rep(F2));
    CHECK(lat.size() == 42);
    CHECK(mobius_bruteforce(lat) == 0);
    CHECK(atoms_of(lat).size() == 3);
    CHECK(coatoms_of(lat).size() == 3);
    CHECK(is_lattice(lat.poset()));
    auto cbl = count_by_length(lat);
    std::vector<Int> want = {1, 3, 7, 11, 9, 7, 3, 1};
    for (int l = 0; l <= 7; ++l) CHECK(cbl[l] == want[static_cast<std::size_t>(l)]);

    CHECK(enumerate_subreps(diamond_rep(F3)).size() == 57);
}

TEST_CASE("enumerated lattices are closed under sum and intersection") {
    for (const Representation& m : {simple_power(F2, 2), counterex(F2),
                                    direct_sum(m_rep(F2), n_rep(F2))}) {
        SubmoduleLattice lat = enumerate_subreps(m);
        for (const Subrep& a : lat.elements()) {
            for (const Subrep& b : lat.elements()) {
                Subrep join, meet;
                for (std::size_t v = 0; v < a.spaces.size(); ++v) {
                    join.spaces.push_back(sum(a.spaces[v], b.spaces[v]));
                    meet.spaces.push_back(intersect(a.spaces[v], b.spaces[v]));
                }
                CHECK_NOTHROW(lat.index_of(join));
                CHECK_NOTHROW(lat.index_of(meet));
            }
        }
        CHECK(is_lattice(lat.poset()));
    }
}

TEST_CASE("weisner identity holds at every atom of module lattices") {
    for (const Representation& m :
         {simple_power(F2, 2), simple_power(F2, 3), simple_power(F3, 2), counterex(F2),
          diamond_rep(F2), direct_sum(m_rep(F2), n_rep(F2))}) {
        SubmoduleLattice lat = enumerate_subreps(m);
        for (const Subrep& atom : atoms_of(lat)) CHECK(weisner_verify(lat, atom));
    }
    SubmoduleLattice lat = enumerate_subreps(simple_power(F2, 2));
    CHECK_THROWS_AS(weisner_verify(lat, lat.element(lat.top())), DomainError);
}

TEST_CASE("interval above a subrep matches the quotient lattice") {
    for (const Representation& m :
         {counterex(F2), simple_power(F3, 2), direct_sum(m_rep(F2), n_rep(F2))}) {
        SubmoduleLattice lat = enumerate_subreps(m);
        for (int i = 0; i < lat.size(); ++i) {
            Representation q = quotient(m, lat.element(i)).rep;
            SubmoduleLattice qlat = enumerate_subreps(q);
            CHECK(interval_elements(lat.poset(), i, lat.top()).size() ==
                  static_cast<std::size_t>(qlat.size()));
            CHECK(mobius_pair(lat.poset(), i, lat.top()) == mobius_bruteforce(qlat));
        }
    }
}

TEST_CASE("poset orthogonality: split pair and non-split witnesses") {
    // L = (K <- K -> 0) and S(3): the beta component of the sum is zero, so
    // every submodule splits along the decomposition.
    Representation s3 = simple(F2, pullback_quiver(), 3);
    OrthoResult ls = is_poset_orthogonal(l_rep(F2), s3);
    CHECK(ls.orthogonal);
    CHECK_FALSE(ls.witness.has_value());
    CHECK(enumerate_subreps(direct_sum(l_rep(F2), s3)).size() == 6);
    CHECK(enumerate_subreps(l_rep(F2)).size() * enumerate_subreps(s3).size() == 6);

    // L and M = (0 <- K -> K) admit no nonzero homomorphisms in either
    // direction, yet the submodule generated by a diagonal vector at vertex 2
    // is (K <- diag -> K) and does not split.  The sum's lattice has exactly
    // one element beyond the nine of product form, so the embedding of the
    // product poset is not onto.
    OrthoResult lm = is_poset_orthogonal(l_rep(F2), m_rep(F2));
    CHECK_FALSE(lm.orthogonal);
    REQUIRE(lm.witness.has_value());
    CHECK(subrep_dims(*lm.witness) == std::vector<int>{1, 1, 1});
    CHECK(lm.witness->spaces[1].basis().at(0, 0) == 1);
    CHECK(lm.witness->spaces[1].basis().at(0, 1) == 1);
    SubmoduleLattice sum_lat = enumerate_subreps(direct_sum(l_rep(F2), m_rep(F2)));
    CHECK(sum_lat.size() == 10);
    CHECK(enumerate_subreps(l_rep(F2)).size() * enumerate_subreps(m_rep(F2)).size() == 9);

    OrthoResult mn = is_poset_orthogonal(m_rep(F2), n_rep(F2));
    CHECK_FALSE(mn.orthogonal);
    REQUIRE(mn.witness.has_value());
    // First non-split element in canonical order: the diagonal line where
    // the two K summands at vertex 3 meet.
    CHECK(subrep_dims(*mn.witness) == std::vector<int>{0, 0, 1});
    const Subspace& w = mn.witness->spaces[2];
    CHECK(w.basis().at(0, 0) == 1);
    CHECK(w.basis().at(0, 1) == 1);

    OrthoResult zero = is_poset_orthogonal(n_rep(F2), simple(F2, pullback_quiver(), 1));
    // S(1) and N share support, and N's copy of S(1) spoils the split.
    CHECK_FALSE(zero.orthogonal);

    Representation nothing = simple(F2, pullback_quiver(), 1);
    nothing.dims = {0, 0, 0};
    nothing.maps = {Mat(F2, 0, 0), Mat(F2, 0, 0)};
    CHECK(is_poset_orthogonal(n_rep(F2), nothing).orthogonal);
}

TEST_CASE("orthogonal direct sums have product posets and multiplicative mu") {
    Quiver q = pullback_quiver();
    struct Pair {
        Representation a, b;
    };
    Representation s1q = simple(F2, q, 1), s2q = simple(F2, q, 2), s3q = simple(F2, q, 3);
    Representation s1sq = direct_sum(s1q, s1q);
    for (const Pair& p : {Pair{l_rep(F2), s3q}, Pair{s1q, s2q}, Pair{s1sq, s3q}}) {
        REQUIRE(is_poset_orthogonal(p.a, p.b).orthogonal);
        SubmoduleLattice la = enumerate_subreps(p.a);
        SubmoduleLattice lb = enumerate_subreps(p.b);
        SubmoduleLattice lsum = enumerate_subreps(direct_sum(p.a, p.b));
        CHECK(lsum.size() == la.size() * lb.size());
        CHECK(mobius_bruteforce(lsum) == mobius_bruteforce(la) * mobius_bruteforce(lb));

        // The canonical embedding (U,V) -> U + V is an order isomorphism
        // onto the sum's lattice.
        FinitePoset prod = product(la.poset(), lb.poset());
        std::vector<int> where(static_cast<std::size_t>(prod.size()));
        for (int i = 0; i < la.size(); ++i) {
            for (int j = 0; j < lb.size(); ++j) {
                Subrep glued;
                for (std::size_t v = 0; v < la.element(i).spaces.size(); ++v) {
                    const Subspace& ua = la.element(i).spaces[v];
                    const Subspace& ub = lb.element(j).spaces[v];
                    Mat rows(F2, ua.dim() + ub.dim(), ua.ambient() + ub.ambient());
                    for (int r = 0; r < ua.dim(); ++r)
                        for (int c = 0; c < ua.ambient(); ++c)
                            rows.set(r, c, ua.basis().at(r, c));
                    for (int r = 0; r < ub.dim(); ++r)
                        for (int c = 0; c < ub.ambient(); ++c)
                            rows.set(ua.dim() + r, ua.ambient() + c, ub.basis().at(r, c));
                    glued.spaces.push_back(Subspace::span(rows));
                }
                where[static_cast<std::size_t>(i * lb.size() + j)] = lsum.index_of(glued);
            }
        }
        for (int x = 0; x < prod.size(); ++x)
            for (int y = 0; y < prod.size(); ++y)
                CHECK(prod.leq(x, y) == lsum.poset().leq(where[static_cast<std::size_t>(x)],
                                                         where[static_cast<std::size_t>(y)]));
    }
}

TEST_CASE("orthocyclicity") {
    Quiver q = pullback_quiver();
    CHECK_FALSE(is_orthocyclic(m_rep(F2), n_rep(F2)));  // Hom(M', N) is nonzero
    CHECK(is_orthocyclic(simple(F2, q, 1), simple(F2, q, 2)));
    CHECK_FALSE(is_orthocyclic(simple(F2, q, 1), simple(F2, q, 1)));
    // Orthocyclic does not imply poset-orthogonal outside the semisimple
    // case: L and M have no homomorphisms between their submodules, but the
    // diagonal submodule of the sum fails to split.
    CHECK(is_orthocyclic(l_rep(F2), m_rep(F2)));
    CHECK_FALSE(is_poset_orthogonal(l_rep(F2), m_rep(F2)).orthogonal);
    CHECK(is_orthocyclic(l_rep(F2), simple(F2, q, 3)));
    // Semisimple with disjoint supports: both notions agree.
    Representation s1sq = direct_sum(simple(F2, q, 1), simple(F2, q, 1));
    CHECK(is_poset_orthogonal(s1sq, simple(F2, q, 3)).orthogonal);
    CHECK(is_orthocyclic(s1sq, simple(F2, q, 3)));
}

TEST_CASE("zero representation has a one-point lattice") {
    Representation z;
    z.field = F2;
    z.quiver = pullback_quiver();
    z.dims = {0, 0, 0};
    z.maps = {Mat(F2, 0, 0), Mat(F2, 0, 0)};
    SubmoduleLattice lat = enumerate_subreps(z);
    CHECK(lat.size() == 1);
    CHECK(atoms_of(lat).empty());
    CHECK(mobius_bruteforce(lat) == 1);
    auto cbl = count_by_length(lat);
    CHECK(cbl[0] == 1);
}

TEST_CASE("worker count does not change the result") {
    for (const Representation& m : {diamond_rep(F2), simple_power(F3, 3),
                                    direct_sum(m_rep(F2), n_rep(F2))}) {
        SubmoduleLattice serial = enumerate_subreps(m, kDefaultLatticeCap, 1);
        SubmoduleLattice parallel = enumerate_subreps(m, kDefaultLatticeCap, 4);
        REQUIRE(serial.size() == parallel.size());
        for (int i = 0; i < serial.size(); ++i)
            CHECK(cmp(serial.element(i), parallel.element(i)) == 0);
    }
}

TEST_CASE("json and dot exports") {
    SubmoduleLattice lat = enumerate_subreps(simple_power(F2, 2));
    auto j = lattice_to_json(lat);
    CHECK(j["size"] == 5);
    CHECK(j["field"] == "2");
    CHECK(j["elements"].size() == 5);
    CHECK(j["elements"][0]["total_dim"] == 0);
    CHECK(j["elements"][4]["dims"][0] == 2);
    // One basis row per dimension, entries as exact strings.
    CHECK(j["elements"][1]["bases"][0].size() == 1);
    CHECK(j["elements"][1]["bases"][0][0][0] == "0");
    CHECK(j["elements"][1]["bases"][0][0][1] == "1");
    CHECK(j["covers"].size() == lat.poset().covers().size());
    CHECK(j["mobius_from_bottom"][0] == "1");
    CHECK(j["mobius_from_bottom"][4] == "2");
    CHECK(j["mobius_to_top"][4] == "1");

    std::string dot = lattice_to_dot(lat);
    CHECK(dot.find("digraph lattice") != std::string::npos);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("[0]") != std::string::npos);
    CHECK(dot.find("[2]") != std::string::npos);
}
