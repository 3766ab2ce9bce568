#include "qmob/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace qmob {

namespace {

std::string dims_label(const Subrep& u) {
    std::string s = "[";
    for (std::size_t v = 0; v < u.spaces.size(); ++v) {
        if (v) s += ",";
        s += std::to_string(u.spaces[v].dim());
    }
    return s + "]";
}

std::vector<Subrep> sort_canonical(std::vector<Subrep> elems) {
    std::sort(elems.begin(), elems.end(),
              [](const Subrep& a, const Subrep& b) { return cmp(a, b) < 0; });
    elems.erase(std::unique(elems.begin(), elems.end(),
                            [](const Subrep& a, const Subrep& b) { return cmp(a, b) == 0; }),
                elems.end());
    return elems;
}

FinitePoset build_poset(const std::vector<Subrep>& elems) {
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> dims;
    dims.reserve(static_cast<std::size_t>(n));
    for (const Subrep& u : elems) dims.push_back(subrep_dims(u));

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (const Subrep& u : elems) labels.push_back(dims_label(u));

    std::vector<std::vector<bool>> leq_matrix(static_cast<std::size_t>(n),
                                              std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                leq_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
                continue;
            }
            // Cheap per-vertex dimension filter before subspace containment.
            bool possible = true;
            for (std::size_t v = 0; v < dims[static_cast<std::size_t>(i)].size(); ++v)
                if (dims[static_cast<std::size_t>(i)][v] > dims[static_cast<std::size_t>(j)][v]) {
                    possible = false;
                    break;
                }
            if (!possible) continue;
            bool below = true;
            for (std::size_t v = 0; v < elems[static_cast<std::size_t>(i)].spaces.size(); ++v)
                if (!leq(elems[static_cast<std::size_t>(i)].spaces[v],
                         elems[static_cast<std::size_t>(j)].spaces[v])) {
                    below = false;
                    break;
                }
            leq_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = below;
        }
    }
    return FinitePoset(n, std::move(labels), leq_matrix);
}

// Per-vertex subspace lists for the depth-first search.  The bound only
// guards against absurd vertex dimensions; the real budget is the result cap.
std::vector<std::vector<Subspace>> vertex_candidates(const Representation& m,
                                                     std::uint64_t cap) {
    std::uint64_t bound = std::max<std::uint64_t>(cap, 2000000);
    std::vector<std::vector<Subspace>> cands;
    for (int d : m.dims) cands.push_back(all_subspaces(m.field, d, bound));
    return cands;
}

struct DfsPlan {
    std::vector<int> order;  // vertex ids, assignment order
    // Arrows whose source is already assigned when the position is reached
    // (their images force a lower bound), and arrows into already-assigned
    // targets (checked against the candidate directly).
    std::vector<std::vector<std::pair<int, int>>> forced;    // (arrow, source position)
    std::vector<std::vector<std::pair<int, int>>> backward;  // (arrow, target position)
};

DfsPlan make_plan(const Representation& m) {
    DfsPlan plan;
    if (auto topo = topological_order(m.quiver)) {
        plan.order = *topo;
    } else {
        for (int v = 1; v <= m.quiver.n_vertices(); ++v) plan.order.push_back(v);
    }
    std::vector<int> pos(static_cast<std::size_t>(m.quiver.n_vertices()) + 1, 0);
    for (std::size_t k = 0; k < plan.order.size(); ++k)
        pos[static_cast<std::size_t>(plan.order[k])] = static_cast<int>(k);
    plan.forced.resize(plan.order.size());
    plan.backward.resize(plan.order.size());
    for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
        int sp = pos[static_cast<std::size_t>(m.quiver.arrows()[a].source)];
        int tp = pos[static_cast<std::size_t>(m.quiver.arrows()[a].target)];
        if (sp < tp)
            plan.forced[static_cast<std::size_t>(tp)].push_back({static_cast<int>(a), sp});
        else if (tp < sp)
            plan.backward[static_cast<std::size_t>(sp)].push_back({static_cast<int>(a), tp});
        // sp == tp is a loop arrow; quivers with loops are cyclic and the
        // candidate filter below handles them at assignment time.
        else
            plan.backward[static_cast<std::size_t>(sp)].push_back({static_cast<int>(a), tp});
    }
    return plan;
}

struct DfsShared {
    const Representation* m;
    const DfsPlan* plan;
    const std::vector<std::vector<Subspace>>* cands;
    std::uint64_t cap;
    std::atomic<std::uint64_t> found{0};
    std::atomic<bool> over{false};
};

void dfs(DfsShared& sh, std::size_t pos, std::vector<Subspace>& chosen,
         std::vector<Subrep>& out) {
    if (sh.over.load(std::memory_order_relaxed)) return;
    const DfsPlan& plan = *sh.plan;
    if (pos == plan.order.size()) {
        if (sh.found.fetch_add(1) + 1 > sh.cap) {
            sh.over.store(true);
            return;
        }
        Subrep u;
        u.spaces.resize(chosen.size(), Subspace::zero(sh.m->field, 0));
        for (std::size_t k = 0; k < plan.order.size(); ++k)
            u.spaces[static_cast<std::size_t>(plan.order[k] - 1)] = chosen[k];
        out.push_back(std::move(u));
        return;
    }
    int v = plan.order[pos];
    Subspace low = Subspace::zero(sh.m->field, sh.m->dims[static_cast<std::size_t>(v - 1)]);
    for (auto [a, sp] : plan.forced[pos])
        low = sum(low, apply(sh.m->maps[static_cast<std::size_t>(a)],
                             chosen[static_cast<std::size_t>(sp)]));
    for (const Subspace& w : (*sh.cands)[static_cast<std::size_t>(v - 1)]) {
        if (!leq(low, w)) continue;
        bool ok = true;
        for (auto [a, tp] : plan.backward[pos]) {
            const Subspace& tgt = static_cast<std::size_t>(tp) == pos
                                      ? w
                                      : chosen[static_cast<std::size_t>(tp)];
            if (!leq(apply(sh.m->maps[static_cast<std::size_t>(a)], w), tgt)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen[pos] = w;
        dfs(sh, pos + 1, chosen, out);
        if (sh.over.load(std::memory_order_relaxed)) return;
    }
}

std::vector<Subrep> dfs_enumerate(const Representation& m, std::uint64_t cap, int threads) {
    auto cands = vertex_candidates(m, cap);
    DfsPlan plan = make_plan(m);
    DfsShared sh;
    sh.m = &m;
    sh.plan = &plan;
    sh.cands = &cands;
    sh.cap = cap;

    const std::vector<Subspace>& first = cands[static_cast<std::size_t>(plan.order[0] - 1)];
    int t = std::max(1, std::min<int>(threads, static_cast<int>(first.size())));

    std::vector<std::vector<Subrep>> results(static_cast<std::size_t>(t));
    auto worker = [&](int id) {
        std::vector<Subspace> chosen(plan.order.size(),
                                     Subspace::zero(m.field, 0));
        std::vector<Subrep> local;
        for (std::size_t i = static_cast<std::size_t>(id); i < first.size();
             i += static_cast<std::size_t>(t)) {
            if (sh.over.load(std::memory_order_relaxed)) break;
            const Subspace& w = first[i];
            bool ok = true;
            for (auto [a, tp] : plan.backward[0]) {
                (void)tp;  // can only point at position 0 itself (a loop)
                if (!leq(apply(m.maps[static_cast<std::size_t>(a)], w), w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen[0] = w;
            dfs(sh, 1, chosen, local);
        }
        results[static_cast<std::size_t>(id)] = std::move(local);
    };

    if (t == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int id = 0; id < t; ++id) pool.emplace_back(worker, id);
        for (std::thread& th : pool) th.join();
    }
    if (sh.over.load()) throw CapExceeded(cap, "submodule lattice exceeds the cap");

    std::vector<Subrep> all;
    for (auto& r : results)
        for (Subrep& u : r) all.push_back(std::move(u));
    return all;
}

void check_valid(const Representation& m) {
    auto bad = validate(m);
    if (!bad.empty()) throw ValidationError(bad);
}

}  // namespace

SubmoduleLattice::SubmoduleLattice(Representation base, std::vector<Subrep> elements)
    : base_(std::move(base)),
      elements_(sort_canonical(std::move(elements))),
      poset_(build_poset(elements_)) {
    if (elements_.empty()) throw DomainError("a submodule lattice cannot be empty");
}

int SubmoduleLattice::index_of(const Subrep& u) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), u,
                               [](const Subrep& a, const Subrep& b) { return cmp(a, b) < 0; });
    if (it == elements_.end() || cmp(*it, u) != 0)
        throw DomainError("subrep is not an element of this lattice");
    return static_cast<int>(it - elements_.begin());
}

SubmoduleLattice enumerate_subreps(const Representation& m, std::uint64_t cap, int threads) {
    check_valid(m);
    if (m.field.is_infinite()) {
        if (!is_thin(m))
            throw InfiniteModeNonThin(
                "refusing to enumerate over an infinite field: the representation is not "
                "thin, so its lattice may be infinite");
        return enumerate_thin(m, cap);
    }
    return SubmoduleLattice(m, dfs_enumerate(m, cap, threads));
}

SubmoduleLattice enumerate_thin(const Representation& m, std::uint64_t cap) {
    check_valid(m);
    if (!is_thin(m)) throw DomainError("thin-mode enumeration needs a thin representation");

    std::vector<int> support;
    for (int v = 1; v <= m.quiver.n_vertices(); ++v)
        if (m.dims[static_cast<std::size_t>(v - 1)] == 1) support.push_back(v);
    // Arrows with a nonzero (1x1) structural map force support closure.
    std::vector<std::pair<int, int>> edges;  // (source slot, target slot) in support
    auto slot = [&](int v) {
        return static_cast<int>(std::lower_bound(support.begin(), support.end(), v) -
                                support.begin());
    };
    for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
        if (m.maps[a].is_zero()) continue;
        edges.push_back({slot(m.quiver.arrows()[a].source), slot(m.quiver.arrows()[a].target)});
    }

    std::vector<Subrep> elems;
    int k = static_cast<int>(support.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        bool closed = true;
        for (auto [s, t] : edges)
            if ((mask >> s & 1) && !(mask >> t & 1)) {
                closed = false;
                break;
            }
        if (!closed) continue;
        if (elems.size() + 1 > cap) throw CapExceeded(cap, "submodule lattice exceeds the cap");
        Subrep u;
        for (int v = 1; v <= m.quiver.n_vertices(); ++v)
            u.spaces.push_back(Subspace::zero(m.field, m.dims[static_cast<std::size_t>(v - 1)]));
        for (int s = 0; s < k; ++s)
            if (mask >> s & 1)
                u.spaces[static_cast<std::size_t>(support[static_cast<std::size_t>(s)] - 1)] =
                    Subspace::full(m.field, 1);
        elems.push_back(std::move(u));
    }
    return SubmoduleLattice(m, std::move(elems));
}

Int mobius_bruteforce(const SubmoduleLattice& lat) {
    return mobius_row_from(lat.poset(), lat.bottom())[static_cast<std::size_t>(lat.top())];
}

Int mobius_bruteforce(const Representation& m, std::uint64_t cap, int threads) {
    return mobius_bruteforce(enumerate_subreps(m, cap, threads));
}

std::vector<Subrep> atoms_of(const SubmoduleLattice& lat) {
    std::vector<Subrep> out;
    for (int i : atoms(lat.poset())) out.push_back(lat.element(i));
    return out;
}

std::vector<Subrep> coatoms_of(const SubmoduleLattice& lat) {
    std::vector<Subrep> out;
    for (int i : coatoms(lat.poset())) out.push_back(lat.element(i));
    return out;
}

std::map<int, Int> count_by_length(const SubmoduleLattice& lat) {
    std::map<int, Int> counts;
    for (const Subrep& u : lat.elements()) counts[subrep_total_dim(u)] += 1;
    return counts;
}

OrthoResult is_poset_orthogonal(const Representation& m, const Representation& n,
                                std::uint64_t cap, int threads) {
    Representation s = direct_sum(m, n);
    SubmoduleLattice lat = enumerate_subreps(s, cap, threads);
    Subrep left = embed_left(m, n), right = embed_right(m, n);
    for (const Subrep& u : lat.elements()) {
        int split = 0;
        for (std::size_t v = 0; v < u.spaces.size(); ++v)
            split += intersect(u.spaces[v], left.spaces[v]).dim() +
                     intersect(u.spaces[v], right.spaces[v]).dim();
        if (split != subrep_total_dim(u)) return {false, u};
    }
    return {true, std::nullopt};
}

bool is_orthocyclic(const Representation& m, const Representation& n, std::uint64_t cap) {
    SubmoduleLattice lm = enumerate_subreps(m, cap);
    for (const Subrep& u : lm.elements())
        if (hom_dim(sub_to_rep(m, u).rep, n) != 0) return false;
    SubmoduleLattice ln = enumerate_subreps(n, cap);
    for (const Subrep& u : ln.elements())
        if (hom_dim(sub_to_rep(n, u).rep, m) != 0) return false;
    return true;
}

bool weisner_verify(const SubmoduleLattice& lat, const Subrep& atom) {
    return weisner_check(lat.poset(), lat.index_of(atom));
}

nlohmann::ordered_json lattice_to_json(const SubmoduleLattice& lat) {
    nlohmann::ordered_json j;
    j["field"] = lat.base().field.to_string();
    if (!lat.base().name.empty()) j["name"] = lat.base().name;
    j["dimension_vector"] = lat.base().dims;
    j["size"] = lat.size();

    nlohmann::ordered_json elems = nlohmann::ordered_json::array();
    for (int i = 0; i < lat.size(); ++i) {
        const Subrep& u = lat.element(i);
        nlohmann::ordered_json e;
        e["index"] = i;
        e["dims"] = subrep_dims(u);
        e["total_dim"] = subrep_total_dim(u);
        nlohmann::ordered_json bases = nlohmann::ordered_json::array();
        for (const Subspace& s : u.spaces) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int r = 0; r < s.dim(); ++r) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (int c = 0; c < s.ambient(); ++c)
                    row.push_back(scalar_to_string(s.basis().at(r, c)));
                rows.push_back(std::move(row));
            }
            bases.push_back(std::move(rows));
        }
        e["bases"] = std::move(bases);
        elems.push_back(std::move(e));
    }
    j["elements"] = std::move(elems);

    nlohmann::ordered_json covers_json = nlohmann::ordered_json::array();
    for (auto [lo, hi] : lat.poset().covers())
        covers_json.push_back(nlohmann::ordered_json::array({lo, hi}));
    j["covers"] = std::move(covers_json);

    auto row = mobius_row_from(lat.poset(), lat.bottom());
    nlohmann::ordered_json from_bottom = nlohmann::ordered_json::array();
    for (const Int& x : row) from_bottom.push_back(x.get_str());
    j["mobius_from_bottom"] = std::move(from_bottom);

    auto col = mobius_col_to(lat.poset(), lat.top());
    nlohmann::ordered_json to_top = nlohmann::ordered_json::array();
    for (const Int& x : col) to_top.push_back(x.get_str());
    j["mobius_to_top"] = std::move(to_top);
    return j;
}

std::string lattice_to_dot(const SubmoduleLattice& lat) {
    return to_dot(lat.poset(), "lattice");
}

}  // namespace qmob
