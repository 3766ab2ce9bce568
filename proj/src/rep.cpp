#include "qmob/rep.hpp"

#include <algorithm>
#include <numeric>

namespace qmob {

namespace {

std::string path_str(const Path& p) {
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += '.';
        s += p.arrows[i];
    }
    return s;
}

std::string relation_str(const Relation& r) {
    std::string s;
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        if (i) s += " + ";
        s += scalar_to_string(r.terms[i].coeff) + "*" + path_str(r.terms[i].path);
    }
    return s;
}

bool same_quiver(const Quiver& a, const Quiver& b) {
    if (a.n_vertices() != b.n_vertices() || a.arrows().size() != b.arrows().size())
        return false;
    for (std::size_t i = 0; i < a.arrows().size(); ++i) {
        const Arrow& x = a.arrows()[i];
        const Arrow& y = b.arrows()[i];
        if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
}

bool same_relation(const Relation& a, const Relation& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].coeff != b.terms[i].coeff ||
            a.terms[i].path.arrows != b.terms[i].path.arrows)
            return false;
    return true;
}

}  // namespace

std::vector<std::string> validate(const Representation& m) {
    std::vector<std::string> bad;
    int n = m.quiver.n_vertices();
    if (static_cast<int>(m.dims.size()) != n) {
        bad.push_back("dimension vector has " + std::to_string(m.dims.size()) +
                      " entries for " + std::to_string(n) + " vertices");
        return bad;
    }
    for (int v = 0; v < n; ++v)
        if (m.dims[static_cast<std::size_t>(v)] < 0)
            bad.push_back("negative dimension at vertex " + std::to_string(v + 1));
    if (m.maps.size() != m.quiver.arrows().size()) {
        bad.push_back("expected one matrix per arrow");
        return bad;
    }
    bool shapes_ok = true;
    for (std::size_t i = 0; i < m.maps.size(); ++i) {
        const Arrow& a = m.quiver.arrows()[i];
        const Mat& mat = m.maps[i];
        if (mat.field() != m.field) {
            bad.push_back("matrix for '" + a.name + "' is over the wrong field");
            shapes_ok = false;
            continue;
        }
        int want_rows = m.dims[static_cast<std::size_t>(a.target - 1)];
        int want_cols = m.dims[static_cast<std::size_t>(a.source - 1)];
        if (mat.rows() != want_rows || mat.cols() != want_cols) {
            bad.push_back("matrix for '" + a.name + "' has shape " +
                          std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
                          ", expected " + std::to_string(want_rows) + "x" +
                          std::to_string(want_cols));
            shapes_ok = false;
        }
    }
    if (!shapes_ok || !bad.empty()) return bad;
    for (const Relation& r : m.relations) {
        try {
            check_relation(m.quiver, r);
        } catch (const DomainError& e) {
            bad.push_back(std::string("bad relation: ") + e.what());
            continue;
        }
        if (!evaluate_relation(m, r).is_zero())
            bad.push_back("relation " + relation_str(r) + " evaluates to a nonzero matrix");
    }
    return bad;
}

Mat path_matrix(const Representation& m, const Path& p) {
    check_path(m.quiver, p);
    Mat cur = m.maps[static_cast<std::size_t>(m.quiver.arrow_index(p.arrows[0]))];
    for (std::size_t i = 1; i < p.arrows.size(); ++i)
        cur = m.maps[static_cast<std::size_t>(m.quiver.arrow_index(p.arrows[i]))].mul(cur);
    return cur;
}

Mat evaluate_relation(const Representation& m, const Relation& r) {
    check_relation(m.quiver, r);
    int src = path_source(m.quiver, r.terms[0].path);
    int tgt = path_target(m.quiver, r.terms[0].path);
    Mat acc(m.field, m.dims[static_cast<std::size_t>(tgt - 1)],
            m.dims[static_cast<std::size_t>(src - 1)]);
    for (const RelationTerm& t : r.terms) {
        Mat pm = path_matrix(m, t.path);
        for (int i = 0; i < acc.rows(); ++i)
            for (int j = 0; j < acc.cols(); ++j)
                acc.set(i, j, m.field.add(acc.at(i, j), m.field.mul(t.coeff, pm.at(i, j))));
    }
    return acc;
}

std::vector<int> dimension_vector(const Representation& m) { return m.dims; }

int total_dim(const Representation& m) {
    return std::accumulate(m.dims.begin(), m.dims.end(), 0);
}

bool is_thin(const Representation& m) {
    return std::all_of(m.dims.begin(), m.dims.end(), [](int d) { return d <= 1; });
}

bool is_semisimple(const Representation& m) {
    return std::all_of(m.maps.begin(), m.maps.end(), [](const Mat& x) { return x.is_zero(); });
}

Subrep zero_subrep(const Representation& m) {
    Subrep u;
    for (int d : m.dims) u.spaces.push_back(Subspace::zero(m.field, d));
    return u;
}

Subrep full_subrep(const Representation& m) {
    Subrep u;
    for (int d : m.dims) u.spaces.push_back(Subspace::full(m.field, d));
    return u;
}

std::vector<int> subrep_dims(const Subrep& u) {
    std::vector<int> d;
    for (const Subspace& s : u.spaces) d.push_back(s.dim());
    return d;
}

int subrep_total_dim(const Subrep& u) {
    int t = 0;
    for (const Subspace& s : u.spaces) t += s.dim();
    return t;
}

bool is_subrep_closed(const Representation& m, const Subrep& u) {
    int n = m.quiver.n_vertices();
    if (static_cast<int>(u.spaces.size()) != n)
        throw AmbientMismatch("subrep has the wrong number of vertex spaces");
    for (int v = 0; v < n; ++v) {
        const Subspace& s = u.spaces[static_cast<std::size_t>(v)];
        if (s.ambient() != m.dims[static_cast<std::size_t>(v)] || s.field() != m.field)
            throw AmbientMismatch("subrep space at vertex " + std::to_string(v + 1) +
                                  " does not live in the representation");
    }
    for (std::size_t i = 0; i < m.maps.size(); ++i) {
        const Arrow& a = m.quiver.arrows()[i];
        if (!leq(apply(m.maps[i], u.spaces[static_cast<std::size_t>(a.source - 1)]),
                 u.spaces[static_cast<std::size_t>(a.target - 1)]))
            return false;
    }
    return true;
}

void check_subrep(const Representation& m, const Subrep& u) {
    if (!is_subrep_closed(m, u))
        throw NotASubrep("vertex spaces are not closed under the structural maps");
}

int cmp(const Subrep& a, const Subrep& b) {
    if (a.spaces.size() != b.spaces.size())
        throw AmbientMismatch("comparing subreps of different representations");
    int ta = subrep_total_dim(a), tb = subrep_total_dim(b);
    if (ta != tb) return ta < tb ? -1 : 1;
    for (std::size_t v = 0; v < a.spaces.size(); ++v) {
        int da = a.spaces[v].dim(), db = b.spaces[v].dim();
        if (da != db) return da < db ? -1 : 1;
    }
    for (std::size_t v = 0; v < a.spaces.size(); ++v) {
        int c = cmp(a.spaces[v], b.spaces[v]);
        if (c != 0) return c;
    }
    return 0;
}

Subrep socle(const Representation& m) {
    Subrep u;
    for (int v = 1; v <= m.quiver.n_vertices(); ++v) {
        // Empty intersection (a sink) is the full space.
        Subspace s = Subspace::full(m.field, m.dims[static_cast<std::size_t>(v - 1)]);
        for (int i : m.quiver.out_arrows(v))
            s = intersect(s, kernel(m.maps[static_cast<std::size_t>(i)]));
        u.spaces.push_back(std::move(s));
    }
    return u;
}

Subrep radical(const Representation& m) {
    Subrep u;
    for (int v = 1; v <= m.quiver.n_vertices(); ++v) {
        Subspace s = Subspace::zero(m.field, m.dims[static_cast<std::size_t>(v - 1)]);
        for (int i : m.quiver.in_arrows(v))
            s = sum(s, image(m.maps[static_cast<std::size_t>(i)]));
        u.spaces.push_back(std::move(s));
    }
    return u;
}

QuotientResult quotient(const Representation& m, const Subrep& u) {
    check_subrep(m, u);
    int n = m.quiver.n_vertices();
    QuotientResult out;
    out.rep.field = m.field;
    out.rep.quiver = m.quiver;
    out.rep.relations = m.relations;

    std::vector<Mat> sect;
    for (int v = 0; v < n; ++v) {
        const Subspace& s = u.spaces[static_cast<std::size_t>(v)];
        int amb = m.dims[static_cast<std::size_t>(v)];
        std::vector<bool> is_piv(static_cast<std::size_t>(amb), false);
        for (int p : s.pivots()) is_piv[static_cast<std::size_t>(p)] = true;
        std::vector<int> comp;
        for (int c = 0; c < amb; ++c)
            if (!is_piv[static_cast<std::size_t>(c)]) comp.push_back(c);
        int qdim = amb - s.dim();

        // Reduction mod u zeroes the pivot coordinates; what remains of a
        // standard basis vector at the complement coordinates gives the
        // projection column.
        Mat proj(m.field, qdim, amb);
        for (int j = 0; j < qdim; ++j) {
            proj.set(j, comp[static_cast<std::size_t>(j)], Rat(1));
            for (int i = 0; i < s.dim(); ++i)
                proj.set(j, s.pivots()[static_cast<std::size_t>(i)],
                         m.field.neg(s.basis().at(i, comp[static_cast<std::size_t>(j)])));
        }
        Mat sec(m.field, amb, qdim);
        for (int j = 0; j < qdim; ++j) sec.set(comp[static_cast<std::size_t>(j)], j, Rat(1));

        out.rep.dims.push_back(qdim);
        out.complement_cols.push_back(std::move(comp));
        out.projection.mats.push_back(std::move(proj));
        sect.push_back(std::move(sec));
    }
    for (std::size_t i = 0; i < m.maps.size(); ++i) {
        const Arrow& a = m.quiver.arrows()[i];
        out.rep.maps.push_back(out.projection.mats[static_cast<std::size_t>(a.target - 1)]
                                   .mul(m.maps[i])
                                   .mul(sect[static_cast<std::size_t>(a.source - 1)]));
    }
    auto bad = validate(out.rep);
    if (!bad.empty()) throw DomainError("quotient failed validation: " + bad[0]);
    return out;
}

SubToRepResult sub_to_rep(const Representation& m, const Subrep& u) {
    check_subrep(m, u);
    SubToRepResult out;
    out.rep.field = m.field;
    out.rep.quiver = m.quiver;
    out.rep.relations = m.relations;
    for (const Subspace& s : u.spaces) {
        out.rep.dims.push_back(s.dim());
        out.embedding.mats.push_back(s.basis().transpose());
    }
    for (std::size_t i = 0; i < m.maps.size(); ++i) {
        const Arrow& a = m.quiver.arrows()[i];
        const Subspace& src = u.spaces[static_cast<std::size_t>(a.source - 1)];
        const Subspace& tgt = u.spaces[static_cast<std::size_t>(a.target - 1)];
        // Images of the source basis vectors, one per column; closure puts
        // them in span(tgt), where RREF coordinates are read off the pivots.
        Mat w = m.maps[i].mul(src.basis().transpose());
        Mat r(m.field, tgt.dim(), src.dim());
        for (int row = 0; row < tgt.dim(); ++row)
            for (int col = 0; col < src.dim(); ++col)
                r.set(row, col, w.at(tgt.pivots()[static_cast<std::size_t>(row)], col));
        out.rep.maps.push_back(std::move(r));
    }
    auto bad = validate(out.rep);
    if (!bad.empty()) throw DomainError("subrepresentation failed validation: " + bad[0]);
    return out;
}

Representation direct_sum(const Representation& m, const Representation& n) {
    if (m.field != n.field) throw Incompatible("direct sum over different fields");
    if (!same_quiver(m.quiver, n.quiver)) throw Incompatible("direct sum over different quivers");
    Representation s;
    s.field = m.field;
    s.quiver = m.quiver;
    for (std::size_t v = 0; v < m.dims.size(); ++v) s.dims.push_back(m.dims[v] + n.dims[v]);
    for (std::size_t i = 0; i < m.maps.size(); ++i) {
        const Mat& a = m.maps[i];
        const Mat& b = n.maps[i];
        Mat block(s.field, a.rows() + b.rows(), a.cols() + b.cols());
        for (int r = 0; r < a.rows(); ++r)
            for (int c = 0; c < a.cols(); ++c) block.set(r, c, a.at(r, c));
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) block.set(a.rows() + r, a.cols() + c, b.at(r, c));
        s.maps.push_back(std::move(block));
    }
    s.relations = m.relations;
    for (const Relation& r : n.relations) {
        bool dup = false;
        for (const Relation& have : s.relations)
            if (same_relation(have, r)) {
                dup = true;
                break;
            }
        if (!dup) s.relations.push_back(r);
    }
    auto bad = validate(s);
    if (!bad.empty())
        throw Incompatible("direct summands do not satisfy a common set of relations: " + bad[0]);
    return s;
}

Subrep embed_left(const Representation& m, const Representation& n) {
    Subrep u;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Mat rows(m.field, m.dims[v], m.dims[v] + n.dims[v]);
        for (int i = 0; i < m.dims[v]; ++i) rows.set(i, i, Rat(1));
        u.spaces.push_back(Subspace::span(rows));
    }
    return u;
}

Subrep embed_right(const Representation& m, const Representation& n) {
    Subrep u;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Mat rows(m.field, n.dims[v], m.dims[v] + n.dims[v]);
        for (int i = 0; i < n.dims[v]; ++i) rows.set(i, m.dims[v] + i, Rat(1));
        u.spaces.push_back(Subspace::span(rows));
    }
    return u;
}

Subrep restrict_sinking(const Representation& m, const std::vector<int>& S) {
    if (!is_sinking(m.quiver, S))
        throw NotSinking("vertex set is not closed under outgoing arrows");
    std::vector<bool> in(static_cast<std::size_t>(m.quiver.n_vertices()) + 1, false);
    for (int v : S) in[static_cast<std::size_t>(v)] = true;
    Subrep u;
    for (int v = 1; v <= m.quiver.n_vertices(); ++v) {
        int d = m.dims[static_cast<std::size_t>(v - 1)];
        u.spaces.push_back(in[static_cast<std::size_t>(v)] ? Subspace::full(m.field, d)
                                                           : Subspace::zero(m.field, d));
    }
    return u;
}

int hom_dim(const Representation& m, const Representation& n) {
    if (m.field != n.field) throw Incompatible("hom over different fields");
    if (!same_quiver(m.quiver, n.quiver)) throw Incompatible("hom over different quivers");
    int nv = m.quiver.n_vertices();
    // Unknowns: the entries of each phi_v (shape dim_N(v) x dim_M(v)),
    // flattened row-major per vertex.
    std::vector<int> off(static_cast<std::size_t>(nv) + 1, 0);
    for (int v = 1; v <= nv; ++v)
        off[static_cast<std::size_t>(v)] =
            off[static_cast<std::size_t>(v - 1)] +
            n.dims[static_cast<std::size_t>(v - 1)] * m.dims[static_cast<std::size_t>(v - 1)];
    int unknowns = off[static_cast<std::size_t>(nv)];

    int eqs = 0;
    for (const Arrow& a : m.quiver.arrows())
        eqs += n.dims[static_cast<std::size_t>(a.target - 1)] *
               m.dims[static_cast<std::size_t>(a.source - 1)];

    Mat sys(m.field, eqs, unknowns);
    int row = 0;
    for (std::size_t ai = 0; ai < m.quiver.arrows().size(); ++ai) {
        const Arrow& a = m.quiver.arrows()[ai];
        int s = a.source - 1, t = a.target - 1;
        int dMs = m.dims[static_cast<std::size_t>(s)], dMt = m.dims[static_cast<std::size_t>(t)];
        int dNt = n.dims[static_cast<std::size_t>(t)], dNs = n.dims[static_cast<std::size_t>(s)];
        // Equation (i,j): sum_k phi_t[i,k] * M_a[k,j] - sum_k N_a[i,k] * phi_s[k,j] = 0.
        for (int i = 0; i < dNt; ++i)
            for (int j = 0; j < dMs; ++j) {
                for (int k = 0; k < dMt; ++k)
                    sys.set(row, off[static_cast<std::size_t>(t)] + i * dMt + k,
                            m.maps[ai].at(k, j));
                for (int k = 0; k < dNs; ++k) {
                    int col = off[static_cast<std::size_t>(s)] + k * dMs + j;
                    sys.set(row, col,
                            m.field.sub(sys.at(row, col), n.maps[ai].at(i, k)));
                }
                ++row;
            }
    }
    return unknowns - rref(sys).second;
}

bool is_morphism(const Representation& m, const Representation& n, const RepMorphism& phi) {
    if (m.field != n.field || !same_quiver(m.quiver, n.quiver)) return false;
    if (static_cast<int>(phi.mats.size()) != m.quiver.n_vertices()) return false;
    for (std::size_t v = 0; v < phi.mats.size(); ++v)
        if (phi.mats[v].rows() != n.dims[v] || phi.mats[v].cols() != m.dims[v] ||
            phi.mats[v].field() != m.field)
            return false;
    for (std::size_t i = 0; i < m.quiver.arrows().size(); ++i) {
        const Arrow& a = m.quiver.arrows()[i];
        if (phi.mats[static_cast<std::size_t>(a.target - 1)].mul(m.maps[i]) !=
            n.maps[i].mul(phi.mats[static_cast<std::size_t>(a.source - 1)]))
            return false;
    }
    return true;
}

int morphism_total_rank(const RepMorphism& phi) {
    int r = 0;
    for (const Mat& m : phi.mats) r += rref(m).second;
    return r;
}

}  // namespace qmob
