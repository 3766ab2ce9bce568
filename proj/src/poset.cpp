#include "qmob/poset.hpp"

#include <algorithm>
#include <sstream>

namespace qmob {

namespace {

std::vector<std::string> default_labels(int n, std::vector<std::string> labels) {
    if (labels.empty()) {
        labels.reserve(std::size_t(n));
        for (int i = 0; i < n; ++i)
            labels.push_back(std::to_string(i));
    }
    if (int(labels.size()) != n)
        throw DomainError("label count does not match poset size");
    return labels;
}

} // namespace

FinitePoset::FinitePoset(int n, std::vector<std::string> labels,
                         const std::vector<std::vector<bool>>& leq_matrix)
    : n_(n), words_((n + 63) / 64), labels_(default_labels(n, std::move(labels))) {
    if (n < 0)
        throw DomainError("poset size must be nonnegative");
    if (int(leq_matrix.size()) != n)
        throw DomainError("leq matrix row count does not match poset size");
    up_.assign(std::size_t(n) * std::size_t(words_), 0);
    for (int i = 0; i < n; ++i) {
        if (int(leq_matrix[std::size_t(i)].size()) != n)
            throw DomainError("leq matrix is not square");
        for (int j = 0; j < n; ++j)
            if (leq_matrix[std::size_t(i)][std::size_t(j)])
                up_[row_off(i) + std::size_t(j >> 6)] |= std::uint64_t(1) << (j & 63);
    }
    validate_and_finish();
}

FinitePoset FinitePoset::from_relations(int n, std::vector<std::string> labels,
                                        const std::vector<std::pair<int, int>>& pairs) {
    FinitePoset p;
    p.n_ = n;
    p.words_ = (n + 63) / 64;
    p.labels_ = default_labels(n, std::move(labels));
    if (n < 0)
        throw DomainError("poset size must be nonnegative");
    p.up_.assign(std::size_t(n) * std::size_t(p.words_), 0);
    auto set_bit = [&](int i, int j) {
        p.up_[p.row_off(i) + std::size_t(j >> 6)] |= std::uint64_t(1) << (j & 63);
    };
    for (int i = 0; i < n; ++i)
        set_bit(i, i);
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw DomainError("relation endpoint out of range");
        set_bit(x, y);
    }
    // Warshall closure on the bit rows.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.leq(i, k))
                for (int w = 0; w < p.words_; ++w)
                    p.up_[p.row_off(i) + std::size_t(w)] |=
                        p.up_[p.row_off(k) + std::size_t(w)];
    p.validate_and_finish();
    return p;
}

void FinitePoset::validate_and_finish() {
    for (int i = 0; i < n_; ++i)
        if (!leq(i, i))
            throw DomainError("order relation is not reflexive at index " + std::to_string(i));
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (leq(i, j) && leq(j, i))
                throw DomainError("order relation is not antisymmetric on {" +
                                  std::to_string(i) + "," + std::to_string(j) + "}");
    // Transitivity: i ≤ j forces up[j] ⊆ up[i].
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && leq(i, j))
                for (int w = 0; w < words_; ++w)
                    if (up_[row_off(j) + std::size_t(w)] & ~up_[row_off(i) + std::size_t(w)])
                        throw DomainError("order relation is not transitive via index " +
                                          std::to_string(j));

    // Kahn's algorithm, smallest index first, for a deterministic extension.
    topo_.clear();
    topo_.reserve(std::size_t(n_));
    std::vector<int> below(std::size_t(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && leq(j, i))
                ++below[std::size_t(i)];
    std::vector<bool> used(std::size_t(n_), false);
    for (int step = 0; step < n_; ++step) {
        int pick = -1;
        for (int i = 0; i < n_; ++i)
            if (!used[std::size_t(i)] && below[std::size_t(i)] == 0) {
                pick = i;
                break;
            }
        if (pick < 0)
            throw DomainError("order relation admits no linear extension");
        used[std::size_t(pick)] = true;
        topo_.push_back(pick);
        for (int j = 0; j < n_; ++j)
            if (!used[std::size_t(j)] && leq(pick, j))
                --below[std::size_t(j)];
    }
}

int FinitePoset::bottom() const {
    for (int i = 0; i < n_; ++i) {
        bool all = true;
        for (int j = 0; j < n_ && all; ++j)
            all = leq(i, j);
        if (all)
            return i;
    }
    return -1;
}

int FinitePoset::top() const {
    for (int i = 0; i < n_; ++i) {
        bool all = true;
        for (int j = 0; j < n_ && all; ++j)
            all = leq(j, i);
        if (all)
            return i;
    }
    return -1;
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            if (x == y || !leq(x, y))
                continue;
            bool covered = true;
            for (int z = 0; z < n_ && covered; ++z)
                if (z != x && z != y && leq(x, z) && leq(z, y))
                    covered = false;
            if (covered)
                out.emplace_back(x, y);
        }
    return out;
}

std::vector<Int> mobius_row_from(const FinitePoset& p, int x) {
    std::vector<Int> mu(std::size_t(p.size()), Int(0));
    for (int z : p.linear_extension()) {
        if (!p.leq(x, z))
            continue;
        if (z == x) {
            mu[std::size_t(z)] = 1;
            continue;
        }
        Int acc = 0;
        for (int w = 0; w < p.size(); ++w)
            if (w != z && p.leq(x, w) && p.leq(w, z))
                acc += mu[std::size_t(w)];
        mu[std::size_t(z)] = -acc;
    }
    return mu;
}

std::vector<Int> mobius_col_to(const FinitePoset& p, int y) {
    std::vector<Int> mu(std::size_t(p.size()), Int(0));
    const auto& topo = p.linear_extension();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int z = *it;
        if (!p.leq(z, y))
            continue;
        if (z == y) {
            mu[std::size_t(z)] = 1;
            continue;
        }
        Int acc = 0;
        for (int w = 0; w < p.size(); ++w)
            if (w != z && p.leq(z, w) && p.leq(w, y))
                acc += mu[std::size_t(w)];
        mu[std::size_t(z)] = -acc;
    }
    return mu;
}

Int mobius_pair(const FinitePoset& p, int x, int y) {
    if (x < 0 || x >= p.size() || y < 0 || y >= p.size())
        throw DomainError("poset index out of range");
    if (!p.leq(x, y))
        throw NotComparable("mobius_pair requires x <= y");
    return mobius_row_from(p, x)[std::size_t(y)];
}

MobiusTable mobius_table(const FinitePoset& p) {
    MobiusTable t;
    t.size = p.size();
    t.values.assign(std::size_t(p.size()) * std::size_t(p.size()), Int(0));
    for (int x = 0; x < p.size(); ++x) {
        auto row = mobius_row_from(p, x);
        for (int y = 0; y < p.size(); ++y)
            t.values[std::size_t(x) * p.size() + y] = row[std::size_t(y)];
    }
    return t;
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
    int n = p.size() * q.size();
    std::vector<std::string> labels;
    labels.reserve(std::size_t(n));
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
    std::vector<std::vector<bool>> leq(std::size_t(n), std::vector<bool>(std::size_t(n), false));
    for (int i1 = 0; i1 < p.size(); ++i1)
        for (int j1 = 0; j1 < q.size(); ++j1)
            for (int i2 = 0; i2 < p.size(); ++i2)
                for (int j2 = 0; j2 < q.size(); ++j2)
                    if (p.leq(i1, i2) && q.leq(j1, j2))
                        leq[std::size_t(i1 * q.size() + j1)][std::size_t(i2 * q.size() + j2)] =
                            true;
    return FinitePoset(n, std::move(labels), leq);
}

FinitePoset dual(const FinitePoset& p) {
    int n = p.size();
    std::vector<std::vector<bool>> leq(std::size_t(n), std::vector<bool>(std::size_t(n), false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(j, i))
                leq[std::size_t(i)][std::size_t(j)] = true;
    return FinitePoset(n, p.labels(), leq);
}

std::vector<int> atoms(const FinitePoset& p) {
    int b = p.bottom();
    if (b < 0 || p.top() < 0)
        throw NotBounded("atoms require a bounded poset");
    std::vector<int> out;
    for (auto [x, y] : p.covers())
        if (x == b)
            out.push_back(y);
    return out;
}

std::vector<int> coatoms(const FinitePoset& p) {
    int t = p.top();
    if (t < 0 || p.bottom() < 0)
        throw NotBounded("coatoms require a bounded poset");
    std::vector<int> out;
    for (auto [x, y] : p.covers())
        if (y == t)
            out.push_back(x);
    return out;
}

bool is_lattice(const FinitePoset& p) {
    int n = p.size();
    if (n == 0)
        return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // Unique minimal upper bound?
            int join = -1;
            int count = 0;
            for (int u = 0; u < n; ++u) {
                if (!p.leq(i, u) || !p.leq(j, u))
                    continue;
                bool minimal = true;
                for (int v = 0; v < n && minimal; ++v)
                    if (v != u && p.leq(i, v) && p.leq(j, v) && p.leq(v, u))
                        minimal = false;
                if (minimal) {
                    join = u;
                    ++count;
                }
            }
            if (count != 1 || join < 0)
                return false;
            // Unique maximal lower bound?
            int meet = -1;
            count = 0;
            for (int u = 0; u < n; ++u) {
                if (!p.leq(u, i) || !p.leq(u, j))
                    continue;
                bool maximal = true;
                for (int v = 0; v < n && maximal; ++v)
                    if (v != u && p.leq(v, i) && p.leq(v, j) && p.leq(u, v))
                        maximal = false;
                if (maximal) {
                    meet = u;
                    ++count;
                }
            }
            if (count != 1 || meet < 0)
                return false;
        }
    return true;
}

std::vector<int> interval_elements(const FinitePoset& p, int x, int y) {
    if (x < 0 || x >= p.size() || y < 0 || y >= p.size())
        throw DomainError("poset index out of range");
    if (!p.leq(x, y))
        throw NotComparable("interval requires x <= y");
    std::vector<int> out;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(z, y))
            out.push_back(z);
    return out;
}

FinitePoset interval(const FinitePoset& p, int x, int y) {
    auto elems = interval_elements(p, x, y);
    int m = int(elems.size());
    std::vector<std::string> labels;
    labels.reserve(std::size_t(m));
    for (int z : elems)
        labels.push_back(p.label(z));
    std::vector<std::vector<bool>> leq(std::size_t(m), std::vector<bool>(std::size_t(m), false));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (p.leq(elems[std::size_t(a)], elems[std::size_t(b)]))
                leq[std::size_t(a)][std::size_t(b)] = true;
    return FinitePoset(m, std::move(labels), leq);
}

std::vector<Rat> mobius_invert(const FinitePoset& p, const std::vector<Rat>& g) {
    if (p.top() < 0)
        throw NotBounded("mobius_invert requires a poset bounded above");
    if (int(g.size()) != p.size())
        throw DomainError("g must assign a value to every element");
    std::vector<Rat> f(std::size_t(p.size()), Rat(0));
    for (int y = 0; y < p.size(); ++y) {
        auto col = mobius_col_to(p, y);
        Rat acc(0);
        for (int x = 0; x < p.size(); ++x)
            if (p.leq(x, y))
                acc += g[std::size_t(x)] * Rat(col[std::size_t(x)]);
        f[std::size_t(y)] = acc;
    }
    return f;
}

bool weisner_check(const FinitePoset& p, int atom) {
    if (!p.is_bounded())
        throw NotBounded("weisner_check requires a bounded lattice");
    if (!is_lattice(p))
        throw DomainError("weisner_check requires a lattice");
    auto at = atoms(p);
    if (std::find(at.begin(), at.end(), atom) == at.end())
        throw DomainError("index " + std::to_string(atom) + " is not an atom");
    int b = p.bottom();
    int t = p.top();
    auto mu = mobius_row_from(p, b);
    Int acc = mu[std::size_t(t)];
    for (int c : coatoms(p))
        if (!p.leq(atom, c))
            acc += mu[std::size_t(c)];
    return acc == 0;
}

std::string to_dot(const FinitePoset& p, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    os << "  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i) {
        std::string esc;
        for (char ch : p.label(i)) {
            if (ch == '"' || ch == '\\')
                esc += '\\';
            esc += ch;
        }
        os << "  n" << i << " [label=\"" << esc << "\"];\n";
    }
    for (auto [x, y] : p.covers())
        os << "  n" << x << " -> n" << y << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace qmob
