#include "qmob/quiver.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace qmob {

Quiver::Quiver(int n_vertices, std::vector<Arrow> arrows)
    : n_(n_vertices), arrows_(std::move(arrows)) {
    if (n_ < 1) throw DomainError("quiver needs at least one vertex");
    std::unordered_set<std::string> names;
    for (const Arrow& a : arrows_) {
        if (a.name.empty()) throw DomainError("arrow name must be nonempty");
        if (!names.insert(a.name).second)
            throw DomainError("duplicate arrow name '" + a.name + "'");
        if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_)
            throw DomainError("arrow '" + a.name + "' has an endpoint outside 1.." +
                              std::to_string(n_));
    }
}

int Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name) return static_cast<int>(i);
    throw DomainError("unknown arrow '" + name + "'");
}

std::vector<int> Quiver::out_arrows(int vertex) const {
    check_vertex(vertex);
    std::vector<int> out;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].source == vertex) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> Quiver::in_arrows(int vertex) const {
    check_vertex(vertex);
    std::vector<int> in;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].target == vertex) in.push_back(static_cast<int>(i));
    return in;
}

void Quiver::check_vertex(int vertex) const {
    if (vertex < 1 || vertex > n_)
        throw DomainError("vertex " + std::to_string(vertex) + " outside 1.." + std::to_string(n_));
}

int path_source(const Quiver& q, const Path& p) {
    check_path(q, p);
    return q.arrow(p.arrows.front()).source;
}

int path_target(const Quiver& q, const Path& p) {
    check_path(q, p);
    return q.arrow(p.arrows.back()).target;
}

void check_path(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) throw DomainError("empty path");
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        const Arrow& a = q.arrow(p.arrows[i]);
        if (i + 1 < p.arrows.size()) {
            const Arrow& b = q.arrow(p.arrows[i + 1]);
            if (a.target != b.source)
                throw DomainError("path not composable at '" + a.name + "." + b.name + "'");
        }
    }
}

void check_relation(const Quiver& q, const Relation& r) {
    if (r.terms.empty()) throw DomainError("relation has no terms");
    int src = -1, tgt = -1;
    for (const RelationTerm& t : r.terms) {
        if (t.coeff == 0) throw DomainError("relation term with zero coefficient");
        check_path(q, t.path);
        if (t.path.arrows.size() < 2)
            throw DomainError("relation paths must have length >= 2");
        int s = path_source(q, t.path);
        int e = path_target(q, t.path);
        if (src == -1) {
            src = s;
            tgt = e;
        } else if (s != src || e != tgt) {
            throw DomainError("relation terms are not parallel");
        }
    }
}

bool is_acyclic(const Quiver& q) {
    return topological_order(q).has_value();
}

std::vector<int> sinks(const Quiver& q) {
    std::vector<bool> has_out(static_cast<std::size_t>(q.n_vertices()) + 1, false);
    for (const Arrow& a : q.arrows()) has_out[static_cast<std::size_t>(a.source)] = true;
    std::vector<int> out;
    for (int v = 1; v <= q.n_vertices(); ++v)
        if (!has_out[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<int> reachable(const Quiver& q, int a) {
    q.check_vertex(a);
    std::vector<bool> seen(static_cast<std::size_t>(q.n_vertices()) + 1, false);
    std::vector<int> stack = {a};
    seen[static_cast<std::size_t>(a)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Arrow& ar : q.arrows()) {
            if (ar.source == v && !seen[static_cast<std::size_t>(ar.target)]) {
                seen[static_cast<std::size_t>(ar.target)] = true;
                stack.push_back(ar.target);
            }
        }
    }
    std::vector<int> out;
    for (int v = 1; v <= q.n_vertices(); ++v)
        if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<int> minimal_sinking(const Quiver& q, int a) {
    return reachable(q, a);
}

bool is_sinking(const Quiver& q, const std::vector<int>& S) {
    std::vector<bool> in(static_cast<std::size_t>(q.n_vertices()) + 1, false);
    for (int v : S) {
        q.check_vertex(v);
        in[static_cast<std::size_t>(v)] = true;
    }
    for (const Arrow& a : q.arrows())
        if (in[static_cast<std::size_t>(a.source)] && !in[static_cast<std::size_t>(a.target)])
            return false;
    return true;
}

std::vector<int> sinking_union(const Quiver& q, const std::vector<std::vector<int>>& sets) {
    std::set<int> u;
    for (const auto& s : sets)
        for (int v : s) {
            q.check_vertex(v);
            u.insert(v);
        }
    return std::vector<int>(u.begin(), u.end());
}

std::vector<std::vector<int>> enumerate_sinking_sets(const Quiver& q) {
    int n = q.n_vertices();
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        bool closed = true;
        for (const Arrow& a : q.arrows()) {
            if ((mask >> (a.source - 1) & 1) && !(mask >> (a.target - 1) & 1)) {
                closed = false;
                break;
            }
        }
        if (!closed) continue;
        std::vector<int> s;
        for (int v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1) s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

Quiver full_subquiver(const Quiver& q, const std::vector<int>& S) {
    std::set<int> vs(S.begin(), S.end());
    if (vs.empty()) throw DomainError("full subquiver needs at least one vertex");
    std::unordered_map<int, int> renumber;
    int next = 1;
    for (int v : vs) {
        q.check_vertex(v);
        renumber[v] = next++;
    }
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows())
        if (vs.count(a.source) && vs.count(a.target))
            arrows.push_back({a.name, renumber[a.source], renumber[a.target]});
    return Quiver(static_cast<int>(vs.size()), std::move(arrows));
}

std::optional<std::vector<int>> topological_order(const Quiver& q) {
    int n = q.n_vertices();
    // In-degrees ignore parallel duplicates; Kahn with a smallest-vertex
    // heap keeps the order deterministic.
    std::vector<std::set<int>> preds(static_cast<std::size_t>(n) + 1);
    for (const Arrow& a : q.arrows())
        if (a.source != a.target) preds[static_cast<std::size_t>(a.target)].insert(a.source);
    for (const Arrow& a : q.arrows())
        if (a.source == a.target) return std::nullopt;

    std::set<int> ready;
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        indeg[static_cast<std::size_t>(v)] = static_cast<int>(preds[static_cast<std::size_t>(v)].size());
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.insert(v);
    }
    std::vector<int> order;
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int w = 1; w <= n; ++w) {
            if (preds[static_cast<std::size_t>(w)].erase(v)) {
                if (--indeg[static_cast<std::size_t>(w)] == 0) ready.insert(w);
            }
        }
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

}  // namespace qmob
