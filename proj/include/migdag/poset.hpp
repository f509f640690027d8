#pragma once

#include <array>
#include <string>
#include <vector>

#include "migdag/graph.hpp"

namespace migdag {

namespace detail {

// Incrementally maintained reachability for arc-by-arc DAG construction.
// desc/anc rows include the node itself.
struct ClosureState {
    int n = 0;
    std::array<NodeSet, kMaxNodes> ch{}, desc{}, anc{};

    void init(int nodes) {
        n = nodes;
        for (int v = 0; v < n; ++v) {
            ch[v] = NodeSet{};
            desc[v] = NodeSet::single(v);
            anc[v] = NodeSet::single(v);
        }
    }

    bool would_cycle(int a, int b) const { return desc[b].contains(a); }

    // With a -> b added, would some arc be implied by a longer path?
    bool breaks_atransitivity(int a, int b) const {
        if (desc[a].contains(b)) return true;  // existing indirect path a => b
        bool bad = false;
        anc[a].for_each([&](int x) {
            if (ch[x].intersects(desc[b])) bad = true;
        });
        return bad;
    }

    void add(int a, int b) {
        NodeSet above = anc[a], below = desc[b];
        above.for_each([&](int x) { desc[x] |= below; });
        below.for_each([&](int y) { anc[y] |= above; });
        ch[a].insert(b);
    }

    std::vector<NodeSet> children_vec() const {
        return std::vector<NodeSet>(ch.begin(), ch.begin() + n);
    }
};

template <typename Rows>
std::string row_key(int n, const Rows& rows) {
    std::string key(static_cast<std::size_t>(n) * 8, '\0');
    for (int v = 0; v < n; ++v) {
        std::uint64_t bits = rows[v].bits();
        for (int b = 0; b < 8; ++b) key[v * 8 + b] = static_cast<char>((bits >> (8 * b)) & 0xff);
    }
    return key;
}

// Descendant sets (including the node itself) for children rows of a DAG,
// computed in reverse topological order.
inline std::vector<NodeSet> descendant_rows(int n, const std::vector<NodeSet>& children) {
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u)
        children[u].for_each([&](int v) { ++indeg[v]; });
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack;
    for (int v = n - 1; v >= 0; --v)
        if (indeg[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        children[u].for_each([&](int v) {
            if (--indeg[v] == 0) stack.push_back(v);
        });
    }
    std::vector<NodeSet> desc(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        NodeSet d = NodeSet::single(u);
        children[u].for_each([&](int v) { d |= desc[v]; });
        desc[u] = d;
    }
    return desc;
}

inline std::vector<NodeSet> children_rows(const Dag& d) {
    std::vector<NodeSet> rows(d.n());
    for (int v = 0; v < d.n(); ++v) rows[v] = d.children(v);
    return rows;
}

// Transpose descendant rows into ancestor rows (again including self).
inline std::vector<NodeSet> transpose_rows(int n, const std::vector<NodeSet>& rows) {
    std::vector<NodeSet> t(n);
    for (int u = 0; u < n; ++u)
        rows[u].for_each([&](int v) { t[v].insert(u); });
    return t;
}

// Children rows of the transitive reduction, given descendant rows.
inline std::vector<NodeSet> reduction_rows(int n, const std::vector<NodeSet>& desc) {
    std::vector<NodeSet> red(n);
    for (int u = 0; u < n; ++u) {
        NodeSet strict = desc[u].without(u);
        NodeSet implied;
        strict.for_each([&](int w) { implied |= desc[w].without(w); });
        red[u] = strict - implied;
    }
    return red;
}

inline Dag dag_from_rows(int n, const std::vector<NodeSet>& children,
                         std::vector<std::string> labels = {}) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        children[u].for_each([&](int v) { arcs.emplace_back(u, v); });
    return Dag(n, arcs, std::move(labels));
}

}  // namespace detail

// Ancestors of v, including v itself.
inline NodeSet ancestors(const Dag& d, int v) {
    detail::check_node(v, d.n());
    auto desc = detail::descendant_rows(d.n(), detail::children_rows(d));
    NodeSet anc;
    for (int u = 0; u < d.n(); ++u)
        if (desc[u].contains(v)) anc.insert(u);
    return anc;
}

inline Dag transitive_closure(const Dag& d) {
    auto desc = detail::descendant_rows(d.n(), detail::children_rows(d));
    std::vector<NodeSet> rows(d.n());
    for (int u = 0; u < d.n(); ++u) rows[u] = desc[u].without(u);
    return detail::dag_from_rows(d.n(), rows, d.labels());
}

inline Dag transitive_reduction(const Dag& d) {
    auto desc = detail::descendant_rows(d.n(), detail::children_rows(d));
    return detail::dag_from_rows(d.n(), detail::reduction_rows(d.n(), desc), d.labels());
}

// True when no arc is implied by a longer directed path.
inline bool is_atransitive(const Dag& d) {
    auto children = detail::children_rows(d);
    auto desc = detail::descendant_rows(d.n(), children);
    for (int u = 0; u < d.n(); ++u) {
        NodeSet two_step;
        children[u].for_each([&](int w) { two_step |= desc[w].without(w); });
        if (children[u].intersects(two_step)) return false;
    }
    return true;
}

// A poset on nodes 0..n-1, represented by the transitive reduction of its
// order relation. Any DAG with the same closure maps to the same Poset.
class Poset {
public:
    Poset() = default;

    static Poset of(const Dag& d) {
        Poset p;
        p.reduction_ = transitive_reduction(d);
        return p;
    }

    int n() const { return reduction_.n(); }
    const Dag& reduction() const { return reduction_; }
    Dag closure() const { return transitive_closure(reduction_); }

    bool operator==(const Poset& o) const { return reduction_ == o.reduction_; }

private:
    Dag reduction_;
};

// The undirected graph linking two nodes exactly when they have a common
// ancestor in d. Invariant under transitive closure of d.
inline UndirectedGraph marginal_independence_graph(const Dag& d) {
    auto desc = detail::descendant_rows(d.n(), detail::children_rows(d));
    auto anc = detail::transpose_rows(d.n(), desc);
    std::vector<Edge> edges;
    for (int u = 0; u < d.n(); ++u)
        for (int v = u + 1; v < d.n(); ++v)
            if (anc[u].intersects(anc[v])) edges.emplace_back(u, v);
    return UndirectedGraph(d.n(), edges, d.labels());
}

inline UndirectedGraph marginal_independence_graph(const Poset& p) {
    return marginal_independence_graph(p.reduction());
}

// Checks the two identities that make posets the right quotient: closing
// is idempotent and does not change the marginal independence graph.
inline bool closure_invariance_check(const Dag& d) {
    Dag c = transitive_closure(d);
    return transitive_closure(c) == c &&
           marginal_independence_graph(d) == marginal_independence_graph(c);
}

}  // namespace migdag
