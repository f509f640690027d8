#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "migdag/core.hpp"

namespace migdag {

using Arc = std::pair<int, int>;   // directed: first -> second
using Edge = std::pair<int, int>;  // undirected: kept with first < second

namespace detail {

inline void check_node_count(int n) {
    if (n < 0) throw std::invalid_argument("negative node count");
    if (n > kMaxNodes) throw CapacityError("graph exceeds " + std::to_string(kMaxNodes) + " nodes");
}

// For member initializer lists, where the check must precede allocation.
inline int checked_node_count(int n) {
    check_node_count(n);
    return n;
}

inline void check_node(int v, int n) {
    if (v < 0 || v >= n) throw std::out_of_range("node id " + std::to_string(v) + " out of range");
}

}  // namespace detail

// Simple undirected graph: no self-loops, no parallel edges. Immutable
// after construction; labels are optional display names.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    explicit UndirectedGraph(int n, const std::vector<Edge>& edges = {},
                             std::vector<std::string> labels = {})
        : n_(detail::checked_node_count(n)), adj_(n), labels_(std::move(labels)) {
        if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
            throw std::invalid_argument("label count does not match node count");
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int n() const { return n_; }
    int edge_count() const { return m_; }
    NodeSet nodes() const { return NodeSet::first_n(n_); }

    bool has_edge(int u, int v) const {
        detail::check_node(u, n_);
        detail::check_node(v, n_);
        return adj_[u].contains(v);
    }

    NodeSet adjacent(int v) const {
        detail::check_node(v, n_);
        return adj_[v];
    }

    int degree(int v) const { return adjacent(v).count(); }

    // Edges in lexicographic (u, v) order with u < v.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) { if (u < v) out.emplace_back(u, v); });
        return out;
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const {
        detail::check_node(v, n_);
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    bool operator==(const UndirectedGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void add_edge(int u, int v) {
        detail::check_node(u, n_);
        detail::check_node(v, n_);
        if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
        if (adj_[u].contains(v)) throw std::invalid_argument("duplicate edge");
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++m_;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<NodeSet> adj_;
    std::vector<std::string> labels_;
};

// Directed acyclic graph. Acyclicity is checked at construction.
class Dag {
public:
    Dag() = default;

    explicit Dag(int n, const std::vector<Arc>& arcs = {}, std::vector<std::string> labels = {})
        : n_(detail::checked_node_count(n)), children_(n), parents_(n), labels_(std::move(labels)) {
        if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
            throw std::invalid_argument("label count does not match node count");
        for (auto [u, v] : arcs) add_arc(u, v);
        if (!topological_order_internal()) throw std::invalid_argument("arc set has a cycle");
    }

    int n() const { return n_; }
    int arc_count() const { return m_; }

    bool has_arc(int u, int v) const {
        detail::check_node(u, n_);
        detail::check_node(v, n_);
        return children_[u].contains(v);
    }

    NodeSet children(int v) const {
        detail::check_node(v, n_);
        return children_[v];
    }
    NodeSet parents(int v) const {
        detail::check_node(v, n_);
        return parents_[v];
    }

    // Arcs in lexicographic (tail, head) order.
    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            children_[u].for_each([&](int v) { out.emplace_back(u, v); });
        return out;
    }

    // Some topological order (parents before children), deterministic.
    std::vector<int> topological_order() const {
        auto order = topological_order_internal();
        return *order;
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const {
        detail::check_node(v, n_);
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    bool operator==(const Dag& o) const { return n_ == o.n_ && children_ == o.children_; }

private:
    void add_arc(int u, int v) {
        detail::check_node(u, n_);
        detail::check_node(v, n_);
        if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
        if (children_[u].contains(v)) throw std::invalid_argument("duplicate arc");
        if (children_[v].contains(u)) throw std::invalid_argument("two-cycle between nodes");
        children_[u].insert(v);
        parents_[v].insert(u);
        ++m_;
    }

    // Kahn's algorithm; smallest ready node first. Empty result on a cycle.
    std::optional<std::vector<int>> topological_order_internal() const {
        std::vector<int> order;
        order.reserve(n_);
        NodeSet placed;
        while (static_cast<int>(order.size()) < n_) {
            int pick = -1;
            for (int v = 0; v < n_; ++v) {
                if (placed.contains(v)) continue;
                if (parents_[v].subset_of(placed)) { pick = v; break; }
            }
            if (pick < 0) return std::nullopt;
            placed.insert(pick);
            order.push_back(pick);
        }
        return order;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<NodeSet> children_;
    std::vector<NodeSet> parents_;
    std::vector<std::string> labels_;
};

// Graph with both directed and undirected edges; a node pair carries at
// most one of the two. Used for sink graphs.
class MixedGraph {
public:
    MixedGraph() = default;

    explicit MixedGraph(int n, const std::vector<Arc>& arcs = {},
                        const std::vector<Edge>& edges = {}, std::vector<std::string> labels = {})
        : n_(detail::checked_node_count(n)), children_(n), parents_(n), und_(n),
          labels_(std::move(labels)) {
        if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
            throw std::invalid_argument("label count does not match node count");
        for (auto [u, v] : arcs) {
            detail::check_node(u, n_);
            detail::check_node(v, n_);
            if (u == v) throw std::invalid_argument("self-loop");
            if (linked(u, v)) throw std::invalid_argument("pair already linked");
            children_[u].insert(v);
            parents_[v].insert(u);
        }
        for (auto [u, v] : edges) {
            detail::check_node(u, n_);
            detail::check_node(v, n_);
            if (u == v) throw std::invalid_argument("self-loop");
            if (linked(u, v)) throw std::invalid_argument("pair already linked");
            und_[u].insert(v);
            und_[v].insert(u);
        }
    }

    int n() const { return n_; }
    bool has_arc(int u, int v) const { return children_[u].contains(v); }
    bool has_undirected(int u, int v) const { return und_[u].contains(v); }
    NodeSet children(int v) const { return children_[v]; }
    NodeSet parents(int v) const { return parents_[v]; }
    NodeSet undirected(int v) const { return und_[v]; }

    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        for (int u = 0; u < n_; ++u)
            children_[u].for_each([&](int v) { out.emplace_back(u, v); });
        return out;
    }
    std::vector<Edge> undirected_edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            und_[u].for_each([&](int v) { if (u < v) out.emplace_back(u, v); });
        return out;
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const {
        detail::check_node(v, n_);
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    bool operator==(const MixedGraph& o) const {
        return n_ == o.n_ && children_ == o.children_ && und_ == o.und_;
    }

private:
    bool linked(int u, int v) const {
        return children_[u].contains(v) || children_[v].contains(u) || und_[u].contains(v);
    }

    int n_ = 0;
    std::vector<NodeSet> children_;
    std::vector<NodeSet> parents_;
    std::vector<NodeSet> und_;
    std::vector<std::string> labels_;
};

// Closed neighborhood of v: N(v) together with v itself.
inline NodeSet boundary(const UndirectedGraph& g, int v) {
    return g.adjacent(v).with(v);
}

inline NodeSet neighborhood(const UndirectedGraph& g, int v) { return g.adjacent(v); }

inline bool is_clique(const UndirectedGraph& g, NodeSet s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (!s.without(v).subset_of(g.adjacent(v))) ok = false;
    });
    return ok;
}

// A node is simplicial when its closed neighborhood is a clique.
inline bool is_simplicial(const UndirectedGraph& g, int v) {
    return is_clique(g, boundary(g, v));
}

// The simplexes of a graph: maximal cliques that contain at least one
// simplicial node. Each simplicial node determines exactly one simplex,
// namely its closed neighborhood, so listing distinct boundaries of
// simplicial nodes enumerates them. Order: by lowest simplicial member.
struct SimplexDecomposition {
    std::vector<NodeSet> simplexes;
    std::vector<NodeSet> simplicial;  // simplicial nodes of each simplex
    NodeSet all_simplicial;
};

inline SimplexDecomposition simplex_decomposition(const UndirectedGraph& g) {
    SimplexDecomposition d;
    for (int v = 0; v < g.n(); ++v)
        if (is_simplicial(g, v)) d.all_simplicial.insert(v);
    d.all_simplicial.for_each([&](int v) {
        NodeSet bd = boundary(g, v);
        for (std::size_t i = 0; i < d.simplexes.size(); ++i) {
            if (d.simplexes[i] == bd) {
                d.simplicial[i].insert(v);
                return;
            }
        }
        d.simplexes.push_back(bd);
        d.simplicial.push_back(NodeSet::single(v));
    });
    return d;
}

// Connected components as node sets, ordered by lowest member.
inline std::vector<NodeSet> connected_components(const UndirectedGraph& g) {
    std::vector<NodeSet> comps;
    NodeSet seen;
    for (int v = 0; v < g.n(); ++v) {
        if (seen.contains(v)) continue;
        NodeSet comp = NodeSet::single(v);
        for (;;) {
            NodeSet grown = comp;
            comp.for_each([&](int u) { grown |= g.adjacent(u); });
            if (grown == comp) break;
            comp = grown;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

inline bool is_connected(const UndirectedGraph& g) {
    return g.n() <= 1 || connected_components(g).size() == 1;
}

namespace detail {

template <typename F>
void bron_kerbosch(const UndirectedGraph& g, NodeSet r, NodeSet p, NodeSet x, F&& out) {
    if (p.empty() && x.empty()) {
        out(r);
        return;
    }
    // Pivot: a node of P union X with the most neighbours in P.
    int pivot = -1, best = -1;
    (p | x).for_each([&](int u) {
        int c = (g.adjacent(u) & p).count();
        if (c > best) { best = c; pivot = u; }
    });
    NodeSet cand = p - g.adjacent(pivot);
    cand.for_each([&](int v) {
        NodeSet nb = g.adjacent(v);
        bron_kerbosch(g, r.with(v), p & nb, x & nb, out);
        p.erase(v);
        x.insert(v);
    });
}

}  // namespace detail

// All maximal cliques, pivoting branch enumeration. Deterministic order
// is not guaranteed to be meaningful; callers sort if they care.
inline std::vector<NodeSet> maximal_cliques(const UndirectedGraph& g) {
    std::vector<NodeSet> out;
    if (g.n() == 0) return out;
    detail::bron_kerbosch(g, NodeSet{}, g.nodes(), NodeSet{},
                          [&](NodeSet c) { out.push_back(c); });
    std::sort(out.begin(), out.end(),
              [](NodeSet a, NodeSet b) { return a.bits() < b.bits(); });
    return out;
}

}  // namespace migdag
