#pragma once

#include <bitset>

#include "migdag/enumerate.hpp"

namespace migdag {

struct InvalidCoverError : std::runtime_error {
    InvalidCoverError(const std::string& what) : std::runtime_error(what) {}
    std::optional<NodeSet> non_clique;  // a listed set that is not a clique
    std::optional<Edge> uncovered;      // an edge no listed clique contains
};

struct CliqueCover {
    std::vector<NodeSet> cliques;
};

enum class CoverMode { Exact, Greedy };

// Attaches a fresh pendant node to every node. The result has a faithful
// DAG with k auxiliary nodes exactly when the input has an edge clique
// cover of size k, which is what makes minimum-auxiliary search hard.
inline UndirectedGraph hardness_gadget(const UndirectedGraph& g) {
    int n = g.n();
    detail::check_node_count(2 * n);
    std::vector<Edge> edges = g.edges();
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels = g.labels();
        labels.resize(2 * n);
        for (int v = 0; v < n; ++v) labels[n + v] = "w_" + g.label(v);
    }
    return UndirectedGraph(2 * n, edges, labels);
}

namespace detail {

inline constexpr int kCoverMaxEdges = 192;
using EdgeMask = std::bitset<kCoverMaxEdges>;

struct EdgeIndex {
    std::vector<Edge> edges;
    std::array<std::array<int, kMaxNodes>, kMaxNodes> id{};

    explicit EdgeIndex(const UndirectedGraph& g) : edges(g.edges()) {
        if (static_cast<int>(edges.size()) > kCoverMaxEdges)
            throw CapacityError("too many edges for cover search");
        for (std::size_t i = 0; i < edges.size(); ++i)
            id[edges[i].first][edges[i].second] = static_cast<int>(i);
    }

    EdgeMask edges_within(const UndirectedGraph& g, NodeSet s) const {
        EdgeMask m;
        s.for_each([&](int u) {
            (s & g.adjacent(u)).for_each([&](int v) {
                if (u < v) m.set(id[u][v]);
            });
        });
        return m;
    }

    EdgeMask all() const {
        EdgeMask m;
        for (std::size_t i = 0; i < edges.size(); ++i) m.set(i);
        return m;
    }
};

// Any cover needs at least as many cliques as there are pairwise
// clique-incompatible uncovered edges; greedily collect such a set.
inline int cover_lower_bound(const UndirectedGraph& g, const EdgeIndex& ei, const EdgeMask& uncovered) {
    std::vector<NodeSet> picked;
    for (std::size_t i = 0; i < ei.edges.size(); ++i) {
        if (!uncovered.test(i)) continue;
        NodeSet e = NodeSet::single(ei.edges[i].first).with(ei.edges[i].second);
        bool clashes = false;
        for (NodeSet p : picked)
            if (is_clique(g, p | e)) { clashes = true; break; }
        if (!clashes) picked.push_back(e);
    }
    return static_cast<int>(picked.size());
}

}  // namespace detail

// Greedy cover: repeatedly grow the lowest uncovered edge into a clique,
// preferring the extension that covers the most still-uncovered edges.
inline CliqueCover edge_clique_cover_greedy(const UndirectedGraph& g) {
    detail::EdgeIndex ei(g);
    detail::EdgeMask uncovered = ei.all();
    CliqueCover cover;
    for (std::size_t i = 0; i < ei.edges.size(); ++i) {
        if (!uncovered.test(i)) continue;
        auto [a, b] = ei.edges[i];
        NodeSet c = NodeSet::single(a).with(b);
        NodeSet cand = g.adjacent(a) & g.adjacent(b);
        while (!cand.empty()) {
            int pick = -1, pick_gain = -1;
            cand.for_each([&](int v) {
                int gain = 0;
                c.for_each([&](int u) {
                    int eid = ei.id[std::min(u, v)][std::max(u, v)];
                    if (uncovered.test(eid)) ++gain;
                });
                if (gain > pick_gain) { pick_gain = gain; pick = v; }
            });
            c.insert(pick);
            cand &= g.adjacent(pick);
        }
        uncovered &= ~ei.edges_within(g, c);
        cover.cliques.push_back(c);
    }
    return cover;
}

namespace detail {

// Exact cover search: branch on the uncovered edge with the fewest
// containing maximal cliques; bound with cover_lower_bound.
inline std::optional<CliqueCover> edge_clique_cover_exact_bounded(const UndirectedGraph& g,
                                                                  int max_size) {
    EdgeIndex ei(g);
    auto cliques = maximal_cliques(g);
    std::vector<std::vector<int>> per_edge(ei.edges.size());
    std::vector<EdgeMask> covers(cliques.size());
    for (std::size_t c = 0; c < cliques.size(); ++c) {
        covers[c] = ei.edges_within(g, cliques[c]);
        for (std::size_t i = 0; i < ei.edges.size(); ++i)
            if (covers[c].test(i)) per_edge[i].push_back(static_cast<int>(c));
    }

    std::optional<std::vector<int>> best;
    int best_size = max_size + 1;
    std::vector<int> chosen;

    auto rec = [&](auto&& self, EdgeMask uncovered) -> void {
        if (uncovered.none()) {
            best = chosen;
            best_size = static_cast<int>(chosen.size());
            return;
        }
        if (static_cast<int>(chosen.size()) + cover_lower_bound(g, ei, uncovered) >= best_size)
            return;
        int pick = -1;
        std::size_t fewest = cliques.size() + 1;
        for (std::size_t i = 0; i < ei.edges.size(); ++i)
            if (uncovered.test(i) && per_edge[i].size() < fewest) {
                fewest = per_edge[i].size();
                pick = static_cast<int>(i);
            }
        for (int c : per_edge[pick]) {
            chosen.push_back(c);
            self(self, uncovered & ~covers[c]);
            chosen.pop_back();
        }
    };
    rec(rec, ei.all());

    if (!best) return std::nullopt;
    CliqueCover cover;
    for (int c : *best) cover.cliques.push_back(cliques[c]);
    return cover;
}

}  // namespace detail

// Minimum edge clique cover (exact mode) or a greedily built one. The
// exact search is exponential and refuses graphs with more than 20 nodes.
inline CliqueCover edge_clique_cover(const UndirectedGraph& g, CoverMode mode) {
    if (mode == CoverMode::Greedy) return edge_clique_cover_greedy(g);
    if (g.n() > 20) throw CapacityError("exact cover search limited to 20 nodes");
    auto greedy = edge_clique_cover_greedy(g);
    auto exact = detail::edge_clique_cover_exact_bounded(g, static_cast<int>(greedy.cliques.size()));
    return exact ? *exact : greedy;  // greedy size is an upper bound, so exact always lands
}

// Any cover of size <= budget, or nothing when that is infeasible.
inline std::optional<CliqueCover> edge_clique_cover_within(const UndirectedGraph& g, int budget) {
    if (budget < 0) throw std::invalid_argument("negative budget");
    if (g.n() > 20) throw CapacityError("exact cover search limited to 20 nodes");
    return detail::edge_clique_cover_exact_bounded(g, budget);
}

// A DAG over the observed nodes 0..observed-1 plus auxiliary nodes.
struct AugmentedDag {
    Dag dag;
    int observed = 0;
    int auxiliary_count() const { return dag.n() - observed; }
};

// The marginal independence graph restricted to the observed nodes.
inline UndirectedGraph restricted_mig(const AugmentedDag& a) {
    UndirectedGraph full = marginal_independence_graph(a.dag);
    std::vector<Edge> edges;
    for (auto [u, v] : full.edges())
        if (v < a.observed) edges.emplace_back(u, v);
    std::vector<std::string> labels;
    if (full.has_labels())
        labels.assign(full.labels().begin(), full.labels().begin() + a.observed);
    return UndirectedGraph(a.observed, edges, labels);
}

// One auxiliary source per cover clique, pointing at its members. The
// result is faithful to g on the observed nodes; nodes in no clique get
// no arcs. Rejects covers with a non-clique entry or an uncovered edge.
inline AugmentedDag dag_from_cover(const UndirectedGraph& g, const CliqueCover& cover) {
    for (NodeSet c : cover.cliques) {
        if (!c.subset_of(g.nodes())) throw std::out_of_range("clique node out of range");
        if (!is_clique(g, c)) {
            InvalidCoverError err("cover entry is not a clique");
            err.non_clique = c;
            throw err;
        }
    }
    for (auto [u, v] : g.edges()) {
        bool inside = false;
        for (NodeSet c : cover.cliques)
            if (c.contains(u) && c.contains(v)) { inside = true; break; }
        if (!inside) {
            InvalidCoverError err("edge not covered by any clique");
            err.uncovered = Edge{u, v};
            throw err;
        }
    }
    int k = static_cast<int>(cover.cliques.size());
    detail::check_node_count(g.n() + k);
    std::vector<Arc> arcs;
    for (int j = 0; j < k; ++j)
        cover.cliques[j].for_each([&](int v) { arcs.emplace_back(g.n() + j, v); });
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels = g.labels();
        labels.resize(g.n() + k);
        for (int j = 0; j < k; ++j) labels[g.n() + j] = "q" + std::to_string(j);
    }
    return AugmentedDag{Dag(g.n() + k, arcs, labels), g.n()};
}

// A faithful DAG with no auxiliary nodes when g admits one, otherwise
// the cover construction. Cover-based sizes are upper bounds on the true
// minimum; only the SMIG case is proven minimal here.
inline AugmentedDag min_auxiliary_dag(const UndirectedGraph& g, CoverMode mode) {
    if (is_smig(g).smig) {
        std::optional<Dag> first;
        minimal_posets(g, [&](const MinimalPoset& p) {
            first = p.poset.reduction();
            return false;
        });
        return AugmentedDag{*first, g.n()};
    }
    return dag_from_cover(g, edge_clique_cover(g, mode));
}

// Exact minimum-auxiliary search. Exhausts a normal form that always
// contains a minimum solution: rewiring any faithful DAG so that every
// node points directly at its observed descendant set leaves all
// descendant sets (hence the restricted independence graph) unchanged,
// and makes the auxiliary nodes sources aiming at reachability-closed
// observed cliques. The search therefore walks the DAGs D on the
// observed nodes whose arcs follow edges of g and whose descendant sets
// are cliques, and covers the edges D misses with the fewest D-closed
// cliques. Exponential; refuses more than 12 nodes, 12 edges, or 8
// auxiliaries.
inline std::optional<AugmentedDag> min_auxiliary_bruteforce(const UndirectedGraph& g, int max_q) {
    if (max_q < 0) throw std::invalid_argument("negative auxiliary budget");
    if (g.n() > 12 || g.edge_count() > 12 || max_q > 8)
        throw CapacityError("minimum-auxiliary search limited to 12 nodes, 12 edges, 8 auxiliaries");

    const int n = g.n();
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());

    // All cliques on two or more nodes, ascending by mask.
    std::vector<NodeSet> cliques;
    auto grow = [&](auto&& self, NodeSet cur, NodeSet cand) -> void {
        cand.for_each([&](int v) {
            NodeSet next = cur.with(v);
            if (next.count() >= 2) cliques.push_back(next);
            self(self, next, cand & g.adjacent(v) & NodeSet(~((std::uint64_t{2} << v) - 1)));
        });
    };
    grow(grow, NodeSet{}, g.nodes());
    std::sort(cliques.begin(), cliques.end(),
              [](NodeSet a, NodeSet b) { return a.bits() < b.bits(); });

    int edge_id[12][12];
    for (int i = 0; i < m; ++i)
        edge_id[edges[i].first][edges[i].second] = edge_id[edges[i].second][edges[i].first] = i;
    auto edges_within = [&](NodeSet s) {
        std::uint32_t mask = 0;
        s.for_each([&](int u) {
            (s & g.adjacent(u)).for_each([&](int w) {
                if (u < w) mask |= std::uint32_t{1} << edge_id[u][w];
            });
        });
        return mask;
    };
    std::vector<std::uint32_t> clique_edges(cliques.size());
    for (std::size_t c = 0; c < cliques.size(); ++c) clique_edges[c] = edges_within(cliques[c]);
    const std::uint32_t all_edges = (std::uint32_t{1} << m) - 1;

    struct Best {
        int k;
        std::vector<NodeSet> dag_rows;
        std::vector<NodeSet> aux;
    };
    std::optional<Best> best;
    int best_k = max_q + 1;

    std::vector<std::size_t> closed;  // candidate clique indices, refreshed per DAG state
    auto evaluate = [&](const detail::ClosureState& cs) {
        std::uint32_t covered = 0;
        for (int v = 0; v < n; ++v) covered |= edges_within(cs.desc[v]);
        std::uint32_t residual = all_edges & ~covered;
        if (residual == 0) {
            best = Best{0, cs.children_vec(), {}};
            best_k = 0;
            return;
        }
        closed.clear();
        for (std::size_t c = 0; c < cliques.size(); ++c) {
            bool ok = true;
            cliques[c].for_each([&](int v) {
                if (!cs.desc[v].subset_of(cliques[c])) ok = false;
            });
            if (ok) closed.push_back(c);
        }
        std::vector<NodeSet> chosen;
        auto cover_rec = [&](auto&& self, std::uint32_t rest) -> void {
            if (rest == 0) {
                best = Best{static_cast<int>(chosen.size()), cs.children_vec(), chosen};
                best_k = static_cast<int>(chosen.size());
                return;
            }
            if (static_cast<int>(chosen.size()) + 1 >= best_k) return;
            int e = __builtin_ctz(rest);
            for (std::size_t c : closed) {
                if (!(clique_edges[c] >> e & 1)) continue;
                chosen.push_back(cliques[c]);
                self(self, rest & ~clique_edges[c]);
                chosen.pop_back();
            }
        };
        cover_rec(cover_rec, residual);
    };

    // Descendant sets only grow along a branch, so a non-clique
    // descendant set kills the whole subtree.
    auto rec = [&](auto&& self, int k, const detail::ClosureState& cs) -> void {
        for (int j = k; j < m; ++j) {
            auto [u, v] = edges[j];
            for (auto [a, b] : {Arc{u, v}, Arc{v, u}}) {
                if (best_k == 0) return;
                if (cs.would_cycle(a, b)) continue;
                detail::ClosureState next = cs;
                next.add(a, b);
                bool cliquey = true;
                next.anc[a].for_each([&](int x) {
                    if (!is_clique(g, next.desc[x])) cliquey = false;
                });
                if (!cliquey) continue;
                evaluate(next);
                self(self, j + 1, next);
            }
        }
    };

    detail::ClosureState cs;
    cs.init(n);
    evaluate(cs);
    rec(rec, 0, cs);

    if (!best) return std::nullopt;
    int k = best->k;
    detail::check_node_count(n + k);
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v)
        best->dag_rows[v].for_each([&](int w) { arcs.emplace_back(v, w); });
    for (int j = 0; j < k; ++j)
        best->aux[j].for_each([&](int v) { arcs.emplace_back(n + j, v); });
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels = g.labels();
        labels.resize(n + k);
        for (int j = 0; j < k; ++j) labels[n + j] = "q" + std::to_string(j);
    }
    return AugmentedDag{Dag(n + k, arcs, labels), n};
}

}  // namespace migdag
