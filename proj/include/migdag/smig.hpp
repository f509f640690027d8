#pragma once

#include <array>
#include <optional>

#include "migdag/poset.hpp"

namespace migdag {

// Domain rejection: the input graph admits no faithful DAG without
// auxiliary nodes. Carries one edge outside every simplex as evidence.
struct NotSmigError : std::runtime_error {
    NotSmigError(Edge e, const std::string& what) : std::runtime_error(what), witness(e) {}
    Edge witness;
};

struct RecognitionResult {
    bool smig = false;
    std::optional<Edge> witness;                       // edge in no simplex, when !smig
    std::optional<SimplexDecomposition> decomposition; // when smig
};

// A graph has a faithful DAG exactly when every edge lies inside a
// simplex. An edge {u, v} lies inside a simplex iff some simplicial node
// is in both closed neighborhoods, which makes the test one mask
// intersection per edge.
inline RecognitionResult is_smig(const UndirectedGraph& g) {
    RecognitionResult r;
    auto dec = simplex_decomposition(g);
    for (auto [u, v] : g.edges()) {
        NodeSet common = boundary(g, u) & boundary(g, v) & dec.all_simplicial;
        if (common.empty()) {
            r.witness = Edge{u, v};
            return r;
        }
    }
    r.smig = true;
    r.decomposition = std::move(dec);
    return r;
}

struct TpWitness {
    std::array<int, 4> nodes;  // path order for a P4, cycle order for a C4
    bool cycle = false;
};

struct TpResult {
    bool trivially_perfect = false;
    std::optional<TpWitness> witness;
};

// Scans all 4-node subsets for an induced path or cycle on four nodes.
inline TpResult is_trivially_perfect(const UndirectedGraph& g) {
    const int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int quad[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int m = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.has_edge(quad[i], quad[j])) { ++deg[i]; ++deg[j]; ++m; }
                    auto order_from = [&](int s) {
                        // Walk the path/cycle from s by following unused edges.
                        std::array<int, 4> out{quad[s], -1, -1, -1};
                        NodeSet used = NodeSet::single(quad[s]);
                        for (int k = 1; k < 4; ++k) {
                            for (int j = 0; j < 4; ++j)
                                if (!used.contains(quad[j]) && g.has_edge(out[k - 1], quad[j])) {
                                    out[k] = quad[j];
                                    used.insert(quad[j]);
                                    break;
                                }
                        }
                        return out;
                    };
                    bool degs_in_1_2 = true;
                    for (int i = 0; i < 4; ++i)
                        if (deg[i] < 1 || deg[i] > 2) degs_in_1_2 = false;
                    if (m == 3 && degs_in_1_2) {
                        // Three edges, all degrees one or two: an induced path.
                        int endpoint = 0;
                        while (deg[endpoint] != 1) ++endpoint;
                        return {false, TpWitness{order_from(endpoint), false}};
                    }
                    if (m == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2)
                        return {false, TpWitness{order_from(0), true}};
                }
    return {true, std::nullopt};
}

// Partition of the nodes into closed-neighborhood equality classes,
// ordered by lowest member. Each class is a clique.
inline std::vector<NodeSet> boundary_classes(const UndirectedGraph& g) {
    std::vector<NodeSet> classes;
    NodeSet seen;
    for (int v = 0; v < g.n(); ++v) {
        if (seen.contains(v)) continue;
        NodeSet cls = NodeSet::single(v);
        NodeSet bd = boundary(g, v);
        for (int w = v + 1; w < g.n(); ++w)
            if (!seen.contains(w) && boundary(g, w) == bd) cls.insert(w);
        seen |= cls;
        classes.push_back(cls);
    }
    return classes;
}

struct SinkGraph {
    MixedGraph mixed;
};

// Orients each edge towards the endpoint with the larger closed
// neighborhood; edges whose endpoints have equal boundaries stay
// undirected, and edges with incomparable boundaries are dropped.
// Rejects graphs that are not SMIGs.
inline SinkGraph sink_graph(const UndirectedGraph& g) {
    auto rec = is_smig(g);
    if (!rec.smig)
        throw NotSmigError(*rec.witness, "graph is not a simple marginal independence graph");
    std::vector<Arc> arcs;
    std::vector<Edge> und;
    for (auto [u, v] : g.edges()) {
        NodeSet bu = boundary(g, u), bv = boundary(g, v);
        if (bu == bv) und.emplace_back(u, v);
        else if (bu.subset_of(bv)) arcs.emplace_back(u, v);
        else if (bv.subset_of(bu)) arcs.emplace_back(v, u);
        // otherwise incomparable: no sink edge
    }
    return SinkGraph{MixedGraph(g.n(), arcs, und, g.labels())};
}

// A SMIG has exactly one faithful DAG iff every simplex has exactly one
// simplicial node, the sink graph is fully directed, and its arcs are
// precisely the arcs out of the (then forced) simplicial selection.
inline bool has_unique_faithful_dag(const UndirectedGraph& g) {
    auto rec = is_smig(g);
    if (!rec.smig)
        throw NotSmigError(*rec.witness, "graph is not a simple marginal independence graph");
    const auto& dec = *rec.decomposition;
    for (NodeSet s : dec.simplicial)
        if (s.count() != 1) return false;
    SinkGraph sg = sink_graph(g);
    if (!sg.mixed.undirected_edges().empty()) return false;
    std::vector<Arc> selection_arcs;
    for (NodeSet s : dec.simplicial) {
        int i = s.lowest();
        g.adjacent(i).for_each([&](int j) { selection_arcs.emplace_back(i, j); });
    }
    std::sort(selection_arcs.begin(), selection_arcs.end());
    return sg.mixed.arcs() == selection_arcs;
}

struct Embedding {
    UndirectedGraph graph;  // input plus one fresh node per input edge
    Dag dag;                // faithful DAG witnessing the embedding
};

// Every graph is an induced subgraph of a SMIG: add one node per edge
// pointing at both endpoints. The witness DAG has exactly those arcs.
inline Embedding embed_as_induced_smig(const UndirectedGraph& g) {
    auto base_edges = g.edges();
    int n = g.n() + static_cast<int>(base_edges.size());
    detail::check_node_count(n);
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels = g.labels();
        labels.resize(n);
        for (std::size_t i = 0; i < base_edges.size(); ++i)
            labels[g.n() + i] = "e" + std::to_string(i);
    }
    std::vector<Edge> edges = base_edges;
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < base_edges.size(); ++i) {
        int w = g.n() + static_cast<int>(i);
        auto [u, v] = base_edges[i];
        edges.emplace_back(u, w);
        edges.emplace_back(v, w);
        arcs.emplace_back(w, u);
        arcs.emplace_back(w, v);
    }
    return Embedding{UndirectedGraph(n, edges, labels), Dag(n, arcs, labels)};
}

}  // namespace migdag
