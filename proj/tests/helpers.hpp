#pragma once

#include <fstream>
#include <random>
#include <set>
#include <string>

#include "migdag/migdag.hpp"

namespace testutil {

inline migdag::UndirectedGraph fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    return migdag::parse_graph(in, migdag::Format::EdgeList);
}

// Set of transitive reductions, as sorted arc lists, for set equality.
inline std::set<std::vector<migdag::Arc>> poset_set(const std::vector<migdag::Poset>& ps) {
    std::set<std::vector<migdag::Arc>> out;
    for (const auto& p : ps) out.insert(p.reduction().arcs());
    return out;
}

inline std::set<std::vector<migdag::Arc>> dag_set(const std::vector<migdag::Dag>& ds) {
    std::set<std::vector<migdag::Arc>> out;
    for (const auto& d : ds) out.insert(d.arcs());
    return out;
}

// Erdos-Renyi-ish random graph, deterministic per seed.
inline migdag::UndirectedGraph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<migdag::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return migdag::UndirectedGraph(n, edges);
}

// Relabels g by a random permutation.
inline migdag::UndirectedGraph shuffled(const migdag::UndirectedGraph& g, unsigned seed) {
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = i;
    std::mt19937 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<migdag::Edge> edges;
    for (auto [u, v] : g.edges()) {
        auto [a, b] = std::minmax(perm[u], perm[v]);
        edges.emplace_back(a, b);
    }
    return migdag::UndirectedGraph(g.n(), edges);
}

// Every connected isomorphism class on exactly n nodes.
inline std::vector<migdag::UndirectedGraph> connected_classes(int n) {
    std::vector<migdag::UndirectedGraph> out;
    for (std::uint64_t code : migdag::detail::graph_class_codes(n, true))
        out.emplace_back(n, migdag::detail::decode_undirected(n, code));
    return out;
}

inline std::vector<migdag::UndirectedGraph> all_classes(int n) {
    std::vector<migdag::UndirectedGraph> out;
    for (std::uint64_t code : migdag::detail::graph_class_codes(n, false))
        out.emplace_back(n, migdag::detail::decode_undirected(n, code));
    return out;
}

}  // namespace testutil
