#pragma once

#include <string>
#include <unordered_set>

#include "migdag/poset.hpp"
#include "migdag/smig.hpp"

namespace migdag {

// Exhaustive reference enumeration of the faithful DAGs of g: every node
// pair adjacent in g is assigned one of {no arc, ->, <-}. Pairs that are
// not adjacent never carry an arc in a faithful DAG (an arc makes its
// tail a common ancestor of both endpoints), so they are skipped. Partial
// assignments are pruned as soon as they create a cycle or a common
// ancestor for a non-adjacent pair.
//
// Exponential; refuses graphs with more than 6 nodes or 15 edges.
inline std::vector<Dag> all_faithful_dags_bruteforce(const UndirectedGraph& g) {
    if (g.n() > 6 || g.edge_count() > 15)
        throw CapacityError("brute-force faithful DAG search limited to 6 nodes / 15 edges");
    const auto slots = g.edges();
    const int n = g.n();
    std::vector<Dag> out;

    auto consistent_so_far = [&](const detail::ClosureState& st) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v) && st.anc[u].intersects(st.anc[v])) return false;
        return true;
    };
    auto covers_all_edges = [&](const detail::ClosureState& st) {
        for (auto [u, v] : slots)
            if (!st.anc[u].intersects(st.anc[v])) return false;
        return true;
    };

    auto rec = [&](auto&& self, std::size_t k, const detail::ClosureState& st) -> void {
        if (k == slots.size()) {
            if (covers_all_edges(st)) out.emplace_back(detail::dag_from_rows(n, st.children_vec(), g.labels()));
            return;
        }
        auto [u, v] = slots[k];
        self(self, k + 1, st);  // no arc on this pair
        for (auto [a, b] : {Arc{u, v}, Arc{v, u}}) {
            if (st.would_cycle(a, b)) continue;
            detail::ClosureState next = st;
            next.add(a, b);
            if (consistent_so_far(next)) self(self, k + 1, next);
        }
    };

    detail::ClosureState st;
    st.init(n);
    rec(rec, 0, st);
    return out;
}

// Distinct transitive closures of the faithful DAGs, as posets.
inline std::vector<Poset> all_faithful_posets_bruteforce(const UndirectedGraph& g) {
    std::vector<Poset> out;
    std::unordered_set<std::string> seen;
    for (const Dag& d : all_faithful_dags_bruteforce(g)) {
        auto desc = detail::descendant_rows(d.n(), detail::children_rows(d));
        if (seen.insert(detail::row_key(d.n(), desc)).second) out.push_back(Poset::of(d));
    }
    return out;
}

// True when p is faithful to g and no faithful poset's order relation
// strictly contains p's.
inline bool maximality_check(const UndirectedGraph& g, const Poset& p) {
    if (p.n() != g.n()) throw std::invalid_argument("poset and graph sizes differ");
    if (!(marginal_independence_graph(p) == g)) return false;
    auto mine = detail::descendant_rows(p.n(), detail::children_rows(p.reduction()));
    for (const Poset& q : all_faithful_posets_bruteforce(g)) {
        auto theirs = detail::descendant_rows(q.n(), detail::children_rows(q.reduction()));
        bool contains = true, equal = true;
        for (int v = 0; v < g.n(); ++v) {
            if (!mine[v].subset_of(theirs[v])) contains = false;
            if (!(mine[v] == theirs[v])) equal = false;
        }
        if (contains && !equal) return false;
    }
    return true;
}

}  // namespace migdag
