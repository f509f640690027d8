#pragma once

#include <unordered_set>

#include "migdag/enumerate.hpp"

namespace migdag {

namespace detail {

// Minimum adjacency code of an undirected graph over all permutations
// that list vertices in ascending degree order (degree is an invariant,
// so restricting to these permutations keeps the code canonical while
// pruning hard). Bit order: position k contributes its adjacencies to
// positions 0..k-1, earlier positions more significant. Fits 64 bits for
// n <= 10.
inline std::uint64_t min_code_undirected(int n, const NodeSet* adj) {
    const int total_bits = n * (n - 1) / 2;
    int deg[16], target[16], placed[16];
    for (int v = 0; v < n; ++v) deg[v] = target[v] = adj[v].count();
    std::sort(target, target + n);

    std::uint64_t best = 0;
    bool have = false;
    NodeSet used;

    auto rec = [&](auto&& self, int k, std::uint64_t pref) -> void {
        if (k == n) {
            if (!have || pref < best) { best = pref; have = true; }
            return;
        }
        const int bits_after = (k + 1) * k / 2;
        struct Cand { std::uint64_t block; int v; };
        Cand cands[16];
        int nc = 0;
        for (int v = 0; v < n; ++v) {
            if (used.contains(v) || deg[v] != target[k]) continue;
            std::uint64_t block = 0;
            for (int i = 0; i < k; ++i) block = (block << 1) | adj[v].contains(placed[i]);
            cands[nc++] = {block, v};
        }
        std::sort(cands, cands + nc, [](const Cand& a, const Cand& b) {
            return a.block < b.block || (a.block == b.block && a.v < b.v);
        });
        for (int c = 0; c < nc; ++c) {
            std::uint64_t next = (pref << k) | cands[c].block;
            if (have && next > (best >> (total_bits - bits_after))) break;  // sorted: rest worse
            placed[k] = cands[c].v;
            used.insert(cands[c].v);
            self(self, k + 1, next);
            used.erase(cands[c].v);
        }
    };
    rec(rec, 0, 0);
    return best;
}

// Same idea for digraphs: position k contributes bit pairs
// (earlier -> k, k -> earlier), permutations restricted to ascending
// (out-degree, in-degree) order. Fits 64 bits for n <= 8.
inline std::uint64_t min_code_digraph(int n, const NodeSet* out_rows) {
    const int total_bits = n * (n - 1);
    NodeSet in_rows[8];
    for (int v = 0; v < n; ++v)
        out_rows[v].for_each([&](int w) { in_rows[w].insert(v); });
    int key[8], target[8], placed[8];
    for (int v = 0; v < n; ++v) key[v] = target[v] = out_rows[v].count() * 16 + in_rows[v].count();
    std::sort(target, target + n);

    std::uint64_t best = 0;
    bool have = false;
    NodeSet used;

    auto rec = [&](auto&& self, int k, std::uint64_t pref) -> void {
        if (k == n) {
            if (!have || pref < best) { best = pref; have = true; }
            return;
        }
        const int bits_after = (k + 1) * k;
        struct Cand { std::uint64_t block; int v; };
        Cand cands[8];
        int nc = 0;
        for (int v = 0; v < n; ++v) {
            if (used.contains(v) || key[v] != target[k]) continue;
            std::uint64_t block = 0;
            for (int i = 0; i < k; ++i) {
                block = (block << 1) | out_rows[placed[i]].contains(v);
                block = (block << 1) | out_rows[v].contains(placed[i]);
            }
            cands[nc++] = {block, v};
        }
        std::sort(cands, cands + nc, [](const Cand& a, const Cand& b) {
            return a.block < b.block || (a.block == b.block && a.v < b.v);
        });
        for (int c = 0; c < nc; ++c) {
            std::uint64_t next = (pref << (2 * k)) | cands[c].block;
            if (have && next > (best >> (total_bits - bits_after))) break;
            placed[k] = cands[c].v;
            used.insert(cands[c].v);
            self(self, k + 1, next);
            used.erase(cands[c].v);
        }
    };
    rec(rec, 0, 0);
    return best;
}

// Rebuilds the edge list encoded by a min_code_undirected value.
inline std::vector<Edge> decode_undirected(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    for (int k = n - 1; k >= 1; --k) {
        std::uint64_t block = code & ((std::uint64_t{1} << k) - 1);
        code >>= k;
        for (int i = 0; i < k; ++i)
            if ((block >> (k - 1 - i)) & 1) edges.emplace_back(i, k);
    }
    return edges;
}

inline bool rows_connected(int n, const NodeSet* adj) {
    if (n <= 1) return true;
    NodeSet comp = NodeSet::single(0);
    for (;;) {
        NodeSet grown = comp;
        comp.for_each([&](int u) { grown |= adj[u]; });
        if (grown == comp) return comp == NodeSet::first_n(n);
        comp = grown;
    }
}

// Canonical codes of all (optionally connected) graph classes on n
// labeled nodes, by full labeled enumeration and dedup. 2^(n choose 2)
// iterations.
inline std::vector<std::uint64_t> graph_class_codes(int n, bool connected_only) {
    const int pairs = n * (n - 1) / 2;
    std::vector<Edge> pair_list;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);
    std::unordered_set<std::uint64_t> codes;
    NodeSet adj[16];
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        for (int v = 0; v < n; ++v) adj[v] = NodeSet{};
        for (int p = 0; p < pairs; ++p)
            if ((bits >> p) & 1) {
                adj[pair_list[p].first].insert(pair_list[p].second);
                adj[pair_list[p].second].insert(pair_list[p].first);
            }
        if (connected_only && !rows_connected(n, adj)) continue;
        codes.insert(min_code_undirected(n, adj));
    }
    std::vector<std::uint64_t> out(codes.begin(), codes.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Canonical byte string: equal exactly for isomorphic graphs. Layout:
// node count, sorted degree sequence, then the minimum adjacency code.
struct CanonicalForm {
    std::vector<std::uint8_t> code;
    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const { return code < o.code; }
};

inline CanonicalForm canonical_form(const UndirectedGraph& g) {
    if (g.n() > 10) throw CapacityError("canonical form limited to 10 nodes");
    NodeSet adj[16];
    std::vector<int> degs;
    for (int v = 0; v < g.n(); ++v) {
        adj[v] = g.adjacent(v);
        degs.push_back(g.degree(v));
    }
    std::sort(degs.begin(), degs.end());
    CanonicalForm f;
    f.code.push_back(static_cast<std::uint8_t>(g.n()));
    for (int d : degs) f.code.push_back(static_cast<std::uint8_t>(d));
    std::uint64_t bits = detail::min_code_undirected(g.n(), adj);
    for (int b = 7; b >= 0; --b) f.code.push_back(static_cast<std::uint8_t>((bits >> (8 * b)) & 0xff));
    return f;
}

// Canonical 64-bit code for DAGs and other digraphs on up to 8 nodes.
inline std::uint64_t canonical_digraph_code(const Dag& d) {
    if (d.n() > 8) throw CapacityError("digraph canonical code limited to 8 nodes");
    NodeSet rows[8];
    for (int v = 0; v < d.n(); ++v) rows[v] = d.children(v);
    return detail::min_code_digraph(d.n(), rows);
}

struct ConnectedCensus {
    std::uint64_t graphs = 0;       // connected graphs up to isomorphism
    std::uint64_t smigs = 0;        // of those, simple marginal independence graphs
    std::uint64_t unique_dag = 0;   // of those, with exactly one faithful DAG
};

// Full labeled enumeration with canonical dedup; n = 8 costs 2^28
// iterations and must be requested explicitly.
inline ConnectedCensus census_connected(int n, bool allow_expensive = false) {
    if (n < 1) throw std::invalid_argument("need at least one node");
    if (n > 8) throw CapacityError("census limited to 8 nodes");
    if (n == 8 && !allow_expensive)
        throw CapacityError("census at 8 nodes is expensive; enable it explicitly");
    ConnectedCensus row;
    for (std::uint64_t code : detail::graph_class_codes(n, true)) {
        ++row.graphs;
        UndirectedGraph g(n, detail::decode_undirected(n, code));
        if (!is_smig(g).smig) continue;
        ++row.smigs;
        if (has_unique_faithful_dag(g)) ++row.unique_dag;
    }
    return row;
}

// Number of labeled posets on n nodes, counted by enumerating their
// transitive reductions: the acyclic atransitive arc sets.
inline std::uint64_t count_labeled_posets(int n) {
    if (n < 0) throw std::invalid_argument("negative node count");
    if (n > 7) throw CapacityError("labeled poset count limited to 7 nodes");
    std::vector<Edge> pair_list;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, std::size_t k, const detail::ClosureState& cs) -> void {
        ++count;
        for (std::size_t j = k; j < pair_list.size(); ++j) {
            auto [u, v] = pair_list[j];
            for (auto [a, b] : {Arc{u, v}, Arc{v, u}}) {
                if (cs.would_cycle(a, b) || cs.breaks_atransitivity(a, b)) continue;
                detail::ClosureState next = cs;
                next.add(a, b);
                self(self, j + 1, next);
            }
        }
    };
    detail::ClosureState cs;
    cs.init(n);
    rec(rec, 0, cs);
    return count;
}

// Number of faithful posets of the complete graph, which factors as
// n * (labeled posets on n-1 nodes): the enumeration and the formula are
// computed independently and must agree.
inline std::uint64_t count_faithful_to_complete(int n) {
    if (n < 1) throw std::invalid_argument("need at least one node");
    if (n > 7) throw CapacityError("complete-graph poset count limited to 7 nodes");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    UndirectedGraph complete(n, edges);
    std::uint64_t streamed = 0;
    faithful_posets(complete, [&](const Poset&) { ++streamed; });
    std::uint64_t formula = static_cast<std::uint64_t>(n) * count_labeled_posets(n - 1);
    if (streamed != formula)
        throw std::logic_error("complete-graph enumeration disagrees with the factorization");
    return streamed;
}

// Number of SMIG isomorphism classes on n nodes, counted two ways that
// must agree: filtering the graph census, and counting height-one posets
// up to digraph isomorphism (bound graphs give the bijection).
inline std::uint64_t count_smigs_height1(int n, bool connected_only) {
    if (n < 1) throw std::invalid_argument("need at least one node");
    if (n > 7) throw CapacityError("SMIG class count limited to 7 nodes");

    std::uint64_t by_census = 0;
    for (std::uint64_t code : detail::graph_class_codes(n, connected_only))
        if (is_smig(UndirectedGraph(n, detail::decode_undirected(n, code))).smig) ++by_census;

    // Height-one posets: arcs from a tail set S to its complement, every
    // tail used, so S is recoverable and each labeled poset appears once.
    std::unordered_set<std::uint64_t> classes;
    NodeSet rows[8];
    for (std::uint64_t s_bits = 0; s_bits < (std::uint64_t{1} << n); ++s_bits) {
        NodeSet s(s_bits);
        std::vector<int> tails, heads;
        for (int v = 0; v < n; ++v) (s.contains(v) ? tails : heads).push_back(v);
        const int slots = static_cast<int>(tails.size() * heads.size());
        for (std::uint64_t arcs = 0; arcs < (std::uint64_t{1} << slots); ++arcs) {
            for (int v = 0; v < n; ++v) rows[v] = NodeSet{};
            int slot = 0;
            for (int t : tails)
                for (int h : heads) {
                    if ((arcs >> slot) & 1) rows[t].insert(h);
                    ++slot;
                }
            bool all_tails_used = true;
            for (int t : tails)
                if (rows[t].empty()) all_tails_used = false;
            if (!all_tails_used) continue;
            if (connected_only) {
                NodeSet und[8];
                for (int v = 0; v < n; ++v) und[v] = rows[v];
                for (int v = 0; v < n; ++v)
                    rows[v].for_each([&](int w) { und[w].insert(v); });
                if (!detail::rows_connected(n, und)) continue;
            }
            classes.insert(detail::min_code_digraph(n, rows));
        }
    }
    if (by_census != classes.size())
        throw std::logic_error("SMIG census disagrees with the height-one poset count");
    return by_census;
}

}  // namespace migdag
