#pragma once

#include <type_traits>
#include <unordered_set>

#include "migdag/smig.hpp"

namespace migdag {

struct NotTriviallyPerfectError : std::runtime_error {
    NotTriviallyPerfectError(TpWitness w, const std::string& what)
        : std::runtime_error(what), witness(w) {}
    TpWitness witness;
};

struct NotConnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Callbacks may return void, or bool where false stops the stream.
template <typename F, typename... Args>
bool keep_going(F&& f, Args&&... args) {
    if constexpr (std::is_void_v<std::invoke_result_t<F&, Args&&...>>) {
        f(std::forward<Args>(args)...);
        return true;
    } else {
        return f(std::forward<Args>(args)...);
    }
}

inline SimplexDecomposition checked_decomposition(const UndirectedGraph& g) {
    auto rec = is_smig(g);
    if (!rec.smig)
        throw NotSmigError(*rec.witness, "graph is not a simple marginal independence graph");
    return std::move(*rec.decomposition);
}

}  // namespace detail

// One simplicial node chosen from each simplex. Simplexes are pairwise
// distinct and a simplicial node lives in exactly one of them, so the
// chosen nodes are automatically distinct (and pairwise non-adjacent).
struct SimplicialSelection {
    std::vector<int> chosen;  // one entry per simplex, in decomposition order
    NodeSet mask;
};

// Enumerates selections in lexicographic order of the chosen vector.
// Returns false if the callback stopped the stream.
template <typename F>
bool for_each_simplicial_selection(const SimplexDecomposition& dec, F&& f) {
    std::vector<std::vector<int>> options;
    for (NodeSet s : dec.simplicial) {
        std::vector<int> opt;
        s.for_each([&](int v) { opt.push_back(v); });
        options.push_back(std::move(opt));
    }
    const std::size_t k = options.size();
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        SimplicialSelection sel;
        sel.chosen.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            sel.chosen.push_back(options[i][idx[i]]);
            sel.mask.insert(options[i][idx[i]]);
        }
        if (!detail::keep_going(f, sel)) return false;
        std::size_t i = k;
        while (i > 0 && ++idx[i - 1] == options[i - 1].size()) idx[--i] = 0;
        if (i == 0) return true;
    }
}

struct MinimalPoset {
    Poset poset;
    SimplicialSelection selection;
};

// The arc-minimal faithful posets: for each selection I, the height-one
// poset with arcs from each chosen node to all its neighbours.
template <typename F>
bool minimal_posets(const UndirectedGraph& g, F&& f) {
    auto dec = detail::checked_decomposition(g);
    return for_each_simplicial_selection(dec, [&](const SimplicialSelection& sel) {
        std::vector<Arc> arcs;
        for (int i : sel.chosen)
            g.adjacent(i).for_each([&](int j) { arcs.emplace_back(i, j); });
        return detail::keep_going(f, MinimalPoset{Poset::of(Dag(g.n(), arcs, g.labels())), sel});
    });
}

// The maximal faithful posets: direct every undirected sink edge by a
// linear order within each boundary-equality class (the classes are
// cliques, and all their internal pairs are the undirected sink edges).
template <typename F>
bool sink_orientations(const UndirectedGraph& g, F&& f) {
    SinkGraph sg = sink_graph(g);
    std::vector<Arc> base = sg.mixed.arcs();
    std::vector<std::vector<int>> classes;
    for (NodeSet cls : boundary_classes(g)) {
        if (cls.count() < 2) continue;
        std::vector<int> members;
        cls.for_each([&](int v) { members.push_back(v); });
        classes.push_back(std::move(members));
    }
    auto rec = [&](auto&& self, std::size_t i, std::vector<Arc>& arcs) -> bool {
        if (i == classes.size())
            return detail::keep_going(f, Poset::of(Dag(g.n(), arcs, g.labels())));
        std::vector<int> perm = classes[i];
        do {
            std::size_t mark = arcs.size();
            for (std::size_t a = 0; a < perm.size(); ++a)
                for (std::size_t b = a + 1; b < perm.size(); ++b)
                    arcs.emplace_back(perm[a], perm[b]);
            bool cont = self(self, i + 1, arcs);
            arcs.resize(mark);
            if (!cont) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return true;
    };
    return rec(rec, 0, base);
}

struct EnumerationStats {
    std::uint64_t emitted = 0;
    std::uint64_t duplicates_suppressed = 0;
    std::uint64_t recursion_nodes = 0;  // states surviving the pruning checks
};

namespace detail {

struct SinkSlot {
    int a, b;         // for directed slots the only orientation; else a < b
    bool undirected;
};

// Sink-graph edges with both endpoints outside the selection, in
// lexicographic (min, max) endpoint order.
inline std::vector<SinkSlot> restricted_slots(const SinkGraph& sg, NodeSet excluded) {
    std::vector<SinkSlot> slots;
    for (auto [a, b] : sg.mixed.arcs())
        if (!excluded.contains(a) && !excluded.contains(b))
            slots.push_back({a, b, false});
    for (auto [a, b] : sg.mixed.undirected_edges())
        if (!excluded.contains(a) && !excluded.contains(b))
            slots.push_back({a, b, true});
    std::sort(slots.begin(), slots.end(), [](const SinkSlot& s, const SinkSlot& t) {
        auto key = [](const SinkSlot& x) {
            return std::pair(std::min(x.a, x.b), std::max(x.a, x.b));
        };
        return key(s) < key(t);
    });
    return slots;
}

// Descendant rows of G with the selection's arcs added on top. Chosen
// nodes are sources, so rows of other nodes are unchanged.
inline void combined_descendants(const UndirectedGraph& g, const SimplicialSelection& sel,
                                 const ClosureState& st, std::array<NodeSet, kMaxNodes>& desc) {
    for (int v = 0; v < g.n(); ++v) desc[v] = st.desc[v];
    for (int i : sel.chosen) {
        NodeSet d = NodeSet::single(i);
        g.adjacent(i).for_each([&](int j) { d |= st.desc[j]; });
        desc[i] = d;
    }
}

}  // namespace detail

// Streams every faithful poset of g exactly once, as transitive
// reductions. For each simplicial selection I the recursion walks the
// acyclic atransitive subgraphs G of the sink graph restricted to the
// non-chosen nodes, in slot order, and emits the reduction of G plus the
// selection arcs at every surviving state. Branches die as soon as an
// added arc would close a cycle or make some arc path-implied; both
// defects persist in supergraphs, so no valid G is lost. Distinct states
// yield distinct posets (the selection is recoverable as the source set,
// G as the restriction), but a cross-selection duplicate guard is kept
// and reported through stats.
template <typename F>
bool faithful_posets(const UndirectedGraph& g, F&& f, EnumerationStats* stats = nullptr) {
    auto dec = detail::checked_decomposition(g);
    SinkGraph sg = sink_graph(g);
    EnumerationStats local;
    EnumerationStats& st_out = stats ? *stats : local;
    st_out = {};
    std::unordered_set<std::string> seen;

    bool completed = for_each_simplicial_selection(dec, [&](const SimplicialSelection& sel) {
        auto slots = detail::restricted_slots(sg, sel.mask);

        std::array<NodeSet, kMaxNodes> desc;
        auto emit = [&](const detail::ClosureState& cs) -> bool {
            ++st_out.recursion_nodes;
            detail::combined_descendants(g, sel, cs, desc);
            std::vector<NodeSet> desc_vec(desc.begin(), desc.begin() + g.n());
            auto red_rows = detail::reduction_rows(g.n(), desc_vec);
            if (!seen.insert(detail::row_key(g.n(), red_rows)).second) {
                ++st_out.duplicates_suppressed;
                return true;
            }
            ++st_out.emitted;
            return detail::keep_going(f, Poset::of(detail::dag_from_rows(g.n(), red_rows, g.labels())));
        };

        auto rec = [&](auto&& self, std::size_t k, const detail::ClosureState& cs) -> bool {
            for (std::size_t j = k; j < slots.size(); ++j) {
                const auto& s = slots[j];
                const Arc tries[2] = {{s.a, s.b}, {s.b, s.a}};
                const int n_tries = s.undirected ? 2 : 1;
                for (int t = 0; t < n_tries; ++t) {
                    auto [a, b] = tries[t];
                    if (cs.would_cycle(a, b) || cs.breaks_atransitivity(a, b)) continue;
                    detail::ClosureState next = cs;
                    next.add(a, b);
                    if (!emit(next)) return false;
                    if (!self(self, j + 1, next)) return false;
                }
            }
            return true;
        };

        detail::ClosureState cs;
        cs.init(g.n());
        if (!emit(cs)) return false;
        return rec(rec, 0, cs);
    });
    return completed;
}

// A family of faithful DAGs sharing one selection I and one sub-DAG G on
// the non-chosen nodes: every completion base + S for S a subset of the
// optional arcs is faithful, and these are all the faithful DAGs for
// that (I, G) pair. An arc i -> j is optional exactly when j is reachable
// in G from another neighbour of i (the arc is then path-implied).
struct DagPattern {
    Dag base;
    std::vector<Arc> optional_arcs;
};

template <typename F>
bool faithful_dag_patterns(const UndirectedGraph& g, F&& f) {
    auto dec = detail::checked_decomposition(g);
    SinkGraph sg = sink_graph(g);

    return for_each_simplicial_selection(dec, [&](const SimplicialSelection& sel) {
        auto slots = detail::restricted_slots(sg, sel.mask);

        auto emit = [&](const detail::ClosureState& cs) -> bool {
            std::vector<NodeSet> rows = cs.children_vec();
            std::vector<Arc> optional;
            for (int i : sel.chosen) {
                NodeSet nb = g.adjacent(i);
                NodeSet reach;
                nb.for_each([&](int k) { reach |= cs.desc[k].without(k); });
                (nb - reach).for_each([&](int j) { rows[i].insert(j); });
                (nb & reach).for_each([&](int j) { optional.emplace_back(i, j); });
            }
            return detail::keep_going(
                f, DagPattern{detail::dag_from_rows(g.n(), rows, g.labels()), std::move(optional)});
        };

        auto rec = [&](auto&& self, std::size_t k, const detail::ClosureState& cs) -> bool {
            for (std::size_t j = k; j < slots.size(); ++j) {
                const auto& s = slots[j];
                const Arc tries[2] = {{s.a, s.b}, {s.b, s.a}};
                const int n_tries = s.undirected ? 2 : 1;
                for (int t = 0; t < n_tries; ++t) {
                    auto [a, b] = tries[t];
                    if (cs.would_cycle(a, b)) continue;
                    detail::ClosureState next = cs;
                    next.add(a, b);
                    if (!emit(next)) return false;
                    if (!self(self, j + 1, next)) return false;
                }
            }
            return true;
        };

        detail::ClosureState cs;
        cs.init(g.n());
        if (!emit(cs)) return false;
        return rec(rec, 0, cs);
    });
}

// Streams every faithful DAG of g exactly once by expanding each pattern
// with every subset of its optional arcs.
template <typename F>
bool faithful_dags(const UndirectedGraph& g, F&& f, EnumerationStats* stats = nullptr) {
    EnumerationStats local;
    EnumerationStats& st_out = stats ? *stats : local;
    st_out = {};
    std::unordered_set<std::string> seen;
    std::array<NodeSet, kMaxNodes> rows;

    return faithful_dag_patterns(g, [&](const DagPattern& pat) -> bool {
        ++st_out.recursion_nodes;
        const auto t = pat.optional_arcs.size();
        if (t >= 30) throw CapacityError("pattern with 30+ optional arcs");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
            for (int v = 0; v < g.n(); ++v) rows[v] = pat.base.children(v);
            for (std::size_t i = 0; i < t; ++i)
                if ((mask >> i) & 1) rows[pat.optional_arcs[i].first].insert(pat.optional_arcs[i].second);
            if (!seen.insert(detail::row_key(g.n(), rows)).second) {
                ++st_out.duplicates_suppressed;
                continue;
            }
            ++st_out.emitted;
            std::vector<NodeSet> rv(rows.begin(), rows.begin() + g.n());
            if (!detail::keep_going(f, detail::dag_from_rows(g.n(), rv, g.labels()))) return false;
        }
        return true;
    });
}

namespace detail {

inline std::vector<NodeSet> components_within(const UndirectedGraph& g, NodeSet sub) {
    std::vector<NodeSet> comps;
    NodeSet seen;
    sub.for_each([&](int v) {
        if (seen.contains(v)) return;
        NodeSet comp = NodeSet::single(v);
        for (;;) {
            NodeSet grown = comp;
            comp.for_each([&](int u) { grown |= g.adjacent(u) & sub; });
            if (grown == comp) break;
            comp = grown;
        }
        seen |= comp;
        comps.push_back(comp);
    });
    return comps;
}

}  // namespace detail

// For a connected trivially perfect graph, the tree-shaped faithful
// poset: a node adjacent to everything becomes the sink, the components
// of the rest are solved recursively, and each sub-root points at the
// sink. Ties pick the lowest node id.
inline Poset tree_poset(const UndirectedGraph& g) {
    if (!is_connected(g)) throw NotConnectedError("graph is not connected");
    auto tp = is_trivially_perfect(g);
    if (!tp.trivially_perfect)
        throw NotTriviallyPerfectError(*tp.witness, "graph has an induced 4-node path or cycle");

    std::vector<Arc> arcs;
    auto build = [&](auto&& self, NodeSet sub) -> int {
        int central = -1;
        sub.for_each([&](int v) {
            if (central < 0 && sub.without(v).subset_of(g.adjacent(v))) central = v;
        });
        for (NodeSet comp : detail::components_within(g, sub.without(central)))
            arcs.emplace_back(self(self, comp), central);
        return central;
    };
    if (g.n() > 0) build(build, g.nodes());
    return Poset::of(Dag(g.n(), arcs, g.labels()));
}

// Collectors for callers that want materialized results.

inline std::vector<MinimalPoset> all_minimal_posets(const UndirectedGraph& g) {
    std::vector<MinimalPoset> out;
    minimal_posets(g, [&](const MinimalPoset& p) { out.push_back(p); });
    return out;
}

inline std::vector<Poset> all_sink_orientations(const UndirectedGraph& g) {
    std::vector<Poset> out;
    sink_orientations(g, [&](const Poset& p) { out.push_back(p); });
    return out;
}

inline std::vector<Poset> all_faithful_posets(const UndirectedGraph& g,
                                              EnumerationStats* stats = nullptr) {
    std::vector<Poset> out;
    faithful_posets(g, [&](const Poset& p) { out.push_back(p); }, stats);
    return out;
}

inline std::vector<DagPattern> all_faithful_dag_patterns(const UndirectedGraph& g) {
    std::vector<DagPattern> out;
    faithful_dag_patterns(g, [&](const DagPattern& p) { out.push_back(p); });
    return out;
}

inline std::vector<Dag> all_faithful_dags(const UndirectedGraph& g,
                                          EnumerationStats* stats = nullptr) {
    std::vector<Dag> out;
    faithful_dags(g, [&](const Dag& d) { out.push_back(d); }, stats);
    return out;
}

}  // namespace migdag
