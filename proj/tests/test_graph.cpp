#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace migdag;

TEST_CASE("node sets") {
    NodeSet s;
    CHECK(s.empty());
    s.insert(3);
    s.insert(60);
    CHECK(s.count() == 2);
    CHECK(s.contains(60));
    CHECK(!s.contains(4));
    CHECK(s.lowest() == 3);
    CHECK(s.with(4).count() == 3);
    CHECK(s.without(3) == NodeSet::single(60));
    CHECK(NodeSet::first_n(4).bits() == 0xf);
    CHECK(NodeSet::first_n(64).count() == 64);
    CHECK(NodeSet::single(3).subset_of(s));
    CHECK(!s.subset_of(NodeSet::single(3)));
    CHECK((s & NodeSet::single(3)) == NodeSet::single(3));
    CHECK((s - NodeSet::single(3)) == NodeSet::single(60));

    std::vector<int> seen;
    s.for_each([&](int v) { seen.push_back(v); });
    CHECK(seen == std::vector<int>{3, 60});
}

TEST_CASE("undirected graph basics") {
    UndirectedGraph g(4, {{2, 1}, {0, 1}, {1, 3}});
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 3));
    CHECK(g.degree(1) == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}});
    CHECK(g.label(2) == "2");

    CHECK_THROWS_AS(UndirectedGraph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(UndirectedGraph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(UndirectedGraph(2, {{0, 5}}), std::out_of_range);
    CHECK_THROWS_AS(UndirectedGraph(65), CapacityError);
    CHECK_THROWS_AS(UndirectedGraph(-1), std::invalid_argument);
    CHECK_THROWS_AS(UndirectedGraph(3, {}, {"x"}), std::invalid_argument);

    UndirectedGraph labeled(2, {{0, 1}}, {"left", "right"});
    CHECK(labeled.label(1) == "right");
    CHECK(labeled == UndirectedGraph(2, {{1, 0}}));  // labels don't affect equality
}

TEST_CASE("dag construction and order") {
    Dag d(4, {{0, 1}, {1, 2}, {0, 3}});
    CHECK(d.arc_count() == 3);
    CHECK(d.has_arc(0, 1));
    CHECK(!d.has_arc(1, 0));
    CHECK(d.children(0) == (NodeSet::single(1) | NodeSet::single(3)));
    CHECK(d.parents(2) == NodeSet::single(1));
    CHECK(d.arcs() == std::vector<Arc>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(d.topological_order() == std::vector<int>{0, 1, 2, 3});

    CHECK_THROWS_AS(Dag(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Dag(3, {{0, 1}, {1, 2}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Dag(2, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("mixed graph keeps one link per pair") {
    MixedGraph m(3, {{0, 1}}, {{1, 2}});
    CHECK(m.has_arc(0, 1));
    CHECK(!m.has_arc(1, 0));
    CHECK(m.has_undirected(1, 2));
    CHECK(m.has_undirected(2, 1));
    CHECK(m.arcs() == std::vector<Arc>{{0, 1}});
    CHECK(m.undirected_edges() == std::vector<Edge>{{1, 2}});
    CHECK_THROWS_AS(MixedGraph(2, {{0, 1}}, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(MixedGraph(2, {{0, 1}, {1, 0}}, {}), std::invalid_argument);
}

TEST_CASE("boundaries, cliques, simplicial nodes") {
    auto g = testutil::fixture("fig1a.txt");
    // a1 = 0, a2 = 1, a3 = 2, b1 = 3, b2 = 4, c1 = 5
    CHECK(boundary(g, 0) == NodeSet(0b001011));
    CHECK(neighborhood(g, 0) == NodeSet(0b001010));
    CHECK(is_clique(g, NodeSet(0b001011)));
    CHECK(!is_clique(g, NodeSet(0b010011)));
    CHECK(is_clique(g, NodeSet{}));
    CHECK(is_clique(g, NodeSet::single(2)));

    CHECK(is_simplicial(g, 0));
    CHECK(is_simplicial(g, 2));
    CHECK(is_simplicial(g, 5));
    CHECK(!is_simplicial(g, 1));
    CHECK(!is_simplicial(g, 3));
}

TEST_CASE("simplex decomposition of the running example") {
    auto g = testutil::fixture("fig1a.txt");
    auto d = simplex_decomposition(g);
    CHECK(d.all_simplicial == NodeSet(0b100101));
    REQUIRE(d.simplexes.size() == 3);
    CHECK(d.simplexes[0] == NodeSet(0b001011));  // {a1,a2,b1}
    CHECK(d.simplexes[1] == NodeSet(0b010110));  // {a2,a3,b2}
    CHECK(d.simplexes[2] == NodeSet(0b111000));  // {b1,b2,c1}
    CHECK(d.simplicial[0] == NodeSet::single(0));
    CHECK(d.simplicial[1] == NodeSet::single(2));
    CHECK(d.simplicial[2] == NodeSet::single(5));
}

TEST_CASE("two simplicial nodes can share a simplex") {
    UndirectedGraph k2(2, {{0, 1}});
    auto d = simplex_decomposition(k2);
    REQUIRE(d.simplexes.size() == 1);
    CHECK(d.simplicial[0] == NodeSet::first_n(2));
}

TEST_CASE("components and connectivity") {
    UndirectedGraph g(5, {{0, 2}, {1, 3}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == NodeSet(0b00101));
    CHECK(comps[1] == NodeSet(0b01010));
    CHECK(comps[2] == NodeSet::single(4));
    CHECK(!is_connected(g));
    CHECK(is_connected(UndirectedGraph(1)));
    CHECK(is_connected(UndirectedGraph(0)));
    CHECK(is_connected(testutil::fixture("fig6a.txt")));
}

TEST_CASE("maximal cliques") {
    UndirectedGraph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto cliques = maximal_cliques(diamond);
    REQUIRE(cliques.size() == 2);
    CHECK(cliques[0] == NodeSet(0b0111));
    CHECK(cliques[1] == NodeSet(0b1110));

    auto single = maximal_cliques(UndirectedGraph(1));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == NodeSet::single(0));

    // Every maximal clique really is one, on a handful of random graphs.
    for (unsigned seed = 0; seed < 10; ++seed) {
        auto g = testutil::random_graph(9, 0.45, seed);
        for (NodeSet c : maximal_cliques(g)) {
            CHECK(is_clique(g, c));
            bool extendable = false;
            g.nodes().for_each([&](int v) {
                if (!c.contains(v) && is_clique(g, c.with(v))) extendable = true;
            });
            CHECK(!extendable);
        }
    }
}
