#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace migdag;

namespace {

template <typename T, typename Emit>
std::string emitted(const T& x, Format f, Emit&& emit) {
    std::ostringstream out;
    emit(out, x, f);
    return out.str();
}

int parse_error_line(const std::string& text, Format f, bool dag = false) {
    try {
        if (dag)
            parse_dag(text, f);
        else
            parse_graph(text, f);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

}  // namespace

TEST_CASE("edge list round trips") {
    auto g = testutil::fixture("fig1a.txt");
    for (Format f : {Format::EdgeList, Format::Dot, Format::Json}) {
        auto text = emitted(g, f, [](auto& o, auto& x, Format fmt) { emit_graph(o, x, fmt); });
        auto back = parse_graph(text, f);
        CHECK(back == g);
        CHECK(back.labels() == g.labels());
    }
    for (unsigned seed = 0; seed < 8; ++seed) {
        auto r = testutil::random_graph(7, 0.4, seed);
        for (Format f : {Format::EdgeList, Format::Dot, Format::Json})
            CHECK(parse_graph(emitted(r, f, [](auto& o, auto& x, Format fmt) { emit_graph(o, x, fmt); }), f) == r);
    }
}

TEST_CASE("dag round trips") {
    Dag d(5, {{0, 1}, {0, 3}, {2, 1}, {2, 4}}, {"a", "b", "c", "d", "e"});
    for (Format f : {Format::EdgeList, Format::Dot, Format::Json}) {
        auto text = emitted(d, f, [](auto& o, auto& x, Format fmt) { emit_dag(o, x, fmt); });
        auto back = parse_dag(text, f);
        CHECK(back == d);
        CHECK(back.labels() == d.labels());
    }
}

TEST_CASE("poset and pattern emission") {
    auto g = testutil::fixture("fig4a.txt");
    auto pats = all_faithful_dag_patterns(g);
    REQUIRE(!pats.empty());
    const DagPattern* with_optional = nullptr;
    for (const auto& p : pats)
        if (!p.optional_arcs.empty()) with_optional = &p;
    REQUIRE(with_optional);

    auto el = emitted(*with_optional, Format::EdgeList,
                      [](auto& o, auto& x, Format fmt) { emit_pattern(o, x, fmt); });
    CHECK(el.find("# pattern=true") != std::string::npos);
    CHECK(el.find("?>") != std::string::npos);

    auto dot = emitted(*with_optional, Format::Dot,
                       [](auto& o, auto& x, Format fmt) { emit_pattern(o, x, fmt); });
    CHECK(dot.find("style=dashed") != std::string::npos);

    auto js = emitted(*with_optional, Format::Json,
                      [](auto& o, auto& x, Format fmt) { emit_pattern(o, x, fmt); });
    CHECK(js.find("\"optional\"") != std::string::npos);

    auto poset_text = emitted(Poset::of(Dag(3, {{0, 1}, {1, 2}})), Format::EdgeList,
                              [](auto& o, auto& x, Format fmt) { emit_poset(o, x, fmt); });
    CHECK(poset_text.find("# poset=true") != std::string::npos);
    CHECK(parse_dag(poset_text, Format::EdgeList).arcs() == std::vector<Arc>{{0, 1}, {1, 2}});
}

TEST_CASE("mixed graph emission") {
    auto sk = sink_graph(testutil::fixture("fig1a.txt"));
    auto el = emitted(sk.mixed, Format::EdgeList,
                      [](auto& o, auto& x, Format fmt) { emit_mixed(o, x, fmt); });
    CHECK(el.find("# mixed=true") != std::string::npos);
    CHECK(el.find("0 1 ->") != std::string::npos);

    auto k3sink = sink_graph(UndirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}}));
    auto dot = emitted(k3sink.mixed, Format::Dot,
                       [](auto& o, auto& x, Format fmt) { emit_mixed(o, x, fmt); });
    CHECK(dot.find("dir=none") != std::string::npos);
    auto js = emitted(k3sink.mixed, Format::Json,
                      [](auto& o, auto& x, Format fmt) { emit_mixed(o, x, fmt); });
    CHECK(js.find("\"edges\"") != std::string::npos);
    CHECK(js.find("\"arcs\"") != std::string::npos);
}

TEST_CASE("edge list errors carry line numbers") {
    CHECK(parse_error_line("", Format::EdgeList) == 1);
    CHECK(parse_error_line("# comment\nnot a header\n", Format::EdgeList) == 2);
    CHECK(parse_error_line("2 1\n0 1 junk\n", Format::EdgeList) == 2);
    CHECK(parse_error_line("2 1\n", Format::EdgeList) == 2);          // missing row
    CHECK(parse_error_line("2 1\n0 1\n0 1\n", Format::EdgeList) == 3);  // extra row
    CHECK(parse_error_line("3 2\n0 1\n5 1\n", Format::EdgeList) == 3);  // id range
    CHECK(parse_error_line("3 1\n1 1\n", Format::EdgeList) == 2);     // self-loop
    CHECK(parse_error_line("3 2\n0 1\n1 0\n", Format::EdgeList) == 3);  // duplicate
    CHECK(parse_error_line("# name=0\n2 1\n0 1\n", Format::EdgeList) == 1);  // label missing
    CHECK(parse_error_line("# name=5 far\n2 1\n0 1\n", Format::EdgeList) == 1);  // label range
    CHECK(parse_error_line("# poset=true\n2 1\n0 1\n", Format::EdgeList) == 2);  // poset into graph
    // directed rows without the directive
    CHECK(parse_error_line("2 1\n0 1\n", Format::EdgeList, true) == 1);
    // cycle reported at the header
    CHECK(parse_error_line("# poset=true\n3 3\n0 1\n1 2\n2 0\n", Format::EdgeList, true) == 2);
    // capacity errors are not parse errors
    CHECK_THROWS_AS(parse_graph("100 0\n", Format::EdgeList), CapacityError);
}

TEST_CASE("dot errors") {
    CHECK(parse_error_line("digraph g { 0 -> 1; }", Format::Dot) > 0);   // graph expected
    CHECK(parse_error_line("graph g { 0 -- 1; }", Format::Dot, true) > 0);  // digraph expected
    CHECK(parse_error_line("graph g { 0 -> 1; }", Format::Dot) == 1);    // wrong link kind
    CHECK(parse_error_line("graph g {\n 0 -- 1\n}\n", Format::Dot) == 3);  // missing ';'
    CHECK(parse_error_line("graph g {\n \"x\n}\n", Format::Dot) == 2);   // unterminated string
    CHECK(parse_error_line("graph g { a -- b; }", Format::Dot) == 1);    // non-integer ids
    CHECK(parse_error_line("graph g { 0 -- 0; }", Format::Dot) == 1);    // self-loop
    CHECK(parse_error_line("graph g { 0 -- 1; } extra", Format::Dot) == 1);
    CHECK(parse_error_line("graph g { 0 -- 1;", Format::Dot) == 1);      // unclosed block
}

TEST_CASE("dot label escaping") {
    UndirectedGraph g(2, {{0, 1}}, {"weird \"name\"", "backs\\lash"});
    auto text = emitted(g, Format::Dot, [](auto& o, auto& x, Format fmt) { emit_graph(o, x, fmt); });
    auto back = parse_graph(text, Format::Dot);
    CHECK(back.labels() == g.labels());
}

TEST_CASE("dot tolerates comments and unknown attributes") {
    auto g = parse_graph("graph picked {\n// a note\n0 [label=\"x\", color=red];\n1;\n2;\n0 -- 2 [weight=3];\n1 -- 2;\n}\n",
                         Format::Dot);
    CHECK(g.n() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(g.label(0) == "x");
    CHECK(g.label(1) == "1");
}

TEST_CASE("json errors") {
    CHECK(parse_error_line("{", Format::Json) == 1);
    CHECK(parse_error_line("[]", Format::Json) == 1);
    CHECK(parse_error_line("{\"n\": 2}", Format::Json) == 1);
    CHECK(parse_error_line("{\"n\": 2, \"edges\": [[0]]}", Format::Json) == 1);
    CHECK(parse_error_line("{\"n\": 2, \"edges\": [], \"labels\": [\"a\"]}", Format::Json) == 1);
    CHECK(parse_error_line("{\"n\": 2, \"arcs\": []}", Format::Json) == 1);  // arcs in a graph
    CHECK(parse_error_line("{\"n\": 2, \"edges\": []}", Format::Json, true) == 1);  // no arcs
    // out-of-range ids fail at graph construction
    CHECK_THROWS_AS(parse_graph("{\"n\": 2, \"edges\": [[0, 5]]}", Format::Json), std::out_of_range);
}

TEST_CASE("format names") {
    CHECK(format_from_name("edgelist") == Format::EdgeList);
    CHECK(format_from_name("dot") == Format::Dot);
    CHECK(format_from_name("json") == Format::Json);
    CHECK_THROWS_AS(format_from_name("yaml"), std::invalid_argument);
}

TEST_CASE("stdin-style stream parsing") {
    std::istringstream in("# name=1 hub\n3 2\n0 1\n2 1\n");
    auto g = parse_graph(in, Format::EdgeList);
    CHECK(g.n() == 3);
    CHECK(g.label(1) == "hub");
    CHECK(g.label(0) == "0");
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}
