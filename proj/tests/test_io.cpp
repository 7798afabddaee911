#include <doctest.h>

#include "nzflow/graph_io.hpp"

using namespace nzflow;

TEST_CASE("text format round trip") {
    std::string text = "3 3\n0 1\n1 2\n2 0\n";
    Multigraph g = parse_graph(text);
    CHECK(g.vertex_count == 3);
    CHECK(g.edge_count() == 3);
    CHECK(dump_graph_text(g) == text);
    CHECK(parse_graph(dump_graph_text(g)).edges == g.edges);
}

TEST_CASE("json format round trip") {
    Multigraph g = example_graph("3k2");
    Multigraph back = parse_graph(dump_graph_json(g));
    CHECK(back.vertex_count == g.vertex_count);
    CHECK(back.edges == g.edges);

    Multigraph j = parse_graph(R"({"vertices": 2, "edges": [[0,1],[1,0]]})");
    CHECK(j.edge_count() == 2);
    CHECK(j.edges[1].tail == 1);
}

TEST_CASE("edge order and orientation survive round trips") {
    Multigraph g(4, {{2, 1}, {1, 2}, {3, 3}, {0, 2}});
    CHECK(parse_graph(dump_graph_text(g)).edges == g.edges);
    CHECK(parse_graph(dump_graph_json(g)).edges == g.edges);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("2"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 5"), ParseError);
    CHECK_THROWS_AS(parse_graph("{\"vertices\": 2}"), ParseError);
    CHECK_THROWS_AS(parse_graph("{bad json"), ParseError);
    CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("example corpus") {
    for (const auto& name : example_names()) {
        Multigraph g = example_graph(name);
        CHECK(g.edge_count() <= 9);
        CHECK(g.vertex_count >= 2);
    }
    CHECK(example_graph("k4").edge_count() == 6);
    CHECK(example_graph("prism").edge_count() == 9);
    CHECK_THROWS_AS(example_graph("petersen"), ParseError);
}
