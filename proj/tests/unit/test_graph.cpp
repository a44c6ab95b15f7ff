#include <doctest.h>

#include <sstream>

#include "domlab/connectivity.hpp"
#include "domlab/generators.hpp"
#include "domlab/graph.hpp"
#include "domlab/graph6.hpp"
#include "oracles.hpp"

using namespace domlab;

TEST_SUITE("graph") {

TEST_CASE("from_edges rejects loops, duplicates and bad ids") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("adjacency is sorted and symmetric") {
    Graph g = Graph::from_edges(4, {{3, 0}, {2, 0}, {1, 0}});
    CHECK(g.valid());
    CHECK(g.neighbors(0) == VertexSet{1, 2, 3});
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 9));
    CHECK(g.size() == 3);
    CHECK(g.max_degree() == 3);
    CHECK(g.min_degree() == 1);
}

TEST_CASE("neighborhoods") {
    Graph p = named_graph("p4");
    CHECK(p.closed_neighborhood(1) == VertexSet{0, 1, 2});
    CHECK(p.open_neighborhood({0, 3}) == VertexSet{1, 2});
    CHECK(p.closed_neighborhood(VertexSet{0, 3}) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("delete_edges") {
    Graph c4 = named_graph("c4");
    Graph p4 = delete_edges(c4, {{0, 3}});
    CHECK(p4 == named_graph("p4"));
    CHECK(delete_edges(c4, {}) == c4);
    Graph empty = delete_edges(c4, c4.edges());
    CHECK(empty.order() == 4);
    CHECK(empty.size() == 0);
    CHECK_THROWS_AS(delete_edges(c4, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("delete_vertices keeps a remap") {
    auto p3 = delete_vertices(named_graph("p4"), {0});
    CHECK(p3.graph == named_graph("p3"));
    CHECK(p3.original == std::vector<Vertex>{1, 2, 3});

    Graph k4 = named_graph("k4");
    auto same = delete_vertices(k4, {});
    CHECK(same.graph == k4);

    auto k2 = delete_vertices(k4, {0, 2});
    CHECK(k2.graph == named_graph("k2"));
    CHECK(k2.original == std::vector<Vertex>{1, 3});
    CHECK_THROWS_AS(delete_vertices(k4, {4}), std::out_of_range);
}

TEST_CASE("set helpers") {
    CHECK(make_vertex_set({3, 1, 3, 2}) == VertexSet{1, 2, 3});
    CHECK(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
    CHECK(set_difference({1, 2, 3}, {2}) == VertexSet{1, 3});
    CHECK(set_intersection({1, 2, 3}, {2, 4}) == VertexSet{2});
    CHECK(from_mask(to_mask({0, 5, 63})) == VertexSet{0, 5, 63});
    CHECK_THROWS_AS(to_mask({64}), CapacityError);
    CHECK_THROWS_AS(closed_masks(Graph(65)), CapacityError);
    CHECK(to_string(VertexSet{1, 4}) == "{1,4}");
}

}  // TEST_SUITE

TEST_SUITE("graph6") {

TEST_CASE("spec fixtures") {
    Graph k4 = parse_graph6("C~");
    CHECK(k4 == named_graph("k4"));
    CHECK(parse_graph6("?").order() == 0);
    CHECK(encode_graph6(named_graph("k4")) == "C~");
    CHECK(encode_graph6(named_graph("k1")) == "@");
}

TEST_CASE("errors carry byte offsets") {
    auto offset_of = [](std::string_view text) -> std::size_t {
        try {
            parse_graph6(text);
        } catch (const Graph6Error& e) {
            return e.offset();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("B") == 1);     // truncated payload
    CHECK(offset_of("") == 0);      // empty
    CHECK(offset_of(" ~") == 0);    // header below 63
    CHECK(offset_of("C~\x7f") == 2);  // outside 63..126
    CHECK(offset_of("C~~") == 2);   // trailing byte
    CHECK(offset_of("C}") == static_cast<std::size_t>(-1));
    CHECK_THROWS_AS(parse_graph6("~~??????????"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("~??~"), Graph6Error);  // long header for n <= 62
}

TEST_CASE("line endings and comments") {
    CHECK(parse_graph6("C~\n") == named_graph("k4"));
    CHECK(parse_graph6("C~\r\n") == named_graph("k4"));
    std::istringstream in("# header\nC~\n\n@\n");
    CHECK(read_graph6_lines(in) == std::vector<std::string>{"C~", "@"});
}

TEST_CASE("padding bits are ignored on parse") {
    // K2 is "A_"; setting a padding bit gives "A" + ('_' | 1).
    CHECK(parse_graph6("A`") == named_graph("k2"));
    CHECK(encode_graph6(parse_graph6("A`")) == "A_");
}

TEST_CASE("frozen networkx table agrees bit-exactly") {
    for (const auto& [name, line] : oracle::frozen_graph6_table()) {
        CAPTURE(name);
        Graph g = parse_graph6(line);
        CHECK(g.valid());
        CHECK(encode_graph6(g) == line);
        CHECK(oracle::reference_graph6(g) == line);
        if (is_named_graph(name)) CHECK(g == named_graph(name));
    }
}

TEST_CASE("round trip on random graphs including the long header") {
    for (int n : {0, 1, 2, 7, 30, 62, 63, 64, 100, 300}) {
        Graph g = random_gnp(n, 0.3, static_cast<std::uint64_t>(n));
        std::string line = encode_graph6(g);
        CHECK(line == oracle::reference_graph6(g));
        CHECK(parse_graph6(line) == g);
    }
}

}  // TEST_SUITE

TEST_SUITE("connectivity") {

TEST_CASE("is_connected") {
    CHECK(is_connected(named_graph("k4")));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(named_graph("p5")));
    CHECK(is_connected(Graph(0)));
    CHECK_FALSE(is_connected(Graph(2)));
}

TEST_CASE("components") {
    Graph g = Graph::from_edges(5, {{3, 4}, {0, 2}});
    CHECK(components(g) == std::vector<VertexSet>{{0, 2}, {1}, {3, 4}});
    CHECK(components_within(named_graph("c6"), {0, 1, 3, 4}) == std::vector<VertexSet>{{0, 1}, {3, 4}});
}

TEST_CASE("vertex connectivity fixtures") {
    CHECK(vertex_connectivity(named_graph("k4")) == 3);
    CHECK(vertex_connectivity(named_graph("c5")) == 2);
    CHECK(vertex_connectivity(named_graph("petersen")) == 3);
    CHECK(vertex_connectivity(named_graph("k1")) == 0);
    CHECK(vertex_connectivity(named_graph("p4")) == 1);
    CHECK(vertex_connectivity(Graph(3)) == 0);
    CHECK(oracle::vertex_connectivity_by_cuts(named_graph("petersen")) == 3);
    CHECK_THROWS(vertex_connectivity(Graph(0)));
}

TEST_CASE("flow agrees with cut enumeration and is at most min degree") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const int n = 2 + static_cast<int>(seed % 9);
        Graph g = random_gnp(n, 0.25 + 0.05 * static_cast<double>(seed % 12), seed);
        CAPTURE(seed);
        const int k = vertex_connectivity(g);
        CHECK(k == oracle::vertex_connectivity_by_cuts(g));
        CHECK(k <= g.min_degree());
    }
}

TEST_CASE("disjoint paths to a set") {
    Graph c6 = named_graph("c6");
    auto paths = disjoint_paths_to_set(c6, 0, {2, 4}, 2);
    REQUIRE(paths.size() == 2);
    for (const auto& p : paths) {
        CHECK(p.front() == 0);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(c6.has_edge(p[i], p[i + 1]));
    }
    CHECK(disjoint_paths_to_set(named_graph("k13"), 1, {2, 3}, 2).size() == 1);
}

TEST_CASE("is_cubic") {
    CHECK(is_cubic(named_graph("petersen")));
    CHECK_FALSE(is_cubic(named_graph("c6")));
    CHECK(is_cubic(named_graph("k4")));
}

}  // TEST_SUITE

TEST_SUITE("generators") {

TEST_CASE("random_cubic") {
    CHECK_THROWS_AS(random_cubic(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_cubic(2, 1), std::invalid_argument);
    for (std::uint64_t seed : {0u, 1u, 99u}) CHECK(random_cubic(4, seed) == named_graph("k4"));
    CHECK(random_cubic(10, 7) == random_cubic(10, 7));
    for (int n = 4; n <= 30; n += 2)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Graph g = random_cubic(n, seed);
            CHECK(g.valid());
            CHECK(is_cubic(g));
            CHECK(is_connected(g));
        }
}

TEST_CASE("seeded generators are reproducible") {
    CHECK(random_gnp(12, 0.4, 3) == random_gnp(12, 0.4, 3));
    CHECK(random_bounded_degree(12, 3, 40, 5) == random_bounded_degree(12, 3, 40, 5));
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(random_bounded_degree(12, 3, 40, seed).max_degree() <= 3);
}

TEST_CASE("rng below stays in range") {
    Rng rng(42);
    for (int i = 0; i < 1000; ++i) CHECK(rng.below(7) < 7);
}

TEST_CASE("named graphs") {
    Graph claw = named_graph("k13");
    CHECK(claw.neighbors(0) == VertexSet{1, 2, 3});
    CHECK(claw.size() == 3);
    CHECK(named_graph("claw") == claw);

    Graph c6 = named_graph("c6");
    for (Vertex v = 0; v < 6; ++v) CHECK(c6.has_edge(v, (v + 1) % 6));
    CHECK(c6.size() == 6);

    Graph pet = named_graph("petersen");
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    CHECK(oracle::girth(pet) == 5);

    CHECK(named_graph("theta(1,2,2)").size() == 5);
    CHECK(named_graph("theta(2,3,4)").order() == 8);
    CHECK(named_graph("wheel5").order() == 6);
    CHECK(named_graph("cube").size() == 12);
    CHECK(named_graph("k33").size() == 9);
    CHECK(named_graph("prism").size() == 9);
    CHECK(named_graph("double_star").size() == 5);
    CHECK_THROWS_AS(named_graph("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("c2"), std::invalid_argument);
    CHECK_FALSE(is_named_graph("C~"));
}

}  // TEST_SUITE
