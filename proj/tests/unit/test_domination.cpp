#include <doctest.h>

#include "domlab/domination.hpp"
#include "domlab/generators.hpp"
#include "oracles.hpp"

using namespace domlab;

namespace {

void check_certificate(const Graph& g, const DominationCertificate& c) {
    CHECK(is_dominating(g, c.set));
    CHECK(c.size == c.set.size());
    CHECK(c.induced_edges == induced_edge_count(g, c.set));
    CHECK(c.independent == (c.induced_edges == 0));
    if (c.kind == CertificateKind::idom) CHECK(is_maximal_independent(g, c.set));
}

std::vector<Graph> mixed_corpus() {
    std::vector<Graph> out;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const int n = 1 + static_cast<int>(seed % 12);
        out.push_back(random_gnp(n, 0.1 + 0.06 * static_cast<double>(seed % 14), seed));
    }
    return out;
}

}  // namespace

TEST_SUITE("domination") {

TEST_CASE("is_dominating") {
    CHECK(is_dominating(named_graph("k4"), {0}));
    Graph pet = named_graph("petersen");
    for (Vertex v = 0; v < 10; ++v) CHECK_FALSE(is_dominating(pet, {v}));
    CHECK(is_dominating(named_graph("c6"), {0, 3}));
    CHECK_THROWS_AS(is_dominating(named_graph("c6"), {6}), std::out_of_range);
    CHECK(is_dominating(Graph(0), {}));
}

TEST_CASE("maximal independence") {
    Graph claw = named_graph("k13");
    CHECK(is_maximal_independent(claw, {0}));
    CHECK(is_maximal_independent(claw, {1, 2, 3}));
    CHECK_FALSE(is_maximal_independent(claw, {1, 2}));
    CHECK_FALSE(is_maximal_independent(claw, {0, 1}));
}

TEST_CASE("gamma_bruteforce fixtures") {
    CHECK(gamma_bruteforce(named_graph("c6")).size == 2);
    CHECK(gamma_bruteforce(named_graph("k4")).size == 1);
    CHECK(gamma_bruteforce(named_graph("k4")).set == VertexSet{0});
    auto pet = gamma_bruteforce(named_graph("petersen"));
    CHECK(pet.size == 3);
    check_certificate(named_graph("petersen"), pet);
    CHECK_THROWS_AS(gamma_bruteforce(Graph(25)), CapacityError);
}

TEST_CASE("gamma_bruteforce returns the lexicographically smallest witness") {
    for (const Graph& g : mixed_corpus()) {
        auto all = oracle::min_dsets_by_subsets(g);
        CHECK(gamma_bruteforce(g).set == all.front());
    }
}

TEST_CASE("gamma_exact fixtures") {
    for (int n = 3; n <= 24; ++n) {
        Graph c = named_graph("c" + std::to_string(n));
        auto cert = gamma_exact(c);
        CHECK(cert.size == static_cast<std::size_t>((n + 2) / 3));
        check_certificate(c, cert);
    }
    CHECK(gamma_exact(Graph(0)).size == 0);
    Graph iso = Graph::from_edges(4, {{0, 1}, {1, 2}});
    CHECK(contains(gamma_exact(iso).set, 3));
    CHECK_THROWS_AS(gamma_exact(Graph(65)), CapacityError);
}

TEST_CASE("gamma_exact and idom_exact agree with the subset oracles") {
    for (const Graph& g : mixed_corpus()) {
        auto gamma = gamma_exact(g);
        auto idom = idom_exact(g);
        check_certificate(g, gamma);
        check_certificate(g, idom);
        CHECK(gamma.size == static_cast<std::size_t>(oracle::gamma_by_subsets(g)));
        CHECK(idom.size == static_cast<std::size_t>(oracle::idom_by_subsets(g)));
        CHECK(gamma.size <= idom.size);
        CHECK(idom.kind == CertificateKind::idom);
    }
}

TEST_CASE("idom fixtures") {
    auto claw = idom_exact(named_graph("k13"));
    CHECK(claw.size == 1);
    CHECK(claw.set == VertexSet{0});
    CHECK(idom_exact(named_graph("petersen")).size == 3);
    CHECK(idom_exact(named_graph("c4")).size == 2);
    CHECK(idom_exact(Graph(0)).size == 0);
}

TEST_CASE("gamma_min_edges") {
    auto p4 = gamma_min_edges(named_graph("p4"));
    CHECK(p4.set == VertexSet{0, 2});
    CHECK(p4.induced_edges == 0);
    CHECK(p4.kind == CertificateKind::gamma_min_edges);

    auto c6 = gamma_min_edges(named_graph("c6"));
    CHECK(c6.size == 2);
    CHECK(c6.induced_edges == 0);
    CHECK((c6.set[1] - c6.set[0]) == 3);

    auto ds = gamma_min_edges(named_graph("double_star"));
    CHECK(ds.set == VertexSet{0, 1});
    CHECK(ds.induced_edges == 1);
    CHECK(to_string(CertificateKind::gamma_min_edges) == "gamma-min-edges");
}

TEST_CASE("gamma_min_edges is minimal among all d-sets") {
    for (const Graph& g : mixed_corpus()) {
        auto all = oracle::min_dsets_by_subsets(g);
        std::size_t best = SIZE_MAX;
        VertexSet best_set;
        for (const auto& s : all) {
            std::size_t e = induced_edge_count(g, s);
            if (e < best) {
                best = e;
                best_set = s;
            }
        }
        auto cert = gamma_min_edges(g);
        CHECK(cert.induced_edges == best);
        CHECK(cert.set == best_set);
    }
}

TEST_CASE("enumerate_min_dsets") {
    auto k4 = enumerate_min_dsets(named_graph("k4"), 100);
    CHECK(k4.sets == std::vector<VertexSet>{{0}, {1}, {2}, {3}});
    CHECK_FALSE(k4.truncated);
    auto one = enumerate_min_dsets(named_graph("k4"), 1);
    CHECK(one.sets == std::vector<VertexSet>{{0}});
    CHECK(one.truncated);

    Graph c6 = named_graph("c6");
    CHECK(enumerate_min_dsets(c6, 100).sets == oracle::min_dsets_by_subsets(c6));
    CHECK(enumerate_min_dsets(c6, 100).sets == std::vector<VertexSet>{{0, 3}, {1, 4}, {2, 5}});

    for (const Graph& g : mixed_corpus()) CHECK(enumerate_min_dsets(g, 100000).sets == oracle::min_dsets_by_subsets(g));
}

TEST_CASE("deleting an edge never lowers gamma") {
    for (const Graph& g : mixed_corpus()) {
        if (g.size() == 0) continue;
        const auto before = gamma_exact(g).size;
        CHECK(gamma_exact(delete_edges(g, {g.edges().front()})).size >= before);
        CHECK(gamma_exact(delete_edges(g, {g.edges().back()})).size >= before);
    }
}

TEST_CASE("deadline throws on large inputs") {
    Graph big = random_cubic(64, 3);
    CHECK_THROWS_AS(gamma_exact(big, Deadline::after(std::chrono::milliseconds(0))), BudgetExceeded);
}

}  // TEST_SUITE
