#include "fankit/error.hpp"
#include "fankit/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fankit;

namespace {

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});
        es.push_back({i, i + 5});
        es.push_back({5 + i, 5 + (i + 2) % 5});
    }
    for (auto& e : es)
        if (e.u > e.v)
            std::swap(e.u, e.v);
    return Graph::from_edges(10, es);
}

Graph star(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i)
        es.push_back({0, i});
    return Graph::from_edges(leaves + 1, es);
}

} // namespace

TEST_CASE("vertex set basics") {
    VertexSet s(10, {1, 4, 7});
    CHECK(s.count() == 3);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(5));
    CHECK(s.to_vector() == std::vector<Vertex>{1, 4, 7});
    VertexSet t(10, {4, 5});
    CHECK((s & t).to_vector() == std::vector<Vertex>{4});
    CHECK((s | t).count() == 4);
    CHECK((s - t).to_vector() == std::vector<Vertex>{1, 7});
    CHECK(s.intersection_count(t) == 1);
    CHECK(VertexSet::full(4).count() == 4);
    std::vector<Vertex> seen;
    for (Vertex v : s)
        seen.push_back(v);
    CHECK(seen == s.to_vector());
}

TEST_CASE("graph construction and queries") {
    const auto k4 = Graph::complete(4);
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.min_degree() == 3);
    CHECK(Graph::cycle(5).edge_count() == 5);
    CHECK(Graph::path(4).edge_count() == 3);
    CHECK(k4.edges().front() == Edge{0, 1});
    CHECK_THROWS_AS(k4.degree(4), DomainError);
    CHECK_THROWS_AS(GraphBuilder(3).add_edge(1, 1), DomainError);
    CHECK_THROWS_AS(GraphBuilder(3).add_edge(0, 3), DomainError);

    GraphBuilder b(k4);
    b.remove_edge(0, 1);
    const auto g = b.build();
    CHECK(g.edge_count() == 5);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(k4.has_edge(0, 1));

    EdgeSet rm(4);
    rm.insert(2, 3);
    CHECK(k4.with_edges_removed(rm).edge_count() == 5);
    CHECK(g.with_edges_added({{0, 1}}) == k4);
}

TEST_CASE("graph6 decoding") {
    const auto k2 = from_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(from_graph6("C~") == Graph::complete(4));
    CHECK(from_graph6(">>graph6<<C~\n") == Graph::complete(4));
    // Two data bytes hold the 10 bits of a 5-vertex graph, so this is the empty graph.
    const auto e5 = from_graph6("D??");
    CHECK(e5.order() == 5);
    CHECK(e5.edge_count() == 0);
}

TEST_CASE("graph6 errors carry byte offsets") {
    try {
        (void)from_graph6("D?");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS((void)from_graph6("C~~"), ParseError);
    CHECK_THROWS_AS((void)from_graph6(""), ParseError);
    CHECK_THROWS_AS((void)from_graph6("C\x01"), ParseError);
    CHECK_THROWS_AS((void)read_graph6_lines("C~\nD?\n"), ParseError);
    CHECK(read_graph6_lines("C~\n\nA_\n").size() == 2);
}

TEST_CASE("graph6 round trip on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = static_cast<int>(seed % 13) + (seed % 5 == 0 ? 60 : 0);
        const auto g = oracle::random_graph(n, 0.4, seed);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    const auto big = oracle::random_graph(70, 0.1, 7);
    CHECK(to_graph6(big)[0] == '~');
    CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("e_between") {
    const auto k4 = Graph::complete(4);
    CHECK(e_between(k4, VertexSet(4, {0, 1}), VertexSet(4, {2, 3})) == 4);
    CHECK(e_between(k4, VertexSet(4, {0, 1}), VertexSet(4, {0, 1})) == 1);
    const auto c4 = Graph::cycle(4);
    CHECK(e_between(c4, VertexSet(4, {0, 2}), VertexSet(4, {1, 3})) == 4);
    CHECK(e_within(k4, VertexSet::full(4)) == 6);
    CHECK(e_to(k4, 0, VertexSet(4, {1, 2})) == 2);
    CHECK_THROWS_AS(e_between(k4, VertexSet(5, {4}), VertexSet(4, {0})), DomainError);
}

TEST_CASE("e_between matches a direct edge count") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = oracle::random_graph(12, 0.5, seed);
        const auto s = VertexSet::of(12, std::vector<Vertex>{0, 2, 3, 5, 8});
        const auto t = VertexSet::of(12, std::vector<Vertex>{1, 2, 5, 9, 11});
        long long direct = 0;
        for (auto [u, v] : g.edges())
            if ((s.contains(u) && t.contains(v)) || (s.contains(v) && t.contains(u)))
                ++direct;
        CHECK(e_between(g, s, t) == direct);
    }
}

TEST_CASE("matching number") {
    CHECK(matching_number(Graph::complete(4)) == 2);
    CHECK(matching_number(Graph::cycle(5)) == 2);
    CHECK(matching_number(petersen()) == 5);
    CHECK(matching_number(Graph(3)) == 0);
    CHECK(matching_number(star(5)) == 1);
    CHECK(maximum_matching(Graph::complete(8), 2).size() == 2);
}

TEST_CASE("matching number agrees with subset enumeration") {
    CHECK(oracle::matching_number_by_subsets(petersen()) == 5);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = oracle::random_graph(8, 0.3, seed);
        if (g.edge_count() > 20)
            continue;
        CHECK(matching_number(g) == oracle::matching_number_by_subsets(g));
        const auto m = maximum_matching(g);
        std::vector<bool> hit(8, false);
        for (auto [u, v] : m) {
            CHECK(g.has_edge(u, v));
            CHECK_FALSE(hit[static_cast<std::size_t>(u)]);
            CHECK_FALSE(hit[static_cast<std::size_t>(v)]);
            hit[static_cast<std::size_t>(u)] = hit[static_cast<std::size_t>(v)] = true;
        }
    }
}

TEST_CASE("common neighbors") {
    CHECK(common_neighbors(Graph::complete(5), VertexSet(5, {0, 1})).to_vector() == std::vector<Vertex>{2, 3, 4});
    CHECK(common_neighbors(Graph::cycle(4), VertexSet(4, {0, 2})).to_vector() == std::vector<Vertex>{1, 3});
    CHECK(common_neighbors(star(4), VertexSet(5, {1, 3})).to_vector() == std::vector<Vertex>{0});
    CHECK_THROWS_AS(common_neighbors(star(4), VertexSet(5)), DomainError);
}

TEST_CASE("delete vertex") {
    for (Vertex v = 0; v < 4; ++v)
        CHECK(delete_vertex(Graph::complete(4), v) == Graph::complete(3));
    const auto p = delete_vertex(Graph::cycle(5), 2);
    CHECK(p.order() == 4);
    CHECK(p.edge_count() == 3);
    CHECK(delete_vertex(Graph::complete(2), 0) == Graph(1));
    CHECK_THROWS_AS(delete_vertex(Graph::complete(2), 2), DomainError);
    const auto sub = induced_subgraph(Graph::cycle(5), {0, 1, 2});
    CHECK(sub.edge_count() == 2);
}
