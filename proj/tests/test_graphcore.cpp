#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gzlab/multigraph.hpp"
#include "support.hpp"

using namespace gzlab;

TEST_CASE("parse smallest legal file") {
    auto g = parse_graph(std::string("gamma-graph v1\nvertex a\nvertex b\nedge e1 a b\n"));
    CHECK(g.vertices.size() == 2);
    CHECK(g.edges.size() == 1);
    CHECK(g.edges[0].a == "a");
    CHECK(g.edges[0].b == "b");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph(std::string("gamma-graph v1\nedge e1 a b\n")), ReferenceError);
    CHECK_THROWS_AS(parse_graph(std::string("nonsense\n")), ParseError);
    CHECK_THROWS_AS(parse_graph(std::string("gamma-graph v1\nvertex a\nvertex a\n")), ParseError);
    CHECK_THROWS_AS(parse_graph(std::string("gamma-graph v1\nvertex a 1 2\n")), ParseError);
    CHECK_THROWS_AS(
        parse_graph(std::string("gamma-graph v1\nvertex a 0 0 0\nvertex b\nedge e a b\n")),
        ParseError); // all-or-nothing embedding
}

TEST_CASE("comments and blank lines are skipped") {
    auto g = parse_graph(std::string("# hello\ngamma-graph v1\n\n# mid\nvertex a\n"));
    CHECK(g.vertices.size() == 1);
}

TEST_CASE("serialize: empty graph is header only") {
    CHECK(serialize_graph(Multigraph{}) == "gamma-graph v1\n");
}

TEST_CASE("serialize: triangle keeps insertion order") {
    auto text = serialize_graph(testsupport::triangle());
    CHECK(text ==
          "gamma-graph v1\nvertex a\nvertex b\nvertex c\n"
          "edge e1 a b\nedge e2 b c\nedge e3 c a\n");
}

TEST_CASE("embedded graph round-trips byte for byte") {
    Multigraph g;
    const Vec3 pts[6] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    for (int i = 0; i < 6; ++i) g.add_vertex("v" + std::to_string(i), pts[i]);
    int e = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            if (dist(pts[i], pts[j]) > 1.5) continue; // skip antipodes
            g.add_edge("e" + std::to_string(e++), "v" + std::to_string(i), "v" + std::to_string(j),
                       {pts[i], normalized(pts[i] + pts[j]) * 1.0, pts[j]});
        }
    REQUIRE(g.edges.size() == 12);
    auto once = serialize_graph(g);
    auto twice = serialize_graph(parse_graph(once));
    CHECK(once == twice);
}

TEST_CASE("round trip is structural identity on random graphs") {
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        auto g = testsupport::random_md2_graph(rng);
        auto g2 = parse_graph(serialize_graph(g));
        CHECK(serialize_graph(g2) == serialize_graph(g));
    }
}

TEST_CASE("validate triangle") {
    auto r = validate(testsupport::triangle());
    CHECK(r.connected);
    CHECK(r.min_degree == 2);
    CHECK(r.md2);
    CHECK(r.cycle_rank == 1);
}

TEST_CASE("validate two disjoint edges") {
    Multigraph g;
    for (auto v : {"a", "b", "c", "d"}) g.add_vertex(v);
    g.add_edge("e1", "a", "b");
    g.add_edge("e2", "c", "d");
    CHECK_FALSE(validate(g).connected);
}

TEST_CASE("validate octahedron cycle rank") {
    Multigraph g;
    for (int i = 0; i < 6; ++i) g.add_vertex("v" + std::to_string(i));
    // octahedron = K6 minus perfect matching (v0v1, v2v3, v4v5)
    int e = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            if (j == i + 1 && i % 2 == 0) continue;
            g.add_edge("e" + std::to_string(e++), "v" + std::to_string(i), "v" + std::to_string(j));
        }
    REQUIRE(g.edges.size() == 12);
    auto r = validate(g);
    CHECK(r.cycle_rank == 7);
    CHECK(r.connected);
}

TEST_CASE("arc system: single edge") {
    Multigraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_edge("e", "a", "b");
    auto as = build_arc_system(g);
    CHECK(as.arc_count() == 2);
    CHECK(as.succ[0].empty());
    CHECK(as.succ[1].empty());
}

TEST_CASE("arc system: triangle has unique successors") {
    auto as = build_arc_system(testsupport::triangle());
    CHECK(as.arc_count() == 6);
    for (int a = 0; a < 6; ++a) CHECK(as.succ[a].size() == 1);
}

TEST_CASE("arc system: K4 has two successors per arc") {
    auto as = build_arc_system(testsupport::k4());
    CHECK(as.arc_count() == 12);
    for (int a = 0; a < 12; ++a) CHECK(as.succ[a].size() == 2);
}

TEST_CASE("arc system: self-loop arcs are mutual inverses, may self-succeed") {
    auto as = build_arc_system(testsupport::bouquet2());
    CHECK(as.arc_count() == 4);
    for (int a = 0; a < 4; ++a) {
        CHECK(ArcSystem::inverse(a) != a);
        // every arc except the inverse follows
        CHECK(as.succ[a].size() == 3);
        for (int b : as.succ[a]) CHECK(b != ArcSystem::inverse(a));
        CHECK(std::count(as.succ[a].begin(), as.succ[a].end(), a) == 1);
    }
}

TEST_CASE("property: degree sum and succ out-degrees") {
    std::mt19937 rng(99);
    for (int i = 0; i < 30; ++i) {
        auto g = testsupport::random_md2_graph(rng);
        auto deg = g.degrees();
        long long sum = 0;
        for (int d : deg) sum += d;
        CHECK(sum == 2 * static_cast<long long>(g.edges.size()));

        bool loop_free = true;
        for (const auto& e : g.edges)
            if (e.a == e.b) loop_free = false;
        if (loop_free) {
            auto as = build_arc_system(g);
            for (int a = 0; a < as.arc_count(); ++a)
                CHECK(static_cast<int>(as.succ[a].size()) == deg[as.head[a]] - 1);
        }
    }
}
