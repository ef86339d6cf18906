#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gzlab/delta.hpp"
#include "gzlab/gamma.hpp"
#include "support.hpp"

using namespace gzlab;
namespace ts = testsupport;

namespace {

// Octahedron graph moved into the unit cube: radius 1/2 about (1/2,1/2,1/2).
Multigraph centered_octahedron() {
    auto g = octant_graph().first;
    const Vec3 ctr{0.5, 0.5, 0.5};
    for (auto& v : g.vertices) v.coords = ctr + *v.coords * 0.5;
    for (auto& e : g.edges)
        for (auto& p : e.polyline) p = ctr + p * 0.5;
    return g;
}

// Two axis vertices joined by four edges whose bends sit at the quarter-turn
// orbit of (1/2, 9/10, 1/2) in the plane x1 = 1/2.
Multigraph banana4(double perturb = 0.0) {
    Multigraph g;
    g.add_vertex("p", Vec3{1, 0.5, 0.5});
    g.add_vertex("m", Vec3{0, 0.5, 0.5});
    const Vec3 mids[4] = {{0.5, 0.9 + perturb, 0.5},
                          {0.5, 0.5, 0.9},
                          {0.5, 0.1, 0.5},
                          {0.5, 0.5, 0.1}};
    for (int k = 0; k < 4; ++k)
        g.add_edge("e" + std::to_string(k), "p", "m",
                   {Vec3{1, 0.5, 0.5}, mids[k], Vec3{0, 0.5, 0.5}});
    return g;
}

std::vector<int> degree_multiset(const Multigraph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("angle 0 is the identity surgery") {
    auto g = centered_octahedron();
    auto [out, rep] = apply_delta(g, {0, 0, 1e-5});
    CHECK(structurally_equal(out, g, 1e-9));
    CHECK(rep.matched == rep.cut_points);
    CHECK(rep.max_mismatch <= 1e-9);
}

TEST_CASE("octahedron quarter-turn is an isomorphism with equal zeta") {
    auto g = centered_octahedron();
    for (int plane = 0; plane < 3; ++plane) {
        auto [out, rep] = apply_delta(g, {plane, 90, 1e-5});
        CHECK(rep.matched == rep.cut_points);
        CHECK(rep.cut_points == 4);  // the four rotated-side edges re-attach
        CHECK(structurally_equal(out, g, 1e-9));
        CHECK(out.vertices.size() == g.vertices.size());
        CHECK(out.edges.size() == g.edges.size());
        CHECK(degree_multiset(out) == degree_multiset(g));
        auto inv = check_zeta_invariance(g, out);
        CHECK(inv.equal);
    }
}

TEST_CASE("half-turn and three-quarter-turn also glue") {
    auto g = centered_octahedron();
    for (int angle : {180, 270}) {
        auto [out, rep] = apply_delta(g, {0, angle, 1e-5});
        CHECK(rep.matched == rep.cut_points);
        CHECK(structurally_equal(out, g, 1e-9));
        CHECK(check_zeta_invariance(g, out).equal);
    }
}

TEST_CASE("four quarter-turns close the orbit") {
    auto g = centered_octahedron();
    Multigraph cur = g;
    for (int k = 0; k < 4; ++k) {
        auto [out, rep] = apply_delta(cur, {0, 90, 1e-5});
        CHECK(rep.matched == rep.cut_points);
        cur = std::move(out);
    }
    CHECK(structurally_equal(cur, g, 1e-9));
    // and pointwise: every vertex returns to its original position
    for (const auto& v : g.vertices) {
        double best = 1e9;
        for (const auto& w : cur.vertices) best = std::min(best, dist(*v.coords, *w.coords));
        CHECK(best <= 1e-12);
    }
}

TEST_CASE("banana graph with symmetric crossings glues and keeps zeta") {
    auto g = banana4();
    auto [out, rep] = apply_delta(g, {0, 90, 1e-5});
    CHECK(rep.cut_points == 4);
    CHECK(rep.matched == 4);
    CHECK(structurally_equal(out, g, 1e-9));
    auto inv = check_zeta_invariance(g, out);
    CHECK(inv.equal);
}

TEST_CASE("perturbed crossing raises GluingMismatch") {
    auto g = banana4(0.1);
    CHECK_THROWS_AS(apply_delta(g, {0, 90, 1e-5}), GluingMismatch);
    // but the identity twist still works on the perturbed graph
    auto [out, rep] = apply_delta(g, {0, 0, 1e-5});
    CHECK(structurally_equal(out, g, 1e-9));
}

TEST_CASE("edge running inside the plane raises NonTransverse") {
    Multigraph g;
    g.add_vertex("a", Vec3{0.2, 0.5, 0.5});
    g.add_vertex("b", Vec3{0.8, 0.5, 0.5});
    g.add_edge("e", "a", "b",
               {Vec3{0.2, 0.5, 0.5}, Vec3{0.5, 0.6, 0.5}, Vec3{0.5, 0.7, 0.5},
                Vec3{0.8, 0.5, 0.5}});
    g.add_edge("f", "a", "b", {Vec3{0.2, 0.5, 0.5}, Vec3{0.5, 0.2, 0.5}, Vec3{0.8, 0.5, 0.5}});
    CHECK_THROWS_AS(apply_delta(g, {0, 90, 1e-5}), NonTransverse);
}

TEST_CASE("bad spec values are rejected") {
    auto g = centered_octahedron();
    CHECK_THROWS_AS(apply_delta(g, {0, 45, 1e-5}), Error);
    CHECK_THROWS_AS(apply_delta(g, {3, 90, 1e-5}), Error);
    Multigraph bare;
    bare.add_vertex("a");
    CHECK_THROWS_AS(apply_delta(bare, {0, 90, 1e-5}), MissingEmbedding);
}

TEST_CASE("check_zeta_invariance: triangle vs square differ at degree 3") {
    auto r = check_zeta_invariance(ts::triangle(), ts::square());
    CHECK(!r.equal);
    CHECK(r.first_diff_degree == 3);
    CHECK(r.lhs == IntPoly{1, 0, 0, -2, 0, 0, 1});
    CHECK(r.rhs == IntPoly{1, 0, 0, 0, -2, 0, 0, 0, 1});
    auto same = check_zeta_invariance(ts::k4(), ts::k4());
    CHECK(same.equal);
    CHECK(same.first_diff_degree == -1);
}

TEST_CASE("assembled Gamma graph is Delta-invariant") {
    const double bstar = solve_b();
    std::vector<EmbeddedCurve> curves;
    for (int d = 0; d < 4; ++d) {
        auto s = build_leaf_surface(bstar, d);
        for (int j = 0; j < 3; ++j)
            for (auto& c : extract_plane_curves(s, j, 1e-7, 192))
                curves.push_back(std::move(c));
    }
    auto g = assemble_gamma(dedup_curves(curves, 1e-3), 1e-4);
    for (int plane = 0; plane < 3; ++plane) {
        auto [out, rep] = apply_delta(g, {plane, 90, 1e-4});
        CHECK(rep.matched == rep.cut_points);
        CHECK(structurally_equal(out, g, 1e-3));
        CHECK(check_zeta_invariance(g, out).equal);
    }
}
