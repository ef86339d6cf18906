#pragma once

// Shared test utilities: small independent oracles and fixture builders.
// Everything here stays deliberately separate from the library's own
// computation paths so the two sides can disagree.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "gzlab/multigraph.hpp"

namespace testsupport {

using gzlab::Multigraph;

inline Multigraph triangle() {
    Multigraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_vertex("c");
    g.add_edge("e1", "a", "b");
    g.add_edge("e2", "b", "c");
    g.add_edge("e3", "c", "a");
    return g;
}

inline Multigraph square() {
    Multigraph g;
    for (auto v : {"a", "b", "c", "d"}) g.add_vertex(v);
    g.add_edge("e1", "a", "b");
    g.add_edge("e2", "b", "c");
    g.add_edge("e3", "c", "d");
    g.add_edge("e4", "d", "a");
    return g;
}

inline Multigraph k4() {
    Multigraph g;
    for (auto v : {"a", "b", "c", "d"}) g.add_vertex(v);
    g.add_edge("e1", "a", "b");
    g.add_edge("e2", "a", "c");
    g.add_edge("e3", "a", "d");
    g.add_edge("e4", "b", "c");
    g.add_edge("e5", "b", "d");
    g.add_edge("e6", "c", "d");
    return g;
}

inline Multigraph bouquet2() {
    Multigraph g;
    g.add_vertex("v");
    g.add_edge("l1", "v", "v");
    g.add_edge("l2", "v", "v");
    return g;
}

// --------------------------------------------------------------------------
// Naive cycle-class oracle. Re-derives the arc structure from the edge list
// and enumerates closed non-backtracking tail-less primitive walks by plain
// recursion, deduplicating by the full rotation orbit.

struct NaiveArcs {
    std::vector<int> tail, head, inv;
};

inline NaiveArcs naive_arcs(const Multigraph& g) {
    NaiveArcs na;
    for (const auto& e : g.edges) {
        int a = g.vertex_index(e.a), b = g.vertex_index(e.b);
        na.tail.push_back(a);
        na.head.push_back(b);
        na.tail.push_back(b);
        na.head.push_back(a);
        int k = static_cast<int>(na.tail.size());
        na.inv.push_back(k - 1);
        na.inv.push_back(k - 2);
    }
    return na;
}

inline void naive_extend(const NaiveArcs& na, std::vector<int>& walk, int max_len,
                         std::set<std::set<std::vector<int>>>& orbits) {
    const int n = static_cast<int>(walk.size());
    if (n >= 1) {
        int first = walk.front(), last = walk.back();
        bool closed = na.head[last] == na.tail[first] && na.inv[last] != first;
        if (closed) {
            bool primitive = true;
            for (int d = 1; d <= n / 2; ++d) {
                if (n % d) continue;
                bool rep = true;
                for (int i = d; i < n; ++i)
                    if (walk[i] != walk[i % d]) { rep = false; break; }
                if (rep) { primitive = false; break; }
            }
            if (primitive) {
                std::set<std::vector<int>> orbit;
                std::vector<int> rot = walk;
                for (int r = 0; r < n; ++r) {
                    orbit.insert(rot);
                    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                }
                orbits.insert(orbit);
            }
        }
    }
    if (n == max_len) return;
    for (int a = 0; a < static_cast<int>(na.tail.size()); ++a) {
        if (!walk.empty()) {
            int last = walk.back();
            if (na.tail[a] != na.head[last] || a == na.inv[last]) continue;
        }
        walk.push_back(a);
        naive_extend(na, walk, max_len, orbits);
        walk.pop_back();
    }
}

// All primitive class orbits of length <= L. Returns the multiset of lengths.
inline std::vector<int> naive_class_lengths(const Multigraph& g, int L) {
    NaiveArcs na = naive_arcs(g);
    std::set<std::set<std::vector<int>>> orbits;
    std::vector<int> walk;
    naive_extend(na, walk, L, orbits);
    std::vector<int> lengths;
    for (const auto& o : orbits) lengths.push_back(static_cast<int>(o.begin()->size()));
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

// --------------------------------------------------------------------------
// Tiny int64 polynomial helpers for frozen expected values.

using I64Poly = std::vector<long long>;

inline I64Poly pmul(const I64Poly& a, const I64Poly& b) {
    I64Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline I64Poly ppow(I64Poly a, int k) {
    I64Poly r{1};
    for (int i = 0; i < k; ++i) r = pmul(r, a);
    return r;
}

// Z(u) series coefficients through degree L by the naive orbit census:
// product over primitive classes of 1/(1-u^l), truncated.
inline I64Poly naive_zeta_series(const Multigraph& g, int L) {
    I64Poly out(L + 1, 0);
    out[0] = 1;
    for (int l : naive_class_lengths(g, L)) {
        I64Poly next(L + 1, 0);
        for (int i = 0; i <= L; ++i) {
            if (out[i] == 0) continue;
            for (int k = 0; i + k * l <= L; ++k) next[i + k * l] += out[i];
        }
        out = next;
    }
    return out;
}

// (1-u^2)^2 (1-u)(1-2u)(1+u+2u^2)^3, the known K4 reciprocal.
inline I64Poly k4_reciprocal_expanded() {
    I64Poly r = ppow({1, 0, -1}, 2);
    r = pmul(r, {1, -1});
    r = pmul(r, {1, -2});
    r = pmul(r, ppow({1, 1, 2}, 3));
    return r;
}

// --------------------------------------------------------------------------
// Seeded random connected md2 multigraphs, |V| <= 6, |E| <= 9, kept sparse
// enough that degree-12 walk enumeration stays cheap.

inline Multigraph random_md2_graph(std::mt19937& rng) {
    for (;;) {
        std::uniform_int_distribution<int> vdist(3, 6);
        int nv = vdist(rng);
        std::uniform_int_distribution<int> extra(1, std::min(3, 9 - nv + 1));
        int ne = nv - 1 + extra(rng);
        if (ne > 9) continue;
        Multigraph g;
        for (int i = 0; i < nv; ++i) g.add_vertex("v" + std::to_string(i));
        // random spanning tree
        for (int i = 1; i < nv; ++i) {
            std::uniform_int_distribution<int> pdist(0, i - 1);
            g.add_edge("e" + std::to_string(g.edges.size()), "v" + std::to_string(pdist(rng)),
                       "v" + std::to_string(i));
        }
        std::uniform_int_distribution<int> any(0, nv - 1);
        while (static_cast<int>(g.edges.size()) < ne) {
            g.add_edge("e" + std::to_string(g.edges.size()), "v" + std::to_string(any(rng)),
                       "v" + std::to_string(any(rng)));
        }
        auto rep = gzlab::validate(g);
        if (rep.connected && rep.md2) return g;
    }
}

} // namespace testsupport
