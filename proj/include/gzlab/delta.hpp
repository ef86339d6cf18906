#pragma once

// Delta-actions as embedded-graph surgery: slice along a mid-plane, rotate
// the positive side by a quarter-turn multiple about the axis through the
// cube center, and re-glue. Surgery is defined only when every cut end finds
// a partner within the gluing tolerance.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "multigraph.hpp"
#include "zeta.hpp"

namespace gzlab {

struct DeltaSpec {
    int plane = 0;           // coordinate index j; the plane is x_j = 1/2
    int angle = 90;          // degrees, multiple of 90
    double eps_glue = 1e-5;
};

struct GluingReport {
    int cut_points = 0;   // edge-plane cut events (crossings + boundary re-attachments)
    int matched = 0;
    double max_mismatch = 0;
};

// Rotates everything strictly on the x_j > 1/2 side by the quarter-turn
// multiple, cuts crossing edges at the plane, and re-joins cut ends whose
// post-rotation positions coincide within eps_glue. Vertices and edges lying
// in the plane stay fixed; rotated edges terminating on an in-plane vertex
// re-attach to the in-plane vertex at their rotated position.
inline std::pair<Multigraph, GluingReport> apply_delta(const Multigraph& g,
                                                       const DeltaSpec& spec) {
    if (!g.embedded()) throw MissingEmbedding("apply_delta needs an embedded graph");
    if (spec.plane < 0 || spec.plane > 2) throw Error("apply_delta: plane index 0..2");
    if (spec.angle % 90 != 0 || spec.angle < 0 || spec.angle >= 360)
        throw Error("apply_delta: angle must be one of 0, 90, 180, 270");
    const int j = spec.plane;
    const double eps = spec.eps_glue;
    const Vec3 ctr{0.5, 0.5, 0.5};
    Vec3 axis{0, 0, 0};
    axis[j] = 1.0;
    const double rad = spec.angle * std::acos(-1.0) / 180.0;
    auto rot = [&](const Vec3& p) { return ctr + rotate_about(p - ctr, axis, rad); };
    auto side_of = [&](const Vec3& p) {
        const double d = p[j] - 0.5;
        return d > eps ? +1 : (d < -eps ? -1 : 0);
    };

    const int nv = static_cast<int>(g.vertices.size());
    std::vector<int> vside(nv);
    std::vector<Vec3> vpos(nv);
    for (int v = 0; v < nv; ++v) {
        const Vec3 p = *g.vertices[v].coords;
        vside[v] = side_of(p);
        vpos[v] = vside[v] > 0 ? rot(p) : p;
    }

    // slice every edge polyline into single-side pieces
    struct Piece {
        int side = 0;               // +1 rotated, -1 or 0 fixed
        std::vector<Vec3> pts;
        int v0 = -1, v1 = -1;       // vertex attachment per end, or -1 for a cut end
        int cut0 = -1, cut1 = -1;   // cut-end registry ids
    };
    struct CutEnd {
        Vec3 pos;                   // post-rotation position
        int piece, end;             // which piece, which end (0/1)
        int side;
    };
    std::vector<Piece> pieces;
    std::vector<CutEnd> cuts;

    for (const auto& e : g.edges) {
        const int va = g.checked_index(e.a), vb = g.checked_index(e.b);
        std::vector<Vec3> poly = e.polyline;
        if (poly.size() < 2) poly = {*g.vertices[va].coords, *g.vertices[vb].coords};
        std::vector<int> ps(poly.size());
        for (size_t i = 0; i < poly.size(); ++i) ps[i] = side_of(poly[i]);

        const bool all_zero = std::all_of(ps.begin(), ps.end(), [](int s) { return s == 0; });
        if (all_zero) {
            // edge lies in the plane: fixed boundary object
            pieces.push_back({0, poly, va, vb, -1, -1});
            continue;
        }
        for (size_t i = 0; i + 1 < poly.size(); ++i)
            if (ps[i] == 0 && ps[i + 1] == 0)
                throw NonTransverse("edge '" + e.id + "' runs inside the plane");

        auto next_sign = [&](size_t from) {
            for (size_t i = from; i < ps.size(); ++i)
                if (ps[i] != 0) return ps[i];
            return 0;
        };
        Piece cur;
        cur.v0 = va;
        cur.pts.push_back(poly[0]);
        cur.side = ps[0] != 0 ? ps[0] : next_sign(1);
        auto close_at_cut = [&](const Vec3& at) {
            cur.cut1 = static_cast<int>(cuts.size());
            cuts.push_back({at, static_cast<int>(pieces.size()), 1, cur.side});
            pieces.push_back(std::move(cur));
            cur = Piece{};
            cur.pts.push_back(at);
            cur.cut0 = static_cast<int>(cuts.size());
            cuts.push_back({at, static_cast<int>(pieces.size()), 0, 0});
        };
        for (size_t i = 0; i + 1 < poly.size(); ++i) {
            const int s0 = ps[i], s1 = ps[i + 1];
            if (s0 * s1 < 0) {
                // transverse segment crossing: interpolate to the plane
                const double t = (0.5 - poly[i][j]) / (poly[i + 1][j] - poly[i][j]);
                const Vec3 c = poly[i] + (poly[i + 1] - poly[i]) * t;
                cur.pts.push_back(c);
                close_at_cut(c);
                cur.side = s1;
                cur.pts.push_back(poly[i + 1]);
            } else if (s1 == 0 && i + 2 < poly.size()) {
                // interior point exactly on the plane: a crossing iff the
                // sign flips across it
                const int after = next_sign(i + 2);
                cur.pts.push_back(poly[i + 1]);
                if (after != 0 && after != cur.side) {
                    close_at_cut(poly[i + 1]);
                    cur.side = after;
                }
            } else {
                cur.pts.push_back(poly[i + 1]);
            }
        }
        cur.v1 = vb;
        if (cur.side == 0) cur.side = next_sign(0);
        pieces.push_back(std::move(cur));
        // fix the registered side of opening cut ends (unknown at creation)
        for (auto& c : cuts)
            if (c.side == 0) c.side = pieces[c.piece].side;
    }

    // rotate positive-side pieces and their cut-end registry entries
    for (auto& p : pieces)
        if (p.side > 0)
            for (auto& q : p.pts) q = rot(q);
    for (auto& c : cuts)
        if (c.side > 0) c.pos = rot(c.pos);

    GluingReport report;
    auto note_match = [&](double d) {
        report.matched++;
        report.max_mismatch = std::max(report.max_mismatch, d);
    };

    // re-attach rotated piece ends that terminate on in-plane vertices
    for (auto& p : pieces) {
        if (p.side <= 0) continue;
        for (int end : {0, 1}) {
            int& v = end == 0 ? p.v0 : p.v1;
            if (v < 0 || vside[v] != 0) continue;  // cut end or vertex rotated with the piece
            report.cut_points++;
            const Vec3 want = rot(*g.vertices[v].coords);
            int best = -1;
            double bd = eps;
            for (int w = 0; w < nv; ++w)
                if (vside[w] == 0 && dist(vpos[w], want) <= bd) {
                    bd = dist(vpos[w], want);
                    best = w;
                }
            if (best < 0)
                throw GluingMismatch("rotated edge end at vertex '" + g.vertices[v].id +
                                     "' has no in-plane partner vertex");
            note_match(bd);
            v = best;
        }
    }

    // pair rotated cut ends with fixed cut ends by position
    std::vector<int> partner(cuts.size(), -1);
    std::vector<char> used(cuts.size(), 0);
    int plus_count = 0;
    for (size_t i = 0; i < cuts.size(); ++i)
        if (cuts[i].side > 0) ++plus_count;
    report.cut_points += plus_count;
    if (2 * plus_count != static_cast<int>(cuts.size()))
        throw GluingMismatch("unbalanced cut: " + std::to_string(plus_count) + " rotated vs " +
                             std::to_string(cuts.size() - plus_count) + " fixed cut ends");
    for (size_t i = 0; i < cuts.size(); ++i) {
        if (cuts[i].side <= 0) continue;
        int best = -1;
        double bd = eps;
        for (size_t k = 0; k < cuts.size(); ++k) {
            if (cuts[k].side > 0 || used[k]) continue;
            const double d = dist(cuts[i].pos, cuts[k].pos);
            if (d <= bd) {
                bd = d;
                best = static_cast<int>(k);
            }
        }
        if (best < 0)
            throw GluingMismatch("cut end at (" + std::to_string(cuts[i].pos.x) + ", " +
                                 std::to_string(cuts[i].pos.y) + ", " +
                                 std::to_string(cuts[i].pos.z) + ") has no partner");
        used[best] = 1;
        partner[i] = best;
        partner[best] = static_cast<int>(i);
        note_match(bd);
    }

    // walk chains of pieces through matched cut junctions into final edges
    struct FinalEdge {
        int va, vb;
        std::vector<Vec3> poly;
    };
    std::vector<FinalEdge> finals;
    std::vector<char> seen(pieces.size(), 0);
    for (size_t start = 0; start < pieces.size(); ++start) {
        if (seen[start]) continue;
        if (pieces[start].v0 < 0 && pieces[start].v1 < 0) continue;  // enter later via chain
        seen[start] = 1;
        // orient so we start from a vertex end
        const bool fwd = pieces[start].v0 >= 0;
        FinalEdge fe;
        fe.va = fwd ? pieces[start].v0 : pieces[start].v1;
        int cur = static_cast<int>(start);
        bool forward = fwd;
        for (;;) {
            const Piece& p = pieces[cur];
            if (forward)
                for (const auto& q : p.pts) {
                    if (fe.poly.empty() || dist(fe.poly.back(), q) > 1e-12) fe.poly.push_back(q);
                }
            else
                for (size_t i = p.pts.size(); i-- > 0;) {
                    if (fe.poly.empty() || dist(fe.poly.back(), p.pts[i]) > 1e-12)
                        fe.poly.push_back(p.pts[i]);
                }
            const int exit_vertex = forward ? p.v1 : p.v0;
            const int exit_cut = forward ? p.cut1 : p.cut0;
            if (exit_vertex >= 0) {
                fe.vb = exit_vertex;
                break;
            }
            const int mate = partner[exit_cut];
            cur = cuts[mate].piece;
            forward = (cuts[mate].end == 0);
            if (seen[cur]) throw Error("apply_delta: inconsistent piece chain");
            seen[cur] = 1;
        }
        finals.push_back(std::move(fe));
    }
    for (size_t i = 0; i < pieces.size(); ++i)
        if (!seen[i]) throw GluingMismatch("surgery produced a vertexless edge cycle");

    // assemble result: original vertex ids with updated coordinates,
    // canonical edge order
    Multigraph out;
    for (int v = 0; v < nv; ++v) out.add_vertex(g.vertices[v].id, vpos[v]);
    std::sort(finals.begin(), finals.end(), [](const FinalEdge& a, const FinalEdge& b) {
        const auto ka = std::minmax(a.va, a.vb), kb = std::minmax(b.va, b.vb);
        if (ka != kb) return ka < kb;
        const Vec3& ma = a.poly[a.poly.size() / 2];
        const Vec3& mb = b.poly[b.poly.size() / 2];
        return std::tie(ma.x, ma.y, ma.z) < std::tie(mb.x, mb.y, mb.z);
    });
    for (size_t i = 0; i < finals.size(); ++i)
        out.add_edge("e" + std::to_string(i), g.vertices[finals[i].va].id,
                     g.vertices[finals[i].vb].id, finals[i].poly);
    return {out, report};
}

// ---------------------------------------------------------------------------
// Zeta invariance check

struct ZetaInvarianceReport {
    bool equal = false;
    int first_diff_degree = -1;  // lowest differing coefficient degree, -1 if equal
    IntPoly lhs, rhs;
};

inline ZetaInvarianceReport check_zeta_invariance(const Multigraph& g, const Multigraph& h) {
    ZetaInvarianceReport r;
    r.lhs = zeta_reciprocal(g).poly;
    r.rhs = zeta_reciprocal(h).poly;
    const size_t n = std::max(r.lhs.size(), r.rhs.size());
    r.equal = true;
    for (size_t i = 0; i < n; ++i) {
        const BigInt a = i < r.lhs.size() ? r.lhs[i] : BigInt(0);
        const BigInt b = i < r.rhs.size() ? r.rhs[i] : BigInt(0);
        if (a != b) {
            r.equal = false;
            r.first_diff_degree = static_cast<int>(i);
            break;
        }
    }
    return r;
}

} // namespace gzlab
