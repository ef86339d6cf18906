#pragma once

// The Gamma-set pipeline: leaf surfaces of revolution about the cube's main
// diagonals, mid-plane intersection curves via marching squares over the
// periodic (x, theta) parameter rectangle, and assembly of the embedded
// intersection multigraph. Also the canonical spherical octant generator.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "leaf.hpp"
#include "multigraph.hpp"
#include "zeta.hpp"

namespace gzlab {

// ---------------------------------------------------------------------------
// Surfaces of revolution, generalized so the sphere test surface fits.

struct RevolutionSurface {
    Vec3 origin;            // point on the axis
    Vec3 axis;              // unit direction
    Vec3 e1, e2;            // orthonormal frame normal to the axis
    double x_max = 0;       // generator parameter range [0, x_max]
    std::function<double(double)> height;  // signed axis offset from origin
    std::function<double(double)> radius;  // distance from the axis
    std::string id;

    Vec3 sample(double x, double theta) const {
        const double r = radius(x);
        return origin + axis * height(x) + e1 * (r * std::cos(theta)) +
               e2 * (r * std::sin(theta));
    }
    Vec3 axis_point(double x) const { return origin + axis * height(x); }
};

namespace detail {

// Deterministic frame: Gram-Schmidt of the first standard basis vector
// independent of the axis.
inline void make_frame(const Vec3& axis, Vec3& e1, Vec3& e2) {
    for (int k = 0; k < 3; ++k) {
        Vec3 cand{k == 0 ? 1.0 : 0.0, k == 1 ? 1.0 : 0.0, k == 2 ? 1.0 : 0.0};
        Vec3 proj = cand - axis * dot(cand, axis);
        if (norm(proj) > 1e-8) {
            e1 = normalized(proj);
            e2 = cross(axis, e1);
            return;
        }
    }
    throw Error("make_frame: degenerate axis");
}

inline bool coord_less(const Vec3& a, const Vec3& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
}

} // namespace detail

// The four main diagonals of the unit cube, as (corner, opposite corner).
inline std::pair<Vec3, Vec3> cube_diagonal(int index) {
    switch (index) {
        case 0: return {{0, 0, 0}, {1, 1, 1}};
        case 1: return {{1, 0, 0}, {0, 1, 1}};
        case 2: return {{0, 1, 0}, {1, 0, 1}};
        case 3: return {{0, 0, 1}, {1, 1, 0}};
        default: throw Error("cube_diagonal: index must be 0..3");
    }
}

// Leaf surface about one main diagonal at curvature parameter b, centered on
// the diagonal midpoint; at the arc-length-matched b the cone points land on
// the two corners. The radius function interpolates a dense profile table.
inline RevolutionSurface build_leaf_surface(double b, int diagonal, int profile_samples = 4097) {
    auto [c0, c1] = cube_diagonal(diagonal);
    auto lp = profile_curve(b, profile_samples, 1e-12);
    RevolutionSurface s;
    s.origin = (c0 + c1) * 0.5;
    s.axis = normalized(c1 - c0);
    detail::make_frame(s.axis, s.e1, s.e2);
    s.x_max = lp.arc_length;
    s.id = "leaf" + std::to_string(diagonal);
    const double half = s.x_max / 2;
    s.height = [half](double x) { return x - half; };
    auto xs = std::make_shared<std::vector<double>>();
    auto xis = std::make_shared<std::vector<double>>();
    for (const auto& smp : lp.samples) {
        xs->push_back(smp.x);
        xis->push_back(smp.xi);
    }
    s.radius = [xs, xis](double x) {
        if (x <= xs->front()) return xis->front();
        if (x >= xs->back()) return xis->back();
        auto it = std::upper_bound(xs->begin(), xs->end(), x);
        size_t i = static_cast<size_t>(it - xs->begin());
        double t = (x - (*xs)[i - 1]) / ((*xs)[i] - (*xs)[i - 1]);
        return (1 - t) * (*xis)[i - 1] + t * (*xis)[i];
    };
    return s;
}

// Unit sphere about a main-diagonal axis; the contour-extraction test
// surface. Generator is a semicircle, x in [0, pi] is the polar angle.
inline RevolutionSurface make_sphere_surface(const Vec3& center = {0, 0, 0}, double R = 1.0) {
    RevolutionSurface s;
    s.origin = center;
    s.axis = normalized({1, 1, 1});
    detail::make_frame(s.axis, s.e1, s.e2);
    s.x_max = std::acos(-1.0);
    s.id = "sphere";
    s.height = [R](double x) { return -R * std::cos(x); };
    s.radius = [R](double x) { return R * std::sin(x); };
    return s;
}

// ---------------------------------------------------------------------------
// Plane-curve extraction

struct EmbeddedCurve {
    int plane = 0;          // coordinate index 0..2
    double offset = 0.5;    // plane is { p[plane] == offset }
    std::vector<Vec3> points;  // closed: points.front() == points.back()
    std::string leaf_id;
};

namespace detail {

struct GridEdgeKey {
    // orient 0 = along x (between rows i and i+1), 1 = along theta
    int orient, i, k;
    bool operator<(const GridEdgeKey& o) const {
        return std::tie(orient, i, k) < std::tie(o.orient, o.i, o.k);
    }
    bool operator==(const GridEdgeKey& o) const {
        return orient == o.orient && i == o.i && k == o.k;
    }
};

} // namespace detail

// Zero set of sample(x,theta)[plane] - offset, traced by marching squares on
// an (grid x grid) node lattice with theta periodic; each grid-edge crossing
// is refined by bisection until |f| <= eps. Every contour on a closed surface
// must close; an open chain raises OpenContour (grid too coarse).
inline std::vector<EmbeddedCurve> extract_plane_curves(const RevolutionSurface& s, int plane,
                                                       double eps = 1e-6, int grid = 512,
                                                       double offset = 0.5) {
    if (plane < 0 || plane > 2) throw Error("extract_plane_curves: plane index 0..2");
    const double two_pi = 2.0 * std::acos(-1.0);
    const int nx = grid, nt = grid;
    auto f = [&](double x, double theta) { return s.sample(x, theta)[plane] - offset; };

    std::vector<std::vector<double>> F(nx + 1, std::vector<double>(nt));
    for (int i = 0; i <= nx; ++i) {
        const double x = s.x_max * i / nx;
        for (int k = 0; k < nt; ++k) {
            double v = f(x, two_pi * k / nt);
            if (v == 0.0) v = 1e-300; // nudge exact zeros off the node
            F[i][k] = v;
        }
    }

    std::map<detail::GridEdgeKey, Vec3> crossing;
    auto refine = [&](double x0, double t0, double x1, double t1, double f0) {
        for (int it = 0; it < 64; ++it) {
            const double xm = 0.5 * (x0 + x1), tm = 0.5 * (t0 + t1);
            const double fm = f(xm, tm);
            if (std::abs(fm) <= eps * 1e-3) return s.sample(xm, tm);
            if ((fm > 0) == (f0 > 0)) {
                x0 = xm; t0 = tm; f0 = fm;
            } else {
                x1 = xm; t1 = tm;
            }
        }
        return s.sample(0.5 * (x0 + x1), 0.5 * (t0 + t1));
    };
    auto edge_point = [&](const detail::GridEdgeKey& key) -> const Vec3& {
        auto it = crossing.find(key);
        if (it != crossing.end()) return it->second;
        double x0, t0, x1, t1, f0;
        if (key.orient == 0) {
            x0 = s.x_max * key.i / nx;
            x1 = s.x_max * (key.i + 1) / nx;
            t0 = t1 = two_pi * key.k / nt;
            f0 = F[key.i][key.k];
        } else {
            x0 = x1 = s.x_max * key.i / nx;
            t0 = two_pi * key.k / nt;
            t1 = two_pi * (key.k + 1) / nt;
            f0 = F[key.i][key.k];
        }
        return crossing.emplace(key, refine(x0, t0, x1, t1, f0)).first->second;
    };

    std::map<detail::GridEdgeKey, std::vector<detail::GridEdgeKey>> link;
    auto connect = [&](const detail::GridEdgeKey& a, const detail::GridEdgeKey& b) {
        link[a].push_back(b);
        link[b].push_back(a);
        edge_point(a);
        edge_point(b);
    };
    for (int i = 0; i < nx; ++i) {
        for (int k = 0; k < nt; ++k) {
            const int k1 = (k + 1) % nt;
            const double fa = F[i][k], fb = F[i + 1][k], fc = F[i + 1][k1], fd = F[i][k1];
            const int code = (fa > 0 ? 1 : 0) | (fb > 0 ? 2 : 0) | (fc > 0 ? 4 : 0) |
                             (fd > 0 ? 8 : 0);
            if (code == 0 || code == 15) continue;
            const detail::GridEdgeKey left{0, i, k};        // between a and b
            const detail::GridEdgeKey bottom{1, i + 1, k};  // between b and c
            const detail::GridEdgeKey right{0, i, k1};      // between d and c
            const detail::GridEdgeKey top{1, i, k};         // between a and d
            switch (code) {
                case 1: case 14: connect(left, top); break;
                case 2: case 13: connect(left, bottom); break;
                case 4: case 11: connect(bottom, right); break;
                case 8: case 7: connect(top, right); break;
                case 3: case 12: connect(top, bottom); break;
                case 6: case 9: connect(left, right); break;
                case 5: case 10: {
                    // saddle cell: resolve with the center sample
                    const double xm = s.x_max * (i + 0.5) / nx;
                    const double tm = two_pi * (k + 0.5) / nt;
                    if ((f(xm, tm) > 0) == (fa > 0)) {
                        connect(left, bottom);
                        connect(top, right);
                    } else {
                        connect(left, top);
                        connect(bottom, right);
                    }
                    break;
                }
            }
        }
    }

    std::vector<EmbeddedCurve> out;
    std::set<detail::GridEdgeKey> visited;
    for (const auto& [start, nbrs] : link) {
        if (visited.count(start)) continue;
        if (nbrs.size() != 2)
            throw OpenContour("contour grid edge with " + std::to_string(nbrs.size()) +
                              " links; grid too coarse");
        EmbeddedCurve c;
        c.plane = plane;
        c.offset = offset;
        c.leaf_id = s.id;
        detail::GridEdgeKey prev = start, cur = start;
        for (;;) {
            visited.insert(cur);
            c.points.push_back(edge_point(cur));
            const auto& ns = link.at(cur);
            if (ns.size() != 2) throw OpenContour("open chain in contour trace");
            detail::GridEdgeKey next =
                (c.points.size() == 1) ? ns[0] : (ns[0] == prev ? ns[1] : ns[0]);
            prev = cur;
            cur = next;
            if (cur == start) break;
        }
        c.points.push_back(c.points.front()); // close
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// curves v1 text format

inline std::string serialize_curves(const std::vector<EmbeddedCurve>& curves) {
    std::ostringstream os;
    os << "curves v1\n";
    for (const auto& c : curves) {
        os << "curve " << c.leaf_id << " x" << (c.plane + 1) << ' '
           << detail::fmt_num(c.offset) << '\n';
        for (const auto& p : c.points)
            os << "pt " << detail::fmt_num(p.x) << ' ' << detail::fmt_num(p.y) << ' '
               << detail::fmt_num(p.z) << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Curve deduplication

inline double point_polyline_distance(const Vec3& p, const std::vector<Vec3>& poly) {
    double best = dist(p, poly.front());
    for (size_t i = 0; i + 1 < poly.size(); ++i)
        best = std::min(best, segment_segment_closest(p, p, poly[i], poly[i + 1]).distance);
    return best;
}

// Drops curves that coincide with an earlier curve in the same plane (every
// point within eps of the other polyline). The mirror symmetries of the cube
// pair up the leaves so each mid-plane curve is produced by two surfaces.
inline std::vector<EmbeddedCurve> dedup_curves(const std::vector<EmbeddedCurve>& curves,
                                               double eps) {
    std::vector<EmbeddedCurve> kept;
    for (const auto& c : curves) {
        bool dup = false;
        for (const auto& k : kept) {
            if (k.plane != c.plane || k.offset != c.offset) continue;
            double worst = 0;
            for (const auto& p : c.points) {
                worst = std::max(worst, point_polyline_distance(p, k.points));
                if (worst > eps) break;
            }
            if (worst <= eps) {
                dup = true;
                break;
            }
        }
        if (!dup) kept.push_back(c);
    }
    return kept;
}

// ---------------------------------------------------------------------------
// Gamma assembly

// Pairwise intersection points (within eps_vertex) become vertices; curve
// stretches between consecutive intersections become edges carrying their
// polylines. A curve meeting nothing becomes one vertex plus a self-loop.
// Vertices are merged and ordered by coordinate sort, and edges sorted
// canonically, so the output does not depend on the input curve order.
// Tangential overlap (hits smeared over more than 10*eps_vertex) raises
// DegenerateIntersection.
inline Multigraph assemble_gamma(const std::vector<EmbeddedCurve>& curves, double eps_vertex) {
    const int nc = static_cast<int>(curves.size());
    for (const auto& c : curves)
        if (c.points.size() < 2 || dist(c.points.front(), c.points.back()) > 10 * eps_vertex)
            throw Error("assemble_gamma: curve not closed");

    // spatial hash of curve segments over cells comfortably above eps_vertex
    const double cell = std::max(1e-3, 20 * eps_vertex);
    auto cell_of = [&](const Vec3& p) {
        auto q = [&](double v) { return static_cast<long long>(std::floor(v / cell)); };
        return std::tuple<long long, long long, long long>{q(p.x), q(p.y), q(p.z)};
    };
    std::map<std::tuple<long long, long long, long long>, std::vector<std::pair<int, int>>> hash;
    for (int ci = 0; ci < nc; ++ci) {
        const auto& pts = curves[ci].points;
        for (int si = 0; si + 1 < static_cast<int>(pts.size()); ++si) {
            const Vec3 &p = pts[si], &q = pts[si + 1];
            auto [ax, ay, az] = cell_of({std::min(p.x, q.x) - eps_vertex,
                                         std::min(p.y, q.y) - eps_vertex,
                                         std::min(p.z, q.z) - eps_vertex});
            auto [bx, by, bz] = cell_of({std::max(p.x, q.x) + eps_vertex,
                                         std::max(p.y, q.y) + eps_vertex,
                                         std::max(p.z, q.z) + eps_vertex});
            for (long long X = ax; X <= bx; ++X)
                for (long long Y = ay; Y <= by; ++Y)
                    for (long long Z = az; Z <= bz; ++Z)
                        hash[{X, Y, Z}].push_back({ci, si});
        }
    }

    struct RawHit {
        double ti, tj;  // positions along curves ci, cj (segment index + fraction)
        Vec3 point;
    };
    std::map<std::pair<int, int>, std::vector<RawHit>> by_pair;
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> tested;
    for (const auto& [key, segs] : hash) {
        for (size_t a = 0; a < segs.size(); ++a)
            for (size_t b = a + 1; b < segs.size(); ++b) {
                auto sa = segs[a], sb = segs[b];
                if (sa > sb) std::swap(sa, sb);
                const auto [ci, si] = sa;
                const auto [cj, sj] = sb;
                if (ci == cj) continue;
                if (!tested.insert({sa, sb}).second) continue;
                const auto& P = curves[ci].points;
                const auto& Q = curves[cj].points;
                auto cl = segment_segment_closest(P[si], P[si + 1], Q[sj], Q[sj + 1]);
                if (cl.distance > eps_vertex) continue;
                auto frac = [](const Vec3& p0, const Vec3& p1, const Vec3& at) {
                    const double len2 = dot(p1 - p0, p1 - p0);
                    return len2 > 0 ? dot(at - p0, p1 - p0) / len2 : 0.0;
                };
                by_pair[{ci, cj}].push_back({si + frac(P[si], P[si + 1], cl.pa),
                                             sj + frac(Q[sj], Q[sj + 1], cl.pb),
                                             (cl.pa + cl.pb) * 0.5});
            }
    }

    // cluster hits per curve pair; a long smear means tangential overlap
    struct Crossing {
        double along;
        Vec3 point;
    };
    std::vector<std::vector<Crossing>> per_curve(nc);
    std::vector<Vec3> cluster_points;
    for (auto& [pr, hits] : by_pair) {
        std::vector<char> used(hits.size(), 0);
        for (size_t i = 0; i < hits.size(); ++i) {
            if (used[i]) continue;
            std::vector<size_t> cluster{i};
            used[i] = 1;
            for (size_t c = 0; c < cluster.size(); ++c)
                for (size_t j = 0; j < hits.size(); ++j) {
                    if (used[j]) continue;
                    const auto& h0 = hits[cluster[c]];
                    const auto& h1 = hits[j];
                    // same crossing: spatially close, or adjacent along both
                    // curves (the latter catches tangential smears)
                    const bool near = dist(h0.point, h1.point) <= 3 * eps_vertex;
                    const bool adjacent = std::abs(h0.ti - h1.ti) <= 1.5 &&
                                          std::abs(h0.tj - h1.tj) <= 1.5;
                    if (near || adjacent) {
                        used[j] = 1;
                        cluster.push_back(j);
                    }
                }
            double diam = 0;
            Vec3 centroid{0, 0, 0};
            double ai = 0, aj = 0;
            for (size_t a : cluster) {
                centroid += hits[a].point;
                ai += hits[a].ti;
                aj += hits[a].tj;
            }
            centroid = centroid / static_cast<double>(cluster.size());
            ai /= cluster.size();
            aj /= cluster.size();
            for (size_t a : cluster)
                for (size_t b : cluster)
                    diam = std::max(diam, dist(hits[a].point, hits[b].point));
            if (diam > 10 * eps_vertex)
                throw DegenerateIntersection("curves overlap along a stretch of length " +
                                             std::to_string(diam));
            cluster_points.push_back(centroid);
            per_curve[pr.first].push_back({ai, centroid});
            per_curve[pr.second].push_back({aj, centroid});
        }
    }

    // global vertex merge by proximity (union-find)
    std::vector<int> parent(cluster_points.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (size_t i = 0; i < cluster_points.size(); ++i)
        for (size_t j = i + 1; j < cluster_points.size(); ++j)
            if (dist(cluster_points[i], cluster_points[j]) <= eps_vertex)
                parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    std::map<int, std::vector<int>> members;
    for (size_t i = 0; i < cluster_points.size(); ++i)
        members[find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::map<int, Vec3> rep_point;
    for (const auto& [r, ms] : members) {
        Vec3 c{0, 0, 0};
        for (int m : ms) c += cluster_points[m];
        rep_point[r] = c / static_cast<double>(ms.size());
    }

    // canonical vertex order by coordinates
    std::vector<std::pair<Vec3, int>> order;
    for (const auto& [r, p] : rep_point) order.push_back({p, r});
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return detail::coord_less(a.first, b.first); });
    std::map<int, int> rep_to_vid;
    Multigraph g;
    for (size_t i = 0; i < order.size(); ++i) {
        rep_to_vid[order[i].second] = static_cast<int>(i);
        g.add_vertex("v" + std::to_string(i), order[i].first);
    }
    auto vid_of_point = [&](const Vec3& p) {
        for (const auto& [r, q] : rep_point)
            if (dist(p, q) <= 2 * eps_vertex) return rep_to_vid.at(r);
        throw Error("assemble_gamma: lost a crossing point");
    };

    // split curves into edges at their crossings
    struct PendingEdge {
        int va, vb;
        std::vector<Vec3> poly;
    };
    std::vector<PendingEdge> pending;
    std::vector<std::vector<Vec3>> isolated; // closed polylines with no crossings
    for (int ci = 0; ci < nc; ++ci) {
        const auto& pts = curves[ci].points;
        const int nseg = static_cast<int>(pts.size()) - 1;
        auto& crossings = per_curve[ci];
        if (crossings.empty()) {
            // canonical basepoint: lexicographically least sample
            int best = 0;
            for (int s = 1; s < nseg; ++s)
                if (detail::coord_less(pts[s], pts[best])) best = s;
            std::vector<Vec3> rot;
            for (int s = 0; s <= nseg; ++s) rot.push_back(pts[(best + s) % nseg]);
            isolated.push_back(std::move(rot));
            continue;
        }
        std::sort(crossings.begin(), crossings.end(),
                  [](const Crossing& a, const Crossing& b) { return a.along < b.along; });
        // several partner curves meeting this one at the same vertex yield a
        // run of near-coincident crossings; collapse each run to one
        std::vector<Crossing> collapsed;
        for (const auto& c : crossings) {
            if (!collapsed.empty() && vid_of_point(collapsed.back().point) == vid_of_point(c.point) &&
                c.along - collapsed.back().along <= 3.0)
                continue;
            collapsed.push_back(c);
        }
        while (collapsed.size() > 1 &&
               vid_of_point(collapsed.front().point) == vid_of_point(collapsed.back().point) &&
               collapsed.front().along + nseg - collapsed.back().along <= 3.0)
            collapsed.pop_back();
        crossings = std::move(collapsed);
        const int m = static_cast<int>(crossings.size());
        for (int c = 0; c < m; ++c) {
            const auto& c0 = crossings[c];
            const auto& c1 = crossings[(c + 1) % m];
            PendingEdge pe;
            pe.va = vid_of_point(c0.point);
            pe.vb = vid_of_point(c1.point);
            pe.poly.push_back(*g.vertices[pe.va].coords);
            const double from = c0.along;
            const double to = (c + 1 < m) ? c1.along : c1.along + nseg;
            for (int s = static_cast<int>(std::floor(from)) + 1;
                 s <= static_cast<int>(std::floor(to)); ++s) {
                const Vec3& p = pts[s % nseg];
                if (dist(p, pe.poly.back()) > eps_vertex) pe.poly.push_back(p);
            }
            const Vec3& endc = *g.vertices[pe.vb].coords;
            if (pe.poly.size() == 1 || dist(endc, pe.poly.back()) > eps_vertex)
                pe.poly.push_back(endc);
            else
                pe.poly.back() = endc;
            pending.push_back(std::move(pe));
        }
    }

    // isolated loops become a basepoint vertex plus a self-loop, appended
    // after the crossing vertices in coordinate order
    std::sort(isolated.begin(), isolated.end(),
              [](const auto& a, const auto& b) { return detail::coord_less(a[0], b[0]); });
    for (auto& poly : isolated) {
        const int vid = static_cast<int>(g.vertices.size());
        g.add_vertex("v" + std::to_string(vid), poly[0]);
        poly.back() = poly.front();
        pending.push_back({vid, vid, std::move(poly)});
    }

    // canonical edge order: endpoint pair, then polyline midpoint
    std::sort(pending.begin(), pending.end(), [](const PendingEdge& a, const PendingEdge& b) {
        const auto ka = std::minmax(a.va, a.vb), kb = std::minmax(b.va, b.vb);
        if (ka != kb) return ka < kb;
        return detail::coord_less(a.poly[a.poly.size() / 2], b.poly[b.poly.size() / 2]);
    });
    for (size_t i = 0; i < pending.size(); ++i)
        g.add_edge("e" + std::to_string(i), "v" + std::to_string(pending[i].va),
                   "v" + std::to_string(pending[i].vb), pending[i].poly);
    return g;
}

// ---------------------------------------------------------------------------
// Canonical spherical octant generator: 3 orthogonal great circles on the
// unit sphere cut each other into the octahedron graph; the 8 triangular
// face loops are returned as cycle classes in the arc-doubling convention.

inline std::pair<Multigraph, std::vector<CycleClass>> octant_graph(int arc_samples = 16) {
    Multigraph g;
    const Vec3 verts[6] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                           {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    for (int i = 0; i < 6; ++i) g.add_vertex("v" + std::to_string(i), verts[i]);

    auto vert_index = [&](int axis, int sign) { return 2 * axis + (sign > 0 ? 0 : 1); };
    auto quarter = [&](const Vec3& p, const Vec3& q) {
        std::vector<Vec3> poly;
        const double half_pi = std::acos(-1.0) / 2.0;
        for (int s = 0; s <= arc_samples; ++s) {
            const double t = half_pi * s / arc_samples;
            poly.push_back(p * std::cos(t) + q * std::sin(t));
        }
        return poly;
    };

    std::map<std::pair<int, int>, int> edge_index;
    int e = 0;
    for (int ai = 0; ai < 3; ++ai)
        for (int si : {+1, -1})
            for (int aj = ai + 1; aj < 3; ++aj)
                for (int sj : {+1, -1}) {
                    const int va = vert_index(ai, si), vb = vert_index(aj, sj);
                    edge_index[std::minmax(va, vb)] = e;
                    g.add_edge("e" + std::to_string(e++), "v" + std::to_string(va),
                               "v" + std::to_string(vb), quarter(verts[va], verts[vb]));
                }

    // one face loop per octant (sx, sy, sz): x vertex -> y vertex -> z vertex
    std::vector<CycleClass> faces;
    for (int sx : {+1, -1})
        for (int sy : {+1, -1})
            for (int sz : {+1, -1}) {
                const int v[3] = {vert_index(0, sx), vert_index(1, sy), vert_index(2, sz)};
                std::vector<int> arcs;
                for (int t = 0; t < 3; ++t) {
                    const int va = v[t], vb = v[(t + 1) % 3];
                    const int ei = edge_index.at(std::minmax(va, vb));
                    const bool forward = (g.checked_index(g.edges[ei].a) == va);
                    arcs.push_back(forward ? 2 * ei : 2 * ei + 1);
                }
                faces.push_back({detail::min_rotation(arcs), 3, true});
            }
    std::sort(faces.begin(), faces.end(),
              [](const CycleClass& a, const CycleClass& b) { return a.rep < b.rep; });
    return {g, faces};
}

} // namespace gzlab
