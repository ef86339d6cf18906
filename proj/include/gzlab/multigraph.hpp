#pragma once

// Finite undirected multigraph with optional 3-space embedding, the
// `gamma-graph v1` text format, validation, and the directed arc doubling
// used by the zeta machinery.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <string>
#include <vector>

#include "errors.hpp"
#include "geom.hpp"

namespace gzlab {

struct Vertex {
    std::string id;
    std::optional<Vec3> coords;
};

struct Edge {
    std::string id;
    std::string a, b;            // unordered endpoints; a == b for a self-loop
    std::vector<Vec3> polyline;  // optional geometric realization, endpoint to endpoint
};

class Multigraph {
public:
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int vertex_index(const std::string& id) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].id == id) return static_cast<int>(i);
        return -1;
    }

    bool embedded() const {
        if (vertices.empty()) return false;
        for (const auto& v : vertices)
            if (!v.coords) return false;
        return true;
    }

    void add_vertex(std::string id, std::optional<Vec3> coords = std::nullopt) {
        vertices.push_back({std::move(id), coords});
    }
    void add_edge(std::string id, std::string a, std::string b, std::vector<Vec3> poly = {}) {
        edges.push_back({std::move(id), std::move(a), std::move(b), std::move(poly)});
    }

    // Degree with self-loops counted twice.
    std::vector<int> degrees() const {
        std::vector<int> deg(vertices.size(), 0);
        for (const auto& e : edges) {
            deg[checked_index(e.a)]++;
            deg[checked_index(e.b)]++;
        }
        return deg;
    }

    int checked_index(const std::string& id) const {
        int i = vertex_index(id);
        if (i < 0) throw ReferenceError("unknown vertex id '" + id + "'");
        return i;
    }
};

struct ValidationReport {
    bool connected = false;
    int min_degree = 0;
    bool md2 = false;
    int vertex_count = 0;
    int edge_count = 0;
    int cycle_rank = 0;
};

inline ValidationReport validate(const Multigraph& g) {
    ValidationReport r;
    r.vertex_count = static_cast<int>(g.vertices.size());
    r.edge_count = static_cast<int>(g.edges.size());
    r.cycle_rank = r.edge_count - r.vertex_count + 1;
    if (g.vertices.empty()) {
        r.connected = false;
        return r;
    }
    auto deg = g.degrees();
    r.min_degree = *std::min_element(deg.begin(), deg.end());
    r.md2 = r.min_degree >= 2;
    // traversal
    std::vector<std::vector<int>> adj(g.vertices.size());
    for (const auto& e : g.edges) {
        int a = g.checked_index(e.a), b = g.checked_index(e.b);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(g.vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
    }
    r.connected = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    return r;
}

// ---------------------------------------------------------------------------
// gamma-graph v1 text format

namespace detail {
inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}
inline double parse_num(const std::string& tok, int lineno) {
    try {
        size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad number '" + tok + "'");
    }
}
inline std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}
} // namespace detail

inline Multigraph parse_graph(std::istream& in) {
    Multigraph g;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "gamma-graph v1")
                throw ParseError("line " + std::to_string(lineno) + ": expected 'gamma-graph v1' header");
            header_seen = true;
            continue;
        }
        auto toks = detail::split_ws(line);
        if (toks[0] == "vertex") {
            if (toks.size() != 2 && toks.size() != 5)
                throw ParseError("line " + std::to_string(lineno) + ": vertex needs id or id x y z");
            if (g.vertex_index(toks[1]) >= 0)
                throw ParseError("line " + std::to_string(lineno) + ": duplicate vertex id '" + toks[1] + "'");
            std::optional<Vec3> c;
            if (toks.size() == 5)
                c = Vec3{detail::parse_num(toks[2], lineno), detail::parse_num(toks[3], lineno),
                         detail::parse_num(toks[4], lineno)};
            g.add_vertex(toks[1], c);
        } else if (toks[0] == "edge") {
            if (toks.size() < 4)
                throw ParseError("line " + std::to_string(lineno) + ": edge needs id and two endpoints");
            for (const auto& e : g.edges)
                if (e.id == toks[1])
                    throw ParseError("line " + std::to_string(lineno) + ": duplicate edge id '" + toks[1] + "'");
            if (g.vertex_index(toks[2]) < 0)
                throw ReferenceError("line " + std::to_string(lineno) + ": edge endpoint '" + toks[2] + "' undeclared");
            if (g.vertex_index(toks[3]) < 0)
                throw ReferenceError("line " + std::to_string(lineno) + ": edge endpoint '" + toks[3] + "' undeclared");
            std::vector<Vec3> poly;
            if (toks.size() > 4) {
                if (toks[4] != "poly")
                    throw ParseError("line " + std::to_string(lineno) + ": expected 'poly'");
                std::vector<double> nums;
                for (size_t i = 5; i < toks.size(); ++i) {
                    if (toks[i] == ";") continue;
                    nums.push_back(detail::parse_num(toks[i], lineno));
                }
                if (nums.size() % 3 != 0)
                    throw ParseError("line " + std::to_string(lineno) + ": polyline coordinate count not a multiple of 3");
                for (size_t i = 0; i + 2 < nums.size(); i += 3)
                    poly.push_back({nums[i], nums[i + 1], nums[i + 2]});
            }
            g.add_edge(toks[1], toks[2], toks[3], std::move(poly));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown record '" + toks[0] + "'");
        }
    }
    if (!header_seen) throw ParseError("missing 'gamma-graph v1' header");
    // all-or-nothing embedding
    size_t with = 0;
    for (const auto& v : g.vertices)
        if (v.coords) ++with;
    if (with != 0 && with != g.vertices.size())
        throw ParseError("embedding is all-or-nothing: " + std::to_string(with) + " of " +
                         std::to_string(g.vertices.size()) + " vertices have coordinates");
    return g;
}

inline Multigraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

inline std::string serialize_graph(const Multigraph& g) {
    std::ostringstream os;
    os << "gamma-graph v1\n";
    for (const auto& v : g.vertices) {
        os << "vertex " << v.id;
        if (v.coords)
            os << ' ' << detail::fmt_num(v.coords->x) << ' ' << detail::fmt_num(v.coords->y)
               << ' ' << detail::fmt_num(v.coords->z);
        os << '\n';
    }
    for (const auto& e : g.edges) {
        os << "edge " << e.id << ' ' << e.a << ' ' << e.b;
        if (!e.polyline.empty()) {
            os << " poly";
            for (size_t i = 0; i < e.polyline.size(); ++i) {
                if (i) os << " ;";
                os << ' ' << detail::fmt_num(e.polyline[i].x) << ' '
                   << detail::fmt_num(e.polyline[i].y) << ' ' << detail::fmt_num(e.polyline[i].z);
            }
        }
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Arc doubling: two directed arcs per edge, fixed-point-free inverse
// involution, and the non-backtracking successor relation.

struct ArcSystem {
    // arc 2k is edge k traversed a->b, arc 2k+1 is b->a.
    std::vector<int> tail, head;       // vertex indices
    std::vector<int> edge_of;          // edge index per arc
    std::vector<std::vector<int>> succ; // succ[a] = arcs b with tail(b)=head(a), b != inverse(a)

    int arc_count() const { return static_cast<int>(tail.size()); }
    static int inverse(int arc) { return arc ^ 1; }
};

inline ArcSystem build_arc_system(const Multigraph& g) {
    ArcSystem as;
    const int m = static_cast<int>(g.edges.size());
    as.tail.resize(2 * m);
    as.head.resize(2 * m);
    as.edge_of.resize(2 * m);
    for (int k = 0; k < m; ++k) {
        int a = g.checked_index(g.edges[k].a), b = g.checked_index(g.edges[k].b);
        as.tail[2 * k] = a; as.head[2 * k] = b;
        as.tail[2 * k + 1] = b; as.head[2 * k + 1] = a;
        as.edge_of[2 * k] = as.edge_of[2 * k + 1] = k;
    }
    std::vector<std::vector<int>> out(g.vertices.size());
    for (int arc = 0; arc < 2 * m; ++arc) out[as.tail[arc]].push_back(arc);
    as.succ.resize(2 * m);
    for (int arc = 0; arc < 2 * m; ++arc)
        for (int b : out[as.head[arc]])
            if (b != ArcSystem::inverse(arc)) as.succ[arc].push_back(b);
    return as;
}

// Coordinate-based structural equality for embedded graphs: vertex sets match
// within tol and edge multisets (as unordered endpoint pairs) agree under the
// induced vertex correspondence. Polyline geometry is ignored.
inline bool structurally_equal(const Multigraph& g1, const Multigraph& g2, double tol) {
    if (g1.vertices.size() != g2.vertices.size() || g1.edges.size() != g2.edges.size())
        return false;
    if (!g1.embedded() || !g2.embedded()) {
        // fall back to id-based comparison
        std::multiset<std::pair<std::string, std::string>> e1, e2;
        auto key = [](const Edge& e) {
            return e.a < e.b ? std::make_pair(e.a, e.b) : std::make_pair(e.b, e.a);
        };
        for (const auto& e : g1.edges) e1.insert(key(e));
        for (const auto& e : g2.edges) e2.insert(key(e));
        std::vector<std::string> v1, v2;
        for (const auto& v : g1.vertices) v1.push_back(v.id);
        for (const auto& v : g2.vertices) v2.push_back(v.id);
        std::sort(v1.begin(), v1.end());
        std::sort(v2.begin(), v2.end());
        return v1 == v2 && e1 == e2;
    }
    const size_t n = g1.vertices.size();
    std::vector<int> match(n, -1); // g1 vertex i -> g2 vertex
    std::vector<char> used(n, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            if (dist(*g1.vertices[i].coords, *g2.vertices[j].coords) <= tol) {
                match[i] = static_cast<int>(j);
                used[j] = 1;
                break;
            }
        }
        if (match[i] < 0) return false;
    }
    std::multiset<std::pair<int, int>> e1, e2;
    for (const auto& e : g1.edges) {
        int a = match[g1.checked_index(e.a)], b = match[g1.checked_index(e.b)];
        e1.insert(std::minmax(a, b));
    }
    for (const auto& e : g2.edges) {
        int a = g2.checked_index(e.a), b = g2.checked_index(e.b);
        e2.insert(std::minmax(a, b));
    }
    return e1 == e2;
}

} // namespace gzlab
