#pragma once

// Sign holonomy of graph cycles (the (-1)^l spinor character) with the
// fermion/boson classification, spherical parallel-transport holonomy along
// great-circle loops in closed form, composition, fixed subspaces, and the
// exploratory duality report against the zeta pole list.

#include <cmath>
#include <string>
#include <vector>

#include "zeta.hpp"

namespace gzlab {

// ---------------------------------------------------------------------------
// Sign character

enum class Species { bosonic, fermionic };

struct SignHolonomy {
    CycleClass cycle;
    int sign = +1;
    Species species = Species::bosonic;
};

inline SignHolonomy cycle_holonomy_sign(const CycleClass& c) {
    SignHolonomy h;
    h.cycle = c;
    h.sign = (c.length % 2 == 0) ? +1 : -1;
    h.species = h.sign < 0 ? Species::fermionic : Species::bosonic;
    return h;
}

struct PathClassification {
    std::vector<CycleClass> fermionic, bosonic;
};

inline PathClassification classify_paths(const std::vector<CycleClass>& classes) {
    PathClassification out;
    for (const auto& c : classes)
        (c.length % 2 ? out.fermionic : out.bosonic).push_back(c);
    return out;
}

inline long long total_holonomy(const std::vector<CycleClass>& classes) {
    long long acc = 0;
    for (const auto& c : classes) acc += (c.length % 2 == 0) ? +1 : -1;
    return acc;
}

// ---------------------------------------------------------------------------
// Spherical parallel transport

struct HolonomyElement {
    Vec3 basepoint;
    double angle = 0;          // rotation of the tangent plane, in (-pi, pi]
    bool reflection = false;   // orientation flag; transports never set it
    std::string loop_id;
};

namespace detail {

inline double wrap_angle(double a) {
    const double two_pi = 2.0 * std::acos(-1.0);
    a = std::fmod(a, two_pi);
    if (a <= -std::acos(-1.0)) a += two_pi;
    if (a > std::acos(-1.0)) a -= two_pi;
    return a;
}

// Deterministic orthonormal frame of the tangent plane at a unit vector.
inline void tangent_frame(const Vec3& n, Vec3& t1, Vec3& t2) {
    for (int k = 0; k < 3; ++k) {
        Vec3 cand{k == 0 ? 1.0 : 0.0, k == 1 ? 1.0 : 0.0, k == 2 ? 1.0 : 0.0};
        Vec3 proj = cand - n * dot(cand, n);
        if (norm(proj) > 1e-8) {
            t1 = normalized(proj);
            t2 = cross(n, t1);
            return;
        }
    }
    throw Error("tangent_frame: degenerate normal");
}

} // namespace detail

// Transports v0 along the closed geodesic polygon through `loop` (unit
// vectors, consecutive points joined by minor great-circle arcs) and returns
// the induced rotation of the tangent plane at the basepoint. The angle
// equals the loop's signed spherical excess mod 2*pi.
inline HolonomyElement sphere_parallel_transport(const std::vector<Vec3>& loop,
                                                 const Vec3& basepoint, const Vec3& v0,
                                                 const std::string& loop_id = "") {
    if (std::abs(dot(v0, basepoint)) > 1e-9 * std::max(1.0, norm(v0)))
        throw NotTangent("v0 is not tangent at the basepoint");
    HolonomyElement h;
    h.basepoint = basepoint;
    h.loop_id = loop_id;
    if (loop.empty() || loop.size() == 1) return h;  // degenerate loop: identity
    if (dist(loop.front(), loop.back()) > 1e-9)
        throw NotClosed("loop endpoints differ");
    if (dist(loop.front(), basepoint) > 1e-9)
        throw NotClosed("loop does not start at the basepoint");

    Vec3 v = v0;
    const double n0 = norm(v0);
    for (size_t i = 0; i + 1 < loop.size(); ++i) {
        const Vec3 &p = loop[i], &q = loop[i + 1];
        const Vec3 c = cross(p, q);
        const double s = norm(c);
        if (s < 1e-12) {
            if (dot(p, q) < 0) throw Error("antipodal arc has no unique geodesic");
            continue;  // coincident points: nothing to transport along
        }
        // closed-form geodesic transport: rotate about the arc's plane normal
        v = rotate_about(v, c / s, std::atan2(s, dot(p, q)));
        if (std::abs(norm(v) - n0) > 1e-9)
            throw Error("transport failed to preserve the norm");
    }
    const Vec3 a = v0 / n0, b = v / norm(v);
    h.angle = detail::wrap_angle(std::atan2(dot(cross(a, b), basepoint), dot(a, b)));
    return h;
}

inline HolonomyElement compose_holonomy(const HolonomyElement& h1, const HolonomyElement& h2) {
    if (dist(h1.basepoint, h2.basepoint) > 1e-9)
        throw BasepointMismatch("holonomies live at different basepoints");
    HolonomyElement h;
    h.basepoint = h1.basepoint;
    h.loop_id = h1.loop_id + "*" + h2.loop_id;
    // h1 first, then h2; a reflection conjugates the earlier angle
    h.reflection = h1.reflection != h2.reflection;
    h.angle = detail::wrap_angle(h2.reflection ? h2.angle - h1.angle : h1.angle + h2.angle);
    return h;
}

struct FixedSubspace {
    int dimension = 2;
    std::vector<Vec3> basis;  // tangent vectors at the basepoint
};

// Common eigenvalue-1 subspace of the tangent plane under all elements.
inline FixedSubspace holonomy_fixed_points(const std::vector<HolonomyElement>& elements,
                                           double tol = 1e-8) {
    FixedSubspace fs;
    if (elements.empty()) return fs;
    const Vec3 base = elements[0].basepoint;
    Vec3 t1, t2;
    detail::tangent_frame(base, t1, t2);
    // track the subspace as: 2 = plane, 1 = line at frame angle phi, 0 = origin
    int dim = 2;
    double line_phi = 0;
    for (const auto& e : elements) {
        if (dist(e.basepoint, base) > 1e-9)
            throw BasepointMismatch("elements live at different basepoints");
        if (!e.reflection) {
            if (std::abs(detail::wrap_angle(e.angle)) <= tol) continue;  // identity
            dim = 0;  // proper rotation fixes only the origin
        } else {
            // reflection fixes the mirror line at angle/2
            const double phi = detail::wrap_angle(e.angle / 2);
            if (dim == 2) {
                dim = 1;
                line_phi = phi;
            } else if (dim == 1) {
                double d = detail::wrap_angle(phi - line_phi);
                if (std::abs(d) > tol && std::abs(std::abs(d) - std::acos(-1.0)) > tol)
                    dim = 0;
            }
        }
        if (dim == 0) break;
    }
    fs.dimension = dim;
    if (dim == 2) {
        fs.basis = {t1, t2};
    } else if (dim == 1) {
        fs.basis = {t1 * std::cos(line_phi) + t2 * std::sin(line_phi)};
    }
    return fs;
}

// ---------------------------------------------------------------------------
// Duality report (exploratory; makes no claim about the conjecture)

struct DualityReport {
    std::vector<std::pair<std::string, int>> generator_fixed_dims;
    int common_fixed_dim = 2;
    std::vector<PolyRoot> poles;
    std::vector<std::string> pairing_notes;
};

inline DualityReport duality_report(const Multigraph& g,
                                    const std::vector<HolonomyElement>& elements, double tol) {
    DualityReport r;
    r.poles = zeta_poles(zeta_reciprocal(g), tol);
    for (const auto& e : elements)
        r.generator_fixed_dims.push_back(
            {e.loop_id, holonomy_fixed_points({e}, tol > 0 ? tol : 1e-8).dimension});
    // loops at other basepoints cannot be composed with the first family, so
    // the common fixed space is taken over the first basepoint's elements
    std::vector<HolonomyElement> at_base;
    for (const auto& e : elements)
        if (dist(e.basepoint, elements.empty() ? Vec3{} : elements[0].basepoint) <= 1e-9)
            at_base.push_back(e);
    r.common_fixed_dim = holonomy_fixed_points(at_base, tol > 0 ? tol : 1e-8).dimension;
    const size_t rows = std::max(r.generator_fixed_dims.size(), r.poles.size());
    for (size_t i = 0; i < rows; ++i) {
        std::string line;
        if (i < r.generator_fixed_dims.size())
            line += "generator " + r.generator_fixed_dims[i].first + " fixed_dim " +
                    std::to_string(r.generator_fixed_dims[i].second);
        else
            line += "generator -";
        if (i < r.poles.size()) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), " | pole |u|=%.12g mult %d",
                          std::abs(r.poles[i].root), r.poles[i].multiplicity);
            line += buf;
        } else {
            line += " | pole -";
        }
        r.pairing_notes.push_back(line);
    }
    return r;
}

} // namespace gzlab
