#pragma once

// Ihara zeta function of a multigraph by three independent routes:
// primitive-cycle Euler product, exponential of non-backtracking walk
// counts, and the exact integer determinant det(I - uT) of the
// non-backtracking arc operator. Pole extraction with exact multiplicities.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <vector>

#include "intpoly.hpp"
#include "multigraph.hpp"

namespace gzlab {

struct CycleClass {
    std::vector<int> rep;  // arc ids, lexicographically least rotation
    int length = 0;
    bool primitive = false;
};

struct ZetaSeries {
    int max_length = 0;
    std::vector<long long> counts;  // counts[n-1] = N_n
    IntPoly coeffs;                 // Z(u) series through degree max_length
};

struct ZetaReciprocal {
    IntPoly poly;  // det(I - uT), ascending degree
    int cycle_rank = 0;
};

namespace detail {

inline ArcSystem md2_arc_system(const Multigraph& g) {
    auto report = validate(g);
    if (!report.md2) throw NotMd2("graph has a vertex of degree < 2");
    if (!report.connected) throw NotMd2("graph is not connected");
    return build_arc_system(g);
}

inline std::vector<int> min_rotation(const std::vector<int>& w) {
    std::vector<int> best = w;
    std::vector<int> cur = w;
    for (size_t r = 1; r < w.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

inline bool is_primitive(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    for (int d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (int i = d; i < n && repeats; ++i)
            if (w[i] != w[i % d]) repeats = false;
        if (repeats) return false;
    }
    return true;
}

inline bool succ_ok(const ArcSystem& as, int a, int b) {
    return as.head[a] == as.tail[b] && b != ArcSystem::inverse(a);
}

} // namespace detail

// Every primitive cycle class of length <= L, rotation-minimal representative,
// ordered by length then lexicographic rep.
inline std::vector<CycleClass> enumerate_cycles(const Multigraph& g, int L,
                                                size_t cap = 1000000) {
    const ArcSystem as = detail::md2_arc_system(g);
    const int arcs = as.arc_count();
    std::set<std::vector<int>> reps;
    std::vector<int> walk;

    // A class whose minimal arc is `start` is found by a walk over arcs >= start.
    for (int start = 0; start < arcs; ++start) {
        walk.assign(1, start);
        // iterative DFS over successor choices
        std::vector<size_t> choice{0};
        while (!walk.empty()) {
            int last = walk.back();
            if (choice.back() == 0 && detail::succ_ok(as, last, start)) {
                auto canon = detail::min_rotation(walk);
                if (detail::is_primitive(canon)) {
                    reps.insert(canon);
                    if (reps.size() > cap)
                        throw CombinatorialBlowup("more than " + std::to_string(cap) +
                                                  " primitive classes");
                }
            }
            bool descended = false;
            if (static_cast<int>(walk.size()) < L) {
                const auto& nexts = as.succ[last];
                for (size_t i = choice.back(); i < nexts.size(); ++i) {
                    if (nexts[i] < start) continue;
                    choice.back() = i + 1;
                    walk.push_back(nexts[i]);
                    choice.push_back(0);
                    descended = true;
                    break;
                }
            }
            if (!descended) {
                walk.pop_back();
                choice.pop_back();
                if (!choice.empty()) continue;
            }
        }
    }
    std::vector<CycleClass> out;
    for (const auto& r : reps)
        out.push_back({r, static_cast<int>(r.size()), true});
    std::sort(out.begin(), out.end(), [](const CycleClass& a, const CycleClass& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.rep < b.rep;
    });
    return out;
}

// Marked-start geodesic tail-less closed walk counts N_1..N_L by direct
// enumeration (not via the trace, which serves as the cross-check).
inline std::vector<long long> closed_walk_counts(const Multigraph& g, int L) {
    const ArcSystem as = detail::md2_arc_system(g);
    std::vector<long long> counts(L, 0);
    std::vector<int> walk;
    for (int start = 0; start < as.arc_count(); ++start) {
        walk.assign(1, start);
        std::vector<size_t> choice{0};
        while (!walk.empty()) {
            int last = walk.back();
            if (choice.back() == 0 && detail::succ_ok(as, last, start))
                counts[walk.size() - 1]++;
            bool descended = false;
            if (static_cast<int>(walk.size()) < L) {
                const auto& nexts = as.succ[last];
                if (choice.back() < nexts.size()) {
                    int next = nexts[choice.back()++];
                    walk.push_back(next);
                    choice.push_back(0);
                    descended = true;
                }
            }
            if (!descended) {
                walk.pop_back();
                choice.pop_back();
            }
        }
    }
    return counts;
}

// trace(T^n) for n = 1..L with exact integers.
inline std::vector<BigInt> arc_operator_traces(const Multigraph& g, int L) {
    const ArcSystem as = build_arc_system(g);
    const int n = as.arc_count();
    IntMat T(n, std::vector<BigInt>(n));
    for (int a = 0; a < n; ++a)
        for (int b : as.succ[a]) T[a][b] += 1;
    std::vector<BigInt> traces;
    IntMat P = T;
    for (int k = 1; k <= L; ++k) {
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += P[i][i];
        traces.push_back(tr);
        if (k == L) break;
        IntMat Q(n, std::vector<BigInt>(n));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (P[i][l] == 0) continue;
                for (int j = 0; j < n; ++j)
                    if (T[l][j] != 0) Q[i][j] += P[i][l] * T[l][j];
            }
        P = std::move(Q);
    }
    return traces;
}

// Z(u) series through degree L from the exponential form.
inline ZetaSeries zeta_series(const Multigraph& g, int L) {
    ZetaSeries zs;
    zs.max_length = L;
    zs.counts = closed_walk_counts(g, L);
    std::vector<BigRat> z(static_cast<size_t>(L) + 1);
    z[0] = 1;
    for (int k = 1; k <= L; ++k) {
        BigRat acc = 0;
        for (int j = 1; j <= k; ++j) acc += BigRat(zs.counts[j - 1]) * z[k - j];
        z[k] = acc / k;
    }
    zs.coeffs.resize(z.size());
    for (size_t i = 0; i < z.size(); ++i) {
        if (boost::multiprecision::denominator(z[i]) != 1)
            throw Error("zeta_series: non-integer series coefficient");
        zs.coeffs[i] = boost::multiprecision::numerator(z[i]);
    }
    return zs;
}

// Truncated Euler product over the given primitive classes. The classes must
// be complete through length L; completeness is checked against the trace
// identity sum_{d|n} d * (#classes of length d) = trace(T^n).
inline ZetaSeries zeta_euler_truncated(const std::vector<CycleClass>& classes, int L,
                                       const Multigraph* check_graph = nullptr) {
    ZetaSeries zs;
    zs.max_length = L;
    IntPoly prod{1};
    std::vector<long long> class_counts(L + 1, 0);
    for (const auto& c : classes) {
        if (c.length > L) continue;
        class_counts[c.length]++;
        // 1/(1-u^l) = 1 + u^l + u^{2l} + ...
        IntPoly geom(static_cast<size_t>(L) + 1);
        for (int k = 0; k * c.length <= L; ++k) geom[k * c.length] = 1;
        prod = poly::mul_trunc(prod, geom, L);
    }
    zs.coeffs = prod;
    zs.counts.assign(L, 0);
    for (int n = 1; n <= L; ++n)
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) zs.counts[n - 1] += d * class_counts[d];
    if (check_graph) {
        auto traces = arc_operator_traces(*check_graph, L);
        for (int n = 1; n <= L; ++n)
            if (BigInt(zs.counts[n - 1]) != traces[n - 1])
                throw IncompleteClasses("class census disagrees with trace(T^" +
                                        std::to_string(n) + ")");
    }
    return zs;
}

// Exact 1/Z(u) = det(I - uT) by evaluation at 2|E|+1 integer points (Bareiss
// determinants) and exact interpolation.
inline ZetaReciprocal zeta_reciprocal(const Multigraph& g) {
    const ArcSystem as = detail::md2_arc_system(g);
    const int n = as.arc_count();
    std::vector<std::vector<int>> T(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b : as.succ[a]) T[a][b] += 1;

    std::vector<BigInt> xs, ys;
    for (int t = 0; t <= n; ++t) {
        IntMat m(n, std::vector<BigInt>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = (i == j ? BigInt(1) : BigInt(0)) - BigInt(t) * T[i][j];
        xs.push_back(t);
        ys.push_back(int_determinant(std::move(m)));
    }

    // Newton divided differences, then expand to monomial basis.
    const int np = n + 1;
    std::vector<BigRat> table(np);
    for (int i = 0; i < np; ++i) table[i] = BigRat(ys[i]);
    std::vector<BigRat> newton{table[0]};
    for (int k = 1; k < np; ++k) {
        for (int i = 0; i < np - k; ++i)
            table[i] = (table[i + 1] - table[i]) / BigRat(xs[i + k] - xs[i]);
        newton.push_back(table[0]);
    }
    RatPoly p{newton[np - 1]};
    for (int k = np - 2; k >= 0; --k) {
        // p = p * (u - x_k) + newton[k]
        RatPoly q(p.size() + 1);
        for (size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];
            q[i] -= p[i] * BigRat(xs[k]);
        }
        q[0] += newton[k];
        p = std::move(q);
    }
    poly::trim(p);
    ZetaReciprocal zr;
    zr.poly.resize(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        if (boost::multiprecision::denominator(p[i]) != 1)
            throw Error("zeta_reciprocal: interpolation produced a non-integer coefficient");
        zr.poly[i] = boost::multiprecision::numerator(p[i]);
    }
    zr.cycle_rank = static_cast<int>(g.edges.size()) - static_cast<int>(g.vertices.size()) + 1;
    return zr;
}

// Bass form (1-u^2)^{r-1} det(I - Au + (D-I)u^2) for loop-free graphs.
inline IntPoly bass_reciprocal(const Multigraph& g) {
    const int nv = static_cast<int>(g.vertices.size());
    std::vector<std::vector<int>> A(nv, std::vector<int>(nv, 0));
    std::vector<int> deg(nv, 0);
    for (const auto& e : g.edges) {
        int a = g.checked_index(e.a), b = g.checked_index(e.b);
        if (a == b) throw Error("bass_reciprocal: self-loops not supported");
        A[a][b]++;
        A[b][a]++;
        deg[a]++;
        deg[b]++;
    }
    std::vector<std::vector<IntPoly>> m(nv, std::vector<IntPoly>(nv));
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            IntPoly p(3);
            p[0] = (i == j) ? 1 : 0;
            p[1] = -A[i][j];
            p[2] = (i == j) ? BigInt(deg[i] - 1) : BigInt(0);
            poly::trim(p);
            m[i][j] = p;
        }
    IntPoly det = poly_determinant(m);
    const int r = static_cast<int>(g.edges.size()) - nv + 1;
    IntPoly onemu2{1, 0, -1};
    for (int k = 0; k < r - 1; ++k) det = poly::mul(det, onemu2);
    return det;
}

// ---------------------------------------------------------------------------
// Pole extraction

struct PolyRoot {
    std::complex<double> root;
    int multiplicity = 0;
};

namespace detail {

inline std::complex<double> eval_cd(const std::vector<double>& p, std::complex<double> z) {
    std::complex<double> v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * z + p[i];
    return v;
}

// Durand-Kerner on a square-free monic polynomial.
inline std::vector<std::complex<double>> durand_kerner(const std::vector<double>& monic_p,
                                                       double tol, int max_iter = 2000) {
    const int deg = static_cast<int>(monic_p.size()) - 1;
    if (deg <= 0) return {};
    double radius = 0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(monic_p[i]));
    radius = 1.0 + radius;
    std::vector<std::complex<double>> z(deg);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w = 1;
    for (int i = 0; i < deg; ++i) {
        w *= seed;
        z[i] = w * radius;
    }
    for (int it = 0; it < max_iter; ++it) {
        double shift = 0;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> num = eval_cd(monic_p, z[i]);
            std::complex<double> den = 1;
            for (int j = 0; j < deg; ++j)
                if (j != i) den *= (z[i] - z[j]);
            std::complex<double> d = num / den;
            z[i] -= d;
            shift = std::max(shift, std::abs(d));
        }
        if (shift < 1e-15 * radius) break;
    }
    for (int i = 0; i < deg; ++i) {
        double scale = std::pow(1.0 + std::abs(z[i]), deg);
        if (std::abs(eval_cd(monic_p, z[i])) > tol * std::max(1.0, scale))
            throw ConvergenceFailure("root residual above tolerance");
    }
    return z;
}

} // namespace detail

// All complex roots of 1/Z with multiplicities. Multiplicities come from the
// exact square-free decomposition; clustering at 10*tol merges any residual
// duplicates within a factor.
inline std::vector<PolyRoot> zeta_poles(const ZetaReciprocal& zr, double tol) {
    RatPoly p = poly::to_rat(zr.poly);
    poly::trim(p);
    if (poly::degree(p) < 1) return {};
    auto factors = poly::squarefree_decomposition(p);
    std::vector<PolyRoot> roots;
    for (size_t k = 0; k < factors.size(); ++k) {
        RatPoly f = poly::monic(factors[k]);
        if (poly::degree(f) < 1) continue;
        std::vector<double> fd(f.size());
        for (size_t i = 0; i < f.size(); ++i) fd[i] = f[i].convert_to<double>();
        auto zs = detail::durand_kerner(fd, tol);
        for (auto z : zs) {
            // pin real / conjugate symmetry noise
            if (std::abs(z.imag()) < 10 * tol) z = {z.real(), 0.0};
            bool merged = false;
            for (auto& r : roots)
                if (std::abs(r.root - z) <= 10 * tol) {
                    r.multiplicity += static_cast<int>(k + 1);
                    merged = true;
                    break;
                }
            if (!merged) roots.push_back({z, static_cast<int>(k + 1)});
        }
    }
    std::sort(roots.begin(), roots.end(), [](const PolyRoot& a, const PolyRoot& b) {
        double ma = std::abs(a.root), mb = std::abs(b.root);
        if (std::abs(ma - mb) > 1e-12) return ma < mb;
        return std::arg(a.root) < std::arg(b.root);
    });
    return roots;
}

} // namespace gzlab
