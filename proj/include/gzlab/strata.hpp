#pragma once

// Twisted cohomology of stratified complexes: strata are finite integer
// chain complexes, twists are chain maps permuting the strata, gluing data
// identifies cells shared along Gamma. Cohomology over the rationals by
// exact elimination and over the integers by Smith normal form.

#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "intpoly.hpp"

namespace gzlab {

enum class Ring { rationals, integers };

struct StratumComplex {
    std::string name;
    std::vector<int> cells;       // cells[k] = number of k-cells, k = 0..dim
    std::vector<IntMat> boundary; // boundary[k]: C_k -> C_{k-1}; boundary[0] unused

    int dim() const { return static_cast<int>(cells.size()) - 1; }
};

struct GlueRef {
    int stratum = 0, degree = 0, cell = 0;
    bool operator<(const GlueRef& o) const {
        return std::tie(stratum, degree, cell) < std::tie(o.stratum, o.degree, o.cell);
    }
};

struct StratifiedComplex {
    std::vector<StratumComplex> strata;
    std::vector<std::pair<GlueRef, GlueRef>> gluing;
    std::vector<int> sigma;                          // stratum index permutation
    std::vector<std::vector<IntMat>> chain_twists;   // [stratum][degree]: C_k(X_i) -> C_k(X_sigma(i))
};

struct CohomologyEntry {
    int rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next
};

// ---------------------------------------------------------------------------
// Exact linear algebra

namespace detail {

using RatMat = std::vector<std::vector<BigRat>>;
using RatVec = std::vector<BigRat>;

inline RatMat to_rat_mat(const IntMat& m) {
    RatMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        r[i].resize(m[i].size());
        for (size_t j = 0; j < m[i].size(); ++j) r[i][j] = BigRat(m[i][j]);
    }
    return r;
}

// In-place reduced row echelon form; returns the pivot column list.
inline std::vector<int> rat_rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        const BigRat inv = BigRat(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const BigRat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rat_rank(RatMat m) { return static_cast<int>(rat_rref(m).size()); }

// Basis of the right null space of m (columns of the returned vectors).
inline std::vector<RatVec> rat_nullspace(RatMat m, int cols) {
    auto pivots = rat_rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<RatVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols, BigRat(0));
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = r < m.size() ? -m[r][f] : BigRat(0);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves span(columns) x = w; throws if w is outside the span.
inline RatVec rat_solve_in_span(const std::vector<RatVec>& columns, const RatVec& w) {
    const int n = static_cast<int>(w.size());
    const int k = static_cast<int>(columns.size());
    RatMat aug(n, RatVec(k + 1, BigRat(0)));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) aug[i][j] = columns[j][i];
    for (int i = 0; i < n; ++i) aug[i][k] = w[i];
    auto pivots = rat_rref(aug);
    RatVec x(k, BigRat(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == k) throw Error("rat_solve_in_span: inconsistent system");
        x[pivots[r]] = aug[r][k];
    }
    return x;
}

// Smith normal form: nonzero invariant factors d1 | d2 | ... of m.
inline std::vector<BigInt> smith_invariant_factors(IntMat m) {
    std::vector<BigInt> factors;
    if (m.empty() || m[0].empty()) return factors;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    auto abs_of = [](const BigInt& v) { return v < 0 ? BigInt(-v) : v; };
    int t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest-magnitude nonzero entry in the remaining block
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pi < 0 || abs_of(m[i][j]) < best)) {
                    best = abs_of(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[t], m[pi]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                const BigInt q = m[i][t] / m[t][t];
                for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder becomes the new, smaller pivot
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                const BigInt q = m[t][j] / m[t][t];
                for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
        }
        // pivot must divide every remaining entry
        bool restart = false;
        for (int i = t + 1; i < rows && !restart; ++i)
            for (int j = t + 1; j < cols && !restart; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    restart = true;
                }
        if (restart) continue;
        factors.push_back(abs_of(m[t][t]));
        ++t;
    }
    return factors;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Validation

inline void validate_stratum(const StratumComplex& s) {
    const int d = s.dim();
    if (d < 0) throw Error("stratum '" + s.name + "' has no cells");
    for (int k = 1; k <= d; ++k) {
        if (k >= static_cast<int>(s.boundary.size())) continue;
        const auto& b = s.boundary[k];
        if (!b.empty() && (static_cast<int>(b.size()) != s.cells[k - 1] ||
                           static_cast<int>(b[0].size()) != s.cells[k]))
            throw ShapeMismatch("stratum '" + s.name + "': boundary " + std::to_string(k) +
                                " has wrong shape");
    }
    // exact d o d = 0
    for (int k = 2; k <= d; ++k) {
        if (k >= static_cast<int>(s.boundary.size())) continue;
        const auto& a = s.boundary[k - 1];
        const auto& b = s.boundary[k];
        if (a.empty() || b.empty()) continue;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b[0].size(); ++j) {
                BigInt acc = 0;
                for (size_t l = 0; l < b.size(); ++l) acc += a[i][l] * b[l][j];
                if (acc != 0)
                    throw Error("stratum '" + s.name + "': boundary composition not zero");
            }
    }
}

namespace detail {

inline IntMat boundary_or_zero(const StratumComplex& s, int k) {
    if (k >= 1 && k < static_cast<int>(s.boundary.size()) && !s.boundary[k].empty())
        return s.boundary[k];
    const int rows = (k >= 1 && k <= s.dim()) ? s.cells[k - 1] : 0;
    const int cols = (k >= 0 && k <= s.dim()) ? s.cells[k] : 0;
    return IntMat(rows, std::vector<BigInt>(cols, BigInt(0)));
}

inline IntMat transpose(const IntMat& m) {
    if (m.empty()) return {};
    IntMat t(m[0].size(), std::vector<BigInt>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

inline IntMat identity_mat(int n) {
    IntMat m(n, std::vector<BigInt>(n, BigInt(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.empty() || b.empty()) return {};
    IntMat c(a.size(), std::vector<BigInt>(b[0].size(), BigInt(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t l = 0; l < b.size(); ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

} // namespace detail

// Cohomology of a cochain pair: d_out (degree k differential) and d_in
// (degree k-1), with n = number of k-cochains.
inline CohomologyEntry cohomology_from_differentials(const IntMat& d_in, const IntMat& d_out,
                                                     int n, Ring ring) {
    CohomologyEntry e;
    const int rk_out = d_out.empty() ? 0 : detail::rat_rank(detail::to_rat_mat(d_out));
    const int rk_in = d_in.empty() ? 0 : detail::rat_rank(detail::to_rat_mat(d_in));
    e.rank = n - rk_out - rk_in;
    if (ring == Ring::integers && !d_in.empty()) {
        for (const auto& f : detail::smith_invariant_factors(d_in))
            if (f > 1) e.torsion.push_back(f);
    }
    return e;
}

// H^k of one stratum; cochain differential d^k is the transpose of
// boundary[k+1].
inline CohomologyEntry cohomology_stratum(const StratumComplex& s, int k, Ring ring) {
    validate_stratum(s);
    if (k < 0 || k > s.dim()) return {};
    const IntMat d_out = detail::transpose(detail::boundary_or_zero(s, k + 1));
    const IntMat d_in = detail::transpose(detail::boundary_or_zero(s, k));
    return cohomology_from_differentials(d_in, d_out, s.cells[k], ring);
}

// ---------------------------------------------------------------------------
// Twists

namespace detail {

inline IntMat twist_or_identity(const StratifiedComplex& sc, int i, int k) {
    if (i < static_cast<int>(sc.chain_twists.size()) &&
        k < static_cast<int>(sc.chain_twists[i].size()) && !sc.chain_twists[i][k].empty())
        return sc.chain_twists[i][k];
    return identity_mat(k <= sc.strata[i].dim() ? sc.strata[i].cells[k] : 0);
}

inline std::vector<int> sigma_or_identity(const StratifiedComplex& sc) {
    if (!sc.sigma.empty()) return sc.sigma;
    std::vector<int> id(sc.strata.size());
    std::iota(id.begin(), id.end(), 0);
    return id;
}

inline void validate_twists(const StratifiedComplex& sc) {
    const auto sigma = sigma_or_identity(sc);
    const int ns = static_cast<int>(sc.strata.size());
    if (static_cast<int>(sigma.size()) != ns)
        throw ShapeMismatch("sigma length does not match the stratum count");
    std::vector<char> hit(ns, 0);
    for (int v : sigma) {
        if (v < 0 || v >= ns || hit[v]) throw ShapeMismatch("sigma is not a permutation");
        hit[v] = 1;
    }
    for (int i = 0; i < ns; ++i) {
        const auto& src = sc.strata[i];
        const auto& dst = sc.strata[sigma[i]];
        if (src.cells != dst.cells)
            throw ShapeMismatch("strata '" + src.name + "' and '" + dst.name +
                                "' differ in cell counts");
        // chain-map condition: T_{k-1} d_k = d'_k T_k
        for (int k = 1; k <= src.dim(); ++k) {
            const IntMat lhs = mat_mul(twist_or_identity(sc, i, k - 1), boundary_or_zero(src, k));
            const IntMat rhs = mat_mul(boundary_or_zero(dst, k), twist_or_identity(sc, i, k));
            if (lhs != rhs)
                throw NotChainMap("twist of stratum '" + src.name +
                                  "' does not commute with the boundary at degree " +
                                  std::to_string(k));
        }
    }
}

// Rational inverse; throws if singular or if an integer inverse is required
// but does not exist.
inline RatMat rat_inverse(const IntMat& m) {
    const int n = static_cast<int>(m.size());
    RatMat aug(n, RatVec(2 * n, BigRat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = BigRat(m[i][j]);
        aug[i][n + i] = 1;
    }
    auto pivots = rat_rref(aug);
    if (static_cast<int>(pivots.size()) != n)
        throw NotChainMap("chain twist is not invertible");
    RatMat inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

} // namespace detail

// Re-indexes the strata by sigma and conjugates the differentials by the
// chain twists. Validity is re-checked on the result.
inline StratifiedComplex apply_twist(const StratifiedComplex& sc) {
    for (const auto& s : sc.strata) validate_stratum(s);
    detail::validate_twists(sc);
    const auto sigma = detail::sigma_or_identity(sc);
    StratifiedComplex out = sc;
    for (size_t i = 0; i < sc.strata.size(); ++i) {
        StratumComplex moved = sc.strata[i];
        // conjugate: d' = T_{k-1} d T_k^{-1}; exact over the rationals with
        // integrality asserted
        for (int k = 1; k <= moved.dim(); ++k) {
            const IntMat tk = detail::twist_or_identity(sc, static_cast<int>(i), k);
            const IntMat tk1 = detail::twist_or_identity(sc, static_cast<int>(i), k - 1);
            const auto inv = detail::rat_inverse(tk);
            const IntMat td = detail::mat_mul(tk1, detail::boundary_or_zero(sc.strata[i], k));
            IntMat conj(td.size(), std::vector<BigInt>(tk.size(), BigInt(0)));
            for (size_t r = 0; r < td.size(); ++r)
                for (size_t c = 0; c < tk.size(); ++c) {
                    BigRat acc = 0;
                    for (size_t l = 0; l < inv.size(); ++l)
                        acc += BigRat(td[r][l]) * inv[l][c];
                    if (boost::multiprecision::denominator(acc) != 1)
                        throw NotChainMap("conjugated boundary is not integral");
                    conj[r][c] = boost::multiprecision::numerator(acc);
                }
            if (k >= static_cast<int>(moved.boundary.size())) moved.boundary.resize(k + 1);
            moved.boundary[k] = std::move(conj);
        }
        out.strata[sigma[i]] = std::move(moved);
    }
    for (const auto& s : out.strata) validate_stratum(s);
    return out;
}

// ---------------------------------------------------------------------------
// Assembled (glued) total complex

namespace detail {

struct TotalComplex {
    int dim = 0;
    std::vector<int> counts;                  // classes per degree
    std::vector<IntMat> boundary;             // quotient boundary per degree
    // global cell -> class index, per degree: key (stratum, cell)
    std::vector<std::map<std::pair<int, int>, int>> cls;
};

inline TotalComplex assemble_total(const std::vector<StratumComplex>& strata,
                                   const std::vector<std::pair<GlueRef, GlueRef>>& gluing) {
    TotalComplex tc;
    for (const auto& s : strata) tc.dim = std::max(tc.dim, s.dim());
    const int ns = static_cast<int>(strata.size());

    // union-find over global cells per degree
    std::vector<std::map<std::pair<int, int>, int>> parent(tc.dim + 1 ? tc.dim + 1 : 1);
    std::vector<std::vector<std::pair<int, int>>> cells_of(tc.dim + 1);
    std::vector<std::vector<int>> uf(tc.dim + 1);
    std::vector<std::map<std::pair<int, int>, int>> index_of(tc.dim + 1);
    for (int k = 0; k <= tc.dim; ++k)
        for (int i = 0; i < ns; ++i)
            if (k <= strata[i].dim())
                for (int c = 0; c < strata[i].cells[k]; ++c) {
                    index_of[k][{i, c}] = static_cast<int>(cells_of[k].size());
                    cells_of[k].push_back({i, c});
                    uf[k].push_back(static_cast<int>(uf[k].size()));
                }
    std::function<int(int, int)> find = [&](int k, int x) {
        while (uf[k][x] != x) x = uf[k][x] = uf[k][uf[k][x]];
        return x;
    };
    for (const auto& [a, b] : gluing) {
        if (a.degree != b.degree) throw ShapeMismatch("glued cells have different degrees");
        auto ia = index_of[a.degree].find({a.stratum, a.cell});
        auto ib = index_of[b.degree].find({b.stratum, b.cell});
        if (ia == index_of[a.degree].end() || ib == index_of[b.degree].end())
            throw ReferenceError("glue record names a nonexistent cell");
        uf[a.degree][find(a.degree, ia->second)] = find(a.degree, ib->second);
    }
    tc.counts.assign(tc.dim + 1, 0);
    tc.cls.assign(tc.dim + 1, {});
    std::vector<std::map<int, int>> root_to_class(tc.dim + 1);
    for (int k = 0; k <= tc.dim; ++k)
        for (size_t g = 0; g < cells_of[k].size(); ++g) {
            const int r = find(k, static_cast<int>(g));
            auto it = root_to_class[k].find(r);
            int id;
            if (it == root_to_class[k].end()) {
                id = tc.counts[k]++;
                root_to_class[k][r] = id;
            } else {
                id = it->second;
            }
            tc.cls[k][cells_of[k][g]] = id;
        }

    // quotient boundaries: each member of a class must induce the same column
    tc.boundary.assign(tc.dim + 1, {});
    for (int k = 1; k <= tc.dim; ++k) {
        IntMat B(tc.counts[k - 1], std::vector<BigInt>(tc.counts[k], BigInt(0)));
        std::vector<char> set(tc.counts[k], 0);
        for (int i = 0; i < ns; ++i) {
            if (k > strata[i].dim()) continue;
            const IntMat bi = boundary_or_zero(strata[i], k);
            for (int c = 0; c < strata[i].cells[k]; ++c) {
                const int cl = tc.cls[k].at({i, c});
                std::vector<BigInt> col(tc.counts[k - 1], BigInt(0));
                for (int r = 0; r < strata[i].cells[k - 1]; ++r)
                    col[tc.cls[k - 1].at({i, r})] += bi[r][c];
                if (!set[cl]) {
                    for (int r = 0; r < tc.counts[k - 1]; ++r) B[r][cl] = col[r];
                    set[cl] = 1;
                } else {
                    for (int r = 0; r < tc.counts[k - 1]; ++r)
                        if (B[r][cl] != col[r])
                            throw NotCochainComplex(
                                "glued cells carry incompatible boundaries");
                }
            }
        }
        tc.boundary[k] = std::move(B);
    }
    // d o d = 0 on the quotient
    for (int k = 2; k <= tc.dim; ++k) {
        const auto prod = mat_mul(tc.boundary[k - 1], tc.boundary[k]);
        for (const auto& row : prod)
            for (const auto& v : row)
                if (v != 0) throw NotCochainComplex("assembled differential fails d^2 = 0");
    }
    return tc;
}

} // namespace detail

// H^k of the assembled twisted complex: conjugate by the twists, apply the
// Gamma identifications, check d^2 = 0, then compute as usual.
inline CohomologyEntry twisted_cohomology(const StratifiedComplex& sc, int k, Ring ring) {
    const StratifiedComplex twisted = apply_twist(sc);
    const auto tc = detail::assemble_total(twisted.strata, twisted.gluing);
    if (k < 0 || k > tc.dim) return {};
    const IntMat d_out =
        detail::transpose(k + 1 <= tc.dim ? tc.boundary[k + 1] : IntMat{});
    const IntMat d_in = detail::transpose(k >= 1 ? tc.boundary[k] : IntMat{});
    return cohomology_from_differentials(d_in, d_out, tc.counts[k], ring);
}

// Dimension of the eigenvalue-1 eigenspace of the induced action of the
// twist on H^k over the rationals.
inline int invariant_classes(const StratifiedComplex& sc, int k) {
    for (const auto& s : sc.strata) validate_stratum(s);
    detail::validate_twists(sc);
    const auto sigma = detail::sigma_or_identity(sc);
    const auto tc = detail::assemble_total(sc.strata, sc.gluing);
    if (k < 0 || k > tc.dim || tc.counts[k] == 0) return 0;
    const int n = tc.counts[k];

    // chain-level action U on degree-k classes: stratum i block -> sigma(i)
    detail::RatMat U(n, detail::RatVec(n, BigRat(0)));
    std::vector<char> colset(n, 0);
    for (size_t i = 0; i < sc.strata.size(); ++i) {
        if (k > sc.strata[i].dim()) continue;
        const IntMat T = detail::twist_or_identity(sc, static_cast<int>(i), k);
        for (int c = 0; c < sc.strata[i].cells[k]; ++c) {
            const int cl = tc.cls[k].at({static_cast<int>(i), c});
            detail::RatVec col(n, BigRat(0));
            for (int r = 0; r < sc.strata[sigma[i]].cells[k]; ++r)
                col[tc.cls[k].at({sigma[i], r})] += BigRat(T[r][c]);
            if (!colset[cl]) {
                for (int r = 0; r < n; ++r) U[r][cl] = col[r];
                colset[cl] = 1;
            } else {
                for (int r = 0; r < n; ++r)
                    if (U[r][cl] != col[r])
                        throw NotChainMap("twist does not descend to the glued complex");
            }
        }
    }
    // cochain action is the transpose
    detail::RatMat Ut(n, detail::RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Ut[i][j] = U[j][i];

    const IntMat d_out =
        detail::transpose(k + 1 <= tc.dim ? tc.boundary[k + 1] : IntMat{});
    const IntMat d_in = detail::transpose(k >= 1 ? tc.boundary[k] : IntMat{});
    auto kerb = d_out.empty() ? [&] {
        std::vector<detail::RatVec> full;
        for (int i = 0; i < n; ++i) {
            detail::RatVec v(n, BigRat(0));
            v[i] = 1;
            full.push_back(std::move(v));
        }
        return full;
    }() : detail::rat_nullspace(detail::to_rat_mat(d_out), n);
    // image basis of d_in
    std::vector<detail::RatVec> img;
    if (!d_in.empty() && !d_in[0].empty()) {
        // pivot columns of d_in form an image basis
        const detail::RatMat dt = detail::to_rat_mat(d_in);
        detail::RatMat work = dt;
        for (int c : detail::rat_rref(work)) {
            detail::RatVec v(n);
            for (int r = 0; r < n; ++r) v[r] = dt[r][c];
            img.push_back(std::move(v));
        }
    }
    // quotient basis: kernel vectors independent modulo the image
    std::vector<detail::RatVec> hbasis;
    {
        detail::RatMat probe;
        auto add_col = [&](const detail::RatVec& v) {
            if (probe.empty()) probe.assign(n, {});
            for (int r = 0; r < n; ++r) probe[r].push_back(v[r]);
        };
        for (const auto& v : img) add_col(v);
        int cur_rank = probe.empty() ? 0 : detail::rat_rank(probe);
        for (const auto& v : kerb) {
            add_col(v);
            const int nr = detail::rat_rank(probe);
            if (nr > cur_rank) {
                cur_rank = nr;
                hbasis.push_back(v);
            } else {
                for (int r = 0; r < n; ++r) probe[r].pop_back();
            }
        }
    }
    const int b = static_cast<int>(hbasis.size());
    if (b == 0) return 0;
    // induced matrix A: Ut * h_j = sum A_ij h_i (mod image)
    std::vector<detail::RatVec> span = hbasis;
    for (const auto& v : img) span.push_back(v);
    detail::RatMat A(b, detail::RatVec(b, BigRat(0)));
    for (int j = 0; j < b; ++j) {
        detail::RatVec w(n, BigRat(0));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) w[r] += Ut[r][c] * hbasis[j][c];
        auto x = detail::rat_solve_in_span(span, w);
        for (int i = 0; i < b; ++i) A[i][j] = x[i];
    }
    for (int i = 0; i < b; ++i) A[i][i] -= 1;
    return b - detail::rat_rank(A);
}

// ---------------------------------------------------------------------------
// strata v1 text format

inline StratifiedComplex parse_strata(std::istream& in) {
    StratifiedComplex sc;
    std::string line;
    int lineno = 0;
    bool header = false;
    int cur = -1;          // current stratum
    int cur_boundary = -1; // degree of the boundary being filled
    int cur_twist_stratum = -1, cur_twist_degree = -1;
    std::map<std::string, int> by_name;

    auto parse_cell_ref = [&](const std::string& tok) {
        // <stratum>.c<k>_<i>
        const auto dotpos = tok.find('.');
        if (dotpos == std::string::npos || tok.size() < dotpos + 4 || tok[dotpos + 1] != 'c')
            throw ParseError("line " + std::to_string(lineno) + ": bad cell reference '" + tok + "'");
        const std::string sname = tok.substr(0, dotpos);
        auto it = by_name.find(sname);
        if (it == by_name.end())
            throw ReferenceError("line " + std::to_string(lineno) + ": unknown stratum '" + sname + "'");
        const auto uspos = tok.find('_', dotpos);
        if (uspos == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": bad cell reference '" + tok + "'");
        GlueRef r;
        r.stratum = it->second;
        try {
            r.degree = std::stoi(tok.substr(dotpos + 2, uspos - dotpos - 2));
            r.cell = std::stoi(tok.substr(uspos + 1));
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad cell reference '" + tok + "'");
        }
        return r;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            if (line != "strata v1")
                throw ParseError("line " + std::to_string(lineno) + ": expected 'strata v1' header");
            header = true;
            continue;
        }
        std::istringstream is(line);
        std::string kw;
        is >> kw;
        if (kw == "stratum") {
            std::string name;
            if (!(is >> name)) throw ParseError("line " + std::to_string(lineno) + ": stratum needs a name");
            if (by_name.count(name))
                throw ParseError("line " + std::to_string(lineno) + ": duplicate stratum '" + name + "'");
            by_name[name] = cur = static_cast<int>(sc.strata.size());
            sc.strata.push_back({name, {}, {}});
            cur_boundary = -1;
            cur_twist_stratum = -1;
        } else if (kw == "cells") {
            int k, count;
            if (cur < 0 || !(is >> k >> count) || k < 0 || count < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad cells record");
            auto& cells = sc.strata[cur].cells;
            if (k >= static_cast<int>(cells.size())) cells.resize(k + 1, 0);
            cells[k] = count;
        } else if (kw == "boundary") {
            int k;
            if (cur < 0 || !(is >> k) || k < 1)
                throw ParseError("line " + std::to_string(lineno) + ": bad boundary record");
            cur_boundary = k;
            cur_twist_stratum = -1;
            auto& s = sc.strata[cur];
            if (k >= static_cast<int>(s.boundary.size())) s.boundary.resize(k + 1);
            s.boundary[k] = IntMat(k - 1 < static_cast<int>(s.cells.size()) ? s.cells[k - 1] : 0,
                                   std::vector<BigInt>(
                                       k < static_cast<int>(s.cells.size()) ? s.cells[k] : 0,
                                       BigInt(0)));
        } else if (kw == "row") {
            int i, j;
            long long v;
            if (!(is >> i >> j >> v))
                throw ParseError("line " + std::to_string(lineno) + ": bad row record");
            auto in_range = [](const IntMat& m, int r, int c) {
                return r >= 0 && r < static_cast<int>(m.size()) && c >= 0 &&
                       c < static_cast<int>(m[r].size());
            };
            if (cur_twist_stratum >= 0) {
                auto& t = sc.chain_twists[cur_twist_stratum][cur_twist_degree];
                if (!in_range(t, i, j))
                    throw ParseError("line " + std::to_string(lineno) + ": row index out of range");
                t[i][j] = v;
            } else if (cur >= 0 && cur_boundary >= 1) {
                auto& b = sc.strata[cur].boundary[cur_boundary];
                if (!in_range(b, i, j))
                    throw ParseError("line " + std::to_string(lineno) + ": row index out of range");
                b[i][j] = v;
            } else {
                throw ParseError("line " + std::to_string(lineno) + ": row outside boundary/twist");
            }
        } else if (kw == "glue") {
            std::string a, b;
            if (!(is >> a >> b)) throw ParseError("line " + std::to_string(lineno) + ": bad glue record");
            sc.gluing.push_back({parse_cell_ref(a), parse_cell_ref(b)});
        } else if (kw == "sigma") {
            int i, j;
            if (!(is >> i >> j)) throw ParseError("line " + std::to_string(lineno) + ": bad sigma record");
            if (i < 0 || j < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad sigma indices");
            if (i >= static_cast<int>(sc.sigma.size())) {
                const size_t old = sc.sigma.size();
                sc.sigma.resize(i + 1);
                for (size_t x = old; x < sc.sigma.size(); ++x)
                    sc.sigma[x] = static_cast<int>(x);
            }
            sc.sigma[i] = j;
        } else if (kw == "twist") {
            std::string sname;
            int k;
            if (!(is >> sname >> k) || k < 0)
                throw ParseError("line " + std::to_string(lineno) + ": bad twist record");
            auto it = by_name.find(sname);
            if (it == by_name.end())
                throw ReferenceError("line " + std::to_string(lineno) + ": unknown stratum '" + sname + "'");
            cur_twist_stratum = it->second;
            cur_twist_degree = k;
            cur_boundary = -1;
            if (sc.chain_twists.size() < sc.strata.size()) sc.chain_twists.resize(sc.strata.size());
            auto& tw = sc.chain_twists[cur_twist_stratum];
            if (k >= static_cast<int>(tw.size())) tw.resize(k + 1);
            const auto& s = sc.strata[cur_twist_stratum];
            const int cnt = k < static_cast<int>(s.cells.size()) ? s.cells[k] : 0;
            tw[k] = IntMat(cnt, std::vector<BigInt>(cnt, BigInt(0)));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown record '" + kw + "'");
        }
    }
    if (!header) throw ParseError("missing 'strata v1' header");
    // pad sigma to full length if partially specified
    if (!sc.sigma.empty() && sc.sigma.size() < sc.strata.size()) {
        const size_t old = sc.sigma.size();
        sc.sigma.resize(sc.strata.size());
        for (size_t x = old; x < sc.sigma.size(); ++x) sc.sigma[x] = static_cast<int>(x);
    }
    return sc;
}

inline StratifiedComplex parse_strata(const std::string& text) {
    std::istringstream is(text);
    return parse_strata(is);
}

} // namespace gzlab
