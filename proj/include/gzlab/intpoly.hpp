#pragma once

// Exact univariate polynomial arithmetic over the integers and rationals,
// exact integer matrix determinants (Bareiss), and determinants of small
// matrices with polynomial entries.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "errors.hpp"

namespace gzlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

using IntPoly = std::vector<BigInt>;  // ascending degree, trimmed
using RatPoly = std::vector<BigRat>;

namespace poly {

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }
inline int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

template <class P>
P add(const P& a, const P& b) {
    P r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

template <class P>
P sub(const P& a, const P& b) {
    P r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

template <class P>
P mul(const P& a, const P& b) {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Truncated product modulo u^(L+1), integer coefficients.
inline IntPoly mul_trunc(const IntPoly& a, const IntPoly& b, int L) {
    IntPoly r(static_cast<size_t>(L) + 1);
    for (size_t i = 0; i < a.size() && static_cast<int>(i) <= L; ++i)
        for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= L; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

inline BigInt eval(const IntPoly& p, const BigInt& x) {
    BigInt v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

// Formal power-series inverse of p (p[0] must be 1), through degree L.
inline IntPoly series_inverse(const IntPoly& p, int L) {
    if (p.empty() || p[0] != 1) throw Error("series_inverse: constant term must be 1");
    IntPoly s(static_cast<size_t>(L) + 1);
    s[0] = 1;
    for (int k = 1; k <= L; ++k) {
        BigInt acc = 0;
        for (int j = 1; j <= k && j < static_cast<int>(p.size()); ++j) acc += p[j] * s[k - j];
        s[k] = -acc;
    }
    return s;
}

inline RatPoly to_rat(const IntPoly& p) {
    RatPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = BigRat(p[i]);
    return r;
}

inline RatPoly derivative(const RatPoly& p) {
    if (p.size() <= 1) return {};
    RatPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * BigInt(static_cast<long>(i));
    return d;
}

inline RatPoly monic(RatPoly p) {
    trim(p);
    if (p.empty()) return p;
    BigRat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

// Remainder of a / b over the rationals.
inline RatPoly rem(RatPoly a, const RatPoly& b) {
    trim(a);
    if (b.empty()) throw Error("poly rem: division by zero polynomial");
    while (degree(a) >= degree(b)) {
        BigRat q = a.back() / b.back();
        int shift = degree(a) - degree(b);
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline RatPoly quot(RatPoly a, const RatPoly& b) {
    trim(a);
    if (b.empty()) throw Error("poly quot: division by zero polynomial");
    RatPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1);
    while (degree(a) >= degree(b)) {
        BigRat c = a.back() / b.back();
        int shift = degree(a) - degree(b);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    trim(q);
    return q;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = rem(a, b);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

// Yun square-free decomposition: returns factors f1, f2, ... with
// p ~ prod fi^i (up to a constant), each fi square-free.
inline std::vector<RatPoly> squarefree_decomposition(const RatPoly& p_in) {
    RatPoly p = monic(p_in);
    std::vector<RatPoly> out;
    if (degree(p) < 1) return out;
    RatPoly dp = derivative(p);
    RatPoly a = gcd(p, dp);
    RatPoly b = quot(p, a);
    RatPoly c = quot(dp, a);
    RatPoly d = sub(c, derivative(b));
    while (degree(b) > 0) {
        RatPoly f = gcd(b, d);
        out.push_back(f);
        b = quot(b, f);
        c = quot(d, f);
        d = sub(c, derivative(b));
    }
    return out;
}

} // namespace poly

// ---------------------------------------------------------------------------
// Exact integer matrices

using IntMat = std::vector<std::vector<BigInt>>;

inline IntMat int_identity(int n) {
    IntMat m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Bareiss fraction-free determinant, exact.
inline BigInt int_determinant(IntMat m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] /= prev; // exact by Bareiss
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Rank of an integer matrix over the rationals.
inline int int_rank(const IntMat& m_in) {
    std::vector<std::vector<BigRat>> m(m_in.size());
    for (size_t i = 0; i < m_in.size(); ++i)
        m[i] = std::vector<BigRat>(m_in[i].begin(), m_in[i].end());
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            BigRat f = m[r][c] / m[rank][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Determinant of a small matrix with IntPoly entries via Laplace expansion.
inline IntPoly poly_determinant(const std::vector<std::vector<IntPoly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return IntPoly{1};
    if (n == 1) return m[0][0];
    IntPoly det;
    for (int j = 0; j < n; ++j) {
        if (m[0][j].empty()) continue;
        std::vector<std::vector<IntPoly>> minor(n - 1, std::vector<IntPoly>(n - 1));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        IntPoly term = poly::mul(m[0][j], poly_determinant(minor));
        det = (j % 2 == 0) ? poly::add(det, term) : poly::sub(det, term);
    }
    return det;
}

} // namespace gzlab
