#pragma once

// Adaptive quadrature and safeguarded bracketed root finding.

#include <cmath>
#include <functional>
#include <vector>

#include "errors.hpp"

namespace gzlab {

namespace detail {

template <class F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) {
        if (std::abs(delta) > 15.0 * tol)
            throw QuadratureFailure("error estimate above tolerance at max refinement");
        return left + right + delta / 15.0;
    }
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

} // namespace detail

// Integral of f on [a,b] with absolute error <= tol. The integrand must be
// finite on the closed interval.
template <class F>
double integrate(const F& f, double a, double b, double tol, int max_depth = 48) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm))
        throw QuadratureFailure("non-finite integrand sample");
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Safeguarded bisection/secant on a sign-changing bracket [lo, hi].
template <class F>
double solve_bracketed(const F& f, double lo, double hi, double xtol, int max_iter = 200) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0)) throw NoBracket("no sign change on [lo, hi]");
    for (int it = 0; it < max_iter; ++it) {
        // secant candidate, clipped into the bracket interior
        double mid = 0.5 * (lo + hi);
        double x = mid;
        const double denom = fhi - flo;
        if (denom != 0) {
            double sec = hi - fhi * (hi - lo) / denom;
            if (sec > lo + 0.1 * (hi - lo) && sec < hi - 0.1 * (hi - lo)) x = sec;
        }
        double fx = f(x);
        if (fx == 0 || hi - lo < xtol) return x;
        if ((fx > 0) == (flo > 0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    throw ConvergenceFailure("bracketed solve: iteration budget exhausted");
}

// Scan a log-spaced grid for a sign change of f; returns the bracket.
template <class F>
std::pair<double, double> log_grid_bracket(const F& f, double lo, double hi, int points) {
    double prev_x = lo, prev_f = f(lo);
    for (int i = 1; i < points; ++i) {
        double x = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
        double fx = f(x);
        if (prev_f == 0 || (fx > 0) != (prev_f > 0)) return {prev_x, x};
        prev_x = x;
        prev_f = fx;
    }
    throw NoBracket("no sign change on the scan grid");
}

} // namespace gzlab
