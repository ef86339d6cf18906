#pragma once

// Constant-curvature leaf geometry: the quadratic momentum profile
// phi(u) = a*u - b*u^2 with a = 2/sqrt(3), its induced metric
// g = du^2/phi + phi dv^2 (curvature K = b), the arc-length constraint
// x(u_max) = sqrt(3), and the enclosed volume.
//
// The u-integrals have a u^{-1/2} endpoint singularity; the substitution
// u = u_max sin^2(theta) removes it:
//   du / sqrt(phi)      = (2/sqrt(b)) dtheta
//   phi'(u)             = a cos(2 theta)
// so both the length and volume integrands become smooth in theta.

#include <cmath>
#include <random>
#include <vector>

#include "numerics.hpp"

namespace gzlab {

inline constexpr double kLeafSlopeA = 1.1547005383792515;  // 2/sqrt(3)
inline constexpr double kCubeDiagonal = 1.7320508075688772; // sqrt(3)

struct MomentumProfile {
    double a = kLeafSlopeA;
    double b = 1.0;

    double u_max() const { return a / b; }
    double phi(double u) const { return u * (a - b * u); }
    double dphi(double u) const { return a - 2.0 * b * u; }
    double curvature() const { return b; }
};

struct LeafSample {
    double u, x, xi;
};

struct LeafProfile {
    MomentumProfile profile;
    std::vector<LeafSample> samples;
    double arc_length = 0;
    double volume = 0;
    double quad_tol = 0;
};

// Arc length S(b) = integral of sqrt((1 - phi'^2/4)/phi) du, absolute error <= tol.
inline double arc_length(double b, double tol = 1e-10) {
    if (b <= 0) throw Error("arc_length: b must be positive");
    const double a = kLeafSlopeA;
    const double c = a * a / 4.0;
    auto integrand = [&](double theta) {
        const double co = std::cos(2.0 * theta);
        return (2.0 / std::sqrt(b)) * std::sqrt(1.0 - c * co * co);
    };
    return integrate(integrand, 0.0, std::asin(1.0), tol);
}

// Enclosed volume pi * integral of sqrt((1 - phi'^2/4) * phi) du.
inline double volume(double b, double tol = 1e-10) {
    if (b <= 0) throw Error("volume: b must be positive");
    const MomentumProfile p{kLeafSlopeA, b};
    const double c = p.a * p.a / 4.0;
    const double um = p.u_max();
    auto integrand = [&](double theta) {
        const double s = std::sin(theta), co2 = std::cos(2.0 * theta);
        // sqrt(phi) du = 2 sqrt(b) um^2 sin^2 cos^2 dtheta
        const double sc = s * std::cos(theta);
        return 2.0 * std::sqrt(b) * um * um * sc * sc * std::sqrt(1.0 - c * co2 * co2);
    };
    const double pi = std::acos(-1.0);
    return pi * integrate(integrand, 0.0, pi / 2.0, tol);
}

// Unique b with S(b) = target, |S(b) - target| <= tol. The scan does not
// assume monotonicity of S.
inline double solve_b(double target = kCubeDiagonal, double tol = 1e-10) {
    auto resid = [&](double b) { return arc_length(b, tol / 10.0) - target; };
    auto [lo, hi] = log_grid_bracket(resid, 1e-3, 1e3, 60);
    double b = solve_bracketed(resid, lo, hi, 1e-14);
    if (std::abs(resid(b)) > tol)
        throw ConvergenceFailure("solve_b: residual above tolerance");
    return b;
}

// Constant curvature K = b, verified against -phi''/2 by central differences
// at 10 sample points.
inline double curvature_report(double b, unsigned seed = 2024) {
    const MomentumProfile p{kLeafSlopeA, b};
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> interior(0.1, 0.9);
    const double h = 1e-5 * p.u_max();
    for (int i = 0; i < 10; ++i) {
        const double u = interior(rng) * p.u_max();
        const double second = (p.phi(u + h) - 2.0 * p.phi(u) + p.phi(u - h)) / (h * h);
        if (std::abs(-0.5 * second - b) > 1e-6 * std::max(1.0, b))
            throw Error("curvature_report: finite-difference check failed");
    }
    return p.curvature();
}

// Integrates the generator curve x(u), xi(u) on an n-point theta grid
// (composite Simpson between consecutive samples).
inline LeafProfile profile_curve(double b, int n = 256, double tol = 1e-10) {
    if (b <= 0) throw Error("profile_curve: b must be positive");
    if (n < 16) throw Error("profile_curve: need at least 16 samples");
    LeafProfile lp;
    lp.profile = {kLeafSlopeA, b};
    lp.quad_tol = tol;
    const double c = lp.profile.a * lp.profile.a / 4.0;
    const double um = lp.profile.u_max();
    const double pi = std::acos(-1.0);
    auto dx_dtheta = [&](double theta) {
        const double co = std::cos(2.0 * theta);
        return (2.0 / std::sqrt(b)) * std::sqrt(1.0 - c * co * co);
    };
    double x = 0.0;
    double prev_theta = 0.0;
    lp.samples.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double theta = (pi / 2.0) * i / (n - 1);
        if (i > 0) x += integrate(dx_dtheta, prev_theta, theta, tol / n);
        const double s = std::sin(theta);
        const double u = um * s * s;
        lp.samples.push_back({u, x, std::sqrt(std::max(0.0, lp.profile.phi(u)))});
        prev_theta = theta;
    }
    lp.arc_length = x;
    lp.volume = volume(b, tol);
    return lp;
}

} // namespace gzlab
