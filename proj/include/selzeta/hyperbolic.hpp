#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>

#include "errors.hpp"
#include "symdyn.hpp"

namespace selzeta {

inline constexpr double kDefaultKappa = 1.05;

// Geometry of X_b in the upper half-plane. beta_j is the half circle with
// centre c[j-1] and radius eps[j-1]; the three are pairwise at distance b.
struct SurfaceParams {
    double b = 0.0;
    double theta = 0.0;  // half the visual angle of beta_j seen from the disk centre
    std::array<double, 3> eps{};
    std::array<double, 3> c{};
    double kappa = kDefaultKappa;

    double left(int j) const { return c[j - 1] - eps[j - 1]; }
    double right(int j) const { return c[j - 1] + eps[j - 1]; }
};

inline SurfaceParams make_surface(double b, double kappa = kDefaultKappa) {
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("make_surface: b must be positive");
    if (!(kappa > 1.0 && kappa < 2.0)) throw DomainError("make_surface: kappa must lie in (1, 2)");

    SurfaceParams sp;
    sp.b = b;
    sp.kappa = kappa;
    // perpendiculars from the centre to beta_1, beta_2 meet at angle 2pi/3, so
    // cosh b = (3 cosh^2 D - 2)/2 with cosh D = 1/sin(theta)
    const double sin_theta = std::numbers::sqrt3 / (2.0 * std::cosh(0.5 * b));
    sp.theta = std::asin(sin_theta);
    const double cos_theta = std::cos(sp.theta);

    // cos, sin of 2 pi j / 3, exact table so that c_3 = 0
    constexpr std::array<double, 3> cos_a{-0.5, -0.5, 1.0};
    constexpr std::array<double, 3> sin_a{std::numbers::sqrt3 / 2, -std::numbers::sqrt3 / 2, 0.0};
    for (int j = 0; j < 3; ++j) {
        // endpoints tan(pi j/3 +- theta/2)
        const double denom = cos_a[j] + cos_theta;
        sp.eps[j] = sin_theta / denom;
        sp.c[j] = sin_a[j] / denom;
    }
    return sp;
}

// Side of the right-angled hexagon lying on a reflection geodesic.
inline double hexagon_side(double b) {
    if (!(b > 0.0)) throw DomainError("hexagon_side: b must be positive");
    const double ch = std::cosh(b);
    const double sh = std::sinh(b);
    const double arg = (ch + ch * ch) / (sh * sh);
    if (!(arg >= 1.0)) throw NumericalError("hexagon_side: acosh argument below 1");
    // arg - 1 = 1/(cosh b - 1), kept separate to avoid cancellation
    const double u = 1.0 / (ch - 1.0);
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

// Distance between the geodesics (z1, w1) and (w2, z2), z1 < w1 < w2 < z2.
inline double geodesic_distance(double z1, double w1, double w2, double z2) {
    if (!(z1 < w1 && w1 < w2 && w2 < z2)) throw DomainError("geodesic_distance: need z1 < w1 < w2 < z2");
    const double denom = (w2 - z1) * (z2 - w1);
    const double q = (z2 - z1) * (w2 - w1) / denom;            // tanh^2(d/2)
    const double one_minus_q = (w1 - z1) * (z2 - w2) / denom;  // same quantity, no cancellation
    if (!(q > 0.0 && q < 1.0) || !(one_minus_q > 0.0)) throw DomainError("geodesic_distance: cross ratio outside (0,1)");
    return 2.0 * std::log1p(std::sqrt(q)) - std::log(one_minus_q);
}

// 2x2 real matrix stored as e^{log_scale} * [a b; c d].
struct ScaledMatrix2 {
    std::array<double, 4> e{1.0, 0.0, 0.0, 1.0};
    double log_scale = 0.0;
    double log_abs_det = 0.0;
    int det_sign = 1;

    static ScaledMatrix2 identity() { return {}; }

    static ScaledMatrix2 from(double a, double b, double c, double d) {
        ScaledMatrix2 m;
        m.e = {a, b, c, d};
        const double det = a * d - b * c;
        if (det == 0.0) throw DomainError("ScaledMatrix2: singular matrix");
        m.log_abs_det = std::log(std::abs(det));
        m.det_sign = det > 0 ? 1 : -1;
        m.renormalize();
        return m;
    }

    // brings the largest entry into [1/2, 1) using an exact power of two
    void renormalize() {
        double mx = 0.0;
        for (double x : e) mx = std::max(mx, std::abs(x));
        if (mx == 0.0 || !std::isfinite(mx)) throw NumericalError("ScaledMatrix2: degenerate entries");
        int ex = 0;
        std::frexp(mx, &ex);
        for (double& x : e) x = std::ldexp(x, -ex);
        log_scale += ex * std::numbers::ln2;
    }

    double max_abs_entry() const {
        double mx = 0.0;
        for (double x : e) mx = std::max(mx, std::abs(x));
        return mx;
    }

    friend ScaledMatrix2 operator*(const ScaledMatrix2& x, const ScaledMatrix2& y) {
        ScaledMatrix2 r;
        r.e = {x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
               x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]};
        r.log_scale = x.log_scale + y.log_scale;
        r.log_abs_det = x.log_abs_det + y.log_abs_det;
        r.det_sign = x.det_sign * y.det_sign;
        r.renormalize();
        return r;
    }

    // log|tr| of the represented matrix; -inf for a zero trace
    double log_abs_trace() const { return std::log(std::abs(e[0] + e[3])) + log_scale; }
};

// Reflection in beta_j: x -> eps^2/(x - c) + c as a Moebius matrix.
inline ScaledMatrix2 reflection_matrix(int j, const SurfaceParams& sp) {
    if (j < 1 || j > 3) throw DomainError("reflection_matrix: index must be 1, 2 or 3");
    const double c = sp.c[j - 1];
    const double r = sp.eps[j - 1];
    ScaledMatrix2 m;
    m.e = {c, (r - c) * (r + c), 1.0, -c};
    m.log_abs_det = 2.0 * std::log(r);
    m.det_sign = -1;
    m.renormalize();
    return m;
}

// Translation length of a hyperbolic element, from its normalized trace.
inline double length_from_matrix(const ScaledMatrix2& p) {
    // log of |tr| / (2 sqrt|det|)
    const double log_x = p.log_abs_trace() - 0.5 * p.log_abs_det - std::numbers::ln2;
    if (!(log_x > 0.0)) throw NumericalError("geodesic_length: product is not hyperbolic");
    if (log_x > std::log(1e4)) {
        // acosh(x) = ln x + ln(1 + sqrt(1 - x^-2))
        const double inv2 = std::exp(-2.0 * log_x);
        return 2.0 * (log_x + std::log1p(std::sqrt(1.0 - inv2)));
    }
    return 2.0 * std::acosh(std::exp(log_x));
}

inline ScaledMatrix2 reflection_product(std::span<const Symbol> word, const SurfaceParams& sp) {
    ScaledMatrix2 p = ScaledMatrix2::identity();
    for (Symbol s : word) p = p * reflection_matrix(s, sp);
    return p;
}

// Length of the closed geodesic with the given cyclic cutting word.
inline double geodesic_length(std::span<const Symbol> word, const SurfaceParams& sp) {
    if (word.size() % 2 != 0) throw DomainError("geodesic_length: word length must be even");
    if (!is_cyclically_admissible(word)) throw DomainError("geodesic_length: word is not cyclically admissible");
    return length_from_matrix(reflection_product(word, sp));
}

// Length attached to a fixed point of the shift power m. Computed on the
// shortest even repetition of the primitive block and scaled up.
inline double geodesic_length(const OrbitClass& orbit, const SurfaceParams& sp) {
    if (orbit.m % 2 != 0) throw DomainError("geodesic_length: word length must be even");
    const int q = orbit.p % 2 == 0 ? orbit.p : 2 * orbit.p;
    std::span<const Symbol> block(orbit.rep.data(), static_cast<std::size_t>(q));
    return static_cast<double>(orbit.m / q) * geodesic_length(block, sp);
}

}  // namespace selzeta
