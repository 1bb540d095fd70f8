#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "transfermat.hpp"
#include "zerofinder.hpp"

namespace selzeta {

inline constexpr double kSingularModulus = 1e-300;
inline constexpr double kCurveClip = -1.0;
inline constexpr double kWindowMargin = 0.1;

// sigma_j(t) = (1/2) ln |mu_j(e^{it})|; nullopt on the singular set.
inline std::optional<double> curve_sigma(int j, double t) {
    if (j < 1 || j > 4) throw DomainError("curve_sigma: curve index must lie in 1..4");
    const cplx z = std::polar(1.0, t);
    double mod = 0.0;
    // the first two in closed form, so that cos t = +-1 is exactly singular
    if (j == 1)
        mod = 2.0 - 2.0 * std::cos(t);
    else if (j == 2)
        mod = 2.0 + 2.0 * std::cos(t);
    else
        mod = std::abs(eigenvalues_mu(z)[static_cast<std::size_t>(j - 1)]);
    if (!(mod >= kSingularModulus)) return std::nullopt;
    return 0.5 * std::log(mod);
}

// The four limit curves and the lattice (ln2 + i pi) Z u i pi Z.
struct CurveFamily {
    static constexpr int count = 4;

    std::optional<double> sigma(int j, double t) const { return curve_sigma(j, t); }

    // sigma clipped from below; singular points map to the clip value
    double clipped(int j, double t) const {
        const auto s = curve_sigma(j, t);
        return s ? std::max(*s, kCurveClip) : kCurveClip;
    }

    // common points of all four curves with imaginary part in [t0, t1]
    std::vector<cplx> intersections(double t0, double t1) const {
        std::vector<cplx> out;
        const double pi = std::numbers::pi;
        for (long k = static_cast<long>(std::ceil(t0 / pi - 0.5)); pi * (static_cast<double>(k) + 0.5) <= t1; ++k)
            out.emplace_back(0.5 * std::numbers::ln2, pi * (static_cast<double>(k) + 0.5));
        return out;
    }

    // lattice points with imaginary part in [t0, t1]
    std::vector<cplx> lattice(double t0, double t1) const {
        std::vector<cplx> out;
        const double pi = std::numbers::pi;
        for (long k = static_cast<long>(std::ceil(t0 / pi)); pi * static_cast<double>(k) <= t1; ++k) {
            out.emplace_back(0.0, pi * static_cast<double>(k));
            out.emplace_back(std::numbers::ln2, pi * static_cast<double>(k));
        }
        return out;
    }
};

inline std::vector<cplx> rescale_zeros(const std::vector<cplx>& zeros, double b) {
    if (!(b > 0.0)) throw DomainError("rescale_zeros: b must be positive");
    const double shrink = std::exp(-b);
    std::vector<cplx> out;
    out.reserve(zeros.size());
    for (const cplx& z : zeros) out.emplace_back(z.real() * b, z.imag() * shrink);
    return out;
}

inline std::vector<cplx> rescale_zeros(const ZeroSet& zs, double b) {
    if (std::abs(zs.b - b) > 1e-12 * std::max(1.0, std::abs(b)))
        throw DomainError("rescale_zeros: zero set was computed for a different b");
    return rescale_zeros(zs.points(), b);
}

struct CurveSamples {
    std::vector<cplx> points;
    double dt = 0.0;
    double max_slope = 0.0;
    // every curve point lies within this distance of a sample
    double discretization = 0.0;
};

// Samples of all four curves on [t0, t1] with step at most dt.
inline CurveSamples sample_curves(double t0, double t1, double dt = 1e-3) {
    if (!(t1 > t0)) throw DomainError("sample_curves: empty parameter range");
    if (!(dt > 0.0 && dt <= 1e-3)) throw DomainError("sample_curves: step must lie in (0, 1e-3]");
    const auto steps = static_cast<std::size_t>(std::ceil((t1 - t0) / dt));
    CurveSamples cs;
    cs.dt = (t1 - t0) / static_cast<double>(steps);
    const CurveFamily cf;
    cs.points.reserve(4 * (steps + 1));
    std::array<double, 4> prev{};
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = k == steps ? t1 : t0 + static_cast<double>(k) * cs.dt;
        for (int j = 1; j <= 4; ++j) {
            const double s = cf.clipped(j, t);
            cs.points.emplace_back(s, t);
            if (k > 0) cs.max_slope = std::max(cs.max_slope, std::abs(s - prev[static_cast<std::size_t>(j - 1)]) / cs.dt);
            prev[static_cast<std::size_t>(j - 1)] = s;
        }
    }
    cs.discretization = 0.5 * cs.dt * std::sqrt(1.0 + cs.max_slope * cs.max_slope);
    return cs;
}

// sup over a in A of the distance to the nearest point of B.
inline double directed_hausdorff(const std::vector<cplx>& A, const std::vector<cplx>& B, unsigned threads = 0) {
    if (A.empty() || B.empty()) throw DomainError("hausdorff_distance: empty point set");
    std::vector<cplx> sorted = B;
    std::sort(sorted.begin(), sorted.end(), [](cplx x, cplx y) { return x.imag() < y.imag(); });
    const std::size_t chunks = std::min<std::size_t>(A.size(), 64);
    std::vector<double> part(chunks, 0.0);
    parallel_for(chunks, threads, [&](std::size_t c) {
        double worst = 0.0;
        for (std::size_t i = c; i < A.size(); i += chunks) {
            const cplx a = A[i];
            auto mid = std::lower_bound(sorted.begin(), sorted.end(), a.imag(),
                                        [](cplx x, double v) { return x.imag() < v; });
            double best = std::numeric_limits<double>::infinity();
            for (auto it = mid; it != sorted.end() && it->imag() - a.imag() < best; ++it)
                best = std::min(best, std::abs(*it - a));
            for (auto it = mid; it != sorted.begin();) {
                --it;
                if (a.imag() - it->imag() >= best) break;
                best = std::min(best, std::abs(*it - a));
            }
            worst = std::max(worst, best);
        }
        part[c] = worst;
    });
    return *std::max_element(part.begin(), part.end());
}

inline double hausdorff_distance(const std::vector<cplx>& A, const std::vector<cplx>& B, unsigned threads = 0) {
    return std::max(directed_hausdorff(A, B, threads), directed_hausdorff(B, A, threads));
}

struct Window {
    double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;
    bool contains(cplx z) const {
        return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
    }
};

inline std::vector<cplx> points_in(const std::vector<cplx>& pts, const Window& w) {
    std::vector<cplx> out;
    for (const cplx& z : pts)
        if (w.contains(z)) out.push_back(z);
    return out;
}

struct WindowedDistance {
    double distance = 0.0;
    double a_to_b = 0.0;
    double b_to_a = 0.0;
    std::size_t a_count = 0;
    std::size_t b_count = 0;
};

// Hausdorff distance between the parts of A and B inside `core`; nearest
// partners may lie anywhere in `reach`, so that points close to an edge
// of the core are not penalized for partners just across it.
inline WindowedDistance windowed_hausdorff(const std::vector<cplx>& A, const std::vector<cplx>& B, const Window& core,
                                           const Window& reach, unsigned threads = 0) {
    const auto a_core = points_in(A, core), b_core = points_in(B, core);
    const auto a_reach = points_in(A, reach), b_reach = points_in(B, reach);
    if (a_core.empty() || b_core.empty()) throw DomainError("windowed_hausdorff: no points inside the window");
    WindowedDistance wd;
    wd.a_count = a_core.size();
    wd.b_count = b_core.size();
    wd.a_to_b = directed_hausdorff(a_core, b_reach, threads);
    wd.b_to_a = directed_hausdorff(b_core, a_reach, threads);
    wd.distance = std::max(wd.a_to_b, wd.b_to_a);
    return wd;
}

struct CurveComparison {
    WindowedDistance hausdorff;
    double discretization = 0.0;  // sampling error included in the distance
    double height = 0.0;
};

// Rescaled zeros against the curves on [0, ln 2] x [0, height], with a
// margin of 0.1 dropped at the bottom and the top.
inline CurveComparison compare_with_curves(const std::vector<cplx>& rescaled, double height, double dt = 1e-3,
                                           unsigned threads = 0) {
    if (!(height > 2.0 * kWindowMargin)) throw DomainError("compare_with_curves: window too short");
    const auto cs = sample_curves(0.0, height, dt);
    const Window core{0.0, std::numbers::ln2, kWindowMargin, height - kWindowMargin};
    const Window reach{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), 0.0, height};
    CurveComparison cc;
    cc.hausdorff = windowed_hausdorff(rescaled, cs.points, core, reach, threads);
    cc.discretization = cs.discretization;
    cc.height = height;
    return cc;
}

struct TranslationReport {
    double tau = 0.0;
    double eps = 0.0;
    double window_start = 0.0;
    double window_height = 0.0;
    std::size_t base_count = 0;
    std::size_t shifted_count = 0;
    std::size_t matched = 0;
    std::size_t unmatched = 0;
    double max_distance = 0.0;
    bool pass = false;
};

// Compares the zeros with imaginary part in [t0, t0 + H] against those in
// [t0 + tau, t0 + tau + H] moved down by tau, where t0, H come from the
// searched rectangle. Pairs by a maximum matching whose largest distance is
// as small as possible.
inline TranslationReport almost_period_test(const ZeroSet& zs, double tau_im, double eps) {
    if (!(tau_im >= 0.0)) throw DomainError("almost_period_test: tau must be non-negative");
    if (!(eps >= 0.0)) throw DomainError("almost_period_test: eps must be non-negative");
    const double height = zs.rect.t_max - zs.rect.t_min;
    if (!(height > 0.0) || height < 2.0 * tau_im) throw DomainError("almost_period_test: zero set does not cover two periods");
    TranslationReport rep;
    rep.tau = tau_im;
    rep.eps = eps;
    rep.window_start = zs.rect.t_min;
    rep.window_height = height - tau_im;
    const double t0 = rep.window_start, t1 = t0 + rep.window_height;

    std::vector<cplx> base, shifted;
    for (const auto& z : zs.zeros) {
        for (int k = 0; k < z.multiplicity; ++k) {
            if (z.s.imag() >= t0 && z.s.imag() <= t1) base.push_back(z.s);
            if (z.s.imag() >= t0 + tau_im && z.s.imag() <= t1 + tau_im) shifted.push_back(z.s - cplx{0.0, tau_im});
        }
    }
    rep.base_count = base.size();
    rep.shifted_count = shifted.size();

    struct Pair {
        double d;
        std::size_t i, j;
    };
    std::vector<Pair> pairs;
    // candidate radius: anything beyond it could only be matched with a
    // distance that fails the test anyway, except when eps is generous
    const double radius = std::max(eps, 1.0);
    std::vector<std::size_t> order(shifted.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return shifted[x].imag() < shifted[y].imag(); });
    for (std::size_t i = 0; i < base.size(); ++i) {
        auto lo = std::lower_bound(order.begin(), order.end(), base[i].imag() - radius,
                                   [&](std::size_t j, double v) { return shifted[j].imag() < v; });
        for (auto it = lo; it != order.end() && shifted[*it].imag() <= base[i].imag() + radius; ++it) {
            const double d = std::abs(base[i] - shifted[*it]);
            if (d <= radius) pairs.push_back({d, i, *it});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
        if (x.d != y.d) return x.d < y.d;
        if (x.i != y.i) return x.i < y.i;
        return x.j < y.j;
    });
    // maximum matching using only the first `limit` pairs (Kuhn)
    auto match = [&](std::size_t limit) {
        std::vector<std::vector<std::size_t>> adj(base.size());
        for (std::size_t k = 0; k < limit; ++k) adj[pairs[k].i].push_back(pairs[k].j);
        std::vector<long> owner(shifted.size(), -1);
        std::vector<std::size_t> seen(shifted.size(), 0);
        std::size_t stamp = 0, count = 0;
        std::function<bool(std::size_t)> augment = [&](std::size_t i) {
            for (std::size_t j : adj[i]) {
                if (seen[j] == stamp) continue;
                seen[j] = stamp;
                if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]))) {
                    owner[j] = static_cast<long>(i);
                    return true;
                }
            }
            return false;
        };
        for (std::size_t i = 0; i < base.size(); ++i) {
            ++stamp;
            if (augment(i)) ++count;
        }
        return count;
    };
    // bottleneck: fewest pairs (smallest distance cap) that keep the
    // matching maximum
    rep.matched = match(pairs.size());
    std::size_t lo = 0, hi = pairs.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (match(mid) == rep.matched) hi = mid;
        else lo = mid + 1;
    }
    rep.max_distance = lo == 0 ? 0.0 : pairs[lo - 1].d;
    rep.unmatched = base.size() + shifted.size() - 2 * rep.matched;
    rep.pass = rep.unmatched == 0 && rep.max_distance <= eps;
    return rep;
}

struct LatticeComparison {
    WindowedDistance hausdorff;
    double height = 0.0;  // rescaled half-height kappa * b
};

// b * (zeros with |Re| <= delta, |Im| <= kappa_height) against the lattice
// in the same rescaled window, widened to reach Re = ln 2. Partners are looked up a distance pi/2
// beyond the window so that a lattice point on the edge keeps its zero.
inline LatticeComparison lattice_compare(const std::vector<cplx>& zeros, double b, double delta, double kappa_height,
                                         unsigned threads = 0) {
    if (!(b > 0.0)) throw DomainError("lattice_compare: b must be positive");
    if (!(kappa_height > 0.0)) throw DomainError("lattice_compare: window height must be positive");
    const double h = kappa_height * b;
    std::vector<cplx> scaled;
    for (const cplx& z : zeros) {
        // both halves of the window: conjugates of the stored t >= 0 zeros
        const cplx w = z * b;
        scaled.push_back(w);
        if (w.imag() != 0.0) scaled.push_back(std::conj(w));
    }
    const double pad = 0.5 * std::numbers::pi;
    const CurveFamily cf;
    const auto lat = cf.lattice(-h - pad, h + pad);
    const double w = std::max(delta * b, std::numbers::ln2);
    const Window core{-w, w, -h, h};
    const Window reach{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), -h - pad, h + pad};
    LatticeComparison lc;
    lc.hausdorff = windowed_hausdorff(scaled, lat, core, reach, threads);
    lc.height = h;
    return lc;
}

inline LatticeComparison lattice_compare(const ZeroSet& zs, double b, double delta, double kappa_height,
                                         unsigned threads = 0) {
    if (std::abs(zs.b - b) > 1e-12 * std::max(1.0, std::abs(b)))
        throw DomainError("lattice_compare: zero set was computed for a different b");
    if (zs.rect.t_max < kappa_height || zs.rect.t_min > 0.0)
        throw DomainError("lattice_compare: zero set does not cover the window");
    return lattice_compare(zs.points(), b, delta, kappa_height, threads);
}

}  // namespace selzeta
