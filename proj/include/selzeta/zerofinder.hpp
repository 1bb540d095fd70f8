#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <tuple>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "zetacore.hpp"

namespace selzeta {

template <class F>
concept AnalyticFunction = requires(const F& f, cplx s) {
    { f.value_and_derivative(s) } -> std::convertible_to<std::pair<cplx, cplx>>;
};

struct Rect {
    double sigma_min = 0.0, sigma_max = 0.0, t_min = 0.0, t_max = 0.0;

    bool valid() const { return sigma_min < sigma_max && t_min < t_max; }
    bool contains(cplx s) const {
        return s.real() >= sigma_min && s.real() <= sigma_max && s.imag() >= t_min && s.imag() <= t_max;
    }
    Rect grown(double d) const { return {sigma_min - d, sigma_max + d, t_min - d, t_max + d}; }
    Rect intersect(const Rect& o) const {
        return {std::max(sigma_min, o.sigma_min), std::min(sigma_max, o.sigma_max), std::max(t_min, o.t_min),
                std::min(t_max, o.t_max)};
    }
};

struct FoundZero {
    cplx s;
    double residual = 0.0;
    int iterations = 0;
    int multiplicity = 1;    // zeros within the dedup radius, by winding number
    double noise_floor = 0.0;  // estimated rounding error of |Z_n| at s
    double reach = 0.0;        // |Z_n / Z_n'| at s, about the distance to the zero
};

struct SearchStats {
    std::size_t seeds = 0;
    std::size_t converged = 0;
    std::size_t not_converged = 0;
    std::size_t outside = 0;
    std::size_t duplicates = 0;
};

struct Audit {
    long winding_total = 0;
    long found_total = 0;
    Rect rect;  // rectangle the two counts refer to
};

struct ZeroSet {
    std::vector<FoundZero> zeros;  // ascending imaginary part, then real part
    Rect rect;                     // region actually searched
    int n_used = 0;
    double b = 0.0;
    double dedup_radius = 0.0;
    SearchStats stats;
    std::optional<Audit> audit;

    long total_multiplicity() const {
        long k = 0;
        for (const auto& z : zeros) k += z.multiplicity;
        return k;
    }

    std::vector<cplx> points() const {
        std::vector<cplx> out;
        out.reserve(zeros.size());
        for (const auto& z : zeros) out.push_back(z.s);
        return out;
    }
};

// Zeros of Z_n kept by default lie in [-kStripMargin, delta + kStripMargin].
inline constexpr double kStripMargin = 0.02;

// Converged Newton points closer than this are one zero. Truncation splits
// the double zeros coming from the symmetry of the surface into pairs as
// close as 1e-4, so the radius has to stay well below that.
inline constexpr double kDefaultDedupRadius = 1e-6;

// Converged points within this many Newton distances of each other are
// one zero as well.
inline constexpr double kReachLink = 4.0;

struct SearchOptions {
    double dt = 0.0;            // vertical seed spacing, 0 = min(pi/(4b), 0.02)
    double dsigma = 0.0;        // horizontal seed spacing, 0 = delta/8
    double residual_tol = 1e-9;
    double step_tol = 1e-13;    // relative to max(1, |s|)
    int max_iter = 50;
    double dedup_radius = kDefaultDedupRadius;
    bool clamp_to_strip = true; // keep only -0.02 <= Re s <= delta + 0.02
    std::optional<double> delta;
    bool multiplicities = true;
    bool audit = false;
    unsigned threads = 0;
};

inline double default_dt(double b) { return std::min(std::numbers::pi / (4.0 * b), 0.02); }

// Largest real zero in (0, 1): downward scan, then bisection.
template <class F>
double find_real_delta(const F& f, double scan_step = 1e-4, double tol = 1e-12) {
    auto g = [&](double x) { return f(cplx{x, 0.0}).real(); };
    double hi = 1.0;
    double g_hi = g(hi);
    const long steps = std::lround(1.0 / scan_step);
    for (long k = steps - 1; k >= 1; --k) {
        const double lo = static_cast<double>(k) * scan_step;
        const double g_lo = g(lo);
        if (g_lo == 0.0) return lo;
        if ((g_lo < 0.0) != (g_hi < 0.0)) {
            double a = lo, fa = g_lo, c = hi;
            while (c - a > tol) {
                const double mid = 0.5 * (a + c);
                const double fm = g(mid);
                if (fm == 0.0) return mid;
                if ((fm < 0.0) == (fa < 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    c = mid;
                }
            }
            return 0.5 * (a + c);
        }
        hi = lo;
        g_hi = g_lo;
    }
    throw NoRealZeroError("no sign change of Z_n on (0, 1)");
}

inline double find_real_delta(const CoefficientTable& table, int n) { return find_real_delta(ZetaSeries(table, n)); }

namespace detail {

inline constexpr int kGiveUpAfter = 12;
inline constexpr double kGiveUpResidual = 1e-3;

template <class F>
double noise_floor(const F& f, cplx s) {
    if constexpr (requires { f.rounding_floor(s); })
        return f.rounding_floor(s);
    else
        return 0.0;
}

template <AnalyticFunction F>
std::optional<FoundZero> newton(const F& f, cplx s, const Rect& keep_inside, double max_step, const SearchOptions& o) {
    // residual far below the acceptance level, or down to rounding noise;
    // the noise estimate is refreshed once the iterate gets close
    double floor = std::max(1e-3 * o.residual_tol, noise_floor(f, s));
    bool floor_refreshed = false;
    constexpr bool has_second = requires(const F& g, cplx x) { g.value_and_derivatives2(x); };
    int it = 0;
    int linear_steps = 0;
    bool schroeder = false;  // Newton on Z/Z', for clustered zeros
    double prev_len = std::numeric_limits<double>::infinity();
    double residual = 0.0;
    while (true) {
        cplx v, dv, d2v{0.0};
        if constexpr (has_second) {
            if (schroeder) {
                const auto r = f.value_and_derivatives2(s);
                v = r[0];
                dv = r[1];
                d2v = r[2];
            } else {
                std::tie(v, dv) = f.value_and_derivative(s);
            }
        } else {
            std::tie(v, dv) = f.value_and_derivative(s);
        }
        residual = std::abs(v);
        if (!floor_refreshed && residual <= 1e2 * floor) {
            floor = std::max(1e-3 * o.residual_tol, noise_floor(f, s));
            floor_refreshed = true;
        }
        if (residual <= floor || it >= o.max_iter) break;
        // seeds that are nowhere near a zero after a dozen steps are dropped
        if (it >= kGiveUpAfter && residual > kGiveUpResidual) return std::nullopt;
        if (dv == cplx{0.0} || !std::isfinite(std::abs(dv))) return std::nullopt;
        cplx step = v / dv;
        if (schroeder) {
            const cplx denom = 1.0 - v * d2v / (dv * dv);
            if (denom != cplx{0.0}) step /= denom;
        }
        const double len = std::abs(step);
        if (!std::isfinite(len)) return std::nullopt;
        // steady shrink factor near 1/2 signals a zero of multiplicity two
        const double ratio = len / prev_len;
        linear_steps = (ratio > 0.3 && ratio < 0.8) ? linear_steps + 1 : 0;
        if (has_second && linear_steps >= 3) schroeder = true;
        prev_len = len;
        if (len > max_step) step *= max_step / len;
        s -= step;
        ++it;
        if (!keep_inside.contains(s)) return std::nullopt;
        if (len <= o.step_tol * std::max(1.0, std::abs(s))) break;
    }
    const auto [v, dv] = f.value_and_derivative(s);
    residual = std::abs(v);
    // the tolerance cannot be stricter than the rounding error of Z_n itself
    const double nf = noise_floor(f, s);
    if (!(residual <= std::max(o.residual_tol, nf))) return std::nullopt;
    const double adv = std::abs(dv);
    return FoundZero{s, residual, it, 1, nf, adv > 0.0 ? residual / adv : 0.0};
}

inline bool by_t_then_sigma(const FoundZero& a, const FoundZero& b) {
    if (a.s.imag() != b.s.imag()) return a.s.imag() < b.s.imag();
    return a.s.real() < b.s.real();
}

}  // namespace detail

struct WindingOptions {
    double boundary_margin = 1e-10;  // smallest |f| accepted on the contour
    double perturb = 0.0;            // inward shift per retry, 0 = half the default grid step
    int retries = 3;
    double samples_per_unit = 0.0;   // initial density, 0 = derived from the largest frequency
    int max_depth = 48;
};

struct WindingResult {
    long count = 0;
    Rect rect;
};

namespace detail {

inline double wrap_angle(double a) {
    a = std::remainder(a, 2.0 * std::numbers::pi);
    return a;
}

// Total argument change of f along path(u), u in [0, 1], a path of the
// given length; nullopt when it passes too close to a zero. Samples are
// refined until neighbouring values differ in argument by less than pi/2.
// With a derivative at hand a segment is also split while it is longer than
// the sum of |f/f'| at its ends, the local distance to the nearest zero, so
// a zero hugging the contour cannot hide a full turn between two samples.
template <class F, class Path>
std::optional<double> arg_change(const F& f, Path&& path, double length, std::size_t n0, const WindingOptions& o) {
    struct Node {
        double u;
        cplx v;
        double reach;
        int depth;
    };
    auto sample = [&](double u) -> std::pair<cplx, double> {
        const cplx s = path(u);
        if constexpr (AnalyticFunction<F>) {
            const auto [v, dv] = f.value_and_derivative(s);
            const double adv = std::abs(dv);
            return {v, adv > 0.0 ? std::abs(v) / adv : std::numeric_limits<double>::infinity()};
        } else {
            return {f(s), std::numeric_limits<double>::infinity()};
        }
    };

    double total = 0.0;
    auto [v_prev, reach_prev] = sample(0.0);
    if (std::abs(v_prev) <= o.boundary_margin) return std::nullopt;
    for (std::size_t k = 0; k < n0; ++k) {
        const double ua = static_cast<double>(k) / static_cast<double>(n0);
        const double ub = static_cast<double>(k + 1) / static_cast<double>(n0);
        const auto [vb, rb] = sample(ub);
        std::vector<Node> stack{{ub, vb, rb, 0}};
        double u_prev = ua;
        while (!stack.empty()) {
            const Node nd = stack.back();
            if (std::abs(nd.v) <= o.boundary_margin) return std::nullopt;
            const double d = wrap_angle(std::arg(nd.v) - std::arg(v_prev));
            const bool near_zero = (nd.u - u_prev) * length > reach_prev + nd.reach;
            if (std::abs(d) < std::numbers::pi / 2.0 && !near_zero) {
                total += d;
                v_prev = nd.v;
                reach_prev = nd.reach;
                u_prev = nd.u;
                stack.pop_back();
                continue;
            }
            if (nd.depth >= o.max_depth) return std::nullopt;
            const double um = 0.5 * (u_prev + nd.u);
            stack.back().depth = nd.depth + 1;
            const auto [vm, rm] = sample(um);
            stack.push_back({um, vm, rm, nd.depth + 1});
        }
    }
    return total;
}

inline std::size_t initial_samples(double length, double density) {
    return std::max<std::size_t>(8, static_cast<std::size_t>(std::ceil(length * density)));
}

}  // namespace detail

// Number of zeros inside rect by the argument principle.
template <class F>
WindingResult winding_count(const F& f, const Rect& rect, double max_frequency, const WindingOptions& o = {}) {
    if (!rect.valid()) throw DomainError("winding_count: empty rectangle");
    const double density = o.samples_per_unit > 0.0 ? o.samples_per_unit : std::max(16.0, 8.0 * max_frequency / std::numbers::pi);
    Rect r = rect;
    const double shift = o.perturb > 0.0 ? o.perturb : 0.01;
    for (int attempt = 0; attempt <= o.retries; ++attempt) {
        const cplx c[4] = {{r.sigma_min, r.t_min}, {r.sigma_max, r.t_min}, {r.sigma_max, r.t_max}, {r.sigma_min, r.t_max}};
        double total = 0.0;
        bool ok = true;
        for (int e = 0; e < 4 && ok; ++e) {
            const cplx a = c[e], b = c[(e + 1) % 4];
            auto d = detail::arg_change(f, [&](double u) { return a + (b - a) * u; }, std::abs(b - a),
                                        detail::initial_samples(std::abs(b - a), density), o);
            if (!d)
                ok = false;
            else
                total += *d;
        }
        if (ok) {
            const double turns = total / (2.0 * std::numbers::pi);
            const double rounded = std::round(turns);
            if (std::abs(turns - rounded) < 0.25) return {std::lround(rounded), r};
        }
        r = {r.sigma_min + shift, r.sigma_max - shift, r.t_min + shift, r.t_max - shift};
        if (!r.valid()) break;
    }
    throw AuditFailure("winding_count: contour keeps passing through a zero");
}

// Number of zeros in the open disk |s - c| < r.
template <class F>
std::optional<long> zeros_in_disk(const F& f, cplx c, double r, double max_frequency) {
    WindingOptions o;
    o.boundary_margin = 0.0;
    const double density = std::max(16.0, 8.0 * max_frequency / std::numbers::pi);
    auto d = detail::arg_change(f, [&](double u) { return c + std::polar(r, 2.0 * std::numbers::pi * u); }, 2.0 * std::numbers::pi * r,
                                std::max<std::size_t>(16, detail::initial_samples(2.0 * std::numbers::pi * r, density)), o);
    if (!d) return std::nullopt;
    const double turns = *d / (2.0 * std::numbers::pi);
    if (std::abs(turns - std::round(turns)) > 0.25) return std::nullopt;
    return std::lround(turns);
}

// Newton iteration from every point of a grid over rect; converged points
// are merged within the dedup radius. The result does not depend on the
// number of workers.
template <AnalyticFunction F>
ZeroSet find_zeros(const F& f, const Rect& rect, const SearchOptions& opts_in, double b) {
    if (!rect.valid()) throw DomainError("find_zeros: empty rectangle");
    if (rect.sigma_min < -0.1 || rect.sigma_max > 1.0) throw DomainError("find_zeros: rectangle must lie in -0.1 <= Re s <= 1");
    SearchOptions o = opts_in;
    if (o.dt <= 0.0) o.dt = default_dt(b);
    if (o.clamp_to_strip && !o.delta) o.delta = find_real_delta(f);
    if (o.dsigma <= 0.0) o.dsigma = o.delta ? *o.delta / 8.0 : std::numbers::ln2 / (8.0 * b);
    if (!(o.dedup_radius > 0.0)) throw DomainError("find_zeros: dedup radius must be positive");

    Rect eff = rect;
    if (o.clamp_to_strip) eff = eff.intersect({-kStripMargin, *o.delta + kStripMargin, rect.t_min, rect.t_max});

    ZeroSet zs;
    zs.rect = eff;
    zs.b = b;
    zs.dedup_radius = o.dedup_radius;
    if (!eff.valid()) return zs;

    const double h = std::max(o.dt, o.dsigma);
    const Rect cage = eff.grown(2.0 * h);
    const double max_step = 4.0 * h;
    const std::size_t cols = static_cast<std::size_t>(std::floor((eff.sigma_max - eff.sigma_min) / o.dsigma)) + 1;
    const std::size_t rows = static_cast<std::size_t>(std::floor((eff.t_max - eff.t_min) / o.dt)) + 1;

    struct RowResult {
        std::vector<FoundZero> hits;
        std::size_t not_converged = 0, outside = 0;
    };
    std::vector<RowResult> per_row(rows);
    parallel_for(rows, o.threads, [&](std::size_t r) {
        auto& out = per_row[r];
        const double t = eff.t_min + static_cast<double>(r) * o.dt;
        for (std::size_t c = 0; c < cols; ++c) {
            const double sigma = eff.sigma_min + static_cast<double>(c) * o.dsigma;
            auto z = detail::newton(f, cplx{sigma, t}, cage, max_step, o);
            if (!z)
                ++out.not_converged;
            else if (!eff.contains(z->s))
                ++out.outside;
            else
                out.hits.push_back(*z);
        }
    });

    std::vector<FoundZero> all;
    for (auto& pr : per_row) {
        zs.stats.not_converged += pr.not_converged;
        zs.stats.outside += pr.outside;
        all.insert(all.end(), pr.hits.begin(), pr.hits.end());
    }
    zs.stats.seeds = rows * cols;
    zs.stats.converged = all.size() + zs.stats.outside;
    std::sort(all.begin(), all.end(), detail::by_t_then_sigma);

    // single-linkage clusters; two points are linked when closer than the
    // dedup radius or than a few Newton distances |Z/Z'|, which is what an
    // iterate stalled on the rounding floor next to a double zero looks like.
    // The member with the smallest residual represents each cluster.
    double max_reach = 0.0;
    for (const auto& z : all) max_reach = std::max(max_reach, z.reach);
    const double window = o.dedup_radius + kReachLink * max_reach;
    std::vector<std::size_t> parent(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) parent[i] = i;
    auto root = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size() && all[j].s.imag() - all[i].s.imag() < window; ++j) {
            const double d = std::abs(all[i].s - all[j].s);
            if (d < o.dedup_radius || d < kReachLink * std::max(all[i].reach, all[j].reach)) {
                const std::size_t a = root(i), c = root(j);
                if (a != c) parent[std::max(a, c)] = std::min(a, c);
            }
        }
    std::vector<std::size_t> best(all.size(), all.size());
    std::vector<double> extent(all.size(), 0.0);
    for (std::size_t i = 0; i < all.size(); ++i) {
        const std::size_t r = root(i);
        if (best[r] == all.size() || all[i].residual < all[best[r]].residual) best[r] = i;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        const std::size_t r = root(i);
        extent[r] = std::max(extent[r], std::abs(all[i].s - all[best[r]].s));
    }
    std::vector<FoundZero> kept;
    std::vector<double> disk;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (best[i] != all.size()) {
            kept.push_back(all[best[i]]);
            disk.push_back(std::max(o.dedup_radius, 2.0 * extent[i]));
        }
    zs.stats.duplicates = all.size() - kept.size();
    {
        std::vector<std::size_t> order(kept.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return detail::by_t_then_sigma(kept[x], kept[y]); });
        std::vector<FoundZero> k2;
        std::vector<double> d2;
        for (auto i : order) {
            k2.push_back(kept[i]);
            d2.push_back(disk[i]);
        }
        kept.swap(k2);
        disk.swap(d2);
    }

    if (o.multiplicities) {
        double freq = 0.0;
        if constexpr (requires { f.max_length(); }) freq = f.max_length();
        parallel_for(kept.size(), o.threads, [&](std::size_t i) {
            auto& z = kept[i];
            const auto k = zeros_in_disk(f, z.s, disk[i], freq);
            z.multiplicity = k ? static_cast<int>(std::max(1L, *k)) : 1;
        });
    }
    zs.zeros = std::move(kept);
    return zs;
}

inline WindingResult winding_count(const CoefficientTable& table, int n, const Rect& rect, const WindingOptions& o = {}) {
    const ZetaSeries f(table, n);
    WindingOptions oo = o;
    if (oo.perturb <= 0.0) oo.perturb = 0.5 * default_dt(table.params.b);
    return winding_count(f, rect, f.max_length(), oo);
}

// Zeros in r counted with multiplicity.
inline long count_inside(const ZeroSet& zs, const Rect& r) {
    long k = 0;
    for (const auto& z : zs.zeros)
        if (r.contains(z.s)) k += z.multiplicity;
    return k;
}

// Shrinks r until no stored zero (with its multiplicity box) comes close to
// an edge, so that clusters are never split by the contour.
inline Rect clear_of_zeros(const ZeroSet& zs, Rect r, double gap) {
    for (int pass = 0; pass < 64; ++pass) {
        bool moved = false;
        for (const auto& z : zs.zeros) {
            const double x = z.s.real(), y = z.s.imag();
            const bool in_t = y > r.t_min - gap && y < r.t_max + gap;
            const bool in_x = x > r.sigma_min - gap && x < r.sigma_max + gap;
            if (in_t && std::abs(x - r.sigma_min) < gap) { r.sigma_min = x + gap; moved = true; }
            if (in_t && std::abs(x - r.sigma_max) < gap) { r.sigma_max = x - gap; moved = true; }
            if (in_x && std::abs(y - r.t_min) < gap) { r.t_min = y + gap; moved = true; }
            if (in_x && std::abs(y - r.t_max) < gap) { r.t_max = y - gap; moved = true; }
        }
        if (!moved) break;
    }
    return r;
}

// Argument principle count over the searched rectangle against the number
// of zeros found there, both with multiplicity.
template <AnalyticFunction F>
Audit audit_zero_set(const F& f, const ZeroSet& zs, double max_frequency, double perturb) {
    const Rect r = clear_of_zeros(zs, zs.rect, zs.dedup_radius);
    if (!r.valid()) return Audit{0, 0, r};
    WindingOptions wo;
    wo.perturb = std::min(perturb, 0.25 * (r.sigma_max - r.sigma_min));
    const auto w = winding_count(f, r, max_frequency, wo);
    return Audit{w.count, count_inside(zs, w.rect), w.rect};
}

inline ZeroSet find_zeros_rect(const CoefficientTable& table, int n, const Rect& rect, const SearchOptions& opts = {}) {
    const ZetaSeries f(table, n);
    ZeroSet zs = find_zeros(f, rect, opts, table.params.b);
    zs.n_used = n;
    if (opts.audit && zs.rect.valid())
        zs.audit = audit_zero_set(f, zs, f.max_length(), 0.5 * (opts.dt > 0.0 ? opts.dt : default_dt(table.params.b)));
    return zs;
}

inline ZeroSet find_zeros_rect(const CoefficientTable& table, int n, const Rect& rect, double grid_step, double tol) {
    SearchOptions o;
    o.dt = grid_step;
    o.residual_tol = tol;
    return find_zeros_rect(table, n, rect, o);
}

// Zero of largest real part in rect, if any.
inline std::optional<FoundZero> rightmost_zero(const ZeroSet& zs) {
    if (zs.zeros.empty()) return std::nullopt;
    return *std::max_element(zs.zeros.begin(), zs.zeros.end(),
                             [](const FoundZero& a, const FoundZero& b) { return a.s.real() < b.s.real(); });
}

}  // namespace selzeta
