#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "hyperbolic.hpp"
#include "numeric.hpp"
#include "symdyn.hpp"

namespace selzeta {

inline constexpr int kDefaultNMax = 14;

// Every class of cyclic reflection words corresponds to two conjugacy
// classes of the orientation preserving subgroup, so each fixed point of
// the shift enters the trace sums twice.
inline constexpr double kOrientationMultiplicity = 2.0;

// Relative gap below which two lengths of different symmetry classes are
// reported as one entry.
inline constexpr double kLengthMergeTolerance = 1e-12;

struct SpectrumEntry {
    double length = 0.0;
    std::int64_t count = 0;  // signed for twisted spectra
};

struct LengthSpectrum {
    int m = 0;
    double b = 0.0;
    std::vector<SpectrumEntry> entries;  // ascending length

    std::int64_t total_count() const {
        std::int64_t t = 0;
        for (const auto& e : entries) t += e.count;
        return t;
    }
};

// Builds a spectrum where the fixed points of one rotation orbit contribute
// weight(orbit) in total. Lengths are computed once per symmetry class.
inline LengthSpectrum weighted_spectrum(int m, const SurfaceParams& sp,
                                        const std::function<std::int64_t(const OrbitClass&)>& weight,
                                        int max_m = kDefaultMaxWordLength) {
    const auto orbits = enumerate_fixed_points(m, max_m);
    std::map<Word, double> class_length;
    std::vector<SpectrumEntry> raw;
    raw.reserve(orbits.size());
    for (const auto& o : orbits) {
        Word key = symmetry_key(o.rep);
        auto it = class_length.find(key);
        if (it == class_length.end()) it = class_length.emplace(std::move(key), geodesic_length(o, sp)).first;
        raw.push_back({it->second, weight(o)});
    }
    std::stable_sort(raw.begin(), raw.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.length < b.length; });

    LengthSpectrum out;
    out.m = m;
    out.b = sp.b;
    for (const auto& e : raw) {
        if (!out.entries.empty()) {
            auto& last = out.entries.back();
            if (e.length - last.length <= kLengthMergeTolerance * last.length) {
                last.count += e.count;
                continue;
            }
        }
        out.entries.push_back(e);
    }
    std::erase_if(out.entries, [](const SpectrumEntry& e) { return e.count == 0; });
    return out;
}

inline LengthSpectrum length_spectrum(int m, const SurfaceParams& sp, int max_m = kDefaultMaxWordLength) {
    return weighted_spectrum(m, sp, [](const OrbitClass& o) { return std::int64_t{o.orbit_size()}; }, max_m);
}

struct CoefficientTable {
    SurfaceParams params;
    int n_max = 0;
    std::vector<LengthSpectrum> spectra;  // spectra[k] has m = 2k + 2

    bool complete() const {
        if (n_max < 0 || n_max % 2 != 0) return false;
        if (spectra.size() != static_cast<std::size_t>(n_max / 2)) return false;
        for (std::size_t k = 0; k < spectra.size(); ++k)
            if (spectra[k].m != static_cast<int>(2 * k + 2) || spectra[k].b != params.b) return false;
        return true;
    }

    const LengthSpectrum& spectrum(int m) const {
        if (m < 2 || m % 2 != 0 || m > n_max) throw DomainError("no spectrum for word length " + std::to_string(m));
        return spectra[static_cast<std::size_t>(m / 2 - 1)];
    }
};

inline void check_n_max(int n_max, int max_m) {
    if (n_max < 0 || n_max % 2 != 0) throw DomainError("n_max must be even and non-negative");
    if (n_max > max_m) throw ResourceError("n_max " + std::to_string(n_max) + " exceeds ceiling " + std::to_string(max_m));
}

inline CoefficientTable make_coefficient_table(const SurfaceParams& sp, int n_max = kDefaultNMax, unsigned threads = 0,
                                               int max_m = kDefaultMaxWordLength) {
    check_n_max(n_max, max_m);
    CoefficientTable t;
    t.params = sp;
    t.n_max = n_max;
    t.spectra.resize(static_cast<std::size_t>(n_max / 2));
    parallel_for(t.spectra.size(), threads, [&](std::size_t k) {
        t.spectra[k] = length_spectrum(static_cast<int>(2 * k + 2), sp, max_m);
    });
    return t;
}

// sum over fixed points of e^{-s l}/(1 - e^{-l}), orientation multiplicity included
inline cplx b_m(cplx s, const LengthSpectrum& spectrum) {
    CompensatedComplexSum acc;
    for (const auto& e : spectrum.entries)
        acc.add(kOrientationMultiplicity * static_cast<double>(e.count) * std::exp(-s * e.length) / -std::expm1(-e.length));
    return acc.value();
}

inline cplx b_m(cplx s, int m, const CoefficientTable& table) {
    if (m < 1) throw DomainError("b_m: m must be positive");
    if (m % 2 != 0) return 0.0;
    return b_m(s, table.spectrum(m));
}

// a_0..a_N from b_1..b_N (b[0] unused) by the Newton identity recursion
inline std::vector<cplx> a_from_b(const std::vector<cplx>& b) {
    const std::size_t N = b.size() - 1;
    std::vector<cplx> a(N + 1, cplx{0.0, 0.0});
    a[0] = 1.0;
    for (std::size_t n = 2; n <= N; n += 2) {
        CompensatedComplexSum acc;
        for (std::size_t j = 0; j + 2 <= n; j += 2) acc.add(a[j] * b[n - j]);
        a[n] = -acc.value() / static_cast<double>(n);
    }
    return a;
}

inline std::vector<cplx> a_coefficients(cplx s, const CoefficientTable& table) {
    if (!table.complete()) throw StateError("a_coefficients: coefficient table is incomplete");
    std::vector<cplx> b(static_cast<std::size_t>(table.n_max) + 1, cplx{0.0, 0.0});
    for (int m = 2; m <= table.n_max; m += 2) b[m] = b_m(s, table.spectrum(m));
    return a_from_b(b);
}

// Z_n(s) = 1 + a_2 + ... + a_n together with its derivative. Built once from
// a table and evaluated many times.
class ZetaSeries {
public:
    ZetaSeries() = default;

    ZetaSeries(const CoefficientTable& table, int n) : n_(n), b_(table.params.b) {
        if (!table.complete()) throw StateError("ZetaSeries: coefficient table is incomplete");
        if (n < 0 || n % 2 != 0) throw DomainError("ZetaSeries: n must be even and non-negative");
        if (n > table.n_max) throw DomainError("ZetaSeries: n exceeds the table's n_max");
        terms_.resize(static_cast<std::size_t>(n / 2));
        for (int m = 2; m <= n; m += 2) {
            auto& row = terms_[static_cast<std::size_t>(m / 2 - 1)];
            for (const auto& e : table.spectrum(m).entries)
                row.push_back({e.length, kOrientationMultiplicity * static_cast<double>(e.count) / -std::expm1(-e.length)});
        }
    }

    int n() const { return n_; }
    double b() const { return b_; }

    double max_length() const {
        double mx = 0.0;
        for (const auto& row : terms_)
            for (const auto& t : row) mx = std::max(mx, t.length);
        return mx;
    }

    cplx operator()(cplx s) const { return eval(s, 0)[0]; }

    std::pair<cplx, cplx> value_and_derivative(cplx s) const {
        const auto r = eval(s, 1);
        return {r[0], r[1]};
    }

    // Z, Z' and Z''
    std::array<cplx, 3> value_and_derivatives2(cplx s) const { return eval(s, 2); }

    // First-order estimate of the rounding error in Z(s). Each b_m carries
    // the error of its terms, amplified by |s| l through the phase, and
    // enters Z with weight dZ/db_m = -(a_0 + ... + a_{n-m})/m.
    double rounding_floor(cplx s) const {
        if (n_ == 0) return 0.0;
        constexpr std::size_t N = kDefaultMaxWordLength + 1;
        const std::size_t K = terms_.size();
        std::array<cplx, N> b{}, a{};
        std::array<double, N> err{};
        const double abs_s = std::abs(s);
        for (std::size_t k = 0; k < K; ++k) {
            CompensatedComplexSum acc;
            for (const auto& t : terms_[k]) {
                const double mag = t.weight * std::exp(-s.real() * t.length);
                acc.add(mag * std::exp(cplx{0.0, -s.imag() * t.length}));
                err[2 * k + 2] += mag * (1.0 + abs_s * t.length);
            }
            b[2 * k + 2] = acc.value();
        }
        a[0] = 1.0;
        for (std::size_t n = 2; n <= 2 * K; n += 2) {
            cplx acc{0.0};
            for (std::size_t j = 0; j + 2 <= n; j += 2) acc += a[j] * b[n - j];
            a[n] = -acc / static_cast<double>(n);
        }
        double floor = 0.0;
        cplx partial{0.0};
        for (std::size_t m = 2 * K; m >= 2; m -= 2) {
            partial += a[2 * K - m];
            floor += std::abs(partial) / static_cast<double>(m) * err[m];
        }
        return std::numeric_limits<double>::epsilon() * floor;
    }

private:
    struct Term {
        double length;
        double weight;
    };

    // Forward-mode propagation of b_m and its first `order` derivatives
    // through the a_n recursion.
    std::array<cplx, 3> eval(cplx s, int order) const {
        if (n_ == 0) return {cplx{1.0}, cplx{0.0}, cplx{0.0}};
        constexpr std::size_t N = kDefaultMaxWordLength + 1;
        const std::size_t K = terms_.size();
        std::array<std::array<cplx, N>, 3> b{}, a{};
        for (std::size_t k = 0; k < K; ++k) {
            std::array<CompensatedComplexSum, 3> acc;
            for (const auto& t : terms_[k]) {
                cplx e = t.weight * std::exp(-s * t.length);
                acc[0].add(e);
                for (int d = 1; d <= order; ++d) {
                    e *= -t.length;
                    acc[static_cast<std::size_t>(d)].add(e);
                }
            }
            for (int d = 0; d <= order; ++d) b[static_cast<std::size_t>(d)][2 * k + 2] = acc[static_cast<std::size_t>(d)].value();
        }
        a[0][0] = 1.0;
        std::array<CompensatedComplexSum, 3> z;
        z[0].add(a[0][0]);
        for (std::size_t n = 2; n <= 2 * K; n += 2) {
            std::array<CompensatedComplexSum, 3> acc;
            for (std::size_t j = 0; j + 2 <= n; j += 2) {
                const std::size_t m = n - j;
                acc[0].add(a[0][j] * b[0][m]);
                if (order >= 1) acc[1].add(a[1][j] * b[0][m] + a[0][j] * b[1][m]);
                if (order >= 2) acc[2].add(a[2][j] * b[0][m] + 2.0 * a[1][j] * b[1][m] + a[0][j] * b[2][m]);
            }
            for (int d = 0; d <= order; ++d) {
                const auto ud = static_cast<std::size_t>(d);
                a[ud][n] = -acc[ud].value() / static_cast<double>(n);
                z[ud].add(a[ud][n]);
            }
        }
        return {z[0].value(), z[1].value(), z[2].value()};
    }

    int n_ = 0;
    double b_ = 0.0;
    std::vector<std::vector<Term>> terms_;
};

inline cplx evaluate_Zn(cplx s, int n, const CoefficientTable& table) { return ZetaSeries(table, n)(s); }

struct TruncationBound {
    double eta = 0.0;
    double k0 = 0.0;
    double k1 = 0.0;  // exponent rate (2 - kappa)(1 - k2)/6
    double inequality_lhs = 0.0;
    double inequality_rhs = 0.0;
    bool inequality_holds = false;
};

inline constexpr double kBoundMinB = 20.0;
inline constexpr int kBoundMinN = 14;

// Tail bound sum_{k >= n} |a_k(s)| <= eta on the rectangle |Im s| <= T.
// Throws BoundNotProven outside the parameter region where the estimate is
// derived. Inside it, the sufficient inequality on (b, n) is evaluated and
// reported; it is not guaranteed for every point of that region.
inline TruncationBound truncation_bound(double b, int n, double T, double kappa = kDefaultKappa, double k2 = 0.95) {
    if (!std::isfinite(b) || !std::isfinite(T) || !std::isfinite(kappa) || !std::isfinite(k2) || T < 0.0)
        throw DomainError("truncation_bound: non-finite or negative input");
    if (b < kBoundMinB || n < kBoundMinN || !(kappa > 1.0 && kappa < 2.0) || !(k2 >= 0.95 && k2 < 1.0))
        throw BoundNotProven("truncation bound not proven for b=" + format_double(b) + ", n=" + std::to_string(n) +
                             ", kappa=" + format_double(kappa) + ", k2=" + format_double(k2));
    TruncationBound r;
    const double q6 = b * (2.0 - kappa) * (1.0 - k2);  // 6q
    r.k0 = T * std::exp(-kappa * b);
    r.k1 = (2.0 - kappa) * (1.0 - k2) / 6.0;
    const double shift = 12.0 * r.k0 / q6;
    const double dn = static_cast<double>(n) - shift;
    r.eta = std::sqrt(6.0 * std::numbers::pi) / (2.0 * std::sqrt(q6)) * std::exp(24.0 * r.k0 * r.k0 / q6) *
            std::exp(-q6 / 6.0 * dn * dn);
    const double nn = static_cast<double>(n);
    r.inequality_lhs = nn * (std::log(4.0) + b * (kappa + 4.0) / 3.0 + b * (2.0 - kappa) / 6.0) +
                       nn * (nn + 1.0) / 2.0 * std::numbers::ln2 + nn * std::log(nn) / 2.0;
    r.inequality_rhs = b * nn * nn * (2.0 - kappa) * k2 / 6.0;
    r.inequality_holds = r.inequality_lhs < r.inequality_rhs;
    return r;
}

}  // namespace selzeta
