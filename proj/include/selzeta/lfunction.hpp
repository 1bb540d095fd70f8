#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "symdyn.hpp"
#include "zetacore.hpp"

namespace selzeta {

// Z/2 character w -> (-1)^(occurrences of the generator in w); generator 0
// is the trivial character.
struct Character {
    Symbol generator = 0;

    static Character trivial() { return {}; }

    static Character from_generator(int g) {
        if (g < 0 || g > 3) throw DomainError("Character: generator must be 0 (trivial), 1, 2 or 3");
        return Character{static_cast<Symbol>(g)};
    }

    bool is_trivial() const { return generator == 0; }

    int value(std::span<const Symbol> w) const {
        if (is_trivial()) return 1;
        const auto k = std::count(w.begin(), w.end(), generator);
        return k % 2 == 0 ? 1 : -1;
    }
};

// Length spectrum where each fixed point carries the sign chi(word). All
// rotations of a word have the same sign, so an orbit weighs p * chi(rep).
inline LengthSpectrum twisted_spectrum(int m, const SurfaceParams& sp, Character chi, int max_m = kDefaultMaxWordLength) {
    return weighted_spectrum(
        m, sp, [chi](const OrbitClass& o) { return std::int64_t{o.orbit_size()} * chi.value(o.rep); }, max_m);
}

struct TwistedTable {
    Character chi;
    CoefficientTable table;
};

inline TwistedTable make_twisted_table(const SurfaceParams& sp, Character chi, int n_max = kDefaultNMax,
                                       unsigned threads = 0, int max_m = kDefaultMaxWordLength) {
    check_n_max(n_max, max_m);
    TwistedTable t;
    t.chi = chi;
    t.table.params = sp;
    t.table.n_max = n_max;
    t.table.spectra.resize(static_cast<std::size_t>(n_max / 2));
    parallel_for(t.table.spectra.size(), threads, [&](std::size_t k) {
        t.table.spectra[k] = twisted_spectrum(static_cast<int>(2 * k + 2), sp, chi, max_m);
    });
    return t;
}

// Partial sum 1 + a_2^chi + ... + a_n^chi.
inline cplx evaluate_L(cplx s, int n, const TwistedTable& t) { return ZetaSeries(t.table, n)(s); }

// Coefficients a_0..a_n of the product of two series (odd slots zero).
inline std::vector<cplx> convolve_coefficients(const std::vector<cplx>& a, const std::vector<cplx>& c, int n) {
    if (n < 0 || a.size() <= static_cast<std::size_t>(n) || c.size() <= static_cast<std::size_t>(n))
        throw DomainError("convolve_coefficients: series shorter than the requested order");
    std::vector<cplx> out(static_cast<std::size_t>(n) + 1, cplx{0.0});
    for (int k = 0; k <= n; ++k) {
        CompensatedComplexSum acc;
        for (int j = 0; j <= k; ++j) acc.add(a[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)]);
        out[static_cast<std::size_t>(k)] = acc.value();
    }
    return out;
}

struct MultiplicativityReport {
    int n = 0;
    double max_error = 0.0;  // relative to max(1, |coefficient|)
};

// Coefficients of Z * L^chi against the recursion run on b_m + b_m^chi,
// the series of the sum of the two characters.
inline MultiplicativityReport check_multiplicativity(cplx s, int n, const CoefficientTable& plain, const TwistedTable& twisted) {
    if (n < 0 || n % 2 != 0) throw DomainError("check_multiplicativity: n must be even and non-negative");
    if (n > plain.n_max || n > twisted.table.n_max) throw DomainError("check_multiplicativity: n exceeds the tables");
    std::vector<cplx> b1(static_cast<std::size_t>(n) + 1, cplx{0.0}), b2 = b1, bsum = b1;
    for (int m = 2; m <= n; m += 2) {
        b1[static_cast<std::size_t>(m)] = b_m(s, plain.spectrum(m));
        b2[static_cast<std::size_t>(m)] = b_m(s, twisted.table.spectrum(m));
        bsum[static_cast<std::size_t>(m)] = b1[static_cast<std::size_t>(m)] + b2[static_cast<std::size_t>(m)];
    }
    const auto prod = convolve_coefficients(a_from_b(b1), a_from_b(b2), n);
    const auto direct = a_from_b(bsum);
    MultiplicativityReport r;
    r.n = n;
    for (int k = 0; k <= n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        r.max_error = std::max(r.max_error, std::abs(prod[i] - direct[i]) / std::max(1.0, std::abs(direct[i])));
    }
    return r;
}

}  // namespace selzeta
