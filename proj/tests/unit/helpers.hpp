#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <random>
#include <vector>

#include <selzeta/selzeta.hpp>

namespace testing_util {

inline selzeta::Word word(std::initializer_list<int> w) {
    selzeta::Word out;
    for (int s : w) out.push_back(static_cast<selzeta::Symbol>(s));
    return out;
}

inline std::vector<int> ints(const selzeta::Word& w) { return {w.begin(), w.end()}; }

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline double rel_err(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

// fixed-seed points s with Re s in [lo_re, hi_re] and Im s in [lo_im, hi_im]
inline std::vector<std::complex<double>> random_points(std::size_t n, unsigned seed, double lo_re, double hi_re,
                                                       double lo_im, double hi_im) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(lo_re, hi_re), im(lo_im, hi_im);
    std::vector<std::complex<double>> out;
    for (std::size_t k = 0; k < n; ++k) out.emplace_back(re(rng), im(rng));
    return out;
}

}  // namespace testing_util
