#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "numeric.hpp"
#include "symdyn.hpp"

namespace selzeta {

using TransferMatrix6 = Eigen::Matrix<cplx, 6, 6>;

// State k is the ordered pair kStates[k] of consecutive reflections.
inline constexpr std::array<std::array<Symbol, 2>, 6> kStates{{{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}};

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> c) : coeffs_(std::move(c)) { trim(); }

    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    int degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }

    template <class T>
    T operator()(T x) const {
        T acc{0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(static_cast<double>(*it));
        return acc;
    }

    friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
        std::vector<std::int64_t> r(std::max(p.coeffs_.size(), q.coeffs_.size()), 0);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = p[k] + q[k];
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<std::int64_t> r(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
        return IntPolynomial(std::move(r));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<std::int64_t> coeffs_;
};

// Main term of the length of the hexagon segment crossed between two
// consecutive reflections, for the window (x1, x2, x3).
inline double segment_length_r2(const std::array<Symbol, 3>& w, double b) {
    for (Symbol s : w)
        if (s < 1 || s > 3) throw DomainError("segment_length_r2: symbols must be 1, 2 or 3");
    if (w[0] == w[1] || w[1] == w[2]) throw DomainError("segment_length_r2: inadmissible triple");
    return w[0] == w[2] ? b : b + std::exp(-b);
}

// The 6x6 matrix with entry 1 for a backtracking step (a,b)->(b,a), z for
// (a,b)->(b,c) with c != a, and 0 when states do not chain.
template <class Entry, class Z>
Eigen::Matrix<Entry, 6, 6> step_matrix(const Z& z, const Entry& one, const Entry& zero) {
    Eigen::Matrix<Entry, 6, 6> m;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const auto& from = kStates[i];
            const auto& to = kStates[j];
            if (from[1] != to[0])
                m(i, j) = zero;
            else
                m(i, j) = to[1] == from[0] ? one : Entry(z);
        }
    return m;
}

inline TransferMatrix6 build_C(cplx z) { return step_matrix<cplx>(z, cplx{1.0}, cplx{0.0}); }

inline TransferMatrix6 build_B(cplx z) {
    const TransferMatrix6 c = build_C(z);
    return c * c;
}

// Distinct eigenvalues of B(z); mu_3 and mu_4 have multiplicity two.
inline std::array<cplx, 4> eigenvalues_mu(cplx z) {
    const cplx z2 = z * z;
    const cplx root = std::sqrt(cplx{4.0} - 3.0 * z2);
    return {(z - 1.0) * (z - 1.0), (z + 1.0) * (z + 1.0), 1.0 - 0.5 * z2 + 0.5 * z * root, 1.0 - 0.5 * z2 - 0.5 * z * root};
}

inline cplx det_I_minus_xB(cplx x, cplx y) {
    const TransferMatrix6 m = TransferMatrix6::Identity() - x * build_B(y);
    return m.partialPivLu().determinant();
}

// Geometric approximation of Z at s = sigma/b + i t e^b.
inline cplx det_approx(double sigma, double t, double b) {
    if (!(b > 0.0)) throw DomainError("det_approx: b must be positive");
    const double phase = -2.0 * t * b * std::exp(b);
    const cplx x = std::exp(-2.0 * sigma) * std::polar(1.0, phase);
    const cplx y = std::polar(1.0, -t);
    return det_I_minus_xB(x, y);
}

// det(I - x B(y)) = sum_k x^k P_k(y), each P_k an integer polynomial of
// degree at most 12. Recovered by a two-dimensional discrete Fourier
// transform on roots of unity, followed by an integrality check.
inline std::array<IntPolynomial, 7> extract_polynomials() {
    constexpr int NX = 7, NY = 13;
    std::array<std::array<cplx, NY>, NX> values;
    for (int i = 0; i < NX; ++i)
        for (int j = 0; j < NY; ++j)
            values[i][j] = det_I_minus_xB(std::polar(1.0, 2.0 * std::numbers::pi * i / NX),
                                          std::polar(1.0, 2.0 * std::numbers::pi * j / NY));
    std::array<IntPolynomial, 7> out;
    for (int k = 0; k < NX; ++k) {
        std::vector<std::int64_t> coeffs(NY);
        for (int l = 0; l < NY; ++l) {
            cplx acc{0.0};
            for (int i = 0; i < NX; ++i)
                for (int j = 0; j < NY; ++j)
                    acc += values[i][j] * std::polar(1.0, -2.0 * std::numbers::pi * (static_cast<double>(i * k) / NX +
                                                                                   static_cast<double>(j * l) / NY));
            acc /= static_cast<double>(NX * NY);
            const double r = std::round(acc.real());
            if (std::abs(acc.real() - r) > 1e-6 || std::abs(acc.imag()) > 1e-6)
                throw NumericalError("extract_polynomials: non-integral coefficient");
            coeffs[static_cast<std::size_t>(l)] = static_cast<std::int64_t>(r);
        }
        out[static_cast<std::size_t>(k)] = IntPolynomial(std::move(coeffs));
    }
    return out;
}

// tr C(z)^{2n}: coefficient of z^k counts fixed points of the shift power
// 2n with c-weight k. Exact polynomial matrix arithmetic.
inline IntPolynomial trace_poly_dk(int n) {
    if (n < 1 || n > 8) throw DomainError("trace_poly_dk: n must lie in 1..8");
    using PolyMat = std::array<std::array<IntPolynomial, 6>, 6>;
    PolyMat c;
    const IntPolynomial one({1}), z({0, 1});
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (kStates[i][1] != kStates[j][0]) continue;
            c[i][j] = kStates[j][1] == kStates[i][0] ? one : z;
        }
    auto mul = [](const PolyMat& a, const PolyMat& b) {
        PolyMat r;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                for (int k = 0; k < 6; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
        return r;
    };
    PolyMat p = c;
    for (int k = 1; k < 2 * n; ++k) p = mul(p, c);
    IntPolynomial tr;
    for (int i = 0; i < 6; ++i) tr = tr + p[i][i];
    return tr;
}

}  // namespace selzeta
