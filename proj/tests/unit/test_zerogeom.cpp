#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"

using namespace selzeta;

namespace {

double brute_hausdorff(const std::vector<cplx>& A, const std::vector<cplx>& B) {
    auto dir = [](const std::vector<cplx>& X, const std::vector<cplx>& Y) {
        double worst = 0.0;
        for (const cplx& x : X) {
            double best = 1e300;
            for (const cplx& y : Y) best = std::min(best, std::abs(x - y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(dir(A, B), dir(B, A));
}

}  // namespace

TEST(Curves, SpecialValues) {
    EXPECT_NEAR(*curve_sigma(2, 0.0), std::numbers::ln2, 1e-15);
    EXPECT_NEAR(*curve_sigma(1, std::numbers::pi), std::numbers::ln2, 1e-15);
    for (int j = 1; j <= 4; ++j) EXPECT_NEAR(*curve_sigma(j, 0.5 * std::numbers::pi), 0.5 * std::numbers::ln2, 1e-12) << j;
    EXPECT_FALSE(curve_sigma(1, 0.0).has_value());
    EXPECT_FALSE(curve_sigma(2, std::numbers::pi).has_value());
    EXPECT_EQ(CurveFamily{}.clipped(1, 0.0), kCurveClip);
    EXPECT_EQ(CurveFamily{}.clipped(1, 1e-200), kCurveClip);
    EXPECT_THROW(curve_sigma(0, 1.0), DomainError);
    EXPECT_THROW(curve_sigma(5, 1.0), DomainError);
}

TEST(Curves, CommonPoints) {
    const auto pts = CurveFamily{}.intersections(-4.0, 10.0);
    ASSERT_EQ(pts.size(), 4u);
    for (const cplx& p : pts)
        for (int j = 1; j <= 4; ++j) EXPECT_NEAR(*curve_sigma(j, p.imag()), p.real(), 1e-12);
}

TEST(Curves, EvenAndPeriodic) {
    for (int j = 1; j <= 4; ++j)
        for (double t = 0.013; t < 7.0; t += 0.1) {
            const double s = CurveFamily{}.clipped(j, t);
            EXPECT_NEAR(CurveFamily{}.clipped(j, -t), s, 1e-12);
            EXPECT_NEAR(CurveFamily{}.clipped(j, t + 2.0 * std::numbers::pi), s, 1e-12);
        }
}

TEST(Curves, ModulusRoundTripAndDeterminant) {
    for (double t = 0.05; t < 6.2; t += 0.21) {
        const auto mu = eigenvalues_mu(std::polar(1.0, t));
        double prod = 1.0;
        for (int j = 1; j <= 4; ++j) {
            const double s = *curve_sigma(j, t);
            EXPECT_NEAR(std::exp(2.0 * s), std::abs(mu[static_cast<std::size_t>(j - 1)]), 1e-12);
            prod *= j <= 2 ? std::exp(2.0 * s) : std::exp(4.0 * s);
        }
        EXPECT_NEAR(prod, std::abs(build_B(std::polar(1.0, t)).determinant()), 1e-10);
    }
}

TEST(Rescale, Examples) {
    const double b = 6.0;
    const auto r = rescale_zeros(std::vector<cplx>{{0.1155, 0.0}, {0.05, std::numbers::pi * std::exp(b)}}, b);
    EXPECT_NEAR(r[0].real(), 0.1155 * b, 1e-15);
    EXPECT_EQ(r[0].imag(), 0.0);
    EXPECT_NEAR(r[1].real(), 0.3, 1e-15);
    EXPECT_NEAR(r[1].imag(), std::numbers::pi, 1e-14);
    EXPECT_TRUE(rescale_zeros(std::vector<cplx>{}, b).empty());
    ZeroSet zs;
    zs.b = 5.0;
    EXPECT_THROW(rescale_zeros(zs, b), DomainError);
}

TEST(Hausdorff, Basics) {
    const std::vector<cplx> A{{0.0, 0.0}, {1.0, 1.0}};
    EXPECT_EQ(hausdorff_distance(A, A), 0.0);
    EXPECT_EQ(hausdorff_distance({{0.0, 0.0}}, {{3.0, 4.0}}), 5.0);
    EXPECT_THROW(hausdorff_distance({}, A), DomainError);
    EXPECT_THROW(hausdorff_distance(A, {}), DomainError);
}

TEST(Hausdorff, MetricOnRandomSets) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_int_distribution<int> n(1, 200);
    auto make = [&] {
        std::vector<cplx> v(static_cast<std::size_t>(n(rng)));
        for (auto& z : v) z = {u(rng), u(rng)};
        return v;
    };
    for (int k = 0; k < 20; ++k) {
        const auto A = make(), B = make(), C = make();
        const double ab = hausdorff_distance(A, B), ba = hausdorff_distance(B, A);
        EXPECT_EQ(ab, ba);
        EXPECT_DOUBLE_EQ(ab, brute_hausdorff(A, B));
        EXPECT_LE(hausdorff_distance(A, C), ab + hausdorff_distance(B, C) + 1e-15);
        EXPECT_EQ(hausdorff_distance(A, B, 1), hausdorff_distance(A, B, 4));
    }
}

TEST(CurveComparison, PointsOnTheCurvesAreClose) {
    std::vector<cplx> on;
    for (double t = 0.0; t <= 4.0 * std::numbers::pi; t += 0.01)
        for (int j = 1; j <= 4; ++j) {
            const auto s = curve_sigma(j, t);
            if (s && *s >= 0.0 && *s <= std::numbers::ln2) on.emplace_back(*s, t);
        }
    const auto cc = compare_with_curves(on, 4.0 * std::numbers::pi);
    EXPECT_LE(cc.hausdorff.a_to_b, cc.discretization + 1e-12);
    EXPECT_GT(cc.discretization, 0.0);
    // a stray point far from every curve dominates
    on.emplace_back(0.05, std::numbers::pi / 2.0);
    EXPECT_GT(compare_with_curves(on, 4.0 * std::numbers::pi).hausdorff.distance, 0.2);
    EXPECT_THROW(compare_with_curves(on, 0.1), DomainError);
}

TEST(AlmostPeriod, IdentityAndPerturbedPeriodicSets) {
    ZeroSet zs;
    zs.rect = {0.0, 0.2, 0.0, 40.0};
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> jitter(-0.02, 0.02);
    for (double t = 0.5; t < 40.0; t += 1.0)
        for (double x : {0.05, 0.12}) zs.zeros.push_back(FoundZero{cplx{x + jitter(rng), t + jitter(rng)}});
    const auto same = almost_period_test(zs, 0.0, 0.0);
    EXPECT_TRUE(same.pass);
    EXPECT_EQ(same.max_distance, 0.0);
    const auto shifted = almost_period_test(zs, 10.0, 0.1);
    EXPECT_TRUE(shifted.pass);
    EXPECT_LE(shifted.max_distance, 0.1);
    EXPECT_EQ(shifted.unmatched, 0u);
    zs.zeros.erase(zs.zeros.begin() + 3);
    EXPECT_FALSE(almost_period_test(zs, 10.0, 0.1).pass);
    EXPECT_THROW(almost_period_test(zs, 25.0, 0.1), DomainError);
}

TEST(Lattice, ExactLatticeAndSingleZero) {
    const double b = 6.0, kappa = 1.05, delta = std::numbers::ln2 / b;
    std::vector<cplx> zeros;
    for (const cplx& p : CurveFamily{}.lattice(0.0, kappa * b + 2.0)) zeros.push_back(p / b);
    EXPECT_NEAR(lattice_compare(zeros, b, delta, kappa).hausdorff.distance, 0.0, 1e-14);
    const double d = 0.11;
    const auto one = lattice_compare(std::vector<cplx>{{d, 0.0}}, b, d, kappa);
    EXPECT_NEAR(one.hausdorff.a_to_b, std::abs(d * b - std::numbers::ln2), 1e-14);
    ZeroSet zs;
    zs.b = 5.0;
    EXPECT_THROW(lattice_compare(zs, b, delta, kappa), DomainError);
}
