#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "oracles/oracles.hpp"

using namespace selzeta;
using testing_util::word;

TEST(Surface, AngleIdentity) {
    for (double b : {0.5, 2.0, 4.0, 10.0}) {
        const auto sp = make_surface(b);
        EXPECT_NEAR(std::sin(sp.theta) * 2.0 * std::cosh(0.5 * b), std::numbers::sqrt3, 1e-15) << "b=" << b;
    }
}

TEST(Surface, AngleAsymptotics) {
    for (double b : {10.0, 12.0}) {
        const double ratio = make_surface(b).theta / (std::numbers::sqrt3 * std::exp(-0.5 * b));
        EXPECT_LE(std::abs(ratio - 1.0), std::exp(-b)) << "b=" << b;
    }
}

TEST(Surface, EndpointsAreTangentsOfHalfAngles) {
    const auto sp = make_surface(3.0);
    for (int j = 1; j <= 3; ++j) {
        const double mid = std::numbers::pi * j / 3.0;
        double lo = std::tan(mid - 0.5 * sp.theta), hi = std::tan(mid + 0.5 * sp.theta);
        if (lo > hi) std::swap(lo, hi);
        EXPECT_NEAR(sp.left(j), lo, 1e-14);
        EXPECT_NEAR(sp.right(j), hi, 1e-14);
    }
}

TEST(Surface, FirstTwoRadiiEqualAndPairwiseDistancesEqualB) {
    for (double b : {2.0, 3.0, 5.0}) {
        const auto sp = make_surface(b);
        EXPECT_NEAR(sp.eps[0], sp.eps[1], 1e-14);
        EXPECT_NEAR(sp.c[0], -sp.c[1], 1e-14);
        // beta_2 < beta_3 < beta_1 along the real line
        EXPECT_NEAR(geodesic_distance(sp.left(2), sp.right(2), sp.left(1), sp.right(1)), b, 1e-12 * b);
        EXPECT_NEAR(geodesic_distance(sp.left(2), sp.right(2), sp.left(3), sp.right(3)), b, 1e-12 * b);
        EXPECT_NEAR(geodesic_distance(sp.left(3), sp.right(3), sp.left(1), sp.right(1)), b, 1e-12 * b);
    }
}

TEST(Surface, DisksDisjointAndRadiiPositive) {
    for (double b : {0.3, 1.0, 4.0, 12.0}) {
        const auto sp = make_surface(b);
        for (int i = 0; i < 3; ++i) {
            EXPECT_GT(sp.eps[i], 0.0);
            for (int j = i + 1; j < 3; ++j) EXPECT_GT(std::abs(sp.c[i] - sp.c[j]), sp.eps[i] + sp.eps[j]);
        }
    }
}

TEST(Surface, RejectsBadInput) {
    EXPECT_THROW(make_surface(0.0), DomainError);
    EXPECT_THROW(make_surface(-1.0), DomainError);
    EXPECT_THROW(make_surface(4.0, 1.0), DomainError);
    EXPECT_THROW(make_surface(4.0, 2.0), DomainError);
    EXPECT_NO_THROW(make_surface(4.0, 1.5));
}

TEST(HexagonSide, LeadingAsymptotics) {
    const double b = 6.0;
    EXPECT_LE(std::abs(hexagon_side(b) - 2.0 * std::exp(-0.5 * b)), 5.0 * std::exp(-1.5 * b));
}

TEST(HexagonSide, StrictlyDecreasing) {
    double prev = hexagon_side(1.0);
    for (double b = 1.05; b <= 20.0 + 1e-9; b += 0.05) {
        const double cur = hexagon_side(b);
        EXPECT_LT(cur, prev) << "b=" << b;
        prev = cur;
    }
}

TEST(HexagonSide, MatchesHighPrecision) {
    for (double b : {0.5, 2.0, 7.0, 15.0}) {
        const double ref = static_cast<double>(oracle::hexagon_side50(b));
        EXPECT_LE(testing_util::rel_err(hexagon_side(b), ref), 1e-14) << "b=" << b;
    }
    EXPECT_THROW(hexagon_side(0.0), DomainError);
}

TEST(GeodesicDistance, SymmetricConfigurationMatchesSearch) {
    const double d = geodesic_distance(-2.0, -1.0, 1.0, 2.0);
    EXPECT_NEAR(d, oracle::geodesic_distance_search(-2.0, -1.0, 1.0, 2.0), 1e-8);
    // tanh^2(d/2) = 4 * 2 / (3 * 3) in this configuration
    EXPECT_NEAR(std::tanh(0.5 * d) * std::tanh(0.5 * d), 8.0 / 9.0, 1e-14);
}

TEST(GeodesicDistance, RandomConfigurationsMatchSearch) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.1, 2.0);
    for (int k = 0; k < 5; ++k) {
        const double z1 = -u(rng), w1 = z1 + u(rng), w2 = w1 + u(rng), z2 = w2 + u(rng);
        EXPECT_NEAR(geodesic_distance(z1, w1, w2, z2), oracle::geodesic_distance_search(z1, w1, w2, z2), 1e-7);
    }
}

TEST(GeodesicDistance, ScaleAndTranslationInvariant) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.01, 3.0), lam(0.1, 10.0), sh(-5.0, 5.0);
    for (int k = 0; k < 100; ++k) {
        const double z1 = sh(rng), w1 = z1 + u(rng), w2 = w1 + u(rng), z2 = w2 + u(rng);
        const double d = geodesic_distance(z1, w1, w2, z2);
        const double l = lam(rng), t = sh(rng);
        EXPECT_NEAR(geodesic_distance(l * z1, l * w1, l * w2, l * z2), d, 1e-12 * std::max(1.0, d));
        EXPECT_NEAR(geodesic_distance(z1 + t, w1 + t, w2 + t, z2 + t), d, 1e-11 * std::max(1.0, d));
    }
}

TEST(GeodesicDistance, RejectsUnorderedPoints) {
    EXPECT_THROW(geodesic_distance(0.0, 2.0, 1.0, 3.0), DomainError);
    EXPECT_THROW(geodesic_distance(0.0, 1.0, 1.0, 3.0), DomainError);
}

TEST(GeodesicLength, ShortestWordIsTwiceB) {
    for (double b : {2.0, 4.0, 6.0, 8.0})
        EXPECT_LE(testing_util::rel_err(geodesic_length(word({1, 2}), make_surface(b)), 2.0 * b), 1e-12) << "b=" << b;
}

TEST(GeodesicLength, ClosedFormsAtLengthFourAndSix) {
    const double b = 4.0;
    const auto sp = make_surface(b);
    const double ch = std::cosh(b);
    EXPECT_LE(testing_util::rel_err(geodesic_length(word({1, 2, 3, 2}), sp), 2.0 * std::acosh(ch + 2.0 * ch * ch)), 1e-12);
    const double l6 = geodesic_length(word({1, 2, 3, 1, 2, 3}), sp);
    EXPECT_LE(testing_util::rel_err(l6, 2.0 * std::acosh(4.0 * ch * ch * ch + 6.0 * ch * ch - 1.0)), 1e-12);
    EXPECT_LE(std::abs(l6 - (6.0 * b + 6.0 * std::exp(-b))), 10.0 * std::exp(-2.0 * b));
}

TEST(GeodesicLength, EveryShortWordMatchesHighPrecision) {
    for (double b : {0.7, 3.0, 9.0}) {
        const auto sp = make_surface(b);
        const auto sf = oracle::surface50(b);
        for (int m = 2; m <= 8; m += 2)
            for (const auto& w : oracle::all_fixed_points(m)) {
                Word ww(w.begin(), w.end());
                const double ref = static_cast<double>(oracle::word_length50(w, sf));
                ASSERT_LE(testing_util::rel_err(geodesic_length(ww, sp), ref), 1e-12) << "b=" << b << " m=" << m;
            }
    }
}

TEST(GeodesicLength, RotationReversalAndRelabelling) {
    const auto sp = make_surface(3.5);
    for (const auto& w : oracle::all_fixed_points(8)) {
        Word ww(w.begin(), w.end());
        const double l = geodesic_length(ww, sp);
        Word rot = ww;
        for (std::size_t r = 1; r < rot.size(); ++r) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            ASSERT_LE(testing_util::rel_err(geodesic_length(rot, sp), l), 1e-13);
        }
        Word rev(ww.rbegin(), ww.rend());
        ASSERT_LE(testing_util::rel_err(geodesic_length(rev, sp), l), 1e-13);
        Word perm = ww;
        for (auto& s : perm) s = static_cast<Symbol>(s % 3 + 1);
        ASSERT_LE(testing_util::rel_err(geodesic_length(perm, sp), l), 1e-13);
    }
}

TEST(GeodesicLength, PowersScaleLinearly) {
    const auto sp = make_surface(2.5);
    const Word w = word({1, 2, 3, 2});
    const double l = geodesic_length(w, sp);
    Word p = w;
    for (int k = 2; k <= 4; ++k) {
        p.insert(p.end(), w.begin(), w.end());
        EXPECT_LE(testing_util::rel_err(geodesic_length(p, sp), k * l), 1e-12) << "k=" << k;
    }
}

TEST(GeodesicLength, LongWordsAtLargeBStayFinite) {
    const auto sp = make_surface(10.0);
    const Word w = word({1, 2, 3, 1, 3, 2, 1, 2, 1, 3, 1, 2, 3, 2});
    const auto prod = reflection_product(w, sp);
    EXPECT_GE(prod.max_abs_entry(), 0.5);
    EXPECT_LE(prod.max_abs_entry(), 2.0);
    const double l = geodesic_length(w, sp);
    const double ref = static_cast<double>(oracle::word_length50(testing_util::ints(w), oracle::surface50(10.0)));
    EXPECT_LE(testing_util::rel_err(l, ref), 1e-13);
}

TEST(GeodesicLength, OrbitRecordsWithOddPrimitivePeriod) {
    // (1,2,3) repeated: primitive period 3, recorded at m = 6 and m = 12
    const auto sp = make_surface(4.0);
    const double l6 = geodesic_length(word({1, 2, 3, 1, 2, 3}), sp);
    for (const auto& o : enumerate_fixed_points(12)) {
        if (o.p != 3) continue;
        EXPECT_LE(testing_util::rel_err(geodesic_length(o, sp), 2.0 * l6), 1e-13);
    }
}

TEST(GeodesicLength, RejectsBadWords) {
    const auto sp = make_surface(4.0);
    EXPECT_THROW(geodesic_length(word({1, 2, 3}), sp), DomainError);
    EXPECT_THROW(geodesic_length(word({1, 1, 2, 3}), sp), DomainError);
    EXPECT_THROW(geodesic_length(word({1, 2, 3, 1}), sp), DomainError);
}

TEST(SegmentSum, ErrorShrinksLikeExpMinusTwoB) {
    double worst = 0.0;
    for (double b : {4.0, 6.0, 8.0}) {
        const auto sp = make_surface(b);
        for (int m = 2; m <= 8; m += 2)
            for (const auto& o : enumerate_fixed_points(m)) {
                const double err = std::abs(geodesic_length(o, sp) - (m * b + o.cweight * std::exp(-b)));
                worst = std::max(worst, err * std::exp(2.0 * b) / m);
            }
    }
    EXPECT_LT(worst, 1.0);
}
