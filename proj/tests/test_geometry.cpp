#include <cmath>
#include <complex>
#include <random>

#include "cbar/cpoint.hpp"
#include "doctest.h"
#include "oracles.hpp"

using cbar::complex;
using cbar::CPoint;
using cbar::two_pi;

TEST_CASE("metric golden values") {
    const CPoint one = CPoint::finite({1.0, 0.0});
    const CPoint inf0 = CPoint::infinite(0.0);
    const CPoint infpi = CPoint::infinite(std::numbers::pi);

    CHECK(std::abs(cbar::metric_d(one, inf0) - 0.5) <= 1e-12);
    CHECK(std::abs(cbar::metric_d(inf0, infpi) - 2.0) <= 1e-12);
    CHECK(cbar::metric_d(CPoint::finite({0.0, 0.0}), CPoint::finite({0.0, 0.0})) == 0.0);

    // d(z, 2z) depends only on |z|: 1/6 on the unit circle and 1/(3+2*sqrt(2))
    // at |z| = 1/sqrt(2).
    for (int j = 0; j < 64; ++j) {
        const complex z = std::polar(1.0, two_pi * j / 64.0);
        CHECK(std::abs(cbar::metric_d(CPoint::finite(z), CPoint::finite(2.0 * z)) - 1.0 / 6.0) <=
              1e-12);
    }
    const double inner = 1.0 / (3.0 + 2.0 * std::sqrt(2.0));
    for (int j = 0; j < 16; ++j) {
        const complex z = std::polar(1.0 / std::sqrt(2.0), 0.3 + two_pi * j / 16.0);
        CHECK(std::abs(cbar::metric_d(CPoint::finite(z), CPoint::finite(2.0 * z)) - inner) <=
              1e-12);
    }
}

TEST_CASE("metric agrees with the three-case chart formula") {
    std::mt19937_64 rng(12345);
    double worst = 0.0;
    for (int i = 0; i < 200000; ++i) {
        const CPoint p = oracle::random_cpoint(rng);
        const CPoint q = oracle::random_cpoint(rng);
        worst = std::max(worst, std::abs(cbar::metric_d(p, q) - oracle::metric_d_threecase(p, q)));
    }
    CHECK(worst <= 1e-12);

    // Huge moduli hit the overflow-guarded chart branch.
    const CPoint huge = CPoint::finite({1e300, 1e300});
    CHECK(std::abs(cbar::metric_d(huge, CPoint::infinite(std::atan2(1.0, 1.0))) -
                   oracle::metric_d_threecase(huge, CPoint::infinite(std::atan2(1.0, 1.0)))) <=
          1e-12);
    CHECK(std::abs(cbar::gmap(huge)) <= 1.0);
    CHECK(std::abs(cbar::gmap(huge)) >= 1.0 - 1e-12);
}

TEST_CASE("metric axioms on random triples") {
    std::mt19937_64 rng(777);
    int violations = 0;
    for (int i = 0; i < 100000; ++i) {
        const CPoint p = oracle::random_cpoint(rng);
        const CPoint q = oracle::random_cpoint(rng);
        const CPoint r = oracle::random_cpoint(rng);
        const double dpq = cbar::metric_d(p, q);
        if (dpq != cbar::metric_d(q, p)) ++violations;                         // symmetry, exact
        if (cbar::metric_d(p, p) != 0.0) ++violations;                         // identity
        if (dpq > cbar::metric_d(p, r) + cbar::metric_d(r, q) + 1e-12) ++violations;  // triangle
        if (!(p == q) && !(dpq > 0.0)) ++violations;                           // separation
    }
    CHECK(violations == 0);
}

TEST_CASE("metric is bounded by the Euclidean distance") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_excess = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double scale = std::tan(1.5707 * unit(rng));
        const complex z1 = oracle::random_finite(rng, 1.0 + scale);
        const complex z2 = oracle::random_finite(rng, 1.0 + scale);
        const double d = cbar::metric_d(CPoint::finite(z1), CPoint::finite(z2));
        worst_excess = std::max(worst_excess, d - std::abs(z1 - z2));
    }
    CHECK(worst_excess <= 1e-14);
}

TEST_CASE("collapse map is 2-Lipschitz into the chordal metric") {
    std::mt19937_64 rng(90210);
    double worst_excess = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const CPoint p = oracle::random_cpoint(rng);
        const CPoint q = oracle::random_cpoint(rng);
        const double chi = cbar::chordal_chi(cbar::phi(p), cbar::phi(q));
        worst_excess = std::max(worst_excess, chi - 2.0 * cbar::metric_d(p, q));
    }
    CHECK(worst_excess <= 1e-14);
}

TEST_CASE("chordal metric golden values and formula") {
    using cbar::ChordalPoint;
    CHECK(std::abs(cbar::chordal_chi(ChordalPoint::finite({0.0, 0.0}), ChordalPoint::infinity()) -
                   1.0) <= 1e-15);
    CHECK(std::abs(cbar::chordal_chi(ChordalPoint::finite({1.0, 0.0}), ChordalPoint::infinity()) -
                   1.0 / std::sqrt(2.0)) <= 1e-15);
    CHECK(cbar::chordal_chi(ChordalPoint::infinity(), ChordalPoint::infinity()) == 0.0);

    std::mt19937_64 rng(4242);
    double worst = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const complex z1 = oracle::random_finite(rng, 50.0);
        const complex z2 = oracle::random_finite(rng, 50.0);
        const double ref = std::abs(z1 - z2) / (std::hypot(1.0, std::abs(z1)) *
                                                std::hypot(1.0, std::abs(z2)));
        const double got =
            cbar::chordal_chi(ChordalPoint::finite(z1), ChordalPoint::finite(z2));
        worst = std::max(worst, std::abs(got - ref));
    }
    CHECK(worst <= 1e-14);
}

TEST_CASE("collapse map identifies all infinite directions") {
    CHECK(cbar::phi(CPoint::infinite(0.3)) == cbar::phi(CPoint::infinite(5.9)));
    CHECK(cbar::phi(CPoint::finite({2.0, -1.0})).value() == complex{2.0, -1.0});
}

TEST_CASE("radial clamp cases and Lipschitz bound") {
    // Inside the clamp radius the map is the identity; outside it projects.
    CHECK(cbar::phi_r(CPoint::finite({0.25, 0.1}), 1.0) == complex{0.25, 0.1});
    const complex projected = cbar::phi_r(CPoint::finite({3.0, 4.0}), 2.0);
    CHECK(std::abs(std::abs(projected) - 2.0) <= 1e-15);
    CHECK(std::abs(projected - complex{1.2, 1.6}) <= 1e-14);
    const complex at_inf = cbar::phi_r(CPoint::infinite(1.0), 32.0);
    CHECK(std::abs(at_inf - 32.0 * std::polar(1.0, 1.0)) <= 1e-12);
    CHECK_THROWS_AS(cbar::phi_r(CPoint::finite({1.0, 0.0}), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(cbar::phi_r(CPoint::finite({1.0, 0.0}), -2.0), std::invalid_argument);

    std::mt19937_64 rng(5150);
    for (const double R : {0.5, 1.0, 2.0, 4.0, 32.0}) {
        const double lip = (1.0 + R) * (1.0 + R);
        double worst_excess = 0.0;
        for (int i = 0; i < 100000; ++i) {
            const CPoint p = oracle::random_cpoint(rng);
            const CPoint q = oracle::random_cpoint(rng);
            const double lhs = std::abs(cbar::phi_r(p, R) - cbar::phi_r(q, R));
            worst_excess =
                std::max(worst_excess, lhs - lip * cbar::metric_d(p, q) * (1.0 + 1e-9) - 1e-12);
        }
        CAPTURE(R);
        CHECK(worst_excess <= 0.0);
    }
}

TEST_CASE("angle normalization") {
    CHECK(cbar::normalize_angle(0.0) == 0.0);
    CHECK(cbar::normalize_angle(two_pi) == 0.0);
    CHECK(std::abs(cbar::normalize_angle(-std::numbers::pi / 2) - 1.5 * std::numbers::pi) <=
          1e-15);
    CHECK(std::abs(cbar::normalize_angle(7.0 * std::numbers::pi) - std::numbers::pi) <= 1e-12);
    CHECK_THROWS_AS(cbar::normalize_angle(std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(cbar::normalize_angle(std::nan("")), std::invalid_argument);
}

TEST_CASE("compactified point semantics") {
    CHECK(CPoint::infinite(0.0) == CPoint::infinite(two_pi));
    CHECK(CPoint::infinite(1.0) != CPoint::infinite(2.0));
    CHECK(CPoint::infinite(-1.0).angle() == doctest::Approx(two_pi - 1.0));
    CHECK(CPoint::finite({1.0, 2.0}) == CPoint::finite({1.0, 2.0}));
    CHECK(CPoint::finite({1.0, 2.0}) != CPoint::infinite(0.0));
    CHECK_THROWS_AS(CPoint::infinite(1.0).value(), std::domain_error);
    CHECK_THROWS_AS(CPoint::finite({1.0, 0.0}).angle(), std::domain_error);
    CHECK_THROWS_AS(CPoint::finite({std::nan(""), 0.0}), std::invalid_argument);
    CHECK(std::abs(cbar::gmap(CPoint::infinite(0.25)) - std::polar(1.0, 0.25)) <= 1e-15);
}
