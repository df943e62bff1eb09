#include <cmath>
#include <complex>
#include <vector>

#include "cbar/classification.hpp"
#include "cbar/disc_functions.hpp"
#include "doctest.h"
#include "oracles.hpp"

using cbar::complex;
using cbar::CPoint;
using cbar::Polynomial;
using cbar::two_pi;

namespace {

// Partial sums S_m(z) = sum_{k=0}^m c_k z^k for a fixed coefficient rule.
std::vector<Polynomial> partial_sums(std::size_t count, const std::function<double(int)>& coeff) {
    std::vector<Polynomial> seq;
    std::vector<complex> c;
    for (std::size_t m = 0; m < count; ++m) {
        c.push_back(complex{coeff(static_cast<int>(m)), 0.0});
        seq.emplace_back(c);
    }
    return seq;
}

const Polynomial kShifted6(std::vector<complex>{{64.0, 0.0}, {192.0, 0.0}, {240.0, 0.0},
                                                {160.0, 0.0}, {60.0, 0.0}, {12.0, 0.0},
                                                {1.0, 0.0}});  // (2+z)^6

}  // namespace

TEST_CASE("unwrapped argument along paths") {
    SUBCASE("counterclockwise unit square walk") {
        const std::vector<complex> path{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}};
        const auto tr = cbar::continuous_arg(path);
        REQUIRE(tr.values.size() == 5);
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(std::abs(tr.values[i] - std::numbers::pi / 2 * static_cast<double>(i)) <= 1e-12);
        CHECK(tr.branch_offset == 1);
        CHECK(std::abs(tr.total_variation - two_pi) <= 1e-12);
    }
    SUBCASE("clockwise walk has offset -1") {
        const std::vector<complex> path{{1, 0}, {0, -1}, {-1, 0}, {0, 1}, {1, 0}};
        const auto tr = cbar::continuous_arg(path);
        CHECK(std::abs(tr.values.back() + two_pi) <= 1e-12);
        CHECK(tr.branch_offset == -1);
    }
    SUBCASE("constant path") {
        const auto tr = cbar::continuous_arg({{1, 0}, {1, 0}, {1, 0}});
        for (double v : tr.values) CHECK(v == 0.0);
        CHECK(tr.branch_offset == 0);
        CHECK(tr.total_variation == 0.0);
    }
    SUBCASE("rejects zero samples and antipodal steps") {
        CHECK_THROWS_AS(cbar::continuous_arg({}), std::invalid_argument);
        CHECK_THROWS_AS(cbar::continuous_arg({{1, 0}, {0, 0}, {1, 0}}), std::domain_error);
        CHECK_THROWS_AS(cbar::continuous_arg({{1, 0}, {-1, 0}}), std::domain_error);
        CHECK_THROWS_AS(cbar::continuous_arg({{1, 0}, {-1, 1e-20}}), std::domain_error);
        CHECK_NOTHROW(cbar::continuous_arg({{1, 0}, {0, 1}, {-1, 0}}));
    }
}

TEST_CASE("boundary argument trace of (2+z)^6") {
    const std::size_t n = 512;
    std::vector<complex> path(n + 1);
    std::vector<double> ref(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const complex z = std::polar(1.0, two_pi * static_cast<double>(j % n) / n);
        path[j] = kShifted6.eval(z);
        ref[j] = 6.0 * std::arg(2.0 + z);
    }
    const auto tr = cbar::continuous_arg(path);

    // The range sweeps out to almost +-pi and returns; the closed trace does
    // not wind, so the continued values equal the pointwise angles.
    double worst = 0.0, lo = 0.0, hi = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        worst = std::max(worst, std::abs(tr.values[j] - ref[j]));
        lo = std::min(lo, tr.values[j]);
        hi = std::max(hi, tr.values[j]);
    }
    CHECK(worst <= 1e-9);
    CHECK(hi > 3.13);
    CHECK(lo < -3.13);
    CHECK(std::abs(tr.values.back() - tr.values.front()) <= 1e-9);
    CHECK(tr.branch_offset == 0);
    CHECK(tr.total_variation > 12.4);
    CHECK(tr.total_variation < 12.7);

    // A global rotation of the data shifts the trace by a constant and keeps
    // its shape: the unwrap depends only on consecutive ratios.
    std::vector<complex> rotated(path);
    for (auto& v : rotated) v *= std::polar(1.0, 2.5);
    const auto tr2 = cbar::continuous_arg(rotated);
    double shift_dev = 0.0;
    for (std::size_t j = 0; j <= n; ++j)
        shift_dev = std::max(shift_dev, std::abs((tr2.values[j] - tr.values[j]) - 2.5));
    CHECK(shift_dev <= 1e-9);
    CHECK(std::abs(tr2.total_variation - tr.total_variation) <= 1e-9);
}

TEST_CASE("empirical d-continuity along sampled paths") {
    const std::size_t n = 1024;
    const double h = 2.0 / static_cast<double>(n);

    SUBCASE("1/x^2 with the infinite value filled in is d-continuous") {
        const auto f = cbar::make_invx2_target();
        std::vector<CPoint> s(n + 1);
        for (std::size_t j = 0; j <= n; ++j) s[j] = f.eval(-1.0 + h * static_cast<double>(j));
        CHECK(static_cast<bool>(cbar::is_d_continuous(s, h)));
    }
    SUBCASE("1/x jumps between opposite directions at 0") {
        const auto f = cbar::make_invx_target();
        std::vector<CPoint> s(n + 1);
        for (std::size_t j = 0; j <= n; ++j) s[j] = f.eval(-1.0 + h * static_cast<double>(j));
        const auto res = cbar::is_d_continuous(s, h);
        CHECK_FALSE(res.continuous);
        const double x_worst = -1.0 + h * static_cast<double>(res.worst_index);
        CHECK(std::abs(x_worst) <= 2.0 * h + 1e-12);
        CHECK(res.worst_gap > 0.5);
    }
    SUBCASE("constants and steps") {
        std::vector<CPoint> flat(64, CPoint(complex{5.0, 0.0}));
        CHECK(static_cast<bool>(cbar::is_d_continuous(flat, 0.1)));
        std::vector<CPoint> step(64, CPoint(complex{0.0, 0.0}));
        for (std::size_t j = 32; j < 64; ++j) step[j] = CPoint(complex{1.0, 0.0});
        CHECK_FALSE(static_cast<bool>(cbar::is_d_continuous(step, 0.1)));
    }
    SUBCASE("input validation") {
        std::vector<CPoint> two(2, CPoint(complex{1.0, 0.0}));
        CHECK_THROWS_AS(cbar::is_d_continuous(two, 0.1), std::invalid_argument);
        std::vector<CPoint> three(3, CPoint(complex{1.0, 0.0}));
        CHECK_THROWS_AS(cbar::is_d_continuous(three, 0.0), std::invalid_argument);
    }
}

TEST_CASE("classification grid layout") {
    const cbar::RayGrid grid{64, 64};
    const auto pts = grid.points();
    REQUIRE(pts.size() == 64 * 64 + 1);
    CHECK(pts[0] == complex{0.0, 0.0});
    for (std::size_t k = 1; k <= 64; ++k) {
        CHECK(std::abs(pts[k].real() - static_cast<double>(k) / 64.0) <= 1e-15);
        CHECK(std::abs(pts[k].imag()) <= 1e-15);
    }
    CHECK_THROWS_AS((cbar::RayGrid{4, 64}.points()), std::invalid_argument);
    CHECK_THROWS_AS((cbar::RayGrid{8, 1}.points()), std::invalid_argument);
}

TEST_CASE("classify: uniformly convergent sums are finite type") {
    double fact = 1.0;
    const auto exp_sums = partial_sums(21, [&fact](int k) {
        if (k > 0) fact *= static_cast<double>(k);
        return 1.0 / fact;
    });
    const auto v = cbar::classify_limit(exp_sums, cbar::RayGrid{}, 1e-6);
    REQUIRE(v.kind == cbar::LimitVerdict::Kind::FiniteType);
    REQUIRE(v.finite_samples.size() == v.grid_points.size());
    double worst = 0.0;
    for (std::size_t p = 0; p < v.grid_points.size(); ++p)
        worst = std::max(worst, std::abs(v.finite_samples[p] - std::exp(v.grid_points[p])));
    CHECK(worst <= 1e-12);

    const auto geo_half = partial_sums(30, [](int k) { return std::pow(0.5, k); });
    CHECK(cbar::classify_limit(geo_half, cbar::RayGrid{}, 1e-3).kind ==
          cbar::LimitVerdict::Kind::FiniteType);
}

TEST_CASE("classify: geometric sums fail the Cauchy test near z = 1") {
    const auto sums = partial_sums(100, [](int) { return 1.0; });
    const auto v = cbar::classify_limit(sums, cbar::RayGrid{64, 64}, 1e-4);
    REQUIRE(v.kind == cbar::LimitVerdict::Kind::NotUniformlyCauchy);
    CHECK(std::abs(v.witness.z - complex{1.0, 0.0}) < 0.05);
    CHECK(v.witness.gap >= 1e-4);
    CHECK(v.witness.first >= 66);
    CHECK(v.witness.second <= 99);
    CHECK(v.witness.first < v.witness.second);
    // Deterministic scan: the first trailing pair reaches tol at t = 62/64 on
    // the real ray before any other pair or point is visited.
    CHECK(v.witness.first == 66);
    CHECK(v.witness.second == 67);
    CHECK(v.witness.z.real() == doctest::Approx(0.96875).epsilon(1e-12));
    CHECK(v.witness.z.imag() == 0.0);
}

TEST_CASE("classify: pointwise escape to infinity is not uniform") {
    std::vector<Polynomial> seq;
    for (int n = 1; n <= 50; ++n)
        seq.emplace_back(std::vector<complex>{{0.0, 0.0}, {static_cast<double>(n), 0.0}});
    const auto v = cbar::classify_limit(seq, cbar::RayGrid{64, 64}, 1e-2);
    REQUIRE(v.kind == cbar::LimitVerdict::Kind::NotUniformlyCauchy);
    // The members separate near the origin, where n|z| is order one.
    CHECK(std::abs(v.witness.z) <= 0.25);
}

TEST_CASE("classify: scaled shifted power is infinite type with exact angle") {
    std::vector<Polynomial> seq;
    for (int n = 1; n <= 100; ++n) {
        auto c = kShifted6.coeffs();
        for (auto& v : c) v *= static_cast<double>(n);
        seq.emplace_back(std::move(c));
    }
    const auto v = cbar::classify_limit(seq, cbar::RayGrid{64, 64}, 2e-2);
    REQUIRE(v.kind == cbar::LimitVerdict::Kind::InfiniteType);
    REQUIRE(v.theta_samples.size() == v.grid_points.size());
    double worst = 0.0;
    for (std::size_t p = 0; p < v.grid_points.size(); ++p)
        worst = std::max(worst,
                         std::abs(v.theta_samples[p] - 6.0 * std::arg(2.0 + v.grid_points[p])));
    CHECK(worst <= 1e-9);
    REQUIRE(v.member_offsets.size() == 33);  // trailing 34 members
    for (long long o : v.member_offsets) CHECK(o == 0);
}

TEST_CASE("classify: mixed regimes are reported, not classified") {
    std::vector<Polynomial> seq(3, Polynomial(std::vector<complex>{{0.0, 0.0}, {4.0, 0.0}}));
    const auto v = cbar::classify_limit(seq, cbar::RayGrid{64, 64}, 0.5);
    REQUIRE(v.kind == cbar::LimitVerdict::Kind::NotUniformlyCauchy);
    CHECK(v.witness.note.find("mixed regimes") != std::string::npos);
    CHECK(std::abs(4.0 * std::abs(v.witness.z)) > 2.0);  // the reported blow-up sample
}

TEST_CASE("classify: zero at the center blocks angle recovery") {
    std::vector<Polynomial> seq;
    for (int n = 1; n <= 30; ++n)
        seq.emplace_back(std::vector<complex>{{0.0, 0.0}, {10000.0 + n, 0.0}});
    const auto v = cbar::classify_limit(seq, cbar::RayGrid{64, 64}, 1e-2);
    REQUIRE(v.kind == cbar::LimitVerdict::Kind::NotUniformlyCauchy);
    CHECK(v.witness.note.find("argument recovery failed") != std::string::npos);
}

TEST_CASE("classify: input validation") {
    std::vector<Polynomial> two(2, Polynomial(std::vector<complex>{{1.0, 0.0}}));
    CHECK_THROWS_AS(cbar::classify_limit(two, cbar::RayGrid{}, 0.1), std::invalid_argument);
    std::vector<Polynomial> three(3, Polynomial(std::vector<complex>{{1.0, 0.0}}));
    CHECK_THROWS_AS(cbar::classify_limit(three, cbar::RayGrid{}, 0.0), std::invalid_argument);
}
