#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is written directly from the defining formulas, with no
// shared code paths with the implementations under test.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "cbar/cpoint.hpp"

namespace oracle {

using cbar::complex;
using cbar::CPoint;

// The metric in its original three-case form: pairwise chart distances
// spelled out per kind, with the chart written literally as z/(1+|z|).
inline double metric_d_threecase(const CPoint& p, const CPoint& q) {
    if (p.is_finite() && q.is_finite()) {
        const complex z1 = p.value(), z2 = q.value();
        return std::abs(z1 / (1.0 + std::abs(z1)) - z2 / (1.0 + std::abs(z2)));
    }
    if (p.is_finite() || q.is_finite()) {
        const complex z = p.is_finite() ? p.value() : q.value();
        const double theta = p.is_finite() ? q.angle() : p.angle();
        return std::abs(z / (1.0 + std::abs(z)) - std::polar(1.0, theta));
    }
    return std::abs(std::polar(1.0, p.angle()) - std::polar(1.0, q.angle()));
}

// Direct O(n^2) discrete Fourier transform, forward sign convention.
inline std::vector<complex> naive_dft(const std::vector<complex>& x, bool inverse = false) {
    const std::size_t n = x.size();
    std::vector<complex> out(n, complex{0.0, 0.0});
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            out[k] += x[j] * std::polar(1.0, sign * cbar::two_pi * static_cast<double>(j) *
                                                 static_cast<double>(k) / static_cast<double>(n));
    if (inverse)
        for (auto& v : out) v /= static_cast<double>(n);
    return out;
}

// Power-basis evaluation term by term (no Horner), for cross-checking.
inline complex naive_poly_eval(const std::vector<complex>& c, complex z) {
    complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * std::pow(z, static_cast<double>(k));
    return acc;
}

// Harmonic extension of boundary data by the trapezoidal Poisson integral;
// spectrally accurate for smooth data, independent of the series formulas.
template <typename BoundaryFn>
double poisson_integral(BoundaryFn&& boundary_theta, complex z, std::size_t n = 8192) {
    const double r = std::abs(z);
    const double phi = std::arg(z);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double t = cbar::two_pi * static_cast<double>(j) / static_cast<double>(n);
        const double kernel =
            (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(phi - t) + r * r);
        acc += kernel * boundary_theta(t);
    }
    return acc / static_cast<double>(n);
}

// Random points of the compactification with heavy-tailed moduli: small,
// order-one, huge and infinite points all appear.
inline CPoint random_cpoint(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double kind = unit(rng);
    if (kind < 0.2) return CPoint::infinite(cbar::two_pi * unit(rng));
    const double m = std::tan(1.5707 * unit(rng));
    return CPoint::finite(std::polar(m, cbar::two_pi * unit(rng)));
}

inline complex random_finite(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return complex{u(rng), u(rng)};
}

}  // namespace oracle
