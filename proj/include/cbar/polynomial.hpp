#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cbar/cpoint.hpp"

namespace cbar {

// Complex polynomial in the power basis; coefficient index equals the power.
// An empty or all-zero list represents the zero polynomial.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<complex> coeffs) : c_(std::move(coeffs)) {}

    const std::vector<complex>& coeffs() const { return c_; }
    std::vector<complex>& coeffs() { return c_; }

    // Highest index with a nonzero coefficient; 0 for the zero polynomial.
    int degree() const {
        for (std::size_t i = c_.size(); i-- > 0;)
            if (c_[i] != complex{0.0, 0.0}) return static_cast<int>(i);
        return 0;
    }

    complex eval(complex z) const {
        complex acc{0.0, 0.0};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
        return acc;
    }
    complex operator()(complex z) const { return eval(z); }

    // p(r z) as a polynomial: scales coefficient k by r^k.
    Polynomial dilate(double r) const {
        std::vector<complex> out(c_.size());
        double rk = 1.0;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            out[k] = c_[k] * rk;
            rk *= r;
        }
        return Polynomial(std::move(out));
    }

    // Drop trailing coefficients that are negligible against the largest one.
    void trim(double rel_tol = 1e-14) {
        double scale = 0.0;
        for (const auto& c : c_) scale = std::max(scale, std::abs(c));
        const double cut = scale * rel_tol;
        while (!c_.empty() && std::abs(c_.back()) <= cut) c_.pop_back();
    }

private:
    std::vector<complex> c_;
};

// Trigonometric polynomial sum_{k=-M..M} c_k e^{i k phi}.
class TrigPolynomial {
public:
    TrigPolynomial() = default;
    TrigPolynomial(int min_k, std::vector<complex> coeffs) : min_k_(min_k), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("trig polynomial needs coefficients");
    }

    int min_k() const { return min_k_; }
    int max_k() const { return min_k_ + static_cast<int>(c_.size()) - 1; }
    const std::vector<complex>& coeffs() const { return c_; }

    complex eval_angle(double phi) const {
        // Horner in e^{i phi}, then shift by the lowest frequency.
        const complex w = std::polar(1.0, phi);
        complex acc{0.0, 0.0};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * w + c_[i];
        return acc * std::polar(1.0, min_k_ * phi);
    }

    int degree() const {
        int deg = 0;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != complex{0.0, 0.0})
                deg = std::max(deg, std::abs(min_k_ + static_cast<int>(i)));
        return deg;
    }

    void trim(double rel_tol = 1e-14) {
        double scale = 0.0;
        for (const auto& c : c_) scale = std::max(scale, std::abs(c));
        const double cut = scale * rel_tol;
        std::size_t lo = 0, hi = c_.size();
        while (hi > lo + 1 && std::abs(c_[hi - 1]) <= cut) --hi;
        while (lo + 1 < hi && std::abs(c_[lo]) <= cut) ++lo;
        c_ = std::vector<complex>(c_.begin() + lo, c_.begin() + hi);
        min_k_ += static_cast<int>(lo);
    }

private:
    int min_k_ = 0;
    std::vector<complex> c_{complex{0.0, 0.0}};
};

}  // namespace cbar
