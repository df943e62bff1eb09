#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <variant>

// Points of the compactified plane: every finite complex number plus one
// point at infinity per direction.  The chart G maps the finite plane onto
// the open unit disc and each infinite direction onto the unit circle; the
// metric d is the Euclidean distance between chart images.

namespace cbar {

using complex = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

// Normalize an angle into [0, 2*pi).
inline double normalize_angle(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("angle must be finite");
    double a = std::fmod(theta, two_pi);
    if (a < 0) a += two_pi;
    if (a >= two_pi) a = 0.0;  // fmod rounding at the seam
    return a;
}

class CPoint {
public:
    CPoint() : value_(complex{0.0, 0.0}) {}
    explicit CPoint(complex z) : value_(z) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("finite point requires finite components");
    }
    CPoint(double re, double im) : CPoint(complex{re, im}) {}

    static CPoint finite(complex z) { return CPoint(z); }
    static CPoint infinite(double theta) {
        CPoint p;
        p.value_ = Inf{normalize_angle(theta)};
        return p;
    }

    bool is_finite() const { return std::holds_alternative<complex>(value_); }
    bool is_infinite() const { return !is_finite(); }

    complex value() const {
        if (!is_finite()) throw std::domain_error("infinite point has no finite value");
        return std::get<complex>(value_);
    }
    // Normalized direction angle in [0, 2*pi).
    double angle() const {
        if (is_finite()) throw std::domain_error("finite point has no direction angle");
        return std::get<Inf>(value_).theta;
    }

    friend bool operator==(const CPoint& a, const CPoint& b) {
        if (a.is_finite() != b.is_finite()) return false;
        if (a.is_finite()) return a.value() == b.value();
        return a.angle() == b.angle();
    }
    friend bool operator!=(const CPoint& a, const CPoint& b) { return !(a == b); }

private:
    struct Inf {
        double theta;
    };
    std::variant<complex, Inf> value_;
};

// Chart G: finite z -> z/(1+|z|), infinite direction -> e^{i theta}.
// For very large |z| the equivalent form sign(z) * 1/(1/|z| + 1) avoids
// overflow in the denominator product.
inline complex gmap(const CPoint& p) {
    if (p.is_infinite()) return std::polar(1.0, p.angle());
    const complex z = p.value();
    const double m = std::abs(z);
    if (m > 1e150) {
        const complex dir = complex{z.real() / m, z.imag() / m};
        return dir * (1.0 / (1.0 / m + 1.0));
    }
    return z / (1.0 + m);
}

// Metric of the compactification: Euclidean distance between chart images.
inline double metric_d(const CPoint& p, const CPoint& q) {
    return std::abs(gmap(p) - gmap(q));
}

// Chordal-plane points: finite values plus the single point at infinity.
class ChordalPoint {
public:
    ChordalPoint() : value_(complex{0.0, 0.0}), infinite_(false) {}
    static ChordalPoint finite(complex z) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("finite point requires finite components");
        ChordalPoint p;
        p.value_ = z;
        return p;
    }
    static ChordalPoint infinity() {
        ChordalPoint p;
        p.infinite_ = true;
        return p;
    }

    bool is_finite() const { return !infinite_; }
    bool is_infinite() const { return infinite_; }
    complex value() const {
        if (infinite_) throw std::domain_error("point at infinity has no finite value");
        return value_;
    }
    friend bool operator==(const ChordalPoint& a, const ChordalPoint& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const ChordalPoint& a, const ChordalPoint& b) { return !(a == b); }

private:
    complex value_;
    bool infinite_;
};

// Chordal metric on the one-point compactification.  hypot keeps the
// denominators finite for |z| near the double range, and the numerator is
// assembled from pre-divided terms so huge inputs cannot overflow.
inline double chordal_chi(const ChordalPoint& a, const ChordalPoint& b) {
    if (a.is_infinite() && b.is_infinite()) return 0.0;
    if (a.is_infinite() || b.is_infinite()) {
        const complex z = a.is_infinite() ? b.value() : a.value();
        return 1.0 / std::hypot(1.0, std::abs(z));
    }
    const complex z1 = a.value(), z2 = b.value();
    const double h1 = std::hypot(1.0, std::abs(z1));
    const double h2 = std::hypot(1.0, std::abs(z2));
    return std::abs(z1 / h1 / h2 - z2 / h1 / h2);
}

// Collapse map onto the chordal plane: finite points map to themselves and
// every infinite direction to the single point at infinity.
inline ChordalPoint phi(const CPoint& p) {
    return p.is_finite() ? ChordalPoint::finite(p.value()) : ChordalPoint::infinity();
}

// Radial clamp at level R > 0: identity inside |z| < R, projection onto the
// circle |z| = R outside and for infinite directions.
inline complex phi_r(const CPoint& p, double R) {
    if (!(R > 0.0)) throw std::invalid_argument("clamp level R must be positive");
    if (p.is_infinite()) return std::polar(R, p.angle());
    const complex z = p.value();
    const double m = std::abs(z);
    if (m < R) return z;
    return complex{z.real() / m, z.imag() / m} * R;
}

}  // namespace cbar
