#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cbar/cpoint.hpp"
#include "cbar/polynomial.hpp"

// Function classes on the closed unit disc that arise as uniform limits of
// polynomials in the compactification metric: finite type (holomorphic inside,
// possibly infinite at isolated boundary nodes) and infinite type (identically
// an infinite direction, with harmonic direction angle).

namespace cbar {

inline constexpr double kDomainSlack = 1e-12;  // |z| <= 1 + slack accepted

struct SingularNode {
    double angle;      // boundary position e^{i angle}
    double inf_angle;  // direction of the infinite value there
};

class FiniteTypeFunction {
public:
    FiniteTypeFunction() = default;
    FiniteTypeFunction(std::string name, std::function<complex(complex)> eval,
                       std::vector<SingularNode> nodes = {})
        : name_(std::move(name)), eval_(std::move(eval)), nodes_(std::move(nodes)) {}

    const std::string& name() const { return name_; }
    const std::vector<SingularNode>& singular_nodes() const { return nodes_; }

    // Finite value away from singular nodes; callers must not hit a node.
    complex value(complex z) const { return eval_(z); }

    CPoint eval(complex z) const;

private:
    std::string name_;
    std::function<complex(complex)> eval_;
    std::vector<SingularNode> nodes_;
};

class InfiniteTypeFunction {
public:
    InfiniteTypeFunction() = default;
    // a has size M+1 (cosine/constant part), b has size M+1 with b[0] ignored.
    InfiniteTypeFunction(std::string name, std::vector<double> a, std::vector<double> b);

    const std::string& name() const { return name_; }
    const std::vector<double>& coeffs_a() const { return a_; }
    const std::vector<double>& coeffs_b() const { return b_; }
    int bandwidth() const { return static_cast<int>(a_.size()) - 1; }

    // Harmonic direction angle at z (Poisson extension of the boundary series).
    double theta(complex z) const;
    double boundary_theta(double phi) const;

    CPoint eval(complex z) const { return CPoint::infinite(theta(z)); }

    // Holomorphic g with Im g = theta and Re g(0) = 0, as a polynomial.
    Polynomial conjugate() const;

    // Build from uniform boundary samples theta(2 pi j / n).  With fejer=true
    // the series is the Fejer mean of order M (uniformly convergent for
    // continuous data); with fejer=false it is the plain truncated projection,
    // exact for band-limited input.
    static InfiniteTypeFunction from_boundary_samples(std::string name,
                                                      const std::vector<double>& samples, int M,
                                                      bool fejer = true);

private:
    std::string name_;
    std::vector<double> a_, b_;
};

// Poisson extension of a finite Fourier boundary series at z, |z| <= 1.
double poisson_extend(const std::vector<double>& a, const std::vector<double>& b, complex z);

// Harmonic conjugate of the Poisson extension: g(z) = i a0 + sum (b_m + i a_m) z^m.
Polynomial harmonic_conjugate(const std::vector<double>& a, const std::vector<double>& b);

// First N Taylor coefficients of f at 0 via the trapezoidal Cauchy integral on
// |w| = rho.  Throws if any sample is non-finite.  The node count is
// max(4N, 256) rounded up to a power of two.
std::vector<complex> taylor_coeffs(const std::function<complex(complex)>& f, double rho, int N);

// Catalog ------------------------------------------------------------------

struct LogSumTerm {
    complex c;
    double theta;
};

FiniteTypeFunction make_const_target(complex value);
FiniteTypeFunction make_poly_target(const Polynomial& p);
FiniteTypeFunction make_exp_target();
// log(1/(1 - z)); infinite at z = 1 with direction angle 0.
FiniteTypeFunction make_log1m_target();
// sum_k c_k log(1/(e^{i theta_k} - z)) with the branch continuous on the disc.
FiniteTypeFunction make_logsum_target(const std::vector<LogSumTerm>& terms);

InfiniteTypeFunction make_inf_const_target(double theta0);
// theta(z) = Re z.
InfiniteTypeFunction make_inf_re_target();
InfiniteTypeFunction make_inf_fourier_target(std::vector<double> a, std::vector<double> b);
// theta = power * arg(base + z) for base > 1: exact series
// b_m = power * (-1)^{m+1} / (m base^m), truncated at M terms.
InfiniteTypeFunction make_inf_arg_pow_target(double base, int power, int M = 64);

// Functions on the segment [-1, 1] with values in the compactified reals.
struct SegmentFunction {
    std::string name;
    std::function<CPoint(double)> eval;
};
SegmentFunction make_invx_target();   // 1/x, infinite direction 0 at x = 0
SegmentFunction make_invx2_target();  // 1/x^2, infinite direction 0 at x = 0
SegmentFunction make_segment_poly_target(const Polynomial& p);

// Functions on the unit circle parameterized by angle.
struct CircleFunction {
    std::string name;
    std::function<CPoint(double)> eval_angle;
};
CircleFunction make_circle_inf_angle_target();  // phi -> infinite direction phi
CircleFunction make_circle_tan_half_target();   // tan(phi/2), infinite at phi = pi
CircleFunction restrict_to_circle(const FiniteTypeFunction& f);
CircleFunction restrict_to_circle(const InfiniteTypeFunction& f);

// Mean of f over the unit circle by composite Gauss-Legendre quadrature on the
// arcs between singular nodes, excluding an arc of radius 1e-8 around each
// node, with panels graded geometrically toward the excluded endpoints.
complex boundary_mean_value(const FiniteTypeFunction& f, double exclusion_radius = 1e-8);

}  // namespace cbar
