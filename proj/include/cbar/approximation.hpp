#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cbar/disc_functions.hpp"
#include "cbar/mesh.hpp"
#include "cbar/polynomial.hpp"

// Constructive polynomial approximation in the compactification metric.
// Finite-type targets are handled by dilation plus Taylor partial sums;
// infinite-type targets by scaling the exponential of a harmonic conjugate.
// Circle, segment and star-compact variants follow the same dilate/clamp
// pattern with Fejer sums, Chebyshev interpolation and boundary least squares.

namespace cbar {

struct ApproxConfig {
    std::size_t grid_boundary = 512;
    std::size_t grid_radial = 128;
    int degree_cap = 4096;
    std::uint64_t seed = 0;  // recorded in reports; the algorithms are deterministic
};

struct ApproxReport {
    std::string target;
    std::string domain;  // disc | circle | segment | star
    double target_epsilon = 0.0;
    double dilation_r = 0.0;   // dilation factor (or clamp level R for circle/segment)
    int degree = 0;
    long long scaling_n = -1;  // infinite-type scaling factor, -1 when unused
    double delta = 0.0;        // infinite-type lower bound for |e^g| on the dilated disc
    double achieved_error = 0.0;
    std::size_t grid_size = 0;
    double condition = 0.0;  // least-squares condition number (star domain)
    std::uint64_t seed = 0;
};

class ApproxError : public std::runtime_error {
public:
    enum class Kind { Tolerance, DegreeCap, DDiscontinuous, Conditioning };
    ApproxError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Max over the mesh of d(f(z), Q(z)); `where` (optional) receives the argmax.
double sup_d_error(const std::function<CPoint(complex)>& f, const Polynomial& Q,
                   const DiscMesh& mesh, complex* where = nullptr);

std::pair<Polynomial, ApproxReport> approx_finite_type(const FiniteTypeFunction& f, double eps,
                                                       const ApproxConfig& cfg = {});

std::pair<Polynomial, ApproxReport> approx_infinite_type(const InfiniteTypeFunction& f, double eps,
                                                         const ApproxConfig& cfg = {});

// Uniform approximation on the unit circle by trigonometric polynomials:
// radial clamp followed by Fejer sums of the clamped samples.  Rejects
// empirically d-discontinuous targets.
std::pair<TrigPolynomial, ApproxReport> approx_trig_on_circle(const CircleFunction& f, double eps,
                                                              const ApproxConfig& cfg = {});

// Real polynomial approximation on [-1, 1]: radial clamp followed by Chebyshev
// interpolation of the clamped function.  Rejects d-discontinuous targets.
std::pair<Polynomial, ApproxReport> approx_real_segment(const SegmentFunction& f, double eps,
                                                        const ApproxConfig& cfg = {});

// Compact star-shaped with respect to `center`, described by a positive radial
// boundary function sampled at uniform angles (piecewise-linear in between).
struct StarCompact {
    complex center;
    std::vector<double> rho;

    double radius(double phi) const;
    complex boundary(double phi) const { return center + std::polar(radius(phi), phi); }
};

struct StarNode {
    complex where;
    double inf_angle;
};

struct StarTarget {
    std::string name;
    std::function<complex(complex)> eval;
    std::vector<StarNode> nodes;  // boundary points with infinite values
};

StarTarget star_target_from_finite(const FiniteTypeFunction& f);

// Center dilation toward the star center followed by a least-squares
// polynomial fit on the dilated boundary (scaled monomial basis, SVD solve,
// condition threshold 1e12).
std::pair<Polynomial, ApproxReport> approx_star_compact(const StarCompact& L, const StarTarget& f,
                                                        double eps, const ApproxConfig& cfg = {});

}  // namespace cbar
