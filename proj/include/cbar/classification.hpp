#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cbar/cpoint.hpp"
#include "cbar/polynomial.hpp"

namespace cbar {

// Unwrapped argument along an ordered path of nonzero samples.  The first
// value is the principal argument of the first sample; each later value is
// the unique continuation within pi of its predecessor.
struct ArgTrace {
    std::vector<double> values;
    // Branch count of the final value relative to its principal argument,
    // i.e. values.back() = Arg(last sample) + 2*pi*branch_offset.
    long long branch_offset = 0;
    double total_variation = 0.0;
};

// Throws std::domain_error on a zero sample or on an under-resolved step
// (consecutive ratio a negative real, where the turning direction is
// ambiguous).
ArgTrace continuous_arg(const std::vector<complex>& samples);

struct DContinuityResult {
    bool continuous = false;
    double max_gap = 0.0;         // max adjacent d-gap at the given sampling
    double coarse_gap = 0.0;      // same measured on every other sample
    std::size_t worst_index = 0;  // left endpoint of the worst adjacent pair
    double worst_gap = 0.0;
    explicit operator bool() const { return continuous; }
};

// Empirical d-continuity along a sampled path: the max adjacent gap must
// shrink when the sampling is refined, so we compare the given resolution
// against its stride-2 subsample.  A jump keeps the same gap at both scales;
// a d-continuous target roughly halves it.  h is the sampling step (> 0).
DContinuityResult is_d_continuous(const std::vector<CPoint>& samples, double h);

// Sampling grid for limit classification: the center plus n_radii points on
// each of n_rays radial rays, boundary included.  Unwrapping runs outward
// along rays and is reconciled on the mid-radius circle, which keeps the
// possibly wild boundary out of the continuation argument.
struct RayGrid {
    std::size_t n_rays = 64;
    std::size_t n_radii = 64;
    // Order: center first, then ray-major (ray j, radius k/n_radii ascending).
    std::vector<complex> points() const;
};

struct CauchyWitness {
    complex z{0.0, 0.0};
    std::size_t first = 0;   // indices into the input sequence
    std::size_t second = 0;
    double gap = 0.0;
    std::string note;
};

struct LimitVerdict {
    enum class Kind { NotUniformlyCauchy, FiniteType, InfiniteType };
    Kind kind = Kind::NotUniformlyCauchy;
    CauchyWitness witness;                  // populated for NotUniformlyCauchy
    std::vector<complex> grid_points;
    std::vector<complex> finite_samples;    // FiniteType: last member's values
    std::vector<double> theta_samples;      // InfiniteType: recovered angle
    std::vector<long long> member_offsets;  // InfiniteType: branch offset
                                            // between consecutive trailing
                                            // members (constant across rays)
    const char* kind_name() const;
};

// Decides whether the polynomial sequence is uniformly d-Cauchy on the grid
// and classifies the limit.  The Cauchy test runs over the trailing
// ceil(len/3) members pairwise (at least two) and reports the first grid
// point, in deterministic scan order, where a pair's d-gap reaches tol.
// A point counts as blowing up when |f_last| > 1/tol; the verdict requires
// at least 99% agreement across the grid, otherwise the regimes are mixed
// and the sequence is reported as not uniformly Cauchy.
LimitVerdict classify_limit(const std::vector<Polynomial>& seq, const RayGrid& grid, double tol);

}  // namespace cbar
