#pragma once

#include <cstdint>
#include <vector>

#include "cbar/cpoint.hpp"
#include "cbar/disc_functions.hpp"

namespace cbar {

// Polar evaluation grids built from uniform rings.  Uniform power-of-two rings
// let polynomials be evaluated ring-wise with an FFT; `skip` lists excluded
// indices (samples too close to a boundary singular node, where finite-type
// evaluators degenerate).
struct DiscMesh {
    struct Ring {
        double rho;
        std::size_t n;
        std::vector<std::uint32_t> skip;  // sorted excluded indices
    };
    std::vector<Ring> rings;
    std::vector<complex> extra;  // scattered probe points

    std::size_t total() const {
        std::size_t t = extra.size();
        for (const auto& r : rings) t += r.n - r.skip.size();
        return t;
    }
};

inline constexpr double kSingularExclusionArc = 1e-6;

// n_boundary angles x n_radial radii (rho = j/n_radial, j = 1..n_radial) plus
// the center.  Boundary samples within the exclusion arc of a singular node
// are dropped, so every kept sample sits at arc distance >= 1e-6 from the
// nodes.
DiscMesh polar_mesh(std::size_t n_boundary, std::size_t n_radial,
                    const std::vector<SingularNode>& nodes = {},
                    double exclusion_arc = kSingularExclusionArc);

// Independent verification grid: a boundary ring 4x denser plus a coarser
// interior grid ((n_boundary/2) angles x (n_radial/2) radii) and the center.
DiscMesh verification_mesh(std::size_t n_boundary, std::size_t n_radial,
                           const std::vector<SingularNode>& nodes = {},
                           double exclusion_arc = kSingularExclusionArc);

// Kept boundary angles of the mesh's densest boundary ring that are nearest to
// the given node angle (one on each side); used as dilation probes.
std::vector<double> nearest_kept_angles(const DiscMesh& mesh, double node_angle);

}  // namespace cbar
