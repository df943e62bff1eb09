#include "cbar/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cbar {

namespace {

double arc_distance(double a, double b) {
    double d = std::fabs(normalize_angle(a) - normalize_angle(b));
    return std::min(d, two_pi - d);
}

std::vector<std::uint32_t> excluded_indices(std::size_t n, const std::vector<SingularNode>& nodes,
                                            double exclusion_arc) {
    std::vector<std::uint32_t> skip;
    for (std::size_t j = 0; j < n; ++j) {
        const double ang = two_pi * static_cast<double>(j) / static_cast<double>(n);
        for (const auto& node : nodes) {
            if (arc_distance(ang, node.angle) < exclusion_arc) {
                skip.push_back(static_cast<std::uint32_t>(j));
                break;
            }
        }
    }
    return skip;
}

}  // namespace

DiscMesh polar_mesh(std::size_t n_boundary, std::size_t n_radial,
                    const std::vector<SingularNode>& nodes, double exclusion_arc) {
    if (n_boundary < 8 || n_radial < 1) throw std::invalid_argument("mesh too small");
    DiscMesh mesh;
    mesh.rings.reserve(n_radial);
    for (std::size_t j = 1; j <= n_radial; ++j) {
        DiscMesh::Ring ring;
        ring.rho = static_cast<double>(j) / static_cast<double>(n_radial);
        ring.n = n_boundary;
        if (j == n_radial) ring.skip = excluded_indices(n_boundary, nodes, exclusion_arc);
        mesh.rings.push_back(std::move(ring));
    }
    mesh.extra.push_back(complex{0.0, 0.0});
    return mesh;
}

DiscMesh verification_mesh(std::size_t n_boundary, std::size_t n_radial,
                           const std::vector<SingularNode>& nodes, double exclusion_arc) {
    if (n_boundary < 8 || n_radial < 2) throw std::invalid_argument("mesh too small");
    DiscMesh mesh;
    const std::size_t nb = 4 * n_boundary;
    DiscMesh::Ring boundary{1.0, nb, excluded_indices(nb, nodes, exclusion_arc)};
    mesh.rings.push_back(std::move(boundary));
    const std::size_t na = n_boundary / 2, nr = n_radial / 2;
    for (std::size_t j = 1; j <= nr; ++j) {
        DiscMesh::Ring ring;
        ring.rho = static_cast<double>(j) / static_cast<double>(nr);
        ring.n = na;
        if (j == nr) ring.skip = excluded_indices(na, nodes, exclusion_arc);
        mesh.rings.push_back(std::move(ring));
    }
    mesh.extra.push_back(complex{0.0, 0.0});
    return mesh;
}

std::vector<double> nearest_kept_angles(const DiscMesh& mesh, double node_angle) {
    const DiscMesh::Ring* boundary = nullptr;
    for (const auto& r : mesh.rings)
        if (r.rho == 1.0 && (!boundary || r.n > boundary->n)) boundary = &r;
    if (!boundary) return {};
    double best_left = -1.0, best_right = -1.0, dl = two_pi, dr = two_pi;
    for (std::size_t j = 0; j < boundary->n; ++j) {
        if (std::binary_search(boundary->skip.begin(), boundary->skip.end(),
                               static_cast<std::uint32_t>(j)))
            continue;
        const double ang = two_pi * static_cast<double>(j) / static_cast<double>(boundary->n);
        const double d = arc_distance(ang, node_angle);
        const double side = std::sin(ang - node_angle);  // >0: counterclockwise of the node
        if (side >= 0.0 && d < dl) {
            dl = d;
            best_left = ang;
        }
        if (side < 0.0 && d < dr) {
            dr = d;
            best_right = ang;
        }
    }
    std::vector<double> out;
    if (best_left >= 0.0) out.push_back(best_left);
    if (best_right >= 0.0) out.push_back(best_right);
    return out;
}

}  // namespace cbar
