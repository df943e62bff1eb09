#include "cbar/classification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cbar {

ArgTrace continuous_arg(const std::vector<complex>& samples) {
    if (samples.empty()) throw std::invalid_argument("continuous_arg needs at least one sample");
    ArgTrace trace;
    trace.values.reserve(samples.size());
    if (samples.front() == complex{0.0, 0.0})
        throw std::domain_error("continuous_arg: zero sample at index 0");
    trace.values.push_back(std::arg(samples.front()));
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i] == complex{0.0, 0.0})
            throw std::domain_error("continuous_arg: zero sample at index " + std::to_string(i));
        const complex ratio = samples[i] / samples[i - 1];
        if (ratio.real() < 0.0 && std::fabs(ratio.imag()) <= 1e-12 * std::abs(ratio))
            throw std::domain_error(
                "continuous_arg: near-antipodal step at index " + std::to_string(i) +
                "; the path is too coarse to pick a turning direction");
        const double delta = std::arg(ratio);
        trace.values.push_back(trace.values.back() + delta);
        trace.total_variation += std::fabs(delta);
    }
    trace.branch_offset =
        std::llround((trace.values.back() - std::arg(samples.back())) / two_pi);
    return trace;
}

DContinuityResult is_d_continuous(const std::vector<CPoint>& samples, double h) {
    if (samples.size() < 3) throw std::invalid_argument("is_d_continuous needs at least 3 samples");
    if (!(h > 0.0)) throw std::invalid_argument("is_d_continuous needs h > 0");
    DContinuityResult res;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const double g = metric_d(samples[i], samples[i + 1]);
        if (g > res.max_gap) {
            res.max_gap = g;
            res.worst_index = i;
            res.worst_gap = g;
        }
    }
    for (std::size_t i = 0; i + 2 < samples.size(); i += 2)
        res.coarse_gap = std::max(res.coarse_gap, metric_d(samples[i], samples[i + 2]));
    res.continuous = res.max_gap <= std::max(1e-9, 0.9 * res.coarse_gap);
    return res;
}

std::vector<complex> RayGrid::points() const {
    if (n_rays < 8 || n_radii < 2) throw std::invalid_argument("degenerate classification grid");
    std::vector<complex> pts;
    pts.reserve(1 + n_rays * n_radii);
    pts.emplace_back(0.0, 0.0);
    for (std::size_t j = 0; j < n_rays; ++j) {
        const double phi = two_pi * static_cast<double>(j) / static_cast<double>(n_rays);
        for (std::size_t k = 1; k <= n_radii; ++k)
            pts.push_back(std::polar(static_cast<double>(k) / static_cast<double>(n_radii), phi));
    }
    return pts;
}

const char* LimitVerdict::kind_name() const {
    switch (kind) {
        case Kind::NotUniformlyCauchy: return "NotUniformlyCauchy";
        case Kind::FiniteType: return "FiniteType";
        case Kind::InfiniteType: return "InfiniteType";
    }
    return "unknown";
}

namespace {

LimitVerdict bail(std::vector<complex> grid_points, CauchyWitness w) {
    LimitVerdict v;
    v.kind = LimitVerdict::Kind::NotUniformlyCauchy;
    v.witness = std::move(w);
    v.grid_points = std::move(grid_points);
    return v;
}

}  // namespace

LimitVerdict classify_limit(const std::vector<Polynomial>& seq, const RayGrid& grid, double tol) {
    if (seq.size() < 3) throw std::invalid_argument("classify_limit needs at least 3 polynomials");
    if (!(tol > 0.0)) throw std::invalid_argument("classify_limit needs tol > 0");
    const std::vector<complex> pts = grid.points();
    const std::size_t npts = pts.size();

    const std::size_t tail = std::max<std::size_t>(2, (seq.size() + 2) / 3);
    const std::size_t first = seq.size() - tail;

    std::vector<std::vector<complex>> vals(tail, std::vector<complex>(npts));
    for (std::size_t m = 0; m < tail; ++m)
        for (std::size_t p = 0; p < npts; ++p) vals[m][p] = seq[first + m].eval(pts[p]);

    // Pairwise d-Cauchy test over the trailing members; the witness is the
    // first violation in scan order (pairs lexicographic, points in grid
    // order), which makes reruns reproducible.
    for (std::size_t a = 0; a < tail; ++a)
        for (std::size_t b = a + 1; b < tail; ++b)
            for (std::size_t p = 0; p < npts; ++p) {
                const double gap = metric_d(CPoint(vals[a][p]), CPoint(vals[b][p]));
                if (gap >= tol)
                    return bail(pts, CauchyWitness{pts[p], first + a, first + b, gap,
                                                   "trailing d-gap at or above tol"});
            }

    const std::vector<complex>& last = vals.back();
    std::size_t blowing = 0;
    std::size_t sample_blow = npts, sample_stay = npts;
    for (std::size_t p = 0; p < npts; ++p) {
        if (std::abs(last[p]) > 1.0 / tol) {
            ++blowing;
            if (sample_blow == npts) sample_blow = p;
        } else if (sample_stay == npts) {
            sample_stay = p;
        }
    }
    const double frac = static_cast<double>(blowing) / static_cast<double>(npts);

    if (frac <= 0.01) {
        LimitVerdict v;
        v.kind = LimitVerdict::Kind::FiniteType;
        v.grid_points = pts;
        v.finite_samples = last;
        return v;
    }
    if (frac < 0.99) {
        CauchyWitness w;
        w.z = pts[sample_blow];
        w.first = seq.size() - 1;
        w.second = seq.size() - 1;
        w.gap = std::abs(last[sample_blow]);
        w.note = "mixed regimes: " + std::to_string(100.0 * frac) +
                 "% of grid points blow up while e.g. z = (" +
                 std::to_string(pts[sample_stay].real()) + ", " +
                 std::to_string(pts[sample_stay].imag()) + ") stays bounded";
        return bail(pts, std::move(w));
    }

    // Infinite type: recover the angle of each trailing member by unwrapping
    // outward along rays from the shared center sample, then reconcile the
    // rays on the mid-radius circle (the continuation lives in the open disc,
    // where the limit angle is continuous).
    const std::size_t K = grid.n_radii;
    const std::size_t J = grid.n_rays;
    const std::size_t kmid = std::max<std::size_t>(1, K / 2);
    auto idx = [K](std::size_t j, std::size_t k) { return 1 + j * K + (k - 1); };

    std::vector<std::vector<double>> theta(tail);
    try {
        for (std::size_t m = 0; m < tail; ++m) {
            std::vector<double>& th = theta[m];
            th.assign(npts, 0.0);
            if (vals[m][0] == complex{0.0, 0.0})
                throw std::domain_error("zero sample at the grid center");
            th[0] = std::arg(vals[m][0]);
            std::vector<complex> path(K + 1);
            for (std::size_t j = 0; j < J; ++j) {
                path[0] = vals[m][0];
                for (std::size_t k = 1; k <= K; ++k) path[k] = vals[m][idx(j, k)];
                const ArgTrace trace = continuous_arg(path);
                for (std::size_t k = 1; k <= K; ++k) th[idx(j, k)] = trace.values[k];
            }
            // Azimuthal pass: unwrap around the mid circle and snap each ray
            // by the 2*pi multiple separating the two continuations.
            std::vector<complex> circle(J + 1);
            for (std::size_t j = 0; j < J; ++j) circle[j] = vals[m][idx(j, kmid)];
            circle[J] = circle[0];
            const ArgTrace around = continuous_arg(circle);
            const long long winding = std::llround((around.values[J] - around.values[0]) / two_pi);
            if (winding != 0) {
                CauchyWitness w;
                w.z = pts[idx(0, kmid)];
                w.first = w.second = first + m;
                w.gap = static_cast<double>(winding);
                w.note = "argument winds " + std::to_string(winding) +
                         " times around the mid circle; no continuous angle exists";
                return bail(pts, std::move(w));
            }
            const double align0 = th[idx(0, kmid)] - around.values[0];
            for (std::size_t j = 0; j < J; ++j) {
                const double corr = (around.values[j] + align0) - th[idx(j, kmid)];
                const long long kj = std::llround(corr / two_pi);
                if (std::fabs(corr - two_pi * static_cast<double>(kj)) > 1e-6) {
                    CauchyWitness w;
                    w.z = pts[idx(j, kmid)];
                    w.first = w.second = first + m;
                    w.gap = corr;
                    w.note = "radial and azimuthal argument continuations disagree";
                    return bail(pts, std::move(w));
                }
                if (kj != 0)
                    for (std::size_t k = 1; k <= K; ++k)
                        th[idx(j, k)] += two_pi * static_cast<double>(kj);
            }
        }
    } catch (const std::domain_error& e) {
        CauchyWitness w;
        w.note = std::string("argument recovery failed: ") + e.what();
        return bail(pts, std::move(w));
    }

    // Branch offsets between consecutive members must not depend on the ray.
    std::vector<long long> offsets;
    for (std::size_t m = 0; m + 1 < tail; ++m) {
        long long common = 0;
        for (std::size_t j = 0; j < J; ++j) {
            const double diff = theta[m + 1][idx(j, kmid)] - theta[m][idx(j, kmid)];
            const long long o = std::llround(diff / two_pi);
            if (j == 0) {
                common = o;
            } else if (o != common) {
                CauchyWitness w;
                w.z = pts[idx(j, kmid)];
                w.first = first + m;
                w.second = first + m + 1;
                w.gap = diff;
                w.note = "branch offsets between consecutive members differ across rays";
                return bail(pts, std::move(w));
            }
        }
        offsets.push_back(common);
    }

    LimitVerdict v;
    v.kind = LimitVerdict::Kind::InfiniteType;
    v.grid_points = pts;
    v.theta_samples = std::move(theta.back());
    v.member_offsets = std::move(offsets);
    return v;
}

}  // namespace cbar
