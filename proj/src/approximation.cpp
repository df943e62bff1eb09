#include "cbar/approximation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "cbar/classification.hpp"
#include "cbar/fft.hpp"

namespace cbar {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::vector<complex> mesh_points(const DiscMesh& mesh) {
    std::vector<complex> pts;
    pts.reserve(mesh.total());
    for (const auto& ring : mesh.rings) {
        std::size_t s = 0;
        for (std::size_t j = 0; j < ring.n; ++j) {
            if (s < ring.skip.size() && ring.skip[s] == j) {
                ++s;
                continue;
            }
            pts.push_back(std::polar(ring.rho, two_pi * static_cast<double>(j) / static_cast<double>(ring.n)));
        }
    }
    pts.insert(pts.end(), mesh.extra.begin(), mesh.extra.end());
    return pts;
}

// Feasibility bisection for the dilation factor: smallest r (up to the width
// rule) with err(r) below the target.  The width rule is relative to 1 - r so
// that targets needing r extremely close to 1 still resolve.
double bisect_dilation(const std::function<double(double)>& err, double target,
                       const char* stage) {
    double lo = 1e-3, hi = 1.0 - 1e-9;
    if (err(lo) < target) return lo;
    if (!(err(hi) < target))
        throw ApproxError(ApproxError::Kind::Tolerance,
                          std::string(stage) + ": dilation error does not reach the target "
                                               "even with r = 1 - 1e-9");
    int guard = 0;
    while ((hi - lo > 1e-4 || hi - lo > 0.1 * (1.0 - hi)) && ++guard < 400) {
        const double mid = 0.5 * (lo + hi);
        (err(mid) < target ? hi : lo) = mid;
    }
    return hi;
}

struct TaylorFit {
    std::vector<complex> coeffs;
    double ring_err = 0.0;
};

// Smallest-degree Taylor partial sum (coefficients from the Cauchy quadrature
// at radius rho) whose max deviation from f on the ring |w| = r is below the
// target.  Doubles the degree, then refines to a near-minimal prefix.
TaylorFit fit_taylor_on_ring(const std::function<complex(complex)>& f, double r, double rho,
                             double target, int degree_cap, std::size_t ring_n) {
    std::vector<complex> fw(ring_n);
    for (std::size_t j = 0; j < ring_n; ++j)
        fw[j] = f(std::polar(r, two_pi * static_cast<double>(j) / static_cast<double>(ring_n)));

    auto ring_error = [&](const std::vector<complex>& c) {
        const std::vector<complex> pv = eval_on_ring(c, r, ring_n);
        double worst = 0.0;
        for (std::size_t j = 0; j < ring_n; ++j) worst = std::max(worst, std::abs(pv[j] - fw[j]));
        return worst;
    };

    int D = 8;
    std::vector<complex> c;
    double e = 0.0;
    while (true) {
        if (D > degree_cap)
            throw ApproxError(ApproxError::Kind::DegreeCap, "Taylor stage exceeded the degree cap");
        c = taylor_coeffs(f, rho, D + 1);
        e = ring_error(c);
        if (e < target) break;
        if (D == degree_cap)
            throw ApproxError(ApproxError::Kind::DegreeCap,
                              "Taylor stage hit the degree cap at ring error " + std::to_string(e));
        D = std::min(2 * D, degree_cap);
    }
    if (D > 8) {
        // The coefficients are prefixes of one quadrature, so shrinking the
        // degree only needs re-evaluation, not re-sampling.
        int lo = D / 2, hi = D;
        const int step = std::max(D / 16, 1);
        while (hi - lo > step) {
            const int mid = lo + (hi - lo) / 2;
            std::vector<complex> prefix(c.begin(), c.begin() + mid + 1);
            if (ring_error(prefix) < target)
                hi = mid;
            else
                lo = mid;
        }
        if (hi < D) {
            c.resize(static_cast<std::size_t>(hi) + 1);
            e = ring_error(c);
        }
    }
    return TaylorFit{std::move(c), e};
}

std::vector<complex> eval_poly_on_mesh_ring(const Polynomial& Q, const DiscMesh::Ring& ring) {
    if (is_pow2(ring.n) && Q.coeffs().size() > 64) return eval_on_ring(Q.coeffs(), ring.rho, ring.n);
    std::vector<complex> out(ring.n);
    for (std::size_t j = 0; j < ring.n; ++j)
        out[j] = Q.eval(std::polar(ring.rho, two_pi * static_cast<double>(j) / static_cast<double>(ring.n)));
    return out;
}

}  // namespace

double sup_d_error(const std::function<CPoint(complex)>& f, const Polynomial& Q,
                   const DiscMesh& mesh, complex* where) {
    double worst = -1.0;
    complex at{0.0, 0.0};
    for (const auto& ring : mesh.rings) {
        const std::vector<complex> qv = eval_poly_on_mesh_ring(Q, ring);
        std::size_t s = 0;
        for (std::size_t j = 0; j < ring.n; ++j) {
            if (s < ring.skip.size() && ring.skip[s] == j) {
                ++s;
                continue;
            }
            const complex z =
                std::polar(ring.rho, two_pi * static_cast<double>(j) / static_cast<double>(ring.n));
            const double d = metric_d(f(z), CPoint(qv[j]));
            if (d > worst) {
                worst = d;
                at = z;
            }
        }
    }
    for (const complex& z : mesh.extra) {
        const double d = metric_d(f(z), CPoint(Q.eval(z)));
        if (d > worst) {
            worst = d;
            at = z;
        }
    }
    if (where) *where = at;
    return std::max(worst, 0.0);
}

std::pair<Polynomial, ApproxReport> approx_finite_type(const FiniteTypeFunction& f, double eps,
                                                       const ApproxConfig& cfg) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    const auto& nodes = f.singular_nodes();
    const DiscMesh mc = polar_mesh(cfg.grid_boundary, cfg.grid_radial, nodes);
    const DiscMesh mv = verification_mesh(cfg.grid_boundary, cfg.grid_radial, nodes);

    std::vector<complex> dil_pts = mesh_points(mc);
    for (const auto& node : nodes)
        for (double ang : nearest_kept_angles(mv, node.angle))
            dil_pts.push_back(std::polar(1.0, ang));

    std::vector<CPoint> fvals;
    fvals.reserve(dil_pts.size());
    for (const complex& z : dil_pts) fvals.push_back(f.eval(z));

    auto dil_err = [&](double r) {
        double worst = 0.0;
        for (std::size_t i = 0; i < dil_pts.size(); ++i)
            worst = std::max(worst, metric_d(fvals[i], CPoint(f.value(r * dil_pts[i]))));
        return worst;
    };

    auto fval = [&f](complex w) { return f.value(w); };
    auto feval = [&f](complex z) { return f.eval(z); };
    const std::size_t ring_n = next_pow2(std::max<std::size_t>(4096, 4 * cfg.grid_boundary));

    ApproxReport report;
    report.target = f.name();
    report.domain = "disc";
    report.target_epsilon = eps;
    report.grid_size = mv.total();

    for (double split : {0.5, 0.25, 0.125}) {
        const double tgt = eps * split;
        const double r = bisect_dilation(dil_err, tgt, "finite-type");
        TaylorFit fit = fit_taylor_on_ring(fval, r, 0.5 * (1.0 + r), tgt, cfg.degree_cap, ring_n);
        Polynomial Q(std::move(fit.coeffs));
        Q = Q.dilate(r);
        Q.trim();
        const double achieved = sup_d_error(feval, Q, mv);
        if (achieved < eps) {
            report.dilation_r = r;
            report.degree = Q.degree();
            report.achieved_error = achieved;
            return {std::move(Q), report};
        }
    }
    throw ApproxError(ApproxError::Kind::Tolerance,
                      "finite-type approximation missed the target on the verification grid");
}

std::pair<Polynomial, ApproxReport> approx_infinite_type(const InfiniteTypeFunction& f, double eps,
                                                         const ApproxConfig& cfg) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    const DiscMesh mv = verification_mesh(cfg.grid_boundary, cfg.grid_radial);

    const std::size_t nb = 4 * cfg.grid_boundary;
    std::vector<double> bnd_theta(nb);
    for (std::size_t j = 0; j < nb; ++j)
        bnd_theta[j] = f.boundary_theta(two_pi * static_cast<double>(j) / static_cast<double>(nb));
    // theta(z) - theta(rz) is harmonic in z, so its sup over the disc is
    // attained on the boundary circle.
    auto dil_err = [&](double r) {
        double worst = 0.0;
        for (std::size_t j = 0; j < nb; ++j) {
            const double phi = two_pi * static_cast<double>(j) / static_cast<double>(nb);
            worst = std::max(worst, std::fabs(bnd_theta[j] - f.theta(std::polar(r, phi))));
        }
        return worst;
    };

    const Polynomial g = f.conjugate();
    auto feval = [&f](complex z) { return f.eval(z); };
    const std::size_t ring_n = next_pow2(std::max<std::size_t>(4096, 4 * cfg.grid_boundary));

    for (double split : {1.0 / 3.0, 1.0 / 6.0}) {
        const double tgt = eps * split;
        const double r = bisect_dilation(dil_err, tgt, "infinite-type");

        // Re g is harmonic, so min over |w| <= r sits on |w| = r; the safety
        // factor covers the gap between the angle grid and the true minimum.
        double min_eg = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < ring_n; ++j) {
            const complex w = std::polar(r, two_pi * static_cast<double>(j) / static_cast<double>(ring_n));
            min_eg = std::min(min_eg, std::exp(g.eval(w).real()));
        }
        const double delta = 0.9 * min_eg;
        const long long n = static_cast<long long>(std::floor((1.0 / tgt - 1.0) / delta)) + 1;
        if (n < 1) throw ApproxError(ApproxError::Kind::Tolerance, "scaling factor underflow");

        auto h = [&g, n](complex w) { return static_cast<double>(n) * std::exp(g.eval(w)); };
        TaylorFit fit = fit_taylor_on_ring(h, r, 0.5 * (1.0 + r), tgt, cfg.degree_cap, ring_n);
        Polynomial Q(std::move(fit.coeffs));
        Q = Q.dilate(r);
        Q.trim();
        const double achieved = sup_d_error(feval, Q, mv);
        if (achieved < eps) {
            ApproxReport report;
            report.target = f.name();
            report.domain = "disc";
            report.target_epsilon = eps;
            report.dilation_r = r;
            report.degree = Q.degree();
            report.scaling_n = n;
            report.delta = delta;
            report.achieved_error = achieved;
            report.grid_size = mv.total();
            return {std::move(Q), report};
        }
    }
    throw ApproxError(ApproxError::Kind::Tolerance,
                      "infinite-type approximation missed the target on the verification grid");
}

std::pair<TrigPolynomial, ApproxReport> approx_trig_on_circle(const CircleFunction& f, double eps,
                                                              const ApproxConfig& cfg) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    std::size_t n = next_pow2(std::max<std::size_t>(1024, 2 * cfg.grid_boundary));

    std::vector<CPoint> F;
    auto resample = [&](std::size_t count) {
        n = count;
        F.assign(n, CPoint());
        for (std::size_t j = 0; j < n; ++j)
            F[j] = f.eval_angle(two_pi * static_cast<double>(j) / static_cast<double>(n));
    };
    resample(n);

    {
        std::vector<CPoint> closed = F;
        closed.push_back(F[0]);
        const DContinuityResult pre = is_d_continuous(closed, two_pi / static_cast<double>(n));
        if (!pre.continuous)
            throw ApproxError(ApproxError::Kind::DDiscontinuous,
                              "circle target looks d-discontinuous near angle " +
                                  std::to_string(two_pi * static_cast<double>(pre.worst_index) /
                                                 static_cast<double>(n)) +
                                  " (adjacent gap " + std::to_string(pre.worst_gap) + ")");
    }

    double R = 1.0;
    auto clamp_err = [&](double level) {
        double worst = 0.0;
        for (const CPoint& p : F) worst = std::max(worst, metric_d(p, CPoint(phi_r(p, level))));
        return worst;
    };
    while (clamp_err(R) >= eps / 2.0) {
        R *= 2.0;
        if (R > 1e12)
            throw ApproxError(ApproxError::Kind::Tolerance, "clamp level runaway");
    }

    auto clamped_spectrum = [&]() {
        std::vector<complex> h(n);
        for (std::size_t j = 0; j < n; ++j) h[j] = phi_r(F[j], R);
        fft_pow2(h);
        for (auto& c : h) c /= static_cast<double>(n);
        return h;
    };
    std::vector<complex> spec = clamped_spectrum();

    for (int M = 4;; M = std::min(2 * M, cfg.degree_cap)) {
        if (4 * static_cast<std::size_t>(M + 1) > n) {
            resample(next_pow2(4 * static_cast<std::size_t>(M + 1)));
            spec = clamped_spectrum();
        }
        // Fejer mean of order M from the sampled spectrum.
        std::vector<complex> coeffs(2 * M + 1);
        for (int k = -M; k <= M; ++k) {
            const std::size_t src = k >= 0 ? static_cast<std::size_t>(k) : n - static_cast<std::size_t>(-k);
            coeffs[static_cast<std::size_t>(k + M)] =
                spec[src] * (1.0 - std::abs(k) / static_cast<double>(M + 1));
        }
        TrigPolynomial sigma(-M, coeffs);

        // sigma on the sample grid via a zero-padded inverse transform.
        std::vector<complex> padded(n, complex{0.0, 0.0});
        for (int k = -M; k <= M; ++k)
            padded[k >= 0 ? static_cast<std::size_t>(k) : n - static_cast<std::size_t>(-k)] =
                coeffs[static_cast<std::size_t>(k + M)];
        fft_pow2(padded, true);
        double eu = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            eu = std::max(eu, std::abs(static_cast<double>(n) * padded[j] -
                                       phi_r(F[j], R)));
        if (eu < eps / 2.0) {
            // Independent denser verification in the metric itself.
            const std::size_t nv = 2 * n;
            double achieved = 0.0;
            for (std::size_t j = 0; j < nv; ++j) {
                const double phi = two_pi * static_cast<double>(j) / static_cast<double>(nv);
                const double d = metric_d(f.eval_angle(phi), CPoint(sigma.eval_angle(phi)));
                achieved = std::max(achieved, d);
            }
            if (achieved < eps) {
                sigma.trim();
                ApproxReport report;
                report.target = f.name;
                report.domain = "circle";
                report.target_epsilon = eps;
                report.dilation_r = R;
                report.degree = sigma.degree();
                report.achieved_error = achieved;
                report.grid_size = nv;
                return {std::move(sigma), report};
            }
        }
        if (M == cfg.degree_cap)
            throw ApproxError(ApproxError::Kind::DegreeCap,
                              "Fejer stage hit the degree cap (target may be d-discontinuous)");
    }
}

namespace {

// Chebyshev interpolation of degree D in long double, returned in the power
// basis.  The basis change loses roughly 2^D of headroom, which the long
// double accumulation absorbs for the moderate degrees used here.
std::vector<double> cheb_interp_power_basis(const std::function<double(double)>& fn, int D) {
    using ld = long double;
    const int n = D + 1;
    const ld pi_l = 3.14159265358979323846264338327950288L;
    std::vector<ld> vals(n), acoef(n, 0.0L);
    for (int j = 0; j < n; ++j)
        vals[j] = static_cast<ld>(fn(static_cast<double>(std::cos(static_cast<double>(
            pi_l * (j + 0.5L) / n)))));
    for (int k = 0; k < n; ++k) {
        ld s = 0.0L;
        for (int j = 0; j < n; ++j) s += vals[j] * std::cos(static_cast<double>(pi_l * k * (j + 0.5L) / n));
        acoef[k] = s * 2.0L / n;
    }
    acoef[0] /= 2.0L;
    // Accumulate power coefficients through the T_k recurrence.
    std::vector<ld> tkm1(n, 0.0L), tk(n, 0.0L), power(n, 0.0L), tmp(n, 0.0L);
    tkm1[0] = 1.0L;  // T_0
    power[0] = acoef[0];
    if (D >= 1) {
        tk[1] = 1.0L;  // T_1
        for (int i = 0; i <= 1; ++i) power[i] += acoef[1] * tk[i];
    }
    for (int k = 2; k <= D; ++k) {
        std::fill(tmp.begin(), tmp.end(), 0.0L);
        for (int i = 0; i < n - 1; ++i) tmp[i + 1] = 2.0L * tk[i];
        for (int i = 0; i < n; ++i) tmp[i] -= tkm1[i];
        tkm1 = tk;
        tk = tmp;
        for (int i = 0; i <= k; ++i) power[i] += acoef[k] * tk[i];
    }
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = static_cast<double>(power[i]);
    return out;
}

}  // namespace

std::pair<Polynomial, ApproxReport> approx_real_segment(const SegmentFunction& f, double eps,
                                                        const ApproxConfig& cfg) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    const std::size_t ns = std::max<std::size_t>(1025, cfg.grid_boundary * 2 + 1) | 1;
    std::vector<double> xs(ns);
    std::vector<CPoint> F(ns);
    for (std::size_t j = 0; j < ns; ++j) {
        xs[j] = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(ns - 1);
        F[j] = f.eval(xs[j]);
        if (F[j].is_finite() && std::fabs(F[j].value().imag()) >
                                    1e-12 * std::max(1.0, std::fabs(F[j].value().real())))
            throw std::invalid_argument("segment target must be real-valued");
    }

    const DContinuityResult pre = is_d_continuous(F, 2.0 / static_cast<double>(ns - 1));
    if (!pre.continuous)
        throw ApproxError(ApproxError::Kind::DDiscontinuous,
                          "segment target looks d-discontinuous near x = " +
                              std::to_string(xs[pre.worst_index]) + " (adjacent gap " +
                              std::to_string(pre.worst_gap) + ")");

    double R = 1.0;
    auto clamp_err = [&](double level) {
        double worst = 0.0;
        for (const CPoint& p : F) worst = std::max(worst, metric_d(p, CPoint(phi_r(p, level))));
        return worst;
    };
    while (clamp_err(R) >= eps / 2.0) {
        R *= 2.0;
        if (R > 1e12) throw ApproxError(ApproxError::Kind::Tolerance, "clamp level runaway");
    }

    auto clamped = [&](double x) { return phi_r(f.eval(x), R).real(); };

    std::vector<int> degrees;
    for (int d = 2; d <= 64; d += 2) degrees.push_back(d);
    for (int d = 72; d <= 128; d += 8) degrees.push_back(d);
    for (int d = 160; d <= std::min(cfg.degree_cap, 1024); d += 32) degrees.push_back(d);

    for (int D : degrees) {
        if (D > cfg.degree_cap) break;
        const std::vector<double> pw = cheb_interp_power_basis(clamped, D);
        std::vector<complex> cc(pw.size());
        for (std::size_t i = 0; i < pw.size(); ++i) cc[i] = complex{pw[i], 0.0};
        Polynomial P(std::move(cc));
        double build = 0.0;
        for (std::size_t j = 0; j < ns; ++j)
            build = std::max(build, metric_d(F[j], CPoint(P.eval(complex{xs[j], 0.0}))));
        if (build < 0.9 * eps) {
            const std::size_t nv = 4 * (ns - 1) + 1;
            double achieved = 0.0;
            for (std::size_t j = 0; j < nv; ++j) {
                const double x = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(nv - 1);
                achieved = std::max(achieved, metric_d(f.eval(x), CPoint(P.eval(complex{x, 0.0}))));
            }
            if (achieved < eps) {
                P.trim();
                ApproxReport report;
                report.target = f.name;
                report.domain = "segment";
                report.target_epsilon = eps;
                report.dilation_r = R;
                report.degree = P.degree();
                report.achieved_error = achieved;
                report.grid_size = nv;
                return {std::move(P), report};
            }
        }
    }
    throw ApproxError(ApproxError::Kind::DegreeCap,
                      "segment approximation did not reach the tolerance within the degree cap");
}

double StarCompact::radius(double phi) const {
    if (rho.size() < 3) throw std::invalid_argument("star compact needs at least 3 radii");
    const double t = normalize_angle(phi) / two_pi * static_cast<double>(rho.size());
    const std::size_t i0 = std::min<std::size_t>(static_cast<std::size_t>(t), rho.size() - 1);
    const double frac = t - static_cast<double>(i0);
    const double r0 = rho[i0], r1 = rho[(i0 + 1) % rho.size()];
    return r0 + frac * (r1 - r0);
}

StarTarget star_target_from_finite(const FiniteTypeFunction& f) {
    StarTarget t;
    t.name = f.name();
    t.eval = [f](complex z) { return f.value(z); };
    for (const auto& node : f.singular_nodes())
        t.nodes.push_back({std::polar(1.0, node.angle), node.inf_angle});
    return t;
}

std::pair<Polynomial, ApproxReport> approx_star_compact(const StarCompact& L, const StarTarget& f,
                                                        double eps, const ApproxConfig& cfg) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    for (double r : L.rho)
        if (!(r > 0.0)) throw std::invalid_argument("star radial function must be positive");

    auto eval_cpoint = [&](complex z) {
        for (const auto& node : f.nodes)
            if (std::abs(z - node.where) < 1e-9) return CPoint::infinite(node.inf_angle);
        return CPoint(f.eval(z));
    };

    // Mesh over the compact: uniform angles, radial levels, the center; skip
    // boundary samples too close to a singular node.
    const std::size_t na = std::max<std::size_t>(cfg.grid_boundary, L.rho.size());
    const std::size_t nt = std::max<std::size_t>(16, cfg.grid_radial / 4);
    std::vector<complex> pts;
    pts.push_back(L.center);
    for (std::size_t j = 0; j < na; ++j) {
        const double phi = two_pi * static_cast<double>(j) / static_cast<double>(na);
        const complex b = L.boundary(phi);
        bool near_node = false;
        for (const auto& node : f.nodes)
            if (std::abs(b - node.where) < kSingularExclusionArc) near_node = true;
        for (std::size_t k = 1; k <= nt; ++k) {
            if (k == nt && near_node) continue;
            const double t = static_cast<double>(k) / static_cast<double>(nt);
            pts.push_back(L.center + t * (b - L.center));
        }
    }

    std::vector<CPoint> fv;
    fv.reserve(pts.size());
    for (const complex& z : pts) fv.push_back(eval_cpoint(z));
    auto dil_err = [&](double r) {
        double worst = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            worst = std::max(worst,
                             metric_d(fv[i], CPoint(f.eval(L.center + r * (pts[i] - L.center)))));
        return worst;
    };
    const double r = bisect_dilation(dil_err, eps / 2.0, "star");

    // Least squares on the dilated boundary in a scaled monomial basis.
    const std::size_t nls = std::max<std::size_t>(2 * cfg.grid_boundary, 1024);
    std::vector<complex> w(nls), y(nls);
    double scale = 0.0;
    for (std::size_t j = 0; j < nls; ++j) {
        const double phi = two_pi * static_cast<double>(j) / static_cast<double>(nls);
        w[j] = L.center + r * (L.boundary(phi) - L.center);
        y[j] = f.eval(w[j]);
        scale = std::max(scale, std::abs(w[j] - L.center));
    }

    const int star_cap = std::min(cfg.degree_cap, 1024);
    double condition = 0.0;
    for (int D = 4;; D = std::min(2 * D, star_cap)) {
        Eigen::MatrixXcd A(static_cast<Eigen::Index>(nls), D + 1);
        Eigen::VectorXcd rhs(static_cast<Eigen::Index>(nls));
        for (std::size_t j = 0; j < nls; ++j) {
            const complex base = (w[j] - L.center) / scale;
            complex p{1.0, 0.0};
            for (int k = 0; k <= D; ++k) {
                A(static_cast<Eigen::Index>(j), k) = p;
                p *= base;
            }
            rhs(static_cast<Eigen::Index>(j)) = y[j];
        }
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const double smax = svd.singularValues()(0);
        const double smin = svd.singularValues()(svd.singularValues().size() - 1);
        condition = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
        if (!(condition <= 1e12))
            throw ApproxError(ApproxError::Kind::Conditioning,
                              "least-squares basis condition number " + std::to_string(condition) +
                                  " exceeds 1e12 at degree " + std::to_string(D));
        Eigen::VectorXcd x = svd.solve(rhs);

        // Boundary residual on a twice-denser dilated boundary; by the maximum
        // principle this bounds the deviation on the whole dilated compact.
        double resid = 0.0;
        for (std::size_t j = 0; j < 2 * nls; ++j) {
            const double phi = two_pi * static_cast<double>(j) / static_cast<double>(2 * nls);
            const complex wz = L.center + r * (L.boundary(phi) - L.center);
            const complex base = (wz - L.center) / scale;
            complex acc{0.0, 0.0};
            for (int k = D; k >= 0; --k) acc = acc * base + x(k);
            resid = std::max(resid, std::abs(acc - f.eval(wz)));
        }
        if (resid < eps / 2.0) {
            // q(center + r (z - center)) expanded into the power basis.
            using cld = std::complex<long double>;
            const cld c{L.center.real(), L.center.imag()};
            const cld u{r / scale, 0.0};
            std::vector<cld> acc{cld{static_cast<long double>(x(D).real()),
                                     static_cast<long double>(x(D).imag())}};
            for (int k = D - 1; k >= 0; --k) {
                // acc <- acc * u * (z - c) + x_k
                std::vector<cld> nxt(acc.size() + 1, cld{0.0L, 0.0L});
                for (std::size_t i = 0; i < acc.size(); ++i) {
                    const cld t = acc[i] * u;
                    nxt[i + 1] += t;
                    nxt[i] -= t * c;
                }
                nxt[0] += cld{static_cast<long double>(x(k).real()),
                              static_cast<long double>(x(k).imag())};
                acc = std::move(nxt);
            }
            std::vector<complex> qc(acc.size());
            for (std::size_t i = 0; i < acc.size(); ++i)
                qc[i] = complex{static_cast<double>(acc[i].real()),
                                static_cast<double>(acc[i].imag())};
            Polynomial Q(std::move(qc));
            Q.trim();
            double achieved = 0.0;
            for (std::size_t i = 0; i < pts.size(); ++i)
                achieved = std::max(achieved, metric_d(fv[i], CPoint(Q.eval(pts[i]))));
            if (achieved < eps) {
                ApproxReport report;
                report.target = f.name;
                report.domain = "star";
                report.target_epsilon = eps;
                report.dilation_r = r;
                report.degree = Q.degree();
                report.achieved_error = achieved;
                report.grid_size = pts.size();
                report.condition = condition;
                return {std::move(Q), report};
            }
        }
        if (D == star_cap)
            throw ApproxError(ApproxError::Kind::DegreeCap,
                              "star least-squares stage hit the degree cap");
    }
}

}  // namespace cbar
