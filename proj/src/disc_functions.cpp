#include "cbar/disc_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "cbar/fft.hpp"

namespace cbar {

namespace {

void check_in_disc(complex z) {
    if (std::abs(z) > 1.0 + kDomainSlack)
        throw std::invalid_argument("evaluation point outside the closed unit disc");
}

// Gauss-Legendre nodes/weights on [-1, 1], order 16.
constexpr int kGLOrder = 16;
constexpr double kGLNode[kGLOrder / 2] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499,
};
constexpr double kGLWeight[kGLOrder / 2] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541,
};

}  // namespace

CPoint FiniteTypeFunction::eval(complex z) const {
    check_in_disc(z);
    for (const auto& node : nodes_) {
        if (std::abs(z - std::polar(1.0, node.angle)) <= 1e-12)
            return CPoint::infinite(node.inf_angle);
    }
    return CPoint(eval_(z));
}

InfiniteTypeFunction::InfiniteTypeFunction(std::string name, std::vector<double> a,
                                           std::vector<double> b)
    : name_(std::move(name)), a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty()) a_.push_back(0.0);
    b_.resize(a_.size(), 0.0);
    b_[0] = 0.0;
}

double InfiniteTypeFunction::theta(complex z) const {
    check_in_disc(z);
    // theta = a0 + Re H(z) with H(z) = sum_{m>=1} (a_m - i b_m) z^m.
    complex acc{0.0, 0.0};
    for (std::size_t m = a_.size(); m-- > 1;) acc = (acc + complex{a_[m], -b_[m]}) * z;
    return a_[0] + acc.real();
}

double InfiniteTypeFunction::boundary_theta(double phi) const {
    return theta(std::polar(1.0, phi));
}

Polynomial InfiniteTypeFunction::conjugate() const { return harmonic_conjugate(a_, b_); }

InfiniteTypeFunction InfiniteTypeFunction::from_boundary_samples(std::string name,
                                                                 const std::vector<double>& samples,
                                                                 int M, bool fejer) {
    const std::size_t n = samples.size();
    if (n < 2 * static_cast<std::size_t>(M) + 2)
        throw std::invalid_argument("need more than 2M boundary samples");
    if ((n & (n - 1)) != 0) throw std::invalid_argument("sample count must be a power of two");
    std::vector<complex> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(samples[j])) throw std::invalid_argument("non-finite boundary sample");
        x[j] = complex{samples[j], 0.0};
    }
    fft_pow2(x);
    std::vector<double> a(M + 1), b(M + 1, 0.0);
    a[0] = x[0].real() / static_cast<double>(n);
    for (int m = 1; m <= M; ++m) {
        const double w = fejer ? 1.0 - static_cast<double>(m) / (M + 1) : 1.0;
        a[m] = w * 2.0 * x[m].real() / static_cast<double>(n);
        b[m] = w * -2.0 * x[m].imag() / static_cast<double>(n);
    }
    return InfiniteTypeFunction(std::move(name), std::move(a), std::move(b));
}

double poisson_extend(const std::vector<double>& a, const std::vector<double>& b, complex z) {
    return InfiniteTypeFunction("", a, b).theta(z);
}

Polynomial harmonic_conjugate(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty()) throw std::invalid_argument("empty coefficient list");
    std::vector<complex> g(a.size());
    g[0] = complex{0.0, a[0]};
    for (std::size_t m = 1; m < a.size(); ++m) {
        const double bm = m < b.size() ? b[m] : 0.0;
        g[m] = complex{bm, a[m]};
    }
    return Polynomial(std::move(g));
}

std::vector<complex> taylor_coeffs(const std::function<complex(complex)>& f, double rho, int N) {
    if (N <= 0) throw std::invalid_argument("coefficient count must be positive");
    if (!(rho > 0.0) || !(rho < 1.0)) throw std::invalid_argument("radius must lie in (0, 1)");
    const std::size_t Q = next_pow2(std::max<std::size_t>(4 * static_cast<std::size_t>(N), 256));
    std::vector<complex> x(Q);
    for (std::size_t j = 0; j < Q; ++j) {
        const complex w = std::polar(rho, two_pi * static_cast<double>(j) / static_cast<double>(Q));
        const complex v = f(w);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("non-finite sample in Taylor quadrature");
        x[j] = v;
    }
    fft_pow2(x);
    std::vector<complex> c(N);
    double rinv = 1.0;
    for (int k = 0; k < N; ++k) {
        c[k] = x[k] * (rinv / static_cast<double>(Q));
        rinv /= rho;
    }
    return c;
}

// Catalog ------------------------------------------------------------------

FiniteTypeFunction make_const_target(complex value) {
    return FiniteTypeFunction("const", [value](complex) { return value; });
}

FiniteTypeFunction make_poly_target(const Polynomial& p) {
    return FiniteTypeFunction("poly", [p](complex z) { return p.eval(z); });
}

FiniteTypeFunction make_exp_target() {
    return FiniteTypeFunction("exp", [](complex z) { return std::exp(z); });
}

FiniteTypeFunction make_log1m_target() {
    return make_logsum_target({LogSumTerm{complex{1.0, 0.0}, 0.0}});
}

FiniteTypeFunction make_logsum_target(const std::vector<LogSumTerm>& terms) {
    if (terms.empty()) throw std::invalid_argument("log-sum needs at least one term");
    std::vector<SingularNode> nodes;
    nodes.reserve(terms.size());
    for (const auto& t : terms) {
        if (t.c == complex{0.0, 0.0}) throw std::invalid_argument("log-sum coefficient is zero");
        nodes.push_back({normalize_angle(t.theta), normalize_angle(std::arg(t.c))});
    }
    auto eval = [terms](complex z) {
        // log(1/(e^{it} - z)) = -it - log(1 - e^{-it} z); the argument of the
        // principal log stays in the right half plane for |z| <= 1.
        complex acc{0.0, 0.0};
        for (const auto& t : terms)
            acc += t.c * (complex{0.0, -t.theta} - std::log(1.0 - std::polar(1.0, -t.theta) * z));
        return acc;
    };
    std::string name = terms.size() == 1 && terms[0].c == complex{1.0, 0.0} && terms[0].theta == 0.0
                           ? "log1m"
                           : "logsum";
    return FiniteTypeFunction(std::move(name), std::move(eval), std::move(nodes));
}

InfiniteTypeFunction make_inf_const_target(double theta0) {
    return InfiniteTypeFunction("inf-const", {theta0}, {0.0});
}

InfiniteTypeFunction make_inf_re_target() {
    return InfiniteTypeFunction("inf-re", {0.0, 1.0}, {0.0, 0.0});
}

InfiniteTypeFunction make_inf_fourier_target(std::vector<double> a, std::vector<double> b) {
    return InfiniteTypeFunction("inf-fourier", std::move(a), std::move(b));
}

InfiniteTypeFunction make_inf_arg_pow_target(double base, int power, int M) {
    if (!(base > 1.0)) throw std::invalid_argument("base must exceed 1");
    std::vector<double> a(M + 1, 0.0), b(M + 1, 0.0);
    double bm = 1.0;
    for (int m = 1; m <= M; ++m) {
        bm /= base;
        b[m] = (m % 2 == 1 ? 1.0 : -1.0) * power * bm / m;
    }
    return InfiniteTypeFunction("inf-arg-pow", std::move(a), std::move(b));
}

SegmentFunction make_invx_target() {
    return SegmentFunction{"invx", [](double x) {
                               if (x == 0.0) return CPoint::infinite(0.0);
                               return CPoint(complex{1.0 / x, 0.0});
                           }};
}

SegmentFunction make_invx2_target() {
    return SegmentFunction{"invx2", [](double x) {
                               if (x == 0.0) return CPoint::infinite(0.0);
                               return CPoint(complex{1.0 / (x * x), 0.0});
                           }};
}

SegmentFunction make_segment_poly_target(const Polynomial& p) {
    return SegmentFunction{"poly", [p](double x) { return CPoint(p.eval(complex{x, 0.0})); }};
}

CircleFunction make_circle_inf_angle_target() {
    return CircleFunction{"inf-angle", [](double phi) { return CPoint::infinite(phi); }};
}

CircleFunction make_circle_tan_half_target() {
    return CircleFunction{"tan-half", [](double phi) {
                              const double t = normalize_angle(phi);
                              if (t == std::numbers::pi_v<double>) return CPoint::infinite(0.0);
                              return CPoint(complex{std::tan(t / 2.0), 0.0});
                          }};
}

CircleFunction restrict_to_circle(const FiniteTypeFunction& f) {
    return CircleFunction{f.name(), [f](double phi) { return f.eval(std::polar(1.0, phi)); }};
}

CircleFunction restrict_to_circle(const InfiniteTypeFunction& f) {
    return CircleFunction{f.name(),
                          [f](double phi) { return CPoint::infinite(f.boundary_theta(phi)); }};
}

complex boundary_mean_value(const FiniteTypeFunction& f, double exclusion_radius) {
    // Arc endpoints: singular node angles padded by the exclusion radius.
    std::vector<double> cuts;
    for (const auto& node : f.singular_nodes()) cuts.push_back(node.angle);
    std::sort(cuts.begin(), cuts.end());

    auto integrate_panel = [&f](double lo, double hi) {
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        complex acc{0.0, 0.0};
        for (int i = 0; i < kGLOrder / 2; ++i) {
            acc += kGLWeight[i] * (f.value(std::polar(1.0, mid + half * kGLNode[i])) +
                                   f.value(std::polar(1.0, mid - half * kGLNode[i])));
        }
        return acc * half;
    };
    // Panels graded geometrically toward each (possibly singular) arc endpoint.
    auto integrate_arc = [&](double lo, double hi) {
        complex acc{0.0, 0.0};
        const double len = hi - lo;
        if (len <= 0.0) return acc;
        double step = std::min(exclusion_radius, len / 4.0);
        double a = lo;
        while (a + step < lo + len / 2.0) {
            acc += integrate_panel(a, a + step);
            a += step;
            step *= 2.0;
        }
        double b = hi;
        step = std::min(exclusion_radius, len / 4.0);
        std::vector<std::pair<double, double>> right;
        while (b - step > lo + len / 2.0) {
            right.emplace_back(b - step, b);
            b -= step;
            step *= 2.0;
        }
        acc += integrate_panel(a, b);
        for (auto it = right.rbegin(); it != right.rend(); ++it)
            acc += integrate_panel(it->first, it->second);
        return acc;
    };

    complex total{0.0, 0.0};
    if (cuts.empty()) {
        total = integrate_arc(0.0, two_pi);
    } else {
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            const double lo = cuts[i] + exclusion_radius;
            const double hi = (i + 1 < cuts.size() ? cuts[i + 1] : cuts[0] + two_pi) -
                              exclusion_radius;
            total += integrate_arc(lo, hi);
        }
    }
    return total / two_pi;
}

}  // namespace cbar
