// Python bindings for the core operations: the compactified-plane metric,
// polynomial approximation of disc targets, and limit classification.
// Reports and verdicts cross the boundary as plain dicts so the Python side
// has no wrapper types to keep in sync.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "cbar/approximation.hpp"
#include "cbar/classification.hpp"
#include "cbar/cpoint.hpp"
#include "cbar/disc_functions.hpp"
#include "cbar/mesh.hpp"
#include "cbar/polynomial.hpp"

namespace py = pybind11;

namespace {

using cbar::complex;
using cbar::CPoint;
using cbar::Polynomial;

py::dict report_dict(const cbar::ApproxReport& r) {
    py::dict d;
    d["target"] = r.target;
    d["domain"] = r.domain;
    d["target_epsilon"] = r.target_epsilon;
    d["dilation_r"] = r.dilation_r;
    d["degree"] = r.degree;
    d["achieved_error"] = r.achieved_error;
    d["grid_size"] = r.grid_size;
    if (r.scaling_n >= 0) d["scaling_n"] = r.scaling_n;
    if (r.delta > 0.0) d["delta"] = r.delta;
    if (r.condition > 0.0) d["condition"] = r.condition;
    return d;
}

py::dict verdict_dict(const cbar::LimitVerdict& v) {
    py::dict d;
    d["kind"] = std::string(v.kind_name());
    d["grid_points"] = v.grid_points;
    if (v.kind == cbar::LimitVerdict::Kind::NotUniformlyCauchy) {
        py::dict w;
        w["z"] = v.witness.z;
        w["first_member"] = v.witness.first;
        w["second_member"] = v.witness.second;
        w["gap"] = v.witness.gap;
        w["note"] = v.witness.note;
        d["witness"] = w;
    }
    if (!v.finite_samples.empty()) d["finite_samples"] = v.finite_samples;
    if (!v.theta_samples.empty()) d["theta_samples"] = v.theta_samples;
    if (!v.member_offsets.empty()) d["member_offsets"] = v.member_offsets;
    return d;
}

std::string complex_repr(complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.17g%+.17gj)", z.real(), z.imag());
    return std::string(buf);
}

}  // namespace

PYBIND11_MODULE(_cbar, m) {
    m.doc() = "Metric of the circle-of-directions compactification of the plane, "
              "polynomial approximation on the disc, and limit classification";

    py::register_exception<cbar::ApproxError>(m, "ApproxError");

    py::class_<CPoint>(m, "CPoint")
        .def(py::init<complex>(), py::arg("z"))
        .def_static("finite", &CPoint::finite, py::arg("z"))
        .def_static("infinite", &CPoint::infinite, py::arg("theta"))
        .def_property_readonly("is_finite", &CPoint::is_finite)
        .def_property_readonly("is_infinite", &CPoint::is_infinite)
        .def_property_readonly("value", &CPoint::value)
        .def_property_readonly("angle", &CPoint::angle)
        .def("__eq__", [](const CPoint& a, const CPoint& b) { return a == b; }, py::is_operator())
        .def("__repr__", [](const CPoint& p) {
            if (p.is_infinite()) return "CPoint.infinite(" + std::to_string(p.angle()) + ")";
            return "CPoint(" + complex_repr(p.value()) + ")";
        });

    m.def("metric_d", &cbar::metric_d, py::arg("p"), py::arg("q"),
          "Distance between chart images; the metric of the compactification");
    m.def("gmap", &cbar::gmap, py::arg("p"), "Chart: z/(1+|z|), direction angles to the unit circle");
    m.def("chi", [](const CPoint& p, const CPoint& q) {
              return cbar::chordal_chi(cbar::phi(p), cbar::phi(q));
          },
          py::arg("p"), py::arg("q"), "Chordal distance after collapsing all infinite directions");
    m.def("phi_r", &cbar::phi_r, py::arg("p"), py::arg("R"),
          "Radial clamp: identity below |z| = R, projection onto that circle beyond");
    m.def("normalize_angle", &cbar::normalize_angle, py::arg("theta"));

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<std::vector<complex>>(), py::arg("coeffs"))
        .def_property_readonly("coeffs", [](const Polynomial& p) { return p.coeffs(); })
        .def_property_readonly("degree", &Polynomial::degree)
        .def("__call__", &Polynomial::eval, py::arg("z"))
        .def("dilate", &Polynomial::dilate, py::arg("r"))
        .def("__repr__", [](const Polynomial& p) {
            return "Polynomial(degree=" + std::to_string(p.degree()) + ")";
        });

    py::class_<cbar::TrigPolynomial>(m, "TrigPolynomial")
        .def_property_readonly("min_k", &cbar::TrigPolynomial::min_k)
        .def_property_readonly("max_k", &cbar::TrigPolynomial::max_k)
        .def_property_readonly("degree", &cbar::TrigPolynomial::degree)
        .def_property_readonly("coeffs", [](const cbar::TrigPolynomial& t) { return t.coeffs(); })
        .def("eval_angle", &cbar::TrigPolynomial::eval_angle, py::arg("phi"));

    py::class_<cbar::FiniteTypeFunction>(m, "FiniteTypeFunction")
        .def_property_readonly("name", &cbar::FiniteTypeFunction::name)
        .def("__call__", &cbar::FiniteTypeFunction::eval, py::arg("z"));

    py::class_<cbar::InfiniteTypeFunction>(m, "InfiniteTypeFunction")
        .def_property_readonly("name", &cbar::InfiniteTypeFunction::name)
        .def("theta", &cbar::InfiniteTypeFunction::theta, py::arg("z"))
        .def("__call__", &cbar::InfiniteTypeFunction::eval, py::arg("z"));

    py::class_<cbar::SegmentFunction>(m, "SegmentFunction")
        .def_readonly("name", &cbar::SegmentFunction::name)
        .def("__call__", [](const cbar::SegmentFunction& f, double x) { return f.eval(x); },
             py::arg("x"));

    py::class_<cbar::CircleFunction>(m, "CircleFunction")
        .def_readonly("name", &cbar::CircleFunction::name)
        .def("__call__", [](const cbar::CircleFunction& f, double phi) { return f.eval_angle(phi); },
             py::arg("phi"));

    m.def("const_target", &cbar::make_const_target, py::arg("value"));
    m.def("poly_target", &cbar::make_poly_target, py::arg("p"));
    m.def("exp_target", &cbar::make_exp_target);
    m.def("log1m_target", &cbar::make_log1m_target);
    m.def("inf_const_target", &cbar::make_inf_const_target, py::arg("theta0"));
    m.def("inf_re_target", &cbar::make_inf_re_target);
    m.def("inf_arg_pow_target", &cbar::make_inf_arg_pow_target, py::arg("base"), py::arg("power"),
          py::arg("bandwidth") = 64);
    m.def("invx_target", &cbar::make_invx_target);
    m.def("invx2_target", &cbar::make_invx2_target);
    m.def("circle_inf_angle_target", &cbar::make_circle_inf_angle_target);
    m.def("circle_tan_half_target", &cbar::make_circle_tan_half_target);

    py::class_<cbar::ApproxConfig>(m, "ApproxConfig")
        .def(py::init<>())
        .def_readwrite("grid_boundary", &cbar::ApproxConfig::grid_boundary)
        .def_readwrite("grid_radial", &cbar::ApproxConfig::grid_radial)
        .def_readwrite("degree_cap", &cbar::ApproxConfig::degree_cap)
        .def_readwrite("seed", &cbar::ApproxConfig::seed);

    m.def("approx_finite_type",
          [](const cbar::FiniteTypeFunction& f, double eps, const cbar::ApproxConfig& cfg) {
              auto [q, rep] = cbar::approx_finite_type(f, eps, cfg);
              return py::make_tuple(std::move(q), report_dict(rep));
          },
          py::arg("f"), py::arg("eps"), py::arg("cfg") = cbar::ApproxConfig{},
          "Polynomial within eps of f in the sup of the compactification metric "
          "over the verification grid; returns (polynomial, report)");
    m.def("approx_infinite_type",
          [](const cbar::InfiniteTypeFunction& f, double eps, const cbar::ApproxConfig& cfg) {
              auto [q, rep] = cbar::approx_infinite_type(f, eps, cfg);
              return py::make_tuple(std::move(q), report_dict(rep));
          },
          py::arg("f"), py::arg("eps"), py::arg("cfg") = cbar::ApproxConfig{});
    m.def("approx_trig_on_circle",
          [](const cbar::CircleFunction& f, double eps, const cbar::ApproxConfig& cfg) {
              auto [t, rep] = cbar::approx_trig_on_circle(f, eps, cfg);
              return py::make_tuple(std::move(t), report_dict(rep));
          },
          py::arg("f"), py::arg("eps"), py::arg("cfg") = cbar::ApproxConfig{});
    m.def("approx_real_segment",
          [](const cbar::SegmentFunction& f, double eps, const cbar::ApproxConfig& cfg) {
              auto [q, rep] = cbar::approx_real_segment(f, eps, cfg);
              return py::make_tuple(std::move(q), report_dict(rep));
          },
          py::arg("f"), py::arg("eps"), py::arg("cfg") = cbar::ApproxConfig{});

    m.def("sup_d_error",
          [](const cbar::FiniteTypeFunction& f, const Polynomial& q, std::size_t n_boundary,
             std::size_t n_radial) {
              auto feval = [&f](complex z) { return f.eval(z); };
              return cbar::sup_d_error(feval, q, cbar::polar_mesh(n_boundary, n_radial, f.singular_nodes()));
          },
          py::arg("f"), py::arg("q"), py::arg("n_boundary") = 256, py::arg("n_radial") = 64,
          "Sup of d(f, q) over a polar grid that skips singular nodes");
    m.def("sup_d_error_inf",
          [](const cbar::InfiniteTypeFunction& f, const Polynomial& q, std::size_t n_boundary,
             std::size_t n_radial) {
              auto feval = [&f](complex z) { return f.eval(z); };
              return cbar::sup_d_error(feval, q, cbar::polar_mesh(n_boundary, n_radial));
          },
          py::arg("f"), py::arg("q"), py::arg("n_boundary") = 256, py::arg("n_radial") = 64);

    m.def("classify_limit",
          [](const std::vector<Polynomial>& seq, double tol, std::size_t n_rays, std::size_t n_radii) {
              return verdict_dict(cbar::classify_limit(seq, cbar::RayGrid{n_rays, n_radii}, tol));
          },
          py::arg("seq"), py::arg("tol"), py::arg("n_rays") = 64, py::arg("n_radii") = 64,
          "Uniform-Cauchy check plus finite/infinite limit classification on a ray grid");

    m.def("is_d_continuous",
          [](const std::vector<CPoint>& samples, double h) {
              const cbar::DContinuityResult r = cbar::is_d_continuous(samples, h);
              py::dict d;
              d["continuous"] = r.continuous;
              d["max_gap"] = r.max_gap;
              d["coarse_gap"] = r.coarse_gap;
              d["worst_index"] = r.worst_index;
              d["worst_gap"] = r.worst_gap;
              return d;
          },
          py::arg("samples"), py::arg("h"));

    m.def("continuous_arg",
          [](const std::vector<complex>& samples) {
              const cbar::ArgTrace t = cbar::continuous_arg(samples);
              return py::make_tuple(t.values, t.branch_offset, t.total_variation);
          },
          py::arg("samples"),
          "Unwrapped argument along a path: (values, branch_offset, total_variation)");
}
