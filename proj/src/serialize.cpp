#include "cbar/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace cbar {

std::string hex_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot serialize a non-finite value");
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::hex);
    std::string s(buf, res.ptr);
    return s.front() == '-' ? "-0x" + s.substr(1) : "0x" + s;
}

double parse_number(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty numeric literal");
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + s.size())
        throw std::invalid_argument("cannot parse numeric literal '" + s + "' (stopped at offset " +
                                    std::to_string(end - begin) + ")");
    if (!std::isfinite(v))
        throw std::invalid_argument("numeric literal '" + s + "' is out of range");
    return v;
}

nlohmann::ordered_json json_complex(const complex& z) {
    return nlohmann::ordered_json::array({hex_double(z.real()), hex_double(z.imag())});
}

namespace {

double number_from_json(const nlohmann::ordered_json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_number(j.get<std::string>());
    throw std::invalid_argument("expected a number or numeric string, got " + j.dump());
}

}  // namespace

complex complex_from_json(const nlohmann::ordered_json& j) {
    if (j.is_array()) {
        if (j.size() != 2)
            throw std::invalid_argument("complex value must be an [re, im] pair, got " + j.dump());
        return complex{number_from_json(j[0]), number_from_json(j[1])};
    }
    return complex{number_from_json(j), 0.0};
}

nlohmann::ordered_json report_to_json(const ApproxReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "approx_report";
    j["target"] = r.target;
    j["domain"] = r.domain;
    j["target_epsilon"] = hex_double(r.target_epsilon);
    j["dilation_r"] = hex_double(r.dilation_r);
    j["degree"] = r.degree;
    if (r.scaling_n >= 0) j["scaling_n"] = r.scaling_n;
    if (r.delta > 0.0) j["delta"] = hex_double(r.delta);
    j["achieved_error"] = hex_double(r.achieved_error);
    j["grid_size"] = r.grid_size;
    if (r.condition > 0.0) j["condition"] = hex_double(r.condition);
    j["seed"] = r.seed;
    return j;
}

nlohmann::ordered_json polynomial_to_json(const Polynomial& p) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "polynomial";
    j["degree"] = p.degree();
    auto arr = nlohmann::ordered_json::array();
    for (const complex& c : p.coeffs()) arr.push_back(json_complex(c));
    j["coefficients"] = std::move(arr);
    return j;
}

Polynomial polynomial_from_json(const nlohmann::ordered_json& j) {
    const auto& coeffs = j.is_object() ? j.at("coefficients") : j;
    if (!coeffs.is_array())
        throw std::invalid_argument("polynomial coefficients must be an array");
    std::vector<complex> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) c.push_back(complex_from_json(e));
    return Polynomial(std::move(c));
}

nlohmann::ordered_json trig_to_json(const TrigPolynomial& t) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "trig_polynomial";
    j["min_k"] = t.min_k();
    j["max_k"] = t.max_k();
    auto arr = nlohmann::ordered_json::array();
    for (const complex& c : t.coeffs()) arr.push_back(json_complex(c));
    j["coefficients"] = std::move(arr);
    return j;
}

nlohmann::ordered_json verdict_to_json(const LimitVerdict& v) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "limit_verdict";
    j["verdict"] = v.kind_name();
    if (v.kind == LimitVerdict::Kind::NotUniformlyCauchy) {
        nlohmann::ordered_json w;
        w["z"] = json_complex(v.witness.z);
        w["first_member"] = v.witness.first;
        w["second_member"] = v.witness.second;
        w["gap"] = hex_double(v.witness.gap);
        w["note"] = v.witness.note;
        j["witness"] = std::move(w);
    }
    auto pts = nlohmann::ordered_json::array();
    for (const complex& z : v.grid_points) pts.push_back(json_complex(z));
    j["grid_points"] = std::move(pts);
    if (!v.finite_samples.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const complex& z : v.finite_samples) arr.push_back(json_complex(z));
        j["finite_samples"] = std::move(arr);
    }
    if (!v.theta_samples.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (double t : v.theta_samples) arr.push_back(hex_double(t));
        j["theta_samples"] = std::move(arr);
    }
    if (!v.member_offsets.empty()) j["member_offsets"] = v.member_offsets;
    return j;
}

std::vector<Polynomial> parse_polynomial_sequence(const nlohmann::ordered_json& j) {
    const auto& seq = j.is_object() ? j.at("polynomials") : j;
    if (!seq.is_array() || seq.empty())
        throw std::invalid_argument("expected a nonempty array of coefficient lists");
    std::vector<Polynomial> out;
    out.reserve(seq.size());
    for (const auto& entry : seq) out.push_back(polynomial_from_json(entry));
    return out;
}

void write_error_csv(std::ostream& out, const std::vector<ErrorRow>& rows) {
    out << "re,im,d_error\n";
    char buf[128];
    for (const ErrorRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", r.z.real(), r.z.imag(), r.d_error);
        out << buf;
    }
}

}  // namespace cbar
