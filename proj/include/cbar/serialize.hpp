#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cbar/approximation.hpp"
#include "cbar/classification.hpp"
#include "cbar/polynomial.hpp"

namespace cbar {

// Floating-point values are serialized as C99 hex-float strings ("0x1.8p+1")
// so that reports are byte-identical across runs and round-trip exactly.
std::string hex_double(double x);

// Parses either a hex-float string or a plain decimal; rejects trailing
// garbage and non-finite results.
double parse_number(const std::string& s);

nlohmann::ordered_json json_complex(const complex& z);
complex complex_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json report_to_json(const ApproxReport& r);
nlohmann::ordered_json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json trig_to_json(const TrigPolynomial& t);
nlohmann::ordered_json verdict_to_json(const LimitVerdict& v);

// Input format for classification: {"schema": 1, "polynomials": [[c0, c1,
// ...], ...]} where each coefficient is a number, a numeric string (decimal
// or hex-float), or an [re, im] pair of either.
std::vector<Polynomial> parse_polynomial_sequence(const nlohmann::ordered_json& j);

struct ErrorRow {
    complex z{0.0, 0.0};
    double d_error = 0.0;
};

// Plot-ready table: header plus one "re,im,d_error" line per grid point,
// decimals printed with enough digits to round-trip.
void write_error_csv(std::ostream& out, const std::vector<ErrorRow>& rows);

}  // namespace cbar
