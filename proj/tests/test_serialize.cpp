#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "cbar/serialize.hpp"
#include "doctest.h"

using cbar::complex;

TEST_CASE("hex doubles round-trip exactly") {
    CHECK(cbar::hex_double(3.0) == "0x1.8p+1");
    CHECK(cbar::parse_number("0x1.8p+1") == 3.0);
    CHECK(cbar::parse_number("-0x1p-2") == -0.25);
    CHECK(cbar::parse_number("1.5") == 1.5);
    CHECK(cbar::parse_number("2e3") == 2000.0);

    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> e(-320, 300);
    for (int i = 0; i < 100000; ++i) {
        const double x = std::ldexp(u(rng), e(rng));  // includes subnormals
        CHECK(cbar::parse_number(cbar::hex_double(x)) == x);
    }
    CHECK(cbar::parse_number(cbar::hex_double(0.0)) == 0.0);
    CHECK(cbar::parse_number(cbar::hex_double(-0.0)) == 0.0);
    CHECK(cbar::parse_number(cbar::hex_double(std::numeric_limits<double>::denorm_min())) ==
          std::numeric_limits<double>::denorm_min());
}

TEST_CASE("number parsing rejects malformed input") {
    CHECK_THROWS_AS(cbar::parse_number(""), std::invalid_argument);
    CHECK_THROWS_AS(cbar::parse_number("abc"), std::invalid_argument);
    CHECK_THROWS_AS(cbar::parse_number("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(cbar::parse_number("1.0 junk"), std::invalid_argument);
    CHECK_THROWS_AS(cbar::parse_number("1e999"), std::invalid_argument);
    CHECK_THROWS_AS(cbar::parse_number("nan"), std::invalid_argument);
    CHECK_THROWS_AS(cbar::hex_double(std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("complex values as hex pairs") {
    const complex z{-1.375, 0.1};
    const auto j = cbar::json_complex(z);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(cbar::complex_from_json(j) == z);
    CHECK(cbar::complex_from_json(nlohmann::ordered_json(2.5)) == complex{2.5, 0.0});
}

TEST_CASE("polynomial JSON round-trip is bit-exact") {
    std::mt19937_64 rng(4096);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::vector<complex> c(40);
    for (auto& v : c) v = complex{std::ldexp(u(rng), rng() % 40), u(rng)};
    const cbar::Polynomial p(c);

    const auto j = cbar::polynomial_to_json(p);
    const auto q = cbar::polynomial_from_json(j);
    REQUIRE(q.coeffs().size() == c.size());
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(q.coeffs()[k] == c[k]);

    // Serialization is deterministic text: dumping twice matches bytewise.
    CHECK(j.dump(2) == cbar::polynomial_to_json(p).dump(2));

    // Bare arrays are accepted too.
    const auto bare = cbar::polynomial_from_json(nlohmann::ordered_json::parse("[1, 2.5, \"0x1p+3\"]"));
    REQUIRE(bare.coeffs().size() == 3);
    CHECK(bare.coeffs()[2] == complex{8.0, 0.0});
}

TEST_CASE("report serialization carries the run parameters") {
    cbar::ApproxReport r;
    r.target = "exp";
    r.domain = "disc";
    r.target_epsilon = 1e-3;
    r.dilation_r = 0.75;
    r.degree = 12;
    r.scaling_n = 42;
    r.delta = 0.5;
    r.achieved_error = 8e-4;
    r.grid_size = 1234;
    r.condition = 10.0;
    r.seed = 7;
    const auto j = cbar::report_to_json(r);
    CHECK(j["kind"] == "approx_report");
    CHECK(j["target"] == "exp");
    CHECK(j["domain"] == "disc");
    CHECK(cbar::parse_number(j["target_epsilon"].get<std::string>()) == 1e-3);
    CHECK(cbar::parse_number(j["dilation_r"].get<std::string>()) == 0.75);
    CHECK(j["degree"] == 12);
    CHECK(j["scaling_n"] == 42);
    CHECK(cbar::parse_number(j["achieved_error"].get<std::string>()) == 8e-4);
    CHECK(j["grid_size"] == 1234);
    CHECK(j["seed"] == 7);

    // Fields that do not apply are omitted rather than zero-filled.
    cbar::ApproxReport plain;
    plain.target = "poly";
    plain.domain = "disc";
    const auto pj = cbar::report_to_json(plain);
    CHECK(!pj.contains("scaling_n"));
    CHECK(!pj.contains("delta"));
    CHECK(!pj.contains("condition"));
}

TEST_CASE("verdict serialization") {
    cbar::LimitVerdict v;
    v.kind = cbar::LimitVerdict::Kind::NotUniformlyCauchy;
    v.witness.z = complex{0.96875, 0.0};
    v.witness.first = 66;
    v.witness.second = 67;
    v.witness.gap = 1.39e-4;
    v.witness.note = "trailing d-gap at or above tol";
    v.grid_points = {complex{0.0, 0.0}, complex{1.0, 0.0}};
    const auto j = cbar::verdict_to_json(v);
    CHECK(j["verdict"] == "NotUniformlyCauchy");
    CHECK(j["witness"]["first_member"] == 66);
    CHECK(j["witness"]["second_member"] == 67);
    CHECK(j["grid_points"].size() == 2);

    cbar::LimitVerdict inf;
    inf.kind = cbar::LimitVerdict::Kind::InfiniteType;
    inf.theta_samples = {0.0, 1.5};
    inf.member_offsets = {0, 0};
    const auto ij = cbar::verdict_to_json(inf);
    CHECK(ij["verdict"] == "InfiniteType");
    REQUIRE(ij["theta_samples"].size() == 2);
    CHECK(cbar::parse_number(ij["theta_samples"][1].get<std::string>()) == 1.5);
    CHECK(ij["member_offsets"].size() == 2);
}

TEST_CASE("polynomial sequence input formats") {
    const auto j = nlohmann::ordered_json::parse(R"({
        "schema": 1,
        "polynomials": [[1, 1, 1], ["0x1p+0", [0, 1]], [[2, 0]]]
    })");
    const auto seq = cbar::parse_polynomial_sequence(j);
    REQUIRE(seq.size() == 3);
    CHECK(seq[0].degree() == 2);
    CHECK(seq[1].coeffs()[1] == complex{0.0, 1.0});
    CHECK(seq[2].coeffs()[0] == complex{2.0, 0.0});

    // A bare array of polynomials is accepted.
    const auto bare = cbar::parse_polynomial_sequence(nlohmann::ordered_json::parse("[[1], [2]]"));
    CHECK(bare.size() == 2);

    CHECK_THROWS(cbar::parse_polynomial_sequence(nlohmann::ordered_json::parse("{}")));
    CHECK_THROWS_AS(cbar::parse_polynomial_sequence(nlohmann::ordered_json::parse("[[\"zz\"]]")),
                    std::invalid_argument);
}

TEST_CASE("error table format") {
    std::ostringstream out;
    cbar::write_error_csv(out, {{complex{1.0, -2.0}, 0.25}, {complex{0.5, 0.0}, 1e-17}});
    const std::string text = out.str();
    CHECK(text.rfind("re,im,d_error\n", 0) == 0);
    CHECK(text.find("\n1,-2,0.25\n") != std::string::npos);
    CHECK(text.find("1e-17") != std::string::npos);
}
