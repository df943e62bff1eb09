// Command-line front end: metric queries, approximation experiments, limit
// classification and invariant suites, with machine-readable reports.
//
// Exit codes: 0 success, 1 tolerance/verdict failure, 2 input error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "cbar/approximation.hpp"
#include "cbar/classification.hpp"
#include "cbar/serialize.hpp"

namespace {

using namespace cbar;

// ---------------------------------------------------------------------------
// Point literals: finite complex as "a+bi" decimals, infinite as "inf@theta".

[[noreturn]] void literal_error(const std::string& s, std::size_t pos, const std::string& what) {
    throw CLI::ValidationError("point literal '" + s + "': " + what + " at offset " +
                               std::to_string(pos));
}

CPoint parse_cpoint(const std::string& s) {
    if (s.rfind("inf@", 0) == 0) {
        const std::string rest = s.substr(4);
        const char* begin = rest.c_str();
        char* end = nullptr;
        const double theta = std::strtod(begin, &end);
        if (rest.empty() || end != begin + rest.size() || !std::isfinite(theta))
            literal_error(s, 4 + static_cast<std::size_t>(end - begin), "expected a finite angle");
        return CPoint::infinite(theta);
    }
    const char* begin = s.c_str();
    char* end = nullptr;
    double first = std::strtod(begin, &end);
    std::size_t pos = static_cast<std::size_t>(end - begin);
    if (pos == 0) {
        // Bare imaginary unit, optionally signed: "i", "+i", "-i".
        if (s == "i" || s == "+i") return CPoint::finite(complex{0.0, 1.0});
        if (s == "-i") return CPoint::finite(complex{0.0, -1.0});
        literal_error(s, 0, "expected a decimal number");
    }
    if (pos == s.size()) return CPoint::finite(complex{first, 0.0});
    if (s[pos] == 'i') {
        if (pos + 1 != s.size()) literal_error(s, pos + 1, "trailing characters after 'i'");
        return CPoint::finite(complex{0.0, first});
    }
    if (s[pos] != '+' && s[pos] != '-')
        literal_error(s, pos, "expected '+', '-' or 'i'");
    const std::string rest = s.substr(pos);
    if (rest == "+i") return CPoint::finite(complex{first, 1.0});
    if (rest == "-i") return CPoint::finite(complex{first, -1.0});
    const char* ibegin = s.c_str() + pos;
    char* iend = nullptr;
    const double second = std::strtod(ibegin, &iend);
    if (iend == ibegin) literal_error(s, pos + 1, "expected the imaginary part");
    pos += static_cast<std::size_t>(iend - ibegin);
    if (pos + 1 != s.size() || s[pos] != 'i')
        literal_error(s, pos, "imaginary part must end in 'i'");
    return CPoint::finite(complex{first, second});
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// approximate

struct ApproxCli {
    std::string target;
    std::string domain = "disc";
    double eps = 1e-2;
    ApproxConfig cfg;
    std::string out = "cbar_out";
    std::string format = "json";
    std::string star_center = "0";
    std::string star_rho;
};

std::vector<double> parse_number_list(const std::string& spec) {
    std::string body = spec;
    if (!body.empty() && body.front() == '[' && body.back() == ']')
        body = body.substr(1, body.size() - 2);
    std::vector<double> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
    if (out.empty()) throw CLI::ValidationError("empty number list in '" + spec + "'");
    return out;
}

Polynomial poly_from_spec(const std::string& params) {
    const std::vector<double> cs = parse_number_list(params);
    std::vector<complex> cc(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) cc[i] = complex{cs[i], 0.0};
    return Polynomial(std::move(cc));
}

// Splits "name:params" into the pair (name, params).
std::pair<std::string, std::string> split_target(const std::string& t) {
    const auto colon = t.find(':');
    if (colon == std::string::npos) return {t, ""};
    return {t.substr(0, colon), t.substr(colon + 1)};
}

FiniteTypeFunction finite_target_from_spec(const std::string& name, const std::string& params) {
    if (name == "log1m") return make_log1m_target();
    if (name == "exp") return make_exp_target();
    if (name == "const") return make_const_target(complex{parse_number(params), 0.0});
    if (name == "poly") return make_poly_target(poly_from_spec(params));
    if (name == "logsum") {
        std::vector<LogSumTerm> terms;
        for (double th : parse_number_list(params)) terms.push_back({complex{1.0, 0.0}, th});
        return make_logsum_target(terms);
    }
    throw CLI::ValidationError("unknown finite-type target '" + name + "'");
}

bool infinite_target_from_spec(const std::string& name, const std::string& params,
                               InfiniteTypeFunction& out) {
    if (name == "inf_re") {
        out = make_inf_re_target();
    } else if (name == "inf_const") {
        out = make_inf_const_target(parse_number(params));
    } else if (name == "inf_arg_pow") {
        const std::vector<double> ps = parse_number_list(params);
        if (ps.size() != 2) throw CLI::ValidationError("inf_arg_pow needs base,power");
        out = make_inf_arg_pow_target(ps[0], static_cast<int>(ps[1]));
    } else {
        return false;
    }
    return true;
}

int run_approximate(const ApproxCli& opt) {
    const auto [name, params] = split_target(opt.target);
    Polynomial poly;
    TrigPolynomial trig;
    ApproxReport report;
    std::vector<ErrorRow> rows;
    bool is_trig = false;

    if (opt.domain == "disc") {
        InfiniteTypeFunction inf;
        std::function<CPoint(complex)> feval;
        std::vector<SingularNode> nodes;
        if (infinite_target_from_spec(name, params, inf)) {
            std::tie(poly, report) = approx_infinite_type(inf, opt.eps, opt.cfg);
            feval = [inf](complex z) { return inf.eval(z); };
        } else {
            const FiniteTypeFunction fin = finite_target_from_spec(name, params);
            std::tie(poly, report) = approx_finite_type(fin, opt.eps, opt.cfg);
            feval = [fin](complex z) { return fin.eval(z); };
            nodes = fin.singular_nodes();
        }
        const DiscMesh mv = verification_mesh(opt.cfg.grid_boundary, opt.cfg.grid_radial, nodes);
        for (const auto& ring : mv.rings) {
            std::size_t s = 0;
            for (std::size_t j = 0; j < ring.n; ++j) {
                if (s < ring.skip.size() && ring.skip[s] == j) {
                    ++s;
                    continue;
                }
                const complex z = std::polar(
                    ring.rho, two_pi * static_cast<double>(j) / static_cast<double>(ring.n));
                rows.push_back({z, metric_d(feval(z), CPoint(poly.eval(z)))});
            }
        }
        for (const complex& z : mv.extra)
            rows.push_back({z, metric_d(feval(z), CPoint(poly.eval(z)))});
    } else if (opt.domain == "circle") {
        CircleFunction cf;
        if (name == "inf_angle")
            cf = make_circle_inf_angle_target();
        else if (name == "tan_half")
            cf = make_circle_tan_half_target();
        else {
            InfiniteTypeFunction inf;
            if (infinite_target_from_spec(name, params, inf))
                cf = restrict_to_circle(inf);
            else
                cf = restrict_to_circle(finite_target_from_spec(name, params));
        }
        std::tie(trig, report) = approx_trig_on_circle(cf, opt.eps, opt.cfg);
        is_trig = true;
        const std::size_t n = 4 * opt.cfg.grid_boundary;
        for (std::size_t j = 0; j < n; ++j) {
            const double phi = two_pi * static_cast<double>(j) / static_cast<double>(n);
            rows.push_back({std::polar(1.0, phi),
                            metric_d(cf.eval_angle(phi), CPoint(trig.eval_angle(phi)))});
        }
    } else if (opt.domain == "segment") {
        SegmentFunction sf;
        if (name == "invx")
            sf = make_invx_target();
        else if (name == "invx2")
            sf = make_invx2_target();
        else if (name == "poly")
            sf = make_segment_poly_target(poly_from_spec(params));
        else
            throw CLI::ValidationError("unknown segment target '" + name + "'");
        std::tie(poly, report) = approx_real_segment(sf, opt.eps, opt.cfg);
        const std::size_t n = 4 * opt.cfg.grid_boundary + 1;
        for (std::size_t j = 0; j < n; ++j) {
            const double x = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(n - 1);
            rows.push_back(
                {complex{x, 0.0}, metric_d(sf.eval(x), CPoint(poly.eval(complex{x, 0.0})))});
        }
    } else if (opt.domain == "star") {
        StarCompact L;
        const CPoint center = parse_cpoint(opt.star_center);
        if (!center.is_finite()) throw CLI::ValidationError("star center must be finite");
        L.center = center.value();
        L.rho = opt.star_rho.empty() ? std::vector<double>(64, 1.0)
                                     : parse_number_list(opt.star_rho);
        const StarTarget st = star_target_from_finite(finite_target_from_spec(name, params));
        std::tie(poly, report) = approx_star_compact(L, st, opt.eps, opt.cfg);
        const std::size_t n = 4 * opt.cfg.grid_boundary;
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = two_pi * static_cast<double>(j) / static_cast<double>(n);
            const complex z = L.boundary(ang);
            bool skip = false;
            for (const auto& node : st.nodes)
                if (std::abs(z - node.where) < kSingularExclusionArc) skip = true;
            if (skip) continue;
            rows.push_back({z, metric_d(CPoint(st.eval(z)), CPoint(poly.eval(z)))});
        }
    } else {
        throw CLI::ValidationError("unknown domain '" + opt.domain + "'");
    }

    report.seed = opt.cfg.seed;
    {
        std::ofstream csv(opt.out + ".errors.csv");
        if (!csv) throw CLI::ValidationError("cannot open " + opt.out + ".errors.csv");
        write_error_csv(csv, rows);
    }
    if (opt.format == "json") {
        std::ofstream rep(opt.out + ".report.json");
        std::ofstream cof(opt.out + ".coeffs.json");
        if (!rep || !cof) throw CLI::ValidationError("cannot open output files at " + opt.out);
        rep << report_to_json(report).dump(2) << "\n";
        cof << (is_trig ? trig_to_json(trig) : polynomial_to_json(poly)).dump(2) << "\n";
    }
    std::cout << "target = " << report.target << "\n"
              << "domain = " << report.domain << "\n"
              << "degree = " << report.degree << "\n"
              << "achieved_error = " << fmt17(report.achieved_error) << "\n"
              << "target_epsilon = " << fmt17(report.target_epsilon) << "\n";
    return report.achieved_error < report.target_epsilon ? 0 : 1;
}

// ---------------------------------------------------------------------------
// classify

int run_classify(const std::string& input, double tol, std::size_t rays, std::size_t radii,
                 const std::string& out) {
    std::ifstream in(input);
    if (!in) throw CLI::ValidationError("cannot open input file '" + input + "'");
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CLI::ValidationError("cannot parse '" + input + "': " + e.what());
    }
    const std::vector<Polynomial> seq = parse_polynomial_sequence(j);
    RayGrid grid{rays, radii};
    const LimitVerdict verdict = classify_limit(seq, grid, tol);
    std::cout << "verdict = " << verdict.kind_name() << "\n";
    if (verdict.kind == LimitVerdict::Kind::NotUniformlyCauchy)
        std::cout << "witness_z = " << fmt17(verdict.witness.z.real()) << " + "
                  << fmt17(verdict.witness.z.imag()) << "i\n"
                  << "witness_members = " << verdict.witness.first << ", "
                  << verdict.witness.second << "\n"
                  << "witness_gap = " << fmt17(verdict.witness.gap) << "\n"
                  << "note = " << verdict.witness.note << "\n";
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) throw CLI::ValidationError("cannot open output file '" + out + "'");
        os << verdict_to_json(verdict).dump(2) << "\n";
    }
    return verdict.kind == LimitVerdict::Kind::NotUniformlyCauchy ? 1 : 0;
}

// ---------------------------------------------------------------------------
// verify suites

struct SuiteResult {
    bool pass = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            lines.push_back("counterexample: " + what);
        }
    }
    void info(const std::string& line) { lines.push_back(line); }
};

CPoint random_cpoint(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double kind = unit(rng);
    if (kind < 0.2) return CPoint::infinite(two_pi * unit(rng));
    // Heavy-tailed moduli exercise the chart far from the origin.
    const double m = std::tan(1.5707 * unit(rng));
    return CPoint::finite(std::polar(m, two_pi * unit(rng)));
}

std::string describe(const CPoint& p) {
    if (p.is_infinite()) return "inf@" + fmt17(p.angle());
    return fmt17(p.value().real()) + "+" + fmt17(p.value().imag()) + "i";
}

SuiteResult suite_metric_axioms(std::uint64_t seed) {
    SuiteResult res;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100000 && res.pass; ++i) {
        const CPoint p = random_cpoint(rng), q = random_cpoint(rng), r = random_cpoint(rng);
        const double dpq = metric_d(p, q), dqp = metric_d(q, p);
        const double dpr = metric_d(p, r), drq = metric_d(r, q);
        res.check(dpq == dqp, "symmetry: " + describe(p) + ", " + describe(q));
        res.check(metric_d(p, p) == 0.0, "identity: " + describe(p));
        res.check(dpq <= dpr + drq + 1e-12, "triangle: " + describe(p) + ", " + describe(q) +
                                                ", " + describe(r));
        if (!(p == q))
            res.check(dpq > 0.0, "separation: " + describe(p) + ", " + describe(q));
    }
    res.info("triples = 100000");
    return res;
}

SuiteResult suite_lipschitz(std::uint64_t seed) {
    SuiteResult res;
    std::mt19937_64 rng(seed);
    const double levels[] = {0.5, 1.0, 2.0, 4.0, 32.0};
    for (int i = 0; i < 100000 && res.pass; ++i) {
        const CPoint p = random_cpoint(rng), q = random_cpoint(rng);
        const double d = metric_d(p, q);
        const double chi = chordal_chi(phi(p), phi(q));
        res.check(chi <= 2.0 * d + 1e-14,
                  "chi(phi p, phi q) > 2 d: " + describe(p) + ", " + describe(q));
        if (p.is_finite() && q.is_finite())
            res.check(d <= std::abs(p.value() - q.value()) + 1e-14,
                      "d > Euclid: " + describe(p) + ", " + describe(q));
        for (double R : levels) {
            const double dc = metric_d(CPoint(phi_r(p, R)), CPoint(phi_r(q, R)));
            res.check(dc <= (1.0 + R) * (1.0 + R) * d * (1.0 + 1e-9) + 1e-14,
                      "clamp Lipschitz at R = " + fmt17(R) + ": " + describe(p) + ", " +
                          describe(q));
        }
    }
    res.info("pairs = 100000");
    return res;
}

SuiteResult suite_roundtrip(std::uint64_t seed) {
    SuiteResult res;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int i = 0; i < 100000 && res.pass; ++i) {
        const double x = std::ldexp(unit(rng), static_cast<int>(rng() % 600) - 300);
        const double back = parse_number(hex_double(x));
        res.check(back == x, "hex round-trip: " + fmt17(x));
    }
    res.info("values = 100000");

    // A small end-to-end pass: approximants of e^z at halving tolerances must
    // classify as a finite-type limit.
    std::vector<Polynomial> seq;
    const FiniteTypeFunction f = make_exp_target();
    ApproxConfig cfg;
    cfg.grid_boundary = 128;
    cfg.grid_radial = 32;
    for (double eps : {1e-1, 5e-2, 2.5e-2, 1.25e-2})
        seq.push_back(approx_finite_type(f, eps, cfg).first);
    const LimitVerdict v = classify_limit(seq, RayGrid{16, 8}, 0.1);
    res.check(v.kind == LimitVerdict::Kind::FiniteType,
              std::string("classification of e^z approximants: ") + v.kind_name());
    return res;
}

SuiteResult suite_meanvalue() {
    SuiteResult res;
    const FiniteTypeFunction f = make_log1m_target();
    const complex mean = boundary_mean_value(f);
    const complex center = f.value(complex{0.0, 0.0});
    const double err = std::abs(mean - center);
    res.info("mean = " + fmt17(mean.real()) + " + " + fmt17(mean.imag()) + "i");
    res.info("f(0) = " + fmt17(center.real()) + " + " + fmt17(center.imag()) + "i");
    res.info("abs_error = " + fmt17(err));
    res.info("note: the integrand has an integrable logarithmic singularity at the");
    res.info("node; the excluded 1e-8 arcs contribute below the 1e-6 tolerance.");
    res.check(err < 1e-6, "mean-value gap " + fmt17(err));
    return res;
}

SuiteResult suite_maxprinciple() {
    SuiteResult res;
    // d(z, 2z) is constant 1/6 on |z| = 1 yet larger inside: the metric does
    // not satisfy a maximum principle along the boundary.
    double boundary = 0.0, interior = 0.0;
    complex at{0.0, 0.0};
    for (int j = 0; j < 1024; ++j) {
        const complex z = std::polar(1.0, two_pi * j / 1024.0);
        boundary = std::max(boundary, metric_d(CPoint(z), CPoint(2.0 * z)));
    }
    for (int k = 1; k <= 4096; ++k) {
        const double r = static_cast<double>(k) / 4096.0;
        const double d = metric_d(CPoint(complex{r, 0.0}), CPoint(complex{2.0 * r, 0.0}));
        if (d > interior) {
            interior = d;
            at = complex{r, 0.0};
        }
    }
    res.info("boundary_sup = " + fmt17(boundary));
    res.info("interior_sup = " + fmt17(interior) + " at r = " + fmt17(at.real()));
    res.check(std::fabs(boundary - 1.0 / 6.0) < 1e-12, "boundary sup should be 1/6");
    res.check(std::fabs(interior - 1.0 / (3.0 + 2.0 * std::sqrt(2.0))) < 1e-6,
              "interior sup should be 1/(3+2*sqrt(2))");
    res.check(interior > boundary, "interior must exceed the boundary sup");
    return res;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
    SuiteResult res;
    if (suite == "metric-axioms")
        res = suite_metric_axioms(seed);
    else if (suite == "lipschitz")
        res = suite_lipschitz(seed);
    else if (suite == "roundtrip")
        res = suite_roundtrip(seed);
    else if (suite == "meanvalue")
        res = suite_meanvalue();
    else if (suite == "maxprinciple")
        res = suite_maxprinciple();
    else
        throw CLI::ValidationError("unknown suite '" + suite +
                                   "' (expected metric-axioms, lipschitz, roundtrip, "
                                   "meanvalue or maxprinciple)");
    for (const std::string& line : res.lines) std::cout << line << "\n";
    std::cout << "suite " << suite << ": " << (res.pass ? "pass" : "fail") << "\n";
    return res.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerics for the disc compactification of the plane: metric queries, "
                 "uniform polynomial approximation and limit classification"};
    app.require_subcommand(1);

    // metric
    std::string point_p, point_q;
    CLI::App* metric = app.add_subcommand("metric", "Distance between two points");
    metric->add_option("p", point_p, "first point (a+bi or inf@theta)")->required();
    metric->add_option("q", point_q, "second point (a+bi or inf@theta)")->required();

    // approximate
    ApproxCli ap;
    CLI::App* approx = app.add_subcommand("approximate", "Approximate a catalog target");
    approx->add_option("--target", ap.target, "target spec, e.g. log1m, exp, poly:[0,0,1], "
                                              "inf_re, inf_arg_pow:2,6, invx2, inf_angle")
        ->required();
    approx->add_option("--domain", ap.domain, "disc | circle | segment | star")
        ->check(CLI::IsMember({"disc", "circle", "segment", "star"}));
    approx->add_option("--eps", ap.eps, "target tolerance")->required()
        ->check(CLI::PositiveNumber);
    approx->add_option("--grid-boundary", ap.cfg.grid_boundary, "boundary sample count");
    approx->add_option("--grid-radial", ap.cfg.grid_radial, "radial level count");
    approx->add_option("--degree-cap", ap.cfg.degree_cap, "maximum polynomial degree");
    approx->add_option("--seed", ap.cfg.seed, "seed recorded in the report");
    approx->add_option("--out", ap.out, "output path prefix");
    approx->add_option("--format", ap.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    approx->add_option("--star-center", ap.star_center, "star domain center (point literal)");
    approx->add_option("--star-rho", ap.star_rho, "star radii, comma separated");

    // classify
    std::string cl_input, cl_out;
    double cl_tol = 1e-4;
    std::size_t cl_rays = 64, cl_radii = 64;
    CLI::App* classify = app.add_subcommand("classify", "Classify a polynomial sequence limit");
    classify->add_option("--input", cl_input, "JSON file with the coefficient sequence")
        ->required();
    classify->add_option("--tol", cl_tol, "uniform Cauchy tolerance")->check(CLI::PositiveNumber);
    classify->add_option("--rays", cl_rays, "grid rays");
    classify->add_option("--radii", cl_radii, "grid radii per ray");
    classify->add_option("--out", cl_out, "verdict JSON path");

    // verify
    std::string suite;
    std::uint64_t vseed = 0;
    CLI::App* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("suite", suite, "metric-axioms | lipschitz | roundtrip | meanvalue | "
                                       "maxprinciple")
        ->required();
    verify->add_option("--seed", vseed, "random seed");

    try {
        app.parse(argc, argv);
        if (metric->parsed()) {
            const CPoint p = parse_cpoint(point_p);
            const CPoint q = parse_cpoint(point_q);
            const double d = metric_d(p, q);
            const double chi = chordal_chi(phi(p), phi(q));
            std::cout << "d = " << fmt17(d) << "\n"
                      << "chi_phi = " << fmt17(chi) << "\n"
                      << "chi_le_2d = " << (chi <= 2.0 * d + 1e-14 ? "true" : "false") << "\n";
            return 0;
        }
        if (approx->parsed()) return run_approximate(ap);
        if (classify->parsed()) return run_classify(cl_input, cl_tol, cl_rays, cl_radii, cl_out);
        if (verify->parsed()) return run_verify(suite, vseed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ApproxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
