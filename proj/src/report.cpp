#include "gconvex/report.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace gconvex {

Json real_json(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

Json to_json(const Interval& iv) {
    return Json{{"lo", real_json(iv.lo)},
                {"hi", real_json(iv.hi)},
                {"lo_open", iv.lo_open},
                {"hi_open", iv.hi_open}};
}

Json to_json(const ChebyshevSystem& system) {
    Json basis = Json::array();
    for (const auto& b : system.basis()) basis.push_back(b.to_text());
    return Json{{"name", system.name()}, {"order", system.order()}, {"interval", to_json(system.interval())},
                {"basis", basis}};
}

Json to_json(const PointTuple& pts) {
    Json out = Json::array();
    for (double x : pts.points()) out.push_back(real_json(x));
    return out;
}

Json to_json(const SystemClassification& c) {
    return Json{{"verdict", to_string(c.verdict)},
                {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)},
                {"tuples_checked", c.tuples_checked},
                {"exhaustive", c.exhaustive}};
}

Json to_json(const DividedDifference& dd) {
    return Json{{"value", real_json(dd.value)},
                {"points", to_json(dd.points)},
                {"order", dd.order},
                {"conditioning", real_json(dd.conditioning)},
                {"ill_conditioned", dd.ill_conditioned()}};
}

namespace {

Json options_json(const CertifyOptions& o) {
    return Json{{"atol", o.atol},
                {"rtol", o.rtol},
                {"budget", o.sampling.budget},
                {"seed", o.sampling.seed},
                {"knot_exclusion", o.knot_exclusion}};
}

} // namespace

Json to_json(const ConvexityCertificate& cert) {
    Json witness = nullptr;
    if (cert.witness)
        witness = Json{{"points", to_json(cert.witness->points)},
                       {"value", real_json(cert.witness->value)},
                       {"tolerance", real_json(cert.witness->tolerance)}};
    return Json{{"method", to_string(cert.method)},
                {"verdict", to_string(cert.verdict)},
                {"semantics", "on-sample"},
                {"tuples_checked", cert.tuples_checked},
                {"tuples_skipped", cert.tuples_skipped},
                {"exhaustive", cert.exhaustive},
                {"min_value", real_json(cert.min_value)},
                {"witness", witness},
                {"tolerances", options_json(cert.options)},
                {"linear_table_interpolation", cert.linear_table_interpolation}};
}

Json to_json(const MonotonicityReport& report) {
    Json scan = Json::array();
    for (const auto& p : report.scan) scan.push_back(Json::array({real_json(p.x), real_json(p.value)}));
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back(Json{{"x", real_json(report.scan[v.index].x)},
                                  {"next_x", real_json(report.scan[v.index + 1].x)},
                                  {"drop", real_json(v.drop)},
                                  {"tolerance", real_json(v.tolerance)}});
    return Json{{"method", "theorem2"},
                {"verdict", report.monotone() ? "certified-on-sample" : "violated"},
                {"semantics", "on-sample"},
                {"knots", to_json(report.knots)},
                {"excluded", report.excluded},
                {"violations", violations},
                {"scan", scan},
                {"tolerances", options_json(report.options)}};
}

Json to_json(const LimitDiagnostics& diag) {
    Json trace = Json::array();
    for (const auto& s : diag.h_sequence) trace.push_back(Json::array({real_json(s.h), real_json(s.value)}));
    return Json{{"estimate", real_json(diag.estimate)},
                {"converged", diag.converged},
                {"monotone_ok", diag.monotone_ok},
                {"h_sequence", trace}};
}

Json to_json(const SignPatternReport& report) {
    Json segments = Json::array();
    for (const auto& s : report.segments) {
        Json violations = Json::array();
        for (const auto& v : s.violations) violations.push_back(Json::array({real_json(v.x), real_json(v.value)}));
        segments.push_back(Json{{"index", s.index},
                                {"lo", real_json(s.lo)},
                                {"hi", real_json(s.hi)},
                                {"required_sign", s.required_sign},
                                {"points_checked", s.points_checked},
                                {"violations", violations}});
    }
    return Json{{"overall", report.overall},
                {"excluded", report.excluded},
                {"atol", report.atol},
                {"rtol", report.rtol},
                {"segments", segments}};
}

Json to_json(const OmegaCombination& omega) {
    Json coeffs = Json::array();
    for (double c : omega.coefficients) coeffs.push_back(real_json(c));
    return Json{{"system", omega.system.name()}, {"coefficients", coeffs}};
}

Json to_json(const SupportResult& result) {
    return Json{{"knots", to_json(result.knots)},
                {"omega", to_json(result.omega)},
                {"c_n", to_json(result.c_n)},
                {"pattern", to_json(result.pattern)}};
}

void write_columns(std::ostream& out, const FunctionSource& f, const OmegaCombination& omega,
                   const PointTuple& knots, std::span<const double> grid, double knot_exclusion) {
    const Interval& iv = omega.system.interval();
    const double exclusion = knot_exclusion * iv.reference_span();
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << "x\tf\tomega\tdiff\tsegment\n" << std::setprecision(17);
    for (double x : grid) {
        if (!iv.contains(x)) continue;
        const double fx = f.eval(x), wx = omega(x);
        out << x << '\t' << fx << '\t' << wx << '\t' << fx - wx << '\t' << region_of(x, knots, exclusion) << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

} // namespace gconvex
