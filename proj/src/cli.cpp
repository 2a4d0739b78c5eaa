#include "gconvex/cli.hpp"

#include "gconvex/report.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace gconvex::cli {

namespace {

constexpr const char* kDisclaimer =
    "grid certification is necessary-but-not-sufficient evidence: it checks finitely many tuples, "
    "not the continuum";

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GCONVEX_SEED")) {
        std::uint64_t v = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size()) return v;
        throw UsageError("GCONVEX_SEED is not an unsigned integer: '" + std::string(s) + "'");
    }
    return kDefaultSeed;
}

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string list(std::span<const double> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
    return s + ")";
}

ChebyshevSystem load_system(const std::string& spec) {
    if (spec.empty()) throw UsageError("--system is required");
    if (auto named = named_system(spec)) return *named;
    std::ifstream in(spec);
    if (!in) throw UsageError("'" + spec + "' is neither a named system nor a readable file");
    return parse_system(in, spec);
}

FunctionSource load_function(const RunConfig& cfg) {
    if (!cfg.table_path.empty()) {
        std::ifstream in(cfg.table_path);
        if (!in) throw UsageError("cannot read table '" + cfg.table_path + "'");
        return load_table(in, cfg.linear ? TableInterpolation::linear : TableInterpolation::none);
    }
    if (cfg.function.empty()) throw UsageError("--f or --f-table is required");
    return parse_function(cfg.function);
}

std::vector<double> resolve_grid(const RunConfig& cfg, const ChebyshevSystem& system, const FunctionSource* f) {
    const Interval& iv = system.interval();
    if (cfg.grid) return uniform_grid(cfg.grid->lo, cfg.grid->hi, cfg.grid->count, iv);
    if (f && f->is_table() && !f->uses_linear_interpolation()) {
        std::vector<double> grid;
        for (double x : f->table_data()->x)
            if (iv.contains(x)) grid.push_back(x);
        return grid;
    }
    if (iv.bounded()) return uniform_grid(iv, GridSpec{}.count);
    const GridSpec d;
    return uniform_grid(d.lo, d.hi, d.count, iv);
}

Json grid_json(std::span<const double> grid) {
    if (grid.empty()) return Json{{"count", 0}};
    return Json{{"count", grid.size()}, {"lo", real_json(grid.front())}, {"hi", real_json(grid.back())}};
}

CertifyOptions certify_options(const RunConfig& cfg) {
    CertifyOptions o;
    o.atol = cfg.atol;
    o.rtol = cfg.rtol;
    o.sampling = {cfg.budget, cfg.seed};
    return o;
}

SupportOptions support_options(const RunConfig& cfg) {
    SupportOptions o;
    o.limit.atol = cfg.atol;
    o.limit.rtol = cfg.rtol;
    o.pattern.atol = cfg.atol;
    o.pattern.rtol = cfg.rtol;
    o.sampling = {cfg.budget, cfg.seed};
    return o;
}

bool is_monomial_system(const ChebyshevSystem& system) {
    for (std::size_t i = 0; i < system.order(); ++i)
        if (system[i].kind != BasisFunction::Kind::monomial || system[i].parameter != static_cast<double>(i))
            return false;
    return true;
}

struct Outcome {
    Json document;
    std::string human;
    std::string columns;
    bool has_columns = false;
    int status = kExitOk;
};

Json header(const RunConfig& cfg, const char* command) {
    return Json{{"schema", kReportSchema},
                {"command", command},
                {"seed", cfg.seed},
                {"tolerances", Json{{"atol", cfg.atol}, {"rtol", cfg.rtol}, {"budget", cfg.budget}}}};
}

void describe_certificate(std::ostream& h, const ConvexityCertificate& cert) {
    h << "method: " << to_string(cert.method) << '\n'
      << "verdict: " << to_string(cert.verdict) << '\n'
      << "checked: " << cert.tuples_checked << (cert.exhaustive ? " (exhaustive)" : " (sampled)");
    if (cert.tuples_skipped) h << ", skipped " << cert.tuples_skipped << " near-singular";
    h << '\n' << "min value: " << num(cert.min_value) << '\n';
    if (cert.witness)
        h << "witness: " << list(cert.witness->points.points()) << " value " << num(cert.witness->value)
          << " (tolerance " << num(cert.witness->tolerance) << ")\n";
    if (cert.linear_table_interpolation) h << "warning: f uses linear interpolation between table rows\n";
}

void describe_support(std::ostream& h, const SupportResult& r) {
    h << "knots: " << list(r.knots.points()) << '\n'
      << "c_n: " << num(r.c_n.estimate) << " after " << r.c_n.h_sequence.size() << " halvings"
      << (r.c_n.monotone_ok ? "" : " (sequence not monotone)") << '\n'
      << "coefficients: " << list(r.omega.coefficients) << '\n';
    for (const auto& s : r.pattern.segments)
        h << "  I_" << s.index << " (" << num(s.lo) << ", " << num(s.hi) << "): f - omega "
          << (s.required_sign > 0 ? ">= 0" : "<= 0") << ", " << s.points_checked << " points, "
          << s.violations.size() << " violations\n";
    h << "pattern: " << (r.pattern.overall ? "holds on the grid" : "violated") << '\n';
}

Outcome run_classify(const RunConfig& cfg) {
    const ChebyshevSystem system = load_system(cfg.system);
    const std::vector<double> grid = resolve_grid(cfg, system, nullptr);
    const SystemClassification c = classify_on_grid(system, grid, {cfg.budget, cfg.seed});

    Outcome o;
    o.status = c.verdict == SystemClassification::Verdict::non_chebyshev ? kExitViolated : kExitOk;
    o.document = header(cfg, "classify");
    o.document["system"] = to_json(system);
    o.document["grid"] = grid_json(grid);
    o.document["result"] = to_json(c);
    std::ostringstream h;
    h << "system " << system.name() << " on " << system.interval().to_string() << ": " << to_string(c.verdict)
      << " (" << c.tuples_checked << " tuples, " << (c.exhaustive ? "exhaustive" : "sampled") << ")\n";
    if (c.witness) h << "witness: " << list(c.witness->points()) << '\n';
    o.human = h.str();
    return o;
}

Outcome run_dd(const RunConfig& cfg) {
    const ChebyshevSystem system = load_system(cfg.system);
    const FunctionSource f = load_function(cfg);
    const std::size_t n = system.order();
    if (cfg.points.size() < n)
        throw UsageError("--points needs at least " + std::to_string(n) + " values for an order-" +
                         std::to_string(n) + " system");
    const PointTuple pts(cfg.points);

    Outcome o;
    o.document = header(cfg, "dd");
    o.document["system"] = to_json(system);
    o.document["function"] = f.description();
    Json result;
    std::ostringstream h;
    if (pts.size() == n) {
        const DividedDifference g = gdd(system, pts, f);
        const DividedDifference fast = gdd_fast(system, pts, f);
        const double gap = std::abs(g.value - fast.value) / std::max(std::abs(g.value), 1.0);
        result["gdd"] = to_json(g);
        result["gdd_fast"] = real_json(fast.value);
        result["relative_gap"] = real_json(gap);
        h << "[" << list(pts.points()) << "; f] = " << num(g.value) << " (conditioning " << num(g.conditioning)
          << (g.ill_conditioned() ? ", ill-conditioned" : "") << ")\n"
          << "recurrence path: " << num(fast.value) << " (relative gap " << num(gap) << ")\n";
        if (is_monomial_system(system)) {
            const double c = classical_dd(pts.points(), f);
            result["classical"] = real_json(c);
            h << "classical: " << num(c) << '\n';
        }
    } else if (pts.size() == n + 1 && n >= 2) {
        const RecurrenceCheck r = recurrence_identity(system, pts, f);
        result["recurrence"] = Json{{"lhs", real_json(r.lhs)}, {"rhs", real_json(r.rhs)},
                                    {"residual", real_json(r.residual)}};
        h << "window difference: " << num(r.lhs) << "\ndeterminant form:  " << num(r.rhs)
          << "\nrelative residual: " << num(r.residual) << '\n';
    } else {
        Json windows = Json::array();
        for (const auto& w : gdd_sliding(system, pts, f)) {
            windows.push_back(to_json(w));
            h << "[" << list(w.points.points()) << "; f] = " << num(w.value) << '\n';
        }
        result["windows"] = windows;
    }
    o.document["result"] = result;
    o.human = h.str();
    return o;
}

Outcome run_certify(const RunConfig& cfg) {
    const ChebyshevSystem system = load_system(cfg.system);
    const FunctionSource f = load_function(cfg);
    const std::vector<double> grid = resolve_grid(cfg, system, &f);
    const CertifyOptions opts = certify_options(cfg);

    Outcome o;
    o.document = header(cfg, "certify");
    o.document["system"] = to_json(system);
    o.document["function"] = f.description();
    o.document["grid"] = grid_json(grid);
    std::ostringstream h;
    if (cfg.method == "theoremA" || cfg.method == "corollary1" || cfg.method == "definition") {
        ConvexityCertificate cert;
        if (cfg.method == "theoremA") {
            cert = certify_theorem_a(system, f, grid, opts);
        } else if (cfg.method == "corollary1") {
            cert = certify_corollary1(system, f, grid, opts);
        } else {
            if (cfg.nodes.empty()) throw UsageError("--method definition needs --nodes");
            const PointTuple nodes(cfg.nodes);
            cert = verify_definition(system, f, nodes, grid, opts);
            std::vector<double> values;
            for (double x : cfg.nodes) values.push_back(f.eval(x));
            std::ostringstream cols;
            write_columns(cols, f, interpolate(system, nodes, values), nodes, grid, opts.knot_exclusion);
            o.columns = cols.str();
            o.has_columns = true;
        }
        o.status = cert.verdict == Verdict::violated ? kExitViolated : kExitOk;
        o.document["result"] = to_json(cert);
        describe_certificate(h, cert);
    } else if (cfg.method == "theorem2") {
        if (cfg.knots.empty()) throw UsageError("--method theorem2 needs --knots");
        const MonotonicityReport r = scan_theorem2(system, f, PointTuple(cfg.knots), grid, opts);
        o.status = r.monotone() ? kExitOk : kExitViolated;
        o.document["result"] = to_json(r);
        h << "method: theorem2\nknots: " << list(r.knots.points()) << "\nscan points: " << r.scan.size()
          << " (" << r.excluded << " excluded)\nviolations: " << r.violations.size() << '\n';
        for (const auto& v : r.violations)
            h << "  drop " << num(v.drop) << " between x = " << num(r.scan[v.index].x) << " and "
              << num(r.scan[v.index + 1].x) << '\n';
        std::ostringstream cols;
        cols << "x\tgdd\n" << std::setprecision(17);
        for (const auto& p : r.scan) cols << p.x << '\t' << p.value << '\n';
        o.columns = cols.str();
        o.has_columns = true;
    } else {
        throw UsageError("unknown method '" + cfg.method + "' (theoremA, corollary1, theorem2, definition)");
    }
    o.document["note"] = kDisclaimer;
    h << "note: " << kDisclaimer << '\n';
    o.human = h.str();
    return o;
}

Outcome support_outcome(const RunConfig& cfg, const char* command, const ChebyshevSystem& system,
                        const FunctionSource& f, const PointTuple& knots, std::span<const double> grid) {
    const SupportOptions opts = support_options(cfg);
    Outcome o;
    o.document = header(cfg, command);
    o.document["system"] = to_json(system);
    o.document["function"] = f.description();
    o.document["grid"] = grid_json(grid);
    try {
        const SupportResult r = build_support(system, f, knots, grid, opts);
        o.status = r.pattern.overall ? kExitOk : kExitViolated;
        o.document["result"] = to_json(r);
        std::ostringstream h, cols;
        describe_support(h, r);
        write_columns(cols, f, r.omega, knots, grid, opts.pattern.knot_exclusion);
        o.human = h.str();
        o.columns = cols.str();
        o.has_columns = true;
    } catch (const LimitDivergedError& e) {
        o.status = kExitError;
        o.document["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
        o.document["c_n"] = to_json(e.trace());
        std::ostringstream h;
        h << "error: " << e.what() << "\n";
        for (const auto& s : e.trace().h_sequence) h << "  h = " << num(s.h) << "  value = " << num(s.value) << '\n';
        o.human = h.str();
    }
    return o;
}

Outcome run_support(const RunConfig& cfg) {
    const ChebyshevSystem system = load_system(cfg.system);
    const FunctionSource f = load_function(cfg);
    if (cfg.knots.empty()) throw UsageError("support needs --knots");
    const std::vector<double> grid = resolve_grid(cfg, system, &f);
    return support_outcome(cfg, "support", system, f, PointTuple(cfg.knots), grid);
}

Outcome run_reproduce(const RunConfig& cfg) {
    const ChebyshevSystem system = monomial_system(3);
    const FunctionSource f = FunctionSource::monomial(3);
    const PointTuple knots{0.0, 1.0};
    const std::vector<double> grid = uniform_grid(-2.0, 3.0, 100);

    Outcome o = support_outcome(cfg, "reproduce-paper-example", system, f, knots, grid);
    if (o.status == kExitError) return o;

    const std::vector<double> cert_grid = uniform_grid(-2.0, 3.0, 30);
    const ConvexityCertificate cert = certify_theorem_a(system, f, cert_grid, certify_options(cfg));
    o.document["certificate"] = to_json(cert);

    const auto& coeffs = o.document["result"]["omega"]["coefficients"];
    const double expected[] = {0.0, -1.0, 2.0};
    bool coeff_ok = true;
    for (std::size_t i = 0; i < 3; ++i) coeff_ok = coeff_ok && std::abs(coeffs[i].get<double>() - expected[i]) <= 1e-6;
    // f − ω ≤ 0 for x < 0, ≥ 0 on (0,1), ≥ 0 for x > 1.
    const auto& segments = o.document["result"]["pattern"]["segments"];
    const int required[] = {-1, 1, 1};
    bool lines_ok = segments.size() == 3;
    for (std::size_t i = 0; lines_ok && i < 3; ++i)
        lines_ok = segments[i]["required_sign"].get<int>() == required[i] && segments[i]["violations"].empty() &&
                   segments[i]["points_checked"].get<std::size_t>() > 0;

    Json checks = Json::array();
    checks.push_back(Json{{"name", "x^3 is 3-convex on the grid (D_3 >= 0)"},
                          {"passed", cert.verdict == Verdict::certified_on_sample}});
    checks.push_back(Json{{"name", "coefficients (0, -1, 2) within 1e-6"}, {"passed", coeff_ok}});
    checks.push_back(Json{{"name", "sign lines hold at every grid point"}, {"passed", lines_ok}});
    bool all = true;
    std::ostringstream h;
    h << "system (1, x, x^2), f(x) = x^3, knots (0, 1), grid [-2, 3] x 100\n" << o.human;
    for (const auto& c : checks) {
        all = all && c["passed"].get<bool>();
        h << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << '\n';
    }
    o.document["checks"] = checks;
    o.human = h.str();
    if (!all) o.status = kExitViolated;
    return o;
}

} // namespace

GridSpec parse_grid(const std::string& spec) {
    GridSpec g;
    const auto a = spec.find(':');
    const auto b = a == std::string::npos ? a : spec.find(':', a + 1);
    if (b == std::string::npos) throw Error(ErrorKind::format, "grid must be lo:hi:count, got '" + spec + "'");
    const auto parse = [&](std::string_view tok, auto& out) {
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw Error(ErrorKind::format, "grid must be lo:hi:count, got '" + spec + "'");
    };
    const std::string_view s(spec);
    parse(s.substr(0, a), g.lo);
    parse(s.substr(a + 1, b - a - 1), g.hi);
    parse(s.substr(b + 1), g.count);
    return g;
}

RunConfig parse_args(int argc, const char* const* argv) {
    RunConfig cfg;
    cfg.seed = default_seed();
    std::string grid, format = "human";

    CLI::App app{"Chebyshev-system divided differences and generalized convexity checks", "gconvex"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--seed", cfg.seed, "PRNG seed for tuple subsampling (default: $GCONVEX_SEED or built-in)");
    app.add_option("--budget", cfg.budget, "maximum number of tuples evaluated per check");
    app.add_option("--atol", cfg.atol, "absolute tolerance")->check(CLI::PositiveNumber);
    app.add_option("--rtol", cfg.rtol, "relative tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "human | structured | columns")
        ->check(CLI::IsMember({"human", "structured", "columns"}));
    app.add_option("--out", cfg.out_path, "write the report to this file instead of stdout");

    const auto add_system = [&](CLI::App* sub) {
        sub->add_option("--system", cfg.system, "poly:N, negpoly:N, exp:a,b,..., cos, cossin, or a system file")
            ->required();
    };
    const auto add_function = [&](CLI::App* sub) {
        auto* fopt = sub->add_option("--f", cfg.function, "monomial:k, negmonomial:k, exp:a, cos, sin, const:c, "
                                                          "polynomial:c0,c1,...");
        auto* topt = sub->add_option("--f-table", cfg.table_path, "two-column table of samples of f");
        fopt->excludes(topt);
        sub->add_flag("--linear", cfg.linear, "interpolate linearly between table rows");
    };
    const auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--grid", grid, "uniform grid lo:hi:count");
    };

    auto* classify = app.add_subcommand("classify", "classify a system as positive, negative or non-Chebyshev");
    add_system(classify);
    add_grid(classify);

    auto* dd = app.add_subcommand("dd", "generalized divided differences at given points");
    add_system(dd);
    add_function(dd);
    dd->add_option("--points", cfg.points, "comma-separated abscissae")->delimiter(',')->required();

    auto* certify = app.add_subcommand("certify", "certify generalized convexity on a grid");
    add_system(certify);
    add_function(certify);
    add_grid(certify);
    certify->add_option("--method", cfg.method, "theoremA | corollary1 | theorem2 | definition");
    certify->add_option("--knots", cfg.knots, "n-1 interior knots for theorem2")->delimiter(',');
    certify->add_option("--nodes", cfg.nodes, "n interpolation nodes for definition")->delimiter(',');

    auto* support = app.add_subcommand("support", "build the support-type function through n-1 knots");
    add_system(support);
    add_function(support);
    add_grid(support);
    support->add_option("--knots", cfg.knots, "n-1 interior knots")->delimiter(',')->required();

    auto* reproduce = app.add_subcommand("reproduce-paper-example",
                                         "x^3 against (1, x, x^2) with knots 0 and 1, self-checked");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help(), 0);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) throw UsageError(app.help(), 0);
        throw UsageError(e.what());
    }

    if (*classify) cfg.command = Command::classify;
    if (*dd) cfg.command = Command::dd;
    if (*certify) cfg.command = Command::certify;
    if (*support) cfg.command = Command::support;
    if (*reproduce) cfg.command = Command::reproduce;
    if (!grid.empty()) {
        try {
            cfg.grid = parse_grid(grid);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    cfg.format = format == "structured" ? OutputFormat::structured
                 : format == "columns"  ? OutputFormat::columns
                                        : OutputFormat::human;
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Outcome o;
    switch (cfg.command) {
    case Command::classify: o = run_classify(cfg); break;
    case Command::dd: o = run_dd(cfg); break;
    case Command::certify: o = run_certify(cfg); break;
    case Command::support: o = run_support(cfg); break;
    case Command::reproduce: o = run_reproduce(cfg); break;
    }
    o.document["exit_status"] = o.status;

    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) throw UsageError("cannot write '" + cfg.out_path + "'");
    }
    std::ostream& sink = cfg.out_path.empty() ? out : file;
    switch (cfg.format) {
    case OutputFormat::structured: sink << o.document.dump(2) << '\n'; break;
    case OutputFormat::columns:
        if (!o.has_columns) throw UsageError("columns output is available for support, definition and theorem2");
        sink << o.columns;
        break;
    case OutputFormat::human:
        sink << o.human << "seed: " << cfg.seed << "  atol: " << num(cfg.atol) << "  rtol: " << num(cfg.rtol)
             << "  budget: " << cfg.budget << '\n';
        break;
    }
    if (o.status == kExitError && cfg.format != OutputFormat::human) err << o.human;
    return o.status;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        return run(parse_args(argc, argv), out, err);
    } catch (const UsageError& e) {
        (e.exit_code == 0 ? out : err) << e.what() << (e.exit_code == 0 ? "" : "\n");
        return e.exit_code;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

} // namespace gconvex::cli
