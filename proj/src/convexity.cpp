#include "gconvex/convexity.hpp"

#include "gconvex/error.hpp"
#include "gconvex/tuples.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace gconvex {

std::string to_string(CertificationMethod m) {
    switch (m) {
    case CertificationMethod::theorem_a: return "theoremA";
    case CertificationMethod::corollary1: return "corollary1";
    case CertificationMethod::theorem2: return "theorem2";
    case CertificationMethod::definition: return "definition";
    }
    return "unknown";
}

std::string to_string(Verdict v) {
    return v == Verdict::certified_on_sample ? "certified-on-sample" : "violated";
}

std::size_t region_of(double x, const PointTuple& knots, double exclusion) noexcept {
    std::size_t below = 0;
    for (double k : knots.points()) {
        if (std::abs(x - k) <= exclusion) return 0;
        if (k < x) ++below;
    }
    return below + 1;
}

namespace {

// Grid points inside the interval; the grid itself must be strictly increasing.
std::vector<double> usable_points(const ChebyshevSystem& system, std::span<const double> grid) {
    std::vector<double> pts;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0 && !(grid[i] > grid[i - 1])) throw Error(ErrorKind::argument, "grid must be strictly increasing");
        if (system.interval().contains(grid[i])) pts.push_back(grid[i]);
    }
    return pts;
}

std::string describe(const PointTuple& pts) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? ", " : "") << pts[i];
    os << ')';
    return os.str();
}

PointTuple gather(std::span<const double> pts, std::span<const std::size_t> idx) {
    std::vector<double> out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) out[i] = pts[idx[i]];
    return PointTuple(std::move(out));
}

// Grid points are already distinct; the separation floor only matters for
// hand-picked tuples.
const DeterminantOptions kGridDeterminants{0.0};

void record(ConvexityCertificate& cert, double value, double tol, const PointTuple& where) {
    cert.min_value = std::min(cert.min_value, value);
    if (value >= -tol) return;
    cert.verdict = Verdict::violated;
    // Strict comparison keeps the lexicographically first tuple among ties.
    if (!cert.witness || value < cert.witness->value) cert.witness = Witness{where, value, tol};
}

void require_interior_knots(const ChebyshevSystem& system, const PointTuple& knots, std::size_t expected,
                            const char* what) {
    if (knots.size() != expected)
        throw Error(ErrorKind::argument, "need " + std::to_string(expected) + " " + what + ", got " +
                                             std::to_string(knots.size()));
    if (!knots.ordered()) throw Error(ErrorKind::argument, std::string(what) + " must be strictly increasing");
    for (double k : knots.points())
        if (!system.interval().interior_contains(k))
            throw Error(ErrorKind::precondition, std::string(what) + " " + std::to_string(k) +
                                                     " is not in the interior of " + system.interval().to_string());
}

} // namespace

void require_positive_on_grid(const ChebyshevSystem& system, std::span<const double> pts,
                              const TupleSampling& sampling, const std::string& label) {
    const SystemClassification c = classify_on_grid(system, pts, sampling);
    if (c.verdict == SystemClassification::Verdict::positive) return;
    std::string msg = label + " is " + to_string(c.verdict) + " on the grid, a positive system is required";
    if (c.witness) msg += "; witness " + describe(*c.witness);
    throw Error(ErrorKind::precondition, msg);
}

ConvexityCertificate certify_theorem_a(const ChebyshevSystem& system, const FunctionSource& f,
                                       std::span<const double> grid, const CertifyOptions& opts) {
    const std::size_t n = system.order();
    const std::vector<double> pts = usable_points(system, grid);
    if (pts.size() < n + 1)
        throw Error(ErrorKind::argument, "grid needs at least " + std::to_string(n + 1) + " points in the interval");
    require_positive_on_grid(system, pts, opts.sampling, "system");

    ConvexityCertificate cert;
    cert.method = CertificationMethod::theorem_a;
    cert.options = opts;
    cert.linear_table_interpolation = f.uses_linear_interpolation();
    const TuplePlan plan = plan_tuples(pts.size(), n + 1, opts.sampling);
    cert.exhaustive = plan.exhaustive;
    for (std::size_t t = 0; t < plan.count(); ++t) {
        const PointTuple tuple = gather(pts, plan.tuple(t));
        const SignedValue d = d_det(system, tuple, f, kGridDeterminants);
        ++cert.tuples_checked;
        record(cert, d.value, opts.atol + opts.rtol * d.scale, tuple);
    }
    return cert;
}

ConvexityCertificate certify_corollary1(const ChebyshevSystem& system, const FunctionSource& f,
                                        std::span<const double> grid, const CertifyOptions& opts) {
    const std::size_t n = system.order();
    if (n < 2) throw Error(ErrorKind::argument, "the window criterion needs a system of order >= 2");
    const std::vector<double> pts = usable_points(system, grid);
    if (pts.size() < n + 1)
        throw Error(ErrorKind::argument, "grid needs at least " + std::to_string(n + 1) + " points in the interval");
    require_positive_on_grid(system, pts, opts.sampling, "system");
    require_positive_on_grid(system.truncated(n - 1), pts, opts.sampling, "truncated system");

    ConvexityCertificate cert;
    cert.method = CertificationMethod::corollary1;
    cert.options = opts;
    cert.linear_table_interpolation = f.uses_linear_interpolation();

    // Windows recur across tuples; each n-subset is evaluated once.
    std::map<std::vector<std::size_t>, std::optional<double>> cache;
    const auto window = [&](std::span<const std::size_t> idx) -> std::optional<double> {
        std::vector<std::size_t> key(idx.begin(), idx.end());
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        std::optional<double> v;
        try {
            v = gdd(system, gather(pts, idx), f, kGridDeterminants).value;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::near_singular) throw;
        }
        cache.emplace(std::move(key), v);
        return v;
    };

    const TuplePlan plan = plan_tuples(pts.size(), n + 1, opts.sampling);
    cert.exhaustive = plan.exhaustive;
    for (std::size_t t = 0; t < plan.count(); ++t) {
        const auto idx = plan.tuple(t);
        const auto lower = window(idx.first(n));
        const auto upper = window(idx.last(n));
        if (!lower || !upper) {
            ++cert.tuples_skipped;
            continue;
        }
        ++cert.tuples_checked;
        const double tol = opts.atol + opts.rtol * std::max(std::abs(*lower), std::abs(*upper));
        record(cert, *upper - *lower, tol, gather(pts, idx));
    }
    return cert;
}

MonotonicityReport scan_theorem2(const ChebyshevSystem& system, const FunctionSource& f, const PointTuple& knots,
                                 std::span<const double> grid, const CertifyOptions& opts) {
    const std::size_t n = system.order();
    if (n < 2) throw Error(ErrorKind::argument, "the monotone scan needs a system of order >= 2");
    require_interior_knots(system, knots, n - 1, "knots");

    MonotonicityReport report;
    report.knots = knots;
    report.options = opts;
    const double exclusion = opts.knot_exclusion * system.interval().reference_span();
    for (double x : usable_points(system, grid)) {
        if (region_of(x, knots, exclusion) == 0) {
            ++report.excluded;
            continue;
        }
        try {
            report.scan.push_back({x, gdd(system, PointTuple::sorted(knots.with(x).values()), f).value});
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::near_singular && e.kind() != ErrorKind::degenerate) throw;
            ++report.excluded;
        }
    }
    for (std::size_t i = 0; i + 1 < report.scan.size(); ++i) {
        const double a = report.scan[i].value, b = report.scan[i + 1].value;
        const double tol = opts.atol + opts.rtol * std::max(std::abs(a), std::abs(b));
        if (a - b > tol) report.violations.push_back({i, a - b, tol});
    }
    return report;
}

ConvexityCertificate verify_definition(const ChebyshevSystem& system, const FunctionSource& f,
                                       const PointTuple& nodes, std::span<const double> grid,
                                       const CertifyOptions& opts) {
    const std::size_t n = system.order();
    if (nodes.size() != n)
        throw Error(ErrorKind::argument, "need " + std::to_string(n) + " nodes, got " + std::to_string(nodes.size()));
    if (!nodes.ordered()) throw Error(ErrorKind::argument, "nodes must be strictly increasing");
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = f.eval(nodes[i]);
    const OmegaCombination omega = interpolate(system, nodes, values);

    ConvexityCertificate cert;
    cert.method = CertificationMethod::definition;
    cert.options = opts;
    cert.exhaustive = true;
    cert.linear_table_interpolation = f.uses_linear_interpolation();
    const double exclusion = opts.knot_exclusion * system.interval().reference_span();
    for (double x : usable_points(system, grid)) {
        const std::size_t region = region_of(x, nodes, exclusion);
        if (region == 0) continue;
        // Region 1 needs (−1)ⁿ, region i+1 (between xᵢ and x_{i+1}) needs
        // (−1)^{n+i}, region n+1 needs +1; all three are (−1)^{n+region−1}.
        const double sign = (n + region - 1) % 2 == 0 ? 1.0 : -1.0;
        const double fx = f.eval(x), wx = omega(x);
        const double tol = opts.atol + opts.rtol * std::max(std::abs(fx), std::abs(wx));
        ++cert.tuples_checked;
        record(cert, sign * (fx - wx), tol, nodes.with(x));
    }
    return cert;
}

} // namespace gconvex
