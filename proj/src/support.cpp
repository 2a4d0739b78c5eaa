#include "gconvex/support.hpp"

#include <algorithm>
#include <cmath>

namespace gconvex {

namespace {

void check_knots(const ChebyshevSystem& system, const PointTuple& knots) {
    const std::size_t n = system.order();
    if (n < 2) throw Error(ErrorKind::argument, "support construction needs a system of order >= 2");
    if (knots.size() != n - 1)
        throw Error(ErrorKind::argument, "need " + std::to_string(n - 1) + " knots, got " + std::to_string(knots.size()));
    if (!knots.ordered()) throw Error(ErrorKind::argument, "knots must be strictly increasing");
    for (double k : knots.points())
        if (!system.interval().interior_contains(k))
            throw Error(ErrorKind::precondition, "knot " + std::to_string(k) + " is not in the interior of " +
                                                     system.interval().to_string());
}

// The right-hand limit needs the table to resolve [x, x + h0] finely.
void check_table_resolution(const FunctionSource::Table& t, double from, double h0) {
    const double to = from + h0;
    const double limit = h0 / 64.0;
    if (t.x.front() > from || t.x.back() < to)
        throw Error(ErrorKind::resolution, "table does not cover the right neighbourhood of the last knot");
    auto it = std::upper_bound(t.x.begin(), t.x.end(), from);
    double prev = *std::prev(it);
    for (; it != t.x.end() && prev < to; ++it) {
        if (*it - prev > limit)
            throw Error(ErrorKind::resolution, "table spacing " + std::to_string(*it - prev) +
                                                   " exceeds h0/64 = " + std::to_string(limit) +
                                                   " near the last knot");
        prev = *it;
    }
}

} // namespace

LimitDiagnostics estimate_cn(const ChebyshevSystem& system, const FunctionSource& f, const PointTuple& knots,
                             const LimitOptions& opts) {
    check_knots(system, knots);
    const Interval& iv = system.interval();
    const double span = iv.reference_span();
    const double last = knots[knots.size() - 1];
    const double h0 = std::min(1e-2 * span, 0.5 * (iv.hi - last));
    const double floor = 1e-9 * span;
    if (h0 <= floor)
        throw Error(ErrorKind::geometry, "no room right of the last knot: h0 = " + std::to_string(h0));
    if (const auto* t = f.table_data()) check_table_resolution(*t, last, h0);

    LimitDiagnostics diag;
    double h = h0;
    for (int k = 0; k <= opts.max_halvings && h > floor; ++k, h *= 0.5) {
        const double value = gdd(system, knots.with(last + h), f).value;
        if (!diag.h_sequence.empty()) {
            const double prev = diag.h_sequence.back().value;
            const double tol = opts.atol + opts.rtol * std::abs(value);
            if (value > prev + tol) diag.monotone_ok = false;
            if (std::abs(value - prev) <= tol) diag.converged = true;
        }
        diag.h_sequence.push_back({h, value});
        diag.estimate = value;
        if (diag.converged) return diag;
    }
    std::string what = "right-hand limit did not settle after " + std::to_string(diag.h_sequence.size()) +
                       " steps (last h = " + std::to_string(diag.h_sequence.back().h) + ")";
    throw LimitDivergedError(what, std::move(diag));
}

SignPatternReport verify_sign_pattern(const ChebyshevSystem& system, const FunctionSource& f,
                                      const OmegaCombination& omega, const PointTuple& knots,
                                      std::span<const double> grid, const PatternOptions& opts) {
    const std::size_t n = system.order();
    if (n < 2 || knots.size() != n - 1 || !knots.ordered())
        throw Error(ErrorKind::argument, "sign pattern needs n-1 strictly increasing knots");
    const Interval& iv = system.interval();

    SignPatternReport report;
    report.atol = opts.atol;
    report.rtol = opts.rtol;
    for (std::size_t k = 1; k <= n; ++k) {
        PatternSegment seg;
        seg.index = k;
        seg.lo = k == 1 ? iv.lo : knots[k - 2];
        seg.hi = k == n ? iv.hi : knots[k - 1];
        seg.required_sign = (k == n || (n - k + 1) % 2 == 0) ? 1 : -1;
        report.segments.push_back(std::move(seg));
    }

    const double exclusion = opts.knot_exclusion * iv.reference_span();
    for (double x : grid) {
        if (!iv.contains(x)) continue;
        const std::size_t region = region_of(x, knots, exclusion);
        if (region == 0) {
            ++report.excluded;
            continue;
        }
        PatternSegment& seg = report.segments[region - 1];
        const double fx = f.eval(x);
        const double diff = fx - omega(x);
        const double tol = opts.atol + opts.rtol * std::abs(fx);
        ++seg.points_checked;
        if (seg.required_sign * diff < -tol) {
            seg.violations.push_back({x, diff});
            report.overall = false;
        }
    }
    return report;
}

SupportResult build_support(const ChebyshevSystem& system, const FunctionSource& f, const PointTuple& knots,
                            std::span<const double> grid, const SupportOptions& opts) {
    check_knots(system, knots);
    if (!opts.assume_positive) {
        std::vector<double> pts;
        for (double x : grid)
            if (system.interval().contains(x)) pts.push_back(x);
        require_positive_on_grid(system, pts, opts.sampling, "system");
        require_positive_on_grid(system.truncated(system.order() - 1), pts, opts.sampling, "truncated system");
    }
    LimitDiagnostics cn = estimate_cn(system, f, knots, opts.limit);
    OmegaCombination omega = constrained_interpolate(system, knots, f, cn.estimate);
    SignPatternReport pattern = verify_sign_pattern(system, f, omega, knots, grid, opts.pattern);
    return {knots, std::move(omega), std::move(cn), std::move(pattern)};
}

} // namespace gconvex
