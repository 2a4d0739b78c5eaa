#include "gconvex/divided_differences.hpp"

#include "gconvex/error.hpp"

#include <algorithm>
#include <cmath>

namespace gconvex {

double classical_dd(std::span<const double> pts, const FunctionSource& f) {
    const std::size_t k = pts.size();
    if (k == 0) throw Error(ErrorKind::argument, "divided difference of zero points");
    std::vector<double> sorted(pts.begin(), pts.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::degenerate, "coincident points in classical divided difference");

    // table[i] holds [x_i, ..., x_{i+level}; f] after each pass.
    std::vector<double> table(k);
    for (std::size_t i = 0; i < k; ++i) table[i] = f.eval(pts[i]);
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = 0; i + level < k; ++i)
            table[i] = (table[i + 1] - table[i]) / (pts[i + level] - pts[i]);
    return table[0];
}

namespace {

SignedValue require_nonzero(SignedValue v, const char* what, const PointTuple& pts) {
    if (v.sign == Sign::zero) {
        std::string where;
        for (std::size_t i = 0; i < pts.size(); ++i) where += (i ? ", " : "") + std::to_string(pts[i]);
        throw Error(ErrorKind::near_singular, std::string(what) + " vanishes at (" + where + ")");
    }
    return v;
}

struct Increment {
    double value = 0.0;
    double conditioning = 1.0; // of the upper window x₂..x_{n+1}
};

Increment increment(const ChebyshevSystem& system, const PointTuple& pts, const FunctionSource& f,
                    const DeterminantOptions& opts) {
    const std::size_t n = system.order();
    if (n < 2) throw Error(ErrorKind::argument, "the window recurrence needs a system of order >= 2");
    if (pts.size() != n + 1)
        throw Error(ErrorKind::argument, "need " + std::to_string(n + 1) + " points, got " + std::to_string(pts.size()));
    const SignedValue d = d_det(system, pts, f, opts);
    const PointTuple inner = pts.slice(1, n - 1);
    const PointTuple upper = pts.slice(1, n);
    const PointTuple lower = pts.slice(0, n);
    const SignedValue v_inner = require_nonzero(v_det(system.truncated(n - 1), inner, opts), "V_{n-1}", inner);
    const SignedValue v_upper = require_nonzero(v_det(system, upper, opts), "V_n", upper);
    const SignedValue v_lower = require_nonzero(v_det(system, lower, opts), "V_n", lower);
    return {d.value * v_inner.value / (v_upper.value * v_lower.value), std::abs(v_upper.value) / v_upper.scale};
}

} // namespace

DividedDifference gdd(const ChebyshevSystem& system, const PointTuple& pts, const FunctionSource& f,
                      const DeterminantOptions& opts) {
    const std::size_t n = system.order();
    if (pts.size() != n)
        throw Error(ErrorKind::argument, "need " + std::to_string(n) + " points, got " + std::to_string(pts.size()));
    const SignedValue v = require_nonzero(v_det(system, pts, opts), "V_n", pts);
    if (n >= 2) {
        const PointTuple head = PointTuple::sorted(pts.values()).slice(0, n - 1);
        require_nonzero(v_det(system.truncated(n - 1), head, opts), "V_{n-1}", head);
    }
    const SignedValue num = bordered_det(system.basis().first(n - 1), system.interval(), pts, f, opts);
    return {num.value / v.value, pts, n, std::abs(v.value) / v.scale};
}

RecurrenceCheck recurrence_identity(const ChebyshevSystem& system, const PointTuple& pts, const FunctionSource& f,
                                    const DeterminantOptions& opts) {
    const std::size_t n = system.order();
    if (n < 2) throw Error(ErrorKind::argument, "the window recurrence needs a system of order >= 2");
    if (pts.size() != n + 1)
        throw Error(ErrorKind::argument, "need " + std::to_string(n + 1) + " points, got " + std::to_string(pts.size()));
    RecurrenceCheck out;
    out.lhs = gdd(system, pts.slice(1, n), f, opts).value - gdd(system, pts.slice(0, n), f, opts).value;
    out.rhs = increment(system, pts, f, opts).value;
    out.residual = std::abs(out.lhs - out.rhs) / std::max({std::abs(out.lhs), std::abs(out.rhs), 1.0});
    return out;
}

double recurrence_identity_residual(const ChebyshevSystem& system, const PointTuple& pts, const FunctionSource& f,
                                    const DeterminantOptions& opts) {
    return recurrence_identity(system, pts, f, opts).residual;
}

double window_increment(const ChebyshevSystem& system, const PointTuple& pts, const FunctionSource& f,
                        const DeterminantOptions& opts) {
    return increment(system, pts, f, opts).value;
}

std::vector<DividedDifference> gdd_sliding(const ChebyshevSystem& system, const PointTuple& pts,
                                           const FunctionSource& f, const DeterminantOptions& opts) {
    const std::size_t n = system.order();
    if (pts.size() < n)
        throw Error(ErrorKind::argument, "need at least " + std::to_string(n) + " points, got " +
                                             std::to_string(pts.size()));
    std::vector<DividedDifference> out;
    out.push_back(gdd(system, pts.slice(0, n), f, opts));
    for (std::size_t s = 1; s + n <= pts.size(); ++s) {
        if (n == 1) {
            out.push_back(gdd(system, pts.slice(s, 1), f, opts));
            continue;
        }
        const Increment inc = increment(system, pts.slice(s - 1, n + 1), f, opts);
        out.push_back({out.back().value + inc.value, pts.slice(s, n), n, inc.conditioning});
    }
    return out;
}

DividedDifference gdd_fast(const ChebyshevSystem& system, const PointTuple& pts, const FunctionSource& f,
                           const DeterminantOptions& opts) {
    const std::size_t n = system.order();
    if (pts.size() != n)
        throw Error(ErrorKind::argument, "need " + std::to_string(n) + " points, got " + std::to_string(pts.size()));
    if (n == 1) return gdd(system, pts, f, opts);

    std::vector<double> s = pts.values();
    std::sort(s.begin(), s.end());
    std::size_t widest = 0;
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (s[i + 1] - s[i] > s[widest + 1] - s[widest]) widest = i;
    const double anchor = 0.5 * (s[widest] + s[widest + 1]);

    std::vector<double> chain{anchor};
    chain.insert(chain.end(), s.begin(), s.end());
    const PointTuple window(std::move(chain));
    const DividedDifference base = gdd(system, window.slice(0, n), f, opts);
    const Increment inc = increment(system, window, f, opts);
    return {base.value + inc.value, pts, n, inc.conditioning};
}

} // namespace gconvex
