#pragma once

#include "gconvex/convexity.hpp"
#include "gconvex/error.hpp"
#include "gconvex/interpolation.hpp"

#include <vector>

namespace gconvex {

struct LimitStep {
    double h = 0.0;
    double value = 0.0;
};

struct LimitDiagnostics {
    std::vector<LimitStep> h_sequence;
    bool converged = false;
    double estimate = 0.0;
    /// Values did not increase as h shrank (within the convergence tolerance).
    bool monotone_ok = true;
};

class LimitDivergedError : public Error {
public:
    LimitDivergedError(const std::string& what, LimitDiagnostics trace)
        : Error(ErrorKind::limit_diverged, what), trace_(std::move(trace)) {}

    [[nodiscard]] const LimitDiagnostics& trace() const noexcept { return trace_; }

private:
    LimitDiagnostics trace_;
};

struct LimitOptions {
    double atol = 1e-10;
    double rtol = 1e-8;
    int max_halvings = 40;
};

/// lim_{x→x_{n−1}⁺} [x₁,…,x_{n−1},x; f]_ω by geometric halving of
/// h₀ = min(1e-2·span, half the room to the right end).
[[nodiscard]] LimitDiagnostics estimate_cn(const ChebyshevSystem& system, const FunctionSource& f,
                                           const PointTuple& knots, const LimitOptions& opts = {});

struct PatternSegment {
    std::size_t index = 0; // k of I_k, 1-based
    double lo = -kInfinity;
    double hi = kInfinity;
    int required_sign = 1; // +1: f − ω ≥ 0, −1: f − ω ≤ 0
    std::size_t points_checked = 0;
    std::vector<ScanPoint> violations; // (x, f(x) − ω(x))
};

struct SignPatternReport {
    std::vector<PatternSegment> segments;
    std::size_t excluded = 0;
    bool overall = true;
    double atol = 1e-10;
    double rtol = 1e-8;
};

struct PatternOptions {
    double atol = 1e-10;
    double rtol = 1e-8;
    double knot_exclusion = 1e-4;
};

/// Checks f − ω on I₁ = (−∞,x₁)∩I, I_k = (x_{k−1},x_k), I_n = (x_{n−1},∞)∩I
/// against the alternating requirement (−1)^{n−k+1}(f − ω) ≥ 0 for k < n
/// and f − ω ≥ 0 on I_n.  Violations are reported, never thrown.
[[nodiscard]] SignPatternReport verify_sign_pattern(const ChebyshevSystem& system, const FunctionSource& f,
                                                    const OmegaCombination& omega, const PointTuple& knots,
                                                    std::span<const double> grid,
                                                    const PatternOptions& opts = {});

struct SupportOptions {
    LimitOptions limit;
    PatternOptions pattern;
    TupleSampling sampling;
    /// Skip the positivity classification of the system and its truncation.
    bool assume_positive = false;
};

struct SupportResult {
    PointTuple knots;
    OmegaCombination omega;
    LimitDiagnostics c_n;
    SignPatternReport pattern;
};

/// estimate_cn → constrained_interpolate → verify_sign_pattern.
[[nodiscard]] SupportResult build_support(const ChebyshevSystem& system, const FunctionSource& f,
                                          const PointTuple& knots, std::span<const double> grid,
                                          const SupportOptions& opts = {});

} // namespace gconvex
