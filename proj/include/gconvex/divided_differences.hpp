#pragma once

#include "gconvex/determinant.hpp"

#include <cstddef>
#include <vector>

namespace gconvex {

inline constexpr double kIllConditioned = 1e-8;

struct DividedDifference {
    double value = 0.0;
    PointTuple points;
    std::size_t order = 0;     // n of the system; 0 for classical
    double conditioning = 1.0; // |V_n| / scale of the V_n matrix

    [[nodiscard]] bool ill_conditioned() const noexcept { return conditioning < kIllConditioned; }
};

/// Newton's recurrence over contiguous subranges.  Degenerate-input error on
/// coincident points.
[[nodiscard]] double classical_dd(std::span<const double> pts, const FunctionSource& f);

/// [x₁,…,x_n; f]_ω = D_{n−1}(x₁,…,x_n; f) / V_n(x₁,…,x_n).
///
/// Near-singular error when V_n, or V_{n−1} at the first n−1 sorted points,
/// is indistinguishable from zero.
[[nodiscard]] DividedDifference gdd(const ChebyshevSystem& system, const PointTuple& pts,
                                    const FunctionSource& f, const DeterminantOptions& opts = {});

/// Both sides of the window recurrence
///
///   [x₂..x_{n+1}] − [x₁..x_n] = D_n(x₁..x_{n+1}) V_{n−1}(x₂..x_n)
///                               / (V_n(x₂..x_{n+1}) V_n(x₁..x_n))
///
/// evaluated independently.  `residual` is |lhs − rhs| / max(|lhs|, |rhs|, 1).
struct RecurrenceCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
};

[[nodiscard]] RecurrenceCheck recurrence_identity(const ChebyshevSystem& system, const PointTuple& pts,
                                                  const FunctionSource& f, const DeterminantOptions& opts = {});

[[nodiscard]] double recurrence_identity_residual(const ChebyshevSystem& system, const PointTuple& pts,
                                                  const FunctionSource& f, const DeterminantOptions& opts = {});

/// Right-hand side of the window recurrence for the n+1 points `pts`: the
/// increment from the window pts[0..n) to pts[1..n].
[[nodiscard]] double window_increment(const ChebyshevSystem& system, const PointTuple& pts,
                                      const FunctionSource& f, const DeterminantOptions& opts = {});

/// Divided difference of every n-point window of `pts` (m ≥ n points).  The
/// first window is a determinant ratio; each later one is the previous value
/// plus window_increment().
[[nodiscard]] std::vector<DividedDifference> gdd_sliding(const ChebyshevSystem& system, const PointTuple& pts,
                                                         const FunctionSource& f,
                                                         const DeterminantOptions& opts = {});

/// Same contract as gdd(), evaluated through one recurrence step: an anchor
/// point is placed in the widest gap of pts, the ratio is taken on the window
/// that swaps the anchor in for x_n, and the increment carries it to pts.
[[nodiscard]] DividedDifference gdd_fast(const ChebyshevSystem& system, const PointTuple& pts,
                                         const FunctionSource& f, const DeterminantOptions& opts = {});

} // namespace gconvex
