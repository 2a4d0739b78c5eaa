#pragma once

#include "gconvex/determinant.hpp"

#include <span>
#include <vector>

namespace gconvex {

/// ω = c₁ω₁ + … + c_nω_n.
struct OmegaCombination {
    ChebyshevSystem system;
    std::vector<double> coefficients;

    [[nodiscard]] double operator()(double x) const;
};

/// The unique member of span(ω) through (pts, values).  Nodes are sorted
/// before assembly; coefficients come back in basis order.  Near-singular
/// error if V_n vanishes at the nodes or the node residual exceeds 1e-9 of
/// the problem scale.
[[nodiscard]] OmegaCombination interpolate(const ChebyshevSystem& system, const PointTuple& pts,
                                           std::span<const double> values);

/// Fixes c_n and solves the (n−1)×(n−1) system
///   Σ_{i<n} cᵢωᵢ(x_k) = f(x_k) − c_nω_n(x_k),  k = 1..n−1
/// so that ω agrees with f at the knots.
[[nodiscard]] OmegaCombination constrained_interpolate(const ChebyshevSystem& system, const PointTuple& knots,
                                                       const FunctionSource& f, double c_n);

/// Compares f(x) − ω(x) for the constrained interpolant against
///   (D_{n−1}(knots, x; f) − c_n V_n(knots, x)) / V_{n−1}(knots)
/// and returns |difference| / max(|lhs|, |rhs|, 1).
[[nodiscard]] double lemma1_residual(const ChebyshevSystem& system, const PointTuple& knots,
                                     const FunctionSource& f, double c_n, double x);

} // namespace gconvex
