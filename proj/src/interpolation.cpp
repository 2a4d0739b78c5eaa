#include "gconvex/interpolation.hpp"

#include "gconvex/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gconvex {

double OmegaCombination::operator()(double x) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < coefficients.size(); ++i) acc += coefficients[i] * system[i](x);
    return acc;
}

OmegaCombination interpolate(const ChebyshevSystem& system, const PointTuple& pts, std::span<const double> values) {
    const std::size_t n = system.order();
    if (pts.size() != n || values.size() != n)
        throw Error(ErrorKind::argument, "interpolation needs " + std::to_string(n) + " nodes and values");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    std::vector<double> nodes(n), rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
        nodes[j] = pts[order[j]];
        rhs[j] = values[order[j]];
    }

    const Matrix m = collocation_matrix(system.basis(), system.interval(), PointTuple(nodes), nullptr);
    // Σᵢ cᵢ ωᵢ(x_j) = y_j is the transposed collocation system; det is shared.
    const LuFactorization lu(m.transposed());
    if (SignedValue::classify(lu.determinant(), m.row_scale()).sign == Sign::zero)
        throw Error(ErrorKind::near_singular, "collocation matrix is singular at the interpolation nodes");
    std::vector<double> c = lu.solve(rhs);

    double worst = 0.0, scale = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        double fitted = 0.0, magnitude = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            fitted += c[i] * m(i, j);
            magnitude += std::abs(c[i] * m(i, j));
        }
        worst = std::max(worst, std::abs(fitted - rhs[j]));
        scale = std::max({scale, magnitude, std::abs(rhs[j])});
    }
    if (!(worst <= 1e-9 * scale))
        throw Error(ErrorKind::near_singular, "interpolation residual " + std::to_string(worst) + " too large");
    return {system, std::move(c)};
}

OmegaCombination constrained_interpolate(const ChebyshevSystem& system, const PointTuple& knots,
                                         const FunctionSource& f, double c_n) {
    const std::size_t n = system.order();
    if (n < 2) throw Error(ErrorKind::argument, "constrained interpolation needs a system of order >= 2");
    if (knots.size() != n - 1)
        throw Error(ErrorKind::argument, "need " + std::to_string(n - 1) + " knots, got " + std::to_string(knots.size()));
    const BasisFunction& last = system[n - 1];
    std::vector<double> rhs(n - 1);
    for (std::size_t k = 0; k < n - 1; ++k) rhs[k] = f.eval(knots[k]) - c_n * last(knots[k]);
    OmegaCombination head = interpolate(system.truncated(n - 1), knots, rhs);
    head.coefficients.push_back(c_n);
    return {system, std::move(head.coefficients)};
}

double lemma1_residual(const ChebyshevSystem& system, const PointTuple& knots, const FunctionSource& f, double c_n,
                       double x) {
    const std::size_t n = system.order();
    const OmegaCombination omega = constrained_interpolate(system, knots, f, c_n);
    const double lhs = f.eval(x) - omega(x);

    const PointTuple extended = knots.with(x);
    const SignedValue d = bordered_det(system.basis().first(n - 1), system.interval(), extended, f);
    const SignedValue v = v_det(system, extended);
    const SignedValue v_knots = v_det(system.truncated(n - 1), knots);
    if (v_knots.sign == Sign::zero) throw Error(ErrorKind::near_singular, "V_{n-1} vanishes at the knots");
    const double rhs = (d.value - c_n * v.value) / v_knots.value;
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

} // namespace gconvex
