#pragma once

#include "gconvex/function_source.hpp"
#include "gconvex/point_tuple.hpp"
#include "gconvex/system.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gconvex {

/// Dense row-major square matrix; only what the elimination needs.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    [[nodiscard]] Matrix transposed() const;

    /// Product over rows of the largest absolute entry.
    [[nodiscard]] double row_scale() const noexcept;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// LU with partial (row) pivoting.  Zero pivots are kept, so the determinant
/// of an exactly singular matrix comes out as 0; solve() refuses then.
class LuFactorization {
public:
    explicit LuFactorization(Matrix a);

    [[nodiscard]] double determinant() const noexcept { return det_; }
    [[nodiscard]] std::vector<double> solve(std::span<const double> rhs) const;

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
    double det_ = 1.0;
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

[[nodiscard]] constexpr int as_int(Sign s) noexcept { return static_cast<int>(s); }

/// A determinant together with the scale it was judged against.
struct SignedValue {
    double value = 0.0;
    Sign sign = Sign::zero;
    double scale = 0.0;

    [[nodiscard]] static SignedValue classify(double value, double scale) noexcept;
};

/// 64·ε·scale: below this a determinant is treated as zero.
[[nodiscard]] double zero_tolerance(double scale) noexcept;

struct DeterminantOptions {
    /// Minimum admissible point separation; default 1e-9 of the reference span.
    std::optional<double> min_separation;
};

/// Rows ω₁..ω_m (and f if given) evaluated at the columns x₁..x_k, where k
/// must equal the row count.  Points are checked against `interval` and the
/// separation floor.
[[nodiscard]] Matrix collocation_matrix(std::span<const BasisFunction> basis, const Interval& interval,
                                        const PointTuple& pts, const FunctionSource* f,
                                        const DeterminantOptions& opts = {});

/// det[ωᵢ(x_j)] for |pts| = n.
[[nodiscard]] SignedValue v_det(const ChebyshevSystem& system, const PointTuple& pts,
                                const DeterminantOptions& opts = {});

/// det of the ωᵢ(x_j) rows bordered by the f(x_j) row, for |pts| = n+1.
[[nodiscard]] SignedValue d_det(const ChebyshevSystem& system, const PointTuple& pts,
                                const FunctionSource& f, const DeterminantOptions& opts = {});

/// Bordered determinant on an explicit basis slice; an empty slice gives
/// the 1×1 determinant f(x₁).
[[nodiscard]] SignedValue bordered_det(std::span<const BasisFunction> basis, const Interval& interval,
                                       const PointTuple& pts, const FunctionSource& f,
                                       const DeterminantOptions& opts = {});

} // namespace gconvex
