#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gconvex {

/// Abscissae fed to a collocation determinant.  Order is significant: it is
/// the column order of the matrix.  `ordered()` records whether the points
/// happen to be strictly increasing.
class PointTuple {
public:
    PointTuple() = default;
    PointTuple(std::initializer_list<double> pts) : PointTuple(std::vector<double>(pts)) {}
    explicit PointTuple(std::vector<double> pts);

    /// Same points, sorted ascending.
    [[nodiscard]] static PointTuple sorted(std::vector<double> pts);

    [[nodiscard]] std::span<const double> points() const noexcept { return points_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return points_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
    [[nodiscard]] double operator[](std::size_t i) const { return points_[i]; }
    [[nodiscard]] bool ordered() const noexcept { return ordered_; }

    /// Smallest |x_i - x_j| over all pairs; +inf for fewer than two points.
    [[nodiscard]] double min_separation() const noexcept;

    /// Contiguous slice [first, first + count).
    [[nodiscard]] PointTuple slice(std::size_t first, std::size_t count) const;

    /// Copy with `x` appended.
    [[nodiscard]] PointTuple with(double x) const;

    friend bool operator==(const PointTuple&, const PointTuple&) = default;

private:
    std::vector<double> points_;
    bool ordered_ = true;
};

} // namespace gconvex
