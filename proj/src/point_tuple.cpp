#include "gconvex/point_tuple.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gconvex {

PointTuple::PointTuple(std::vector<double> pts) : points_(std::move(pts)) {
    ordered_ = std::adjacent_find(points_.begin(), points_.end(),
                                  [](double a, double b) { return !(a < b); }) == points_.end();
}

PointTuple PointTuple::sorted(std::vector<double> pts) {
    std::sort(pts.begin(), pts.end());
    return PointTuple(std::move(pts));
}

double PointTuple::min_separation() const noexcept {
    std::vector<double> s = points_;
    std::sort(s.begin(), s.end());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < s.size(); ++i) best = std::min(best, s[i] - s[i - 1]);
    return best;
}

PointTuple PointTuple::slice(std::size_t first, std::size_t count) const {
    return PointTuple(std::vector<double>(points_.begin() + static_cast<std::ptrdiff_t>(first),
                                          points_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

PointTuple PointTuple::with(double x) const {
    std::vector<double> p = points_;
    p.push_back(x);
    return PointTuple(std::move(p));
}

} // namespace gconvex
