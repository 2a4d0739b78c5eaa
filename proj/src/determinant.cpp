#include "gconvex/determinant.hpp"

#include "gconvex/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gconvex {

Matrix Matrix::transposed() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::row_scale() const noexcept {
    double scale = 1.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j) row = std::max(row, std::abs((*this)(i, j)));
        scale *= row;
    }
    return scale;
}

LuFactorization::LuFactorization(Matrix a) : lu_(std::move(a)), perm_(lu_.size()) {
    const std::size_t n = lu_.size();
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu_(i, k)) > std::abs(lu_(p, k))) p = i;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
            std::swap(perm_[k], perm_[p]);
            det_ = -det_;
        }
        const double pivot = lu_(k, k);
        det_ *= pivot;
        if (pivot == 0.0) continue;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = lu_(i, k) / pivot;
            lu_(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
        }
    }
}

std::vector<double> LuFactorization::solve(std::span<const double> rhs) const {
    const std::size_t n = lu_.size();
    if (rhs.size() != n) throw Error(ErrorKind::argument, "right-hand side size mismatch");
    if (det_ == 0.0) throw Error(ErrorKind::near_singular, "matrix is singular");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = rhs[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    return x;
}

double zero_tolerance(double scale) noexcept { return 64.0 * std::numeric_limits<double>::epsilon() * scale; }

SignedValue SignedValue::classify(double value, double scale) noexcept {
    Sign s = Sign::zero;
    if (std::abs(value) > zero_tolerance(scale)) s = value > 0 ? Sign::positive : Sign::negative;
    return {value, s, scale};
}

namespace {

std::string describe(const PointTuple& pts) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? ", " : "") << pts[i];
    os << ')';
    return os.str();
}

void check_points(const Interval& interval, const PointTuple& pts, const DeterminantOptions& opts) {
    for (double x : pts.points())
        if (!interval.contains(x))
            throw Error(ErrorKind::domain, "point " + std::to_string(x) + " outside " + interval.to_string());
    const double floor = opts.min_separation.value_or(1e-9 * interval.reference_span());
    const double sep = pts.min_separation();
    if (sep <= 0.0 || sep < floor)
        throw Error(ErrorKind::degenerate, "points " + describe(pts) + " closer than " + std::to_string(floor));
}

} // namespace

Matrix collocation_matrix(std::span<const BasisFunction> basis, const Interval& interval, const PointTuple& pts,
                          const FunctionSource* f, const DeterminantOptions& opts) {
    const std::size_t rows = basis.size() + (f ? 1 : 0);
    if (pts.size() != rows)
        throw Error(ErrorKind::argument, "need " + std::to_string(rows) + " points, got " + std::to_string(pts.size()));
    check_points(interval, pts, opts);
    Matrix m(rows);
    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = basis[i](pts[j]);
        if (!f) continue;
        try {
            m(rows - 1, j) = f->eval(pts[j]);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::domain) throw;
            throw Error(ErrorKind::source, e.what());
        }
    }
    return m;
}

namespace {

SignedValue det_of(const Matrix& m) {
    const double scale = m.row_scale();
    return SignedValue::classify(LuFactorization(m).determinant(), scale);
}

} // namespace

SignedValue v_det(const ChebyshevSystem& system, const PointTuple& pts, const DeterminantOptions& opts) {
    return det_of(collocation_matrix(system.basis(), system.interval(), pts, nullptr, opts));
}

SignedValue d_det(const ChebyshevSystem& system, const PointTuple& pts, const FunctionSource& f,
                  const DeterminantOptions& opts) {
    return det_of(collocation_matrix(system.basis(), system.interval(), pts, &f, opts));
}

SignedValue bordered_det(std::span<const BasisFunction> basis, const Interval& interval, const PointTuple& pts,
                         const FunctionSource& f, const DeterminantOptions& opts) {
    return det_of(collocation_matrix(basis, interval, pts, &f, opts));
}

} // namespace gconvex
