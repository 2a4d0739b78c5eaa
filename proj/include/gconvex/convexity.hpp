#pragma once

#include "gconvex/divided_differences.hpp"
#include "gconvex/interpolation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gconvex {

struct CertifyOptions {
    double atol = 1e-10;
    double rtol = 1e-8;
    TupleSampling sampling;
    /// Grid points closer than this fraction of the reference span to a
    /// knot or node are not sign-checked.
    double knot_exclusion = 1e-4;
};

enum class CertificationMethod { theorem_a, corollary1, theorem2, definition };
enum class Verdict { certified_on_sample, violated };

[[nodiscard]] std::string to_string(CertificationMethod m);
[[nodiscard]] std::string to_string(Verdict v);

struct Witness {
    PointTuple points;
    /// The violating quantity recomputed at `points` (negative).
    double value = 0.0;
    double tolerance = 0.0;
};

/// Verdict from a finite sample.  Certified means no sampled quantity fell
/// below -tol; it is evidence, not a proof on the continuum.
struct ConvexityCertificate {
    CertificationMethod method = CertificationMethod::theorem_a;
    Verdict verdict = Verdict::certified_on_sample;
    std::size_t tuples_checked = 0;
    std::size_t tuples_skipped = 0; // near-singular divided differences
    bool exhaustive = false;
    double min_value = kInfinity;
    std::optional<Witness> witness;
    CertifyOptions options;
    bool linear_table_interpolation = false;
};

/// Precondition error (naming the witness) unless `system` classifies as
/// positive on `pts`.
void require_positive_on_grid(const ChebyshevSystem& system, std::span<const double> pts,
                              const TupleSampling& sampling, const std::string& label);

/// Min of D_n(x₁,…,x_{n+1}; f) over ordered grid tuples.  Precondition
/// error if the system is not positive on the grid.
[[nodiscard]] ConvexityCertificate certify_theorem_a(const ChebyshevSystem& system, const FunctionSource& f,
                                                     std::span<const double> grid,
                                                     const CertifyOptions& opts = {});

/// Min of [x₂..x_{n+1}; f] − [x₁..x_n; f] over ordered grid tuples.  Needs
/// both the system and its (n−1)-truncation positive on the grid.
[[nodiscard]] ConvexityCertificate certify_corollary1(const ChebyshevSystem& system, const FunctionSource& f,
                                                      std::span<const double> grid,
                                                      const CertifyOptions& opts = {});

struct ScanPoint {
    double x = 0.0;
    double value = 0.0;
};

struct MonotonicityViolation {
    std::size_t index = 0; // scan[index] > scan[index + 1] beyond tolerance
    double drop = 0.0;
    double tolerance = 0.0;
};

struct MonotonicityReport {
    PointTuple knots;
    std::vector<ScanPoint> scan;
    std::vector<MonotonicityViolation> violations;
    std::size_t excluded = 0;
    CertifyOptions options;

    [[nodiscard]] bool monotone() const noexcept { return violations.empty(); }
};

/// x ↦ [knots, x; f]_ω over the grid minus knot neighbourhoods.  Knots must
/// lie in the interior of the interval.
[[nodiscard]] MonotonicityReport scan_theorem2(const ChebyshevSystem& system, const FunctionSource& f,
                                               const PointTuple& knots, std::span<const double> grid,
                                               const CertifyOptions& opts = {});

/// Interpolates f at the n nodes and checks the alternating sign pattern of
/// f − ω on the grid: (−1)ⁿ left of x₁, (−1)^{n+i} on [xᵢ, x_{i+1}],
/// positive right of x_n.
[[nodiscard]] ConvexityCertificate verify_definition(const ChebyshevSystem& system, const FunctionSource& f,
                                                     const PointTuple& nodes, std::span<const double> grid,
                                                     const CertifyOptions& opts = {});

/// Index of the region of x among sorted knots: 1 left of the first knot,
/// k+1 between knot k and k+1.  Returns 0 within `exclusion` of any knot.
[[nodiscard]] std::size_t region_of(double x, const PointTuple& knots, double exclusion) noexcept;

} // namespace gconvex
