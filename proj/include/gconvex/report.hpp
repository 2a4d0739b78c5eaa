#pragma once

#include "gconvex/convexity.hpp"
#include "gconvex/support.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>

namespace gconvex {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "gconvex.report/1";

/// Finite values as numbers; ±inf and NaN as the strings "inf", "-inf", "nan".
[[nodiscard]] Json real_json(double v);

[[nodiscard]] Json to_json(const Interval& iv);
[[nodiscard]] Json to_json(const ChebyshevSystem& system);
[[nodiscard]] Json to_json(const PointTuple& pts);
[[nodiscard]] Json to_json(const SystemClassification& c);
[[nodiscard]] Json to_json(const DividedDifference& dd);
[[nodiscard]] Json to_json(const ConvexityCertificate& cert);
[[nodiscard]] Json to_json(const MonotonicityReport& report);
[[nodiscard]] Json to_json(const LimitDiagnostics& diag);
[[nodiscard]] Json to_json(const SignPatternReport& report);
[[nodiscard]] Json to_json(const OmegaCombination& omega);
[[nodiscard]] Json to_json(const SupportResult& result);

/// Plot-ready columns `x f omega diff segment`, one row per grid point inside
/// the interval, in grid order.  Segment 0 marks points within the knot
/// exclusion radius.
void write_columns(std::ostream& out, const FunctionSource& f, const OmegaCombination& omega,
                   const PointTuple& knots, std::span<const double> grid, double knot_exclusion);

} // namespace gconvex
