#pragma once

#include "gconvex/point_tuple.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gconvex {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr std::uint64_t kDefaultSeed = 20041118;

struct Interval {
    double lo = -kInfinity;
    double hi = kInfinity;
    bool lo_open = true;
    bool hi_open = true;

    static Interval real_line() { return {}; }
    static Interval closed(double lo, double hi) { return {lo, hi, false, false}; }
    static Interval open(double lo, double hi) { return {lo, hi, true, true}; }

    /// Throws argument error unless lo < hi.
    void validate() const;

    [[nodiscard]] bool bounded() const noexcept;
    /// Membership honouring the open/closed flags.
    [[nodiscard]] bool contains(double x) const noexcept;
    /// Membership in I⁰.
    [[nodiscard]] bool interior_contains(double x) const noexcept { return lo < x && x < hi; }
    /// hi - lo for bounded intervals, 1 otherwise.  Every relative length in
    /// the library (separation floors, exclusion radii, insets) is a multiple
    /// of this.
    [[nodiscard]] double reference_span() const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// One member of a Chebyshev system.
struct BasisFunction {
    enum class Kind { monomial, exponential, cosine, sine, constant, negated_monomial };

    Kind kind = Kind::constant;
    double parameter = 1.0; // power, rate or constant value; unused for cos/sin

    static BasisFunction monomial(int power);
    static BasisFunction negated_monomial(int power);
    static BasisFunction exponential(double rate) { return {Kind::exponential, rate}; }
    static BasisFunction cosine() { return {Kind::cosine, 0.0}; }
    static BasisFunction sine() { return {Kind::sine, 0.0}; }
    static BasisFunction constant(double c) { return {Kind::constant, c}; }

    [[nodiscard]] double operator()(double x) const noexcept;
    /// Line of the system text format, e.g. "monomial 2".
    [[nodiscard]] std::string to_text() const;

    friend bool operator==(const BasisFunction&, const BasisFunction&) = default;
};

class ChebyshevSystem {
public:
    ChebyshevSystem(std::vector<BasisFunction> basis, Interval interval, std::string name = {});

    [[nodiscard]] std::size_t order() const noexcept { return basis_.size(); }
    [[nodiscard]] std::span<const BasisFunction> basis() const noexcept { return basis_; }
    [[nodiscard]] const BasisFunction& operator[](std::size_t i) const { return basis_[i]; }
    [[nodiscard]] const Interval& interval() const noexcept { return interval_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    /// (ω₁(x), …, ω_n(x)).  Domain error when x is not in the interval.
    [[nodiscard]] std::vector<double> evaluate(double x) const;

    /// The first m basis functions on the same interval.
    [[nodiscard]] ChebyshevSystem truncated(std::size_t m) const;

    /// Serialises to the system text format.
    [[nodiscard]] std::string to_text() const;

    friend bool operator==(const ChebyshevSystem&, const ChebyshevSystem&) = default;

private:
    std::vector<BasisFunction> basis_;
    Interval interval_;
    std::string name_;
};

// Named systems used throughout the tests and the CLI.
[[nodiscard]] ChebyshevSystem monomial_system(std::size_t n, Interval interval = Interval::real_line());
[[nodiscard]] ChebyshevSystem exponential_system(std::vector<double> rates,
                                                 Interval interval = Interval::real_line());

/// Parses the system text format:
///
///     interval lo hi [open|closed] [open|closed]
///     monomial k | exp alpha | cos | sin | const c | negmonomial k
///
/// `#` starts a comment; `inf`/`-inf` are accepted as bounds.
[[nodiscard]] ChebyshevSystem parse_system(std::istream& in, std::string name = {});

/// Resolves `poly:N`, `negpoly:N`, `exp:a,b,...`, `cos`, `cossin`.
[[nodiscard]] std::optional<ChebyshevSystem> named_system(const std::string& spec);

/// `count` equally spaced points on [lo, hi].  Endpoints that coincide with
/// an open end of `interval` are pulled inwards by 1e-6 of the reference span.
/// Domain error if any point falls outside `interval`.
[[nodiscard]] std::vector<double> uniform_grid(double lo, double hi, std::size_t count,
                                               const Interval& interval = Interval::real_line());

/// Same, spanning a bounded interval.  Argument error on unbounded ones.
[[nodiscard]] std::vector<double> uniform_grid(const Interval& interval, std::size_t count);

struct TupleSampling {
    std::size_t budget = 50'000;
    std::uint64_t seed = kDefaultSeed;
};

struct SystemClassification {
    enum class Verdict { positive, negative, non_chebyshev };

    Verdict verdict = Verdict::non_chebyshev;
    std::optional<PointTuple> witness;
    std::size_t tuples_checked = 0;
    bool exhaustive = false;
};

[[nodiscard]] std::string to_string(SystemClassification::Verdict v);

/// Samples V_n over ordered n-tuples of grid points (points outside the
/// interval are dropped) and classifies the sign.
[[nodiscard]] SystemClassification classify_on_grid(const ChebyshevSystem& system,
                                                    std::span<const double> grid,
                                                    const TupleSampling& sampling = {});

} // namespace gconvex
