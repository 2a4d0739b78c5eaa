#pragma once

#include "gconvex/system.hpp"

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace gconvex {

enum class TableInterpolation { none, linear };

/// A target function f, either a closed-form expression or tabulated samples.
/// Immutable once built; copies share table storage.
class FunctionSource {
public:
    struct Polynomial {
        std::vector<double> coefficients; // c0 + c1 x + ...
    };
    struct Table {
        std::vector<double> x;
        std::vector<double> y;
        TableInterpolation interpolation = TableInterpolation::none;
    };
    struct Callable {
        std::string name;
        std::function<double(double)> fn;
    };

    static FunctionSource from_basis(BasisFunction b, Interval domain = Interval::real_line());
    static FunctionSource monomial(int power) { return from_basis(BasisFunction::monomial(power)); }
    static FunctionSource negated_monomial(int power) { return from_basis(BasisFunction::negated_monomial(power)); }
    static FunctionSource exponential(double rate) { return from_basis(BasisFunction::exponential(rate)); }
    static FunctionSource polynomial(std::vector<double> coefficients, Interval domain = Interval::real_line());
    /// Arbitrary callable; must be total and finite on `domain`.
    static FunctionSource callable(std::string name, std::function<double(double)> fn,
                                   Interval domain = Interval::real_line());
    /// Validates and sorts.  Format error on mismatched lengths or duplicates.
    static FunctionSource table(std::vector<double> x, std::vector<double> y,
                                TableInterpolation interpolation = TableInterpolation::none);

    /// Domain error outside the domain hint, resolution error for off-grid
    /// queries against a table without interpolation, source error on a
    /// non-finite value.
    [[nodiscard]] double eval(double x) const;
    [[nodiscard]] double operator()(double x) const { return eval(x); }

    [[nodiscard]] const Interval& domain() const noexcept { return domain_; }
    [[nodiscard]] bool is_table() const noexcept { return std::holds_alternative<std::shared_ptr<const Table>>(form_); }
    [[nodiscard]] const Table* table_data() const noexcept;
    [[nodiscard]] bool uses_linear_interpolation() const noexcept;
    [[nodiscard]] std::string description() const;

private:
    using Form = std::variant<BasisFunction, Polynomial, std::shared_ptr<const Table>, Callable>;
    FunctionSource(Form form, Interval domain) : form_(std::move(form)), domain_(domain) {}

    Form form_;
    Interval domain_;
};

/// Two numeric columns, comma or whitespace separated.  `#` lines are
/// comments; a non-numeric first row is taken as a header.
[[nodiscard]] FunctionSource load_table(std::istream& in,
                                        TableInterpolation interpolation = TableInterpolation::none);

/// `monomial:k`, `negmonomial:k`, `exp:alpha`, `cos`, `sin`, `const:c`,
/// `polynomial:c0,c1,...`.
[[nodiscard]] FunctionSource parse_function(const std::string& spec);

} // namespace gconvex
