#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gconvex {

enum class ErrorKind {
    domain,         // point outside an interval or function domain
    argument,       // malformed or out-of-range argument
    degenerate,     // coincident or too-close points
    near_singular,  // collocation determinant indistinguishable from zero
    source,         // target function could not be evaluated
    precondition,   // system not positive / knot on the boundary
    limit_diverged, // one-sided limit did not settle
    geometry,       // no room to the right of the last knot
    resolution,     // tabulated data too coarse for the request
    format,         // unparsable input text
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace gconvex
