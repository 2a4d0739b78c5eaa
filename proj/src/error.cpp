#include "gconvex/error.hpp"

namespace gconvex {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::argument: return "argument";
    case ErrorKind::degenerate: return "degenerate-input";
    case ErrorKind::near_singular: return "near-singular";
    case ErrorKind::source: return "source";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::limit_diverged: return "limit-diverged";
    case ErrorKind::geometry: return "geometry";
    case ErrorKind::resolution: return "resolution";
    case ErrorKind::format: return "format";
    }
    return "unknown";
}

} // namespace gconvex
