#include "gconvex/system.hpp"

#include "gconvex/determinant.hpp"
#include "gconvex/error.hpp"
#include "gconvex/tuples.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>

namespace gconvex {

void Interval::validate() const {
    if (std::isnan(lo) || std::isnan(hi) || !(lo < hi))
        throw Error(ErrorKind::argument, "interval needs lo < hi, got " + to_string());
}

bool Interval::bounded() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }

bool Interval::contains(double x) const noexcept {
    if (!std::isfinite(x)) return false;
    const bool above = lo_open ? x > lo : x >= lo;
    const bool below = hi_open ? x < hi : x <= hi;
    return above && below;
}

double Interval::reference_span() const noexcept { return bounded() ? hi - lo : 1.0; }

std::string Interval::to_string() const {
    std::ostringstream os;
    os << (lo_open ? '(' : '[') << lo << ", " << hi << (hi_open ? ')' : ']');
    return os.str();
}

BasisFunction BasisFunction::monomial(int power) {
    if (power < 0) throw Error(ErrorKind::argument, "monomial power must be >= 0");
    return {Kind::monomial, static_cast<double>(power)};
}

BasisFunction BasisFunction::negated_monomial(int power) {
    if (power < 0) throw Error(ErrorKind::argument, "monomial power must be >= 0");
    return {Kind::negated_monomial, static_cast<double>(power)};
}

namespace {

double ipow(double x, int k) noexcept {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

} // namespace

double BasisFunction::operator()(double x) const noexcept {
    switch (kind) {
    case Kind::monomial: return ipow(x, static_cast<int>(parameter));
    case Kind::negated_monomial: return -ipow(x, static_cast<int>(parameter));
    case Kind::exponential: return std::exp(parameter * x);
    case Kind::cosine: return std::cos(x);
    case Kind::sine: return std::sin(x);
    case Kind::constant: return parameter;
    }
    return 0.0;
}

std::string BasisFunction::to_text() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind) {
    case Kind::monomial: os << "monomial " << static_cast<int>(parameter); break;
    case Kind::negated_monomial: os << "negmonomial " << static_cast<int>(parameter); break;
    case Kind::exponential: os << "exp " << parameter; break;
    case Kind::cosine: os << "cos"; break;
    case Kind::sine: os << "sin"; break;
    case Kind::constant: os << "const " << parameter; break;
    }
    return os.str();
}

ChebyshevSystem::ChebyshevSystem(std::vector<BasisFunction> basis, Interval interval, std::string name)
    : basis_(std::move(basis)), interval_(interval), name_(std::move(name)) {
    if (basis_.empty()) throw Error(ErrorKind::argument, "a system needs at least one basis function");
    interval_.validate();
}

std::vector<double> ChebyshevSystem::evaluate(double x) const {
    if (!interval_.contains(x))
        throw Error(ErrorKind::domain, "x = " + std::to_string(x) + " outside " + interval_.to_string());
    std::vector<double> out;
    out.reserve(basis_.size());
    for (const auto& b : basis_) out.push_back(b(x));
    return out;
}

ChebyshevSystem ChebyshevSystem::truncated(std::size_t m) const {
    if (m < 1 || m > basis_.size())
        throw Error(ErrorKind::argument, "truncation order " + std::to_string(m) + " not in [1, " +
                                             std::to_string(basis_.size()) + "]");
    std::string name = name_.empty() ? std::string{} : name_ + "[:" + std::to_string(m) + "]";
    return ChebyshevSystem({basis_.begin(), basis_.begin() + static_cast<std::ptrdiff_t>(m)}, interval_,
                           std::move(name));
}

std::string ChebyshevSystem::to_text() const {
    std::ostringstream os;
    os.precision(17);
    auto bound = [](double v) -> std::string {
        if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
        std::ostringstream b;
        b.precision(17);
        b << v;
        return b.str();
    };
    os << "interval " << bound(interval_.lo) << ' ' << bound(interval_.hi) << ' '
       << (interval_.lo_open ? "open" : "closed") << ' ' << (interval_.hi_open ? "open" : "closed") << '\n';
    for (const auto& b : basis_) os << b.to_text() << '\n';
    return os.str();
}

ChebyshevSystem monomial_system(std::size_t n, Interval interval) {
    std::vector<BasisFunction> basis;
    for (std::size_t k = 0; k < n; ++k) basis.push_back(BasisFunction::monomial(static_cast<int>(k)));
    return {std::move(basis), interval, "poly:" + std::to_string(n)};
}

ChebyshevSystem exponential_system(std::vector<double> rates, Interval interval) {
    std::vector<BasisFunction> basis;
    std::ostringstream name;
    name << "exp:";
    for (std::size_t i = 0; i < rates.size(); ++i) {
        basis.push_back(BasisFunction::exponential(rates[i]));
        name << (i ? "," : "") << rates[i];
    }
    return {std::move(basis), interval, name.str()};
}

namespace {

double parse_real(std::string_view tok, const std::string& context) {
    if (tok == "inf" || tok == "+inf") return kInfinity;
    if (tok == "-inf") return -kInfinity;
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(ErrorKind::format, context + ": not a number: '" + std::string(tok) + "'");
    return v;
}

int parse_power(std::string_view tok, const std::string& context) {
    const double v = parse_real(tok, context);
    if (v < 0 || v != std::floor(v) || v > 64)
        throw Error(ErrorKind::format, context + ": power must be a small non-negative integer");
    return static_cast<int>(v);
}

bool parse_openness(const std::string& tok, const std::string& context) {
    if (tok == "open") return true;
    if (tok == "closed") return false;
    throw Error(ErrorKind::format, context + ": expected open|closed, got '" + tok + "'");
}

std::vector<double> parse_list(std::string_view s, const std::string& context) {
    std::vector<double> out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        out.push_back(parse_real(s.substr(0, comma), context));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

ChebyshevSystem parse_system(std::istream& in, std::string name) {
    std::optional<Interval> interval;
    std::vector<BasisFunction> basis;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string ctx = "line " + std::to_string(lineno);
        const auto expect_args = [&](std::size_t count) {
            if (tok.size() != count + 1)
                throw Error(ErrorKind::format, ctx + ": '" + tok[0] + "' takes " + std::to_string(count) +
                                                   " argument(s)");
        };

        if (tok[0] == "interval") {
            if (interval) throw Error(ErrorKind::format, ctx + ": duplicate interval line");
            if (tok.size() != 3 && tok.size() != 5)
                throw Error(ErrorKind::format, ctx + ": interval lo hi [open|closed] [open|closed]");
            Interval iv{parse_real(tok[1], ctx), parse_real(tok[2], ctx), false, false};
            if (tok.size() == 5) {
                iv.lo_open = parse_openness(tok[3], ctx);
                iv.hi_open = parse_openness(tok[4], ctx);
            }
            // Infinite ends are never attained.
            if (std::isinf(iv.lo)) iv.lo_open = true;
            if (std::isinf(iv.hi)) iv.hi_open = true;
            if (!(iv.lo < iv.hi)) throw Error(ErrorKind::format, ctx + ": interval needs lo < hi");
            interval = iv;
        } else if (tok[0] == "monomial") {
            expect_args(1);
            basis.push_back(BasisFunction::monomial(parse_power(tok[1], ctx)));
        } else if (tok[0] == "negmonomial") {
            expect_args(1);
            basis.push_back(BasisFunction::negated_monomial(parse_power(tok[1], ctx)));
        } else if (tok[0] == "exp") {
            expect_args(1);
            basis.push_back(BasisFunction::exponential(parse_real(tok[1], ctx)));
        } else if (tok[0] == "cos") {
            expect_args(0);
            basis.push_back(BasisFunction::cosine());
        } else if (tok[0] == "sin") {
            expect_args(0);
            basis.push_back(BasisFunction::sine());
        } else if (tok[0] == "const") {
            expect_args(1);
            basis.push_back(BasisFunction::constant(parse_real(tok[1], ctx)));
        } else {
            throw Error(ErrorKind::format, ctx + ": unknown basis function '" + tok[0] + "'");
        }
    }
    if (!interval) throw Error(ErrorKind::format, "missing interval line");
    if (basis.empty()) throw Error(ErrorKind::format, "no basis functions");
    return {std::move(basis), *interval, std::move(name)};
}

std::optional<ChebyshevSystem> named_system(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? std::string{} : spec.substr(colon + 1);
    const auto order = [&]() -> std::size_t {
        const int n = parse_power(arg, spec);
        if (n < 1) throw Error(ErrorKind::format, spec + ": order must be >= 1");
        return static_cast<std::size_t>(n);
    };
    if (head == "poly" && !arg.empty()) return monomial_system(order());
    if (head == "negpoly" && !arg.empty()) {
        std::vector<BasisFunction> basis;
        for (std::size_t k = 0, n = order(); k < n; ++k)
            basis.push_back(BasisFunction::negated_monomial(static_cast<int>(k)));
        return ChebyshevSystem(std::move(basis), Interval::real_line(), spec);
    }
    if (head == "exp" && !arg.empty()) {
        auto sys = exponential_system(parse_list(arg, spec));
        return ChebyshevSystem({sys.basis().begin(), sys.basis().end()}, sys.interval(), spec);
    }
    if (spec == "cos")
        return ChebyshevSystem({BasisFunction::cosine()}, Interval::open(0.0, std::numbers::pi), spec);
    if (spec == "cossin")
        return ChebyshevSystem({BasisFunction::cosine(), BasisFunction::sine()},
                               Interval::open(0.0, std::numbers::pi), spec);
    return std::nullopt;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count, const Interval& interval) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw Error(ErrorKind::argument, "grid needs finite lo < hi");
    if (count < 2) throw Error(ErrorKind::argument, "grid needs at least 2 points");
    const double inset = 1e-6 * interval.reference_span();
    if (interval.lo_open && lo == interval.lo) lo += inset;
    if (interval.hi_open && hi == interval.hi) hi -= inset;
    std::vector<double> grid(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) grid[i] = lo + step * static_cast<double>(i);
    grid.back() = hi;
    for (double x : grid)
        if (!interval.contains(x))
            throw Error(ErrorKind::domain, "grid point " + std::to_string(x) + " outside " + interval.to_string());
    return grid;
}

std::vector<double> uniform_grid(const Interval& interval, std::size_t count) {
    if (!interval.bounded())
        throw Error(ErrorKind::argument, "sampling an unbounded interval needs explicit finite bounds");
    return uniform_grid(interval.lo, interval.hi, count, interval);
}

std::string to_string(SystemClassification::Verdict v) {
    switch (v) {
    case SystemClassification::Verdict::positive: return "positive";
    case SystemClassification::Verdict::negative: return "negative";
    case SystemClassification::Verdict::non_chebyshev: return "non-chebyshev";
    }
    return "unknown";
}

SystemClassification classify_on_grid(const ChebyshevSystem& system, std::span<const double> grid,
                                       const TupleSampling& sampling) {
    std::vector<double> pts;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0 && !(grid[i] > grid[i - 1])) throw Error(ErrorKind::argument, "grid must be strictly increasing");
        if (system.interval().contains(grid[i])) pts.push_back(grid[i]);
    }
    const std::size_t n = system.order();
    if (pts.size() < n)
        throw Error(ErrorKind::argument, "grid has " + std::to_string(pts.size()) + " points inside " +
                                             system.interval().to_string() + ", need " + std::to_string(n));

    const TuplePlan plan = plan_tuples(pts.size(), n, sampling);
    SystemClassification out;
    out.exhaustive = plan.exhaustive;
    Sign reference = Sign::zero;
    std::vector<double> tuple(n);
    for (std::size_t t = 0; t < plan.count(); ++t) {
        const auto idx = plan.tuple(t);
        for (std::size_t i = 0; i < n; ++i) tuple[i] = pts[idx[i]];
        PointTuple pt(tuple);
        // The separation floor is a property of determinant evaluation, not of
        // the Chebyshev property; a grid finer than it is the caller's choice.
        const SignedValue v = v_det(system, pt, DeterminantOptions{0.0});
        ++out.tuples_checked;
        if (v.sign == Sign::zero || (reference != Sign::zero && v.sign != reference)) {
            out.verdict = SystemClassification::Verdict::non_chebyshev;
            out.witness = std::move(pt);
            return out;
        }
        reference = v.sign;
    }
    out.verdict = reference == Sign::positive ? SystemClassification::Verdict::positive
                                              : SystemClassification::Verdict::negative;
    return out;
}

} // namespace gconvex
