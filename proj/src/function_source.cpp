#include "gconvex/function_source.hpp"

#include "gconvex/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

namespace gconvex {

FunctionSource FunctionSource::from_basis(BasisFunction b, Interval domain) {
    domain.validate();
    return {Form{b}, domain};
}

FunctionSource FunctionSource::polynomial(std::vector<double> coefficients, Interval domain) {
    if (coefficients.empty()) coefficients.push_back(0.0);
    domain.validate();
    return {Form{Polynomial{std::move(coefficients)}}, domain};
}

FunctionSource FunctionSource::callable(std::string name, std::function<double(double)> fn, Interval domain) {
    if (!fn) throw Error(ErrorKind::argument, "empty callable");
    domain.validate();
    return {Form{Callable{std::move(name), std::move(fn)}}, domain};
}

FunctionSource FunctionSource::table(std::vector<double> x, std::vector<double> y,
                                     TableInterpolation interpolation) {
    if (x.size() != y.size())
        throw Error(ErrorKind::format, "table has " + std::to_string(x.size()) + " abscissae but " +
                                           std::to_string(y.size()) + " ordinates");
    if (x.empty()) throw Error(ErrorKind::format, "empty table");
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    auto t = std::make_shared<Table>();
    t->interpolation = interpolation;
    for (std::size_t i : order) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
            throw Error(ErrorKind::format, "non-finite table entry at row " + std::to_string(i + 1));
        if (!t->x.empty() && t->x.back() == x[i])
            throw Error(ErrorKind::format, "duplicate abscissa " + std::to_string(x[i]));
        t->x.push_back(x[i]);
        t->y.push_back(y[i]);
    }
    Interval domain = Interval::closed(t->x.front(), t->x.back());
    if (t->x.size() == 1) domain.hi = std::nextafter(domain.lo, kInfinity);
    return {Form{std::shared_ptr<const Table>(std::move(t))}, domain};
}

const FunctionSource::Table* FunctionSource::table_data() const noexcept {
    if (auto p = std::get_if<std::shared_ptr<const Table>>(&form_)) return p->get();
    return nullptr;
}

bool FunctionSource::uses_linear_interpolation() const noexcept {
    const Table* t = table_data();
    return t && t->interpolation == TableInterpolation::linear;
}

namespace {

double eval_table(const FunctionSource::Table& t, double x, double span) {
    const auto it = std::lower_bound(t.x.begin(), t.x.end(), x);
    const auto i = static_cast<std::size_t>(it - t.x.begin());
    const double snap = 1e-12 * span;
    if (i < t.x.size() && std::abs(t.x[i] - x) <= snap) return t.y[i];
    if (i > 0 && std::abs(t.x[i - 1] - x) <= snap) return t.y[i - 1];
    if (t.interpolation == TableInterpolation::none)
        throw Error(ErrorKind::resolution, "x = " + std::to_string(x) + " is not a table abscissa");
    const double w = (x - t.x[i - 1]) / (t.x[i] - t.x[i - 1]);
    return t.y[i - 1] + w * (t.y[i] - t.y[i - 1]);
}

} // namespace

double FunctionSource::eval(double x) const {
    if (!domain_.contains(x))
        throw Error(ErrorKind::domain, "f evaluated at " + std::to_string(x) + " outside " + domain_.to_string());
    const double y = std::visit(
        [&](const auto& form) -> double {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, BasisFunction>) {
                return form(x);
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                double acc = 0.0;
                for (auto c = form.coefficients.rbegin(); c != form.coefficients.rend(); ++c) acc = acc * x + *c;
                return acc;
            } else if constexpr (std::is_same_v<T, Callable>) {
                return form.fn(x);
            } else {
                return eval_table(*form, x, domain_.reference_span());
            }
        },
        form_);
    if (!std::isfinite(y))
        throw Error(ErrorKind::source, description() + " is not finite at " + std::to_string(x));
    return y;
}

std::string FunctionSource::description() const {
    return std::visit(
        [](const auto& form) -> std::string {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, BasisFunction>) {
                return form.to_text();
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                std::ostringstream os;
                os.precision(17);
                os << "polynomial";
                for (std::size_t i = 0; i < form.coefficients.size(); ++i)
                    os << (i ? ',' : ' ') << form.coefficients[i];
                return os.str();
            } else if constexpr (std::is_same_v<T, Callable>) {
                return form.name;
            } else {
                return "table(" + std::to_string(form->x.size()) + " rows" +
                       (form->interpolation == TableInterpolation::linear ? ", linear)" : ")");
            }
        },
        form_);
}

namespace {

bool parse_number(std::string_view tok, double& out) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

} // namespace

FunctionSource load_table(std::istream& in, TableInterpolation interpolation) {
    std::vector<double> xs, ys;
    std::map<double, int> seen; // abscissa -> first line
    std::string line;
    bool first_row = true;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        std::vector<std::string> cells;
        for (std::string c; ls >> c;) cells.push_back(c);
        double x = 0.0, y = 0.0;
        const bool numeric = cells.size() == 2 && parse_number(cells[0], x) && parse_number(cells[1], y);
        if (!numeric) {
            if (first_row) {
                first_row = false;
                continue; // header
            }
            throw Error(ErrorKind::format, "line " + std::to_string(lineno) + ": expected two numeric columns");
        }
        first_row = false;
        if (auto [it, fresh] = seen.emplace(x, lineno); !fresh)
            throw Error(ErrorKind::format, "duplicate abscissa " + cells[0] + " on lines " +
                                               std::to_string(it->second) + " and " + std::to_string(lineno));
        xs.push_back(x);
        ys.push_back(y);
    }
    return FunctionSource::table(std::move(xs), std::move(ys), interpolation);
}

FunctionSource parse_function(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? std::string{} : spec.substr(colon + 1);
    const auto number = [&](std::string_view tok) {
        double v = 0.0;
        if (!parse_number(tok, v)) throw Error(ErrorKind::format, spec + ": not a number: '" + std::string(tok) + "'");
        return v;
    };
    const auto power = [&] {
        const double v = number(arg);
        if (v < 0 || v != std::floor(v) || v > 64)
            throw Error(ErrorKind::format, spec + ": power must be a small non-negative integer");
        return static_cast<int>(v);
    };
    if (head == "monomial" && !arg.empty()) return FunctionSource::monomial(power());
    if (head == "negmonomial" && !arg.empty()) return FunctionSource::negated_monomial(power());
    if (head == "exp" && !arg.empty()) return FunctionSource::exponential(number(arg));
    if (head == "const" && !arg.empty()) return FunctionSource::from_basis(BasisFunction::constant(number(arg)));
    if (spec == "cos") return FunctionSource::from_basis(BasisFunction::cosine());
    if (spec == "sin") return FunctionSource::from_basis(BasisFunction::sine());
    if (head == "polynomial" && !arg.empty()) {
        std::vector<double> coeffs;
        std::string_view rest = arg;
        while (true) {
            const auto comma = rest.find(',');
            coeffs.push_back(number(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return FunctionSource::polynomial(std::move(coeffs));
    }
    throw Error(ErrorKind::format, "unknown function '" + spec + "'");
}

} // namespace gconvex
