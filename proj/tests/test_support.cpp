#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gconvex/error.hpp"
#include "gconvex/support.hpp"
#include "oracles.hpp"

#include <random>

using namespace gconvex;

namespace {

std::vector<double> grid(double lo, double hi, std::size_t count) {
    return uniform_grid(lo, hi, count, Interval::real_line());
}

std::size_t total_violations(const SignPatternReport& r) {
    std::size_t n = 0;
    for (const auto& s : r.segments) n += s.violations.size();
    return n;
}

} // namespace

TEST_CASE("limit estimates") {
    const auto cube = estimate_cn(monomial_system(3), FunctionSource::monomial(3), {0.0, 1.0});
    CHECK(cube.converged);
    CHECK(cube.monotone_ok);
    CHECK(std::abs(cube.estimate - 2.0) <= 1e-6);
    // The divided difference at (0, 1, 1+h) is the node sum 2 + h.
    for (const auto& step : cube.h_sequence) CHECK(std::abs(step.value - (2.0 + step.h)) <= 1e-9 + 4e-16 / step.h);
    for (std::size_t i = 1; i < cube.h_sequence.size(); ++i)
        CHECK(cube.h_sequence[i].h == cube.h_sequence[i - 1].h / 2);

    const auto e = estimate_cn(monomial_system(2), FunctionSource::exponential(1.0), {0.0});
    CHECK(e.converged);
    CHECK(e.monotone_ok);
    CHECK(std::abs(e.estimate - 1.0) <= 1e-5);
    for (const auto& step : e.h_sequence) CHECK(step.value == doctest::Approx(std::expm1(step.h) / step.h));

    const auto s = exponential_system({0.0, 1.0, 2.0});
    const auto top = estimate_cn(s, FunctionSource::from_basis(s[2]), {-0.3, 0.4});
    for (const auto& step : top.h_sequence) CHECK(step.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(top.estimate == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("limit estimation errors") {
    const auto s = monomial_system(3);
    CHECK_THROWS_AS((void)estimate_cn(s, FunctionSource::monomial(3), {0.0}), Error);
    CHECK_THROWS_AS((void)estimate_cn(s, FunctionSource::monomial(3), {1.0, 0.0}), Error);

    // No room to the right of the last knot.
    const ChebyshevSystem unit({BasisFunction::constant(1.0), BasisFunction::monomial(1)}, Interval::open(0.0, 1.0),
                               "line");
    try {
        (void)estimate_cn(unit, FunctionSource::monomial(2), {1.0 - 1e-12});
        FAIL("no room accepted");
    } catch (const Error& e) {
        CHECK((e.kind() == ErrorKind::geometry || e.kind() == ErrorKind::precondition));
    }

    // |x| has a corner at 0 but a one-sided limit; sign(x)·sqrt|x| does not converge.
    const auto root = FunctionSource::callable("sqrt|x|", [](double t) { return std::sqrt(std::abs(t)); });
    try {
        (void)estimate_cn(monomial_system(2), root, {0.0});
        FAIL("divergent limit accepted");
    } catch (const LimitDivergedError& e) {
        CHECK(e.kind() == ErrorKind::limit_diverged);
        // Halving stops at the 1e-9 span floor before 40 steps.
        CHECK(e.trace().h_sequence.size() >= 20);
        CHECK(e.trace().h_sequence.back().h > 1e-9);
        CHECK_FALSE(e.trace().converged);
    }
    const auto abs_x = FunctionSource::callable("|x|", [](double t) { return std::abs(t); });
    CHECK(estimate_cn(monomial_system(2), abs_x, {0.0}).estimate == doctest::Approx(1.0));
}

TEST_CASE("tables must resolve the limit") {
    std::vector<double> x, y;
    for (int i = 0; i <= 10; ++i) {
        x.push_back(i * 0.1);
        y.push_back(std::exp(i * 0.1));
    }
    const auto coarse = FunctionSource::table(x, y, TableInterpolation::linear);
    try {
        (void)estimate_cn(monomial_system(2), coarse, {0.5});
        FAIL("coarse table accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resolution);
    }
}

TEST_CASE("support for the cubic") {
    const auto s = monomial_system(3);
    const auto g = grid(-2.0, 3.0, 100);
    const auto r = build_support(s, FunctionSource::monomial(3), {0.0, 1.0}, g);
    REQUIRE(r.omega.coefficients.size() == 3);
    CHECK(std::abs(r.omega.coefficients[0]) <= 1e-6);
    CHECK(std::abs(r.omega.coefficients[1] + 1.0) <= 1e-6);
    CHECK(std::abs(r.omega.coefficients[2] - 2.0) <= 1e-6);
    CHECK(r.pattern.overall);
    REQUIRE(r.pattern.segments.size() == 3);
    CHECK(r.pattern.segments[0].required_sign == -1);
    CHECK(r.pattern.segments[1].required_sign == 1);
    CHECK(r.pattern.segments[2].required_sign == 1);
    std::size_t checked = r.pattern.excluded;
    for (const auto& seg : r.pattern.segments) {
        CHECK(seg.violations.empty());
        checked += seg.points_checked;
    }
    CHECK(checked == g.size());
}

TEST_CASE("support for n = 2 is the tangent line") {
    const auto g = grid(-3.0, 3.0, 121);
    const auto r = build_support(monomial_system(2), FunctionSource::exponential(1.0), {0.0}, g);
    CHECK(r.omega.coefficients[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.omega.coefficients[1] == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(r.pattern.overall);
    for (double x : g) CHECK(std::exp(x) - r.omega(x) >= -1e-6);
}

TEST_CASE("support reproduces a member of the span") {
    const auto s = exponential_system({0.0, 1.0, -1.0});
    const auto f = FunctionSource::callable("w", [&](double t) { return 2.0 * s[0](t) - s[1](t) + 0.5 * s[2](t); });
    const auto g = grid(-1.0, 1.0, 50);
    const auto r = build_support(s, f, {-0.5, 0.2}, g);
    CHECK(r.c_n.estimate == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(r.pattern.overall);
    for (double x : g) CHECK(std::abs(f(x) - r.omega(x)) <= 1e-8);
}

TEST_CASE("a wrong leading coefficient breaks the pattern") {
    const auto s = monomial_system(3);
    const auto f = FunctionSource::monomial(3);
    const auto g = grid(-2.0, 3.0, 100);

    // c₃ = 1.5: f − ω = x(x − ½)(x − 1), negative on (½, 1).
    const auto low = verify_sign_pattern(s, f, constrained_interpolate(s, {0.0, 1.0}, f, 1.5), {0.0, 1.0}, g);
    CHECK_FALSE(low.overall);
    CHECK(low.segments[0].violations.empty());
    CHECK_FALSE(low.segments[1].violations.empty());
    CHECK(low.segments[2].violations.empty());
    for (const auto& v : low.segments[1].violations) CHECK((v.x > 0.5 && v.x < 1.0));

    // c₃ = 2.5: f − ω = x(x − 1)(x − 1.5), negative just right of 1.
    const auto high = verify_sign_pattern(s, f, constrained_interpolate(s, {0.0, 1.0}, f, 2.5), {0.0, 1.0}, g);
    CHECK_FALSE(high.overall);
    CHECK(high.segments[0].violations.empty());
    CHECK(high.segments[1].violations.empty());
    REQUIRE_FALSE(high.segments[2].violations.empty());
    for (const auto& v : high.segments[2].violations) {
        CHECK((v.x > 1.0 && v.x < 1.5));
        CHECK(v.value == doctest::Approx(v.x * (v.x - 1.0) * (v.x - 1.5)));
    }
}

TEST_CASE("support on random convex fixtures") {
    // At rtol 1e-8 the O(h) drift only drops below tolerance where cancellation
    // noise is of the same size, so this sweep uses a looser limit tolerance.
    SupportOptions opts;
    opts.limit.rtol = 1e-6;
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = u(rng);
        const double b = a + 0.2 + 0.5 * std::abs(u(rng));
        // e^{rx} is convex with respect to rates (0, 1, 2) exactly when r > 2.
        const auto f = FunctionSource::exponential(2.3 + std::abs(u(rng)));
        const auto g = grid(-1.5, 2.0, 80);
        const auto r = build_support(exponential_system({0.0, 1.0, 2.0}), f, {a, b}, g, opts);
        CHECK(r.c_n.converged);
        CHECK(r.pattern.overall);
        CHECK(r.omega(a) == doctest::Approx(f(a)));
        CHECK(r.omega(b) == doctest::Approx(f(b)));
        CHECK(total_violations(r.pattern) == 0);
    }
}

TEST_CASE("support needs a positive system") {
    const auto g = grid(-1.0, 1.0, 20);
    CHECK_THROWS_AS((void)build_support(*named_system("negpoly:2"), FunctionSource::monomial(2), {0.0}, g), Error);
}

TEST_CASE("support patterns follow the determinant verdict") {
    const auto s = monomial_system(3);
    const auto g = grid(-1.0, 1.0, 10);
    SupportOptions opts;
    opts.limit.rtol = 1e-6;
    const std::vector<std::pair<FunctionSource, bool>> cases = {{FunctionSource::exponential(1.0), true},
                                                                {FunctionSource::negated_monomial(3), false}};
    for (const auto& [f, convex] : cases) {
        CHECK((certify_theorem_a(s, f, g).verdict == Verdict::certified_on_sample) == convex);
        bool all = true;
        for (std::size_t i = 1; i + 2 < g.size(); ++i)
            for (std::size_t j = i + 1; j + 1 < g.size(); ++j)
                all = all && build_support(s, f, {g[i], g[j]}, g, opts).pattern.overall;
        CHECK(all == convex);
    }
}
