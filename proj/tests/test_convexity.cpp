#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gconvex/convexity.hpp"
#include "gconvex/error.hpp"
#include "gconvex/tuples.hpp"
#include "oracles.hpp"

#include <random>

using namespace gconvex;

namespace {

std::vector<double> grid(double lo, double hi, std::size_t count) {
    return uniform_grid(lo, hi, count, Interval::real_line());
}

// Bordered determinant through the cofactor oracle.
double oracle_d(const ChebyshevSystem& s, const std::vector<double>& x, const std::function<double(double)>& f) {
    std::vector<std::function<double(double)>> rows;
    for (const auto& b : s.basis()) rows.emplace_back([b](double t) { return b(t); });
    rows.push_back(f);
    return oracle::laplace_det(oracle::collocation(rows, x));
}

} // namespace

TEST_CASE("determinant and sliding-window certificates on the reference fixtures") {
    struct Fixture {
        ChebyshevSystem system;
        FunctionSource f;
        std::function<double(double)> fn;
        std::size_t points;
        Verdict expected;
    };
    const std::vector<Fixture> fixtures = {
        {monomial_system(2), FunctionSource::exponential(1.0), [](double t) { return std::exp(t); }, 50,
         Verdict::certified_on_sample},
        {monomial_system(3), FunctionSource::monomial(3), [](double t) { return t * t * t; }, 30,
         Verdict::certified_on_sample},
        {monomial_system(3), FunctionSource::negated_monomial(3), [](double t) { return -t * t * t; }, 30,
         Verdict::violated},
    };
    for (const auto& fx : fixtures) {
        const auto g = grid(-1.0, 1.0, fx.points);
        const auto a = certify_theorem_a(fx.system, fx.f, g);
        const auto c = certify_corollary1(fx.system, fx.f, g);
        CHECK(a.verdict == fx.expected);
        CHECK(c.verdict == fx.expected);
        CHECK(a.exhaustive);
        CHECK(a.tuples_checked == binomial(fx.points, fx.system.order() + 1));
        if (fx.expected == Verdict::certified_on_sample) {
            CHECK(a.min_value > 0.0);
            CHECK_FALSE(a.witness);
        } else {
            REQUIRE(a.witness);
            REQUIRE(c.witness);
            const auto& w = a.witness->points;
            const std::vector<double> pts(w.points().begin(), w.points().end());
            const double recomputed = oracle_d(fx.system, pts, fx.fn);
            CHECK(recomputed < -a.witness->tolerance);
            CHECK(recomputed == doctest::Approx(a.witness->value));
            CHECK(a.min_value == a.witness->value);
        }
    }
}

TEST_CASE("the most negative tuple is the witness") {
    const auto g = grid(-1.0, 1.0, 9);
    const auto s = monomial_system(2);
    const auto f = FunctionSource::callable("-x^2", [](double t) { return -t * t; });
    const auto cert = certify_theorem_a(s, f, g);
    REQUIRE(cert.witness);
    double best = 0.0;
    std::vector<double> best_tuple;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            for (std::size_t k = j + 1; k < g.size(); ++k) {
                const std::vector<double> x{g[i], g[j], g[k]};
                const double d = oracle_d(s, x, [](double t) { return -t * t; });
                if (d < best - 1e-12) {
                    best = d;
                    best_tuple = x;
                }
            }
    CHECK(cert.witness->value == doctest::Approx(best));
    CHECK(std::vector<double>(cert.witness->points.points().begin(), cert.witness->points.points().end()) ==
          best_tuple);
}

TEST_CASE("sliding-window certificate trivial cases") {
    const auto g = grid(-1.0, 1.0, 25);
    const auto s = monomial_system(3);
    const auto top = certify_corollary1(s, FunctionSource::from_basis(s[2]), g);
    CHECK(top.verdict == Verdict::certified_on_sample);
    CHECK(std::abs(top.min_value) <= 1e-9);
    CHECK(certify_corollary1(monomial_system(2), FunctionSource::monomial(2), g).verdict ==
          Verdict::certified_on_sample);
}

TEST_CASE("a negative system is rejected") {
    const auto g = grid(-1.0, 1.0, 10);
    const auto neg = *named_system("negpoly:1");
    try {
        (void)certify_theorem_a(neg, FunctionSource::monomial(2), g);
        FAIL("negative system accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
    }
    // (−1, −x) is positive but its truncation is not.
    CHECK_NOTHROW((void)certify_theorem_a(*named_system("negpoly:2"), FunctionSource::monomial(2), g));
    CHECK_THROWS_AS((void)certify_corollary1(*named_system("negpoly:2"), FunctionSource::monomial(2), g), Error);
}

TEST_CASE("sampling beyond the budget") {
    CertifyOptions opts;
    opts.sampling.budget = 500;
    const auto g = grid(-1.0, 1.0, 40);
    const auto a = certify_theorem_a(monomial_system(3), FunctionSource::monomial(3), g, opts);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.tuples_checked >= 500);
    CHECK(a.verdict == Verdict::certified_on_sample);
    const auto b = certify_theorem_a(monomial_system(3), FunctionSource::monomial(3), g, opts);
    CHECK(a.min_value == b.min_value);
    CHECK(a.tuples_checked == b.tuples_checked);
}

TEST_CASE("refining the grid keeps a violation") {
    const auto s = monomial_system(3);
    const auto f = FunctionSource::callable("bump", [](double t) { return t * t * t - 4.0 * std::exp(-50.0 * t * t); });
    for (std::size_t count : {7u, 13u, 25u}) {
        const auto coarse = grid(-1.0, 1.0, count);
        const auto fine = grid(-1.0, 1.0, 2 * count - 1);
        if (certify_theorem_a(s, f, coarse).verdict == Verdict::violated) {
            CHECK(certify_theorem_a(s, f, fine).verdict == Verdict::violated);
            CHECK(certify_corollary1(s, f, fine).verdict == Verdict::violated);
        }
    }
}

TEST_CASE("cross-method agreement on random fixtures") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = coef(rng), b = coef(rng);
        const auto f = FunctionSource::callable("mix", [=](double t) { return a * t * t * t + b * std::sin(3 * t); });
        const auto g = grid(-1.0, 1.0, 15);
        const auto s = exponential_system({0.0, 1.0, 2.0});
        CHECK(certify_theorem_a(s, f, g).verdict == certify_corollary1(s, f, g).verdict);
    }
}

TEST_CASE("last-argument monotonicity scan") {
    const auto s = monomial_system(3);
    const auto g = grid(-2.0, 3.0, 200);
    const auto report = scan_theorem2(s, FunctionSource::monomial(3), {0.0, 1.0}, g);
    CHECK(report.monotone());
    CHECK(report.scan.size() + report.excluded == g.size());
    for (const auto& p : report.scan) CHECK(std::abs(p.value - (1.0 + p.x)) <= 1e-8);
    for (std::size_t i = 1; i < report.scan.size(); ++i) CHECK(report.scan[i].x > report.scan[i - 1].x);

    const auto flat = scan_theorem2(s, FunctionSource::from_basis(s[2]), {0.0, 1.0}, g);
    CHECK(flat.monotone());
    for (const auto& p : flat.scan) CHECK(p.value == doctest::Approx(1.0));

    const auto down = scan_theorem2(s, FunctionSource::negated_monomial(3), {0.0, 1.0}, g);
    CHECK_FALSE(down.monotone());
    for (const auto& v : down.violations)
        CHECK(down.scan[v.index].value - down.scan[v.index + 1].value == doctest::Approx(v.drop));

    // Knots taken from a determinant witness expose the violation.
    const auto cert = certify_theorem_a(s, FunctionSource::negated_monomial(3), grid(-1.0, 1.0, 12));
    REQUIRE(cert.witness);
    const auto knots = cert.witness->points.slice(0, 2);
    CHECK_FALSE(scan_theorem2(s, FunctionSource::negated_monomial(3), knots, grid(-1.0, 1.0, 60)).monotone());
}

TEST_CASE("monotonicity scan preconditions") {
    const auto closed = ChebyshevSystem({BasisFunction::constant(1.0), BasisFunction::monomial(1)},
                                        Interval::closed(0.0, 1.0), "line");
    const auto g = uniform_grid(closed.interval(), 20);
    try {
        (void)scan_theorem2(closed, FunctionSource::monomial(2), {0.0}, g);
        FAIL("boundary knot accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
    }
    CHECK_THROWS_AS((void)scan_theorem2(monomial_system(3), FunctionSource::monomial(3), {1.0, 0.0}, g), Error);
}

TEST_CASE("definition sign pattern") {
    const auto g = grid(-2.0, 3.0, 101);
    const auto chord = verify_definition(monomial_system(2), FunctionSource::monomial(2), {0.0, 1.0}, g);
    CHECK(chord.verdict == Verdict::certified_on_sample);

    const auto s3 = monomial_system(3);
    const auto same = verify_definition(s3, FunctionSource::polynomial({1.0, -2.0, 0.5}), {-1.0, 0.0, 2.0}, g);
    CHECK(same.verdict == Verdict::certified_on_sample);
    CHECK(std::abs(same.min_value) <= 1e-9);

    // x³ through (0,1,2): f − ω = x(x−1)(x−2), signs −,+,−,+.
    CHECK(verify_definition(s3, FunctionSource::monomial(3), {0.0, 1.0, 2.0}, g).verdict ==
          Verdict::certified_on_sample);
    const auto bad = verify_definition(s3, FunctionSource::negated_monomial(3), {0.0, 1.0, 2.0}, g);
    CHECK(bad.verdict == Verdict::violated);
    REQUIRE(bad.witness);
    CHECK(bad.witness->value < 0.0);
}

TEST_CASE("region_of") {
    const PointTuple knots{0.0, 1.0};
    CHECK(region_of(-1.0, knots, 1e-4) == 1);
    CHECK(region_of(0.5, knots, 1e-4) == 2);
    CHECK(region_of(2.0, knots, 1e-4) == 3);
    CHECK(region_of(1.00001, knots, 1e-4) == 0);
    CHECK(region_of(-0.00001, knots, 1e-4) == 0);
}
