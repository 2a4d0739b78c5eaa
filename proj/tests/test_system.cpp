#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gconvex/error.hpp"
#include "gconvex/system.hpp"
#include "gconvex/tuples.hpp"

#include <numbers>
#include <random>
#include <set>
#include <sstream>

using namespace gconvex;
using Verdict = SystemClassification::Verdict;

namespace {

ChebyshevSystem cos_sin() { return *named_system("cossin"); }
ChebyshevSystem neg_line() { return *named_system("negpoly:2"); }

} // namespace

TEST_CASE("evaluate returns basis values in order") {
    CHECK(monomial_system(3).evaluate(2.0) == std::vector<double>{1.0, 2.0, 4.0});
    CHECK(exponential_system({0.0, 1.0}).evaluate(0.0) == std::vector<double>{1.0, 1.0});
    const auto cs = cos_sin().evaluate(std::numbers::pi / 2);
    CHECK(cs[0] == doctest::Approx(0.0));
    CHECK(cs[1] == doctest::Approx(1.0));
}

TEST_CASE("evaluate rejects points outside the interval") {
    CHECK_THROWS_AS((void)cos_sin().evaluate(-0.5), Error);
    CHECK_THROWS_AS((void)cos_sin().evaluate(0.0), Error); // open end
    try {
        (void)cos_sin().evaluate(4.0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::domain);
    }
}

TEST_CASE("truncate keeps the leading basis functions") {
    const auto t = monomial_system(3).truncated(2);
    CHECK(t.order() == 2);
    CHECK(t[0] == BasisFunction::monomial(0));
    CHECK(t[1] == BasisFunction::monomial(1));
    CHECK(cos_sin().truncated(1)[0] == BasisFunction::cosine());
    CHECK(neg_line().truncated(1)[0] == BasisFunction::negated_monomial(0));
    CHECK(neg_line().truncated(1).interval() == neg_line().interval());

    CHECK_THROWS_AS((void)monomial_system(3).truncated(0), Error);
    CHECK_THROWS_AS((void)monomial_system(3).truncated(4), Error);
}

TEST_CASE("truncation composes") {
    const auto s = exponential_system({0.0, 0.5, 1.0, 2.0, 3.0});
    for (std::size_t m = 1; m <= s.order(); ++m)
        for (std::size_t k = 1; k <= m; ++k) CHECK(s.truncated(m).truncated(k).basis().size() == k);
    for (std::size_t m = 1; m <= s.order(); ++m)
        for (std::size_t k = 1; k <= m; ++k) {
            const auto a = s.truncated(m).truncated(k), b = s.truncated(k);
            CHECK(std::equal(a.basis().begin(), a.basis().end(), b.basis().begin(), b.basis().end()));
        }
}

TEST_CASE("classification of the standard examples") {
    const auto grid = uniform_grid(-1.0, 1.0, 20);
    CHECK(classify_on_grid(monomial_system(3), grid).verdict == Verdict::positive);
    CHECK(classify_on_grid(exponential_system({-1.0, 0.5, 2.0}), grid).verdict == Verdict::positive);
    CHECK(classify_on_grid(neg_line(), grid).verdict == Verdict::positive);
    const auto minus_one = classify_on_grid(neg_line().truncated(1), grid);
    CHECK(minus_one.verdict == Verdict::negative);
    CHECK_FALSE(minus_one.witness.has_value());
    CHECK(classify_on_grid(cos_sin(), uniform_grid(cos_sin().interval(), 25)).verdict == Verdict::positive);
}

TEST_CASE("cos alone changes sign on (0, pi)") {
    const ChebyshevSystem cosine = cos_sin().truncated(1);
    const auto grid = uniform_grid(cosine.interval(), 40);
    const auto c = classify_on_grid(cosine, grid);
    REQUIRE(c.verdict == Verdict::non_chebyshev);
    REQUIRE(c.witness.has_value());
    const double spacing = grid[1] - grid[0];
    CHECK(std::abs((*c.witness)[0] - std::numbers::pi / 2) <= spacing);
}

TEST_CASE("a vanishing determinant is reported with its witness") {
    // (1, x²) collapses on symmetric pairs.
    const ChebyshevSystem even({BasisFunction::monomial(0), BasisFunction::monomial(2)}, Interval::real_line());
    const auto c = classify_on_grid(even, uniform_grid(-1.0, 1.0, 11));
    REQUIRE(c.verdict == Verdict::non_chebyshev);
    REQUIRE(c.witness);
    const auto& w = *c.witness;
    CHECK((w[0] * w[0] == doctest::Approx(w[1] * w[1]) || w[0] * w[1] < 0));
}

TEST_CASE("monomial systems are positive on any separated grid") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::set<double> pts;
        while (pts.size() < 12) {
            const double x = std::round(u(rng) * 1000.0) / 1000.0; // separation >= 1e-3
            pts.insert(x);
        }
        const std::vector<double> grid(pts.begin(), pts.end());
        for (std::size_t n = 2; n <= 5; ++n)
            CHECK(classify_on_grid(monomial_system(n), grid).verdict == Verdict::positive);
    }
}

TEST_CASE("refining a grid never un-discovers a violation") {
    const ChebyshevSystem cosine = cos_sin().truncated(1);
    auto coarse = uniform_grid(cosine.interval(), 9);
    auto fine = uniform_grid(cosine.interval(), 33);
    CHECK(classify_on_grid(cosine, coarse).verdict == Verdict::non_chebyshev);
    CHECK(classify_on_grid(cosine, fine).verdict == Verdict::non_chebyshev);

    const auto s = monomial_system(3);
    const auto a = classify_on_grid(s, uniform_grid(-1.0, 1.0, 8));
    const auto b = classify_on_grid(s, uniform_grid(-1.0, 1.0, 29));
    CHECK(a.verdict == b.verdict);
}

TEST_CASE("classify validates its grid") {
    CHECK_THROWS_AS((void)classify_on_grid(monomial_system(3), std::vector<double>{0.0, 1.0}), Error);
    CHECK_THROWS_AS((void)classify_on_grid(monomial_system(2), std::vector<double>{0.0, 2.0, 1.0}), Error);
}

TEST_CASE("large grids are subsampled deterministically") {
    const auto grid = uniform_grid(-1.0, 1.0, 60);
    const TupleSampling small{2'000, 99};
    const auto a = classify_on_grid(monomial_system(4), grid, small);
    const auto b = classify_on_grid(monomial_system(4), grid, small);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.verdict == Verdict::positive);
    CHECK(a.tuples_checked == b.tuples_checked);
    CHECK(a.tuples_checked >= 2'000);
}

TEST_CASE("tuple plans") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(50, 3) == 19'600);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(1000, 500) == std::numeric_limits<std::size_t>::max());

    const auto all = plan_tuples(6, 3, {});
    CHECK(all.exhaustive);
    CHECK(all.count() == 20);
    CHECK(std::vector<std::size_t>(all.tuple(0).begin(), all.tuple(0).end()) == std::vector<std::size_t>{0, 1, 2});
    CHECK(std::vector<std::size_t>(all.tuple(19).begin(), all.tuple(19).end()) == std::vector<std::size_t>{3, 4, 5});

    const auto sampled = plan_tuples(40, 4, {500, 3});
    CHECK_FALSE(sampled.exhaustive);
    CHECK(sampled.count() == 500);
    // Every contiguous window is present, tuples are increasing and sorted.
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t t = 0; t < sampled.count(); ++t) {
        const auto tu = sampled.tuple(t);
        CHECK(std::is_sorted(tu.begin(), tu.end()));
        seen.emplace(tu.begin(), tu.end());
    }
    CHECK(seen.size() == sampled.count());
    for (std::size_t s = 0; s + 4 <= 40; ++s) CHECK(seen.count({s, s + 1, s + 2, s + 3}) == 1);
    CHECK(plan_tuples(40, 4, {500, 3}).indices == sampled.indices);
    CHECK(plan_tuples(40, 4, {500, 4}).indices != sampled.indices);
}

TEST_CASE("uniform grids respect open ends") {
    const Interval open = Interval::open(0.0, 1.0);
    const auto g = uniform_grid(open, 5);
    CHECK(g.front() == doctest::Approx(1e-6));
    CHECK(g.back() == doctest::Approx(1.0 - 1e-6));
    const auto closed = uniform_grid(Interval::closed(0.0, 1.0), 5);
    CHECK(closed.front() == 0.0);
    CHECK(closed.back() == 1.0);
    CHECK_THROWS_AS((void)uniform_grid(Interval::real_line(), 5), Error);
    CHECK_THROWS_AS((void)uniform_grid(-1.0, 2.0, 5, open), Error);
}

TEST_CASE("system text format") {
    std::istringstream in("# two-parameter family\n"
                          "interval 0 3.14159 open open\n"
                          "cos\n"
                          "sin   # trailing comment\n");
    const auto s = parse_system(in, "file");
    CHECK(s.order() == 2);
    CHECK(s.interval().lo_open);
    CHECK(s[1] == BasisFunction::sine());

    std::istringstream all("interval -inf inf\nmonomial 0\nexp -1.5\nconst 2\nnegmonomial 3\n");
    const auto t = parse_system(all);
    CHECK(t.order() == 4);
    CHECK(t[1] == BasisFunction::exponential(-1.5));
    CHECK(t.interval().lo_open); // infinite ends are open

    std::istringstream round(t.to_text());
    CHECK(parse_system(round).basis().size() == 4);

    const auto fails = [](const char* text) {
        std::istringstream bad(text);
        try {
            (void)parse_system(bad);
        } catch (const Error& e) {
            return e.kind() == ErrorKind::format;
        }
        return false;
    };
    CHECK(fails("monomial 1\n"));
    CHECK(fails("interval 0 1\n"));
    CHECK(fails("interval 1 0\nmonomial 0\n"));
    CHECK(fails("interval 0 1\nmonomial -1\n"));
    CHECK(fails("interval 0 1\ntan\n"));
    CHECK(fails("interval 0 1 ajar closed\ncos\n"));
}

TEST_CASE("named systems") {
    CHECK(named_system("poly:4")->order() == 4);
    CHECK(named_system("exp:0,1,2")->evaluate(0.0) == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(named_system("negpoly:2")->evaluate(3.0) == std::vector<double>{-1.0, -3.0});
    CHECK(named_system("cos")->order() == 1);
    CHECK_FALSE(named_system("bessel").has_value());
    CHECK_THROWS_AS((void)named_system("poly:x"), Error);
}
