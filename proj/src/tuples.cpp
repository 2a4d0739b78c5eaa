#include "gconvex/tuples.hpp"

#include "gconvex/error.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

namespace gconvex {

std::size_t binomial(std::size_t m, std::size_t k) noexcept {
    if (k > m) return 0;
    k = std::min(k, m - k);
    constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // r * (m - k + i) / i stays integral at every step.
        const std::size_t num = m - k + i;
        if (r > cap / num) return cap;
        r = r * num / i;
    }
    return r;
}

namespace {

void append_all_subsets(std::size_t m, std::size_t k, std::vector<std::size_t>& out) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.insert(out.end(), idx.begin(), idx.end());
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Floyd's algorithm for a uniform k-subset of {0..m-1}.
std::vector<std::size_t> random_subset(std::size_t m, std::size_t k, std::mt19937_64& rng) {
    std::set<std::size_t> chosen;
    for (std::size_t j = m - k; j < m; ++j) {
        std::uniform_int_distribution<std::size_t> pick(0, j);
        const std::size_t t = pick(rng);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

} // namespace

TuplePlan plan_tuples(std::size_t m, std::size_t k, const TupleSampling& sampling) {
    if (k == 0 || k > m) throw Error(ErrorKind::argument, "cannot draw " + std::to_string(k) +
                                                              "-tuples from " + std::to_string(m) + " points");
    TuplePlan plan;
    plan.arity = k;
    if (binomial(m, k) <= sampling.budget) {
        plan.exhaustive = true;
        plan.indices.reserve(binomial(m, k) * k);
        append_all_subsets(m, k, plan.indices);
        return plan;
    }

    std::set<std::vector<std::size_t>> tuples;
    for (std::size_t s = 0; s + k <= m; ++s) {
        std::vector<std::size_t> w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = s + i;
        tuples.insert(std::move(w));
    }
    std::mt19937_64 rng(sampling.seed);
    // Collisions are rare once C(m,k) exceeds the budget; the attempt cap
    // only guards tiny pathological budgets.
    const std::size_t target = std::max(sampling.budget, tuples.size());
    for (std::size_t attempts = 0; tuples.size() < target && attempts < 4 * target; ++attempts)
        tuples.insert(random_subset(m, k, rng));

    plan.indices.reserve(tuples.size() * k);
    for (const auto& t : tuples) plan.indices.insert(plan.indices.end(), t.begin(), t.end());
    return plan;
}

} // namespace gconvex
