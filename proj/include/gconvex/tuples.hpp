#pragma once

#include "gconvex/system.hpp"

#include <cstddef>
#include <vector>

namespace gconvex {

/// Index tuples i₁ < … < i_k into a grid of m points, in lexicographic order.
struct TuplePlan {
    std::size_t arity = 0;
    std::vector<std::size_t> indices; // flattened, arity per tuple
    bool exhaustive = false;

    [[nodiscard]] std::size_t count() const noexcept { return arity == 0 ? 0 : indices.size() / arity; }
    [[nodiscard]] std::span<const std::size_t> tuple(std::size_t t) const {
        return {indices.data() + t * arity, arity};
    }
};

/// C(m, k), saturating at SIZE_MAX.
[[nodiscard]] std::size_t binomial(std::size_t m, std::size_t k) noexcept;

/// Every k-subset of {0..m-1} when C(m,k) fits the budget.  Otherwise all
/// m-k+1 contiguous windows plus seeded uniform random subsets until the
/// budget is used, deduplicated and sorted.
[[nodiscard]] TuplePlan plan_tuples(std::size_t m, std::size_t k, const TupleSampling& sampling);

} // namespace gconvex
