#include "sl2ext/oracles.hpp"

#include <string>
#include <vector>

namespace sl2ext::oracles {

std::set<Weight> dot_orbit(Weight lambda, Prime p, OrbitBound bound)
{
    if (lambda > bound.cutoff)
        throw std::invalid_argument("dot_orbit: weight exceeds cutoff");
    const Index step = 2 * p.value();
    std::set<Weight> orbit{lambda};
    std::vector<Weight> frontier{lambda};
    while (!frontier.empty()) {
        const Weight x = frontier.back();
        frontier.pop_back();
        // 2mp - x - 2 in [0, cutoff]  <=>  x + 2 <= 2mp <= cutoff + x + 2
        for (Index shift = ((x + 2 + step - 1) / step) * step; shift <= bound.cutoff + x + 2; shift += step) {
            const Weight y = shift - x - 2;
            if (orbit.insert(y).second)
                frontier.push_back(y);
        }
    }
    return orbit;
}

bool orbit_linked(Weight lambda, Weight mu, Prime p, OrbitBound bound)
{
    const Index needed = std::max(lambda, mu) + 2 * p.value();
    if (bound.cutoff < needed)
        throw std::invalid_argument("orbit bound " + std::to_string(bound.cutoff) + " is below max(lambda, mu) + 2p = " +
                                    std::to_string(needed));
    return dot_orbit(lambda, p, bound).contains(mu);
}

namespace {

// n in the block of 2p^s (s >= 1): its p-adic quotient is even with digit 0,
// or odd with digit p - 2.
bool linked_to_twisted_two(Weight n, Index p)
{
    const Index quotient = n / p;
    const Index digit = n - quotient * p;
    return quotient % 2 == 0 ? digit == 0 : digit + 2 == p;
}

struct Expander {
    std::size_t budget;
    std::size_t visited = 0;

    ExtDim expand(Index m, Weight n, Index s, Index p)
    {
        if (++visited > budget)
            throw GuardExceeded("naive_ext_dim: expansion budget of " + std::to_string(budget) + " nodes exceeded");
        if (s == 0)
            return (m == 0 && n == 2) ? 1 : 0;
        if (!linked_to_twisted_two(n, p))
            return 0;
        ExtDim total = 0;
        for (Index i = 0; i <= m; ++i)
            total += expand(m - i, n / p + i, s - 1, p);
        return total;
    }
};

} // namespace

ExtDim naive_ext_dim(const ExtQuery& q, std::size_t expansion_budget)
{
    Expander expander{expansion_budget};
    return expander.expand(q.degree, q.weight, q.twist, q.p.value());
}

} // namespace sl2ext::oracles
