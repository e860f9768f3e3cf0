#pragma once

// Brute-force cross-checks.  Nothing here includes weights.hpp predicates or
// the memoized engine, so agreement with them is not self-confirming.

#include <cstddef>
#include <set>
#include <stdexcept>

#include "sl2ext/ext_engine.hpp"

namespace sl2ext::oracles {

/// Cutoff for orbit generation.  Must be at least max(lambda, mu) + 2p.
struct OrbitBound {
    Index cutoff;
};

/// Orbit of lambda under the dot action of the affine Weyl group of SL2
/// (rho = 1): reflections x -> 2mp - x - 2, m in Z, closed within [0, cutoff].
std::set<Weight> dot_orbit(Weight lambda, Prime p, OrbitBound bound);

bool orbit_linked(Weight lambda, Weight mu, Prime p, OrbitBound bound);

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unmemoized full tree expansion.  Throws GuardExceeded once more than
/// expansion_budget nodes have been visited.
ExtDim naive_ext_dim(const ExtQuery& q, std::size_t expansion_budget);

} // namespace sl2ext::oracles
