#pragma once

// Grid verification of the one-dimensionality, vanishing, corner, unique
// chain and deficit properties.  Checks are reported in canonical order:
// sorted by p, then r, then check name order below.

#include <optional>
#include <string>
#include <vector>

#include "sl2ext/ext_engine.hpp"

namespace sl2ext {

struct CheckResult {
    std::string name;
    Index p;
    std::optional<Index> r;
    std::optional<Index> n;  ///< offending weight, when one is identified
    bool passed;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const noexcept;
    /// One line per check: "PASS name p=.. r=.. : detail".
    std::string lines() const;
};

/// Individual checks.  Each is independent of the others.
CheckResult check_top_dimension(ExtEngine& engine, Index r, Prime p);
CheckResult check_corner(ExtEngine& engine, Index r, Prime p);
CheckResult check_vanishing(ExtEngine& engine, Index r, Prime p);
CheckResult check_unique_chain(Index r, Prime p);
CheckResult check_deficit(Index r, Prime p);
/// a + b < 2p^s => (a+i) + p(b-i) + (p-2) < 2p^(s+1) on a, b <= bound, s <= s_max.
CheckResult check_deficit_arithmetic(Prime p, Index bound, Index s_max);

VerifyReport run_verification(std::vector<Prime> primes, Index r_max);

} // namespace sl2ext
