#pragma once

// Weight arithmetic and block membership for SL2 in characteristic p.
//
// Dominant weights are identified with non-negative integers.  The block
// predicates below are necessary conditions for two weights to share a
// block; callers only ever use "predicate false => different blocks".

#include <compare>

#include "sl2ext/integer.hpp"

namespace sl2ext {

using Weight = Index;

/// A prime characteristic.  Construction rejects composites and values < 2.
class Prime {
public:
    explicit Prime(Index value);

    Index value() const noexcept { return value_; }
    operator Index() const noexcept { return value_; }

    friend bool operator==(Prime, Prime) = default;
    friend auto operator<=>(Prime, Prime) = default;

private:
    Index value_;
};

bool is_prime(Index value) noexcept;

/// n = p * quotient + digit with 0 <= digit < p.
struct PadicSplit {
    Index quotient = 0;
    Index digit = 0;

    friend bool operator==(const PadicSplit&, const PadicSplit&) = default;
};

PadicSplit p_decompose(Weight n, Prime p) noexcept;

/// Necessary condition for lambda and mu to lie in the same block.
bool same_block(Weight lambda, Weight mu, Prime p) noexcept;

/// Necessary condition for lambda to lie in the block of 2p^s, s >= 1.
/// Equivalent to same_block(lambda, 2p^s, p) but needs no power of p.
bool in_block_of_two_p_s(Weight lambda, Index s, Prime p);

} // namespace sl2ext
