#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sl2ext {

/// Exact non-negative integer used for dimensions, path counts and series
/// coefficients.  Never wraps.
using Natural = boost::multiprecision::cpp_int;

/// Weights, degrees and twists are machine words; every operation that can
/// leave the representable range goes through the checked helpers below.
using Index = std::uint64_t;

class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

inline Index checked_add(Index a, Index b)
{
    if (a > std::numeric_limits<Index>::max() - b)
        throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return a + b;
}

inline Index checked_mul(Index a, Index b)
{
    if (a != 0 && b > std::numeric_limits<Index>::max() / a)
        throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return a * b;
}

inline Index checked_pow(Index base, Index exponent)
{
    Index result = 1;
    for (Index k = 0; k < exponent; ++k)
        result = checked_mul(result, base);
    return result;
}

inline std::string to_decimal(const Natural& x) { return x.str(); }

} // namespace sl2ext
