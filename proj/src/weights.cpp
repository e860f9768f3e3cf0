#include "sl2ext/weights.hpp"

#include <stdexcept>
#include <string>

namespace sl2ext {

bool is_prime(Index value) noexcept
{
    if (value < 2)
        return false;
    if (value % 2 == 0)
        return value == 2;
    for (Index d = 3; d <= value / d; d += 2)
        if (value % d == 0)
            return false;
    return true;
}

Prime::Prime(Index value) : value_(value)
{
    if (!is_prime(value))
        throw std::invalid_argument("p = " + std::to_string(value) + " is not prime");
}

PadicSplit p_decompose(Weight n, Prime p) noexcept
{
    return {n / p.value(), n % p.value()};
}

bool same_block(Weight lambda, Weight mu, Prime p) noexcept
{
    const auto [a, i] = p_decompose(lambda, p);
    const auto [b, j] = p_decompose(mu, p);
    const Index top = p.value() - 1;
    if (i == top)
        return j == top;
    const bool even_gap = (a % 2) == (b % 2);
    if (even_gap)
        return i == j;
    // i <= p-2 here, so p-2-i does not underflow
    return j == p.value() - 2 - i;
}

bool in_block_of_two_p_s(Weight lambda, Index s, Prime p)
{
    if (s < 1)
        throw std::invalid_argument("in_block_of_two_p_s requires s >= 1");
    const auto [a, i] = p_decompose(lambda, p);
    if (a % 2 == 0)
        return i == 0;
    return i == p.value() - 2;
}

} // namespace sl2ext
