#include "sl2ext/hilbert.hpp"

#include <stdexcept>

#include "sl2ext/ext_engine.hpp"

namespace sl2ext {

GeneratorLedger generator_ledger(Index r, Prime p)
{
    if (r < 1)
        throw std::invalid_argument("generator_ledger requires r >= 1");
    GeneratorLedger ledger;
    for (Index i = 1; i <= r; ++i)
        ledger.push_back({i, two_p_pow(i - 1, p), gl2_dimension, r - i});
    return ledger;
}

void multiply_by_inverse_power(SeriesTruncation& series, Index degree, Index exponent)
{
    if (degree == 0)
        throw std::invalid_argument("generator degree must be positive");
    auto& c = series.coefficients;
    // 1/(1 - t^d) is a strided prefix sum
    for (Index e = 0; e < exponent; ++e)
        for (Index k = degree; k < c.size(); ++k)
            c[k] += c[k - degree];
}

SeriesTruncation hilbert(Index r, Prime p, Index max_degree)
{
    SeriesTruncation series;
    series.coefficients.assign(checked_add(max_degree, 1), 0);
    series.coefficients[0] = 1;
    for (const auto& generator : generator_ledger(r, p)) {
        if (generator.degree > max_degree)
            break;
        multiply_by_inverse_power(series, generator.degree, generator.coefficient_dim);
    }
    return series;
}

} // namespace sl2ext
