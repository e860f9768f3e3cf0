#pragma once

// Hilbert series of the polynomial algebra generated by the universal
// classes: r copies of a 4-dimensional space (the dual of gl2^(r)), the i-th
// placed in degree 2p^(i-1).  Its series is prod_{i=1}^{r} (1 - t^{2p^(i-1)})^{-4}.
//
// This bounds the growth of the finite module H^*(G, k); it is not the
// series of the cohomology ring itself.

#include <vector>

#include "sl2ext/integer.hpp"
#include "sl2ext/weights.hpp"

namespace sl2ext {

inline constexpr Index gl2_dimension = 4;

struct GeneratorEntry {
    Index index;             ///< i
    Index degree;            ///< 2p^(i-1)
    Index coefficient_dim;   ///< dim gl2
    Index frobenius_pullback;///< r - i: e_i^(r-i) lives in coefficients gl2^(r)

    friend bool operator==(const GeneratorEntry&, const GeneratorEntry&) = default;
};

using GeneratorLedger = std::vector<GeneratorEntry>;

GeneratorLedger generator_ledger(Index r, Prime p);

/// Coefficients c_0..c_N of a graded Hilbert series.
struct SeriesTruncation {
    std::vector<Natural> coefficients;

    Index max_degree() const noexcept { return coefficients.size() - 1; }
};

/// Multiplies series by (1 - t^degree)^{-exponent} in place, truncating.
void multiply_by_inverse_power(SeriesTruncation& series, Index degree, Index exponent);

SeriesTruncation hilbert(Index r, Prime p, Index max_degree);

} // namespace sl2ext
