#pragma once

// Exact dimensions of Ext groups between Weyl modules and Frobenius twists
// of the induced module nabla(2) for SL2.
//
//   dim Ext^m(Delta(n), nabla(2)^(s))
//     s = 0 : 1 if (m, n) = (0, 2), else 0
//     s > 0 : 0 if n is not in the block of 2p^s, otherwise
//             sum_{i=0}^{m} dim Ext^{m-i}(Delta(n/p + i), nabla(2)^(s-1))
//
//   dim Ext^q(k, nabla(2)^(r)) = sum_{n=0}^{q} dim Ext^{q-n}(Delta(n), nabla(2)^(r-1))
//
// The second identity is only established for q = 2p^(r-1); other degrees
// are reported as formula extrapolation by the command layer.

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "sl2ext/integer.hpp"
#include "sl2ext/weights.hpp"

namespace sl2ext {

using ExtDim = Natural;

/// Ext^degree(Delta(weight), nabla(2)^(twist)) in characteristic p.
struct ExtQuery {
    Index degree = 0;
    Weight weight = 0;
    Index twist = 0;
    Prime p{2};

    friend bool operator==(const ExtQuery&, const ExtQuery&) = default;
    friend auto operator<=>(const ExtQuery&, const ExtQuery&) = default;
};

/// "m:n:s", the node id used in serialized traces.
std::string node_id(const ExtQuery& q);

struct ExtQueryHash {
    std::size_t operator()(const ExtQuery& q) const noexcept;
};

/// Multiplicities of the sections of a Weyl filtration.
class FiltrationMultiplicities {
public:
    explicit FiltrationMultiplicities(std::map<Weight, Index> sections) : sections_(std::move(sections)) {}

    Index multiplicity(Weight n) const;
    const std::map<Weight, Index>& sections() const noexcept { return sections_; }

private:
    std::map<Weight, Index> sections_;
};

/// gl2 = L(1) (x) L(1) has Weyl sections Delta(2) and Delta(0).
FiltrationMultiplicities weyl_multiplicities_gl2();

/// dim Hom_G(gl2, nabla(n)), the multiplicity of Delta(n) in gl2.
ExtDim hom_gl2_nabla(Weight n);

struct CornerReport {
    ExtDim dim;
    std::vector<std::string> steps;
};

/// The corner term E_2^{0, 2p^(r-1)} = Hom_G(gl2^(r-1), nabla(2p^(r-1))) of
/// the LHS spectral sequence, reduced by untwisting to Hom_G(gl2, nabla(2)).
CornerReport e2_corner(Index r, Prime p);
ExtDim e2_corner_dim(Index r, Prime p);

struct Summand {
    Weight n;
    ExtDim dim;
};

/// Memoized evaluator.  Each instance owns its table.  With
/// Sharing::synchronized the table may be used from several threads.
class ExtEngine {
public:
    enum class Sharing { single_thread, synchronized };

    explicit ExtEngine(Sharing sharing = Sharing::single_thread) : sharing_(sharing) {}

    ExtEngine(const ExtEngine&) = delete;
    ExtEngine& operator=(const ExtEngine&) = delete;

    ExtDim ext_delta_nabla2(const ExtQuery& q);

    /// dim Ext^q(k, nabla(2)^(r)); requires r >= 1.
    ExtDim ext_k_nabla2(Index q, Index r, Prime p);

    /// dim Ext^{2p^(r-1)}(k, gl2^(r)); also the GL2 dimension.
    ExtDim ext_k_gl2_top(Index r, Prime p);

    std::vector<Summand> decompose_ext_k_nabla2(Index q, Index r, Prime p);

    /// Number of memo misses so far, i.e. distinct queries expanded.
    std::size_t expansions() const;
    std::size_t memo_size() const;
    void clear();

private:
    bool lookup(const ExtQuery& q, ExtDim& out) const;
    void store(const ExtQuery& q, const ExtDim& value);

    Sharing sharing_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<ExtQuery, ExtDim, ExtQueryHash> memo_;
    std::size_t expansions_ = 0;
};

/// 2p^s, checked.
Weight two_p_pow(Index s, Prime p);

/// Rule that determines a query's value.
enum class Rule { base_case, block_vanish, recursion };

Rule rule_for(const ExtQuery& q);
std::string to_string(Rule rule);

/// The children of a recursion query, in summand order i = 0..degree.
std::vector<ExtQuery> recursion_children(const ExtQuery& q);

} // namespace sl2ext
