#include "sl2ext/ext_engine.hpp"

#include <stdexcept>

namespace sl2ext {

std::string node_id(const ExtQuery& q)
{
    return std::to_string(q.degree) + ":" + std::to_string(q.weight) + ":" + std::to_string(q.twist);
}

std::size_t ExtQueryHash::operator()(const ExtQuery& q) const noexcept
{
    std::size_t h = std::hash<Index>{}(q.degree);
    const auto mix = [&h](Index v) { h ^= std::hash<Index>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(q.weight);
    mix(q.twist);
    mix(q.p.value());
    return h;
}

Index FiltrationMultiplicities::multiplicity(Weight n) const
{
    const auto it = sections_.find(n);
    return it == sections_.end() ? 0 : it->second;
}

FiltrationMultiplicities weyl_multiplicities_gl2()
{
    return FiltrationMultiplicities({{0, 1}, {2, 1}});
}

ExtDim hom_gl2_nabla(Weight n)
{
    return ExtDim(weyl_multiplicities_gl2().multiplicity(n));
}

Weight two_p_pow(Index s, Prime p)
{
    return checked_mul(2, checked_pow(p.value(), s));
}

CornerReport e2_corner(Index r, Prime p)
{
    if (r < 1)
        throw std::invalid_argument("e2_corner requires r >= 1");
    CornerReport report;
    const Index frobenius_depth = r - 1;
    const Weight corner_weight = two_p_pow(frobenius_depth, p);
    const Index untwist = checked_pow(p.value(), frobenius_depth);

    report.steps.push_back("E_2^{0," + std::to_string(corner_weight) + "} = Hom_G(gl2^(" +
                           std::to_string(frobenius_depth) + "), nabla(" + std::to_string(corner_weight) + "))");

    // nabla(p^d * w)^{G_d} = nabla(w)^(d) as G/G_d-modules
    if (corner_weight % untwist != 0)
        throw std::logic_error("corner weight is not divisible by p^(r-1)");
    const Weight untwisted = corner_weight / untwist;
    report.steps.push_back("nabla(" + std::to_string(corner_weight) + ")^{G_" + std::to_string(frobenius_depth) +
                           "} = nabla(" + std::to_string(untwisted) + ")^(" + std::to_string(frobenius_depth) + ")");
    report.steps.push_back("Hom_{G/G_" + std::to_string(frobenius_depth) + "}(gl2^(" +
                           std::to_string(frobenius_depth) + "), nabla(" + std::to_string(untwisted) + ")^(" +
                           std::to_string(frobenius_depth) + ")) = Hom_G(gl2, nabla(" + std::to_string(untwisted) +
                           "))");

    report.dim = hom_gl2_nabla(untwisted);
    report.steps.push_back("dim Hom_G(gl2, nabla(" + std::to_string(untwisted) + ")) = multiplicity of Delta(" +
                           std::to_string(untwisted) + ") in the Weyl filtration of gl2 = " + to_decimal(report.dim));
    return report;
}

ExtDim e2_corner_dim(Index r, Prime p)
{
    return e2_corner(r, p).dim;
}

Rule rule_for(const ExtQuery& q)
{
    if (q.twist == 0)
        return Rule::base_case;
    if (!in_block_of_two_p_s(q.weight, q.twist, q.p))
        return Rule::block_vanish;
    return Rule::recursion;
}

std::string to_string(Rule rule)
{
    switch (rule) {
    case Rule::base_case:
        return "base-case";
    case Rule::block_vanish:
        return "block-vanish";
    case Rule::recursion:
        return "recursion";
    }
    return "unknown";
}

std::vector<ExtQuery> recursion_children(const ExtQuery& q)
{
    std::vector<ExtQuery> children;
    children.reserve(q.degree + 1);
    const Weight base = q.weight / q.p.value();
    for (Index i = 0; i <= q.degree; ++i)
        children.push_back({q.degree - i, checked_add(base, i), q.twist - 1, q.p});
    return children;
}

bool ExtEngine::lookup(const ExtQuery& q, ExtDim& out) const
{
    std::shared_lock<std::shared_mutex> lock(mutex_, std::defer_lock);
    if (sharing_ == Sharing::synchronized)
        lock.lock();
    const auto it = memo_.find(q);
    if (it == memo_.end())
        return false;
    out = it->second;
    return true;
}

void ExtEngine::store(const ExtQuery& q, const ExtDim& value)
{
    std::unique_lock<std::shared_mutex> lock(mutex_, std::defer_lock);
    if (sharing_ == Sharing::synchronized)
        lock.lock();
    // A concurrent writer may have stored the same value first.
    if (memo_.emplace(q, value).second)
        ++expansions_;
}

ExtDim ExtEngine::ext_delta_nabla2(const ExtQuery& q)
{
    ExtDim cached;
    if (lookup(q, cached))
        return cached;

    ExtDim result = 0;
    switch (rule_for(q)) {
    case Rule::base_case:
        result = (q.degree == 0 && q.weight == 2) ? 1 : 0;
        break;
    case Rule::block_vanish:
        break;
    case Rule::recursion: {
        const Weight base = q.weight / q.p.value();
        for (Index i = 0; i <= q.degree; ++i)
            result += ext_delta_nabla2({q.degree - i, checked_add(base, i), q.twist - 1, q.p});
        break;
    }
    }
    store(q, result);
    return result;
}

ExtDim ExtEngine::ext_k_nabla2(Index q, Index r, Prime p)
{
    ExtDim total = 0;
    for (const auto& summand : decompose_ext_k_nabla2(q, r, p))
        total += summand.dim;
    return total;
}

ExtDim ExtEngine::ext_k_gl2_top(Index r, Prime p)
{
    if (r < 1)
        throw std::invalid_argument("ext_k_gl2_top requires r >= 1");
    return ext_k_nabla2(two_p_pow(r - 1, p), r, p);
}

std::vector<Summand> ExtEngine::decompose_ext_k_nabla2(Index q, Index r, Prime p)
{
    if (r < 1)
        throw std::invalid_argument("decompose_ext_k_nabla2 requires r >= 1");
    std::vector<Summand> summands;
    summands.reserve(q + 1);
    for (Weight n = 0; n <= q; ++n)
        summands.push_back({n, ext_delta_nabla2({q - n, n, r - 1, p})});
    return summands;
}

std::size_t ExtEngine::expansions() const
{
    std::shared_lock<std::shared_mutex> lock(mutex_);
    return expansions_;
}

std::size_t ExtEngine::memo_size() const
{
    std::shared_lock<std::shared_mutex> lock(mutex_);
    return memo_.size();
}

void ExtEngine::clear()
{
    std::unique_lock<std::shared_mutex> lock(mutex_);
    memo_.clear();
    expansions_ = 0;
}

} // namespace sl2ext
