#include "sl2ext/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sl2ext/trace.hpp"

namespace sl2ext {

bool VerifyReport::all_passed() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::lines() const
{
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << " p=" << c.p;
        if (c.r)
            os << " r=" << *c.r;
        if (c.n)
            os << " n=" << *c.n;
        os << " : " << c.detail << '\n';
    }
    return os.str();
}

CheckResult check_top_dimension(ExtEngine& engine, Index r, Prime p)
{
    const Index q = two_p_pow(r - 1, p);
    const ExtDim dim = engine.ext_k_gl2_top(r, p);
    return {"top-degree-dimension", p, r, std::nullopt, dim == 1,
            "dim Ext^" + std::to_string(q) + "(k, gl2^(" + std::to_string(r) + ")) = " + to_decimal(dim)};
}

CheckResult check_corner(ExtEngine& engine, Index r, Prime p)
{
    const Index q = two_p_pow(r - 1, p);
    const ExtDim corner = e2_corner_dim(r, p);
    CheckResult result{"corner", p, r, std::nullopt, corner == 1, ""};
    for (const auto& summand : engine.decompose_ext_k_nabla2(q, r, p)) {
        const bool expected = summand.n == q ? summand.dim == corner : summand.dim == 0;
        if (!expected) {
            result.passed = false;
            result.n = summand.n;
            result.detail = "summand n=" + std::to_string(summand.n) + " has dim " + to_decimal(summand.dim);
            return result;
        }
    }
    result.detail = "corner dim " + to_decimal(corner) + ", only summand n=" + std::to_string(q) + " is nonzero";
    if (corner != 1)
        result.detail = "corner dim " + to_decimal(corner);
    return result;
}

CheckResult check_vanishing(ExtEngine& engine, Index r, Prime p)
{
    const Index diagonal = two_p_pow(r, p);
    for (Weight n = 0; n < diagonal; ++n) {
        const ExtDim dim = engine.ext_delta_nabla2({diagonal - n, n, r, p});
        if (dim != 0)
            return {"vanishing", p, r, n, false,
                    "dim Ext^" + std::to_string(diagonal - n) + "(Delta(" + std::to_string(n) + "), nabla(2)^(" +
                        std::to_string(r) + ")) = " + to_decimal(dim)};
    }
    return {"vanishing", p, r, std::nullopt, true,
            "Ext^{" + std::to_string(diagonal) + "-n}(Delta(n), nabla(2)^(" + std::to_string(r) + ")) = 0 for n < " +
                std::to_string(diagonal)};
}

CheckResult check_unique_chain(Index r, Prime p)
{
    const Index q = two_p_pow(r - 1, p);
    const TraceDag dag = trace_decomposition(q, r, p);
    const Natural copies = leaf_path_count(dag, {0, 2, 0, p});

    std::set<ExtQuery> expected;
    for (Index s = 1; s <= r; ++s)
        expected.insert({0, two_p_pow(r - s, p), r - s, p});
    const auto nonzero = nonzero_queries(dag);
    const std::set<ExtQuery> found(nonzero.begin(), nonzero.end());

    CheckResult result{"unique-chain", p, r, std::nullopt, copies == 1 && found == expected, ""};
    result.detail = "copies of Hom(Delta(2), nabla(2)) = " + to_decimal(copies) + ", nonzero nodes " +
                    std::to_string(found.size()) + " (expected " + std::to_string(expected.size()) + ")";
    for (const auto& q_found : found)
        if (!expected.contains(q_found)) {
            result.n = q_found.weight;
            result.detail += ", unexpected " + node_id(q_found);
            break;
        }
    return result;
}

CheckResult check_deficit(Index r, Prime p)
{
    const TraceDag dag = trace_decomposition(two_p_pow(r - 1, p), r, p);
    const DeficitReport report = verify_deficit(dag);
    CheckResult result{"deficit", p, r, std::nullopt, report.ok(), ""};
    result.detail = std::to_string(report.nonzero_nodes_checked) + " nonzero nodes, " +
                    std::to_string(report.violations.size()) + " violations";
    if (!report.ok()) {
        result.n = report.violations.front().weight;
        result.detail += ", first " + node_id(report.violations.front());
    }
    return result;
}

CheckResult check_deficit_arithmetic(Prime p, Index bound, Index s_max)
{
    std::size_t cases = 0;
    for (Index s = 0; s <= s_max; ++s)
        for (Index a = 0; a <= bound; ++a)
            for (Index b = 0; b <= bound; ++b)
                for (Index i = 0; i <= b; ++i) {
                    ++cases;
                    if (!deficit_step_holds(a, b, i, s, p))
                        return {"deficit-arithmetic", p, std::nullopt, b, false,
                                "fails at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                    " i=" + std::to_string(i) + " s=" + std::to_string(s)};
                }
    return {"deficit-arithmetic", p, std::nullopt, std::nullopt, true,
            std::to_string(cases) + " cases with a, b <= " + std::to_string(bound) + ", s <= " + std::to_string(s_max)};
}

VerifyReport run_verification(std::vector<Prime> primes, Index r_max)
{
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    VerifyReport report;
    for (const Prime p : primes) {
        ExtEngine engine;
        for (Index r = 1; r <= r_max; ++r) {
            report.checks.push_back(check_top_dimension(engine, r, p));
            report.checks.push_back(check_corner(engine, r, p));
            report.checks.push_back(check_vanishing(engine, r, p));
            report.checks.push_back(check_unique_chain(r, p));
            report.checks.push_back(check_deficit(r, p));
        }
        report.checks.push_back(check_deficit_arithmetic(p, 100, 3));
    }
    return report;
}

} // namespace sl2ext
