#include <doctest.h>

#include <limits>
#include <thread>
#include <vector>

#include "sl2ext/ext_engine.hpp"
#include "sl2ext/oracles.hpp"

using namespace sl2ext;

namespace {

constexpr std::size_t budget = 50'000'000;

ExtDim naive(Index m, Weight n, Index s, Index p)
{
    return oracles::naive_ext_dim({m, n, s, Prime(p)}, budget);
}

} // namespace

TEST_CASE("ext_delta_nabla2 examples")
{
    ExtEngine engine;
    CHECK(engine.ext_delta_nabla2({0, 4, 1, Prime(2)}) == 1);
    CHECK(engine.ext_delta_nabla2({0, 2, 0, Prime(3)}) == 1);
    CHECK(engine.ext_delta_nabla2({2, 2, 1, Prime(2)}) == 0);
}

TEST_CASE("base case")
{
    ExtEngine engine;
    for (Index p : {2, 3, 5})
        for (Index m = 0; m <= 50; ++m)
            for (Weight n = 0; n <= 50; ++n) {
                const ExtDim expected = (m == 0 && n == 2) ? 1 : 0;
                REQUIRE(engine.ext_delta_nabla2({m, n, 0, Prime(p)}) == expected);
            }
}

TEST_CASE("block failure forces zero")
{
    ExtEngine engine;
    for (Index p : {2, 3, 5, 7})
        for (Index s = 1; s <= 3; ++s)
            for (Weight n = 0; n <= 60; ++n) {
                if (in_block_of_two_p_s(n, s, Prime(p)))
                    continue;
                for (Index m = 0; m <= 20; ++m)
                    REQUIRE(engine.ext_delta_nabla2({m, n, s, Prime(p)}) == 0);
            }
}

TEST_CASE("ext_k_nabla2 examples")
{
    ExtEngine engine;
    CHECK(engine.ext_k_nabla2(2, 1, Prime(2)) == 1);
    CHECK(engine.ext_k_nabla2(6, 2, Prime(3)) == 1);

    // q = 1, r = 1: summands Ext^1(Delta(0), nabla(2)) and Hom(Delta(1), nabla(2)) by full expansion
    ExtDim oracle = 0;
    for (Weight n = 0; n <= 1; ++n)
        oracle += naive(1 - n, n, 0, 2);
    REQUIRE(oracle == 0);
    CHECK(engine.ext_k_nabla2(1, 1, Prime(2)) == 0);

    CHECK_THROWS_AS(engine.ext_k_nabla2(2, 0, Prime(2)), std::invalid_argument);
}

TEST_CASE("ext_k_gl2_top")
{
    ExtEngine engine;
    CHECK(engine.ext_k_gl2_top(1, Prime(2)) == 1);
    CHECK(engine.ext_k_gl2_top(3, Prime(2)) == 1);
    CHECK(engine.ext_k_gl2_top(2, Prime(5)) == 1);
    CHECK_THROWS_AS(engine.ext_k_gl2_top(0, Prime(5)), std::invalid_argument);
}

TEST_CASE("decompose_ext_k_nabla2")
{
    ExtEngine engine;

    SUBCASE("q = 2, r = 1, p = 2")
    {
        const auto v = engine.decompose_ext_k_nabla2(2, 1, Prime(2));
        REQUIRE(v.size() == 3);
        for (const auto& s : v)
            CHECK(s.dim == (s.n == 2 ? 1 : 0));
    }
    SUBCASE("q = 0 has the single zero summand Hom(Delta(0), nabla(2))")
    {
        const auto v = engine.decompose_ext_k_nabla2(0, 1, Prime(3));
        REQUIRE(v.size() == 1);
        CHECK(v[0].n == 0);
        CHECK(v[0].dim == 0);
    }
    SUBCASE("q = 6, r = 2, p = 3 against full expansion")
    {
        const auto v = engine.decompose_ext_k_nabla2(6, 2, Prime(3));
        REQUIRE(v.size() == 7);
        for (const auto& s : v) {
            const ExtDim oracle = naive(6 - s.n, s.n, 1, 3);
            CHECK(s.dim == oracle);
            CHECK(s.dim == (s.n == 6 ? 1 : 0));
        }
    }
    SUBCASE("sum of summands is ext_k_nabla2")
    {
        for (Index p : {2, 3, 5})
            for (Index r = 1; r <= 3; ++r)
                for (Index q = 0; q <= 40; ++q) {
                    ExtDim total = 0;
                    for (const auto& s : engine.decompose_ext_k_nabla2(q, r, Prime(p)))
                        total += s.dim;
                    REQUIRE(total == engine.ext_k_nabla2(q, r, Prime(p)));
                }
    }
}

TEST_CASE("memoization does not re-expand")
{
    ExtEngine engine;
    const ExtQuery q{0, 98, 2, Prime(7)};
    const ExtDim first = engine.ext_delta_nabla2(q);
    const std::size_t expanded = engine.expansions();
    CHECK(expanded == engine.memo_size());
    CHECK(expanded > 1);
    CHECK(engine.ext_delta_nabla2(q) == first);
    CHECK(engine.expansions() == expanded);

    engine.clear();
    CHECK(engine.memo_size() == 0);
    CHECK(engine.ext_delta_nabla2(q) == first);
}

TEST_CASE("memoized engine equals full expansion on the small grid")
{
    ExtEngine engine;
    for (Index p : {2, 3})
        for (Index s = 0; s <= 2; ++s)
            for (Weight n = 0; n <= 20; ++n)
                for (Index m = 0; m <= 12; ++m)
                    REQUIRE(engine.ext_delta_nabla2({m, n, s, Prime(p)}) == naive(m, n, s, p));
}

TEST_CASE("Weyl filtration of gl2")
{
    const auto mult = weyl_multiplicities_gl2();
    CHECK(mult.sections() == std::map<Weight, Index>{{0, 1}, {2, 1}});
    CHECK(mult.multiplicity(2) == 1);
    CHECK(mult.multiplicity(1) == 0);

    CHECK(hom_gl2_nabla(2) == 1);
    CHECK(hom_gl2_nabla(0) == 1);
    CHECK(hom_gl2_nabla(4) == 0);
}

TEST_CASE("E2 corner")
{
    CHECK(e2_corner_dim(1, Prime(2)) == 1);
    CHECK(e2_corner_dim(4, Prime(3)) == 1);
    CHECK(e2_corner_dim(2, Prime(7)) == 1);

    const auto report = e2_corner(3, Prime(5));
    REQUIRE(report.steps.size() == 4);
    CHECK(report.steps[0] == "E_2^{0,50} = Hom_G(gl2^(2), nabla(50))");
    CHECK(report.steps[1] == "nabla(50)^{G_2} = nabla(2)^(2)");
    CHECK(report.steps[2] == "Hom_{G/G_2}(gl2^(2), nabla(2)^(2)) = Hom_G(gl2, nabla(2))");
    CHECK_THROWS_AS(e2_corner(0, Prime(5)), std::invalid_argument);
}

TEST_CASE("top-degree summand is the corner")
{
    ExtEngine engine;
    for (Index p : {2, 3, 5, 7})
        for (Index r = 1; r <= 3; ++r) {
            const Index q = two_p_pow(r - 1, Prime(p));
            for (const auto& s : engine.decompose_ext_k_nabla2(q, r, Prime(p)))
                REQUIRE(s.dim == (s.n == q ? e2_corner_dim(r, Prime(p)) : ExtDim(0)));
        }
}

TEST_CASE("shared engine across threads matches per-thread engines")
{
    ExtEngine shared(ExtEngine::Sharing::synchronized);
    std::vector<std::vector<ExtDim>> from_shared(4), from_private(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            ExtEngine own;
            const Prime p(t % 2 == 0 ? 3 : 5);
            for (Index r = 1; r <= 3; ++r)
                for (Index q = 0; q <= 2 * 25; ++q) {
                    from_shared[t].push_back(shared.ext_k_nabla2(q, r, p));
                    from_private[t].push_back(own.ext_k_nabla2(q, r, p));
                }
        });
    for (auto& w : workers)
        w.join();
    for (int t = 0; t < 4; ++t)
        CHECK(from_shared[t] == from_private[t]);
}

TEST_CASE("weight overflow raises instead of wrapping")
{
    constexpr Index max = std::numeric_limits<Index>::max();
    CHECK(two_p_pow(62, Prime(2)) == (Index{1} << 63));
    CHECK_THROWS_AS(two_p_pow(63, Prime(2)), OverflowError);
    CHECK_THROWS_AS(checked_add(max, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(max / 2 + 1, 2), OverflowError);
    CHECK(checked_mul(0, max) == 0);
}
