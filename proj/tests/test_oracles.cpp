#include <doctest.h>

#include "sl2ext/oracles.hpp"
#include "sl2ext/weights.hpp"

using namespace sl2ext;
using namespace sl2ext::oracles;

TEST_CASE("orbit_linked examples")
{
    CHECK(orbit_linked(2, 6, Prime(2), {50}));
    CHECK_FALSE(orbit_linked(2, 6, Prime(3), {50}));
    CHECK(orbit_linked(5, 5, Prime(7), {50}));
    CHECK_THROWS_AS(orbit_linked(40, 5, Prime(7), {50}), std::invalid_argument);
}

TEST_CASE("dot orbits have the expected arithmetic shape")
{
    // p = 2: the orbit of 2 is every even weight
    const auto even = dot_orbit(2, Prime(2), {50});
    CHECK(even.size() == 26);
    for (const Weight w : even)
        CHECK(w % 2 == 0);

    // p = 3, lambda = 2 = p - 1 is fixed by the reflections through -1 mod 3, orbit = 2 + 6Z
    const auto fixed = dot_orbit(2, Prime(3), {50});
    for (const Weight w : fixed)
        CHECK(w % 6 == 2);
    CHECK(fixed.contains(8));
    CHECK_FALSE(fixed.contains(6));
}

TEST_CASE("orbit is stable under enlarging the cutoff")
{
    for (Index p : {2, 3, 5})
        for (Weight lambda = 0; lambda <= 60; ++lambda)
            for (Weight mu = 0; mu <= 60; ++mu) {
                const Index b = std::max(lambda, mu) + 2 * p;
                REQUIRE(orbit_linked(lambda, mu, Prime(p), {b}) == orbit_linked(lambda, mu, Prime(p), {2 * b}));
            }
}

TEST_CASE("orbit linkage implies the block condition")
{
    constexpr Weight limit = 500;
    for (Index p : {2, 3, 5}) {
        const Prime prime(p);
        std::size_t sufficiency_gaps = 0;
        for (Weight lambda = 0; lambda <= limit; ++lambda) {
            const auto orbit = dot_orbit(lambda, prime, {limit + 2 * p});
            for (Weight mu = 0; mu <= limit; ++mu) {
                const bool linked = orbit.contains(mu);
                if (linked)
                    REQUIRE(same_block(lambda, mu, prime));
                else if (same_block(lambda, mu, prime))
                    ++sufficiency_gaps;
            }
        }
        MESSAGE("p = " << p << ": " << sufficiency_gaps << " pairs pass same_block without orbit linkage");
    }
}

TEST_CASE("naive_ext_dim")
{
    CHECK(naive_ext_dim({0, 4, 1, Prime(2)}, 100) == 1);
    CHECK(naive_ext_dim({0, 2, 0, Prime(2)}, 100) == 1);
    // Ext^2(Delta(1), nabla(2)), Ext^1(Delta(2), nabla(2)), Hom(Delta(3), nabla(2))
    CHECK(naive_ext_dim({2, 2, 1, Prime(2)}, 100) == 0);
}

TEST_CASE("naive_ext_dim refuses to exceed its budget")
{
    ExtEngine engine;
    const ExtQuery q{12, 20, 2, Prime(2)};
    CHECK(naive_ext_dim(q, 1'000'000) == engine.ext_delta_nabla2(q));
    CHECK_THROWS_AS(naive_ext_dim({12, 20, 2, Prime(2)}, 5), GuardExceeded);
    CHECK_THROWS_AS(naive_ext_dim({0, 2, 0, Prime(2)}, 0), GuardExceeded);
}
