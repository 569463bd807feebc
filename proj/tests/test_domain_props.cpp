#include <doctest.h>

#include <functional>
#include <random>

#include "icesep/domain.hpp"
#include "support/samples.hpp"

using namespace icesep;

namespace
{

AbstractElement random_element(std::mt19937_64& rng, DomainKind kind, std::size_t n, int box,
                               std::size_t max_pts)
{
    std::uniform_int_distribution<std::size_t> count(1, max_pts);
    AbstractElement d = singleton(testing::random_state(rng, n, -box, box), kind);
    for (std::size_t i = count(rng); i-- > 1;)
        d = join(d, singleton(testing::random_state(rng, n, -box, box), kind));
    return d;
}

void for_grid(std::size_t n, int box, const std::function<void(const State&)>& fn)
{
    State s(n, -box);
    while (true)
    {
        fn(s);
        std::size_t i = s.size();
        bool more = false;
        while (i-- > 0)
        {
            if (s[i] < box)
            {
                ++s[i];
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    s[j] = -box;
                more = true;
                break;
            }
        }
        if (!more)
            return;
    }
}

} // namespace

TEST_CASE("join is an upper bound in every domain")
{
    std::mt19937_64 rng(101);
    for (DomainKind kind : {DomainKind::interval, DomainKind::octagon, DomainKind::polytope})
        for (int round = 0; round < 30; ++round)
        {
            AbstractElement a = random_element(rng, kind, 2, 6, 4);
            AbstractElement b = random_element(rng, kind, 2, 6, 4);
            AbstractElement j = join(a, b);
            REQUIRE(leq(a, j));
            REQUIRE(leq(b, j));
            REQUIRE(leq(a, a)); // reflexivity
        }
}

TEST_CASE("singleton contains exactly its point")
{
    std::mt19937_64 rng(103);
    for (DomainKind kind : {DomainKind::interval, DomainKind::octagon, DomainKind::polytope})
        for (int round = 0; round < 10; ++round)
        {
            State p = testing::random_state(rng, 2, -3, 3);
            AbstractElement d = singleton(p, kind);
            for_grid(2, 4, [&](const State& q) { REQUIRE(member(q, d) == (q == p)); });
        }
}

TEST_CASE("member agrees with the constraint set on every grid point")
{
    std::mt19937_64 rng(107);
    for (DomainKind kind : {DomainKind::interval, DomainKind::octagon, DomainKind::polytope})
        for (int round = 0; round < 15; ++round)
        {
            AbstractElement d = random_element(rng, kind, 2, 4, 4);
            auto cs = constraints(d);
            for_grid(2, 5, [&](const State& q) {
                bool by_constraints = true;
                for (const auto& c : cs)
                    by_constraints = by_constraints && satisfies(c, q);
                REQUIRE(member(q, d) == by_constraints);
            });
        }
}

TEST_CASE("joins never mix domains or dimensions")
{
    AbstractElement a = singleton(State{0, 0}, DomainKind::interval);
    AbstractElement b = singleton(State{0, 0}, DomainKind::octagon);
    CHECK_THROWS_AS((void)join(a, b), StructuralError);
    AbstractElement c = singleton(State{0, 0, 0}, DomainKind::interval);
    CHECK_THROWS_AS((void)join(a, c), StructuralError);
}
