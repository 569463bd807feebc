#include <doctest.h>

#include <random>

#include "icesep/domain.hpp"
#include "support/samples.hpp"

using namespace icesep;

namespace
{

std::set<LinearConstraint> constraint_set(const AbstractElement& d)
{
    auto cs = constraints(d);
    return {cs.begin(), cs.end()};
}

LinearConstraint le(std::vector<Int> c, Int b)
{
    return make_le(std::move(c), std::move(b));
}

} // namespace

TEST_CASE("interval singleton constraints are the four bounds")
{
    AbstractElement d = singleton(State{1, 2}, DomainKind::interval);
    std::set<LinearConstraint> expected{
        le({1, 0}, 1),  // x <= 1
        le({-1, 0}, -1), // x >= 1
        le({0, 1}, 2),  // y <= 2
        le({0, -1}, -2), // y >= 2
    };
    CHECK(constraint_set(d) == expected);
}

TEST_CASE("interval join is the componentwise hull")
{
    AbstractElement d = join(join(singleton(State{1, 1}, DomainKind::interval),
                                  singleton(State{3, 1}, DomainKind::interval)),
                             singleton(State{1, 4}, DomainKind::interval));
    std::set<LinearConstraint> expected{
        le({1, 0}, 3),
        le({-1, 0}, -1),
        le({0, 1}, 4),
        le({0, -1}, -1),
    };
    CHECK(constraint_set(d) == expected);
    CHECK_FALSE(member(State{4, 1}, d));
    CHECK(member(State{2, 3}, d));
}

TEST_CASE("interval from_conjunction and open bounds")
{
    TranSys sys = parse_system(
        "(declare-var x Int)(declare-var y Int)(init (and (<= x 3) (>= x 1)))(trans true)(good true)");
    auto d = from_conjunction(sys.init, DomainKind::interval, 2);
    REQUIRE(d);
    std::set<LinearConstraint> expected{le({1, 0}, 3), le({-1, 0}, -1)};
    CHECK(constraint_set(*d) == expected); // infinite y bounds omitted
    CHECK(member(State{2, 100}, *d));

    TranSys empty = parse_system(
        "(declare-var x Int)(init (and (<= x 0) (>= x 1)))(trans true)(good true)");
    CHECK_FALSE(from_conjunction(empty.init, DomainKind::interval, 1));
}

TEST_CASE("interval ordering")
{
    AbstractElement a = join(singleton(State{1, 1}, DomainKind::interval),
                             singleton(State{3, 4}, DomainKind::interval));
    AbstractElement b = join(singleton(State{1, 1}, DomainKind::interval),
                             singleton(State{2, 4}, DomainKind::interval));
    CHECK(leq(a, a));
    CHECK(leq(b, a));
    CHECK_FALSE(leq(a, b));
}

TEST_CASE("interval joins match the componentwise min/max oracle")
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 500; ++round)
    {
        std::size_t n = 3;
        std::vector<State> used;
        State first = testing::random_state(rng, n, -8, 8);
        AbstractElement d = singleton(first, DomainKind::interval);
        used.push_back(first);
        for (int i = 0; i < 4; ++i)
        {
            State p = testing::random_state(rng, n, -8, 8);
            used.push_back(p);
            d = join(d, singleton(p, DomainKind::interval));
        }
        const auto& box = std::get<IntervalElem>(d);
        for (std::size_t i = 0; i < n; ++i)
        {
            Int lo = used[0][i], hi = used[0][i];
            for (const State& p : used)
            {
                lo = std::min(lo, p[i]);
                hi = std::max(hi, p[i]);
            }
            REQUIRE(box.lo(i));
            REQUIRE(box.hi(i));
            CHECK(*box.lo(i) == lo);
            CHECK(*box.hi(i) == hi);
        }
    }
}
