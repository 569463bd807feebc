#include <doctest.h>

#include <random>

#include "icesep/domain.hpp"
#include "icesep/parser.hpp"
#include "support/oracles.hpp"
#include "support/samples.hpp"

using namespace icesep;

namespace
{

LinearConstraint le(std::vector<Int> c, Int b)
{
    return make_le(std::move(c), std::move(b));
}

LinearConstraint eq(std::vector<Int> c, Int b)
{
    auto r = make_eq(std::move(c), std::move(b));
    REQUIRE(r);
    return *r;
}

std::set<LinearConstraint> constraint_set(const AbstractElement& d)
{
    auto cs = constraints(d);
    return {cs.begin(), cs.end()};
}

AbstractElement hull_of(const std::vector<State>& pts, DomainKind kind = DomainKind::polytope)
{
    AbstractElement d = singleton(pts[0], kind);
    for (std::size_t i = 1; i < pts.size(); ++i)
        d = join(d, singleton(pts[i], kind));
    return d;
}

} // namespace

TEST_CASE("polytope singleton constraints are equalities")
{
    AbstractElement d = singleton(State{1, 2}, DomainKind::polytope);
    std::set<LinearConstraint> expected{eq({1, 0}, 1), eq({0, 1}, 2)};
    CHECK(constraint_set(d) == expected);
}

TEST_CASE("triangle membership")
{
    AbstractElement tri = hull_of({{1, 1}, {1, 4}, {3, 1}});
    CHECK(member(State{2, 2}, tri));
    CHECK_FALSE(member(State{2, 3}, tri));
    CHECK(member(State{1, 1}, tri));
    CHECK_FALSE(member(State{4, 1}, tri));
}

TEST_CASE("worked three-variable joins and their constraint sets")
{
    TranSys sys = testing::fig5();
    auto d1 = from_conjunction(sys.init, DomainKind::polytope, 3);
    REQUIRE(d1);
    CHECK(constraint_set(*d1) == std::set<LinearConstraint>{eq({1, 0, 0}, 2), eq({0, 1, 0}, 0)});

    // singleton of (2,0,0) sits inside the initial region
    AbstractElement d0 = singleton(State{2, 0, 0}, DomainKind::polytope);
    CHECK(leq(d0, *d1));
    CHECK_FALSE(leq(*d1, d0));

    AbstractElement d3 = join(*d1, singleton(State{4, 1, 1}, DomainKind::polytope));
    CHECK(constraint_set(d3) == std::set<LinearConstraint>{
                                    eq({1, -2, 0}, 2),  // 2k + 2 = j
                                    le({1, 0, 0}, 4),   // j <= 4
                                    le({-1, 0, 0}, -2), // j >= 2
                                });

    AbstractElement d5 = join(d3, singleton(State{6, 0, 0}, DomainKind::polytope));
    CHECK(constraint_set(d5) == std::set<LinearConstraint>{
                                    le({1, 2, 0}, 6),   // j + 2k <= 6
                                    le({0, -1, 0}, 0),  // k >= 0
                                    le({-1, 2, 0}, -2), // j >= 2k + 2
                                });

    AbstractElement d4 = singleton(State{6, 0, 0}, DomainKind::polytope);
    CHECK(constraint_set(d4) == std::set<LinearConstraint>{eq({1, 0, 0}, 6), eq({0, 1, 0}, 0),
                                                           eq({0, 0, 1}, 0)});
}

TEST_CASE("from_conjunction rejects what the domain cannot represent")
{
    TranSys disj = parse_system(
        "(declare-var x Int)(init (or (= x 0) (= x 1)))(trans true)(good true)");
    CHECK_FALSE(from_conjunction(disj.init, DomainKind::polytope, 1));

    TranSys frac = parse_system(
        "(declare-var x Int)(declare-var y Int)"
        "(init (and (<= (+ x y) 1) (>= (+ x y) 1) (<= (- x y) 0) (>= (- x y) 0)))"
        "(trans true)(good true)");
    // x = y = 1/2: no integer generator representation
    CHECK_FALSE(from_conjunction(frac.init, DomainKind::polytope, 2));

    TranSys empty = parse_system(
        "(declare-var x Int)(init (and (<= x 0) (>= x 1)))(trans true)(good true)");
    CHECK_FALSE(from_conjunction(empty.init, DomainKind::polytope, 1));

    TranSys top = parse_system("(declare-var x Int)(init true)(trans true)(good true)");
    CHECK_FALSE(from_conjunction(top.init, DomainKind::polytope, 1));
}

TEST_CASE("unbounded regions from conjunctions")
{
    TranSys ray = parse_system(
        "(declare-var x Int)(declare-var y Int)(init (and (>= x 1) (= y 2)))(trans true)(good true)");
    auto d = from_conjunction(ray.init, DomainKind::polytope, 2);
    REQUIRE(d);
    CHECK(member(State{1000000, 2}, *d));
    CHECK_FALSE(member(State{0, 2}, *d));
    CHECK_FALSE(member(State{5, 3}, *d));
    CHECK(constraint_set(*d) ==
          std::set<LinearConstraint>{eq({0, 1}, 2), le({-1, 0}, -1)});
}

TEST_CASE("generator minimization keeps only vertices")
{
    AbstractElement d = hull_of({{0, 0}, {4, 0}, {2, 0}, {0, 4}, {1, 1}});
    const auto& poly = std::get<PolytopeElem>(d);
    CHECK(poly.points().size() == 3); // (2,0) and (1,1) lie inside
    CHECK(member(State{2, 0}, d));
    CHECK(member(State{1, 1}, d));
}

TEST_CASE("polytope membership agrees with the exact half-plane oracle")
{
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<std::size_t> count(1, 6);
    for (int round = 0; round < 500; ++round)
    {
        std::vector<State> pts;
        for (std::size_t i = count(rng); i-- > 0;)
            pts.push_back(testing::random_state(rng, 2, -8, 8));
        AbstractElement d = hull_of(pts);
        State q = testing::random_state(rng, 2, -9, 9);
        REQUIRE(member(q, d) == testing::oracle_hull2_contains(pts, q));
    }
}

TEST_CASE("member and constraints agree on grid points")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::size_t> count(1, 5);
    for (int round = 0; round < 40; ++round)
    {
        std::vector<State> pts;
        for (std::size_t i = count(rng); i-- > 0;)
            pts.push_back(testing::random_state(rng, 2, -4, 4));
        AbstractElement d = hull_of(pts);
        auto cs = constraints(d);
        for (Int x = -5; x <= 5; ++x)
            for (Int y = -5; y <= 5; ++y)
            {
                State p{x, y};
                bool by_constraints = true;
                for (const auto& c : cs)
                    by_constraints = by_constraints && satisfies(c, p);
                REQUIRE(member(p, d) == by_constraints);
            }
    }
}
