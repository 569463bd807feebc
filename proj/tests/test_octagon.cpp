#include <doctest.h>

#include <random>

#include "icesep/domain.hpp"
#include "support/oracles.hpp"
#include "support/samples.hpp"

using namespace icesep;

namespace
{

LinearConstraint le(std::vector<Int> c, Int b)
{
    return make_le(std::move(c), std::move(b));
}

std::set<LinearConstraint> constraint_set(const AbstractElement& d)
{
    auto cs = constraints(d);
    return {cs.begin(), cs.end()};
}

OctagonElem fold(const std::vector<State>& pts)
{
    OctagonElem d = OctagonElem::from_point(pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i)
        d = oct_join(d, OctagonElem::from_point(pts[i]));
    return d;
}

} // namespace

TEST_CASE("octagon singleton lists all eight template bounds")
{
    AbstractElement d = singleton(State{1, 2}, DomainKind::octagon);
    std::set<LinearConstraint> expected{
        le({1, 0}, 1),    // x <= 1
        le({-1, 0}, -1),  // x >= 1
        le({0, 1}, 2),    // y <= 2
        le({0, -1}, -2),  // y >= 2
        le({1, 1}, 3),    // x + y <= 3
        le({-1, -1}, -3), // x + y >= 3
        le({1, -1}, -1),  // y - x >= 1
        le({-1, 1}, 1),   // x - y >= -1
    };
    CHECK(constraint_set(d) == expected);
}

TEST_CASE("octagon hull of the left cluster is the drawn quadrilateral")
{
    OctagonElem d = fold({State{1, 1}, State{1, 4}, State{3, 1}});
    // Same integer points as the polygon with vertices (1,1) (1,4) (3,2) (3,1).
    std::vector<State> verts{{1, 1}, {1, 4}, {3, 2}, {3, 1}};
    for (Int x = -1; x <= 7; ++x)
        for (Int y = -1; y <= 5; ++y)
        {
            State p{x, y};
            REQUIRE(oct_member(p, d) == testing::oracle_hull2_contains(verts, p));
        }
}

TEST_CASE("integer tightening keeps unary bounds even")
{
    // Hull of (0,0) and (1,1): x - y = 0, 0 <= x + y <= 2, and the unary
    // bounds must stay integral (no half-integer corners).
    OctagonElem d = fold({State{0, 0}, State{1, 1}});
    REQUIRE(d.entry(1, 0));
    CHECK(*d.entry(1, 0) == 2); // 2x <= 2
    CHECK(oct_member(State{1, 1}, d));
    CHECK_FALSE(oct_member(State{1, 0}, d));
}

TEST_CASE("octagon from_conjunction accepts octagonal atoms only")
{
    TranSys sys = parse_system("(declare-var x Int)(declare-var y Int)"
                               "(init (and (<= (+ x y) 3) (>= x 1)))(trans true)(good true)");
    auto d = from_conjunction(sys.init, DomainKind::octagon, 2);
    REQUIRE(d);
    CHECK(member(State{1, 2}, *d));
    CHECK_FALSE(member(State{2, 2}, *d));

    TranSys bad = parse_system("(declare-var x Int)(declare-var y Int)"
                               "(init (<= (+ (* 2 x) y) 3))(trans true)(good true)");
    CHECK_FALSE(from_conjunction(bad.init, DomainKind::octagon, 2));

    TranSys empty = parse_system("(declare-var x Int)(declare-var y Int)"
                                 "(init (and (<= x 0) (>= x 1)))(trans true)(good true)");
    CHECK_FALSE(from_conjunction(empty.init, DomainKind::octagon, 2));
}

TEST_CASE("octagon joins equal the template-max oracle")
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::size_t> count(1, 5);
    for (int round = 0; round < 200; ++round)
    {
        std::vector<State> a_pts, b_pts;
        for (std::size_t i = count(rng); i-- > 0;)
            a_pts.push_back(testing::random_state(rng, 3, -8, 8));
        for (std::size_t i = count(rng); i-- > 0;)
            b_pts.push_back(testing::random_state(rng, 3, -8, 8));
        OctagonElem joined = oct_join(fold(a_pts), fold(b_pts));
        std::vector<State> all = a_pts;
        all.insert(all.end(), b_pts.begin(), b_pts.end());
        REQUIRE(testing::oracle_oct_equals(all, joined));
    }
}

TEST_CASE("octagon ordering is entrywise on canonical forms")
{
    OctagonElem small = fold({State{1, 1}, State{2, 2}});
    OctagonElem big = fold({State{0, 0}, State{3, 3}, State{2, 0}});
    CHECK(oct_leq(small, small));
    CHECK(oct_leq(small, big));
    CHECK_FALSE(oct_leq(big, small));
}
