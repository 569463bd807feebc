#include <doctest.h>

#include <random>

#include "icesep/separator.hpp"
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

AbstractElement hull_of(const std::vector<State>& pts, DomainKind kind)
{
    AbstractElement d = singleton(pts[0], kind);
    for (std::size_t i = 1; i < pts.size(); ++i)
        d = join(d, singleton(pts[i], kind));
    return d;
}

} // namespace

TEST_CASE("interval separator of the cluster sample is the two drawn boxes")
{
    Sample s = testing::cluster_sample();
    Separator sep = construct_separator(s, DomainKind::interval, {});
    REQUIRE(sep.elems.size() == 2);

    std::set<std::set<LinearConstraint>> got;
    for (const auto& d : sep.elems)
        got.insert(constraint_set(d));
    std::set<std::set<LinearConstraint>> expected{
        {le({1, 0}, 3), le({-1, 0}, -1), le({0, 1}, 4), le({0, -1}, -1)},
        {le({1, 0}, 6), le({-1, 0}, -5), le({0, 1}, 4), le({0, -1}, -1)},
    };
    CHECK(got == expected);
    CHECK(is_separator(sep, s));
    CHECK(is_join_maximal(sep, s));
}

TEST_CASE("octagon separator's left element matches the drawn region")
{
    Sample s = testing::cluster_sample();
    Separator sep = construct_separator(s, DomainKind::octagon, {});
    REQUIRE(sep.elems.size() == 2);
    // Left element: same integer points as the quadrilateral (1,1)(1,4)(3,2)(3,1).
    AbstractElement expected_left =
        hull_of({{1, 1}, {1, 4}, {3, 2}, {3, 1}}, DomainKind::polytope);
    bool found = false;
    for (const auto& d : sep.elems)
    {
        bool same = true;
        for (Int x = -1; x <= 7 && same; ++x)
            for (Int y = -1; y <= 5 && same; ++y)
                same = member(State{x, y}, d) == member(State{x, y}, expected_left);
        found = found || same;
    }
    CHECK(found);
    CHECK(is_separator(sep, s));
    CHECK(is_join_maximal(sep, s));
}

TEST_CASE("polytope separator's left element is the implication-extended hull")
{
    Sample s = testing::cluster_sample();
    Separator sep = construct_separator(s, DomainKind::polytope, {});
    AbstractElement expected_left =
        hull_of({{1, 1}, {1, 4}, {2, 3}, {3, 1}}, DomainKind::polytope);
    bool found = false;
    for (const auto& d : sep.elems)
        found = found || same_element(d, expected_left);
    CHECK(found);
    CHECK(is_separator(sep, s));
    CHECK(is_join_maximal(sep, s));
}

TEST_CASE("seeded polytope separator collapses to the worked example's d3")
{
    TranSys sys = testing::fig5();
    Sample s;
    s.pos.insert(State{2, 0, 0});
    s.pos.insert(State{4, 1, 1});
    s.neg.insert(State{5, 1, 0});
    s.impl.emplace(State{0, 0, 1}, State{2, 1, 1});
    s.impl.emplace(State{2, 0, 1}, State{4, 1, 1});

    auto d1 = from_conjunction(sys.init, DomainKind::polytope, 3);
    REQUIRE(d1);
    std::vector<AbstractElement> seed{singleton(State{2, 0, 0}, DomainKind::polytope), *d1,
                                      singleton(State{4, 1, 1}, DomainKind::polytope)};
    Separator sep = construct_separator(s, DomainKind::polytope, seed);
    REQUIRE(sep.elems.size() == 1);
    auto eq = [](std::vector<Int> c, Int b) { return *make_eq(std::move(c), std::move(b)); };
    CHECK(constraint_set(sep.elems[0]) ==
          std::set<LinearConstraint>{eq({1, -2, 0}, 2), le({1, 0, 0}, 4), le({-1, 0, 0}, -2)});
}

TEST_CASE("degenerate separators")
{
    Sample s;
    s.pos.insert(State{3, 4});
    Separator sep = construct_separator(s, DomainKind::polytope, {});
    REQUIRE(sep.elems.size() == 1);
    CHECK(member(State{3, 4}, sep.elems[0]));
    CHECK(is_separator(sep, s));
    CHECK(is_join_maximal(sep, s)); // vacuously

    // A separator containing a negative is not a separator.
    Sample t = s;
    t.neg.insert(State{0, 0});
    Separator bad{{hull_of({{3, 4}, {0, 0}}, DomainKind::polytope)}};
    CHECK_FALSE(is_separator(bad, t));
}

TEST_CASE("seed elements must exclude the negatives")
{
    Sample s;
    s.pos.insert(State{0, 0});
    s.neg.insert(State{1, 1});
    std::vector<AbstractElement> seed{hull_of({{0, 0}, {2, 2}}, DomainKind::polytope)};
    CHECK_THROWS_AS(construct_separator(s, DomainKind::polytope, seed), StructuralError);
}

TEST_CASE("two different join-maximal separators of one sample")
{
    // Only the (4,3) and (4,4) negatives: both the quadrilateral+box pair and
    // the two-triangle pair are join-maximal.
    Sample s = testing::cluster_sample();
    s.neg = {State{4, 3}, State{4, 4}};

    Separator a{{hull_of({{1, 1}, {1, 4}, {2, 3}, {3, 1}}, DomainKind::polytope),
                 hull_of({{5, 1}, {5, 4}, {6, 1}, {6, 4}}, DomainKind::polytope)}};
    Separator b{{hull_of({{1, 1}, {1, 4}, {5, 1}}, DomainKind::polytope),
                 hull_of({{5, 4}, {6, 4}, {6, 1}}, DomainKind::polytope)}};
    CHECK(is_separator(a, s));
    CHECK(is_separator(b, s));
    CHECK(is_join_maximal(a, s));
    CHECK(is_join_maximal(b, s));
}

TEST_CASE("randomized separator properties per domain")
{
    std::mt19937_64 rng(211);
    for (DomainKind kind : {DomainKind::interval, DomainKind::octagon, DomainKind::polytope})
        for (int round = 0; round < 25; ++round)
        {
            std::size_t n = 2 + round % 3;
            Sample s = testing::random_sample(rng, n, 10, 8, 5);
            SeparatorStats stats;
            Separator sep = construct_separator(s, kind, {}, &stats);
            REQUIRE(is_separator(sep, s));
            REQUIRE(is_join_maximal(sep, s));
            // Work bound: quadratic in the points that can enter the separator.
            std::int64_t k =
                static_cast<std::int64_t>(s.pos.size() + s.impl.size()) + 1;
            REQUIRE(stats.join_candidates <= 4 * k * k + 4);
        }
}
