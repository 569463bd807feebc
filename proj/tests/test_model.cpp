#include <doctest.h>

#include "icesep/model.hpp"
#include "support/samples.hpp"

using namespace icesep;

TEST_CASE("linear constraint normalization")
{
    LinearConstraint c = make_le({Int(2), Int(4)}, Int(7));
    CHECK(c.coeffs == std::vector<Int>{1, 2});
    CHECK(c.bound == 3); // floor(7/2), exact over the integers

    auto eq = make_eq({Int(-2), Int(4)}, Int(-6));
    REQUIRE(eq);
    CHECK(eq->coeffs == std::vector<Int>{1, -2}); // first nonzero coefficient positive
    CHECK(eq->bound == 3);

    CHECK_FALSE(make_eq({Int(2), Int(4)}, Int(3))); // no integer solution
    CHECK_THROWS_AS(make_le({Int(0), Int(0)}, Int(1)), StructuralError);
}

TEST_CASE("formula evaluation on the running example")
{
    TranSys sys = testing::fig5();

    CHECK_FALSE(eval_formula(sys.good, State{5, 1, 0}));
    CHECK(eval_formula(sys.good, State{2, 0, 0}));
    CHECK(eval_formula(Formula::tru(), State{5, 1, 0}));

    CHECK(eval_trans(sys.trans, State{2, 0, 1}, State{4, 1, 1}));
    CHECK(eval_trans(sys.trans, State{2, 0, 0}, State{6, 0, 0}));
    CHECK_FALSE(eval_trans(sys.trans, State{2, 0, 0}, State{2, 0, 0}));

    CHECK_THROWS_AS(eval_formula(sys.good, State{1, 2}), StructuralError);
}

TEST_CASE("counterexample insertion closes the sample")
{
    Sample s;
    s.impl.emplace(State{3, 0, 1}, State{5, 1, 1});
    AddResult r = add_counterexample(s, NegativeCex{{5, 1, 1}});
    REQUIRE(std::holds_alternative<Sample>(r));
    Sample closed = std::get<Sample>(r);
    CHECK(closed.neg.count(State{3, 0, 1})); // negativity flows backward

    Sample t;
    t.pos.insert(State{2, 0, 1});
    AddResult r2 = add_counterexample(t, ImplicationCex{{2, 0, 1}, {4, 1, 1}});
    REQUIRE(std::holds_alternative<Sample>(r2));
    CHECK(std::get<Sample>(r2).pos.count(State{4, 1, 1})); // positivity flows forward

    AddResult r3 = add_counterexample(Sample{}, PositiveCex{{0, 0}});
    CHECK(std::get<Sample>(r3).pos == std::set<State>{State{0, 0}});
}

TEST_CASE("contradictory closure reports a witness")
{
    Sample s;
    s.pos.insert(State{1});
    s.impl.emplace(State{1}, State{2});
    AddResult r = add_counterexample(s, NegativeCex{{2}});
    REQUIRE(std::holds_alternative<Contradiction>(r));
    State w = std::get<Contradiction>(r).witness;
    CHECK((w == State{1} || w == State{2}));
}

TEST_CASE("closure is idempotent and monotone, and preserves the sample property")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round)
    {
        Sample s = testing::random_sample(rng, 2, 6, 6, 6, 4);
        CHECK(consistent(s));
        CHECK(closed_under_implications(s));

        State extra = testing::random_state(rng, 2, -4, 4);
        AddResult once = add_counterexample(s, PositiveCex{extra});
        if (!std::holds_alternative<Sample>(once))
            continue;
        const Sample& s1 = std::get<Sample>(once);
        CHECK(closed_under_implications(s1));
        // monotone
        for (const State& p : s.pos)
            CHECK(s1.pos.count(p));
        for (const State& n : s.neg)
            CHECK(s1.neg.count(n));
        // idempotent
        AddResult twice = add_counterexample(s1, PositiveCex{extra});
        REQUIRE(std::holds_alternative<Sample>(twice));
        CHECK(std::get<Sample>(twice) == s1);
    }
}
