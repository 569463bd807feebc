#include <doctest.h>

#include <random>

#include "icesep/parser.hpp"
#include "support/samples.hpp"

using namespace icesep;

namespace
{

Diagnostic diag_of(const std::string& text)
{
    try
    {
        parse_system(text);
    }
    catch (const ParseException& e)
    {
        return e.diagnostic;
    }
    FAIL("expected a diagnostic for: ", text);
    return {};
}

} // namespace

TEST_CASE("reference encoding parses with declaration order fixed")
{
    TranSys sys = testing::fig5();
    CHECK(sys.vars == std::vector<std::string>{"j", "k", "t"});
    CHECK(eval_formula(sys.init, State{2, 0, 7}));
    CHECK_FALSE(eval_formula(sys.init, State{2, 1, 0}));
}

TEST_CASE("one-variable identity system")
{
    TranSys sys = parse_system("(declare-var x Int)(init (= x 0))(trans (= x' x))(good (>= x 0))");
    CHECK(sys.dim() == 1);
    CHECK(eval_trans(sys.trans, State{3}, State{3}));
    CHECK_FALSE(eval_trans(sys.trans, State{3}, State{4}));
}

TEST_CASE("located diagnostics for each error class")
{
    Diagnostic d = diag_of("(declare-var x Int)(init (= y 0))(trans (= x' x))(good true)");
    CHECK(d.kind == DiagKind::unbound_variable);
    CHECK(d.span.begin > 0);
    CHECK(d.span.begin < d.span.end);

    d = diag_of("(declare-var x Int)(init (= x' 0))(trans true)(good true)");
    CHECK(d.kind == DiagKind::primed_outside_trans);

    d = diag_of("(declare-var x Int)(declare-var y Int)(init (= (* x y) 0))(trans true)(good true)");
    CHECK(d.kind == DiagKind::nonlinear_term);

    d = diag_of("(declare-var x Int)(init (= x 0))(trans (= x' x))");
    CHECK(d.kind == DiagKind::missing_section);

    d = diag_of("(init (= x 0))(trans true)(good true)");
    CHECK(d.kind == DiagKind::missing_section);

    d = diag_of("(declare-var x Int)(init (= x 0)(trans true)(good true)");
    CHECK((d.kind == DiagKind::syntax || d.kind == DiagKind::lexical));
}

TEST_CASE("strict inequalities normalize to <= over the integers")
{
    TranSys sys =
        parse_system("(declare-var x Int)(init (< x 3))(trans (= x' x))(good (> x -2))");
    CHECK(eval_formula(sys.init, State{2}));
    CHECK_FALSE(eval_formula(sys.init, State{3}));
    CHECK(eval_formula(sys.good, State{-1}));
    CHECK_FALSE(eval_formula(sys.good, State{-2}));
}

TEST_CASE("implication and constant truth forms")
{
    TranSys sys = parse_system(
        "(declare-var x Int)(init (=> (= x 0) (= x 0)))(trans (= x' x))(good (= 1 1))");
    CHECK(eval_formula(sys.init, State{5}));
    CHECK(eval_formula(sys.good, State{5}));
}

TEST_CASE("parser is total on mutated inputs")
{
    std::string base = testing::fig5_text();
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pos(0, base.size() - 1);
    std::uniform_int_distribution<int> mode(0, 2);
    const char garbage[] = "()vx'09 ;\xc3\xa9"; // includes a multi-byte UTF-8 char
    std::uniform_int_distribution<std::size_t> pick(0, sizeof(garbage) - 2);
    for (int round = 0; round < 500; ++round)
    {
        std::string text = base;
        int m = mode(rng);
        std::size_t at = pos(rng);
        if (m == 0)
            text.erase(at, 1);
        else if (m == 1)
            text.insert(at, 1, garbage[pick(rng)]);
        else
            text[at] = garbage[pick(rng)];
        try
        {
            parse_system(text); // many mutations still parse; that is fine
        }
        catch (const ParseException& e)
        {
            CHECK(e.diagnostic.span.begin <= e.diagnostic.span.end);
            CHECK(e.diagnostic.span.end <= text.size() + 1);
        }
    }
}
