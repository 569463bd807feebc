#include "icesep/model.hpp"

#include <algorithm>
#include <sstream>

namespace icesep
{

namespace
{

Int coeff_gcd(const std::vector<Int>& coeffs)
{
    Int g = 0;
    for (const Int& a : coeffs)
        g = gcd(g, a);
    return g;
}

} // namespace

LinearConstraint make_le(std::vector<Int> coeffs, Int bound)
{
    Int g = coeff_gcd(coeffs);
    if (g == 0)
        throw StructuralError("linear constraint with all-zero coefficients");
    if (g > 1)
    {
        for (Int& a : coeffs)
            a /= g;
        bound = floor_div(bound, g); // exact tightening over the integers
    }
    return LinearConstraint{std::move(coeffs), std::move(bound), Rel::le};
}

std::optional<LinearConstraint> make_eq(std::vector<Int> coeffs, Int bound)
{
    Int g = coeff_gcd(coeffs);
    if (g == 0)
        throw StructuralError("linear constraint with all-zero coefficients");
    if (g > 1)
    {
        if (bound % g != 0)
            return std::nullopt; // no integer solution
        for (Int& a : coeffs)
            a /= g;
        bound /= g;
    }
    auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const Int& a) { return a != 0; });
    if (*first < 0)
    {
        for (Int& a : coeffs)
            a = -a;
        bound = -bound;
    }
    return LinearConstraint{std::move(coeffs), std::move(bound), Rel::eq};
}

bool satisfies(const LinearConstraint& c, const State& valuation)
{
    if (c.coeffs.size() != valuation.size())
        throw StructuralError("constraint/valuation dimension mismatch");
    Int sum = 0;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        if (c.coeffs[i] != 0)
            sum += c.coeffs[i] * valuation[i];
    return c.rel == Rel::le ? sum <= c.bound : sum == c.bound;
}

namespace
{

bool eval_on(const Formula& f, const State& valuation)
{
    switch (f.kind())
    {
    case Formula::Kind::conj:
        for (const Formula& g : f.args())
            if (!eval_on(g, valuation))
                return false;
        return true;
    case Formula::Kind::disj:
        for (const Formula& g : f.args())
            if (eval_on(g, valuation))
                return true;
        return false;
    case Formula::Kind::neg:
        return !eval_on(f.args().front(), valuation);
    case Formula::Kind::atom:
        return satisfies(f.constraint(), valuation);
    }
    throw StructuralError("unreachable formula kind");
}

} // namespace

bool eval_formula(const Formula& f, const State& s)
{
    return eval_on(f, s);
}

bool eval_trans(const Formula& t, const State& s, const State& s2)
{
    if (s.size() != s2.size())
        throw StructuralError("transition end-points have different dimension");
    State both;
    both.reserve(s.size() * 2);
    both.insert(both.end(), s.begin(), s.end());
    both.insert(both.end(), s2.begin(), s2.end());
    return eval_on(t, both);
}

AddResult add_counterexample(Sample sample, const Counterexample& cex)
{
    if (const auto* p = std::get_if<PositiveCex>(&cex))
        sample.pos.insert(p->state);
    else if (const auto* n = std::get_if<NegativeCex>(&cex))
        sample.neg.insert(n->state);
    else
    {
        const auto& i = std::get<ImplicationCex>(cex);
        if (i.from.size() != i.to.size())
            throw StructuralError("implication end-points have different dimension");
        sample.impl.emplace(i.from, i.to);
    }

    bool changed = true;
    while (changed)
    {
        changed = false;
        for (const auto& [from, to] : sample.impl)
        {
            if (sample.pos.count(from) && sample.pos.insert(to).second)
                changed = true;
            if (sample.neg.count(to) && sample.neg.insert(from).second)
                changed = true;
        }
    }

    std::vector<State> both;
    std::set_intersection(sample.pos.begin(), sample.pos.end(), sample.neg.begin(), sample.neg.end(),
                          std::back_inserter(both));
    if (!both.empty())
        return Contradiction{both.front()};
    return sample;
}

bool consistent(const Sample& sample)
{
    std::vector<State> both;
    std::set_intersection(sample.pos.begin(), sample.pos.end(), sample.neg.begin(), sample.neg.end(),
                          std::back_inserter(both));
    return both.empty();
}

bool closed_under_implications(const Sample& sample)
{
    for (const auto& [from, to] : sample.impl)
    {
        if (sample.pos.count(from) && !sample.pos.count(to))
            return false;
        if (sample.neg.count(to) && !sample.neg.count(from))
            return false;
    }
    return true;
}

std::vector<State> sample_points(const Sample& sample)
{
    std::set<State> all(sample.pos.begin(), sample.pos.end());
    all.insert(sample.neg.begin(), sample.neg.end());
    for (const auto& [from, to] : sample.impl)
    {
        all.insert(from);
        all.insert(to);
    }
    return {all.begin(), all.end()};
}

std::string to_string(const State& s)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        if (i)
            out << ',';
        out << s[i];
    }
    out << ')';
    return out.str();
}

} // namespace icesep
