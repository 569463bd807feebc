#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "icesep/numbers.hpp"

namespace icesep
{

// Thrown on dimension mismatches and other violated structural preconditions.
struct StructuralError : std::logic_error
{
    using std::logic_error::logic_error;
};

// A program state: one integer per declared variable, in declaration order.
using State = std::vector<Int>;

enum class Rel
{
    le, // sum(a_i * x_i) <= b
    eq, // sum(a_i * x_i) == b
};

// A normalized linear constraint over the variables (by index).
//
// Normal form: coefficients are divided by their gcd (bounds of <= constraints
// are floored, which is exact over the integers); the first nonzero
// coefficient of an equality is positive; coefficients are never all zero.
struct LinearConstraint
{
    std::vector<Int> coeffs;
    Int bound;
    Rel rel = Rel::le;

    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
    friend bool operator<(const LinearConstraint& a, const LinearConstraint& b)
    {
        if (a.rel != b.rel)
            return a.rel < b.rel;
        if (a.coeffs != b.coeffs)
            return a.coeffs < b.coeffs;
        return a.bound < b.bound;
    }
};

// sum(coeffs . x) <= bound, normalized. Throws StructuralError on all-zero coeffs.
LinearConstraint make_le(std::vector<Int> coeffs, Int bound);

// sum(coeffs . x) == bound, normalized. Returns nullopt when the equality has
// no integer solution (gcd of the coefficients does not divide the bound).
std::optional<LinearConstraint> make_eq(std::vector<Int> coeffs, Int bound);

// Evaluate on a valuation of the same width.
bool satisfies(const LinearConstraint& c, const State& valuation);

// Quantifier-free formulas over linear atoms. `conj` with no arguments is
// true, `disj` with no arguments is false. Atoms inside a transition relation
// range over V and V' (coefficient width 2n, primed variables last).
class Formula
{
public:
    enum class Kind
    {
        conj,
        disj,
        neg,
        atom,
    };

    static Formula tru() { return Formula(Kind::conj, {}, std::nullopt); }
    static Formula fls() { return Formula(Kind::disj, {}, std::nullopt); }
    static Formula conj(std::vector<Formula> args) { return Formula(Kind::conj, std::move(args), std::nullopt); }
    static Formula disj(std::vector<Formula> args) { return Formula(Kind::disj, std::move(args), std::nullopt); }
    static Formula neg(Formula f)
    {
        std::vector<Formula> a;
        a.push_back(std::move(f));
        return Formula(Kind::neg, std::move(a), std::nullopt);
    }
    static Formula atom(LinearConstraint c) { return Formula(Kind::atom, {}, std::move(c)); }

    Kind kind() const { return kind_; }
    const std::vector<Formula>& args() const { return args_; }
    const LinearConstraint& constraint() const
    {
        if (!atom_)
            throw StructuralError("formula node is not an atom");
        return *atom_;
    }

    bool is_true() const { return kind_ == Kind::conj && args_.empty(); }
    bool is_false() const { return kind_ == Kind::disj && args_.empty(); }

private:
    Formula(Kind k, std::vector<Formula> args, std::optional<LinearConstraint> atom)
        : kind_(k), args_(std::move(args)), atom_(std::move(atom))
    {
    }

    Kind kind_;
    std::vector<Formula> args_;
    std::optional<LinearConstraint> atom_;
};

// A transition system (Init, T, Good) over named integer variables.
// Init and Good range over V, the transition relation over V and V'.
struct TranSys
{
    std::vector<std::string> vars;
    Formula init = Formula::tru();
    Formula trans = Formula::tru();
    Formula good = Formula::tru();

    std::size_t dim() const { return vars.size(); }
};

// f over V only; dimensions must match.
bool eval_formula(const Formula& f, const State& s);

// t over V and V'; true iff (s, s2) is a transition.
bool eval_trans(const Formula& t, const State& s, const State& s2);

// The ICE sample: positive states, negative states, and implications.
struct Sample
{
    std::set<State> pos;
    std::set<State> neg;
    std::set<std::pair<State, State>> impl;

    friend bool operator==(const Sample&, const Sample&) = default;
};

struct PositiveCex
{
    State state;
};
struct NegativeCex
{
    State state;
};
struct ImplicationCex
{
    State from;
    State to;
};
using Counterexample = std::variant<PositiveCex, NegativeCex, ImplicationCex>;

// Raised sample inconsistency: a state forced both positive and negative.
struct Contradiction
{
    State witness;
};

using AddResult = std::variant<Sample, Contradiction>;

// Insert the counterexample and recompute the implication closure (positives
// propagate forward, negatives backward) to a fixpoint. Returns Contradiction
// with one witness iff pos and neg intersect afterwards.
AddResult add_counterexample(Sample sample, const Counterexample& cex);

// pos and neg disjoint.
bool consistent(const Sample& sample);

// Closure property: sources of implications with positive targets need not be
// positive, but positive sources force positive targets and negative targets
// force negative sources.
bool closed_under_implications(const Sample& sample);

// All states mentioned by the sample: pos, neg, and implication end-points,
// in lexicographic order without duplicates.
std::vector<State> sample_points(const Sample& sample);

std::string to_string(const State& s);

} // namespace icesep
