#include "icesep/teacher.hpp"

#include <cstdint>
#include <limits>

#include "icesep/smt2.hpp"
#include "smt_session.hpp"

namespace icesep
{

bool genuine(const TranSys& sys, const Formula& candidate, const Counterexample& cex)
{
    if (const auto* p = std::get_if<PositiveCex>(&cex))
        return eval_formula(sys.init, p->state) && !eval_formula(candidate, p->state);
    if (const auto* n = std::get_if<NegativeCex>(&cex))
        return eval_formula(candidate, n->state) && !eval_formula(sys.good, n->state);
    const auto& i = std::get<ImplicationCex>(cex);
    return eval_formula(candidate, i.from) && eval_trans(sys.trans, i.from, i.to) &&
           !eval_formula(candidate, i.to);
}

// ---------------------------------------------------------------------------
// Bounded enumeration
// ---------------------------------------------------------------------------

namespace
{

// Machine-word mirror of a formula for the box enumeration; construction
// fails (returns false) when some coefficient could overflow, in which case
// the caller falls back to exact evaluation.
struct Compiled
{
    enum Kind
    {
        conj,
        disj,
        neg,
        atom
    };
    Kind kind = conj;
    std::vector<Compiled> args;
    std::vector<std::pair<std::size_t, std::int64_t>> terms;
    std::int64_t bound = 0;
    bool eq = false;

    bool eval(const std::vector<std::int64_t>& v) const
    {
        switch (kind)
        {
        case conj:
            for (const Compiled& g : args)
                if (!g.eval(v))
                    return false;
            return true;
        case disj:
            for (const Compiled& g : args)
                if (g.eval(v))
                    return true;
            return false;
        case neg:
            return !args.front().eval(v);
        case atom:
        {
            std::int64_t sum = 0;
            for (const auto& [i, a] : terms)
                sum += a * v[i];
            return eq ? sum == bound : sum <= bound;
        }
        }
        return false;
    }
};

constexpr std::int64_t kMagnitudeCap = std::int64_t(1) << 40;

bool compile(const Formula& f, const Int& box, Compiled& out)
{
    switch (f.kind())
    {
    case Formula::Kind::conj:
    case Formula::Kind::disj:
    case Formula::Kind::neg:
        out.kind = f.kind() == Formula::Kind::conj   ? Compiled::conj
                   : f.kind() == Formula::Kind::disj ? Compiled::disj
                                                     : Compiled::neg;
        out.args.resize(f.args().size());
        for (std::size_t i = 0; i < f.args().size(); ++i)
            if (!compile(f.args()[i], box, out.args[i]))
                return false;
        return true;
    case Formula::Kind::atom:
    {
        const LinearConstraint& c = f.constraint();
        out.kind = Compiled::atom;
        out.eq = c.rel == Rel::eq;
        if (abs(c.bound) > kMagnitudeCap)
            return false;
        out.bound = static_cast<std::int64_t>(c.bound);
        Int reach = abs(c.bound);
        for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        {
            if (c.coeffs[i] == 0)
                continue;
            if (abs(c.coeffs[i]) > kMagnitudeCap)
                return false;
            reach += abs(c.coeffs[i]) * box;
            out.terms.emplace_back(i, static_cast<std::int64_t>(c.coeffs[i]));
        }
        return reach <= (Int(1) << 62);
    }
    }
    return false;
}

State to_state(const std::vector<std::int64_t>& v, std::size_t n)
{
    State s(n);
    for (std::size_t i = 0; i < n; ++i)
        s[i] = v[i];
    return s;
}

// Lexicographic odometer over [-b, b]^n.
bool advance(std::vector<std::int64_t>& v, std::int64_t b)
{
    for (std::size_t i = v.size(); i-- > 0;)
    {
        if (v[i] < b)
        {
            ++v[i];
            for (std::size_t j = i + 1; j < v.size(); ++j)
                v[j] = -b;
            return true;
        }
    }
    return false;
}

Verdict builtin_check_fast(const TranSys& sys, const Formula& candidate, std::int64_t b)
{
    const std::size_t n = sys.dim();
    const Int box(b);
    Compiled init, good, trans, cand;
    if (!compile(sys.init, box, init) || !compile(sys.good, box, good) ||
        !compile(sys.trans, box, trans) || !compile(candidate, box, cand))
        throw TeacherFailure("unreachable"); // guarded by the caller

    std::vector<std::int64_t> v(n, -b);
    std::vector<std::vector<std::int64_t>> sat_j, unsat_j;
    // One pass decides condition (1), condition (2), and the J partition.
    std::optional<State> positive, negative;
    do
    {
        bool in_j = cand.eval(v);
        if (!positive && !in_j && init.eval(v))
            positive = to_state(v, n);
        if (!negative && in_j && !good.eval(v))
            negative = to_state(v, n);
        (in_j ? sat_j : unsat_j).push_back(v);
    } while (advance(v, b));
    if (positive)
        return {PositiveCex{*positive}};
    if (negative)
        return {NegativeCex{*negative}};

    std::vector<std::int64_t> pair(2 * n);
    for (const auto& s : sat_j)
    {
        std::copy(s.begin(), s.end(), pair.begin());
        for (const auto& t : unsat_j)
        {
            std::copy(t.begin(), t.end(), pair.begin() + static_cast<std::ptrdiff_t>(n));
            if (trans.eval(pair))
                return {ImplicationCex{to_state(s, n), to_state(t, n)}};
        }
    }
    return {};
}

Verdict builtin_check_exact(const TranSys& sys, const Formula& candidate, const Int& b)
{
    const std::size_t n = sys.dim();
    std::vector<State> sat_j, unsat_j;
    State s(n, -b);
    auto next = [&](State& v) {
        for (std::size_t i = v.size(); i-- > 0;)
        {
            if (v[i] < b)
            {
                ++v[i];
                for (std::size_t j = i + 1; j < v.size(); ++j)
                    v[j] = -b;
                return true;
            }
        }
        return false;
    };
    std::optional<State> positive, negative;
    do
    {
        bool in_j = eval_formula(candidate, s);
        if (!positive && !in_j && eval_formula(sys.init, s))
            positive = s;
        if (!negative && in_j && !eval_formula(sys.good, s))
            negative = s;
        (in_j ? sat_j : unsat_j).push_back(s);
    } while (next(s));
    if (positive)
        return {PositiveCex{*positive}};
    if (negative)
        return {NegativeCex{*negative}};
    for (const State& from : sat_j)
        for (const State& to : unsat_j)
            if (eval_trans(sys.trans, from, to))
                return {ImplicationCex{from, to}};
    return {};
}

} // namespace

Verdict builtin_check(const TranSys& sys, const Formula& candidate, const Int& bound)
{
    if (bound < 1)
        throw StructuralError("builtin teacher bound must be >= 1");
    Compiled probe;
    bool fits = bound <= (Int(1) << 30) && compile(sys.init, bound, probe) &&
                compile(sys.good, bound, probe) && compile(sys.trans, bound, probe) &&
                compile(candidate, bound, probe);
    if (fits)
        return builtin_check_fast(sys, candidate, static_cast<std::int64_t>(bound));
    return builtin_check_exact(sys, candidate, bound);
}

Verdict ScriptedTeacher::check(const TranSys& sys, const Formula& candidate)
{
    if (next_ < script_.size())
    {
        const Counterexample& cex = script_[next_];
        if (!genuine(sys, candidate, cex))
            throw ScriptMismatch("scripted counterexample is not genuine for the candidate");
        ++next_;
        return {cex};
    }
    return builtin_check(sys, candidate, bound_);
}

// ---------------------------------------------------------------------------
// SMT teacher
// ---------------------------------------------------------------------------

namespace
{

// Rewrite a formula over V into one over V and V', placing the atom
// coefficients at the given column offset.
Formula widen(const Formula& f, std::size_t n, std::size_t offset)
{
    switch (f.kind())
    {
    case Formula::Kind::conj:
    case Formula::Kind::disj:
    case Formula::Kind::neg:
    {
        std::vector<Formula> args;
        args.reserve(f.args().size());
        for (const Formula& g : f.args())
            args.push_back(widen(g, n, offset));
        if (f.kind() == Formula::Kind::conj)
            return Formula::conj(std::move(args));
        if (f.kind() == Formula::Kind::disj)
            return Formula::disj(std::move(args));
        return Formula::neg(std::move(args.front()));
    }
    case Formula::Kind::atom:
    {
        const LinearConstraint& c = f.constraint();
        LinearConstraint wide = c;
        wide.coeffs.assign(2 * n, Int(0));
        for (std::size_t i = 0; i < c.coeffs.size(); ++i)
            wide.coeffs[offset + i] = c.coeffs[i];
        return Formula::atom(std::move(wide));
    }
    }
    throw StructuralError("unreachable formula kind");
}

} // namespace

std::vector<std::string> inductive_queries(const TranSys& sys, const Formula& candidate)
{
    const std::size_t n = sys.dim();
    std::vector<std::string> names = with_primed_names(sys.vars);

    std::vector<Formula> q1;
    q1.push_back(sys.init);
    q1.push_back(Formula::neg(candidate));

    std::vector<Formula> q2;
    q2.push_back(candidate);
    q2.push_back(Formula::neg(sys.good));

    std::vector<Formula> q3;
    q3.push_back(widen(candidate, n, 0));
    q3.push_back(sys.trans);
    q3.push_back(Formula::neg(widen(candidate, n, n)));

    return {
        print_smt2(Formula::conj(std::move(q1)), names),
        print_smt2(Formula::conj(std::move(q2)), names),
        print_smt2(Formula::conj(std::move(q3)), names),
    };
}

SmtTeacher::SmtTeacher(std::string command, double query_timeout_seconds)
    : command_(std::move(command)), query_timeout_(query_timeout_seconds)
{
}

SmtTeacher::~SmtTeacher() = default;

Verdict SmtTeacher::check(const TranSys& sys, const Formula& candidate)
{
    if (!session_)
    {
        session_ = std::make_unique<SolverSession>(command_, query_timeout_);
        declared_ = false;
    }
    if (!declared_)
    {
        session_->command("(set-logic LIA)");
        for (const std::string& name : with_primed_names(sys.vars))
            session_->command("(declare-const " + name + " Int)");
        declared_ = true;
    }

    std::vector<std::string> queries = inductive_queries(sys, candidate);
    std::vector<std::string> names = with_primed_names(sys.vars);
    for (std::size_t q = 0; q < queries.size(); ++q)
    {
        session_->command("(push 1)");
        session_->command("(assert " + queries[q] + ")");
        std::string status = session_->check_sat();
        if (status == "unsat")
        {
            session_->command("(pop 1)");
            continue;
        }
        if (status != "sat")
        {
            session_.reset();
            throw TeacherFailure("solver returned '" + status + "'");
        }
        std::string model_text = session_->get_model();
        session_->command("(pop 1)");
        State full = parse_model(model_text, names);
        State plain(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(sys.dim()));
        State primed(full.begin() + static_cast<std::ptrdiff_t>(sys.dim()), full.end());
        Counterexample cex = q == 0   ? Counterexample(PositiveCex{plain})
                             : q == 1 ? Counterexample(NegativeCex{plain})
                                      : Counterexample(ImplicationCex{plain, primed});
        // Never trust the solver's model blindly.
        if (!genuine(sys, candidate, cex))
            throw TeacherFailure("solver model failed the genuineness re-check");
        return {cex};
    }
    return {};
}

} // namespace icesep
