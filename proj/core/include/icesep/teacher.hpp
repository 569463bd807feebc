#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "icesep/model.hpp"

namespace icesep
{

// Valid, or the first counterexample found.
struct Verdict
{
    std::optional<Counterexample> cex;

    bool valid() const { return !cex.has_value(); }
};

// Solver crashes, malformed models, timeouts: distinct from any Verdict.
struct TeacherFailure : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// A scripted counterexample that is not genuine for the current candidate.
struct ScriptMismatch : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Does the counterexample actually witness a violated condition?
//   Positive(s):        s |= Init and s |/= J
//   Negative(s):        s |= J and s |/= Good
//   Implication(s, s'): s |= J, (s, s') |= T, s' |/= J
bool genuine(const TranSys& sys, const Formula& candidate, const Counterexample& cex);

class Teacher
{
public:
    virtual ~Teacher() = default;

    virtual Verdict check(const TranSys& sys, const Formula& candidate) = 0;

    // True when Valid only means "no witness within a finite box".
    virtual bool bounded() const { return false; }
};

// Check conditions (1) Init => J, (2) J => Good, (3) J /\ T => J' by direct
// evaluation over the box [-bound, bound]^n, returning the lexicographically
// smallest witness (pairs ordered by source then target).
Verdict builtin_check(const TranSys& sys, const Formula& candidate, const Int& bound);

class BuiltinTeacher final : public Teacher
{
public:
    explicit BuiltinTeacher(Int bound) : bound_(std::move(bound)) {}
    Verdict check(const TranSys& sys, const Formula& candidate) override
    {
        return builtin_check(sys, candidate, bound_);
    }
    bool bounded() const override { return true; }

private:
    Int bound_;
};

// Replays a fixed counterexample sequence: each call hands out the next
// scripted counterexample after re-checking it is genuine for the candidate
// (throwing ScriptMismatch otherwise); once the script is exhausted, falls
// back to builtin_check.
class ScriptedTeacher final : public Teacher
{
public:
    ScriptedTeacher(std::vector<Counterexample> script, Int fallback_bound)
        : script_(std::move(script)), bound_(std::move(fallback_bound))
    {
    }
    Verdict check(const TranSys& sys, const Formula& candidate) override;
    bool bounded() const override { return true; }

private:
    std::vector<Counterexample> script_;
    std::size_t next_ = 0;
    Int bound_;
};

class SolverSession;

// Asks an external SMT-LIB2 solver process; every model is re-verified
// in-process before it is trusted.
class SmtTeacher final : public Teacher
{
public:
    explicit SmtTeacher(std::string command, double query_timeout_seconds = 10.0);
    ~SmtTeacher() override;
    Verdict check(const TranSys& sys, const Formula& candidate) override;

private:
    std::unique_ptr<SolverSession> session_;
    std::string command_;
    double query_timeout_;
    bool declared_ = false;
};

// The three SMT queries issued by SmtTeacher, in order; exposed so the
// query construction can be tested without a live solver.
std::vector<std::string> inductive_queries(const TranSys& sys, const Formula& candidate);

} // namespace icesep
