#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "icesep/learner.hpp"
#include "icesep/model.hpp"
#include "icesep/teacher.hpp"

namespace icesep
{

struct RunConfig
{
    DomainKind domain = DomainKind::polytope;
    SeparatorVariant variant = SeparatorVariant::incremental;
    AttributeMode attrs = AttributeMode::separator;
    bool spec_atoms = false;
    Int template_bound = 1;
    double penalty = 1.0;

    // Teacher selection: an SMT command takes precedence, otherwise the
    // bounded built-in oracle is used.
    std::optional<std::string> smt_command;
    Int builtin_bound = 16;
    double query_timeout_seconds = 10.0;

    int max_iterations = 500;
    double budget_seconds = 300.0;

    TraceFn trace;
};

enum class Outcome
{
    safe,
    unsafe,
    unknown,
};

std::string_view to_string(Outcome outcome);

struct RunStats
{
    int iterations = 0;
    std::size_t pool_size = 0;
    std::int64_t joins = 0; // candidate joins evaluated
    std::int64_t pops = 0;  // backtracking pops
    double elapsed_ms = 0.0;
};

struct RunResult
{
    Outcome outcome = Outcome::unknown;
    std::optional<Formula> invariant; // SAFE
    std::optional<State> witness;     // UNSAFE: a state forced both ways
    std::string reason;               // UNKNOWN
    bool bounded_teacher = false;     // SAFE is relative to the teacher's box
    RunStats stats;
};

// The ICE loop: learn a candidate, check the three inductive-invariant
// conditions, feed the counterexample back into the sample, repeat. A SAFE
// invariant is re-verified with a second full check before it is reported.
RunResult run_verification(const TranSys& sys, const RunConfig& cfg);

// Same loop with an injected teacher (scripted replays, tests).
RunResult run_verification(const TranSys& sys, const RunConfig& cfg, Teacher& teacher,
                           Learner* learner = nullptr);

} // namespace icesep
