#include "icesep/driver.hpp"

#include <cassert>
#include <chrono>

namespace icesep
{

std::string_view to_string(Outcome outcome)
{
    switch (outcome)
    {
    case Outcome::safe: return "SAFE";
    case Outcome::unsafe: return "UNSAFE";
    case Outcome::unknown: return "UNKNOWN";
    }
    return "?";
}

namespace
{

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Apply the counterexample plus what the teacher's knowledge makes certain:
// the source of an implication from an initial state is positive, a target
// outside Good is negative. Returns the contradiction witness if any.
std::optional<State> apply_counterexample(Sample& sample, const TranSys& sys,
                                          const Counterexample& cex)
{
    auto step = [&](const Counterexample& c) -> std::optional<State> {
        AddResult r = add_counterexample(std::move(sample), c);
        if (auto* contra = std::get_if<Contradiction>(&r))
            return contra->witness;
        sample = std::move(std::get<Sample>(r));
        return std::nullopt;
    };
    if (auto w = step(cex))
        return w;
    if (const auto* impl = std::get_if<ImplicationCex>(&cex))
    {
        if (eval_formula(sys.init, impl->from))
            if (auto w = step(Counterexample(PositiveCex{impl->from})))
                return w;
        if (!eval_formula(sys.good, impl->to))
            if (auto w = step(Counterexample(NegativeCex{impl->to})))
                return w;
    }
    return std::nullopt;
}

} // namespace

RunResult run_verification(const TranSys& sys, const RunConfig& cfg, Teacher& teacher,
                           Learner* injected)
{
    auto start = Clock::now();

    LearnerConfig lc;
    lc.domain = cfg.domain;
    lc.variant = cfg.variant;
    lc.mode = cfg.attrs;
    lc.penalty = cfg.penalty;
    lc.spec_atoms = cfg.spec_atoms;
    lc.template_bound = cfg.template_bound;

    std::optional<Learner> own;
    if (!injected)
    {
        own.emplace(sys, lc);
        own->set_trace(cfg.trace);
    }
    Learner& learner = injected ? *injected : *own;

    RunResult result;
    result.bounded_teacher = teacher.bounded();
    Sample sample;

    auto finish = [&](RunResult r) {
        r.stats.pool_size = learner.pool().size();
        r.stats.joins = learner.stats().join_candidates;
        r.stats.pops = learner.stats().pops;
        r.stats.elapsed_ms = elapsed_ms(start);
        return r;
    };

    for (int iter = 1; iter <= cfg.max_iterations; ++iter)
    {
        result.stats.iterations = iter;
        if (elapsed_ms(start) > cfg.budget_seconds * 1000.0)
        {
            result.reason = "wall-clock budget exhausted";
            return finish(std::move(result));
        }

        Formula candidate = Formula::tru();
        Verdict verdict;
        try
        {
            candidate = learner.learn(sample);
            verdict = teacher.check(sys, candidate);
        }
        catch (const TeacherFailure& e)
        {
            result.reason = std::string("teacher failure: ") + e.what();
            return finish(std::move(result));
        }

        if (verdict.valid())
        {
            // Belt and suspenders: confirm once more before reporting.
            Verdict again = teacher.check(sys, candidate);
            if (again.valid())
            {
                result.outcome = Outcome::safe;
                result.invariant = candidate;
                return finish(std::move(result));
            }
            verdict = std::move(again);
        }

        Sample before = sample;
        if (auto witness = apply_counterexample(sample, sys, *verdict.cex))
        {
            result.outcome = Outcome::unsafe;
            result.witness = std::move(witness);
            return finish(std::move(result));
        }
        // A genuine counterexample refutes a candidate consistent with the
        // old sample, so the sample must have grown.
        assert(sample != before);
        if (sample == before)
        {
            result.reason = "teacher produced no new information";
            return finish(std::move(result));
        }
    }
    result.reason = "iteration cap exhausted";
    return finish(std::move(result));
}

RunResult run_verification(const TranSys& sys, const RunConfig& cfg)
{
    if (cfg.smt_command)
    {
        SmtTeacher teacher(*cfg.smt_command, cfg.query_timeout_seconds);
        return run_verification(sys, cfg, teacher);
    }
    BuiltinTeacher teacher(cfg.builtin_bound);
    return run_verification(sys, cfg, teacher);
}

} // namespace icesep
