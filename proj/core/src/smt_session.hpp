#pragma once

// Internal subprocess plumbing for the SMT teacher. Not installed.

#include <string>
#include <sys/types.h>

namespace icesep
{

// One solver process speaking SMT-LIB2 over stdin/stdout. Each query runs
// under a fresh push/pop scope managed by the caller; reads observe a
// per-query wall-clock timeout.
class SolverSession
{
public:
    SolverSession(const std::string& command, double timeout_seconds);
    ~SolverSession();

    SolverSession(const SolverSession&) = delete;
    SolverSession& operator=(const SolverSession&) = delete;

    // Send one command, no response expected.
    void command(const std::string& text);

    // (check-sat) and the status token.
    std::string check_sat();

    // (get-model) and the raw parenthesized response.
    std::string get_model();

private:
    void write_line(const std::string& text);
    // Blocks until more output or the deadline; throws TeacherFailure.
    void fill(double deadline);
    std::string read_token();
    std::string read_balanced();
    static double now();

    pid_t pid_ = -1;
    int to_solver_ = -1;
    int from_solver_ = -1;
    double timeout_seconds_;
    std::string buffer_;
};

} // namespace icesep
