#include "smt_session.hpp"

#include <cctype>
#include <cerrno>
#include <csignal>
#include <cstring>
#include <vector>

#include <poll.h>
#include <sys/wait.h>
#include <time.h>
#include <unistd.h>

#include "icesep/teacher.hpp"

namespace icesep
{

namespace
{

// Whitespace tokenization only; solver commands with quoting needs are not
// supported.
std::vector<std::string> split_command(const std::string& command)
{
    std::vector<std::string> argv;
    std::string current;
    for (char c : command)
    {
        if (std::isspace(static_cast<unsigned char>(c)))
        {
            if (!current.empty())
                argv.push_back(std::move(current));
            current.clear();
        }
        else
            current += c;
    }
    if (!current.empty())
        argv.push_back(std::move(current));
    return argv;
}

} // namespace

double SolverSession::now()
{
    timespec ts{};
    clock_gettime(CLOCK_MONOTONIC, &ts);
    return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

SolverSession::SolverSession(const std::string& command, double timeout_seconds)
    : timeout_seconds_(timeout_seconds)
{
    std::vector<std::string> argv = split_command(command);
    if (argv.empty())
        throw TeacherFailure("empty solver command");

    int to_pipe[2], from_pipe[2];
    if (pipe(to_pipe) != 0 || pipe(from_pipe) != 0)
        throw TeacherFailure("pipe() failed");

    pid_ = fork();
    if (pid_ < 0)
        throw TeacherFailure("fork() failed");
    if (pid_ == 0)
    {
        dup2(to_pipe[0], STDIN_FILENO);
        dup2(from_pipe[1], STDOUT_FILENO);
        close(to_pipe[0]);
        close(to_pipe[1]);
        close(from_pipe[0]);
        close(from_pipe[1]);
        std::vector<char*> raw;
        raw.reserve(argv.size() + 1);
        for (std::string& a : argv)
            raw.push_back(a.data());
        raw.push_back(nullptr);
        execvp(raw[0], raw.data());
        _exit(127);
    }
    close(to_pipe[0]);
    close(from_pipe[1]);
    to_solver_ = to_pipe[1];
    from_solver_ = from_pipe[0];
}

SolverSession::~SolverSession()
{
    if (to_solver_ >= 0)
    {
        // Polite shutdown; most solvers exit on (exit) or EOF.
        (void)write(to_solver_, "(exit)\n", 7);
        close(to_solver_);
    }
    if (from_solver_ >= 0)
        close(from_solver_);
    if (pid_ > 0)
    {
        int status = 0;
        for (int i = 0; i < 20 && waitpid(pid_, &status, WNOHANG) == 0; ++i)
        {
            timespec ts{0, 50 * 1000 * 1000};
            nanosleep(&ts, nullptr);
        }
        if (waitpid(pid_, &status, WNOHANG) == 0)
        {
            kill(pid_, SIGKILL);
            waitpid(pid_, &status, 0);
        }
    }
}

void SolverSession::write_line(const std::string& text)
{
    std::string line = text + "\n";
    std::size_t written = 0;
    while (written < line.size())
    {
        ssize_t n = write(to_solver_, line.data() + written, line.size() - written);
        if (n < 0)
        {
            if (errno == EINTR)
                continue;
            throw TeacherFailure("solver pipe closed while writing");
        }
        written += static_cast<std::size_t>(n);
    }
}

void SolverSession::command(const std::string& text)
{
    write_line(text);
}

void SolverSession::fill(double deadline)
{
    double remaining = deadline - now();
    if (remaining <= 0)
        throw TeacherFailure("solver query timed out");
    pollfd pfd{from_solver_, POLLIN, 0};
    int rc = poll(&pfd, 1, static_cast<int>(remaining * 1000) + 1);
    if (rc <= 0)
        throw TeacherFailure("solver query timed out");
    char chunk[4096];
    ssize_t n = read(from_solver_, chunk, sizeof chunk);
    if (n <= 0)
        throw TeacherFailure("solver terminated unexpectedly");
    buffer_.append(chunk, static_cast<std::size_t>(n));
}

std::string SolverSession::read_token()
{
    double deadline = now() + timeout_seconds_;
    std::size_t begin = 0;
    while (true)
    {
        while (begin < buffer_.size() && std::isspace(static_cast<unsigned char>(buffer_[begin])))
            ++begin;
        std::size_t end = begin;
        while (end < buffer_.size() && !std::isspace(static_cast<unsigned char>(buffer_[end])))
            ++end;
        if (begin < buffer_.size() && end < buffer_.size())
        {
            std::string token = buffer_.substr(begin, end - begin);
            buffer_.erase(0, end);
            return token;
        }
        fill(deadline);
    }
}

std::string SolverSession::read_balanced()
{
    double deadline = now() + timeout_seconds_;
    while (true)
    {
        int depth = 0;
        bool seen = false;
        for (std::size_t i = 0; i < buffer_.size(); ++i)
        {
            if (buffer_[i] == '(')
            {
                ++depth;
                seen = true;
            }
            else if (buffer_[i] == ')')
                --depth;
            if (seen && depth == 0)
            {
                std::string text = buffer_.substr(0, i + 1);
                buffer_.erase(0, i + 1);
                return text;
            }
        }
        fill(deadline);
    }
}

std::string SolverSession::check_sat()
{
    write_line("(check-sat)");
    return read_token();
}

std::string SolverSession::get_model()
{
    write_line("(get-model)");
    return read_balanced();
}

} // namespace icesep
