#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "icesep/driver.hpp"
#include "icesep/parser.hpp"
#include "icesep/smt2.hpp"

namespace fs = std::filesystem;
using namespace icesep;

namespace
{

struct Options
{
    std::string domain = "poly";
    std::string separator = "incremental";
    std::string teacher = "builtin:16";
    std::string attrs = "separator";
    int max_iters = 500;
    double timeout_secs = 300.0;
    double penalty = 1.0;
    bool trace = false;
};

void add_common_flags(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--domain", opt.domain, "Abstract domain: int, oct or poly")
        ->check(CLI::IsMember({"int", "oct", "poly"}));
    cmd->add_option("--separator", opt.separator, "Separator variant: basic, incremental or refined")
        ->check(CLI::IsMember({"basic", "incremental", "refined"}));
    cmd->add_option("--teacher", opt.teacher, "Teacher: builtin:<bound> or smt:<command>");
    cmd->add_option("--attrs", opt.attrs,
                    "Attribute source: separator, separator+spec or octagon-templates:<c>");
    cmd->add_option("--max-iters", opt.max_iters, "Iteration cap")->check(CLI::PositiveNumber);
    cmd->add_option("--timeout-secs", opt.timeout_secs, "Wall-clock budget per run in seconds")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--penalty", opt.penalty, "Implication-cut penalty weight");
    cmd->add_flag("--trace", opt.trace, "Log join/pop/expand events to stderr");
}

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

RunConfig to_config(const Options& opt)
{
    RunConfig cfg;
    cfg.domain = *domain_from_string(opt.domain);
    if (opt.separator == "basic")
        cfg.variant = SeparatorVariant::basic;
    else if (opt.separator == "refined")
        cfg.variant = SeparatorVariant::refined;
    else
        cfg.variant = SeparatorVariant::incremental;

    if (opt.teacher.rfind("builtin:", 0) == 0)
    {
        try
        {
            cfg.builtin_bound = Int(opt.teacher.substr(8));
        }
        catch (const std::exception&)
        {
            throw UsageError("bad --teacher bound: " + opt.teacher);
        }
        if (cfg.builtin_bound < 1)
            throw UsageError("--teacher builtin bound must be >= 1");
    }
    else if (opt.teacher.rfind("smt:", 0) == 0)
        cfg.smt_command = opt.teacher.substr(4);
    else
        throw UsageError("bad --teacher: " + opt.teacher);

    if (opt.attrs == "separator")
        cfg.attrs = AttributeMode::separator;
    else if (opt.attrs == "separator+spec")
    {
        cfg.attrs = AttributeMode::separator;
        cfg.spec_atoms = true;
    }
    else if (opt.attrs.rfind("octagon-templates:", 0) == 0)
    {
        cfg.attrs = AttributeMode::octagon_templates;
        try
        {
            cfg.template_bound = Int(opt.attrs.substr(18));
        }
        catch (const std::exception&)
        {
            throw UsageError("bad --attrs bound: " + opt.attrs);
        }
    }
    else
        throw UsageError("bad --attrs: " + opt.attrs);

    cfg.max_iterations = opt.max_iters;
    cfg.budget_seconds = opt.timeout_secs;
    cfg.penalty = opt.penalty;
    if (opt.trace)
    {
        auto step = std::make_shared<std::int64_t>(0);
        cfg.trace = [step](std::string_view event, std::string_view payload) {
            std::cerr << event << '\t' << (*step)++ << '\t' << payload << '\n';
        };
    }
    return cfg;
}

TranSys load_system(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_system(text.str());
}

int cmd_verify(const std::string& path, const Options& opt)
{
    RunConfig cfg = to_config(opt);
    TranSys sys = load_system(path);
    RunResult result = run_verification(sys, cfg);
    std::cout << to_string(result.outcome) << '\n';
    switch (result.outcome)
    {
    case Outcome::safe:
        std::cout << print_smt2(*result.invariant, sys.vars) << '\n';
        return 0;
    case Outcome::unsafe:
        return 1;
    case Outcome::unknown:
        return 2;
    }
    return 2;
}

struct BenchRow
{
    std::string name;
    std::string outcome = "ERROR";
    int iterations = 0;
    std::size_t pool = 0;
    double elapsed_ms = 0.0;
};

int cmd_bench(const std::string& dir, const Options& opt, int jobs, const std::string& out_path)
{
    RunConfig cfg = to_config(opt); // validate flags before touching the directory
    std::vector<fs::path> files;
    {
        std::error_code ec;
        fs::directory_iterator it(dir, ec);
        if (ec)
            throw UsageError("cannot read directory '" + dir + "'");
        for (const auto& entry : it)
            if (entry.path().extension() == ".ts")
                files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::vector<BenchRow> rows(files.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true)
        {
            std::size_t i = cursor.fetch_add(1);
            if (i >= files.size())
                return;
            BenchRow& row = rows[i];
            row.name = files[i].filename().string();
            try
            {
                TranSys sys = load_system(files[i].string());
                RunResult r = run_verification(sys, cfg);
                row.outcome = std::string(to_string(r.outcome));
                row.iterations = r.stats.iterations;
                row.pool = r.stats.pool_size;
                row.elapsed_ms = r.stats.elapsed_ms;
            }
            catch (const std::exception&)
            {
                row.outcome = "ERROR";
            }
        }
    };
    if (jobs <= 1)
        worker();
    else
    {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }

    std::ostringstream csv;
    csv << "name,outcome,iterations,pool,elapsed_ms,domain,separator\n";
    std::size_t safe = 0, unsafe = 0;
    for (const BenchRow& row : rows)
    {
        csv << row.name << ',' << row.outcome << ',' << row.iterations << ',' << row.pool << ','
            << static_cast<long long>(row.elapsed_ms) << ',' << opt.domain << ',' << opt.separator
            << '\n';
        safe += row.outcome == "SAFE" ? 1 : 0;
        unsafe += row.outcome == "UNSAFE" ? 1 : 0;
    }
    if (out_path.empty())
        std::cout << csv.str();
    else
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw UsageError("cannot write '" + out_path + "'");
        out << csv.str();
    }
    std::cout << "solved " << safe << " safe / " << unsafe << " unsafe / total " << rows.size()
              << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invariant synthesis for linear integer transition systems"};
    app.require_subcommand(1);

    Options verify_opt, bench_opt;
    std::string verify_file, bench_dir, bench_out;
    int bench_jobs = 1;

    CLI::App* verify = app.add_subcommand("verify", "Prove or refute one transition-system file");
    verify->add_option("file", verify_file, "Input .ts file")->required();
    add_common_flags(verify, verify_opt);

    CLI::App* bench = app.add_subcommand("bench", "Run every .ts file in a directory");
    bench->add_option("dir", bench_dir, "Directory of .ts files")->required();
    add_common_flags(bench, bench_opt);
    bench->add_option("--jobs", bench_jobs, "Parallel workers")->check(CLI::PositiveNumber);
    bench->add_option("--out", bench_out, "Write the CSV report here instead of stdout");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try
    {
        if (verify->parsed())
            return cmd_verify(verify_file, verify_opt);
        return cmd_bench(bench_dir, bench_opt, bench_jobs, bench_out);
    }
    catch (const ParseException& e)
    {
        std::cerr << "error: " << to_string(e.diagnostic.kind) << ": " << e.diagnostic.message
                  << " at bytes [" << e.diagnostic.span.begin << ", " << e.diagnostic.span.end
                  << ")\n";
        return 3;
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
