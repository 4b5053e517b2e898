/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "cli.h"

#include "fsrr/config.h"
#include "fsrr/fuzzy.h"
#include "fsrr/geometry.h"
#include "fsrr/sweep.h"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

namespace fsrr
{

namespace
{

bool
WriteText(const std::string& path, const std::string& text, std::ostream& err)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
    {
        err << "error: cannot write '" << path << "'\n";
        return false;
    }
    f << text;
    return static_cast<bool>(f);
}

void
ConfigureLogging(bool verbose)
{
    auto level = spdlog::level::warn;
    if (const char* env = std::getenv("FSRR_LOG"))
    {
        level = spdlog::level::from_str(env);
    }
    if (verbose)
    {
        level = spdlog::level::debug;
    }
    spdlog::set_level(level);
}

void
PrintTable(RuleBase table, std::ostream& out)
{
    const auto& layout = Layout(table);
    out << layout.title << "\n";
    out << fmt::format("{:>8} |", std::string(layout.rowInput) + "\\" + std::string(layout.columnInput));
    for (char c : std::string_view("abcd"))
    {
        out << ' ' << c;
    }
    out << "\n";
    for (int r = 0; r < 4; ++r)
    {
        out << fmt::format("{:>8} |", static_cast<char>('a' + r));
        for (int c = 0; c < 4; ++c)
        {
            out << ' ' << ToChar(Lookup(table, GradeFromIndex(c), GradeFromIndex(r)));
        }
        out << "\n";
    }
    out << "\n";
}

struct RunArgs
{
    std::string config;
    std::optional<uint64_t> seed;
    std::string out;
    std::string waitLog;
};

int
CmdRun(const RunArgs& a, std::ostream& out, std::ostream& err)
{
    ScenarioConfig config;
    try
    {
        config = LoadScenarioFile(a.config);
        if (a.seed)
        {
            config.seed = *a.seed;
        }
    }
    catch (const ConfigError& e)
    {
        err << "error: invalid scenario '" << a.config << "':\n" << e.what() << "\n";
        return kExitUsage;
    }

    auto result = RunScenario(config);
    std::string csv = RunCsv(config.seed, config, result.metrics);
    const auto& m = result.metrics;
    std::ostream& summary = a.out.empty() ? err : out;
    summary << fmt::format("scenario {} seed={} scheduler={} forwarding={} nodes={}\n",
                           a.config,
                           config.seed,
                           ToString(config.scheduler),
                           ToString(config.forwarding),
                           config.nodeCount)
            << fmt::format("  per-node waiting time per router: {:.6g} s (total wait {:.6g} s over {} routers)\n",
                           m.perNodeWaitPerRouter,
                           m.totalWait,
                           m.routersUsed)
            << fmt::format("  discoveries: {} started, {} completed, mean latency {:.6g} s\n",
                           m.discoveriesStarted,
                           m.discoveriesCompleted,
                           m.meanDiscoveryLatency)
            << fmt::format("  rreq: {} forwarded, {} expired, {} duplicate\n",
                           m.rreqForwarded,
                           m.rreqDroppedExpired,
                           m.rreqDroppedDuplicate)
            << fmt::format("  event digest: {:016x}\n", result.eventDigest);

    if (a.out.empty())
    {
        out << csv;
    }
    else if (!WriteText(a.out, csv, err))
    {
        return 1;
    }
    if (!a.waitLog.empty() && !WriteText(a.waitLog, WaitLogCsvHeader() + WaitLogCsvRows(0, result.waitLog), err))
    {
        return 1;
    }
    return 0;
}

struct SweepArgs
{
    std::string spec;
    unsigned jobs{0};
    std::string outDir{"."};
    bool waitLog{false};
};

int
CmdSweep(const SweepArgs& a, std::ostream& out, std::ostream& err)
{
    SweepSpec spec;
    try
    {
        spec = LoadSweepFile(a.spec);
    }
    catch (const ConfigError& e)
    {
        err << "error: invalid sweep '" << a.spec << "':\n" << e.what() << "\n";
        return kExitUsage;
    }
    unsigned jobs = a.jobs > 0 ? a.jobs : std::max(1U, std::thread::hardware_concurrency());
    auto runs = RunSweep(spec, jobs, a.waitLog);

    int failures = 0;
    for (const auto& run : runs)
    {
        if (!run.result)
        {
            ++failures;
            err << fmt::format("run {} ({}={}, {}, seed {}) failed: {}\n",
                               run.runId,
                               ToString(spec.axis),
                               run.axisValue,
                               run.variant.Name(),
                               run.seed,
                               run.error);
        }
    }

    std::error_code ec;
    std::filesystem::create_directories(a.outDir, ec);
    auto dir = std::filesystem::path(a.outDir);
    auto rows = Aggregate(runs);
    if (!WriteText((dir / "sweep_long.csv").string(), LongCsv(spec, runs), err) ||
        !WriteText((dir / "sweep_aggregate.csv").string(), AggregateCsv(spec, rows), err))
    {
        return 1;
    }
    if (a.waitLog)
    {
        std::string log = WaitLogCsvHeader();
        for (const auto& run : runs)
        {
            if (run.result)
            {
                log += WaitLogCsvRows(run.runId, run.result->waitLog);
            }
        }
        if (!WriteText((dir / "wait_log.csv").string(), log, err))
        {
            return 1;
        }
    }

    out << fmt::format("{} runs ({} failed); aggregate per {} x variant:\n", runs.size(), failures, ToString(spec.axis));
    for (const auto& r : rows)
    {
        out << fmt::format("  {:>8} {:<22} mean={:.6g} ci95=[{:.6g}, {:.6g}] n={}\n",
                           FormatNumber(r.axisValue),
                           r.variant,
                           r.mean,
                           r.ci95.low,
                           r.ci95.high,
                           r.runs);
    }
    return failures == 0 ? 0 : 1;
}

struct TraceArgs
{
    double rtr{0};
    double ast{0};
    std::string cdht{"0"};
    double maxval{1};
    double decr{0};
    double dr{0};
};

int
CmdTrace(const TraceArgs& a, std::ostream& out, std::ostream& err)
{
    CrispInputs in{a.rtr, a.ast, 0.0, a.maxval, a.decr, a.dr};
    if (a.cdht == "max")
    {
        in.cdht = a.maxval;
    }
    else
    {
        try
        {
            size_t used = 0;
            in.cdht = std::stod(a.cdht, &used);
            if (used != a.cdht.size())
            {
                throw std::invalid_argument(a.cdht);
            }
        }
        catch (const std::exception&)
        {
            err << "error: --cdht expects a number or 'max'\n";
            return kExitUsage;
        }
    }
    ClampCounter clamps;
    auto t = Evaluate(in, &clamps);
    out << fmt::format("inputs: rtr={} ast={} cdht={} maxval={} decr={} dr={}\n",
                       in.rtr, in.ast, in.cdht, in.maxval, in.decr, in.dr)
        << fmt::format("grades: rtr={} ast={} cdht={} decr={} dr={}\n",
                       ToChar(t.rtrGrade), ToChar(t.astGrade), ToChar(t.cdhtGrade), ToChar(t.decrGrade),
                       ToChar(t.drGrade))
        << fmt::format("temp1={} tq={} pq={} delay={}\n", ToChar(t.temp1), ToChar(t.tq), ToChar(t.pq), ToChar(t.delay));
    if (clamps.count > 0)
    {
        out << fmt::format("clamped inputs: {}\n", clamps.count);
    }
    return 0;
}

struct DecArgs
{
    double x{0};
    double y{0};
    double vmax{0};
    double tau{0};
    double t1{0};
    double ts{0};
    std::optional<double> nx;
    std::optional<double> ny;
    double signalSpeed{3e8};
};

int
CmdDec(const DecArgs& a, std::ostream& out, std::ostream& err)
{
    auto built = BuildDec(Position{a.x, a.y}, a.vmax, a.tau, a.t1, a.ts);
    out << fmt::format("dec center=({}, {}) radius={}{}\n",
                       built.dec.center.x,
                       built.dec.center.y,
                       built.dec.radius,
                       built.expired ? " (expired)" : "");
    if (a.nx.has_value() != a.ny.has_value())
    {
        err << "error: --nx and --ny must be given together\n";
        return kExitUsage;
    }
    if (a.nx)
    {
        Position n{*a.nx, *a.ny};
        out << fmt::format("neighbor ({}, {}): gap={} reach={} eligible={}\n",
                           n.x,
                           n.y,
                           DistanceToNearestPoint(n, built.dec),
                           a.signalSpeed * RemainingBudget(a.tau, a.t1, a.ts),
                           ForwardEligible(n, built.dec, a.signalSpeed, a.tau, a.t1, a.ts) ? "yes" : "no");
    }
    return 0;
}

} // namespace

int
RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Route-request scheduling simulator (FSRR vs FCFS)", "fsrr"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "log every crisp controller input at debug level");

    RunArgs runArgs;
    auto* run = app.add_subcommand("run", "run one scenario and write its metrics row");
    run->add_option("config", runArgs.config, "scenario file")->required();
    run->add_option("--seed", runArgs.seed, "override the scenario seed");
    run->add_option("--out", runArgs.out, "metrics CSV path (default: stdout)");
    run->add_option("--wait-log", runArgs.waitLog, "per-entry waiting-time CSV path");

    SweepArgs sweepArgs;
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and write long + aggregate CSVs");
    sweep->add_option("spec", sweepArgs.spec, "sweep file")->required();
    sweep->add_option("--jobs", sweepArgs.jobs, "worker threads (default: hardware concurrency)");
    sweep->add_option("--out", sweepArgs.outDir, "output directory");
    sweep->add_flag("--wait-log", sweepArgs.waitLog, "also write wait_log.csv");

    auto* audit = app.add_subcommand("audit", "print rule tables, a controller trace or a DEC");
    audit->require_subcommand(1);
    audit->add_subcommand("tables", "print the four rule bases");
    TraceArgs traceArgs;
    auto* trace = audit->add_subcommand("trace", "evaluate the controller chain for crisp inputs");
    trace->add_option("--rtr", traceArgs.rtr)->required();
    trace->add_option("--ast", traceArgs.ast)->required();
    trace->add_option("--cdht", traceArgs.cdht, "number or 'max'")->required();
    trace->add_option("--maxval", traceArgs.maxval, "CDHT range upper bound");
    trace->add_option("--decr", traceArgs.decr)->required();
    trace->add_option("--dr", traceArgs.dr)->required();
    DecArgs decArgs;
    auto* dec = audit->add_subcommand("dec", "build a DEC and optionally test a neighbor");
    dec->add_option("--x", decArgs.x, "last known x");
    dec->add_option("--y", decArgs.y, "last known y");
    dec->add_option("--vmax", decArgs.vmax, "destination speed bound")->required();
    dec->add_option("--tau", decArgs.tau, "request lifetime")->required();
    dec->add_option("--t1", decArgs.t1, "record timestamp")->required();
    dec->add_option("--ts", decArgs.ts, "request origination time")->required();
    dec->add_option("--nx", decArgs.nx, "neighbor x");
    dec->add_option("--ny", decArgs.ny, "neighbor y");
    dec->add_option("--signal-speed", decArgs.signalSpeed, "signal speed for the reach test");

    app.add_subcommand("keys", "list scenario keys with their defaults");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    ConfigureLogging(verbose);
    if (run->parsed())
    {
        return CmdRun(runArgs, out, err);
    }
    if (sweep->parsed())
    {
        return CmdSweep(sweepArgs, out, err);
    }
    if (audit->parsed())
    {
        if (trace->parsed())
        {
            return CmdTrace(traceArgs, out, err);
        }
        if (dec->parsed())
        {
            return CmdDec(decArgs, out, err);
        }
        for (auto t : {RuleBase::Temp1, RuleBase::Tq, RuleBase::Pq, RuleBase::Delay})
        {
            PrintTable(t, out);
        }
        return 0;
    }
    out << DescribeScenarioKeys();
    return 0;
}

} // namespace fsrr
