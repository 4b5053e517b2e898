/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "fsrr/sweep.h"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace fsrr
{

std::vector<SweepRun>
RunSweep(const SweepSpec& spec, unsigned jobs, bool keepWaitLogs)
{
    std::vector<SweepRun> runs;
    for (double value : spec.values)
    {
        for (const auto& variant : spec.variants)
        {
            for (uint64_t seed : spec.seeds)
            {
                runs.push_back(SweepRun{runs.size(), value, variant, seed, std::nullopt, {}});
            }
        }
    }

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < runs.size(); i = next++)
        {
            auto& run = runs[i];
            try
            {
                run.result = RunScenario(ConfigFor(spec, run.axisValue, run.seed, run.variant));
                if (!keepWaitLogs)
                {
                    run.result->waitLog.clear();
                    run.result->waitLog.shrink_to_fit();
                }
            }
            catch (const std::exception& e)
            {
                run.error = e.what();
            }
        }
    };

    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(runs.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned j = 1; j < jobs; ++j)
        {
            pool.emplace_back(worker);
        }
        worker();
    }
    return runs;
}

std::vector<AggregateRow>
Aggregate(const std::vector<SweepRun>& runs)
{
    // keyed on first appearance so rows follow the sweep order
    std::vector<std::pair<double, std::string>> order;
    std::map<std::pair<double, std::string>, std::vector<double>> groups;
    for (const auto& run : runs)
    {
        if (!run.result)
        {
            continue;
        }
        auto key = std::make_pair(run.axisValue, run.variant.Name());
        if (!groups.contains(key))
        {
            order.push_back(key);
        }
        groups[key].push_back(run.result->metrics.perNodeWaitPerRouter);
    }
    std::vector<AggregateRow> rows;
    for (const auto& key : order)
    {
        const auto& xs = groups[key];
        rows.push_back(AggregateRow{key.first, key.second, xs.size(), Mean(xs), MeanConfidenceInterval(xs)});
    }
    return rows;
}

std::string
FormatNumber(double v)
{
    // shortest text that round-trips, so CSV re-reads are exact
    return fmt::format("{}", v);
}

const std::vector<std::string>&
MetricColumns()
{
    static const std::vector<std::string> cols{
        "total_wait",
        "routers_used",
        "node_count",
        "per_node_wait_per_router",
        "rreq_forwarded",
        "rreq_dropped_expired",
        "rreq_dropped_duplicate",
        "discoveries_started",
        "discoveries_completed",
        "mean_discovery_latency",
    };
    return cols;
}

std::vector<std::string>
MetricFields(const Metrics& m)
{
    return {
        FormatNumber(m.totalWait),
        std::to_string(m.routersUsed),
        std::to_string(m.nodeCount),
        FormatNumber(m.perNodeWaitPerRouter),
        std::to_string(m.rreqForwarded),
        std::to_string(m.rreqDroppedExpired),
        std::to_string(m.rreqDroppedDuplicate),
        std::to_string(m.discoveriesStarted),
        std::to_string(m.discoveriesCompleted),
        FormatNumber(m.meanDiscoveryLatency),
    };
}

namespace
{

std::string
Join(const std::vector<std::string>& fields)
{
    return fmt::format("{}", fmt::join(fields, ","));
}

} // namespace

std::string
RunCsv(uint64_t seed, const ScenarioConfig& config, const Metrics& m)
{
    std::vector<std::string> header{"seed", "scheduler", "forwarding"};
    header.insert(header.end(), MetricColumns().begin(), MetricColumns().end());
    std::vector<std::string> row{std::to_string(seed),
                                 std::string(ToString(config.scheduler)),
                                 std::string(ToString(config.forwarding))};
    auto fields = MetricFields(m);
    row.insert(row.end(), fields.begin(), fields.end());
    return Join(header) + "\n" + Join(row) + "\n";
}

std::string
LongCsv(const SweepSpec& spec, const std::vector<SweepRun>& runs)
{
    std::vector<std::string> header{"run_id", std::string(ToString(spec.axis)), "variant", "seed"};
    header.insert(header.end(), MetricColumns().begin(), MetricColumns().end());
    std::string out = Join(header) + "\n";
    for (const auto& run : runs)
    {
        if (!run.result)
        {
            continue;
        }
        std::vector<std::string> row{std::to_string(run.runId),
                                     FormatNumber(run.axisValue),
                                     run.variant.Name(),
                                     std::to_string(run.seed)};
        auto fields = MetricFields(run.result->metrics);
        row.insert(row.end(), fields.begin(), fields.end());
        out += Join(row) + "\n";
    }
    return out;
}

std::string
AggregateCsv(const SweepSpec& spec, const std::vector<AggregateRow>& rows)
{
    std::string out = fmt::format("{},variant,runs,mean_per_node_wait_per_router,ci95_low,ci95_high\n",
                                  ToString(spec.axis));
    for (const auto& r : rows)
    {
        out += fmt::format("{},{},{},{},{},{}\n",
                           FormatNumber(r.axisValue),
                           r.variant,
                           r.runs,
                           FormatNumber(r.mean),
                           FormatNumber(r.ci95.low),
                           FormatNumber(r.ci95.high));
    }
    return out;
}

std::string
WaitLogCsvHeader()
{
    return "run_id,router_id,req_id,grade,arrival,service_start\n";
}

std::string
WaitLogCsvRows(size_t runId, const std::vector<WaitRecord>& log)
{
    std::string out;
    for (const auto& w : log)
    {
        out += fmt::format("{},{},{},{},{},{}\n",
                           runId,
                           w.router,
                           w.reqId,
                           w.grade ? std::string(1, ToChar(*w.grade)) : std::string("unknown"),
                           FormatNumber(w.arrival),
                           FormatNumber(w.serviceStart));
    }
    return out;
}

} // namespace fsrr
