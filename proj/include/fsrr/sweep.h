/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef FSRR_SWEEP_H
#define FSRR_SWEEP_H

#include "fsrr/config.h"
#include "fsrr/sim.h"
#include "fsrr/stats.h"

#include <optional>
#include <string>
#include <vector>

namespace fsrr
{

struct SweepRun
{
    size_t runId{0};
    double axisValue{0.0};
    Variant variant;
    uint64_t seed{0};
    std::optional<RunResult> result;
    std::string error;
};

/**
 * Runs every (value, variant, seed) combination on up to `jobs` worker
 * threads. Output is sorted by (axis value, variant order, seed) and is
 * independent of the job count. Per-entry wait logs are kept only when
 * keepWaitLogs is set.
 */
std::vector<SweepRun> RunSweep(const SweepSpec& spec, unsigned jobs, bool keepWaitLogs = false);

struct AggregateRow
{
    double axisValue{0.0};
    std::string variant;
    size_t runs{0};
    double mean{0.0};
    Interval ci95;
};

/// Mean and 95% t-interval of per_node_wait_per_router per (axis value, variant).
std::vector<AggregateRow> Aggregate(const std::vector<SweepRun>& runs);

std::string FormatNumber(double v);

/// Metric column names in output order.
const std::vector<std::string>& MetricColumns();
std::vector<std::string> MetricFields(const Metrics& m);

std::string RunCsv(uint64_t seed, const ScenarioConfig& config, const Metrics& m);
std::string LongCsv(const SweepSpec& spec, const std::vector<SweepRun>& runs);
std::string AggregateCsv(const SweepSpec& spec, const std::vector<AggregateRow>& rows);

/// Header line for WaitLogCsvRows.
std::string WaitLogCsvHeader();
std::string WaitLogCsvRows(size_t runId, const std::vector<WaitRecord>& log);

} // namespace fsrr

#endif // FSRR_SWEEP_H
