/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef FSRR_CONFIG_H
#define FSRR_CONFIG_H

#include "fsrr/sim.h"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fsrr
{

/**
 * Raised for unreadable or invalid scenario/sweep files. what() lists every
 * problem, one "field: message" per line.
 */
class ConfigError : public std::runtime_error
{
  public:
    explicit ConfigError(std::vector<std::string> problems);

    const std::vector<std::string>& Problems() const
    {
        return m_problems;
    }

  private:
    std::vector<std::string> m_problems;
};

std::string_view ToString(SchedulerKind kind);
std::string_view ToString(ForwardingKind kind);
std::string_view ToString(MobilityModel model);

/**
 * Scenario files are flat INI text:
 *
 *   node_count = 20
 *   area_width = 300
 *   ...
 *   [session.0]            ; optional explicit CBR sessions
 *   source = 0
 *   dest = 1
 *   [node.0]               ; optional fixed initial position
 *   x = 10
 *   y = 20
 *
 * area_width, area_height, node_count, tx_range, v_max and sim_time are
 * required; every other key has the default of ScenarioConfig. Unknown keys
 * are rejected.
 */
ScenarioConfig ParseScenarioText(std::string_view text);
ScenarioConfig LoadScenarioFile(const std::string& path);

/// The documented key set with defaults, as scenario-file text.
std::string DescribeScenarioKeys();

enum class SweepAxis : uint8_t
{
    NodeCount,
    VMax,
};

std::string_view ToString(SweepAxis axis);

struct Variant
{
    SchedulerKind scheduler{SchedulerKind::Fsrr};
    ForwardingKind forwarding{ForwardingKind::DecDirectional};

    std::string Name() const;
    bool operator==(const Variant&) const = default;
};

struct SweepSpec
{
    ScenarioConfig base;
    SweepAxis axis{SweepAxis::NodeCount};
    std::vector<double> values;
    std::vector<uint64_t> seeds;
    std::vector<Variant> variants;
};

/**
 * Sweep files hold the base scenario at top level plus a [sweep] section:
 *
 *   [sweep]
 *   axis = node_count                 ; or v_max
 *   values = 10, 20, 40
 *   seeds = 1-20                      ; ranges and/or comma lists
 *   variants = fsrr:dec_directional, fcfs:dec_directional
 *
 * The base may omit the swept field.
 */
SweepSpec ParseSweepText(std::string_view text);
SweepSpec LoadSweepFile(const std::string& path);

/// Base scenario with the axis value, seed and variant applied.
ScenarioConfig ConfigFor(const SweepSpec& spec, double axisValue, uint64_t seed, const Variant& variant);

} // namespace fsrr

#endif // FSRR_CONFIG_H
