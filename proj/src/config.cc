/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "fsrr/config.h"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace fsrr
{

namespace pt = boost::property_tree;

namespace
{

std::string
JoinLines(const std::vector<std::string>& problems)
{
    std::string out;
    for (const auto& p : problems)
    {
        if (!out.empty())
        {
            out += '\n';
        }
        out += p;
    }
    return out;
}

template <typename T>
bool
ParseNumber(std::string_view text, T& out)
{
    std::string s = boost::algorithm::trim_copy(std::string(text));
    if (s.empty())
    {
        return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string>
SplitList(std::string_view text)
{
    std::vector<std::string> parts;
    std::string s(text);
    boost::algorithm::split(parts, s, boost::is_any_of(","));
    for (auto& p : parts)
    {
        boost::algorithm::trim(p);
    }
    std::erase_if(parts, [](const std::string& p) { return p.empty(); });
    return parts;
}

std::optional<SchedulerKind>
ParseScheduler(std::string_view s)
{
    if (s == "fsrr")
    {
        return SchedulerKind::Fsrr;
    }
    if (s == "fcfs")
    {
        return SchedulerKind::Fcfs;
    }
    return std::nullopt;
}

std::optional<ForwardingKind>
ParseForwarding(std::string_view s)
{
    if (s == "flood")
    {
        return ForwardingKind::Flood;
    }
    if (s == "dec_directional")
    {
        return ForwardingKind::DecDirectional;
    }
    return std::nullopt;
}

std::optional<MobilityModel>
ParseMobility(std::string_view s)
{
    if (s == "random_waypoint")
    {
        return MobilityModel::RandomWaypoint;
    }
    if (s == "random_walk")
    {
        return MobilityModel::RandomWalk;
    }
    return std::nullopt;
}

struct KeySpec
{
    std::string_view name;
    bool required;
    // returns an error message, empty on success
    std::function<std::string(ScenarioConfig&, const std::string&)> set;
    std::function<std::string(const ScenarioConfig&)> show;
};

template <typename T>
KeySpec
NumberKey(std::string_view name, bool required, T ScenarioConfig::*member)
{
    return KeySpec{
        name,
        required,
        [member](ScenarioConfig& c, const std::string& v) -> std::string {
            T parsed{};
            if (!ParseNumber(v, parsed))
            {
                return "expected a number, got '" + v + "'";
            }
            c.*member = parsed;
            return {};
        },
        [member](const ScenarioConfig& c) { return fmt::format("{}", c.*member); },
    };
}

template <typename E>
KeySpec
EnumKey(std::string_view name,
        E ScenarioConfig::*member,
        std::optional<E> (*parse)(std::string_view),
        std::string_view choices)
{
    return KeySpec{
        name,
        false,
        [member, parse, choices](ScenarioConfig& c, const std::string& v) -> std::string {
            auto parsed = parse(boost::algorithm::trim_copy(v));
            if (!parsed)
            {
                return fmt::format("expected one of {}, got '{}'", choices, v);
            }
            c.*member = *parsed;
            return {};
        },
        [member](const ScenarioConfig& c) { return std::string(ToString(c.*member)); },
    };
}

const std::vector<KeySpec>&
ScenarioKeys()
{
    static const std::vector<KeySpec> keys{
        NumberKey("area_width", true, &ScenarioConfig::areaWidth),
        NumberKey("area_height", true, &ScenarioConfig::areaHeight),
        NumberKey("node_count", true, &ScenarioConfig::nodeCount),
        NumberKey("v_max", true, &ScenarioConfig::vMax),
        NumberKey("tx_range", true, &ScenarioConfig::txRange),
        NumberKey("sim_time", true, &ScenarioConfig::simTime),
        NumberKey("tau", false, &ScenarioConfig::tau),
        NumberKey("signal_speed", false, &ScenarioConfig::signalSpeed),
        EnumKey("mobility", &ScenarioConfig::mobility, &ParseMobility, "random_waypoint|random_walk"),
        EnumKey("scheduler", &ScenarioConfig::scheduler, &ParseScheduler, "fsrr|fcfs"),
        EnumKey("forwarding", &ScenarioConfig::forwarding, &ParseForwarding, "flood|dec_directional"),
        NumberKey("seed", false, &ScenarioConfig::seed),
        NumberKey("service_time", false, &ScenarioConfig::serviceTime),
        NumberKey("per_transmit_time", false, &ScenarioConfig::perTransmitTime),
        NumberKey("hop_latency", false, &ScenarioConfig::hopLatency),
        NumberKey("hello_interval", false, &ScenarioConfig::helloInterval),
        NumberKey("timestep", false, &ScenarioConfig::timestep),
        NumberKey("walk_epoch", false, &ScenarioConfig::walkEpoch),
        NumberKey("random_sessions", false, &ScenarioConfig::randomSessions),
        NumberKey("sessions_per_node", false, &ScenarioConfig::sessionsPerNode),
        NumberKey("cbr_rate", false, &ScenarioConfig::cbrRate),
        NumberKey("session_start_window", false, &ScenarioConfig::sessionStartWindow),
    };
    return keys;
}

pt::ptree
ReadIni(std::string_view text)
{
    pt::ptree tree;
    std::istringstream in{std::string(text)};
    try
    {
        pt::read_ini(in, tree);
    }
    catch (const pt::ini_parser_error& e)
    {
        throw ConfigError({fmt::format("line {}: {}", e.line(), e.message())});
    }
    return tree;
}

bool
IsSection(const pt::ptree& node)
{
    return !node.empty();
}

void
ParseSessionSection(const std::string& name,
                    const pt::ptree& section,
                    ScenarioConfig& c,
                    std::vector<std::string>& problems)
{
    CbrSession s;
    s.rate = c.cbrRate;
    std::set<std::string> seen;
    for (const auto& [key, value] : section)
    {
        std::string field = name + "." + key;
        const std::string& v = value.data();
        bool ok = true;
        if (key == "source")
        {
            ok = ParseNumber(v, s.source);
        }
        else if (key == "dest")
        {
            ok = ParseNumber(v, s.dest);
        }
        else if (key == "start")
        {
            ok = ParseNumber(v, s.start);
        }
        else if (key == "rate")
        {
            ok = ParseNumber(v, s.rate);
        }
        else
        {
            problems.push_back(field + ": unknown key");
            continue;
        }
        seen.insert(key);
        if (!ok)
        {
            problems.push_back(field + ": expected a number, got '" + v + "'");
        }
    }
    for (const char* req : {"source", "dest"})
    {
        if (!seen.contains(req))
        {
            problems.push_back(name + "." + req + ": required field missing");
        }
    }
    c.sessions.push_back(s);
}

void
ParseNodeSection(const std::string& name,
                 const pt::ptree& section,
                 ScenarioConfig& c,
                 std::vector<std::string>& problems)
{
    NodeId id{};
    if (!ParseNumber(std::string_view(name).substr(5), id))
    {
        problems.push_back(name + ": section name must be node.<id>");
        return;
    }
    Position p;
    int found = 0;
    for (const auto& [key, value] : section)
    {
        double* target = key == "x" ? &p.x : key == "y" ? &p.y : nullptr;
        if (target == nullptr)
        {
            problems.push_back(name + "." + key + ": unknown key");
            continue;
        }
        ++found;
        if (!ParseNumber(value.data(), *target))
        {
            problems.push_back(name + "." + key + ": expected a number, got '" + value.data() + "'");
        }
    }
    if (found != 2)
    {
        problems.push_back(name + ": both x and y are required");
    }
    c.initialPositions[id] = p;
}

// Applies top-level keys and scenario sections; sections named in `skip`
// belong to someone else.
ScenarioConfig
ParseScenarioTree(const pt::ptree& tree,
                  const std::set<std::string>& optionalRequired,
                  const std::set<std::string>& skipSections,
                  std::vector<std::string>& problems)
{
    ScenarioConfig c;
    std::set<std::string> present;
    const auto& keys = ScenarioKeys();

    // cbr_rate seeds the default rate of explicit sessions, so read it first
    if (auto rate = tree.get_child_optional(pt::ptree::path_type("cbr_rate", '\0'));
        rate && !IsSection(*rate))
    {
        ParseNumber(rate->data(), c.cbrRate);
    }

    for (const auto& [key, value] : tree)
    {
        if (IsSection(value))
        {
            if (skipSections.contains(key))
            {
                continue;
            }
            if (key.starts_with("session."))
            {
                ParseSessionSection(key, value, c, problems);
            }
            else if (key.starts_with("node."))
            {
                ParseNodeSection(key, value, c, problems);
            }
            else
            {
                problems.push_back(key + ": unknown section");
            }
            continue;
        }
        auto spec = std::find_if(keys.begin(), keys.end(), [&](const KeySpec& k) { return k.name == key; });
        if (spec == keys.end())
        {
            problems.push_back(key + ": unknown key");
            continue;
        }
        if (auto err = spec->set(c, value.data()); !err.empty())
        {
            problems.push_back(key + ": " + err);
        }
        present.insert(key);
    }
    for (const auto& k : keys)
    {
        if (k.required && !present.contains(std::string(k.name)) &&
            !optionalRequired.contains(std::string(k.name)))
        {
            problems.push_back(std::string(k.name) + ": required field missing");
        }
    }
    return c;
}

std::string
ReadFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw ConfigError({"cannot read file '" + path + "'"});
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<uint64_t>
ParseSeeds(const std::string& text, std::vector<std::string>& problems)
{
    std::vector<uint64_t> seeds;
    for (const auto& part : SplitList(text))
    {
        auto dash = part.find('-');
        uint64_t lo{};
        uint64_t hi{};
        if (dash != std::string::npos)
        {
            if (!ParseNumber(std::string_view(part).substr(0, dash), lo) ||
                !ParseNumber(std::string_view(part).substr(dash + 1), hi) || hi < lo)
            {
                problems.push_back("sweep.seeds: bad range '" + part + "'");
                continue;
            }
            for (uint64_t s = lo; s <= hi; ++s)
            {
                seeds.push_back(s);
            }
        }
        else if (ParseNumber(part, lo))
        {
            seeds.push_back(lo);
        }
        else
        {
            problems.push_back("sweep.seeds: bad seed '" + part + "'");
        }
    }
    return seeds;
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(JoinLines(problems)),
      m_problems(std::move(problems))
{
}

std::string_view
ToString(SchedulerKind kind)
{
    return kind == SchedulerKind::Fsrr ? "fsrr" : "fcfs";
}

std::string_view
ToString(ForwardingKind kind)
{
    return kind == ForwardingKind::Flood ? "flood" : "dec_directional";
}

std::string_view
ToString(MobilityModel model)
{
    return model == MobilityModel::RandomWaypoint ? "random_waypoint" : "random_walk";
}

std::string_view
ToString(SweepAxis axis)
{
    return axis == SweepAxis::NodeCount ? "node_count" : "v_max";
}

std::string
Variant::Name() const
{
    return fmt::format("{}+{}", ToString(scheduler), ToString(forwarding));
}

ScenarioConfig
ParseScenarioText(std::string_view text)
{
    auto tree = ReadIni(text);
    std::vector<std::string> problems;
    auto config = ParseScenarioTree(tree, {}, {}, problems);
    if (problems.empty())
    {
        problems = Validate(config);
    }
    if (!problems.empty())
    {
        throw ConfigError(problems);
    }
    return config;
}

ScenarioConfig
LoadScenarioFile(const std::string& path)
{
    return ParseScenarioText(ReadFile(path));
}

std::string
DescribeScenarioKeys()
{
    ScenarioConfig defaults;
    std::string out;
    for (const auto& k : ScenarioKeys())
    {
        out += fmt::format("{} = {}{}\n", k.name, k.show(defaults), k.required ? "    ; required" : "");
    }
    return out;
}

SweepSpec
ParseSweepText(std::string_view text)
{
    auto tree = ReadIni(text);
    std::vector<std::string> problems;
    SweepSpec spec;

    auto sweep = tree.get_child_optional("sweep");
    if (!sweep)
    {
        throw ConfigError({"sweep: required section missing"});
    }
    std::string axis = sweep->get<std::string>("axis", "");
    if (axis == "node_count")
    {
        spec.axis = SweepAxis::NodeCount;
    }
    else if (axis == "v_max")
    {
        spec.axis = SweepAxis::VMax;
    }
    else
    {
        problems.push_back("sweep.axis: expected node_count or v_max, got '" + axis + "'");
    }

    for (const auto& v : SplitList(sweep->get<std::string>("values", "")))
    {
        double d{};
        if (ParseNumber(v, d))
        {
            spec.values.push_back(d);
        }
        else
        {
            problems.push_back("sweep.values: bad value '" + v + "'");
        }
    }
    if (spec.values.empty())
    {
        problems.push_back("sweep.values: at least one value required");
    }

    spec.seeds = ParseSeeds(sweep->get<std::string>("seeds", ""), problems);
    if (spec.seeds.empty())
    {
        problems.push_back("sweep.seeds: at least one seed required");
    }

    for (const auto& v : SplitList(sweep->get<std::string>("variants", "fsrr:dec_directional,fcfs:dec_directional")))
    {
        auto colon = v.find(':');
        auto sched = ParseScheduler(std::string_view(v).substr(0, colon));
        auto fwd = colon == std::string::npos
                       ? std::optional<ForwardingKind>(ForwardingKind::DecDirectional)
                       : ParseForwarding(std::string_view(v).substr(colon + 1));
        if (!sched || !fwd)
        {
            problems.push_back("sweep.variants: bad variant '" + v + "' (scheduler:forwarding)");
            continue;
        }
        spec.variants.push_back(Variant{*sched, *fwd});
    }
    for (const auto& [key, value] : *sweep)
    {
        if (key != "axis" && key != "values" && key != "seeds" && key != "variants")
        {
            problems.push_back("sweep." + key + ": unknown key");
        }
    }

    std::set<std::string> axisKey{std::string(ToString(spec.axis))};
    spec.base = ParseScenarioTree(tree, axisKey, {"sweep"}, problems);

    if (problems.empty())
    {
        for (double value : spec.values)
        {
            for (const auto& err : Validate(ConfigFor(spec, value, spec.seeds.front(), spec.variants.front())))
            {
                problems.push_back(fmt::format("{}={}: {}", ToString(spec.axis), value, err));
            }
        }
    }
    if (!problems.empty())
    {
        throw ConfigError(problems);
    }
    return spec;
}

SweepSpec
LoadSweepFile(const std::string& path)
{
    return ParseSweepText(ReadFile(path));
}

ScenarioConfig
ConfigFor(const SweepSpec& spec, double axisValue, uint64_t seed, const Variant& variant)
{
    ScenarioConfig c = spec.base;
    if (spec.axis == SweepAxis::NodeCount)
    {
        c.nodeCount = static_cast<uint32_t>(axisValue);
    }
    else
    {
        c.vMax = axisValue;
    }
    c.seed = seed;
    c.scheduler = variant.scheduler;
    c.forwarding = variant.forwarding;
    return c;
}

} // namespace fsrr
