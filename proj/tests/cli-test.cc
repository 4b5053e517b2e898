/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cli.h"

#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fsrr;
namespace fs = std::filesystem;

namespace
{

struct CliResult
{
    int code;
    std::string out;
    std::string err;
};

CliResult
Cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    int code = RunCli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir
{
  public:
    TempDir()
        : m_path(fs::temp_directory_path() / fs::path("fsrr-cli-test-" + std::to_string(::getpid())))
    {
        fs::remove_all(m_path);
        fs::create_directories(m_path);
    }

    ~TempDir()
    {
        fs::remove_all(m_path);
    }

    std::string Write(const std::string& name, const std::string& text) const
    {
        auto p = m_path / name;
        std::ofstream(p) << text;
        return p.string();
    }

    fs::path Path() const
    {
        return m_path;
    }

  private:
    fs::path m_path;
};

std::string
Slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

size_t
Lines(const std::string& s)
{
    return static_cast<size_t>(std::count(s.begin(), s.end(), '\n'));
}

const char* kScenario = R"(area_width = 200
area_height = 200
node_count = 8
v_max = 10
tx_range = 80
sim_time = 20
random_sessions = 2
)";

} // namespace

TEST_CASE("run writes a header and one metrics row")
{
    TempDir dir;
    auto path = dir.Write("s.ini", kScenario);
    auto r = Cli({"run", path});
    CHECK(r.code == 0);
    CHECK(Lines(r.out) == 2);
    CHECK(r.out.starts_with("seed,scheduler,forwarding,total_wait,"));
    CHECK(r.out.find("\n1,fsrr,dec_directional,") != std::string::npos);
}

TEST_CASE("run writes files and honors the seed override")
{
    TempDir dir;
    auto path = dir.Write("s.ini", kScenario);
    auto csv = (dir.Path() / "m.csv").string();
    auto waits = (dir.Path() / "w.csv").string();
    auto r = Cli({"run", path, "--seed", "9", "--out", csv, "--wait-log", waits});
    CHECK(r.code == 0);
    CHECK(r.out.find("seed,scheduler") == std::string::npos);
    auto text = Slurp(csv);
    CHECK(text.find("\n9,") != std::string::npos);
    CHECK(Slurp(waits).starts_with("run_id,router_id,req_id,grade,arrival,service_start\n"));

    auto again = Cli({"run", path, "--seed", "9"});
    CHECK(again.out == text);
}

TEST_CASE("invalid scenarios exit with the usage status and name the field")
{
    TempDir dir;
    auto missing = dir.Write("m.ini", "area_width = 10\narea_height = 10\nnode_count = 3\nv_max = 1\nsim_time = 5\n");
    auto r = Cli({"run", missing});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("tx_range") != std::string::npos);

    auto unknown = dir.Write("u.ini", std::string(kScenario) + "speed_of_light = 3\n");
    r = Cli({"run", unknown});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("speed_of_light") != std::string::npos);

    auto bad = dir.Write("b.ini", std::string(kScenario) + "scheduler = lifo\n");
    r = Cli({"run", bad});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("scheduler") != std::string::npos);

    r = Cli({"run", (dir.Path() / "absent.ini").string()});
    CHECK(r.code == kExitUsage);
}

TEST_CASE("sweep writes long and aggregate tables reproducibly")
{
    TempDir dir;
    auto spec = dir.Write("sw.ini", std::string(kScenario) + R"(
[sweep]
axis = node_count
values = 6, 10
seeds = 1-2
variants = fsrr:dec_directional, fcfs:dec_directional
)");
    auto outA = (dir.Path() / "a").string();
    auto outB = (dir.Path() / "b").string();
    auto r = Cli({"sweep", spec, "--out", outA, "--jobs", "2", "--wait-log"});
    REQUIRE(r.code == 0);
    CHECK(Cli({"sweep", spec, "--out", outB, "--jobs", "1", "--wait-log"}).code == 0);

    auto longA = Slurp(fs::path(outA) / "sweep_long.csv");
    auto aggA = Slurp(fs::path(outA) / "sweep_aggregate.csv");
    CHECK(Lines(longA) == 1 + 8);
    CHECK(Lines(aggA) == 1 + 4);
    CHECK(longA.starts_with("run_id,node_count,variant,seed,"));
    CHECK(aggA.starts_with("node_count,variant,runs,mean_per_node_wait_per_router,ci95_low,ci95_high\n"));
    CHECK(longA == Slurp(fs::path(outB) / "sweep_long.csv"));
    CHECK(aggA == Slurp(fs::path(outB) / "sweep_aggregate.csv"));
    CHECK(Slurp(fs::path(outA) / "wait_log.csv") == Slurp(fs::path(outB) / "wait_log.csv"));
}

TEST_CASE("sweep rejects a bad axis")
{
    TempDir dir;
    auto spec = dir.Write("sw.ini", std::string(kScenario) + "[sweep]\naxis = tau\nvalues = 1\nseeds = 1\n");
    auto r = Cli({"sweep", spec});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("axis") != std::string::npos);
}

TEST_CASE("audit tables prints all four rule bases")
{
    auto r = Cli({"audit", "tables"});
    CHECK(r.code == 0);
    // rows of the first table
    CHECK(r.out.find("a | a b b b") != std::string::npos);
    CHECK(r.out.find("d | b c d d") != std::string::npos);
    // last row of the third table
    CHECK(r.out.find("d | b b b a") != std::string::npos);
}

TEST_CASE("audit trace walks the controller chain")
{
    auto r = Cli({"audit", "trace", "--rtr", "1", "--ast", "1", "--cdht", "max", "--maxval", "0.5", "--decr", "0",
                  "--dr", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("temp1=d tq=d pq=d delay=d") != std::string::npos);

    r = Cli({"audit", "trace", "--rtr", "0", "--ast", "0", "--cdht", "0", "--decr", "1", "--dr", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("temp1=a tq=a pq=a delay=a") != std::string::npos);

    r = Cli({"audit", "trace", "--rtr", "1.5", "--ast", "0", "--cdht", "0", "--decr", "0", "--dr", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("clamped inputs: 1") != std::string::npos);

    r = Cli({"audit", "trace", "--rtr", "0.5", "--ast", "0", "--cdht", "lots", "--decr", "0", "--dr", "0"});
    CHECK(r.code == kExitUsage);
}

TEST_CASE("audit dec")
{
    auto r = Cli({"audit", "dec", "--x", "100", "--y", "100", "--vmax", "10", "--tau", "30", "--t1", "15", "--ts",
                  "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "dec center=(100, 100) radius=200\n");

    r = Cli({"audit", "dec", "--vmax", "10", "--tau", "1", "--t1", "15", "--ts", "5"});
    CHECK(r.out.find("radius=0 (expired)") != std::string::npos);

    r = Cli({"audit", "dec", "--x", "0", "--y", "0", "--vmax", "4", "--tau", "8", "--t1", "13", "--ts", "10", "--nx",
             "70", "--ny", "0", "--signal-speed", "10"});
    CHECK(r.out.find("gap=50 reach=50 eligible=yes") != std::string::npos);

    r = Cli({"audit", "dec", "--vmax", "1", "--tau", "1", "--t1", "0", "--ts", "0", "--nx", "3"});
    CHECK(r.code == kExitUsage);
}

TEST_CASE("malformed command lines")
{
    CHECK(Cli({"frobnicate"}).code == kExitUsage);
    CHECK(Cli({"run"}).code == kExitUsage);
    CHECK(Cli({"audit", "dec", "--vmax", "x", "--tau", "1", "--t1", "0", "--ts", "0"}).code == kExitUsage);
    auto help = Cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("sweep") != std::string::npos);
    CHECK(Cli({"keys"}).out.find("tx_range") != std::string::npos);
}
