/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure. Sweeps use every available core.

#include "generators.h"
#include "oracles.h"
#include "printed-tables.h"

#include "fsrr/config.h"
#include "fsrr/fuzzy.h"
#include "fsrr/geometry.h"
#include "fsrr/params.h"
#include "fsrr/scheduler.h"
#include "fsrr/sim.h"
#include "fsrr/stats.h"
#include "fsrr/sweep.h"

#include <fmt/core.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <thread>

using namespace fsrr;

namespace
{

struct Outcome
{
    bool pass{false};
    std::string detail;
};

unsigned
Jobs()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

Outcome
TableConformance()
{
    const RuleBase tables[] = {RuleBase::Temp1, RuleBase::Tq, RuleBase::Pq, RuleBase::Delay};
    int matched = 0;
    std::string firstMismatch;
    for (int t = 0; t < 4; ++t)
    {
        for (int row = 0; row < 4; ++row)
        {
            for (int col = 0; col < 4; ++col)
            {
                char got = ToChar(Lookup(tables[t], GradeFromIndex(col), GradeFromIndex(row)));
                if (got == printed::kTables[t][row][col])
                {
                    ++matched;
                }
                else if (firstMismatch.empty())
                {
                    firstMismatch = fmt::format(" first mismatch: table {} row {} col {}", t + 1, row, col);
                }
            }
        }
    }
    return {matched == 64, fmt::format("{}/64 cells match{}", matched, firstMismatch)};
}

Outcome
FuzzificationBoundaries()
{
    const double xs[] = {0.0, std::nextafter(0.25, 0.0), 0.25, 0.5, 0.75, 1.0};
    const char expected[] = {'a', 'a', 'b', 'c', 'd', 'd'};
    std::string got;
    bool ok = true;
    for (int i = 0; i < 6; ++i)
    {
        char g = ToChar(FuzzifyUnit(xs[i]));
        got += g;
        ok = ok && g == expected[i];
    }
    char cdht = ToChar(FuzzifyCdht(0.0, 0.0));
    ok = ok && cdht == 'a';
    return {ok, fmt::format("unit grades {} (want aabcdd), cdht with maxval 0 -> {}", got, cdht)};
}

Outcome
GeometryOracle()
{
    constexpr int kCases = 10000;
    gen::Rng rng(3);
    int distOk = 0;
    int eligibleOk = 0;
    double worst = 0;
    for (int i = 0; i < kCases; ++i)
    {
        Position p{gen::Uniform(rng, 0, 500), gen::Uniform(rng, 0, 500)};
        Dec dec{{gen::Uniform(rng, 0, 500), gen::Uniform(rng, 0, 500)}, gen::Uniform(rng, 0, 250)};
        if (i % 10 == 0)
        {
            dec.radius = 0;
        }
        double err = std::abs(DistanceToNearestPoint(p, dec) - oracle::NearestBoundaryGap(p, dec.center, dec.radius));
        worst = std::max(worst, err);
        distOk += err <= 1e-6;

        double vs = gen::Uniform(rng, 1, 100);
        double tau = gen::Uniform(rng, 0, 10);
        double ts = gen::Uniform(rng, 0, 100);
        double t1 = ts + gen::Uniform(rng, 0, 12);
        double dx = p.x - dec.center.x;
        double dy = p.y - dec.center.y;
        double gap = std::max(0.0, std::sqrt(dx * dx + dy * dy) - dec.radius);
        bool direct = vs * std::max(0.0, tau - (t1 - ts)) >= gap;
        eligibleOk += ForwardEligible(p, dec, vs, tau, t1, ts) == direct;
    }
    return {distOk == kCases && eligibleOk == kCases,
            fmt::format("distance {}/{} within 1e-6 m (worst {:.3g}), eligibility {}/{} agree",
                        distOk,
                        kCases,
                        worst,
                        eligibleOk,
                        kCases)};
}

Outcome
CdhtOracle()
{
    constexpr int kViews = 10000;
    gen::Rng rng(4);
    int agree = 0;
    int invariants = 0;
    double worst = 0;
    for (int i = 0; i < kViews; ++i)
    {
        auto view = gen::RandomView(rng);
        auto t = ComputeCdhtTerms(view);
        auto r = oracle::Cdht(view);
        double err = 0;
        for (auto [a, b] : {std::pair{t.ast, r.ast},
                            {t.astMin, r.astMin},
                            {t.f1, r.f1},
                            {t.f2, r.f2},
                            {t.maxval, r.maxval},
                            {t.cdht, r.cdht}})
        {
            err = std::max(err, std::abs(a - b));
        }
        worst = std::max(worst, err);
        agree += t.cls == r.cls && err <= 1e-12;
        bool inRange = t.ast >= 0 && t.ast <= 1 && t.astMin >= 0 && t.astMin <= t.ast && t.f1 >= 0 &&
                       t.f1 <= 1 && t.f2Inner >= 0 && t.f2 >= 0 && t.maxval >= 0 && t.maxval < 1 &&
                       t.cdht >= 0 && t.cdht <= t.maxval;
        invariants += inRange;
    }
    return {agree == kViews && invariants == kViews,
            fmt::format("{}/{} views agree within 1e-12 (worst {:.3g}), invariants hold on {}/{}",
                        agree,
                        kViews,
                        worst,
                        invariants,
                        kViews)};
}

Outcome
SchedulerOracle()
{
    constexpr int kQueues = 1000;
    gen::Rng rng(5);
    int agree = 0;
    size_t largest = 0;
    for (int i = 0; i < kQueues; ++i)
    {
        auto entries = gen::RandomEntries(rng, gen::UniformInt(rng, 0, 1000));
        largest = std::max(largest, entries.size());
        RreqQueue q;
        for (const auto& e : entries)
        {
            q.Enqueue(e);
        }
        std::vector<RequestId> drained;
        while (auto s = q.DequeueNext(0))
        {
            drained.push_back(s->entry.request.reqId);
        }
        agree += drained == oracle::GradedOrder(entries);
    }
    return {agree == kQueues, fmt::format("{}/{} queues drain in reference order (largest {})", agree, kQueues, largest)};
}

Outcome
FloodDominance()
{
    SweepSpec spec;
    spec.base.areaWidth = 300;
    spec.base.areaHeight = 300;
    spec.base.txRange = 80;
    spec.base.simTime = 30;
    spec.base.sessionsPerNode = 0.25;
    spec.axis = SweepAxis::NodeCount;
    spec.values = {20};
    for (uint64_t s = 1; s <= 50; ++s)
    {
        spec.seeds.push_back(s);
    }
    spec.variants = {Variant{SchedulerKind::Fsrr, ForwardingKind::Flood},
                     Variant{SchedulerKind::Fsrr, ForwardingKind::DecDirectional}};
    auto runs = RunSweep(spec, Jobs());

    std::map<uint64_t, const SweepRun*> flood;
    std::map<uint64_t, const SweepRun*> dec;
    for (const auto& r : runs)
    {
        if (!r.result)
        {
            return {false, fmt::format("run {} failed: {}", r.runId, r.error)};
        }
        (r.variant.forwarding == ForwardingKind::Flood ? flood : dec)[r.seed] = &r;
    }
    int holds = 0;
    int strictWithPruning = 0;
    for (auto [seed, f] : flood)
    {
        const auto& d = *dec.at(seed)->result;
        holds += d.metrics.rreqForwarded <= f->result->metrics.rreqForwarded;
        strictWithPruning +=
            d.metrics.rreqForwarded < f->result->metrics.rreqForwarded && d.diagnostics.directionalPrunes > 0;
    }
    return {holds == 50 && strictWithPruning >= 1,
            fmt::format("dec <= flood on {}/50 seeds, strictly fewer with pruning at a router on {}",
                        holds,
                        strictWithPruning)};
}

struct TrendResult
{
    Outcome outcome;
    std::vector<SweepRun> runs;
};

TrendResult
Trend(SweepAxis axis, std::vector<double> values)
{
    SweepSpec spec;
    spec.base.areaWidth = 300;
    spec.base.areaHeight = 300;
    spec.base.txRange = 60;
    spec.base.vMax = 25;
    spec.base.nodeCount = 20;
    spec.base.simTime = 200;
    spec.base.sessionsPerNode = 1.0;
    spec.axis = axis;
    spec.values = std::move(values);
    for (uint64_t s = 1; s <= 20; ++s)
    {
        spec.seeds.push_back(s);
    }
    spec.variants = {Variant{SchedulerKind::Fsrr, ForwardingKind::DecDirectional},
                     Variant{SchedulerKind::Fcfs, ForwardingKind::DecDirectional}};
    auto runs = RunSweep(spec, Jobs(), true);

    std::map<double, std::map<uint64_t, double>> fsrr;
    std::map<double, std::map<uint64_t, double>> fcfs;
    for (const auto& r : runs)
    {
        if (!r.result)
        {
            return {{false, fmt::format("run {} failed: {}", r.runId, r.error)}, std::move(runs)};
        }
        auto& dst = r.variant.scheduler == SchedulerKind::Fsrr ? fsrr : fcfs;
        dst[r.axisValue][r.seed] = r.result->metrics.perNodeWaitPerRouter;
    }

    bool ok = true;
    std::string detail;
    for (double v : spec.values)
    {
        std::vector<double> a;
        std::vector<double> b;
        std::vector<double> diffs;
        for (uint64_t s : spec.seeds)
        {
            a.push_back(fsrr[v].at(s));
            b.push_back(fcfs[v].at(s));
            diffs.push_back(b.back() - a.back());
        }
        double ma = Mean(a);
        double mb = Mean(b);
        ok = ok && ma < mb;
        detail += fmt::format("{}={}: fsrr {:.4g} vs fcfs {:.4g}; ", ToString(axis), v, ma, mb);
        if (v == spec.values.back())
        {
            auto ci = BootstrapMeanInterval(diffs);
            double md = Mean(diffs);
            ok = ok && md > 0 && ci.low > 0;
            detail += fmt::format("paired reduction {:.4g}, 95% bootstrap CI [{:.4g}, {:.4g}]", md, ci.low, ci.high);
        }
    }
    return {{ok, detail}, std::move(runs)};
}

Outcome
Determinism()
{
    int identical = 0;
    int total = 0;
    for (uint64_t seed : {1, 7, 42})
    {
        for (auto sched : {SchedulerKind::Fsrr, SchedulerKind::Fcfs})
        {
            ScenarioConfig c;
            c.seed = seed;
            c.scheduler = sched;
            c.sessionsPerNode = 1.0;
            c.simTime = 100;
            c.mobility = seed == 7 ? MobilityModel::RandomWalk : MobilityModel::RandomWaypoint;
            auto first = RunScenario(c);
            auto second = RunScenario(c);
            ++total;
            identical += RunCsv(seed, c, first.metrics) == RunCsv(seed, c, second.metrics) &&
                         first.eventDigest == second.eventDigest;
        }
    }
    return {identical == total, fmt::format("{}/{} repeated runs byte-identical with equal digests", identical, total)};
}

Outcome
MetricIdentity(const std::vector<const SweepRun*>& runs)
{
    size_t ok = 0;
    double worst = 0;
    for (const auto* r : runs)
    {
        if (!r->result)
        {
            continue;
        }
        const auto& res = *r->result;
        double total = 0;
        std::set<NodeId> routers;
        for (const auto& w : res.waitLog)
        {
            total += w.serviceStart - w.arrival;
            routers.insert(w.router);
        }
        double recomputed = PerNodeWaitPerRouter(total, res.metrics.nodeCount, routers.size());
        double err = std::abs(recomputed - res.metrics.perNodeWaitPerRouter);
        worst = std::max(worst, err);
        ok += err <= 1e-9;
    }
    return {!runs.empty() && ok == runs.size(),
            fmt::format("{}/{} sweep runs match within 1e-9 (worst {:.3g})", ok, runs.size(), worst)};
}

} // namespace

int
main()
{
    bool allPass = true;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& check) {
        auto start = std::chrono::steady_clock::now();
        Outcome o = check();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        allPass = allPass && o.pass;
        fmt::print("criterion {:>2} {:<26} {}  ({:.1f} s) {}\n", id, name, o.pass ? "PASS" : "FAIL", secs, o.detail);
        std::fflush(stdout);
    };

    report(1, "table conformance", TableConformance);
    report(2, "fuzzification boundaries", FuzzificationBoundaries);
    report(3, "geometry oracle", GeometryOracle);
    report(4, "cdht oracle", CdhtOracle);
    report(5, "scheduler order oracle", SchedulerOracle);
    report(6, "flood dominance", FloodDominance);

    std::vector<SweepRun> nodeRuns;
    std::vector<SweepRun> speedRuns;
    report(7, "node count trend", [&] {
        auto t = Trend(SweepAxis::NodeCount, {10, 20, 40});
        nodeRuns = std::move(t.runs);
        return t.outcome;
    });
    report(8, "speed trend", [&] {
        auto t = Trend(SweepAxis::VMax, {5, 25, 50});
        speedRuns = std::move(t.runs);
        return t.outcome;
    });
    report(9, "determinism", Determinism);
    report(10, "metric identity", [&] {
        std::vector<const SweepRun*> all;
        for (const auto* set : {&nodeRuns, &speedRuns})
        {
            for (const auto& r : *set)
            {
                all.push_back(&r);
            }
        }
        return MetricIdentity(all);
    });

    return allPass ? 0 : 1;
}
