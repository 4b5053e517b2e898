/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "fsrr/config.h"
#include "fsrr/fuzzy.h"
#include "fsrr/geometry.h"
#include "fsrr/sim.h"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fmt/format.h>

namespace py = pybind11;
using namespace fsrr;

namespace
{

RuleBase
TableFromIndex(int index)
{
    if (index < 1 || index > 4)
    {
        throw py::value_error("table must be 1..4");
    }
    return static_cast<RuleBase>(index);
}

py::dict
MetricsDict(const Metrics& m)
{
    py::dict d;
    d["total_wait"] = m.totalWait;
    d["routers_used"] = m.routersUsed;
    d["node_count"] = m.nodeCount;
    d["per_node_wait_per_router"] = m.perNodeWaitPerRouter;
    d["rreq_forwarded"] = m.rreqForwarded;
    d["rreq_dropped_expired"] = m.rreqDroppedExpired;
    d["rreq_dropped_duplicate"] = m.rreqDroppedDuplicate;
    d["discoveries_started"] = m.discoveriesStarted;
    d["discoveries_completed"] = m.discoveriesCompleted;
    d["mean_discovery_latency"] = m.meanDiscoveryLatency;
    return d;
}

} // namespace

PYBIND11_MODULE(_fsrr, m)
{
    m.doc() = "Fuzzy-scheduled route discovery simulator";

    py::enum_<FuzzyGrade>(m, "FuzzyGrade")
        .value("A", FuzzyGrade::A)
        .value("B", FuzzyGrade::B)
        .value("C", FuzzyGrade::C)
        .value("D", FuzzyGrade::D)
        .def_property_readonly("letter", [](FuzzyGrade g) { return std::string(1, ToChar(g)); });

    py::class_<Position>(m, "Position")
        .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
        .def_readwrite("x", &Position::x)
        .def_readwrite("y", &Position::y)
        .def("__repr__", [](const Position& p) { return fmt::format("Position({}, {})", p.x, p.y); });

    py::class_<Dec>(m, "Dec")
        .def(py::init<Position, double>(), py::arg("center"), py::arg("radius"))
        .def_readwrite("center", &Dec::center)
        .def_readwrite("radius", &Dec::radius);

    m.def("distance", &Distance, py::arg("p"), py::arg("q"));
    m.def(
        "build_dec",
        [](Position lastLoc, double vMax, double tau, double t1, double ts) {
            auto r = BuildDec(lastLoc, vMax, tau, t1, ts);
            return py::make_tuple(r.dec, r.expired);
        },
        py::arg("last_loc"),
        py::arg("v_max"),
        py::arg("tau"),
        py::arg("t1"),
        py::arg("ts"),
        "Returns (Dec, expired).");
    m.def("distance_to_nearest_point", &DistanceToNearestPoint, py::arg("p"), py::arg("dec"));
    m.def("forward_eligible",
          &ForwardEligible,
          py::arg("neighbor_pos"),
          py::arg("dec"),
          py::arg("signal_speed"),
          py::arg("tau"),
          py::arg("t1"),
          py::arg("ts"));

    m.def(
        "fuzzify_unit", [](double x) { return FuzzifyUnit(x); }, py::arg("x"));
    m.def(
        "fuzzify_cdht", [](double x, double maxval) { return FuzzifyCdht(x, maxval); }, py::arg("x"), py::arg("maxval"));
    m.def(
        "lookup",
        [](int table, FuzzyGrade column, FuzzyGrade row) { return Lookup(TableFromIndex(table), column, row); },
        py::arg("table"),
        py::arg("column"),
        py::arg("row"));
    m.def(
        "evaluate",
        [](double rtr, double ast, double cdht, double maxval, double decr, double dr) {
            auto t = Evaluate(CrispInputs{rtr, ast, cdht, maxval, decr, dr});
            py::dict d;
            d["temp1"] = t.temp1;
            d["tq"] = t.tq;
            d["pq"] = t.pq;
            d["delay"] = t.delay;
            return d;
        },
        py::arg("rtr"),
        py::arg("ast"),
        py::arg("cdht"),
        py::arg("maxval"),
        py::arg("decr"),
        py::arg("dr"));

    m.def(
        "run_scenario",
        [](const std::string& text, std::optional<uint64_t> seed) {
            ScenarioConfig config;
            try
            {
                config = ParseScenarioText(text);
            }
            catch (const ConfigError& e)
            {
                throw py::value_error(e.what());
            }
            if (seed)
            {
                config.seed = *seed;
            }
            RunResult r;
            {
                py::gil_scoped_release release;
                r = RunScenario(config);
            }
            py::dict out = MetricsDict(r.metrics);
            out["event_digest"] = py::int_(r.eventDigest);
            return out;
        },
        py::arg("text"),
        py::arg("seed") = py::none(),
        "Run a scenario given as INI text and return its metrics.");
    m.def("scenario_keys", &DescribeScenarioKeys);
}
