# Copyright (c) 2026 The fsrr-sim authors
#
# SPDX-License-Identifier: GPL-2.0-only

"""Fuzzy-scheduled route discovery simulator."""

from ._fsrr import (
    Dec,
    FuzzyGrade,
    Position,
    build_dec,
    distance,
    distance_to_nearest_point,
    evaluate,
    forward_eligible,
    fuzzify_cdht,
    fuzzify_unit,
    lookup,
    run_scenario,
    scenario_keys,
)

__all__ = [
    "Dec",
    "FuzzyGrade",
    "Position",
    "build_dec",
    "distance",
    "distance_to_nearest_point",
    "evaluate",
    "forward_eligible",
    "fuzzify_cdht",
    "fuzzify_unit",
    "lookup",
    "run_scenario",
    "scenario_keys",
]
