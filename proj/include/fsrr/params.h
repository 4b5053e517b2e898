/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef FSRR_PARAMS_H
#define FSRR_PARAMS_H

#include "fsrr/fuzzy.h"
#include "fsrr/geometry.h"
#include "fsrr/types.h"

#include <map>
#include <optional>
#include <vector>

namespace fsrr
{

/// Largest timestamp of communication with a peer.
struct CommRecord
{
    NodeId peer{0};
    double lastCommTime{0.0};
};

/// Last known location fix of a destination.
struct DestinationRecord
{
    NodeId dest{0};
    Position lastLoc;
    double tmr{0.0};  ///< time the fix was taken
    double vMaxDest{0.0};

    bool operator==(const DestinationRecord&) const = default;
};

struct NeighborInfo
{
    NodeId id{0};
    Position pos;
    /// Neighbor's last communication time with the destination, if any.
    std::optional<double> commTime;
};

/**
 * Immutable snapshot of what a router knows when it grades one request.
 */
struct RouterView
{
    NodeId selfId{0};
    Position selfPos;
    double now{0.0};
    std::vector<NeighborInfo> neighbors;
    std::optional<double> ownCommTime;
    std::optional<DestinationRecord> destRecord;
    double vNetMax{0.0};
    double signalSpeed{0.0};
    double areaDiagonal{0.0};
};

struct CdhtTerms
{
    std::vector<NodeId> cls;
    std::map<NodeId, double> tb;
    double ast{0.0};
    double astMin{0.0};
    double f1{0.0};
    double f2{0.0};
    double f2Inner{0.0}; ///< AST - AST_MN
    double maxval{0.0};
    double cdht{0.0};
};

/// tmr / now clamped to [0, 1]; 1 at now == 0. Requires a destination record.
double ComputeRtr(const RouterView& view, ClampCounter* clamps = nullptr);

/// Time benefit 1 - ci / cj of a neighbor over the router; absent ci counts as 0.
double ComputeTb(std::optional<double> ci, double cj);

CdhtTerms ComputeCdhtTerms(const RouterView& view, ClampCounter* clamps = nullptr);

/// v_max(d) / V_MAX; 0 when the whole network is static.
double ComputeDecr(const RouterView& view, ClampCounter* clamps = nullptr);

/// Distance to the destination's last known location over the area diagonal.
double ComputeDr(const RouterView& view, ClampCounter* clamps = nullptr);

/// All crisp controller inputs for a view that carries a destination record.
CrispInputs ComputeCrispInputs(const RouterView& view, ClampCounter* clamps = nullptr);

} // namespace fsrr

#endif // FSRR_PARAMS_H
