/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "fsrr/geometry.h"

#include <algorithm>
#include <cmath>

namespace fsrr
{

double
Distance(Position p, Position q)
{
    return std::hypot(p.x - q.x, p.y - q.y);
}

double
RemainingBudget(double tau, double t1, double ts)
{
    return std::max(0.0, tau - (t1 - ts));
}

DecBuildResult
BuildDec(Position lastLoc, double vMaxDest, double tau, double t1, double ts)
{
    double budget = tau - (t1 - ts);
    if (budget < 0.0)
    {
        return DecBuildResult{Dec{lastLoc, 0.0}, true};
    }
    return DecBuildResult{Dec{lastLoc, vMaxDest * budget}, false};
}

double
DistanceToNearestPoint(Position p, const Dec& dec)
{
    return std::max(0.0, Distance(p, dec.center) - dec.radius);
}

bool
ForwardEligible(Position neighborPos,
                const Dec& dec,
                double signalSpeed,
                double tau,
                double t1,
                double ts)
{
    double reach = signalSpeed * RemainingBudget(tau, t1, ts);
    return reach >= DistanceToNearestPoint(neighborPos, dec);
}

} // namespace fsrr
