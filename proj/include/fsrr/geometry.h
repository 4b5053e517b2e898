/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef FSRR_GEOMETRY_H
#define FSRR_GEOMETRY_H

namespace fsrr
{

/// Planar position in meters.
struct Position
{
    double x{0.0};
    double y{0.0};

    bool operator==(const Position&) const = default;
};

/**
 * Destination embedding circle: every point the destination can occupy
 * while a route request is still alive, as seen by one router.
 */
struct Dec
{
    Position center;
    double radius{0.0};
};

struct DecBuildResult
{
    Dec dec;
    /// The request lifetime is already exhausted relative to the record time.
    bool expired{false};
};

double Distance(Position p, Position q);

/**
 * Remaining lifetime budget tau - (t1 - ts) of a request originated at ts,
 * judged against a destination record taken at t1. Clamped below at 0.
 */
double RemainingBudget(double tau, double t1, double ts);

/**
 * Builds the circle centered at the destination's last known location with
 * radius vMaxDest * (tau - (t1 - ts)). A negative budget yields radius 0 and
 * expired = true; the caller is expected to drop the request.
 */
DecBuildResult BuildDec(Position lastLoc, double vMaxDest, double tau, double t1, double ts);

/// Distance from p to the closest point of the closed disk; 0 inside.
double DistanceToNearestPoint(Position p, const Dec& dec);

/**
 * A neighbor is eligible to receive the request when a signal travelling at
 * signalSpeed for the remaining budget covers its gap to the circle.
 */
bool ForwardEligible(Position neighborPos,
                     const Dec& dec,
                     double signalSpeed,
                     double tau,
                     double t1,
                     double ts);

} // namespace fsrr

#endif // FSRR_GEOMETRY_H
