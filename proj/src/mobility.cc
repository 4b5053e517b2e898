/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "fsrr/mobility.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fsrr
{

double
Velocity::Speed() const
{
    return std::hypot(vx, vy);
}

double
Area::Diagonal() const
{
    return std::hypot(width, height);
}

double
UniformUnit(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double
UniformRange(Rng& rng, double lo, double hi)
{
    return lo + (hi - lo) * UniformUnit(rng);
}

namespace
{

void
DrawWaypoint(MobileState& n, const Area& area, Rng& rng)
{
    n.waypoint = Position{UniformRange(rng, 0.0, area.width), UniformRange(rng, 0.0, area.height)};
    // (0, vMax]: a zero speed would park the node forever
    n.speed = n.vMax * (1.0 - UniformUnit(rng));
}

void
DrawWalkLeg(MobileState& n, Rng& rng)
{
    double speed = UniformRange(rng, 0.0, n.vMax);
    double heading = UniformRange(rng, 0.0, 2 * std::numbers::pi);
    n.velocity = Velocity{speed * std::cos(heading), speed * std::sin(heading)};
}

// Mirror a coordinate into [0, limit], flipping the velocity component on
// every bounce.
void
Reflect(double& coord, double& v, double limit)
{
    for (int guard = 0; guard < 8 && (coord < 0.0 || coord > limit); ++guard)
    {
        if (coord < 0.0)
        {
            coord = -coord;
            v = -v;
        }
        else if (coord > limit)
        {
            coord = 2 * limit - coord;
            v = -v;
        }
    }
    coord = std::clamp(coord, 0.0, limit);
}

void
StepWaypoint(MobileState& n, double dt, const Area& area, Rng& rng)
{
    double d = Distance(n.pos, n.waypoint);
    double travel = n.speed * dt;
    if (d <= travel)
    {
        n.pos = n.waypoint;
        n.velocity = Velocity{};
        DrawWaypoint(n, area, rng);
        return;
    }
    double ux = (n.waypoint.x - n.pos.x) / d;
    double uy = (n.waypoint.y - n.pos.y) / d;
    n.velocity = Velocity{ux * n.speed, uy * n.speed};
    n.pos.x += ux * travel;
    n.pos.y += uy * travel;
}

void
StepWalk(MobileState& n, double dt, const Area& area, double walkEpoch, Rng& rng)
{
    n.epochLeft -= dt;
    if (n.epochLeft <= 0.0)
    {
        DrawWalkLeg(n, rng);
        n.epochLeft += walkEpoch;
    }
    n.pos.x += n.velocity.vx * dt;
    n.pos.y += n.velocity.vy * dt;
    Reflect(n.pos.x, n.velocity.vx, area.width);
    Reflect(n.pos.y, n.velocity.vy, area.height);
}

} // namespace

void
InitMobility(MobileState& node, MobilityModel model, const Area& area, double walkEpoch, Rng& rng)
{
    node.velocity = Velocity{};
    if (node.vMax <= 0.0)
    {
        return;
    }
    if (model == MobilityModel::RandomWaypoint)
    {
        DrawWaypoint(node, area, rng);
    }
    else
    {
        DrawWalkLeg(node, rng);
        node.epochLeft = walkEpoch;
    }
}

void
StepMobility(std::span<MobileState> nodes,
             double dt,
             MobilityModel model,
             const Area& area,
             double walkEpoch,
             Rng& rng)
{
    for (auto& n : nodes)
    {
        if (n.vMax <= 0.0)
        {
            continue;
        }
        if (model == MobilityModel::RandomWaypoint)
        {
            StepWaypoint(n, dt, area, rng);
        }
        else
        {
            StepWalk(n, dt, area, walkEpoch, rng);
        }
    }
}

} // namespace fsrr
