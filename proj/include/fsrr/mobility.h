/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef FSRR_MOBILITY_H
#define FSRR_MOBILITY_H

#include "fsrr/geometry.h"

#include <cstdint>
#include <random>
#include <span>

namespace fsrr
{

enum class MobilityModel : uint8_t
{
    RandomWaypoint,
    RandomWalk,
};

struct Velocity
{
    double vx{0.0};
    double vy{0.0};

    double Speed() const;
};

struct Area
{
    double width{0.0};
    double height{0.0};

    bool Contains(Position p) const
    {
        return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
    }

    double Diagonal() const;
};

/// Per-node kinematic state owned by the mobility models.
struct MobileState
{
    Position pos;
    Velocity velocity;
    double vMax{0.0};
    Position waypoint;
    double speed{0.0};
    double epochLeft{0.0};
};

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits; stable across standard libraries.
double UniformUnit(Rng& rng);
double UniformRange(Rng& rng, double lo, double hi);

/// Draws the first waypoint/heading for a node at its initial position.
void InitMobility(MobileState& node, MobilityModel model, const Area& area, double walkEpoch, Rng& rng);

/**
 * Advances every node by dt.
 *
 * Random waypoint: move toward the waypoint at a speed drawn in (0, vMax];
 * on arrival stop for the rest of the step and draw the next waypoint.
 * Random walk: speed in [0, vMax] and heading redrawn every walkEpoch
 * seconds, reflecting off the area edges.
 */
void StepMobility(std::span<MobileState> nodes,
                  double dt,
                  MobilityModel model,
                  const Area& area,
                  double walkEpoch,
                  Rng& rng);

} // namespace fsrr

#endif // FSRR_MOBILITY_H
