/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef FSRR_TYPES_H
#define FSRR_TYPES_H

#include <algorithm>
#include <cstdint>

namespace fsrr
{

using NodeId = uint32_t;
using RequestId = uint64_t;

/**
 * Counts crisp inputs that fell outside their nominal range and were clamped.
 * Passed by pointer into the pure computations; nullptr disables counting.
 */
struct ClampCounter
{
    uint64_t count{0};
};

inline double
ClampCounted(double x, double lo, double hi, ClampCounter* clamps)
{
    if (x < lo || x > hi)
    {
        if (clamps != nullptr)
        {
            ++clamps->count;
        }
        return std::clamp(x, lo, hi);
    }
    return x;
}

} // namespace fsrr

#endif // FSRR_TYPES_H
