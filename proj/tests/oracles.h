/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

// Test-only reference computations. Nothing here calls into the library
// paths it is used to check.

#ifndef FSRR_TESTS_ORACLES_H
#define FSRR_TESTS_ORACLES_H

#include "fsrr/geometry.h"
#include "fsrr/params.h"
#include "fsrr/scheduler.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace oracle
{

/**
 * Gap from p to a closed disk by sampling its boundary: 10^4 uniform
 * angles, then 10^4 uniform angles across the bracket of the best coarse
 * sample. 0 for points inside or on the disk.
 */
inline double
NearestBoundaryGap(fsrr::Position p, fsrr::Position c, double r)
{
    double dx = p.x - c.x;
    double dy = p.y - c.y;
    if (std::sqrt(dx * dx + dy * dy) <= r)
    {
        return 0.0;
    }
    constexpr int kSamples = 10000;
    auto gapAt = [&](double theta) {
        double qx = c.x + r * std::cos(theta);
        double qy = c.y + r * std::sin(theta);
        return std::sqrt((p.x - qx) * (p.x - qx) + (p.y - qy) * (p.y - qy));
    };
    double step = 2 * std::numbers::pi / kSamples;
    double best = gapAt(0);
    double bestTheta = 0;
    for (int k = 1; k < kSamples; ++k)
    {
        double g = gapAt(k * step);
        if (g < best)
        {
            best = g;
            bestTheta = k * step;
        }
    }
    double fine = 2 * step / kSamples;
    for (int k = 0; k <= kSamples; ++k)
    {
        best = std::min(best, gapAt(bestTheta - step + k * fine));
    }
    return best;
}

struct CdhtReference
{
    std::vector<fsrr::NodeId> cls;
    double ast{0};
    double astMin{0};
    double f1{0};
    double f2{0};
    double maxval{0};
    double cdht{0};
};

/// Straight-line evaluation of CLS, AST, AST_MN, F1, F2 and CDHT.
inline CdhtReference
Cdht(const fsrr::RouterView& view)
{
    CdhtReference ref;
    double ci = view.ownCommTime ? *view.ownCommTime : 0.0;
    std::vector<double> tbs;
    for (const auto& n : view.neighbors)
    {
        if (n.commTime && *n.commTime > 0 && *n.commTime >= ci)
        {
            ref.cls.push_back(n.id);
            tbs.push_back(1.0 - ci / *n.commTime);
        }
    }
    if (tbs.empty())
    {
        return ref;
    }
    ref.ast = *std::max_element(tbs.begin(), tbs.end());
    ref.astMin = *std::min_element(tbs.begin(), tbs.end());
    ref.f1 = double(tbs.size()) / double(view.neighbors.size());
    double spread = ref.ast - ref.astMin;
    double numer = 0;
    for (double tb : tbs)
    {
        numer += tb - ref.astMin;
    }
    ref.f2 = numer / (spread + 1);
    ref.maxval = std::pow(spread / (spread + 1), 0.5);
    ref.cdht = std::min(ref.f1 * std::pow(ref.f2 / double(tbs.size()), 0.5), ref.maxval);
    return ref;
}

/// Serving order of a queue under the graded discipline, by stable sort.
inline std::vector<fsrr::RequestId>
GradedOrder(std::vector<fsrr::QueueEntry> entries)
{
    auto rank = [](const fsrr::QueueEntry& e) { return e.grade ? 4 - int(*e.grade) : 5; };
    std::stable_sort(entries.begin(), entries.end(), [&](const auto& a, const auto& b) {
        if (rank(a) != rank(b))
        {
            return rank(a) < rank(b);
        }
        if (a.arrivalTime != b.arrivalTime)
        {
            return a.arrivalTime < b.arrivalTime;
        }
        return a.request.reqId < b.request.reqId;
    });
    std::vector<fsrr::RequestId> ids;
    for (const auto& e : entries)
    {
        ids.push_back(e.request.reqId);
    }
    return ids;
}

inline std::vector<fsrr::RequestId>
ArrivalOrder(std::vector<fsrr::QueueEntry> entries)
{
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.arrivalTime != b.arrivalTime)
        {
            return a.arrivalTime < b.arrivalTime;
        }
        return a.request.reqId < b.request.reqId;
    });
    std::vector<fsrr::RequestId> ids;
    for (const auto& e : entries)
    {
        ids.push_back(e.request.reqId);
    }
    return ids;
}

} // namespace oracle

#endif // FSRR_TESTS_ORACLES_H
