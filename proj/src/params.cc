/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "fsrr/params.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fsrr
{

namespace
{

const DestinationRecord&
RequireRecord(const RouterView& view)
{
    if (!view.destRecord)
    {
        throw std::logic_error("crisp input requested for a destination with no known location");
    }
    return *view.destRecord;
}

} // namespace

double
ComputeRtr(const RouterView& view, ClampCounter* clamps)
{
    const auto& rec = RequireRecord(view);
    if (view.now <= 0.0)
    {
        return 1.0;
    }
    return ClampCounted(rec.tmr / view.now, 0.0, 1.0, clamps);
}

double
ComputeTb(std::optional<double> ci, double cj)
{
    double own = ci.value_or(0.0);
    return std::min(1.0 - own / cj, 1.0);
}

CdhtTerms
ComputeCdhtTerms(const RouterView& view, ClampCounter* clamps)
{
    CdhtTerms terms;
    for (const auto& n : view.neighbors)
    {
        if (!n.commTime || *n.commTime <= 0.0)
        {
            continue;
        }
        double tb = ComputeTb(view.ownCommTime, *n.commTime);
        if (tb >= 0.0)
        {
            terms.cls.push_back(n.id);
            terms.tb[n.id] = tb;
        }
    }
    if (terms.cls.empty())
    {
        return terms;
    }

    auto [lo, hi] = std::minmax_element(terms.tb.begin(),
                                        terms.tb.end(),
                                        [](const auto& a, const auto& b) { return a.second < b.second; });
    terms.ast = hi->second;
    terms.astMin = lo->second;
    terms.f2Inner = terms.ast - terms.astMin;

    double clsSize = static_cast<double>(terms.cls.size());
    terms.f1 = clsSize / static_cast<double>(view.neighbors.size());

    // Summand uses TB - AST_MN, the only reading consistent with F2's
    // stated range of [0, f2Inner / (f2Inner + 1)] per element.
    double sum = 0.0;
    for (NodeId id : terms.cls)
    {
        sum += terms.tb.at(id) - terms.astMin;
    }
    terms.f2 = sum / (terms.f2Inner + 1.0);
    terms.maxval = std::sqrt(terms.f2Inner / (terms.f2Inner + 1.0));
    terms.cdht = ClampCounted(terms.f1 * std::sqrt(terms.f2 / clsSize), 0.0, terms.maxval, clamps);
    return terms;
}

double
ComputeDecr(const RouterView& view, ClampCounter* clamps)
{
    const auto& rec = RequireRecord(view);
    if (view.vNetMax <= 0.0)
    {
        return 0.0;
    }
    return ClampCounted(rec.vMaxDest / view.vNetMax, 0.0, 1.0, clamps);
}

double
ComputeDr(const RouterView& view, ClampCounter* clamps)
{
    const auto& rec = RequireRecord(view);
    if (view.areaDiagonal <= 0.0)
    {
        throw std::invalid_argument("area diagonal must be positive");
    }
    return ClampCounted(Distance(view.selfPos, rec.lastLoc) / view.areaDiagonal, 0.0, 1.0, clamps);
}

CrispInputs
ComputeCrispInputs(const RouterView& view, ClampCounter* clamps)
{
    CrispInputs in;
    in.rtr = ComputeRtr(view, clamps);
    auto terms = ComputeCdhtTerms(view, clamps);
    in.ast = terms.ast;
    in.cdht = terms.cdht;
    in.maxval = terms.maxval;
    in.decr = ComputeDecr(view, clamps);
    in.dr = ComputeDr(view, clamps);
    return in;
}

} // namespace fsrr
