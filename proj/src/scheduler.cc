/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "fsrr/scheduler.h"

#include <algorithm>

namespace fsrr
{

RreqQueue::GradedKey
RreqQueue::MakeGradedKey(const QueueEntry& e)
{
    int unknown = e.grade ? 0 : 1;
    int negGrade = e.grade ? -static_cast<int>(*e.grade) : 0;
    return {unknown, negGrade, e.arrivalTime, e.request.reqId};
}

RreqQueue::ArrivalKey
RreqQueue::MakeArrivalKey(const QueueEntry& e)
{
    return {e.arrivalTime, e.request.reqId};
}

EnqueueResult
RreqQueue::Enqueue(QueueEntry entry)
{
    ++m_stats.offered;
    RequestId id = entry.request.reqId;
    if (!m_seen.insert(id).second)
    {
        ++m_stats.droppedDuplicate;
        return EnqueueResult::Duplicate;
    }
    if (entry.arrivalTime > entry.request.ExpiryTime())
    {
        ++m_stats.droppedExpired;
        return EnqueueResult::Expired;
    }
    m_graded.insert(MakeGradedKey(entry));
    m_arrival.insert(MakeArrivalKey(entry));
    m_entries.emplace(id, std::move(entry));
    ++m_stats.accepted;
    return EnqueueResult::Accepted;
}

std::optional<ServedEntry>
RreqQueue::Pop(RequestId id, double now)
{
    auto it = m_entries.find(id);
    QueueEntry e = std::move(it->second);
    m_entries.erase(it);
    m_graded.erase(MakeGradedKey(e));
    m_arrival.erase(MakeArrivalKey(e));

    if (now > e.request.ExpiryTime())
    {
        ++m_stats.droppedExpired;
        return std::nullopt;
    }
    ServedEntry served{std::move(e), now};
    double wait = served.Wait();
    ++m_stats.served;
    m_stats.totalWait += wait;
    m_stats.maxWait = std::max(m_stats.maxWait, wait);
    return served;
}

std::optional<ServedEntry>
RreqQueue::DequeueNext(double now)
{
    while (!m_graded.empty())
    {
        RequestId id = std::get<3>(*m_graded.begin());
        if (auto served = Pop(id, now))
        {
            return served;
        }
    }
    return std::nullopt;
}

std::optional<ServedEntry>
RreqQueue::FcfsDequeueNext(double now)
{
    while (!m_arrival.empty())
    {
        RequestId id = std::get<1>(*m_arrival.begin());
        if (auto served = Pop(id, now))
        {
            return served;
        }
    }
    return std::nullopt;
}

std::optional<ServedEntry>
RreqQueue::Dequeue(double now, SchedulerKind kind)
{
    return kind == SchedulerKind::Fsrr ? DequeueNext(now) : FcfsDequeueNext(now);
}

bool
RreqQueue::Conserved() const
{
    return m_stats.offered ==
           m_stats.served + m_stats.droppedDuplicate + m_stats.droppedExpired + m_entries.size();
}

void
ForwardCache::RecordForward(NodeId source, double now)
{
    auto [it, inserted] = m_entries.try_emplace(source, ForwardCacheEntry{source, 0, now});
    ++it->second.rreqCount;
}

std::optional<ForwardCacheEntry>
ForwardCache::Find(NodeId source) const
{
    auto it = m_entries.find(source);
    if (it == m_entries.end())
    {
        return std::nullopt;
    }
    return it->second;
}

QueueEntry
GradeOnArrival(const RouteRequest& request, const RouterView& view, ClampCounter* clamps)
{
    QueueEntry entry{request, view.now, std::nullopt, std::nullopt};
    if (!view.destRecord)
    {
        return entry;
    }
    auto trace = Evaluate(ComputeCrispInputs(view, clamps), clamps);
    entry.grade = trace.delay;
    entry.trace = trace;
    return entry;
}

} // namespace fsrr
