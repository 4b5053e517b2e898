/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef FSRR_SCHEDULER_H
#define FSRR_SCHEDULER_H

#include "fsrr/fuzzy.h"
#include "fsrr/geometry.h"
#include "fsrr/params.h"
#include "fsrr/types.h"

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace fsrr
{

struct RouteRequest
{
    RequestId reqId{0};
    NodeId source{0};
    NodeId dest{0};
    double originTime{0.0};
    double tau{0.0};
    /// Nodes traversed so far, starting with the source.
    std::vector<NodeId> path;
    /// Source position when the request was originated.
    Position originPos;
    std::optional<DestinationRecord> carriedRecord;

    double ExpiryTime() const
    {
        return originTime + tau;
    }
};

struct QueueEntry
{
    RouteRequest request;
    double arrivalTime{0.0};
    /// Absent when the router knew nothing about the destination.
    std::optional<FuzzyGrade> grade;
    std::optional<ControllerTrace> trace;
};

/// An entry leaving the queue for service.
struct ServedEntry
{
    QueueEntry entry;
    double serviceStart{0.0};

    double Wait() const
    {
        return serviceStart - entry.arrivalTime;
    }
};

enum class SchedulerKind : uint8_t
{
    Fcfs,
    Fsrr,
};

enum class EnqueueResult : uint8_t
{
    Accepted,
    Duplicate,
    Expired,
};

struct QueueStats
{
    uint64_t offered{0};
    uint64_t accepted{0};
    uint64_t served{0};
    uint64_t droppedDuplicate{0};
    uint64_t droppedExpired{0};
    double totalWait{0.0};
    double maxWait{0.0};
};

/**
 * Route-request queue of one router.
 *
 * Entries are indexed twice: by the graded order (known location before
 * unknown, grade d..a, arrival, req id) and by plain arrival order, so the
 * same queue can be drained by either discipline. Request ids ever offered
 * are remembered for duplicate suppression.
 */
class RreqQueue
{
  public:
    EnqueueResult Enqueue(QueueEntry entry);

    /// Graded order. Entries found expired at now are dropped, not returned.
    std::optional<ServedEntry> DequeueNext(double now);
    /// Arrival order regardless of grade.
    std::optional<ServedEntry> FcfsDequeueNext(double now);
    std::optional<ServedEntry> Dequeue(double now, SchedulerKind kind);

    bool HasSeen(RequestId id) const
    {
        return m_seen.contains(id);
    }

    size_t Size() const
    {
        return m_entries.size();
    }

    bool Empty() const
    {
        return m_entries.empty();
    }

    const QueueStats& Stats() const
    {
        return m_stats;
    }

    /// offered == served + duplicates + expired + residual
    bool Conserved() const;

  private:
    // (unknown?, -grade, arrival, id)
    using GradedKey = std::tuple<int, int, double, RequestId>;
    using ArrivalKey = std::tuple<double, RequestId>;

    static GradedKey MakeGradedKey(const QueueEntry& e);
    static ArrivalKey MakeArrivalKey(const QueueEntry& e);

    std::optional<ServedEntry> Pop(RequestId id, double now);

    std::unordered_map<RequestId, QueueEntry> m_entries;
    std::set<GradedKey> m_graded;
    std::set<ArrivalKey> m_arrival;
    std::unordered_set<RequestId> m_seen;
    QueueStats m_stats;
};

struct ForwardCacheEntry
{
    NodeId source{0};
    uint64_t rreqCount{0};
    double firstForwardTime{0.0};
};

/// Per-source tally of route requests this router has forwarded.
class ForwardCache
{
  public:
    void RecordForward(NodeId source, double now);
    std::optional<ForwardCacheEntry> Find(NodeId source) const;

    const std::map<NodeId, ForwardCacheEntry>& Entries() const
    {
        return m_entries;
    }

  private:
    std::map<NodeId, ForwardCacheEntry> m_entries;
};

/**
 * Grades a request on arrival. Without a destination record the entry goes
 * to the unknown-location class; otherwise the crisp inputs are computed
 * from the view and run through the controller chain.
 */
QueueEntry GradeOnArrival(const RouteRequest& request,
                          const RouterView& view,
                          ClampCounter* clamps = nullptr);

} // namespace fsrr

#endif // FSRR_SCHEDULER_H
