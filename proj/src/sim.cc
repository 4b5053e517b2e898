/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "fsrr/sim.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fsrr
{

namespace
{

// Independent generator per concern so that, for one seed, mobility and
// traffic are identical whatever the scheduler or forwarding rule does.
enum class Stream : uint32_t
{
    SpeedCaps = 1,
    Placement = 2,
    Mobility = 3,
    Traffic = 4,
};

Rng
MakeStream(uint64_t seed, Stream stream)
{
    std::seed_seq seq{static_cast<uint32_t>(seed),
                      static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(stream)};
    return Rng(seq);
}

void
Require(std::vector<std::string>& errors, bool ok, const std::string& field, const std::string& what)
{
    if (!ok)
    {
        errors.push_back(field + ": " + what);
    }
}

bool
Finite(double x)
{
    return std::isfinite(x);
}

} // namespace

std::vector<std::string>
Validate(const ScenarioConfig& c)
{
    std::vector<std::string> e;
    Require(e, Finite(c.areaWidth) && c.areaWidth > 0, "area_width", "must be > 0");
    Require(e, Finite(c.areaHeight) && c.areaHeight > 0, "area_height", "must be > 0");
    Require(e, c.nodeCount >= 2, "node_count", "must be >= 2");
    Require(e, Finite(c.vMax) && c.vMax >= 0, "v_max", "must be >= 0");
    Require(e, Finite(c.txRange) && c.txRange > 0, "tx_range", "must be > 0");
    Require(e, Finite(c.tau) && c.tau > 0, "tau", "must be > 0");
    Require(e, Finite(c.signalSpeed) && c.signalSpeed > 0, "signal_speed", "must be > 0");
    Require(e, Finite(c.simTime) && c.simTime > 0, "sim_time", "must be > 0");
    Require(e, Finite(c.serviceTime) && c.serviceTime > 0, "service_time", "must be > 0");
    Require(e, Finite(c.perTransmitTime) && c.perTransmitTime >= 0, "per_transmit_time", "must be >= 0");
    Require(e, Finite(c.hopLatency) && c.hopLatency > 0, "hop_latency", "must be > 0");
    Require(e, Finite(c.helloInterval) && c.helloInterval > 0, "hello_interval", "must be > 0");
    Require(e, Finite(c.timestep) && c.timestep > 0, "timestep", "must be > 0");
    Require(e, c.timestep <= c.helloInterval, "timestep", "must be <= hello_interval");
    Require(e, Finite(c.walkEpoch) && c.walkEpoch > 0, "walk_epoch", "must be > 0");
    Require(e, Finite(c.cbrRate) && c.cbrRate > 0, "cbr_rate", "must be > 0");
    Require(e, Finite(c.sessionsPerNode) && c.sessionsPerNode >= 0, "sessions_per_node", "must be >= 0");
    Require(e,
            Finite(c.sessionStartWindow) && c.sessionStartWindow >= 0,
            "session_start_window",
            "must be >= 0");
    for (size_t i = 0; i < c.sessions.size(); ++i)
    {
        const auto& s = c.sessions[i];
        std::string f = "session." + std::to_string(i);
        Require(e, s.source < c.nodeCount, f + ".source", "must be a node id below node_count");
        Require(e, s.dest < c.nodeCount, f + ".dest", "must be a node id below node_count");
        Require(e, s.source != s.dest, f + ".dest", "must differ from source");
        Require(e, Finite(s.start) && s.start >= 0, f + ".start", "must be >= 0");
        Require(e, Finite(s.rate) && s.rate > 0, f + ".rate", "must be > 0");
    }
    for (const auto& [id, pos] : c.initialPositions)
    {
        std::string f = "node." + std::to_string(id);
        Require(e, id < c.nodeCount, f, "node id must be below node_count");
        Require(e,
                Finite(pos.x) && Finite(pos.y) && pos.x >= 0 && pos.x <= c.areaWidth && pos.y >= 0 &&
                    pos.y <= c.areaHeight,
                f,
                "position must lie inside the area");
    }
    return e;
}

double
PerNodeWaitPerRouter(double totalWait, uint64_t nodeCount, uint64_t routersUsed)
{
    if (routersUsed == 0 || nodeCount == 0)
    {
        return 0.0;
    }
    return totalWait / (static_cast<double>(nodeCount) * static_cast<double>(routersUsed));
}

Simulator::Simulator(ScenarioConfig config)
    : m_config(std::move(config))
{
    auto errors = Validate(m_config);
    if (!errors.empty())
    {
        std::ostringstream msg;
        msg << "invalid scenario:";
        for (const auto& err : errors)
        {
            msg << "\n  " << err;
        }
        throw std::invalid_argument(msg.str());
    }

    m_area = Area{m_config.areaWidth, m_config.areaHeight};
    m_mobilityRng = MakeStream(m_config.seed, Stream::Mobility);
    auto capsRng = MakeStream(m_config.seed, Stream::SpeedCaps);
    auto placeRng = MakeStream(m_config.seed, Stream::Placement);
    auto trafficRng = MakeStream(m_config.seed, Stream::Traffic);

    uint32_t n = m_config.nodeCount;
    m_nodes.resize(n);
    m_mobile.resize(n);
    for (NodeId i = 0; i < n; ++i)
    {
        m_nodes[i].id = i;
        auto& mob = m_mobile[i];
        mob.vMax = m_config.vMax * (1.0 - UniformUnit(capsRng));
        Position drawn{UniformRange(placeRng, 0.0, m_area.width), UniformRange(placeRng, 0.0, m_area.height)};
        auto fixed = m_config.initialPositions.find(i);
        mob.pos = fixed != m_config.initialPositions.end() ? fixed->second : drawn;
        m_vNetMax = std::max(m_vNetMax, mob.vMax);
    }
    for (auto& mob : m_mobile)
    {
        InitMobility(mob, m_config.mobility, m_area, m_config.walkEpoch, m_mobilityRng);
    }

    std::vector<CbrSession> sessions = m_config.sessions;
    uint32_t randomCount = m_config.randomSessions;
    if (m_config.sessionsPerNode > 0.0)
    {
        randomCount = std::max<uint32_t>(
            1,
            static_cast<uint32_t>(std::lround(m_config.sessionsPerNode * n)));
    }
    for (uint32_t k = 0; k < randomCount; ++k)
    {
        auto src = static_cast<NodeId>(UniformUnit(trafficRng) * n);
        auto dst = static_cast<NodeId>(UniformUnit(trafficRng) * (n - 1));
        if (dst >= src)
        {
            ++dst;
        }
        double start = UniformRange(trafficRng, 0.0, m_config.sessionStartWindow);
        sessions.push_back(CbrSession{src, dst, start, m_config.cbrRate});
    }
    for (const auto& s : sessions)
    {
        m_sessions.push_back(SessionState{.cbr = s});
    }

    m_helloEvery = std::max<uint64_t>(
        1,
        static_cast<uint64_t>(std::llround(m_config.helloInterval / m_config.timestep)));
    RefreshNeighbors();

    Schedule(Event{.time = m_config.timestep, .kind = EventKind::MobilityStep, .index = 1});
    for (size_t i = 0; i < m_sessions.size(); ++i)
    {
        Schedule(Event{.time = m_sessions[i].cbr.start, .kind = EventKind::CbrTick, .node = m_sessions[i].cbr.source, .index = i});
    }
}

void
Simulator::Schedule(Event ev)
{
    if (ev.time < m_now)
    {
        ++m_diag.causalityViolations;
    }
    ev.seq = m_nextSeq++;
    m_events.push(std::move(ev));
}

bool
Simulator::InRange(NodeId a, NodeId b) const
{
    return Distance(m_mobile[a].pos, m_mobile[b].pos) <= m_config.txRange;
}

void
Simulator::RefreshNeighbors()
{
    for (auto& node : m_nodes)
    {
        node.neighbors.clear();
    }
    for (NodeId i = 0; i < m_nodes.size(); ++i)
    {
        for (NodeId j = i + 1; j < m_nodes.size(); ++j)
        {
            if (InRange(i, j))
            {
                m_nodes[i].neighbors.push_back(j);
                m_nodes[j].neighbors.push_back(i);
            }
        }
    }
    // pairs are visited so that each list comes out ascending
}

void
Simulator::UpdateKnowledge(NodeId node, NodeId about, Position fix, double fixTime, double now)
{
    auto& n = m_nodes.at(node);
    auto& comm = n.commCache[about];
    comm.peer = about;
    comm.lastCommTime = std::max(comm.lastCommTime, now);

    auto it = n.destRecords.find(about);
    if (it == n.destRecords.end() || it->second.tmr < fixTime)
    {
        n.destRecords[about] = DestinationRecord{about, fix, fixTime, m_mobile.at(about).vMax};
    }
}

std::optional<DestinationRecord>
Simulator::EffectiveRecord(NodeId router,
                           NodeId dest,
                           const std::optional<DestinationRecord>& carried,
                           double now) const
{
    if (router == dest)
    {
        return DestinationRecord{dest, m_mobile.at(dest).pos, now, m_mobile.at(dest).vMax};
    }
    std::optional<DestinationRecord> best = carried;
    const auto& records = m_nodes.at(router).destRecords;
    auto it = records.find(dest);
    if (it != records.end() && (!best || it->second.tmr > best->tmr))
    {
        best = it->second;
    }
    return best;
}

RouterView
Simulator::BuildView(NodeId router,
                     NodeId dest,
                     const std::optional<DestinationRecord>& carried,
                     double now) const
{
    const auto& self = m_nodes.at(router);
    RouterView view;
    view.selfId = router;
    view.selfPos = m_mobile.at(router).pos;
    view.now = now;
    view.neighbors.reserve(self.neighbors.size());
    for (NodeId j : self.neighbors)
    {
        NeighborInfo info{j, m_mobile[j].pos, std::nullopt};
        const auto& cache = m_nodes[j].commCache;
        if (auto it = cache.find(dest); it != cache.end())
        {
            info.commTime = it->second.lastCommTime;
        }
        view.neighbors.push_back(info);
    }
    if (auto it = self.commCache.find(dest); it != self.commCache.end())
    {
        view.ownCommTime = it->second.lastCommTime;
    }
    view.destRecord = EffectiveRecord(router, dest, carried, now);
    view.vNetMax = m_vNetMax;
    view.signalSpeed = m_config.signalSpeed;
    view.areaDiagonal = m_area.Diagonal();
    return view;
}

RouteRequest
Simulator::StartDiscovery(NodeId source, NodeId dest, double now)
{
    if (source == dest)
    {
        throw std::invalid_argument("route discovery source and destination must differ");
    }
    RouteRequest req;
    req.reqId = m_nextReqId++;
    req.source = source;
    req.dest = dest;
    req.originTime = now;
    req.tau = m_config.tau;
    req.path = {source};
    req.originPos = m_mobile.at(source).pos;
    const auto& records = m_nodes.at(source).destRecords;
    if (auto it = records.find(dest); it != records.end())
    {
        req.carriedRecord = it->second;
    }
    ++m_discoveriesStarted;
    OnRreqArrival(source, req, now);
    return req;
}

void
Simulator::OnRreqArrival(NodeId node, const RouteRequest& req, double now)
{
    if (node != req.source)
    {
        UpdateKnowledge(node, req.source, req.originPos, req.originTime, now);
    }
    auto& n = m_nodes[node];
    if (n.queue.HasSeen(req.reqId))
    {
        n.queue.Enqueue(QueueEntry{req, now, std::nullopt, std::nullopt});
        return;
    }

    auto view = BuildView(node, req.dest, req.carriedRecord, now);
    auto entry = GradeOnArrival(req, view, &m_clamps);
    if (entry.grade)
    {
        ++m_diag.gradedArrivals;
        if (spdlog::should_log(spdlog::level::debug))
        {
            auto in = ComputeCrispInputs(view);
            const auto& t = *entry.trace;
            spdlog::debug("t={:.6f} router={} req={} dest={} rtr={:.6f} ast={:.6f} cdht={:.6f} maxval={:.6f} "
                          "decr={:.6f} dr={:.6f} temp1={} tq={} pq={} delay={}",
                          now, node, req.reqId, req.dest, in.rtr, in.ast, in.cdht, in.maxval, in.decr, in.dr,
                          ToChar(t.temp1), ToChar(t.tq), ToChar(t.pq), ToChar(t.delay));
        }
    }
    else
    {
        ++m_diag.unknownArrivals;
    }
    n.queue.Enqueue(std::move(entry));
    if (!n.busy)
    {
        TryServe(node, now);
    }
}

void
Simulator::TryServe(NodeId node, double now)
{
    auto& n = m_nodes[node];
    auto served = n.queue.Dequeue(now, m_config.scheduler);
    if (!served)
    {
        n.busy = false;
        return;
    }
    n.busy = true;
    ++n.served;
    m_waitLog.push_back(WaitRecord{node,
                                   served->entry.request.reqId,
                                   served->entry.grade,
                                   served->entry.arrivalTime,
                                   served->serviceStart});
    Apply(node, ServiceRreq(node, *served, now), now);
}

ServiceOutcome
Simulator::ServiceRreq(NodeId router, const ServedEntry& served, double now)
{
    const auto& req = served.entry.request;
    ServiceOutcome out;
    if (now > req.ExpiryTime())
    {
        out.expired = true;
        return out;
    }
    if (router == req.dest)
    {
        RouteReply reply;
        reply.reqId = req.reqId;
        reply.source = req.source;
        reply.dest = req.dest;
        reply.originTime = req.originTime;
        reply.path = req.path;
        reply.destFix = m_mobile.at(router).pos;
        reply.fixTime = now;
        out.reply = std::move(reply);
        return out;
    }

    auto& self = m_nodes.at(router);
    self.forwardCache.RecordForward(req.source, now);

    std::vector<NodeId> candidates;
    for (NodeId j : self.neighbors)
    {
        if (std::find(req.path.begin(), req.path.end(), j) == req.path.end())
        {
            candidates.push_back(j);
        }
    }

    auto record = EffectiveRecord(router, req.dest, req.carriedRecord, now);
    std::vector<NodeId> targets;
    if (m_config.forwarding == ForwardingKind::DecDirectional && record)
    {
        auto built = BuildDec(record->lastLoc, record->vMaxDest, req.tau, record->tmr, req.originTime);
        if (built.expired)
        {
            out.expired = true;
            return out;
        }
        for (NodeId j : candidates)
        {
            if (ForwardEligible(m_mobile[j].pos,
                                built.dec,
                                m_config.signalSpeed,
                                req.tau,
                                record->tmr,
                                req.originTime))
            {
                targets.push_back(j);
            }
        }
        ++m_diag.directionalDecisions;
        if (targets.size() < candidates.size())
        {
            ++m_diag.directionalPrunes;
        }
    }
    else
    {
        targets = std::move(candidates);
    }

    for (NodeId j : targets)
    {
        RouteRequest copy = req;
        copy.path.push_back(j);
        copy.carriedRecord = record;
        out.transmissions.push_back(Transmission{j, std::move(copy)});
    }
    return out;
}

void
Simulator::Apply(NodeId router, ServiceOutcome outcome, double now)
{
    double busyFor = m_config.serviceTime;
    if (outcome.expired)
    {
        ++m_serviceExpired;
    }
    else if (outcome.reply)
    {
        busyFor += m_config.perTransmitTime;
        auto reply = std::make_shared<const RouteReply>(std::move(*outcome.reply));
        size_t hop = reply->path.size() - 1;
        NodeId next = reply->path[hop - 1];
        if (InRange(router, next))
        {
            Schedule(Event{now + m_config.hopLatency, 0, EventKind::ReplyArrival, next, hop - 1, nullptr, reply});
        }
        else
        {
            ++m_diag.repliesLost;
        }
    }
    else
    {
        busyFor += m_config.perTransmitTime * static_cast<double>(outcome.transmissions.size());
        for (auto& tx : outcome.transmissions)
        {
            ++m_forwarded;
            if (!InRange(router, tx.target))
            {
                ++m_diag.transmissionsLost;
                continue;
            }
            auto req = std::make_shared<const RouteRequest>(std::move(tx.request));
            Schedule(Event{now + m_config.hopLatency, 0, EventKind::RreqArrival, tx.target, 0, req, nullptr});
        }
    }
    Schedule(Event{.time = now + busyFor, .kind = EventKind::ServiceDone, .node = router});
}

void
Simulator::OnReplyArrival(NodeId node, const RouteReply& reply, size_t hop, double now)
{
    UpdateKnowledge(node, reply.dest, reply.destFix, reply.fixTime, now);
    if (hop == 0)
    {
        auto it = m_reqSession.find(reply.reqId);
        if (it == m_reqSession.end())
        {
            return;
        }
        auto& s = m_sessions[it->second];
        if (s.pending && s.pendingId == reply.reqId)
        {
            s.pending = false;
            s.hasRoute = true;
            s.route = reply.path;
            ++m_discoveriesCompleted;
            m_latencySum += now - reply.originTime;
        }
        return;
    }
    NodeId next = reply.path[hop - 1];
    if (!InRange(node, next))
    {
        ++m_diag.repliesLost;
        return;
    }
    auto fwd = std::make_shared<const RouteReply>(reply);
    Schedule(Event{now + m_config.hopLatency, 0, EventKind::ReplyArrival, next, hop - 1, nullptr, fwd});
}

bool
Simulator::RouteIntact(const std::vector<NodeId>& route) const
{
    for (size_t i = 1; i < route.size(); ++i)
    {
        if (!InRange(route[i - 1], route[i]))
        {
            return false;
        }
    }
    return !route.empty();
}

void
Simulator::OnCbrTick(size_t session, double now)
{
    auto& s = m_sessions[session];
    if (s.hasRoute && !RouteIntact(s.route))
    {
        s.hasRoute = false;
    }
    if (!s.hasRoute && (!s.pending || now > s.pendingOrigin + m_config.tau))
    {
        auto req = StartDiscovery(s.cbr.source, s.cbr.dest, now);
        s.pending = true;
        s.pendingId = req.reqId;
        s.pendingOrigin = now;
        m_reqSession[req.reqId] = session;
    }
    ++s.ticks;
    double next = s.cbr.start + static_cast<double>(s.ticks) / s.cbr.rate;
    if (next <= m_config.simTime)
    {
        Schedule(Event{.time = next, .kind = EventKind::CbrTick, .node = s.cbr.source, .index = session});
    }
}

void
Simulator::Digest(const Event& ev)
{
    auto mix = [this](uint64_t v) {
        for (int i = 0; i < 8; ++i)
        {
            m_digest ^= (v >> (8 * i)) & 0xffU;
            m_digest *= 0x100000001b3ULL;
        }
    };
    mix(std::bit_cast<uint64_t>(ev.time));
    mix(static_cast<uint64_t>(ev.kind));
    mix(ev.node);
    mix(ev.rreq ? ev.rreq->reqId : (ev.reply ? ev.reply->reqId : ev.index));
}

void
Simulator::Dispatch(const Event& ev)
{
    switch (ev.kind)
    {
    case EventKind::MobilityStep: {
        StepMobility(m_mobile, m_config.timestep, m_config.mobility, m_area, m_config.walkEpoch, m_mobilityRng);
        if (ev.index % m_helloEvery == 0)
        {
            RefreshNeighbors();
        }
        double next = static_cast<double>(ev.index + 1) * m_config.timestep;
        if (next <= m_config.simTime)
        {
            Schedule(Event{.time = next, .kind = EventKind::MobilityStep, .index = ev.index + 1});
        }
        break;
    }
    case EventKind::CbrTick:
        OnCbrTick(ev.index, ev.time);
        break;
    case EventKind::RreqArrival:
        OnRreqArrival(ev.node, *ev.rreq, ev.time);
        break;
    case EventKind::ServiceDone:
        TryServe(ev.node, ev.time);
        break;
    case EventKind::ReplyArrival:
        OnReplyArrival(ev.node, *ev.reply, ev.index, ev.time);
        break;
    }
}

RunResult
Simulator::Run()
{
    while (!m_events.empty() && m_events.top().time <= m_config.simTime)
    {
        Event ev = m_events.top();
        m_events.pop();
        if (ev.time < m_now)
        {
            ++m_diag.causalityViolations;
        }
        m_now = ev.time;
        Digest(ev);
        ++m_diag.eventsExecuted;
        Dispatch(ev);
    }

    RunResult result;
    result.metrics = Finalize();
    result.diagnostics = m_diag;
    result.waitLog = m_waitLog;
    result.eventDigest = m_digest;
    return result;
}

Metrics
Simulator::Finalize()
{
    Metrics m;
    m.nodeCount = m_nodes.size();
    for (const auto& n : m_nodes)
    {
        if (n.served > 0)
        {
            ++m.routersUsed;
        }
        const auto& st = n.queue.Stats();
        m.rreqDroppedExpired += st.droppedExpired;
        m.rreqDroppedDuplicate += st.droppedDuplicate;
        m_diag.queuesConserved = m_diag.queuesConserved && n.queue.Conserved();
    }
    for (const auto& w : m_waitLog)
    {
        m.totalWait += w.serviceStart - w.arrival;
    }
    m.perNodeWaitPerRouter = PerNodeWaitPerRouter(m.totalWait, m.nodeCount, m.routersUsed);
    m.rreqDroppedExpired += m_serviceExpired;
    m.rreqForwarded = m_forwarded;
    m.discoveriesStarted = m_discoveriesStarted;
    m.discoveriesCompleted = m_discoveriesCompleted;
    m.meanDiscoveryLatency =
        m_discoveriesCompleted > 0 ? m_latencySum / static_cast<double>(m_discoveriesCompleted) : 0.0;
    m_diag.clampedInputs = m_clamps.count;
    return m;
}

RunResult
RunScenario(const ScenarioConfig& config)
{
    Simulator sim(config);
    return sim.Run();
}

} // namespace fsrr
