/*
 * Copyright (c) 2026 The fsrr-sim authors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef FSRR_SIM_H
#define FSRR_SIM_H

#include "fsrr/mobility.h"
#include "fsrr/params.h"
#include "fsrr/scheduler.h"

#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

namespace fsrr
{

enum class ForwardingKind : uint8_t
{
    Flood,
    DecDirectional,
};

/// Constant-bit-rate session; every packet tick checks the route and starts
/// a discovery when none is usable.
struct CbrSession
{
    NodeId source{0};
    NodeId dest{0};
    double start{0.0};
    double rate{1.0};
};

struct ScenarioConfig
{
    double areaWidth{300.0};
    double areaHeight{300.0};
    uint32_t nodeCount{20};
    double vMax{25.0};
    double txRange{60.0};
    double tau{4.0};
    double signalSpeed{10.0};
    double simTime{200.0};
    MobilityModel mobility{MobilityModel::RandomWaypoint};
    SchedulerKind scheduler{SchedulerKind::Fsrr};
    ForwardingKind forwarding{ForwardingKind::DecDirectional};
    uint64_t seed{1};

    double serviceTime{0.005};
    double perTransmitTime{0.03};
    double hopLatency{0.002};
    double helloInterval{0.1};
    double timestep{0.1};
    double walkEpoch{5.0};

    std::vector<CbrSession> sessions;
    uint32_t randomSessions{0};
    /// When positive, overrides randomSessions with round(sessionsPerNode * nodeCount).
    double sessionsPerNode{0.0};
    double cbrRate{2.0};
    double sessionStartWindow{10.0};

    /// Optional fixed initial positions; others are drawn uniformly.
    std::map<NodeId, Position> initialPositions;
};

/// "field: message" for every violated constraint; empty when valid.
std::vector<std::string> Validate(const ScenarioConfig& config);

struct Metrics
{
    double totalWait{0.0};
    uint64_t routersUsed{0};
    uint64_t nodeCount{0};
    double perNodeWaitPerRouter{0.0};
    uint64_t rreqForwarded{0};
    uint64_t rreqDroppedExpired{0};
    uint64_t rreqDroppedDuplicate{0};
    uint64_t discoveriesStarted{0};
    uint64_t discoveriesCompleted{0};
    double meanDiscoveryLatency{0.0};

    bool operator==(const Metrics&) const = default;
};

/// total / (nodes x routers); 0 when no router served anything.
double PerNodeWaitPerRouter(double totalWait, uint64_t nodeCount, uint64_t routersUsed);

/// One served queue entry.
struct WaitRecord
{
    NodeId router{0};
    RequestId reqId{0};
    std::optional<FuzzyGrade> grade;
    double arrival{0.0};
    double serviceStart{0.0};
};

/// Run bookkeeping that is not part of the published metric row.
struct RunDiagnostics
{
    uint64_t eventsExecuted{0};
    uint64_t causalityViolations{0};
    uint64_t clampedInputs{0};
    uint64_t directionalDecisions{0};
    /// Directional services that excluded at least one candidate neighbor.
    uint64_t directionalPrunes{0};
    uint64_t transmissionsLost{0};
    uint64_t repliesLost{0};
    uint64_t gradedArrivals{0};
    uint64_t unknownArrivals{0};
    bool queuesConserved{true};
};

struct RunResult
{
    Metrics metrics;
    RunDiagnostics diagnostics;
    std::vector<WaitRecord> waitLog;
    uint64_t eventDigest{0};
};

/// Mutable per-node protocol and kinematic state.
struct NodeState
{
    NodeId id{0};
    std::unordered_map<NodeId, CommRecord> commCache;
    std::unordered_map<NodeId, DestinationRecord> destRecords;
    RreqQueue queue;
    ForwardCache forwardCache;
    std::vector<NodeId> neighbors;
    bool busy{false};
    uint64_t served{0};
};

struct RouteReply
{
    RequestId reqId{0};
    NodeId source{0};
    NodeId dest{0};
    double originTime{0.0};
    /// Full discovered path, source first, destination last.
    std::vector<NodeId> path;
    Position destFix;
    double fixTime{0.0};
};

struct Transmission
{
    NodeId target{0};
    RouteRequest request;
};

/// What a router does with one request it has taken off its queue.
struct ServiceOutcome
{
    std::vector<Transmission> transmissions;
    std::optional<RouteReply> reply;
    bool expired{false};
};

/**
 * Discrete-event simulation of on-demand route discovery with a pluggable
 * queue discipline and forwarding rule.
 *
 * Mobility and neighbor tables advance at a fixed timestep; packet events
 * are continuous-time in between. Each router serves one request at a time
 * and is busy for serviceTime + perTransmitTime per transmission.
 */
class Simulator
{
  public:
    /// Throws std::invalid_argument listing every invalid field.
    explicit Simulator(ScenarioConfig config);

    RunResult Run();

    RouteRequest StartDiscovery(NodeId source, NodeId dest, double now);
    ServiceOutcome ServiceRreq(NodeId router, const ServedEntry& served, double now);
    void UpdateKnowledge(NodeId node, NodeId about, Position fix, double fixTime, double now);
    void RefreshNeighbors();

    /// Destination record the router would use for a request: a node always
    /// knows itself; otherwise the fresher of its own and the carried record.
    std::optional<DestinationRecord> EffectiveRecord(NodeId router,
                                                     NodeId dest,
                                                     const std::optional<DestinationRecord>& carried,
                                                     double now) const;
    RouterView BuildView(NodeId router,
                         NodeId dest,
                         const std::optional<DestinationRecord>& carried,
                         double now) const;

    const NodeState& Node(NodeId id) const
    {
        return m_nodes.at(id);
    }

    NodeState& MutableNode(NodeId id)
    {
        return m_nodes.at(id);
    }

    const MobileState& Kinematics(NodeId id) const
    {
        return m_mobile.at(id);
    }

    MobileState& MutableKinematics(NodeId id)
    {
        return m_mobile.at(id);
    }

    const ScenarioConfig& Config() const
    {
        return m_config;
    }

    double NetworkMaxSpeed() const
    {
        return m_vNetMax;
    }

  private:
    enum class EventKind : uint8_t
    {
        MobilityStep,
        CbrTick,
        RreqArrival,
        ServiceDone,
        ReplyArrival,
    };

    struct Event
    {
        double time{0.0};
        uint64_t seq{0};
        EventKind kind{EventKind::MobilityStep};
        NodeId node{0};
        uint64_t index{0};
        std::shared_ptr<const RouteRequest> rreq{};
        std::shared_ptr<const RouteReply> reply{};
    };

    struct EventLater
    {
        bool operator()(const Event& a, const Event& b) const
        {
            if (a.time != b.time)
            {
                return a.time > b.time;
            }
            return a.seq > b.seq;
        }
    };

    struct SessionState
    {
        CbrSession cbr;
        bool pending{false};
        RequestId pendingId{0};
        double pendingOrigin{0.0};
        bool hasRoute{false};
        std::vector<NodeId> route{};
        uint64_t ticks{0};
    };

    void Schedule(Event ev);
    void Dispatch(const Event& ev);
    void OnRreqArrival(NodeId node, const RouteRequest& req, double now);
    void OnReplyArrival(NodeId node, const RouteReply& reply, size_t hop, double now);
    void OnCbrTick(size_t session, double now);
    void TryServe(NodeId node, double now);
    void Apply(NodeId router, ServiceOutcome outcome, double now);
    bool RouteIntact(const std::vector<NodeId>& route) const;
    bool InRange(NodeId a, NodeId b) const;
    void Digest(const Event& ev);
    Metrics Finalize();

    ScenarioConfig m_config;
    Area m_area;
    double m_vNetMax{0.0};
    std::vector<NodeState> m_nodes;
    std::vector<MobileState> m_mobile;
    std::vector<SessionState> m_sessions;
    std::unordered_map<RequestId, size_t> m_reqSession;
    Rng m_mobilityRng;

    std::priority_queue<Event, std::vector<Event>, EventLater> m_events;
    uint64_t m_nextSeq{0};
    RequestId m_nextReqId{1};
    double m_now{0.0};
    uint64_t m_helloEvery{1};

    ClampCounter m_clamps;
    RunDiagnostics m_diag;
    std::vector<WaitRecord> m_waitLog;
    uint64_t m_digest{0xcbf29ce484222325ULL};
    uint64_t m_forwarded{0};
    uint64_t m_serviceExpired{0};
    uint64_t m_discoveriesStarted{0};
    uint64_t m_discoveriesCompleted{0};
    double m_latencySum{0.0};
};

/// Convenience wrapper: build, run, return.
RunResult RunScenario(const ScenarioConfig& config);

} // namespace fsrr

#endif // FSRR_SIM_H
