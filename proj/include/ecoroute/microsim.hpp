#pragma once

#include "ecoroute/emissions.hpp"
#include "ecoroute/guidance.hpp"
#include "ecoroute/linkstate.hpp"
#include "ecoroute/netcore.hpp"

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace ecoroute {

struct IdmParams {
    double v0 = 40.0 / 3.6; // desired speed, m/s; set per link from the speed limit
    double a_max = 1.5;     // m/s^2
    double b = 2.0;         // comfortable deceleration, m/s^2
    double s0 = 2.0;        // minimum gap, m
    double T = 1.2;         // desired headway, s
    double delta = 4.0;

    // Throws ValidationError unless all values are positive and delta >= 1.
    void validate() const;
};

struct Leader {
    double speed = 0.0; // m/s
    double gap = 0.0;   // bumper-to-bumper, m
};

// Intelligent Driver Model acceleration. Without a leader only the free-road
// term applies.
double idm_acceleration(double v, std::optional<Leader> leader, const IdmParams &p);

struct SimClock {
    int second = 0;
    int interval() const { return second / kIntervalSeconds; }
};

enum class VehicleStatus { pending, queued, moving, retired };

struct PathEntry {
    LinkId link_id = kNone;
    int entry_s = 0;

    friend bool operator==(const PathEntry &, const PathEntry &) = default;
};

struct VehicleState {
    VehicleId id = kNone;
    VehicleStatus status = VehicleStatus::pending;
    std::int32_t link = kNone; // link index while moving
    int lane = 0;
    double position = 0.0; // m from link start (front bumper)
    double speed = 0.0;     // m/s
    double accel = 0.0;     // m/s^2, effective over the last second
    std::int32_t origin = kNone;      // node index
    std::int32_t destination = kNone; // node index
    double departure_s = 0.0;
    int arrival_s = -1;
    double travel_time_s = 0.0;
    double distance_m = 0.0;
    double ghg_gps = 0.0; // last second
    double nox_gps = 0.0;
    double ghg_total_g = 0.0;
    double nox_total_g = 0.0;
    double desired_speed_factor = 1.0; // v0 = factor * speed limit
    double accel_factor = 1.0;         // a_max multiplier
    double free_flow_od_s = 0.0;
    std::vector<PathEntry> path;
};

struct VehicleSummary {
    VehicleId vehicle_id = kNone;
    double departure_s = 0.0;
    double arrival_s = 0.0;
    double tt_s = 0.0;
    double vkt_m = 0.0;
    double ghg_g = 0.0;
    double nox_g = 0.0;
    std::vector<PathEntry> path;

    friend bool operator==(const VehicleSummary &, const VehicleSummary &) = default;
};

// Per-minute network totals.
struct NetworkMinute {
    int interval = 0;
    double mean_speed_kmh = 0.0; // over vehicle-seconds on links
    double ghg_g = 0.0;          // all vehicles, including origin queues
    double nox_g = 0.0;
    int vehicles_in_network = 0; // on links at the end of the minute

    friend bool operator==(const NetworkMinute &, const NetworkMinute &) = default;
};

struct SimOptions {
    IdmParams idm;
    double vehicle_length_m = 5.0;
    // Abort when a vehicle's travel time exceeds this multiple of its
    // free-flow origin-destination time.
    double guard_multiple = 50.0;
    // Short trips would trip the multiple after a few minutes of queueing.
    double guard_floor_s = 1800.0;
    // Per-vehicle desired-speed and acceleration spread drawn from the seed;
    // 0 makes every vehicle identical.
    double heterogeneity = 1.0;
    bool check_invariants = false;
    int max_seconds = 6 * 3600;
};

struct SimulationCounters {
    std::int64_t departed = 0;  // entered the origin queue
    std::int64_t queued = 0;    // currently in origin queues
    std::int64_t in_network = 0;
    std::int64_t retired = 0;
};

// Second-by-second simulation state. Copyable, so that a shadow copy can be
// run ahead without touching the original.
class Simulation {
  public:
    Simulation(std::shared_ptr<const Network> network, std::shared_ptr<const DemandTable> demand,
               std::shared_ptr<const OpModeTable> table, SimOptions options, std::uint64_t seed);

    // Advances one second using `guidance` for every node decision.
    void step(const GuidanceTable &guidance);

    bool finished() const { return counters_.retired == static_cast<std::int64_t>(vehicles_.size()); }
    const SimClock &clock() const { return clock_; }
    const SimulationCounters &counters() const { return counters_; }
    const Network &network() const { return *network_; }
    const OpModeTable &opmode_table() const { return *table_; }
    const SimOptions &options() const { return options_; }

    std::span<const VehicleState> vehicles() const { return vehicles_; }
    // Vehicle indices in a lane, most downstream first.
    const std::deque<std::int32_t> &lane(std::size_t link, int lane) const { return lanes_[link][lane]; }

    // True right after a step that completed a 60 s interval (or the final
    // partial one once all vehicles have retired).
    bool interval_closed() const { return interval_closed_; }
    // Records of every closed interval, one vector per interval indexed by link index.
    const std::vector<std::vector<LinkIntervalRecord>> &link_history() const { return history_; }
    const std::vector<NetworkMinute> &network_series() const { return series_; }

    // Free-flow time of the fastest route between two node indices.
    double free_flow_time(std::size_t origin, std::size_t destination) const;

    // Places a vehicle directly on a link (scripted scenarios and tests).
    void place_vehicle(std::size_t vehicle, std::size_t link, int lane, double position, double speed);

    // Throws SimulationError if conservation, gap or speed invariants fail.
    void verify_invariants() const;

  private:
    struct Pending {
        double departure_s;
        std::int32_t vehicle;
    };

    double desired_speed(const VehicleState &v, std::size_t link) const;
    IdmParams params_for(const VehicleState &v, std::size_t link) const;
    int least_occupied_lane(std::size_t link) const;
    bool entry_open(std::size_t link, int lane) const;
    void close_interval();
    void retire(std::int32_t vi);

    std::shared_ptr<const Network> network_;
    std::shared_ptr<const DemandTable> demand_;
    std::shared_ptr<const OpModeTable> table_;
    SimOptions options_;

    SimClock clock_;
    SimulationCounters counters_;
    std::vector<VehicleState> vehicles_;
    std::vector<std::int32_t> departure_order_; // vehicle indices sorted by departure
    std::size_t next_departure_ = 0;
    std::vector<std::vector<std::deque<std::int32_t>>> lanes_; // [link][lane]
    std::vector<std::deque<std::int32_t>> origin_queues_;      // [node]
    std::vector<std::vector<double>> free_flow_to_;            // [destination][node]

    std::vector<std::vector<LinkSecond>> seconds_; // [link][second within interval]
    double minute_speed_sum_ = 0.0, minute_vehicle_seconds_ = 0.0;
    double minute_ghg_ = 0.0, minute_nox_ = 0.0;
    bool interval_closed_ = false;
    std::vector<std::vector<LinkIntervalRecord>> history_;
    std::vector<NetworkMinute> series_;

    // Scratch, kept as members to avoid per-step allocation.
    std::vector<double> prev_position_, prev_speed_;
    std::vector<std::int32_t> prev_link_;
};

// Supplies guidance to a run: once before the first second and again at every
// interval boundary.
class GuidanceProvider {
  public:
    virtual ~GuidanceProvider() = default;
    virtual GuidanceTable initial(const Simulation &sim) = 0;
    virtual GuidanceTable on_interval(const Simulation &sim) = 0;
};

struct SimulationLog {
    std::vector<VehicleSummary> vehicles; // ordered by vehicle id
    std::vector<std::vector<LinkIntervalRecord>> link_history;
    std::vector<NetworkMinute> series;
    int duration_s = 0;
    std::size_t guidance_changes = 0; // next-hop entries changed across epochs
    int epochs = 0;

    friend bool operator==(const SimulationLog &, const SimulationLog &) = default;
};

struct Scenario {
    std::shared_ptr<const Network> network;
    std::shared_ptr<const DemandTable> demand;
    std::shared_ptr<const OpModeTable> opmode;
};

// Steps until every vehicle has retired.
SimulationLog run(const Scenario &scenario, GuidanceProvider &guidance, const SimOptions &options,
                  std::uint64_t seed);

// vehicle_id,departure_s,arrival_s,tt_s,vkt_m,ghg_g,nox_g,path
void write_vehicle_summary(std::ostream &out, std::span<const VehicleSummary> vehicles);
std::vector<VehicleSummary> read_vehicle_summary(std::istream &in,
                                                 const std::string &source_name = "<vehicles>");

} // namespace ecoroute
