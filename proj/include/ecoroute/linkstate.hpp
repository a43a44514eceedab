#pragma once

#include "ecoroute/netcore.hpp"

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ecoroute {

inline constexpr int kIntervalSeconds = 60;

// Observations on one link during one simulated second.
struct LinkSecond {
    double speed_sum_ms = 0.0; // sum of vehicle speeds on the link
    int vehicles = 0;          // vehicles present
    double ghg_g = 0.0;        // sum_i lambda(i,l,k) * GHG(i,k)
    double nox_g = 0.0;
    int exits = 0; // vehicles leaving the link downstream
};

struct LinkIntervalRecord {
    LinkId link_id = kNone;
    int interval = 0;
    double speed_kmh = 0.0;    // space-mean speed
    double density_lane = 0.0; // veh / (km * lane)
    double flow_vph = 0.0;
    double delay_s = 0.0;
    std::array<double, kIntervalSeconds> ghg_by_second{};
    double nox_g = 0.0;
    double vehicle_seconds = 0.0;
    double inlink_speed_kmh = 0.0; // mean space-mean speed of upstream links

    double ghg_total() const;
    // Mean per-vehicle emission rate (g/s); 0 when no vehicle was present.
    double ghg_er() const;

    friend bool operator==(const LinkIntervalRecord &, const LinkIntervalRecord &) = default;
};

// Closes one interval of 60 per-second observations; throws ValidationError
// for any other count. Empty links report free-flow speed and zero emissions.
LinkIntervalRecord aggregate(const Link &link, int interval, std::span<const LinkSecond> seconds);

// Fills inlink_speed_kmh for one interval's records (indexed by link index).
// U-turn in-links are excluded; links without upstream links use their own speed.
void fill_inlink_speeds(const Network &network, std::span<LinkIntervalRecord> records);

inline constexpr double kMinCostSpeedKmh = 0.1;

// Link travel time from length and space-mean speed, in seconds. Speeds
// below 0.1 km/h are floored so the cost stays finite.
double travel_time_cost(double length_m, double speed_kmh);

// GHG costing approaches over a per-second link emission series (g).
double ghg_cost_sum(std::span<const double> ghg_by_second);
double ghg_cost_sum_per_lane(std::span<const double> ghg_by_second, int lanes);
double ghg_cost_weighted(std::span<const double> ghg_by_second);
double ghg_cost_weighted_per_lane(std::span<const double> ghg_by_second, int lanes);
// Marginal cost of one vehicle: emission rate (g/s) times link travel time (s).
double ghg_cost_marginal(double er_gps, double tt_s);

inline double ghg_cost_sum(const LinkIntervalRecord &r) { return ghg_cost_sum(r.ghg_by_second); }
inline double ghg_cost_sum_per_lane(const LinkIntervalRecord &r, int lanes) {
    return ghg_cost_sum_per_lane(r.ghg_by_second, lanes);
}
inline double ghg_cost_weighted(const LinkIntervalRecord &r) { return ghg_cost_weighted(r.ghg_by_second); }
inline double ghg_cost_weighted_per_lane(const LinkIntervalRecord &r, int lanes) {
    return ghg_cost_weighted_per_lane(r.ghg_by_second, lanes);
}

enum class GhgCosting { sum = 1, sum_per_lane = 2, weighted = 3, weighted_per_lane = 4, marginal = 5 };

GhgCosting parse_costing(const std::string &text); // "1".."5" or the enum names
std::string to_string(GhgCosting c);

// Link-interval CSV, the training format for the predictors.
void write_link_intervals(std::ostream &out, std::span<const LinkIntervalRecord> records);
// Reads records back. The file has no vehicle-second column; when `network`
// is given it is reconstructed from density, length and lanes.
std::vector<LinkIntervalRecord> read_link_intervals(std::istream &in, const Network *network,
                                                    const std::string &source_name = "<links>");
std::vector<LinkIntervalRecord> load_link_intervals(const std::string &path, const Network *network);

} // namespace ecoroute
