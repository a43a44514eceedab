#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ecoroute {

using NodeId = std::int32_t;
using LinkId = std::int32_t;
using VehicleId = std::int32_t;

inline constexpr std::int32_t kNone = -1;

struct Link {
    LinkId id = kNone;
    NodeId from_node = kNone;
    NodeId to_node = kNone;
    double length_m = 0.0;
    int lanes = 1;
    int speed_limit_kmh = 0;

    double speed_limit_ms() const { return speed_limit_kmh / 3.6; }
    double free_flow_time_s() const { return length_m / speed_limit_ms(); }

    friend bool operator==(const Link &, const Link &) = default;
};

// Admissible attribute values, observed on the downtown case-study network.
inline constexpr int kSpeedLimits[] = {10, 30, 40, 60, 80};
inline constexpr double kSpeedLimitShares[] = {0.02, 0.01, 0.30, 0.59, 0.08};
inline constexpr int kLaneCounts[] = {1, 2, 3, 4};
inline constexpr double kLaneShares[] = {0.07, 0.71, 0.15, 0.07};
inline constexpr double kMinGeneratedLength = 100.0;
inline constexpr double kMaxGeneratedLength = 450.0;

// Throws ValidationError when a link breaks an attribute invariant.
void validate_link(const Link &link);

// Directed road network. Links are stored sorted by id; nodes sorted by id.
// Dense indices (position in links()/nodes()) are used by the simulator and
// the router; ids are what files and reports carry.
class Network {
  public:
    Network() = default;
    explicit Network(std::vector<Link> links);

    std::span<const Link> links() const { return links_; }
    std::span<const NodeId> nodes() const { return nodes_; }
    std::size_t num_links() const { return links_.size(); }
    std::size_t num_nodes() const { return nodes_.size(); }

    const Link &link(std::size_t index) const { return links_[index]; }
    // Index lookups; return kNone for unknown ids.
    std::int32_t link_index(LinkId id) const;
    std::int32_t node_index(NodeId id) const;

    // Link indices leaving / entering the node at `node_index`, ascending link id.
    std::span<const std::int32_t> out_links(std::size_t node_index) const;
    std::span<const std::int32_t> in_links(std::size_t node_index) const;

    std::int32_t from_index(std::size_t link_index) const { return from_idx_[link_index]; }
    std::int32_t to_index(std::size_t link_index) const { return to_idx_[link_index]; }

    // Link index of the opposite-direction link (to -> from), or kNone.
    std::int32_t reverse_link(std::size_t link_index) const;

    // reachable(a, b): node index b can be reached from node index a.
    std::vector<std::vector<bool>> reachability() const;

    friend bool operator==(const Network &a, const Network &b) { return a.links_ == b.links_; }

  private:
    std::vector<Link> links_;
    std::vector<NodeId> nodes_;
    std::vector<std::int32_t> from_idx_, to_idx_;
    std::vector<std::int32_t> out_offsets_, out_list_;
    std::vector<std::int32_t> in_offsets_, in_list_;
};

struct Trip {
    VehicleId vehicle_id = kNone;
    NodeId origin = kNone;
    NodeId destination = kNone;
    double departure_s = 0.0;

    friend bool operator==(const Trip &, const Trip &) = default;
};

struct DemandTable {
    std::vector<Trip> trips;

    friend bool operator==(const DemandTable &, const DemandTable &) = default;
};

enum class DepartureDistribution { exponential, uniform, normal };

DepartureDistribution parse_distribution(const std::string &name);
std::string to_string(DepartureDistribution d);

// Throws ValidationError unless every trip is well formed, ids are unique and
// each destination is reachable from its origin in `network`.
void validate_demand(const Network &network, const DemandTable &demand);

Network load_network(const std::string &path);
Network read_network(std::istream &in, const std::string &source_name = "<network>");
void write_network(std::ostream &out, const Network &network);
void save_network(const std::string &path, const Network &network);

DemandTable load_demand(const std::string &path, const Network &network);
DemandTable read_demand(std::istream &in, const std::string &source_name = "<demand>");
void write_demand(std::ostream &out, const DemandTable &demand);
void save_demand(const std::string &path, const DemandTable &demand);

// Bidirectional rows x cols grid; node id = r * cols + c. Link attributes are
// drawn from the case-study marginals above, lengths uniform in [100, 450] m.
Network generate_grid_network(int rows, int cols, std::uint64_t seed);

struct DemandOptions {
    int n_vehicles = 1;
    DepartureDistribution distribution = DepartureDistribution::uniform;
    double horizon_s = 900.0;
    std::uint64_t seed = 0;
};

// OD pairs uniform over reachable ordered node pairs; departures drawn from the
// named distribution truncated to [0, horizon] and floored to whole seconds.
// Vehicle ids are assigned in departure order.
DemandTable generate_demand(const Network &network, const DemandOptions &options);

} // namespace ecoroute
