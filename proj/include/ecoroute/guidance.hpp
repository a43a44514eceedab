#pragma once

#include "ecoroute/netcore.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace ecoroute {

// Per-intersection next-hop rows: next_link(node, destination) is the link
// index a vehicle at `node` bound for `destination` should take. Both
// arguments are node indices.
class GuidanceTable {
  public:
    GuidanceTable() = default;
    GuidanceTable(std::size_t num_nodes, int epoch)
        : epoch_(epoch), num_nodes_(num_nodes), next_(num_nodes * num_nodes, kNone) {}

    int epoch() const { return epoch_; }
    std::size_t num_nodes() const { return num_nodes_; }
    bool empty() const { return next_.empty(); }

    std::int32_t next_link(std::size_t node, std::size_t destination) const {
        return next_[node * num_nodes_ + destination];
    }
    void set_next_link(std::size_t node, std::size_t destination, std::int32_t link) {
        next_[node * num_nodes_ + destination] = link;
    }

    friend bool operator==(const GuidanceTable &a, const GuidanceTable &b) {
        return a.num_nodes_ == b.num_nodes_ && a.next_ == b.next_;
    }

  private:
    int epoch_ = 0;
    std::size_t num_nodes_ = 0;
    std::vector<std::int32_t> next_;
};

// Shortest-path tree towards one destination on the reversed graph.
struct ReverseTree {
    std::vector<double> distance;       // per node index, +inf when unreachable
    std::vector<std::int32_t> next_hop; // first link index on the path, kNone at dest/unreachable
};

// Dijkstra from `destination` over reversed links with non-negative weights
// (indexed by link index). Equal costs go to the shorter route in metres,
// then to the smaller link id.
ReverseTree reverse_dijkstra(const Network &network, std::span<const double> weights,
                             std::size_t destination);

// Number of next-hop entries that differ between two tables.
std::size_t count_changes(const GuidanceTable &a, const GuidanceTable &b);

// Follows next hops for every (node, destination) pair; returns false if a walk
// revisits a node or dead-ends before reaching its destination.
bool guidance_is_loop_free(const Network &network, const GuidanceTable &table);

// Debug dump: epoch,node,destination,next_link (ids).
void write_guidance(std::ostream &out, const Network &network, const GuidanceTable &table,
                    bool with_header = true);

} // namespace ecoroute
