#pragma once

#include "ecoroute/emissions.hpp"
#include "ecoroute/forecast.hpp"
#include "ecoroute/guidance.hpp"
#include "ecoroute/linkstate.hpp"
#include "ecoroute/microsim.hpp"
#include "ecoroute/netcore.hpp"

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ecoroute {

enum class Objective { tt, ghg, tt_ghg };
enum class Horizon { myopic, anticipatory };

struct Strategy {
    Objective objective = Objective::tt;
    Horizon horizon = Horizon::myopic;

    friend bool operator==(const Strategy &, const Strategy &) = default;
};

// The six routing strategies, by their published names.
inline constexpr std::array<const char *, 6> kStrategyNames = {"TT_m", "GHG_m", "TT&GHG_m",
                                                                "TT_a", "GHG_a", "TT&GHG_a"};

Strategy parse_strategy(const std::string &name);
std::string to_string(Strategy s);
// Same objective with the myopic horizon.
inline Strategy myopic_counterpart(Strategy s) { return {s.objective, Horizon::myopic}; }

// State of a link as routing sees it for one interval: observed (myopic) or
// predicted (anticipatory).
struct LinkObservation {
    double speed_kmh = 0.0;
    double ghg_er_gps = 0.0;
    std::array<double, kIntervalSeconds> ghg_by_second{};
};

LinkObservation observe(const Link &link, const LinkIntervalRecord &rec, const OpModeTable &table);
LinkObservation free_flow_observation(const Link &link, const OpModeTable &table);

// Network-wide free-flow means used to bring travel time and emissions to a
// common scale before weighting.
struct WeightReferences {
    double tt_s = 1.0;
    double ghg_g = 1.0;
};

WeightReferences free_flow_references(const Network &network, const OpModeTable &table);

struct ObjectiveConfig {
    Strategy strategy;
    GhgCosting costing = GhgCosting::marginal;
    double w_t = 0.5;
    double w_e = 0.5;
    WeightReferences refs;
    // Bound predictors for anticipatory strategies (kind lstm, linear_ar,
    // identity or oracle). Oracle speed and GHG models must be used together.
    std::shared_ptr<const PredictorModel> speed_model;
    std::shared_ptr<const PredictorModel> ghg_model;

    // Throws ValidationError on negative weights, W_t + W_e == 0, or missing
    // predictor bindings for an anticipatory strategy.
    void validate() const;
    bool uses_oracle() const;
};

double link_weight(const Link &link, const LinkObservation &obs, const ObjectiveConfig &cfg);

struct RebuildResult {
    GuidanceTable table;
    std::size_t unreachable = 0; // (node, destination) pairs without a route
};

// All-destinations next-hop tables, one reverse Dijkstra per destination.
// Unreachable pairs keep the entry from `previous` when one is given.
RebuildResult rebuild_guidance(const Network &network, std::span<const double> weights, int epoch,
                               const GuidanceTable *previous = nullptr);

// Intelligent intersections. Each agent measures the links that end at its
// node, broadcasts those costs to its peers, and computes the shortest-path
// tree towards itself; tree entries are delivered to the owning intersections
// as next-hop rows. Views are synchronous: every agent sees every broadcast of
// the current epoch.
class IntersectionNetwork {
  public:
    explicit IntersectionNetwork(const Network &network);

    RebuildResult refresh(std::span<const double> measured_weights, int epoch,
                          const GuidanceTable *previous = nullptr);

    std::size_t messages_last_epoch() const { return messages_; }

  private:
    struct CostMessage {
        std::int32_t link;
        double weight;
    };
    struct RowMessage {
        std::int32_t destination;
        std::int32_t next_link;
    };
    struct Agent {
        std::int32_t node = kNone;
        std::vector<double> view;            // coherent link-cost view
        std::vector<std::int32_t> next_hops; // row: destination -> link index
        std::vector<RowMessage> inbox;
    };

    const Network *network_;
    std::vector<Agent> agents_;
    std::size_t messages_ = 0;
};

// Predicted link states for the next interval, indexed by link index.
class LinkForecaster {
  public:
    virtual ~LinkForecaster() = default;
    virtual std::vector<LinkObservation> forecast(const Simulation &sim, const GuidanceTable &current) = 0;
};

// Current interval values, i.e. what myopic routing uses.
class IdentityForecaster final : public LinkForecaster {
  public:
    std::vector<LinkObservation> forecast(const Simulation &sim, const GuidanceTable &current) override;
};

// Per-link t+1 speed and GHG ER from trained models, clamped. A missing model
// leaves that variable at its current value.
class ModelForecaster final : public LinkForecaster {
  public:
    ModelForecaster(std::shared_ptr<const PredictorModel> speed, std::shared_ptr<const PredictorModel> ghg);
    std::vector<LinkObservation> forecast(const Simulation &sim, const GuidanceTable &current) override;

  private:
    std::shared_ptr<const PredictorModel> speed_, ghg_;
};

// Runs a copy of the simulation one interval ahead under the given guidance
// and reports the link states it actually produces.
class OracleForecaster final : public LinkForecaster {
  public:
    std::vector<LinkObservation> forecast(const Simulation &sim, const GuidanceTable &current) override;
    // Records of the last shadow interval, indexed by link index.
    const std::vector<LinkIntervalRecord> &last_shadow_records() const { return last_; }

  private:
    std::vector<LinkIntervalRecord> last_;
};

std::unique_ptr<LinkForecaster> make_forecaster(const ObjectiveConfig &cfg);

// Refreshes guidance every interval from observed (myopic) or forecast
// (anticipatory) link costs. The first interval uses free-flow costs.
class RoutingController final : public GuidanceProvider {
  public:
    RoutingController(const Network &network, const OpModeTable &table, ObjectiveConfig cfg,
                      bool verify_loops = false);

    GuidanceTable initial(const Simulation &sim) override;
    GuidanceTable on_interval(const Simulation &sim) override;

    const GuidanceTable &current() const { return current_; }
    // Link weights used for the latest table, indexed by link index.
    const std::vector<double> &weights() const { return weights_; }
    // Epoch-by-epoch guidance, when recording is enabled.
    void record_tables(bool on) { record_ = on; }
    const std::vector<GuidanceTable> &tables() const { return tables_; }

  private:
    GuidanceTable publish(std::vector<double> weights, int epoch);

    const Network *network_;
    const OpModeTable *table_;
    ObjectiveConfig cfg_;
    bool verify_loops_;
    bool record_ = false;
    std::unique_ptr<LinkForecaster> forecaster_;
    IntersectionNetwork intersections_;
    GuidanceTable current_;
    std::vector<double> weights_;
    std::vector<GuidanceTable> tables_;
};

} // namespace ecoroute
