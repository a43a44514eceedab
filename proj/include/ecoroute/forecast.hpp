#pragma once

#include "ecoroute/emissions.hpp"
#include "ecoroute/linkstate.hpp"
#include "ecoroute/lstm.hpp"
#include "ecoroute/netcore.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ecoroute {

enum class Feature { speed, density, flow_lane, ghg_er, delay, inlink_speed };
enum class PredictTarget { speed, ghg_er };

std::string to_string(Feature f);
std::string to_string(PredictTarget t);
Feature parse_feature(const std::string &name);
PredictTarget parse_target(const std::string &name);

// {speed, density, in-links speed} for speed; {speed, GHG ER, density,
// in-links speed} for GHG ER.
std::vector<Feature> default_features(PredictTarget target);

// Emission rate seen by routing: the interval's per-vehicle rate, or the
// free-flow cruise rate when nobody used the link.
double effective_er(const Link &link, const LinkIntervalRecord &rec, const OpModeTable &table);
double free_flow_er(const Link &link, const OpModeTable &table);

// Reads one feature from a record (physical units).
double feature_value(Feature f, const Link &link, const LinkIntervalRecord &rec, const OpModeTable &table);
double target_value(PredictTarget t, const Link &link, const LinkIntervalRecord &rec, const OpModeTable &table);

// One simulation run's link-interval records, in any order.
using RunRecords = std::vector<LinkIntervalRecord>;

// Flattens the per-interval history kept by the simulator into one run.
RunRecords flatten_history(const std::vector<std::vector<LinkIntervalRecord>> &history);

struct SequenceSample {
    LinkId link_id = kNone;
    int interval = 0;          // interval of the target
    std::vector<double> input; // n_steps x n_features, row-major, physical units
    double target = 0.0;
};

// Per-feature standardization constants (sd strictly positive).
struct Normalizer {
    std::vector<double> mean, sd;
    double target_mean = 0.0, target_sd = 1.0;

    static Normalizer fit(std::span<const SequenceSample> samples, std::size_t n_features);
    std::vector<double> normalize(std::span<const double> input) const;
    std::vector<double> denormalize(std::span<const double> input) const;
    double normalize_target(double y) const { return (y - target_mean) / target_sd; }
    double denormalize_target(double z) const { return z * target_sd + target_mean; }
};

struct DatasetOptions {
    PredictTarget target = PredictTarget::speed;
    std::vector<Feature> features; // empty = default_features(target)
    int n_steps = 3;
    double train_fraction = 0.8;
};

struct Dataset {
    std::vector<SequenceSample> train, test;
    std::vector<Feature> features;
    PredictTarget target = PredictTarget::speed;
    int n_steps = 3;
};

// Sliding windows of n_steps consecutive intervals predicting the next one.
// Windows never cross a missing interval. The split is time-blocked: samples
// are ordered by target interval and the earliest train_fraction go to train.
// Throws ValidationError when no link has n_steps + 1 consecutive intervals.
Dataset build_dataset(const Network &network, const OpModeTable &table, std::span<const RunRecords> runs,
                      const DatasetOptions &options);

// Pearson correlation; nullopt when either series has zero variance.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationTable {
    PredictTarget target = PredictTarget::speed;
    std::vector<Feature> variables;
    int max_lag = 5;
    std::vector<std::vector<double>> coefficient; // [variable][lag - 1]
    std::vector<std::vector<bool>> zero_variance; // flag, coefficient reported as 0
    std::size_t samples = 0;
};

// Correlates each variable at lags 1..max_lag with the target at the current
// interval, over windows of max_lag + 1 consecutive intervals. Requires at
// least 30 windows.
CorrelationTable correlation_table(const Network &network, const OpModeTable &table,
                                   std::span<const RunRecords> runs, PredictTarget target,
                                   std::vector<Feature> variables = {}, int max_lag = 5);

void write_correlation_table(std::ostream &out, const CorrelationTable &t);

enum class PredictorKind { lstm, linear_ar, oracle, identity };
enum class Solver { adam, sgdm };

std::string to_string(PredictorKind k);
PredictorKind parse_kind(const std::string &name);
std::string to_string(Solver s);
Solver parse_solver(const std::string &name);

struct Hyperparameters {
    Solver solver = Solver::adam;
    double learning_rate = 1e-2;
    int epochs = 200;
    double drop_factor = 0.5;
    int drop_period = 50;
    double momentum = 0.9;
    int hidden1 = 32;
    int hidden2 = 16;
    int batch_size = 64;
    double gradient_clip = 5.0; // global L2 norm
    // Latest share of the training block held out; the epoch with the lowest
    // held-out error is kept. 0 trains on everything and keeps the last epoch.
    double validation_fraction = 0.1;
    int patience = 25; // epochs without improvement before stopping; 0 = never
};

struct PredictionMetrics {
    double rmse = 0.0;
    double correlation = 0.0;
    double r2 = 0.0;
    double slope = 0.0; // least-squares slope of predicted on observed
    std::size_t n = 0;
};

PredictionMetrics evaluate_predictions(std::span<const double> observed, std::span<const double> predicted);

struct TrainingReport {
    PredictionMetrics train, test;
    std::vector<double> loss_history; // mean normalized squared error per epoch
    std::vector<double> validation_history;
    int best_epoch = -1; // -1 when no validation block was used
};

struct PredictorModel {
    PredictorKind kind = PredictorKind::identity;
    PredictTarget target = PredictTarget::speed;
    std::vector<Feature> features;
    int n_steps = 3;
    Normalizer normalizer;
    LstmShape shape;
    std::vector<double> params; // LSTM flat parameters, or AR weights followed by the bias
    Hyperparameters hyper;
    std::uint64_t seed = 0;
    TrainingReport report;

    std::size_t n_inputs() const { return features.size() * static_cast<std::size_t>(n_steps); }
    // Prediction in physical units from an n_steps x n_features window (unclamped).
    double predict_raw(std::span<const double> input) const;
    // Throws ModelError when shapes are inconsistent.
    void validate() const;
};

// Untrained LSTM with initialized parameters and normalization fitted on `data.train`.
PredictorModel init_lstm(const Dataset &data, const Hyperparameters &hyper, std::uint64_t seed);

// Mini-batch BPTT on mean squared error; deterministic given the seed.
// Throws ModelError if the loss becomes non-finite.
PredictorModel train(const Dataset &data, const Hyperparameters &hyper, std::uint64_t seed);

// Ridge-regularized linear autoregression over the same windows.
PredictorModel train_linear_ar(const Dataset &data, double ridge = 1e-6);

PredictorModel identity_predictor(PredictTarget target);
PredictorModel oracle_predictor(PredictTarget target);

// Clamp rules: negative predictions become 0, speeds above the limit become the limit.
double clamp_prediction(PredictTarget target, double raw, double speed_limit_kmh);

// Clamped t+1 prediction for link `link_index` from the simulator's closed
// intervals. With fewer than n_steps intervals (or an identity model) the
// current interval's value is returned.
double predict_link(const PredictorModel &model, std::span<const std::vector<LinkIntervalRecord>> history,
                    const Network &network, std::size_t link_index, const OpModeTable &table);

void save_model(const std::string &path, const PredictorModel &model);
PredictorModel load_model(const std::string &path);
std::string model_to_json(const PredictorModel &model);
PredictorModel model_from_json(const std::string &text);

} // namespace ecoroute
