#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkpred/contact_tensor.hpp"
#include "linkpred/eval.hpp"
#include "linkpred/katz.hpp"
#include "linkpred/scores.hpp"
#include "linkpred/trace.hpp"

namespace linkpred {

enum class Metric { katz, xe, se, xes, xns1, xns2, xns3, common_neighbors, adamic_adar, jaccard };

std::string metric_name(Metric metric);
std::optional<Metric> metric_from_name(const std::string& name);

/// Whether the metric needs two-hop proximity sequences (and therefore
/// cannot run with one-hop knowledge).
bool metric_needs_proximity(Metric metric);

enum class Knowledge { full, ego1, ego2 };

struct ExperimentConfig {
    double theta = 0.2;
    double beta = 0.001;
    Knowledge knowledge = Knowledge::full;
    EgoGraphMode ego_graph = EgoGraphMode::union_graph;
    NormalizationMode normalization = NormalizationMode::analytic_max;
    MaxEntropyMode max_entropy = MaxEntropyMode::analytic_log;
    std::map<std::string, Direction> direction_overrides;
};

/// Scores for one metric plus the pair universe they cover (nullopt = all
/// unordered pairs).
struct MetricResult {
    ScoreMatrix scores;
    std::optional<PairList> universe;
};

MetricResult compute_metric(const ContactTensor& tensor, Metric metric,
                            const ExperimentConfig& config);

/// One report per metric, evaluated against the held-out truth.
std::vector<EvalReport> run_experiment(const ContactTensor& tensor, const GroundTruth& truth,
                                       std::span<const Metric> metrics,
                                       const ExperimentConfig& config);

/// Tracked tensor plus held-out benchmark for one period length: the tracked
/// window is [window_start, window_end) and the benchmark is the period
/// immediately after it, [window_end, window_end + period_length).
struct Scenario {
    ContactTensor tracked;
    GroundTruth truth;
    double period_length;
};

Scenario build_scenario(const std::vector<ContactEvent>& events, double window_start,
                        double window_end, double period_length,
                        std::optional<int> node_count = std::nullopt);

} // namespace linkpred
