#include "linkpred/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace linkpred {

namespace {

// Lazily materializes the intermediates shared between metrics over one
// tensor: collapsed weights, Katz scores, entropy series, proximity grid.
class MetricEngine {
public:
    MetricEngine(const ContactTensor& tensor, const ExperimentConfig& config)
        : tensor_(tensor), config_(config) {}

    ScoreMatrix compute(Metric metric) {
        switch (metric) {
            case Metric::katz:
                return katz_scores(weights(), config_.beta);
            case Metric::xe:
                return xe_score(normalized_weights(), normalized_link_entropy());
            case Metric::se: {
                const ScoreMatrix katz = katz_scores(weights(), config_.beta);
                return se_score(normalize(katz), normalized_link_entropy());
            }
            case Metric::xes:
                return xes_score(normalized_weights(), normalized_link_entropy(), config_.beta);
            case Metric::xns1:
                return xns_score(tensor_, config_.theta, config_.beta, CollapseKind::xnew1,
                                 &link_series(), nullptr, config_.max_entropy);
            case Metric::xns2:
                return xns_score(tensor_, config_.theta, config_.beta, CollapseKind::xnew2, nullptr,
                                 &proximity_series(), config_.max_entropy);
            case Metric::xns3:
                return xns_score(tensor_, config_.theta, config_.beta, CollapseKind::xnew3,
                                 &link_series(), &proximity_series(), config_.max_entropy);
            case Metric::common_neighbors:
                return baseline_scores(tensor_, BaselineMetric::common_neighbors);
            case Metric::adamic_adar:
                return baseline_scores(tensor_, BaselineMetric::adamic_adar);
            case Metric::jaccard:
                return baseline_scores(tensor_, BaselineMetric::jaccard);
        }
        throw ConfigError("unknown metric");
    }

private:
    const CollapsedMatrix& weights() {
        if (!weights_) weights_ = collapse(tensor_, config_.theta);
        return *weights_;
    }
    const NormalizedMatrix& normalized_weights() {
        if (!normalized_weights_) normalized_weights_ = normalize(weights(), config_.normalization);
        return *normalized_weights_;
    }
    const NormalizedMatrix& normalized_link_entropy() {
        if (!normalized_entropy_) {
            normalized_entropy_ =
                normalize(link_entropy(tensor_, tensor_.period_count()), config_.normalization);
        }
        return *normalized_entropy_;
    }
    const EntropySeries& link_series() {
        if (!link_series_) link_series_ = entropy_series(tensor_, tensor_.period_count());
        return *link_series_;
    }
    const EntropySeries& proximity_series() {
        if (!proximity_series_) {
            proximity_series_ =
                entropy_series(proximity_tensor(tensor_), tensor_.period_count());
        }
        return *proximity_series_;
    }

    const ContactTensor& tensor_;
    ExperimentConfig config_;
    std::optional<CollapsedMatrix> weights_;
    std::optional<NormalizedMatrix> normalized_weights_;
    std::optional<NormalizedMatrix> normalized_entropy_;
    std::optional<EntropySeries> link_series_;
    std::optional<EntropySeries> proximity_series_;
};

void apply_direction_override(ScoreMatrix& scores, const ExperimentConfig& config) {
    const auto it = config.direction_overrides.find(scores.metric_name);
    if (it != config.direction_overrides.end()) {
        scores.direction = it->second;
    }
}

void check_knowledge(Metric metric, Knowledge knowledge) {
    if (knowledge == Knowledge::ego1 && metric_needs_proximity(metric)) {
        throw ConfigError("metric " + metric_name(metric) + " requires two-hop knowledge");
    }
}

MetricResult compute_full(const ContactTensor& tensor, Metric metric,
                          const ExperimentConfig& config) {
    MetricEngine engine(tensor, config);
    MetricResult result;
    result.scores = engine.compute(metric);
    apply_direction_override(result.scores, config);
    return result;
}

// Distributed mode: every node scores the pairs inside its own ego
// sub-tensor; a pair seen by both endpoints keeps the likelier of the two
// scores. The evaluated universe is the union of the per-center pair sets.
MetricResult compute_ego(const ContactTensor& tensor, Metric metric,
                         const ExperimentConfig& config) {
    const int hops = config.knowledge == Knowledge::ego1 ? 1 : 2;
    const int n = tensor.node_count();
    Eigen::MatrixXd combined = Eigen::MatrixXd::Zero(n, n);
    std::vector<char> covered(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    Direction direction = Direction::descending_likelihood;
    std::string name;

    for (int center = 0; center < n; ++center) {
        const std::vector<int> members = ego_restrict(tensor, center, hops, config.ego_graph);
        if (members.size() < 2) continue;
        const ContactTensor sub = induced_subtensor(tensor, members);
        MetricEngine engine(sub, config);
        ScoreMatrix local = engine.compute(metric);
        direction = local.direction;
        name = local.metric_name;
        const int center_idx = static_cast<int>(
            std::lower_bound(members.begin(), members.end(), center) - members.begin());
        const bool ascending = direction == Direction::ascending_likelihood;
        for (std::size_t k = 0; k < members.size(); ++k) {
            if (static_cast<int>(k) == center_idx) continue;
            const int other = members[k];
            const double value = local.values(center_idx, static_cast<int>(k));
            const std::size_t flat =
                static_cast<std::size_t>(std::min(center, other)) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(std::max(center, other));
            if (!covered[flat]) {
                covered[flat] = 1;
                combined(std::min(center, other), std::max(center, other)) = value;
            } else {
                double& slot = combined(std::min(center, other), std::max(center, other));
                slot = ascending ? std::min(slot, value) : std::max(slot, value);
            }
        }
    }

    MetricResult result;
    result.scores.values = Eigen::MatrixXd::Zero(n, n);
    result.scores.direction = direction;
    result.scores.metric_name = name.empty() ? metric_name(metric) : name;
    result.universe = PairList{};
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::size_t flat =
                static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
            if (covered[flat]) {
                result.universe->emplace_back(i, j);
                result.scores.values(i, j) = combined(i, j);
                result.scores.values(j, i) = combined(i, j);
            }
        }
    }
    apply_direction_override(result.scores, config);
    return result;
}

} // namespace

std::string metric_name(Metric metric) {
    switch (metric) {
        case Metric::katz: return "katz";
        case Metric::xe: return "xe";
        case Metric::se: return "se";
        case Metric::xes: return "xes";
        case Metric::xns1: return "xns1";
        case Metric::xns2: return "xns2";
        case Metric::xns3: return "xns3";
        case Metric::common_neighbors: return "cn";
        case Metric::adamic_adar: return "aa";
        case Metric::jaccard: return "jaccard";
    }
    throw ConfigError("unknown metric");
}

std::optional<Metric> metric_from_name(const std::string& name) {
    static const std::map<std::string, Metric> table = {
        {"katz", Metric::katz},   {"xe", Metric::xe},
        {"se", Metric::se},       {"xes", Metric::xes},
        {"xns1", Metric::xns1},   {"xns2", Metric::xns2},
        {"xns3", Metric::xns3},   {"cn", Metric::common_neighbors},
        {"aa", Metric::adamic_adar}, {"jaccard", Metric::jaccard},
    };
    const auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

bool metric_needs_proximity(Metric metric) {
    return metric == Metric::xns2 || metric == Metric::xns3;
}

MetricResult compute_metric(const ContactTensor& tensor, Metric metric,
                            const ExperimentConfig& config) {
    check_knowledge(metric, config.knowledge);
    if (config.knowledge == Knowledge::full) {
        return compute_full(tensor, metric, config);
    }
    return compute_ego(tensor, metric, config);
}

std::vector<EvalReport> run_experiment(const ContactTensor& tensor, const GroundTruth& truth,
                                       std::span<const Metric> metrics,
                                       const ExperimentConfig& config) {
    if (tensor.node_count() != truth.node_count()) {
        throw ConfigError("tensor and ground truth disagree on node count");
    }
    for (const Metric metric : metrics) {
        check_knowledge(metric, config.knowledge);
    }
    std::vector<EvalReport> reports;
    reports.reserve(metrics.size());
    if (config.knowledge == Knowledge::full) {
        MetricEngine engine(tensor, config); // shared intermediates across metrics
        for (const Metric metric : metrics) {
            ScoreMatrix scores = engine.compute(metric);
            apply_direction_override(scores, config);
            reports.push_back(accuracy_sweep(scores, truth));
        }
    } else {
        for (const Metric metric : metrics) {
            const MetricResult result = compute_ego(tensor, metric, config);
            reports.push_back(accuracy_sweep(result.scores, truth, *result.universe));
        }
    }
    return reports;
}

Scenario build_scenario(const std::vector<ContactEvent>& events, double window_start,
                        double window_end, double period_length, std::optional<int> node_count) {
    DiscretizationConfig config;
    config.window_start = window_start;
    config.window_end = window_end + period_length; // one extra period: the benchmark
    config.period_length = period_length;
    config.node_count = node_count;
    const ContactTensor full = discretize(events, config);
    const int tracked_periods = full.period_count() - 1;
    if (tracked_periods < 1) {
        throw ConfigError("window must contain at least one tracked period");
    }
    ContactTensor tracked(full.node_count(), tracked_periods);
    for (int t = 0; t < tracked_periods; ++t) {
        for (int i = 0; i < full.node_count(); ++i) {
            for (int j = i + 1; j < full.node_count(); ++j) {
                if (full.link(t, i, j)) tracked.set_link(t, i, j);
            }
        }
    }
    return Scenario{std::move(tracked), GroundTruth::from_slice(full, tracked_periods),
                    period_length};
}

} // namespace linkpred
