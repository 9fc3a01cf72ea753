#include "linkpred/scores.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace linkpred {

namespace {

void zero_diagonal(Eigen::MatrixXd& m) {
    m.diagonal().setZero();
}

Eigen::MatrixXd min_max_scaled(const Eigen::MatrixXd& values) {
    const Eigen::Index n = values.rows();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            lo = std::min(lo, values(i, j));
            hi = std::max(hi, values(i, j));
        }
    }
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    if (n < 2 || hi <= lo) {
        return out; // constant input maps to all-zero
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i != j) out(i, j) = (values(i, j) - lo) / (hi - lo);
        }
    }
    return out;
}

Eigen::MatrixXd bound_scaled(const Eigen::MatrixXd& values, double bound) {
    if (bound <= 0.0) {
        return Eigen::MatrixXd::Zero(values.rows(), values.cols());
    }
    Eigen::MatrixXd out = values / bound;
    zero_diagonal(out);
    return out;
}

void check_same_shape(const NormalizedMatrix& a, const NormalizedMatrix& b) {
    if (a.values.rows() != b.values.rows() || a.values.cols() != b.values.cols()) {
        throw ConfigError("normalized matrices must have identical shapes");
    }
}

Eigen::MatrixXd combination(const NormalizedMatrix& weights, const NormalizedMatrix& entropies) {
    check_same_shape(weights, entropies);
    const Eigen::Index n = weights.values.rows();
    Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(n, n);
    Eigen::MatrixXd out = (ones - weights.values).cwiseProduct(entropies.values);
    zero_diagonal(out);
    return out;
}

} // namespace

NormalizedMatrix normalize(const CollapsedMatrix& matrix, NormalizationMode mode) {
    NormalizedMatrix out;
    out.normalization = mode;
    out.values = mode == NormalizationMode::analytic_max
                     ? bound_scaled(matrix.values, matrix.analytic_max)
                     : min_max_scaled(matrix.values);
    return out;
}

NormalizedMatrix normalize(const EntropyMatrix& matrix, NormalizationMode mode) {
    NormalizedMatrix out;
    out.normalization = mode;
    out.values = mode == NormalizationMode::analytic_max
                     ? bound_scaled(matrix.values, std::log(static_cast<double>(matrix.horizon)))
                     : min_max_scaled(matrix.values);
    return out;
}

NormalizedMatrix normalize(const ScoreMatrix& matrix) {
    NormalizedMatrix out;
    out.normalization = NormalizationMode::min_max;
    out.values = min_max_scaled(matrix.values);
    return out;
}

ScoreMatrix xe_score(const NormalizedMatrix& weights, const NormalizedMatrix& entropies) {
    ScoreMatrix out;
    out.values = combination(weights, entropies);
    out.direction = Direction::ascending_likelihood;
    out.metric_name = "xe";
    return out;
}

ScoreMatrix se_score(const NormalizedMatrix& katz, const NormalizedMatrix& entropies) {
    ScoreMatrix out;
    out.values = combination(katz, entropies);
    out.direction = Direction::ascending_likelihood;
    out.metric_name = "se";
    return out;
}

ScoreMatrix xes_score(const NormalizedMatrix& weights, const NormalizedMatrix& entropies,
                      double beta) {
    ScoreMatrix out;
    out.values = katz_closed_form(combination(weights, entropies), beta);
    out.direction = Direction::ascending_likelihood;
    out.metric_name = "xes";
    return out;
}

ScoreMatrix xns_score(const ContactTensor& tensor, double theta, double beta, CollapseKind variant,
                      const EntropySeries* link_series, const EntropySeries* proximity_series,
                      MaxEntropyMode max_mode) {
    const CollapsedMatrix weights =
        collapse_xnew(tensor, theta, variant, link_series, proximity_series, max_mode);
    ScoreMatrix out;
    out.values = katz_closed_form(weights.values, beta);
    out.direction = Direction::descending_likelihood;
    switch (variant) {
        case CollapseKind::xnew1: out.metric_name = "xns1"; break;
        case CollapseKind::xnew2: out.metric_name = "xns2"; break;
        case CollapseKind::xnew3: out.metric_name = "xns3"; break;
        case CollapseKind::standard: out.metric_name = "xns"; break;
    }
    return out;
}

ScoreMatrix baseline_scores(const ContactTensor& tensor, BaselineMetric metric) {
    const auto adj = union_adjacency(tensor);
    const int n = tensor.node_count();
    ScoreMatrix out;
    out.values = Eigen::MatrixXd::Zero(n, n);
    out.direction = Direction::descending_likelihood;
    switch (metric) {
        case BaselineMetric::common_neighbors: out.metric_name = "cn"; break;
        case BaselineMetric::adamic_adar: out.metric_name = "aa"; break;
        case BaselineMetric::jaccard: out.metric_name = "jaccard"; break;
    }
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int nb : adj[static_cast<std::size_t>(i)]) mark[static_cast<std::size_t>(nb)] = 1;
        for (int j = i + 1; j < n; ++j) {
            double common = 0.0;
            double aa = 0.0;
            for (int nb : adj[static_cast<std::size_t>(j)]) {
                if (mark[static_cast<std::size_t>(nb)]) {
                    common += 1.0;
                    const auto degree = adj[static_cast<std::size_t>(nb)].size();
                    if (degree > 1) aa += 1.0 / std::log(static_cast<double>(degree));
                }
            }
            double value = 0.0;
            switch (metric) {
                case BaselineMetric::common_neighbors:
                    value = common;
                    break;
                case BaselineMetric::adamic_adar:
                    value = aa;
                    break;
                case BaselineMetric::jaccard: {
                    const double unions = static_cast<double>(adj[static_cast<std::size_t>(i)].size() +
                                                              adj[static_cast<std::size_t>(j)].size()) -
                                          common;
                    value = unions > 0 ? common / unions : 0.0;
                    break;
                }
            }
            out.values(i, j) = value;
            out.values(j, i) = value;
        }
        for (int nb : adj[static_cast<std::size_t>(i)]) mark[static_cast<std::size_t>(nb)] = 0;
    }
    return out;
}

} // namespace linkpred
