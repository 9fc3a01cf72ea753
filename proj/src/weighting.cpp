#include "linkpred/weighting.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace linkpred {

namespace {

void check_theta(double theta) {
    if (!(theta > 0.0 && theta < 1.0)) {
        throw ConfigError("theta must lie strictly between 0 and 1");
    }
}

const EntropySeries& require_series(const EntropySeries* series, EntropySource source,
                                    const ContactTensor& tensor, const char* label) {
    if (series == nullptr) {
        throw ConfigError(std::string("variant requires the ") + label + " entropy series");
    }
    if (static_cast<int>(series->size()) != tensor.period_count()) {
        throw ConfigError(std::string(label) + " entropy series must cover horizons 1..T");
    }
    for (std::size_t t = 0; t < series->size(); ++t) {
        const EntropyMatrix& m = (*series)[t];
        if (m.source != source) {
            throw ConfigError(std::string(label) + " entropy series has the wrong source");
        }
        if (m.horizon != static_cast<int>(t) + 1 || m.values.rows() != tensor.node_count()) {
            throw ConfigError(std::string(label) + " entropy series is inconsistent with the tensor");
        }
    }
    return *series;
}

} // namespace

CollapsedMatrix collapse(const ContactTensor& tensor, double theta) {
    check_theta(theta);
    const int n = tensor.node_count();
    const int periods = tensor.period_count();
    CollapsedMatrix out;
    out.theta = theta;
    out.kind = CollapseKind::standard;
    out.periods = periods;
    out.values = Eigen::MatrixXd::Zero(n, n);
    const double decay = 1.0 - theta;
    double max_sum = 0.0;
    for (int p = 0; p < periods; ++p) {
        const double weight = std::pow(decay, periods - 1 - p);
        max_sum += weight;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (tensor.link(p, i, j)) {
                    out.values(i, j) += weight;
                    out.values(j, i) += weight;
                }
            }
        }
    }
    out.analytic_max = max_sum;
    return out;
}

CollapsedMatrix collapse_xnew(const ContactTensor& tensor, double theta, CollapseKind variant,
                              const EntropySeries* link_series,
                              const EntropySeries* proximity_series, MaxEntropyMode max_mode) {
    check_theta(theta);
    if (variant == CollapseKind::standard) {
        throw ConfigError("collapse_xnew expects an xnew variant");
    }
    const bool needs_link = variant == CollapseKind::xnew1 || variant == CollapseKind::xnew3;
    const bool needs_proximity = variant == CollapseKind::xnew2 || variant == CollapseKind::xnew3;
    const EntropySeries* link =
        needs_link ? &require_series(link_series, EntropySource::link, tensor, "link") : nullptr;
    const EntropySeries* prox =
        needs_proximity
            ? &require_series(proximity_series, EntropySource::proximity, tensor, "proximity")
            : nullptr;

    const int n = tensor.node_count();
    const int periods = tensor.period_count();
    const int exponent_factor = variant == CollapseKind::xnew3 ? 3 : 2;
    const double decay = 1.0 - theta;

    std::vector<double> max_entropy(static_cast<std::size_t>(periods));
    for (int t = 1; t <= periods; ++t) {
        max_entropy[static_cast<std::size_t>(t - 1)] = max_entropy_bound(t, max_mode);
    }

    CollapsedMatrix out;
    out.theta = theta;
    out.kind = variant;
    out.periods = periods;
    out.values = Eigen::MatrixXd::Zero(n, n);
    double max_sum = 0.0;
    for (int t = 0; t < periods; ++t) {
        const double weight = std::pow(decay, exponent_factor * (periods - 1 - t));
        const double cap = max_entropy[static_cast<std::size_t>(t)];
        max_sum += weight * (variant == CollapseKind::xnew3 ? cap * cap : cap);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (!tensor.link(t, i, j)) continue;
                double term = weight;
                if (needs_link) {
                    const double bracket = cap - (*link)[static_cast<std::size_t>(t)].values(i, j);
                    if (bracket < 0) {
                        throw NumericError("link entropy exceeds the max-entropy bound at horizon " +
                                           std::to_string(t + 1));
                    }
                    term *= bracket;
                }
                if (needs_proximity) {
                    const double bracket = cap - (*prox)[static_cast<std::size_t>(t)].values(i, j);
                    if (bracket < 0) {
                        throw NumericError(
                            "proximity entropy exceeds the max-entropy bound at horizon " +
                            std::to_string(t + 1));
                    }
                    term *= bracket;
                }
                out.values(i, j) += term;
                out.values(j, i) += term;
            }
        }
    }
    out.analytic_max = max_sum;
    return out;
}

} // namespace linkpred
