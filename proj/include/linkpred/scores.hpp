#pragma once

#include <optional>
#include <string>

#include <Eigen/Core>

#include "linkpred/contact_tensor.hpp"
#include "linkpred/entropy.hpp"
#include "linkpred/error.hpp"
#include "linkpred/katz.hpp"
#include "linkpred/weighting.hpp"

namespace linkpred {

enum class NormalizationMode { analytic_max, min_max };

/// Matrix rescaled into [0,1] with a zero diagonal.
struct NormalizedMatrix {
    Eigen::MatrixXd values;
    NormalizationMode normalization = NormalizationMode::analytic_max;
};

/// Collapsed weights normalized by the analytic maximum of their kind
/// (default) or by min-max over off-diagonal entries.
NormalizedMatrix normalize(const CollapsedMatrix& matrix,
                           NormalizationMode mode = NormalizationMode::analytic_max);

/// Entropies normalized by ln(horizon) (default) or min-max.
NormalizedMatrix normalize(const EntropyMatrix& matrix,
                           NormalizationMode mode = NormalizationMode::analytic_max);

/// Katz-style scores have no practical analytic bound; always min-max.
NormalizedMatrix normalize(const ScoreMatrix& matrix);

/// ([1] - Xn) o En, ranked ascending (small value = stable occurring link).
ScoreMatrix xe_score(const NormalizedMatrix& weights, const NormalizedMatrix& entropies);

/// ([1] - Sn) o En with Sn the normalized Katz matrix; ascending.
ScoreMatrix se_score(const NormalizedMatrix& katz, const NormalizedMatrix& entropies);

/// Katz applied to the combination matrix En o ([1] - Xn); ascending.
ScoreMatrix xes_score(const NormalizedMatrix& weights, const NormalizedMatrix& entropies,
                      double beta);

/// Katz of the entropy-modulated collapse (xnew1/xnew2/xnew3); descending.
ScoreMatrix xns_score(const ContactTensor& tensor, double theta, double beta, CollapseKind variant,
                      const EntropySeries* link_series, const EntropySeries* proximity_series,
                      MaxEntropyMode max_mode = MaxEntropyMode::analytic_log);

enum class BaselineMetric { common_neighbors, adamic_adar, jaccard };

/// Classical neighborhood baselines on the union graph over all periods;
/// descending. Adamic-Adar terms with a degree-one common neighbor are
/// skipped (ln 1 = 0).
ScoreMatrix baseline_scores(const ContactTensor& tensor, BaselineMetric metric);

} // namespace linkpred
