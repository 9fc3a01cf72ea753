#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "linkpred/contact_tensor.hpp"
#include "linkpred/error.hpp"
#include "linkpred/weighting.hpp"

namespace linkpred {

/// Which way a score matrix ranks: descending-likelihood means larger values
/// are more likely links, ascending-likelihood the opposite. Consumers must
/// honor the carried direction and ignore the diagonal.
enum class Direction { descending_likelihood, ascending_likelihood };

struct ScoreMatrix {
    Eigen::MatrixXd values;
    Direction direction = Direction::descending_likelihood;
    std::string metric_name;
};

/// Dominant-eigenvalue estimate for symmetric nonnegative matrices (power
/// iteration from the all-ones vector, 1e-6 relative tolerance, 1000
/// iteration cap).
double spectral_radius_estimate(const Eigen::MatrixXd& matrix);

/// (I - beta*M)^-1 - I via a dense LU solve. Requires beta > 0 and
/// beta * spectral_radius(M) < 0.9 (margin under the convergence limit);
/// throws NumericError otherwise.
Eigen::MatrixXd katz_closed_form(const Eigen::MatrixXd& matrix, double beta);

/// Katz scores of a collapsed matrix; direction is descending-likelihood.
ScoreMatrix katz_scores(const CollapsedMatrix& weights, double beta);

/// Partial sum of beta^l * X^l for l = 1..max_len, accumulated with plain
/// triple-loop multiplies. Serves as the independent check for
/// katz_scores; quadratic-size intent, use small N.
ScoreMatrix katz_truncated(const CollapsedMatrix& weights, double beta, int max_len);

/// Whether the ego neighborhood is taken on the union graph over all
/// periods or on per-period graphs (union of per-period balls).
enum class EgoGraphMode { union_graph, per_period };

/// Sorted node ids within `hops` (1 or 2) of `center`, center included.
std::vector<int> ego_restrict(const ContactTensor& tensor, int center, int hops,
                              EgoGraphMode mode = EgoGraphMode::union_graph);

} // namespace linkpred
