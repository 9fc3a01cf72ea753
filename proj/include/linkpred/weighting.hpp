#pragma once

#include <Eigen/Core>

#include "linkpred/contact_tensor.hpp"
#include "linkpred/entropy.hpp"
#include "linkpred/error.hpp"

namespace linkpred {

enum class CollapseKind { standard, xnew1, xnew2, xnew3 };

/// Recency-weighted aggregation of a tensor into a single nonnegative
/// symmetric matrix. `analytic_max` is the largest value any entry can take
/// for this kind, theta and period count.
struct CollapsedMatrix {
    Eigen::MatrixXd values;
    double theta = 0.0;
    CollapseKind kind = CollapseKind::standard;
    int periods = 0;
    double analytic_max = 0.0;
};

/// X(i,j) = sum over periods p of (1-theta)^(T-p) * Z_p(i,j).
CollapsedMatrix collapse(const ContactTensor& tensor, double theta);

/// Entropy-modulated collapse. With decay d = (1-theta) and per-horizon
/// maximum M_t:
///   xnew1/xnew2: sum_t d^(2(T-t)) * Z_t(i,j) * [M_t - E_t(i,j)]
///   xnew3:       sum_t d^(3(T-t)) * Z_t(i,j) * [M_t - E^l_t(i,j)] * [M_t - E^p_t(i,j)]
/// The series arguments are prefix entropies (element t-1 computed over
/// periods 1..t). xnew1 needs the link series, xnew2 the proximity series,
/// xnew3 both.
CollapsedMatrix collapse_xnew(const ContactTensor& tensor, double theta, CollapseKind variant,
                              const EntropySeries* link_series,
                              const EntropySeries* proximity_series,
                              MaxEntropyMode max_mode = MaxEntropyMode::analytic_log);

} // namespace linkpred
