#include "linkpred/katz.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Dense>

namespace linkpred {

double spectral_radius_estimate(const Eigen::MatrixXd& matrix) {
    const Eigen::Index n = matrix.rows();
    if (n == 0 || matrix.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    Eigen::VectorXd v = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
    double estimate = 0.0;
    for (int iter = 0; iter < 1000; ++iter) {
        Eigen::VectorXd w = matrix * v;
        const double norm = w.norm();
        if (norm == 0.0) return 0.0;
        const double next = norm; // ||Mv|| with ||v|| = 1
        w /= norm;
        if (iter > 0 && std::abs(next - estimate) <= 1e-6 * std::abs(next)) {
            return next;
        }
        estimate = next;
        v = std::move(w);
    }
    return estimate;
}

Eigen::MatrixXd katz_closed_form(const Eigen::MatrixXd& matrix, double beta) {
    if (!(beta > 0.0)) {
        throw ConfigError("beta must be strictly positive");
    }
    const double rho = spectral_radius_estimate(matrix);
    if (beta * rho >= 0.9) {
        throw NumericError("beta exceeds 1/spectral-radius: beta*rho = " +
                           std::to_string(beta * rho) + " (limit 0.9)");
    }
    const Eigen::Index n = matrix.rows();
    const Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) - beta * matrix;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
    if (lu.rcond() < 1e-12) {
        throw NumericError("singular system in Katz closed form");
    }
    Eigen::MatrixXd scores = lu.solve(Eigen::MatrixXd::Identity(n, n));
    scores -= Eigen::MatrixXd::Identity(n, n);
    return scores;
}

ScoreMatrix katz_scores(const CollapsedMatrix& weights, double beta) {
    ScoreMatrix out;
    out.values = katz_closed_form(weights.values, beta);
    out.direction = Direction::descending_likelihood;
    out.metric_name = "katz";
    return out;
}

ScoreMatrix katz_truncated(const CollapsedMatrix& weights, double beta, int max_len) {
    if (max_len < 1) {
        throw ConfigError("katz_truncated requires max_len >= 1");
    }
    const int n = static_cast<int>(weights.values.rows());
    const auto& x = weights.values;
    std::vector<double> power(x.data(), x.data() + n * n); // column-major copy of X^l
    std::vector<double> next(static_cast<std::size_t>(n) * n);
    ScoreMatrix out;
    out.values = Eigen::MatrixXd::Zero(n, n);
    out.direction = Direction::descending_likelihood;
    out.metric_name = "katz_truncated";
    double beta_pow = beta;
    for (int len = 1; len <= max_len; ++len) {
        for (int c = 0; c < n; ++c) {
            for (int r = 0; r < n; ++r) {
                out.values(r, c) += beta_pow * power[static_cast<std::size_t>(c) * n + r];
            }
        }
        if (len == max_len) break;
        // next = power * X, naive loops on the raw buffers
        std::fill(next.begin(), next.end(), 0.0);
        for (int c = 0; c < n; ++c) {
            for (int k = 0; k < n; ++k) {
                const double xkc = x(k, c);
                if (xkc == 0.0) continue;
                for (int r = 0; r < n; ++r) {
                    next[static_cast<std::size_t>(c) * n + r] +=
                        power[static_cast<std::size_t>(k) * n + r] * xkc;
                }
            }
        }
        std::swap(power, next);
        beta_pow *= beta;
    }
    return out;
}

std::vector<int> ego_restrict(const ContactTensor& tensor, int center, int hops,
                              EgoGraphMode mode) {
    if (center < 0 || center >= tensor.node_count()) {
        throw ConfigError("ego center out of range");
    }
    if (hops != 1 && hops != 2) {
        throw ConfigError("ego restriction supports 1 or 2 hops");
    }
    std::set<int> members = {center};
    if (mode == EgoGraphMode::union_graph) {
        const auto adj = union_adjacency(tensor);
        for (int nb : adj[static_cast<std::size_t>(center)]) {
            members.insert(nb);
            if (hops == 2) {
                for (int nb2 : adj[static_cast<std::size_t>(nb)]) members.insert(nb2);
            }
        }
    } else {
        // Ball around the center within each period's graph, then union.
        const int n = tensor.node_count();
        for (int t = 0; t < tensor.period_count(); ++t) {
            std::vector<int> direct;
            for (int j = 0; j < n; ++j) {
                if (j != center && tensor.link(t, center, j)) direct.push_back(j);
            }
            for (int nb : direct) {
                members.insert(nb);
                if (hops == 2) {
                    for (int j = 0; j < n; ++j) {
                        if (j != nb && tensor.link(t, nb, j)) members.insert(j);
                    }
                }
            }
        }
    }
    return std::vector<int>(members.begin(), members.end());
}

} // namespace linkpred
