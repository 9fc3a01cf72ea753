// Independent brute-force reference implementations used to pin expected
// values. These deliberately avoid the library's code paths: direct
// substring scans, BFS, naive double loops, exhaustive threshold sweeps.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "linkpred/contact_tensor.hpp"
#include "linkpred/eval.hpp"
#include "linkpred/katz.hpp"
#include "linkpred/trace.hpp"

namespace oracle {

// O(n^3) Lempel-Ziv match-length scan: for each position, try lengths
// 1, 2, ... and test occurrence inside the prefix by direct comparison.
inline long long lz_lambda_sum(const std::vector<std::uint8_t>& s) {
    const int n = static_cast<int>(s.size());
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        int lambda = (n - i) + 1; // exhausted-suffix convention
        for (int len = 1; len <= n - i; ++len) {
            bool found = false;
            for (int a = 0; a + len <= i && !found; ++a) {
                found = std::equal(s.begin() + a, s.begin() + a + len, s.begin() + i);
            }
            if (!found) {
                lambda = len;
                break;
            }
        }
        sum += lambda;
    }
    return sum;
}

inline double lz_entropy(const std::vector<std::uint8_t>& s) {
    const int n = static_cast<int>(s.size());
    return static_cast<double>(n) * std::log(static_cast<double>(n)) /
           static_cast<double>(lz_lambda_sum(s));
}

// BFS distances within one tensor slice.
inline std::vector<int> bfs_distances(const linkpred::ContactTensor& tensor, int period,
                                      int source) {
    const int n = tensor.node_count();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::queue<int> frontier;
    dist[static_cast<std::size_t>(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v = 0; v < n; ++v) {
            if (v != u && tensor.link(period, u, v) && dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                frontier.push(v);
            }
        }
    }
    return dist;
}

// Naive scalar evaluation of the recency-weighted collapse.
inline Eigen::MatrixXd collapse_naive(const linkpred::ContactTensor& tensor, double theta) {
    const int n = tensor.node_count();
    const int periods = tensor.period_count();
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double sum = 0.0;
            for (int p = 1; p <= periods; ++p) {
                if (tensor.link(p - 1, i, j)) {
                    sum += std::pow(1.0 - theta, periods - p);
                }
            }
            x(i, j) = sum;
        }
    }
    return x;
}

// Sort-based reference for the top-scores ratio: pairs are generated in
// lexicographic order, so a stable sort on the value alone realizes the
// documented tie-break.
inline double top_scores_ratio(const linkpred::ScoreMatrix& scores,
                               const linkpred::GroundTruth& truth,
                               const linkpred::PairList& universe) {
    std::vector<std::pair<double, bool>> entries;
    for (const auto& [i, j] : universe) {
        entries.emplace_back(scores.values(i, j), truth.link(i, j));
    }
    const bool ascending = scores.direction == linkpred::Direction::ascending_likelihood;
    std::stable_sort(entries.begin(), entries.end(),
                     [ascending](const auto& a, const auto& b) {
                         return ascending ? a.first < b.first : a.first > b.first;
                     });
    long long positives = 0;
    for (const auto& e : entries) positives += e.second ? 1 : 0;
    long long hits = 0;
    for (long long k = 0; k < positives; ++k) {
        hits += entries[static_cast<std::size_t>(k)].second ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(positives);
}

struct SweepReference {
    double best_accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    long long tp = 0, fp = 0, tn = 0, fn = 0;
};

// Literal threshold enumeration: every distinct score value is tried as the
// decision threshold (plus the predict-nothing extreme), classifying all
// pairs by direct comparison each time. Accuracy ties resolve toward fewer
// predicted positives.
inline SweepReference accuracy_sweep(const linkpred::ScoreMatrix& scores,
                                     const linkpred::GroundTruth& truth,
                                     const linkpred::PairList& universe) {
    const bool ascending = scores.direction == linkpred::Direction::ascending_likelihood;
    std::vector<double> thresholds;
    for (const auto& [i, j] : universe) thresholds.push_back(scores.values(i, j));
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    thresholds.push_back(ascending ? -std::numeric_limits<double>::infinity()
                                   : std::numeric_limits<double>::infinity());

    SweepReference best;
    long long best_correct = -1;
    long long best_predicted = 0;
    const long long total = static_cast<long long>(universe.size());
    for (const double threshold : thresholds) {
        long long tp = 0, fp = 0, tn = 0, fn = 0;
        for (const auto& [i, j] : universe) {
            const double v = scores.values(i, j);
            const bool predicted = ascending ? v <= threshold : v >= threshold;
            const bool actual = truth.link(i, j);
            if (predicted && actual) ++tp;
            if (predicted && !actual) ++fp;
            if (!predicted && actual) ++fn;
            if (!predicted && !actual) ++tn;
        }
        const long long correct = tp + tn;
        const long long predicted_count = tp + fp;
        if (correct > best_correct ||
            (correct == best_correct && predicted_count < best_predicted)) {
            best_correct = correct;
            best_predicted = predicted_count;
            best.tp = tp;
            best.fp = fp;
            best.tn = tn;
            best.fn = fn;
        }
    }
    best.best_accuracy = static_cast<double>(best_correct) / static_cast<double>(total);
    best.precision = best.tp + best.fp > 0
                         ? static_cast<double>(best.tp) / static_cast<double>(best.tp + best.fp)
                         : 0.0;
    best.recall = best.tp + best.fn > 0
                      ? static_cast<double>(best.tp) / static_cast<double>(best.tp + best.fn)
                      : 0.0;
    const double pr = best.precision + best.recall;
    best.f_measure = pr > 0 ? 2.0 * best.precision * best.recall / pr : 0.0;
    return best;
}

// Per-second co-location simulator for integer-valued association traces.
inline linkpred::ContactTensor colocation_tensor_per_second(
    const std::vector<linkpred::AssociationEvent>& events, int node_count, int window_start,
    int window_end, int period_length) {
    const int periods = (window_end - window_start) / period_length;
    linkpred::ContactTensor tensor(node_count, periods);
    auto associated = [&](int node, int location, int second) {
        for (const auto& ev : events) {
            if (ev.node == node && ev.location == location && ev.start <= second &&
                second < ev.end) {
                return true;
            }
        }
        return false;
    };
    std::vector<int> locations;
    for (const auto& ev : events) locations.push_back(ev.location);
    std::sort(locations.begin(), locations.end());
    locations.erase(std::unique(locations.begin(), locations.end()), locations.end());
    for (int p = 0; p < periods; ++p) {
        for (int second = window_start + p * period_length;
             second < window_start + (p + 1) * period_length; ++second) {
            for (int i = 0; i < node_count; ++i) {
                for (int j = i + 1; j < node_count; ++j) {
                    for (const int loc : locations) {
                        if (associated(i, loc, second) && associated(j, loc, second)) {
                            tensor.set_link(p, i, j);
                        }
                    }
                }
            }
        }
    }
    return tensor;
}

// --- random instance helpers -------------------------------------------

inline linkpred::ContactTensor random_tensor(std::mt19937_64& rng, int n, int t, double density) {
    linkpred::ContactTensor tensor(n, t);
    std::bernoulli_distribution flip(density);
    for (int p = 0; p < t; ++p) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (flip(rng)) tensor.set_link(p, i, j);
            }
        }
    }
    return tensor;
}

inline Eigen::MatrixXd random_symmetric_nonneg(std::mt19937_64& rng, int n, double scale) {
    std::uniform_real_distribution<double> value(0.0, scale);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = value(rng);
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

inline std::vector<std::uint8_t> random_sequence(std::mt19937_64& rng, int n, double p_one) {
    std::bernoulli_distribution flip(p_one);
    std::vector<std::uint8_t> s(static_cast<std::size_t>(n));
    for (auto& bit : s) bit = flip(rng) ? 1 : 0;
    return s;
}

// Random node relabeling plus its application to a tensor.
inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline linkpred::ContactTensor permute_tensor(const linkpred::ContactTensor& tensor,
                                              const std::vector<int>& perm) {
    linkpred::ContactTensor out(tensor.node_count(), tensor.period_count());
    for (int t = 0; t < tensor.period_count(); ++t) {
        for (int i = 0; i < tensor.node_count(); ++i) {
            for (int j = i + 1; j < tensor.node_count(); ++j) {
                if (tensor.link(t, i, j)) {
                    out.set_link(t, perm[static_cast<std::size_t>(i)],
                                 perm[static_cast<std::size_t>(j)]);
                }
            }
        }
    }
    return out;
}

} // namespace oracle
