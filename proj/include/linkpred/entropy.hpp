#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "linkpred/contact_tensor.hpp"
#include "linkpred/error.hpp"

namespace linkpred {

enum class EntropySource { link, proximity };

/// How the per-horizon maximum of the entropy estimator is obtained.
/// `analytic_log` uses ln(t), the supremum bound reached when every match
/// length equals 1; `exact_enumeration` maximizes over all binary strings of
/// length t (t <= 24, and slow well before that).
enum class MaxEntropyMode { analytic_log, exact_enumeration };

/// Entropy estimates for all node pairs at one horizon.
struct EntropyMatrix {
    Eigen::MatrixXd values;
    int horizon = 0;
    EntropySource source = EntropySource::link;
};

using EntropySeries = std::vector<EntropyMatrix>;

/// Lempel-Ziv entropy estimate of a binary sequence: n ln(n) / sum(Lambda_i),
/// where Lambda_i is the length of the shortest substring starting at i that
/// does not occur anywhere within positions 1..i-1. Conventions: Lambda_1 = 1,
/// and when every substring through the end of the sequence already occurs,
/// Lambda_i is the remaining suffix length plus one.
double lz_entropy(std::span<const std::uint8_t> sequence);

/// For each position i (0-based), the length of the longest prefix of
/// s[i..] occurring as a contiguous substring fully inside s[0..i-1].
/// Lambda_i = min(match[i], n - i) + 1 at full horizon; the same values
/// serve every prefix horizon since only the availability cap changes.
std::vector<int> lz_match_lengths(std::span<const std::uint8_t> sequence);

/// Link-stability entropies over periods 1..horizon.
EntropyMatrix link_entropy(const ContactTensor& tensor, int horizon);

/// Two-hop proximity stability entropies over periods 1..horizon.
EntropyMatrix proximity_entropy(const ProximityTensor& proximity, int horizon);

/// Prefix series: element t-1 equals the single-horizon computation at
/// horizon t. Computed incrementally, bit-identical to naive recomputation.
EntropySeries entropy_series(const ContactTensor& tensor, int up_to);
EntropySeries entropy_series(const ProximityTensor& proximity, int up_to);

/// Maximum value of the estimator over binary sequences of length `periods`.
double max_entropy_bound(int periods, MaxEntropyMode mode = MaxEntropyMode::analytic_log);

} // namespace linkpred
