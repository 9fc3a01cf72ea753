#include "linkpred/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace linkpred {

namespace {

double lz_from_sum(int n, long long lambda_sum) {
    // n = 1 yields ln(1) = 0 regardless of the sum.
    return static_cast<double>(n) * std::log(static_cast<double>(n)) /
           static_cast<double>(lambda_sum);
}

long long lambda_sum_at(std::span<const int> match, int horizon) {
    long long sum = 0;
    for (int i = 0; i < horizon; ++i) {
        sum += std::min(match[static_cast<std::size_t>(i)], horizon - i) + 1;
    }
    return sum;
}

// Applies fn(i, j, sequence) to every unordered pair of the grid.
template <typename Fn>
void for_each_pair_sequence(const ContactTensor& grid, Fn&& fn) {
    for (int i = 0; i < grid.node_count(); ++i) {
        for (int j = i + 1; j < grid.node_count(); ++j) {
            fn(i, j, grid.link_sequence(i, j));
        }
    }
}

EntropyMatrix entropy_at_horizon(const ContactTensor& grid, int horizon, EntropySource source) {
    if (horizon < 1 || horizon > grid.period_count()) {
        throw ConfigError("entropy horizon " + std::to_string(horizon) +
                          " outside 1.." + std::to_string(grid.period_count()));
    }
    EntropyMatrix result;
    result.horizon = horizon;
    result.source = source;
    result.values = Eigen::MatrixXd::Zero(grid.node_count(), grid.node_count());
    for_each_pair_sequence(grid, [&](int i, int j, const std::vector<std::uint8_t>& seq) {
        const double e = lz_entropy(std::span(seq.data(), static_cast<std::size_t>(horizon)));
        result.values(i, j) = e;
        result.values(j, i) = e;
    });
    return result;
}

EntropySeries series_of(const ContactTensor& grid, int up_to, EntropySource source) {
    if (up_to < 1 || up_to > grid.period_count()) {
        throw ConfigError("entropy series horizon " + std::to_string(up_to) +
                          " outside 1.." + std::to_string(grid.period_count()));
    }
    EntropySeries series(static_cast<std::size_t>(up_to));
    for (int h = 1; h <= up_to; ++h) {
        auto& m = series[static_cast<std::size_t>(h - 1)];
        m.horizon = h;
        m.source = source;
        m.values = Eigen::MatrixXd::Zero(grid.node_count(), grid.node_count());
    }
    for_each_pair_sequence(grid, [&](int i, int j, const std::vector<std::uint8_t>& seq) {
        const auto match = lz_match_lengths(seq);
        for (int h = 1; h <= up_to; ++h) {
            const double e = lz_from_sum(h, lambda_sum_at(match, h));
            auto& values = series[static_cast<std::size_t>(h - 1)].values;
            values(i, j) = e;
            values(j, i) = e;
        }
    });
    return series;
}

} // namespace

std::vector<int> lz_match_lengths(std::span<const std::uint8_t> sequence) {
    const int n = static_cast<int>(sequence.size());
    std::vector<int> match(static_cast<std::size_t>(n), 0);
    if (n == 0) return match;
    // lce[a] = longest common extension of s[a..] and s[j..]; row j is built
    // from row j+1, scanning j from the end. The match at j is capped by
    // j - a so the occurrence fits entirely inside the prefix s[0..j-1].
    std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> prev(static_cast<std::size_t>(n) + 1, 0);
    for (int j = n - 1; j >= 0; --j) {
        for (int a = 0; a < n; ++a) {
            cur[static_cast<std::size_t>(a)] =
                sequence[static_cast<std::size_t>(a)] == sequence[static_cast<std::size_t>(j)]
                    ? prev[static_cast<std::size_t>(a) + 1] + 1
                    : 0;
        }
        int best = 0;
        for (int a = 0; a < j; ++a) {
            best = std::max(best, std::min(cur[static_cast<std::size_t>(a)], j - a));
        }
        match[static_cast<std::size_t>(j)] = best;
        std::swap(cur, prev);
    }
    return match;
}

double lz_entropy(std::span<const std::uint8_t> sequence) {
    if (sequence.empty()) {
        throw ConfigError("entropy of an empty sequence is undefined");
    }
    const int n = static_cast<int>(sequence.size());
    const auto match = lz_match_lengths(sequence);
    return lz_from_sum(n, lambda_sum_at(match, n));
}

EntropyMatrix link_entropy(const ContactTensor& tensor, int horizon) {
    return entropy_at_horizon(tensor, horizon, EntropySource::link);
}

EntropyMatrix proximity_entropy(const ProximityTensor& proximity, int horizon) {
    return entropy_at_horizon(proximity.states(), horizon, EntropySource::proximity);
}

EntropySeries entropy_series(const ContactTensor& tensor, int up_to) {
    return series_of(tensor, up_to, EntropySource::link);
}

EntropySeries entropy_series(const ProximityTensor& proximity, int up_to) {
    return series_of(proximity.states(), up_to, EntropySource::proximity);
}

double max_entropy_bound(int periods, MaxEntropyMode mode) {
    if (periods < 1) {
        throw ConfigError("max entropy requires at least one period");
    }
    if (mode == MaxEntropyMode::analytic_log) {
        return std::log(static_cast<double>(periods));
    }
    if (periods > 24) {
        throw ConfigError("exact max-entropy enumeration is limited to 24 periods");
    }
    // E = t ln(t) / sum(Lambda), so maximizing E means minimizing the sum.
    // Complement symmetry halves the search: fix the first bit to 0.
    const int n = periods;
    long long min_sum = 0;
    std::vector<std::uint8_t> buf(static_cast<std::size_t>(n));
    const std::uint32_t strings = n == 1 ? 1u : (1u << (n - 1));
    for (std::uint32_t bits = 0; bits < strings; ++bits) {
        for (int k = 0; k < n - 1; ++k) {
            buf[static_cast<std::size_t>(k) + 1] = static_cast<std::uint8_t>((bits >> k) & 1u);
        }
        buf[0] = 0;
        const auto match = lz_match_lengths(buf);
        const long long sum = lambda_sum_at(match, n);
        if (min_sum == 0 || sum < min_sum) min_sum = sum;
    }
    return lz_from_sum(n, min_sum);
}

} // namespace linkpred
