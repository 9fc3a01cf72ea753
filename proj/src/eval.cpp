#include "linkpred/eval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace linkpred {

namespace {

struct RankedPair {
    double value;
    int i;
    int j;
    bool positive;
};

// Likeliest first; ties broken by ascending pair index so rankings are
// deterministic.
std::vector<RankedPair> ranked_pairs(const ScoreMatrix& scores, const GroundTruth& truth,
                                     const PairList& universe) {
    if (scores.values.rows() != truth.node_count()) {
        throw ConfigError("score matrix and ground truth disagree on node count");
    }
    std::vector<RankedPair> ranked;
    ranked.reserve(universe.size());
    for (const auto& [i, j] : universe) {
        if (i < 0 || j <= i || j >= truth.node_count()) {
            throw ConfigError("pair universe entry out of range or not in (i < j) form");
        }
        ranked.push_back({scores.values(i, j), i, j, truth.link(i, j)});
    }
    const bool ascending = scores.direction == Direction::ascending_likelihood;
    std::sort(ranked.begin(), ranked.end(), [ascending](const RankedPair& a, const RankedPair& b) {
        if (a.value != b.value) return ascending ? a.value < b.value : a.value > b.value;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return ranked;
}

long long count_positives(const std::vector<RankedPair>& ranked) {
    long long count = 0;
    for (const RankedPair& p : ranked) count += p.positive ? 1 : 0;
    return count;
}

std::string format_double(double value) {
    std::array<char, 32> buf;
    std::snprintf(buf.data(), buf.size(), "%.17g", value);
    return std::string(buf.data());
}

} // namespace

GroundTruth::GroundTruth(ContactTensor slice) : slice_(std::move(slice)) {
    if (slice_.period_count() != 1) {
        throw ConfigError("ground truth must hold exactly one period");
    }
    for (int i = 0; i < slice_.node_count(); ++i) {
        for (int j = i + 1; j < slice_.node_count(); ++j) {
            positives_ += slice_.link(0, i, j) ? 1 : 0;
        }
    }
}

GroundTruth GroundTruth::from_slice(const ContactTensor& tensor, int period) {
    if (period < 0 || period >= tensor.period_count()) {
        throw ConfigError("ground truth period out of range");
    }
    ContactTensor slice(tensor.node_count(), 1);
    for (int i = 0; i < tensor.node_count(); ++i) {
        for (int j = i + 1; j < tensor.node_count(); ++j) {
            if (tensor.link(period, i, j)) slice.set_link(0, i, j);
        }
    }
    return GroundTruth(std::move(slice));
}

PairList all_pairs(int node_count) {
    PairList pairs;
    pairs.reserve(static_cast<std::size_t>(node_count) * (node_count - 1) / 2);
    for (int i = 0; i < node_count; ++i) {
        for (int j = i + 1; j < node_count; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

double top_scores_ratio(const ScoreMatrix& scores, const GroundTruth& truth) {
    return top_scores_ratio(scores, truth, all_pairs(truth.node_count()));
}

double top_scores_ratio(const ScoreMatrix& scores, const GroundTruth& truth,
                        const PairList& universe) {
    const auto ranked = ranked_pairs(scores, truth, universe);
    const long long positives = count_positives(ranked);
    if (positives == 0) {
        throw DataError("no positive links in benchmark period");
    }
    long long hits = 0;
    for (long long k = 0; k < positives; ++k) {
        hits += ranked[static_cast<std::size_t>(k)].positive ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(positives);
}

EvalReport accuracy_sweep(const ScoreMatrix& scores, const GroundTruth& truth) {
    return accuracy_sweep(scores, truth, all_pairs(truth.node_count()));
}

EvalReport accuracy_sweep(const ScoreMatrix& scores, const GroundTruth& truth,
                          const PairList& universe) {
    const auto ranked = ranked_pairs(scores, truth, universe);
    const long long total = static_cast<long long>(ranked.size());
    if (total == 0) {
        throw ConfigError("cannot evaluate an empty pair universe");
    }
    const long long positives = count_positives(ranked);

    // Candidate cutoffs: predict "link" for the first k ranked pairs, where
    // k = 0 or k sits on a boundary between distinct score values.
    long long best_k = 0;
    long long best_correct = total - positives; // k = 0: predict none
    long long prefix_positives = 0;
    long long best_prefix_positives = 0;
    for (long long k = 1; k <= total; ++k) {
        prefix_positives += ranked[static_cast<std::size_t>(k - 1)].positive ? 1 : 0;
        if (k < total &&
            ranked[static_cast<std::size_t>(k)].value == ranked[static_cast<std::size_t>(k - 1)].value) {
            continue; // equal values cannot be split by a threshold
        }
        const long long correct = prefix_positives + (total - k) - (positives - prefix_positives);
        if (correct > best_correct) {
            best_correct = correct;
            best_k = k;
            best_prefix_positives = prefix_positives;
        }
    }

    EvalReport report;
    report.metric_name = scores.metric_name;
    report.tsr = top_scores_ratio(scores, truth, universe);
    report.confusion.tp = best_prefix_positives;
    report.confusion.fp = best_k - best_prefix_positives;
    report.confusion.fn = positives - best_prefix_positives;
    report.confusion.tn = total - best_k - report.confusion.fn;
    report.best_accuracy = static_cast<double>(best_correct) / static_cast<double>(total);
    report.precision_at_best_acc =
        best_k > 0 ? static_cast<double>(report.confusion.tp) / static_cast<double>(best_k) : 0.0;
    report.recall_at_best_acc =
        positives > 0 ? static_cast<double>(report.confusion.tp) / static_cast<double>(positives)
                      : 0.0;
    const double pr = report.precision_at_best_acc + report.recall_at_best_acc;
    report.f_measure =
        pr > 0 ? 2.0 * report.precision_at_best_acc * report.recall_at_best_acc / pr : 0.0;
    return report;
}

void write_json_reports(std::ostream& out, const std::vector<EvalReport>& reports) {
    nlohmann::json array = nlohmann::json::array();
    for (const EvalReport& r : reports) {
        array.push_back({{"metric_name", r.metric_name},
                         {"tsr", r.tsr},
                         {"best_accuracy", r.best_accuracy},
                         {"precision_at_best_acc", r.precision_at_best_acc},
                         {"recall_at_best_acc", r.recall_at_best_acc},
                         {"f_measure", r.f_measure},
                         {"confusion",
                          {{"tp", r.confusion.tp},
                           {"fp", r.confusion.fp},
                           {"tn", r.confusion.tn},
                           {"fn", r.confusion.fn}}}});
    }
    out << array.dump(2) << '\n';
}

void write_csv_header(std::ostream& out) {
    out << "scenario,metric_name,tsr,best_accuracy,precision_at_best_acc,recall_at_best_acc,"
           "f_measure,tp,fp,tn,fn\n";
}

void write_csv_row(std::ostream& out, const EvalReport& report, const std::string& scenario) {
    out << scenario << ',' << report.metric_name << ',' << format_double(report.tsr) << ','
        << format_double(report.best_accuracy) << ','
        << format_double(report.precision_at_best_acc) << ','
        << format_double(report.recall_at_best_acc) << ',' << format_double(report.f_measure)
        << ',' << report.confusion.tp << ',' << report.confusion.fp << ',' << report.confusion.tn
        << ',' << report.confusion.fn << '\n';
}

} // namespace linkpred
