#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "linkpred/contact_tensor.hpp"
#include "linkpred/error.hpp"
#include "linkpred/katz.hpp"

namespace linkpred {

/// Adjacency of the held-out benchmark period.
class GroundTruth {
public:
    explicit GroundTruth(ContactTensor slice);

    static GroundTruth from_slice(const ContactTensor& tensor, int period);

    int node_count() const { return slice_.node_count(); }
    bool link(int i, int j) const { return slice_.link(0, i, j); }
    /// Number of positive pairs in the upper triangle (the top-L budget).
    int positives() const { return positives_; }

private:
    ContactTensor slice_;
    int positives_ = 0;
};

struct Confusion {
    long long tp = 0;
    long long fp = 0;
    long long tn = 0;
    long long fn = 0;
};

struct EvalReport {
    std::string metric_name;
    double tsr = 0.0;
    double best_accuracy = 0.0;
    double precision_at_best_acc = 0.0;
    double recall_at_best_acc = 0.0;
    double f_measure = 0.0;
    Confusion confusion;
};

using PairList = std::vector<std::pair<int, int>>;

/// All unordered pairs (i, j), i < j, in lexicographic order.
PairList all_pairs(int node_count);

/// Fraction of the L likeliest pairs (per the score's direction, ties broken
/// by ascending pair index) that are actual links, L being the number of
/// positive pairs in the evaluated universe. Throws DataError when L = 0.
double top_scores_ratio(const ScoreMatrix& scores, const GroundTruth& truth);
double top_scores_ratio(const ScoreMatrix& scores, const GroundTruth& truth,
                        const PairList& universe);

/// Sweeps the decision threshold over all distinct score values, keeps the
/// best accuracy (ties resolved toward fewer predicted positives), and
/// reports precision/recall/F-measure at that threshold. tsr is filled via
/// top_scores_ratio.
EvalReport accuracy_sweep(const ScoreMatrix& scores, const GroundTruth& truth);
EvalReport accuracy_sweep(const ScoreMatrix& scores, const GroundTruth& truth,
                          const PairList& universe);

/// One JSON object per report (exact EvalReport field names), as a JSON array.
void write_json_reports(std::ostream& out, const std::vector<EvalReport>& reports);

/// CSV summary: one row per metric and scenario.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const EvalReport& report, const std::string& scenario);

} // namespace linkpred
