#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkpred/contact_tensor.hpp"
#include "linkpred/error.hpp"

namespace linkpred {

/// One contact interval between two distinct nodes, half-open [start, end).
struct ContactEvent {
    int node_a = 0;
    int node_b = 0;
    double start = 0.0; // seconds
    double end = 0.0;   // seconds

    bool operator==(const ContactEvent&) const = default;
};

/// One node-to-access-point association interval, half-open [start, end).
struct AssociationEvent {
    int node = 0;
    int location = 0;
    double start = 0.0;
    double end = 0.0;
};

/// Parsed contact trace: events plus the node-name table built by interning
/// identifiers in first-appearance order.
struct ContactTrace {
    std::vector<ContactEvent> events;
    std::vector<std::string> node_names;
};

struct AssociationTrace {
    std::vector<AssociationEvent> events;
    std::vector<std::string> node_names;
    std::vector<std::string> location_names;
};

/// Reads `node_a,node_b,start,end` CSV. `#` comments and blank lines are
/// skipped; a header line is auto-detected by a non-numeric third field.
/// Malformed records raise DataError carrying the 1-based line number.
ContactTrace parse_contact_trace(std::istream& in);

/// Reads `node,location,start,end` CSV with the same conventions.
AssociationTrace parse_association_trace(std::istream& in);

/// Converts AP association logs to contacts: one event per maximal interval
/// during which two distinct nodes are simultaneously associated with the
/// same location. Zero-length intersections are dropped.
std::vector<ContactEvent> associations_to_contacts(const std::vector<AssociationEvent>& events);

struct DiscretizationConfig {
    double window_start = 0.0;
    double window_end = 0.0;
    double period_length = 0.0;          // tracking period length in seconds
    std::optional<int> node_count;       // defaults to max node id + 1 over all events

    /// Number of periods; throws ConfigError unless the window is an exact
    /// multiple of period_length.
    int period_count() const;
};

/// Slice p of the result has (i,j) set iff some event between i and j
/// overlaps period p with strictly positive duration. Events are clipped to
/// the window; events entirely outside are ignored (but still count toward
/// the default node universe).
ContactTensor discretize(const std::vector<ContactEvent>& events, const DiscretizationConfig& config);

/// Two-regime synthetic contact process. Pairs listed in `stable_pairs`
/// start on with probability p_stable and then flip state with probability
/// flip_prob per period, producing long runs of identical state. Every other
/// pair is background noise, on i.i.d. with probability p_noise per period.
struct SyntheticSpec {
    int node_count = 0;
    int period_count = 0;
    std::vector<std::pair<int, int>> stable_pairs;
    double p_stable = 0.9;
    double flip_prob = 0.05;
    double p_noise = 0.0;
};

/// Deterministic for a fixed seed (the generator does not depend on the
/// standard library's distribution implementations).
ContactTensor generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

/// Deterministic choice of `count` distinct node pairs, for seeding
/// SyntheticSpec::stable_pairs from a CLI.
std::vector<std::pair<int, int>> pick_random_pairs(int node_count, int count, std::uint64_t seed);

/// Realizes a tensor as contact events: one event per set (pair, period)
/// bit, spanning the full period. Discretizing the result with the same
/// period length reproduces the tensor exactly.
std::vector<ContactEvent> tensor_to_events(const ContactTensor& tensor, double period_length,
                                           double window_start = 0.0);

/// Writes the pairwise contact CSV consumed by parse_contact_trace. When
/// there are events, zero-length declaration records pin the node universe
/// 0..node_count-1 and the interning order (node_count = 0 derives the
/// universe from the events). Node names default to "n<id>".
void write_contact_csv(std::ostream& out, const std::vector<ContactEvent>& events,
                       int node_count = 0, const std::vector<std::string>& node_names = {});

} // namespace linkpred
