#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "linkpred/error.hpp"

namespace linkpred {

/// Time-ordered sequence of symmetric, zero-diagonal binary adjacency
/// matrices (one per tracking period). Storage is bit-packed over
/// upper-triangle pair indices, so asymmetry is unrepresentable by
/// construction. Periods are 0-based in code.
///
/// Tensors are meant to be immutable once filled: builders call set_link()
/// during construction, everything downstream takes const references.
class ContactTensor {
public:
    ContactTensor(int node_count, int period_count);

    int node_count() const { return n_; }
    int period_count() const { return t_; }
    int pair_count() const { return pairs_; }

    /// Link state of pair (i, j) during a period. The diagonal reads as 0.
    bool link(int period, int i, int j) const;

    void set_link(int period, int i, int j, bool present = true);

    /// State sequence of one pair over periods 0..T-1.
    std::vector<std::uint8_t> link_sequence(int i, int j) const;

    /// Dense index of the unordered pair (i, j), i != j.
    int pair_index(int i, int j) const;

    bool operator==(const ContactTensor& other) const;

private:
    friend void save(const ContactTensor&, std::ostream&);
    friend ContactTensor load(std::istream&);

    void check_pair(int i, int j) const;
    void check_period(int period) const;

    int n_ = 0;
    int t_ = 0;
    int pairs_ = 0;
    int words_per_slice_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Same shape as a ContactTensor; entry (i, j) of slice t is 1 iff i and j
/// are at graph distance exactly two in slice t. Pairs tied by a direct link
/// are never marked.
class ProximityTensor {
public:
    explicit ProximityTensor(ContactTensor states) : states_(std::move(states)) {}

    const ContactTensor& states() const { return states_; }
    int node_count() const { return states_.node_count(); }
    int period_count() const { return states_.period_count(); }

private:
    ContactTensor states_;
};

ProximityTensor proximity_tensor(const ContactTensor& tensor);

/// Sorted neighbor lists of the union graph over all periods.
std::vector<std::vector<int>> union_adjacency(const ContactTensor& tensor);

/// Sub-tensor induced by `nodes` (strictly increasing node ids); node k of
/// the result corresponds to nodes[k] of the input.
ContactTensor induced_subtensor(const ContactTensor& tensor, std::span<const int> nodes);

/// Binary persistence. Format: "LPTN" magic, u32 version, u32 N, u32 T,
/// then T slices of ceil(P/8) bytes (P = N(N-1)/2), upper-triangle pair
/// bits LSB-first. load() validates the header and padding bits and throws
/// DataError naming the failed check.
void save(const ContactTensor& tensor, std::ostream& out);
ContactTensor load(std::istream& in);

} // namespace linkpred
