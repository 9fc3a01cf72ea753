#include "linkpred/contact_tensor.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

namespace linkpred {

namespace {

constexpr std::array<char, 4> kMagic = {'L', 'P', 'T', 'N'};
constexpr std::uint32_t kFormatVersion = 1;

void write_u32(std::ostream& out, std::uint32_t value) {
    std::array<char, 4> buf;
    for (int b = 0; b < 4; ++b) {
        buf[static_cast<std::size_t>(b)] = static_cast<char>((value >> (8 * b)) & 0xffu);
    }
    out.write(buf.data(), buf.size());
}

std::uint32_t read_u32(std::istream& in, const char* what) {
    std::array<char, 4> buf;
    in.read(buf.data(), buf.size());
    if (in.gcount() != 4) {
        throw DataError(std::string("truncated header: missing ") + what);
    }
    std::uint32_t value = 0;
    for (int b = 0; b < 4; ++b) {
        value |= static_cast<std::uint32_t>(static_cast<unsigned char>(buf[static_cast<std::size_t>(b)]))
                 << (8 * b);
    }
    return value;
}

} // namespace

ContactTensor::ContactTensor(int node_count, int period_count) {
    if (node_count < 1) {
        throw ConfigError("tensor node count must be at least 1");
    }
    if (period_count < 1) {
        throw ConfigError("tensor period count must be at least 1");
    }
    n_ = node_count;
    t_ = period_count;
    pairs_ = static_cast<int>(static_cast<long long>(n_) * (n_ - 1) / 2);
    words_per_slice_ = (pairs_ + 63) / 64;
    bits_.assign(static_cast<std::size_t>(t_) * static_cast<std::size_t>(words_per_slice_), 0);
}

void ContactTensor::check_pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
        throw ConfigError("node index out of range: (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") with N=" + std::to_string(n_));
    }
    if (i == j) {
        throw ConfigError("pair requires two distinct nodes, got node " + std::to_string(i) +
                          " twice");
    }
}

void ContactTensor::check_period(int period) const {
    if (period < 0 || period >= t_) {
        throw ConfigError("period index out of range: " + std::to_string(period) +
                          " with T=" + std::to_string(t_));
    }
}

int ContactTensor::pair_index(int i, int j) const {
    check_pair(i, j);
    if (i > j) std::swap(i, j);
    const long long base = static_cast<long long>(i) * (2LL * n_ - i - 1) / 2;
    return static_cast<int>(base + (j - i - 1));
}

bool ContactTensor::link(int period, int i, int j) const {
    check_period(period);
    if (i == j) {
        if (i < 0 || i >= n_) check_pair(i, j);
        return false;
    }
    const int p = pair_index(i, j);
    const std::size_t word = static_cast<std::size_t>(period) * words_per_slice_ + p / 64;
    return (bits_[word] >> (p % 64)) & 1u;
}

void ContactTensor::set_link(int period, int i, int j, bool present) {
    check_period(period);
    const int p = pair_index(i, j);
    const std::size_t word = static_cast<std::size_t>(period) * words_per_slice_ + p / 64;
    const std::uint64_t mask = std::uint64_t{1} << (p % 64);
    if (present) {
        bits_[word] |= mask;
    } else {
        bits_[word] &= ~mask;
    }
}

std::vector<std::uint8_t> ContactTensor::link_sequence(int i, int j) const {
    const int p = pair_index(i, j);
    std::vector<std::uint8_t> seq(static_cast<std::size_t>(t_));
    const std::size_t stride = static_cast<std::size_t>(words_per_slice_);
    const std::size_t word = static_cast<std::size_t>(p / 64);
    const int bit = p % 64;
    for (int t = 0; t < t_; ++t) {
        seq[static_cast<std::size_t>(t)] =
            static_cast<std::uint8_t>((bits_[static_cast<std::size_t>(t) * stride + word] >> bit) & 1u);
    }
    return seq;
}

bool ContactTensor::operator==(const ContactTensor& other) const {
    return n_ == other.n_ && t_ == other.t_ && bits_ == other.bits_;
}

ProximityTensor proximity_tensor(const ContactTensor& tensor) {
    const int n = tensor.node_count();
    const int t = tensor.period_count();
    ContactTensor prox(n, t);
    std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(n));
    for (int period = 0; period < t; ++period) {
        for (auto& list : neighbors) list.clear();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (tensor.link(period, i, j)) {
                    neighbors[static_cast<std::size_t>(i)].push_back(j);
                    neighbors[static_cast<std::size_t>(j)].push_back(i);
                }
            }
        }
        for (int k = 0; k < n; ++k) {
            const auto& around = neighbors[static_cast<std::size_t>(k)];
            for (std::size_t a = 0; a < around.size(); ++a) {
                for (std::size_t b = a + 1; b < around.size(); ++b) {
                    const int i = around[a];
                    const int j = around[b];
                    if (!tensor.link(period, i, j)) {
                        prox.set_link(period, i, j);
                    }
                }
            }
        }
    }
    return ProximityTensor(std::move(prox));
}

std::vector<std::vector<int>> union_adjacency(const ContactTensor& tensor) {
    const int n = tensor.node_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool linked = false;
            for (int t = 0; t < tensor.period_count() && !linked; ++t) {
                linked = tensor.link(t, i, j);
            }
            if (linked) {
                adj[static_cast<std::size_t>(i)].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    }
    return adj;
}

ContactTensor induced_subtensor(const ContactTensor& tensor, std::span<const int> nodes) {
    if (nodes.empty()) {
        throw ConfigError("induced subtensor requires at least one node");
    }
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (nodes[k] < 0 || nodes[k] >= tensor.node_count()) {
            throw ConfigError("induced subtensor node id out of range: " + std::to_string(nodes[k]));
        }
        if (k > 0 && nodes[k] <= nodes[k - 1]) {
            throw ConfigError("induced subtensor nodes must be strictly increasing");
        }
    }
    ContactTensor sub(static_cast<int>(nodes.size()), tensor.period_count());
    for (int t = 0; t < tensor.period_count(); ++t) {
        for (std::size_t a = 0; a < nodes.size(); ++a) {
            for (std::size_t b = a + 1; b < nodes.size(); ++b) {
                if (tensor.link(t, nodes[a], nodes[b])) {
                    sub.set_link(t, static_cast<int>(a), static_cast<int>(b));
                }
            }
        }
    }
    return sub;
}

void save(const ContactTensor& tensor, std::ostream& out) {
    out.write(kMagic.data(), kMagic.size());
    write_u32(out, kFormatVersion);
    write_u32(out, static_cast<std::uint32_t>(tensor.n_));
    write_u32(out, static_cast<std::uint32_t>(tensor.t_));
    const int slice_bytes = (tensor.pairs_ + 7) / 8;
    std::vector<char> buf(static_cast<std::size_t>(slice_bytes));
    for (int t = 0; t < tensor.t_ && slice_bytes > 0; ++t) {
        std::fill(buf.begin(), buf.end(), 0);
        const std::uint64_t* words =
            tensor.bits_.data() + static_cast<std::size_t>(t) * tensor.words_per_slice_;
        for (int byte = 0; byte < slice_bytes; ++byte) {
            buf[static_cast<std::size_t>(byte)] =
                static_cast<char>((words[byte / 8] >> (8 * (byte % 8))) & 0xffu);
        }
        out.write(buf.data(), buf.size());
    }
    if (!out) {
        throw DataError("tensor write failed");
    }
}

ContactTensor load(std::istream& in) {
    std::array<char, 4> magic;
    in.read(magic.data(), magic.size());
    if (in.gcount() != 4) {
        throw DataError("truncated header: missing magic");
    }
    if (magic != kMagic) {
        throw DataError("bad magic: not a tensor file");
    }
    const std::uint32_t version = read_u32(in, "version");
    if (version != kFormatVersion) {
        throw DataError("unsupported format version " + std::to_string(version));
    }
    const std::uint32_t n = read_u32(in, "node count");
    const std::uint32_t t = read_u32(in, "period count");
    if (n < 1 || t < 1 || n > (1u << 20)) {
        throw DataError("invalid dimensions: N=" + std::to_string(n) + " T=" + std::to_string(t));
    }
    ContactTensor tensor(static_cast<int>(n), static_cast<int>(t));
    const int slice_bytes = (tensor.pairs_ + 7) / 8;
    std::vector<char> buf(static_cast<std::size_t>(slice_bytes));
    for (std::uint32_t slice = 0; slice < t && slice_bytes > 0; ++slice) {
        in.read(buf.data(), buf.size());
        if (in.gcount() != static_cast<std::streamsize>(buf.size())) {
            throw DataError("truncated slice data at slice " + std::to_string(slice));
        }
        std::uint64_t* words =
            tensor.bits_.data() + static_cast<std::size_t>(slice) * tensor.words_per_slice_;
        for (int byte = 0; byte < slice_bytes; ++byte) {
            words[byte / 8] |= static_cast<std::uint64_t>(static_cast<unsigned char>(
                                   buf[static_cast<std::size_t>(byte)]))
                               << (8 * (byte % 8));
        }
        // Bits beyond the last pair index must be zero.
        const int used_in_last_byte = tensor.pairs_ - (slice_bytes - 1) * 8;
        if (slice_bytes > 0 && used_in_last_byte < 8) {
            const unsigned char last = static_cast<unsigned char>(buf[static_cast<std::size_t>(slice_bytes - 1)]);
            if (last >> used_in_last_byte) {
                throw DataError("nonzero padding bits in slice " + std::to_string(slice));
            }
        }
    }
    char extra;
    if (in.read(&extra, 1)) {
        throw DataError("trailing bytes after last slice");
    }
    return tensor;
}

} // namespace linkpred
