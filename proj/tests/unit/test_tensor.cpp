#include <doctest.h>

#include <random>
#include <sstream>

#include "linkpred/contact_tensor.hpp"
#include "support/oracles.hpp"

using linkpred::ContactTensor;
using linkpred::ProximityTensor;

TEST_CASE("link_sequence reads per-pair states") {
    ContactTensor tensor(3, 4);
    CHECK(tensor.link_sequence(0, 1) == std::vector<std::uint8_t>{0, 0, 0, 0});

    // contact over [0,10) at t=5 over a [0,20) window marks the first two periods
    tensor.set_link(0, 0, 1);
    tensor.set_link(1, 0, 1);
    CHECK(tensor.link_sequence(0, 1) == std::vector<std::uint8_t>{1, 1, 0, 0});
    CHECK(tensor.link_sequence(1, 0) == tensor.link_sequence(0, 1));
}

TEST_CASE("link_sequence rejects bad pairs") {
    ContactTensor tensor(3, 2);
    CHECK_THROWS_AS(tensor.link_sequence(1, 1), linkpred::ConfigError);
    CHECK_THROWS_AS(tensor.link_sequence(0, 3), linkpred::ConfigError);
    CHECK_THROWS_AS(tensor.link_sequence(-1, 0), linkpred::ConfigError);
}

TEST_CASE("diagonal reads as zero and cannot be set") {
    ContactTensor tensor(3, 1);
    CHECK_FALSE(tensor.link(0, 2, 2));
    CHECK_THROWS_AS(tensor.set_link(0, 2, 2), linkpred::ConfigError);
}

TEST_CASE("proximity marks distance-exactly-2 pairs") {
    SUBCASE("path graph") {
        ContactTensor tensor(3, 1);
        tensor.set_link(0, 0, 1);
        tensor.set_link(0, 1, 2);
        const ProximityTensor prox = proximity_tensor(tensor);
        CHECK(prox.states().link(0, 0, 2));
        CHECK_FALSE(prox.states().link(0, 0, 1));
        CHECK_FALSE(prox.states().link(0, 1, 2));
    }
    SUBCASE("triangle has no two-hop pairs") {
        ContactTensor tensor(3, 1);
        tensor.set_link(0, 0, 1);
        tensor.set_link(0, 1, 2);
        tensor.set_link(0, 0, 2);
        const ProximityTensor prox = proximity_tensor(tensor);
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                CHECK_FALSE(prox.states().link(0, i, j));
            }
        }
    }
    SUBCASE("empty slice stays empty") {
        ContactTensor tensor(4, 2);
        const ProximityTensor prox = proximity_tensor(tensor);
        CHECK(prox.states() == ContactTensor(4, 2));
    }
}

TEST_CASE("proximity equals BFS distance == 2 on random tensors") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 18);
        const int t = 1 + static_cast<int>(rng() % 4);
        const ContactTensor tensor = oracle::random_tensor(rng, n, t, 0.15);
        const ProximityTensor prox = proximity_tensor(tensor);
        for (int period = 0; period < t; ++period) {
            for (int i = 0; i < n; ++i) {
                const auto dist = oracle::bfs_distances(tensor, period, i);
                for (int j = i + 1; j < n; ++j) {
                    const bool two_hops = dist[static_cast<std::size_t>(j)] == 2;
                    CHECK(prox.states().link(period, i, j) == two_hops);
                    if (prox.states().link(period, i, j)) {
                        CHECK_FALSE(tensor.link(period, i, j));
                    }
                }
            }
        }
    }
}

TEST_CASE("save/load round-trips bit-exactly") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const int t = 1 + static_cast<int>(rng() % 6);
        const ContactTensor tensor = oracle::random_tensor(rng, n, t, 0.3);
        std::stringstream stream;
        linkpred::save(tensor, stream);
        CHECK(linkpred::load(stream) == tensor);
    }
}

TEST_CASE("load rejects malformed streams") {
    ContactTensor tensor(5, 2);
    tensor.set_link(0, 1, 3);
    std::stringstream stream;
    linkpred::save(tensor, stream);
    const std::string bytes = stream.str();

    SUBCASE("empty stream") {
        std::stringstream empty;
        CHECK_THROWS_WITH_AS(linkpred::load(empty), "truncated header: missing magic",
                             linkpred::DataError);
    }
    SUBCASE("bad magic") {
        std::string corrupt = bytes;
        corrupt[0] = 'X';
        std::stringstream in(corrupt);
        CHECK_THROWS_AS(linkpred::load(in), linkpred::DataError);
    }
    SUBCASE("truncated slice data") {
        std::stringstream in(bytes.substr(0, bytes.size() - 1));
        CHECK_THROWS_AS(linkpred::load(in), linkpred::DataError);
    }
    SUBCASE("nonzero padding bits") {
        // 5 nodes -> 10 pairs -> 2 bytes per slice; bits 10..15 are padding
        std::string corrupt = bytes;
        corrupt[corrupt.size() - 1] = static_cast<char>(0x80);
        std::stringstream in(corrupt);
        CHECK_THROWS_AS(linkpred::load(in), linkpred::DataError);
    }
    SUBCASE("trailing bytes") {
        std::stringstream in(bytes + "x");
        CHECK_THROWS_AS(linkpred::load(in), linkpred::DataError);
    }
}

TEST_CASE("induced subtensor keeps the selected nodes' links") {
    ContactTensor tensor(5, 2);
    tensor.set_link(0, 0, 2);
    tensor.set_link(1, 2, 4);
    tensor.set_link(1, 1, 3);
    const std::vector<int> nodes = {0, 2, 4};
    const ContactTensor sub = induced_subtensor(tensor, nodes);
    CHECK(sub.node_count() == 3);
    CHECK(sub.link(0, 0, 1));
    CHECK(sub.link(1, 1, 2));
    CHECK_FALSE(sub.link(1, 0, 1));
}
