// Copyright 2026 The qsplit Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "qsplit/chimera.hpp"

using namespace qsplit;

namespace {

std::size_t degree_sum(const ChimeraGraph& g) {
    std::size_t s = 0;
    for (QubitId q : g.active_nodes()) s += g.neighbors(q).size();
    return s;
}

}  // namespace

TEST(Chimera, EightByEightHas512Qubits) {
    const auto g = build_chimera(8, 8, 4);
    EXPECT_EQ(g.num_nodes(), 512u);
    EXPECT_EQ(g.num_edges(), 1472u);
}

TEST(Chimera, TwelveByTwelveCounts) {
    const auto g = build_chimera(12, 12, 4);
    EXPECT_EQ(g.num_nodes(), 1152u);
    EXPECT_EQ(g.num_edges(), 3360u);
    EXPECT_EQ(degree_sum(g), 2u * 3360u);
    const auto stats = graph_stats(g);
    EXPECT_EQ(stats.degree_histogram, (std::map<int, std::size_t>{{5, 192}, {6, 960}}));
}

TEST(Chimera, SingleCellIsCompleteBipartite) {
    const auto g = build_chimera(1, 1, 4);
    EXPECT_EQ(g.num_nodes(), 8u);
    EXPECT_EQ(g.num_edges(), 16u);
    EXPECT_EQ(graph_stats(g).degree_histogram, (std::map<int, std::size_t>{{4, 8}}));
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            EXPECT_TRUE(g.has_edge(a, 4 + b));
            if (a != b) {
                EXPECT_FALSE(g.has_edge(a, b));
            }
        }
    }
}

TEST(Chimera, EdgeSetMatchesCoordinateOracle) {
    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= 5; ++n) {
            for (int l : {1, 2, 4}) {
                const auto g = build_chimera(m, n, l);
                const auto expected = oracle::chimera_edges(m, n, l);
                std::set<std::pair<int, int>> got(g.edges().begin(), g.edges().end());
                ASSERT_EQ(got, expected) << m << "x" << n << "x" << l;
            }
        }
    }
}

TEST(Chimera, ClosedFormsUpToSixteen) {
    for (int m = 1; m <= 16; ++m) {
        for (int n = 1; n <= 16; ++n) {
            const auto g = build_chimera(m, n, 4);
            ASSERT_EQ(static_cast<std::int64_t>(g.num_nodes()), 8 * m * n);
            ASSERT_EQ(static_cast<std::int64_t>(g.num_edges()), 4 * (2 * m * n - m - n) + 16 * m * n);
            ASSERT_EQ(static_cast<std::int64_t>(g.num_nodes()), chimera_node_count(m, n));
            ASSERT_EQ(static_cast<std::int64_t>(g.num_edges()), chimera_edge_count(m, n));
            ASSERT_EQ(degree_sum(g), 2 * g.num_edges());
        }
    }
}

TEST(Chimera, DegreeHistogramMatchesOracle) {
    const auto edges = oracle::chimera_edges(12, 12, 4);
    const auto hist = oracle::degree_histogram(edges, 1152);
    EXPECT_EQ(hist, (std::map<int, int>{{5, 192}, {6, 960}}));
}

TEST(Chimera, IdCoordinateRoundTrip) {
    const auto g = build_chimera(3, 5, 4);
    for (QubitId q = 0; q < g.num_ids(); ++q) {
        const auto c = g.coordinate(q);
        EXPECT_EQ(g.id(c), q);
        EXPECT_EQ(q, ((c.row * 5 + c.col) * 2 + c.orientation) * 4 + c.index);
    }
}

TEST(Chimera, RejectsBadDimensions) {
    EXPECT_THROW(build_chimera(0, 8, 4), std::invalid_argument);
    EXPECT_THROW(build_chimera(8, -1, 4), std::invalid_argument);
    EXPECT_THROW(build_chimera(2, 2, 0), std::invalid_argument);
}

TEST(ChimeraFaults, EmptyMaskIsIdentity) {
    const auto g = build_chimera(1, 1, 4);
    EXPECT_EQ(apply_faults(g, {}), g);
}

TEST(ChimeraFaults, DeadQubitRemovesItsEdges) {
    const auto g = build_chimera(1, 1, 4);
    FaultMask mask;
    mask.dead_qubits.insert(2);
    const auto f = apply_faults(g, mask);
    EXPECT_EQ(f.num_nodes(), 7u);
    EXPECT_EQ(f.num_edges(), 12u);
    EXPECT_FALSE(f.is_active(2));
    EXPECT_EQ(g.num_nodes(), 8u);  // original untouched
}

TEST(ChimeraFaults, DeadInterCellCoupler) {
    const auto g = build_chimera(2, 1, 4);
    EXPECT_EQ(g.num_edges(), 36u);
    // orientation 0, index 1 of cell (0,0) links vertically to cell (1,0)
    const QubitId a = g.id({0, 0, 0, 1});
    const QubitId b = g.id({1, 0, 0, 1});
    ASSERT_TRUE(g.has_edge(a, b));
    FaultMask mask;
    mask.dead_couplers.insert(make_coupler(a, b));
    const auto f = apply_faults(g, mask);
    EXPECT_EQ(f.num_nodes(), 16u);
    EXPECT_EQ(f.num_edges(), 35u);
    EXPECT_FALSE(f.has_edge(a, b));
}

TEST(ChimeraFaults, OutOfRangeIdRejected) {
    const auto g = build_chimera(1, 1, 4);
    FaultMask mask;
    mask.dead_qubits.insert(8);
    EXPECT_THROW(apply_faults(g, mask), std::invalid_argument);
    FaultMask bad_coupler;
    bad_coupler.dead_couplers.insert({0, 1});  // same shore, not a coupler
    EXPECT_THROW(apply_faults(g, bad_coupler), std::invalid_argument);
}

TEST(ChimeraFaults, IdempotentAndCommuting) {
    std::mt19937 rng(7);
    const auto g = build_chimera(4, 4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        FaultMask a, b;
        std::uniform_int_distribution<int> pick(0, g.num_ids() - 1);
        for (int k = 0; k < 6; ++k) {
            const int q = pick(rng);
            (q % 2 ? a : b).dead_qubits.insert(q);
        }
        const auto& edges = g.edges();
        std::uniform_int_distribution<std::size_t> pick_edge(0, edges.size() - 1);
        for (int k = 0; k < 4; ++k) {
            const auto e = edges[pick_edge(rng)];
            if (!a.dead_qubits.count(e.first) && !b.dead_qubits.count(e.first)) {
                (k % 2 ? a : b).dead_couplers.insert(e);
            }
        }
        const auto once = apply_faults(g, a);
        EXPECT_EQ(apply_faults(once, a), once);
        EXPECT_EQ(apply_faults(apply_faults(g, a), b), apply_faults(apply_faults(g, b), a));
        const auto both = apply_faults(once, b);
        EXPECT_EQ(degree_sum(both), 2 * both.num_edges());
        EXPECT_LE(both.num_edges(), g.num_edges());
        for (const auto& [x, y] : both.edges()) {
            EXPECT_TRUE(both.is_active(x) && both.is_active(y));
        }
    }
}
