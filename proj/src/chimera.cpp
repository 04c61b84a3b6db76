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

#include "qsplit/chimera.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qsplit {

ChimeraGraph::ChimeraGraph(int m, int n, int l) : m_(m), n_(n), l_(l) {
    if (m < 1 || n < 1 || l < 1) {
        throw std::invalid_argument("chimera dimensions must be >= 1, got m=" + std::to_string(m) +
                                    " n=" + std::to_string(n) + " l=" + std::to_string(l));
    }
    const std::int64_t count = chimera_node_count(m, n, l);
    if (count > (std::int64_t{1} << 30)) throw std::invalid_argument("chimera graph too large");
    active_.assign(static_cast<std::size_t>(count), true);
    num_active_ = active_.size();
    rebuild_edges();
}

ChimeraGraph::Coordinate ChimeraGraph::coordinate(QubitId q) const {
    if (!valid_id(q)) throw std::invalid_argument("qubit id out of range: " + std::to_string(q));
    Coordinate c{};
    c.index = q % l_;
    q /= l_;
    c.orientation = q % 2;
    q /= 2;
    c.col = q % n_;
    c.row = q / n_;
    return c;
}

QubitId ChimeraGraph::id(const Coordinate& c) const {
    return ((c.row * n_ + c.col) * 2 + c.orientation) * l_ + c.index;
}

bool ChimeraGraph::is_active(QubitId q) const { return valid_id(q) && active_[static_cast<std::size_t>(q)]; }

bool ChimeraGraph::has_edge(QubitId a, QubitId b) const {
    if (!is_active(a) || !is_active(b)) return false;
    const auto& adj = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<QubitId> ChimeraGraph::active_nodes() const {
    std::vector<QubitId> out;
    out.reserve(num_active_);
    for (QubitId q = 0; q < num_ids(); ++q) {
        if (active_[static_cast<std::size_t>(q)]) out.push_back(q);
    }
    return out;
}

std::span<const QubitId> ChimeraGraph::neighbors(QubitId q) const {
    if (!valid_id(q)) return {};
    return adjacency_[static_cast<std::size_t>(q)];
}

bool ChimeraGraph::operator==(const ChimeraGraph& other) const {
    return m_ == other.m_ && n_ == other.n_ && l_ == other.l_ && active_ == other.active_ &&
           edges_ == other.edges_;
}

void ChimeraGraph::rebuild_edges() {
    edges_.clear();
    auto add = [&](QubitId a, QubitId b) {
        if (!active_[static_cast<std::size_t>(a)] || !active_[static_cast<std::size_t>(b)]) return;
        Coupler c = make_coupler(a, b);
        if (faults_.dead_couplers.count(c)) return;
        edges_.push_back(c);
    };
    for (int r = 0; r < m_; ++r) {
        for (int c = 0; c < n_; ++c) {
            for (int i = 0; i < l_; ++i) {
                const QubitId v = id({r, c, 0, i});
                const QubitId h = id({r, c, 1, i});
                for (int j = 0; j < l_; ++j) add(v, id({r, c, 1, j}));
                if (r + 1 < m_) add(v, id({r + 1, c, 0, i}));
                if (c + 1 < n_) add(h, id({r, c + 1, 1, i}));
            }
        }
    }
    std::sort(edges_.begin(), edges_.end());

    adjacency_.assign(active_.size(), {});
    for (const auto& [a, b] : edges_) {
        adjacency_[static_cast<std::size_t>(a)].push_back(b);
        adjacency_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

ChimeraGraph build_chimera(int m, int n, int l) { return ChimeraGraph(m, n, l); }

namespace {

bool is_chimera_coupler(const ChimeraGraph& g, QubitId a, QubitId b) {
    const auto ca = g.coordinate(a);
    const auto cb = g.coordinate(b);
    if (ca.row == cb.row && ca.col == cb.col) return ca.orientation != cb.orientation;
    if (ca.orientation != cb.orientation || ca.index != cb.index) return false;
    if (ca.orientation == 0) return ca.col == cb.col && std::abs(ca.row - cb.row) == 1;
    return ca.row == cb.row && std::abs(ca.col - cb.col) == 1;
}

}  // namespace

ChimeraGraph apply_faults(const ChimeraGraph& g, const FaultMask& mask) {
    for (QubitId q : mask.dead_qubits) {
        if (!g.valid_id(q)) throw std::invalid_argument("dead qubit id out of range: " + std::to_string(q));
    }
    for (const auto& [a, b] : mask.dead_couplers) {
        if (!g.valid_id(a) || !g.valid_id(b)) {
            throw std::invalid_argument("dead coupler references out-of-range qubit: (" + std::to_string(a) +
                                        "," + std::to_string(b) + ")");
        }
        if (!is_chimera_coupler(g, a, b)) {
            throw std::invalid_argument("not a chimera coupler: (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        }
    }

    ChimeraGraph out = g;
    for (QubitId q : mask.dead_qubits) {
        out.faults_.dead_qubits.insert(q);
        if (out.active_[static_cast<std::size_t>(q)]) {
            out.active_[static_cast<std::size_t>(q)] = false;
            --out.num_active_;
        }
    }
    for (const auto& [a, b] : mask.dead_couplers) out.faults_.dead_couplers.insert(make_coupler(a, b));
    out.rebuild_edges();
    return out;
}

GraphStats graph_stats(const ChimeraGraph& g) {
    GraphStats s;
    s.nodes = g.num_nodes();
    s.edges = g.num_edges();
    for (QubitId q = 0; q < g.num_ids(); ++q) {
        if (g.is_active(q)) ++s.degree_histogram[static_cast<int>(g.neighbors(q).size())];
    }
    return s;
}

std::int64_t chimera_node_count(std::int64_t m, std::int64_t n, std::int64_t l) { return 2 * l * m * n; }

std::int64_t chimera_edge_count(std::int64_t m, std::int64_t n) { return 4 * (2 * m * n - m - n) + 16 * m * n; }

}  // namespace qsplit
