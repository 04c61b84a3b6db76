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

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace qsplit {

using QubitId = std::int32_t;
using Coupler = std::pair<QubitId, QubitId>;

// Canonical (lower id first) form of an unordered qubit pair.
inline Coupler make_coupler(QubitId a, QubitId b) { return a < b ? Coupler{a, b} : Coupler{b, a}; }

struct FaultMask {
    std::set<QubitId> dead_qubits;
    std::set<Coupler> dead_couplers;  // canonical pairs

    bool empty() const { return dead_qubits.empty() && dead_couplers.empty(); }
    bool operator==(const FaultMask&) const = default;
};

struct GraphStats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::map<int, std::size_t> degree_histogram;  // degree -> node count
};

// Chimera hardware graph: an m x n lattice of K(l,l) unit cells.
//
// Qubit ids follow id = ((row * n + col) * 2 + orientation) * l + index.
// Orientation 0 qubits couple to the same index in the vertically adjacent
// cells, orientation 1 qubits to the same index in the horizontally adjacent
// cells. Inside a cell every orientation-0 qubit couples to every
// orientation-1 qubit.
//
// Instances are immutable; apply_faults returns a new graph.
class ChimeraGraph {
  public:
    ChimeraGraph(int m, int n, int l = 4);

    int rows() const { return m_; }
    int cols() const { return n_; }
    int shore() const { return l_; }

    // Size of the id space, 2*l*m*n, including inactive qubits.
    QubitId num_ids() const { return static_cast<QubitId>(active_.size()); }

    bool is_active(QubitId q) const;
    bool has_edge(QubitId a, QubitId b) const;
    bool valid_id(QubitId q) const { return q >= 0 && q < num_ids(); }

    // Active qubits ascending.
    std::vector<QubitId> active_nodes() const;
    // Active couplers, canonical and sorted.
    const std::vector<Coupler>& edges() const { return edges_; }
    std::span<const QubitId> neighbors(QubitId q) const;

    std::size_t num_nodes() const { return num_active_; }
    std::size_t num_edges() const { return edges_.size(); }

    const FaultMask& faults() const { return faults_; }

    struct Coordinate {
        int row, col, orientation, index;
        bool operator==(const Coordinate&) const = default;
    };
    Coordinate coordinate(QubitId q) const;
    QubitId id(const Coordinate& c) const;

    // Structural equality: same dimensions, active nodes and active edges.
    bool operator==(const ChimeraGraph& other) const;

  private:
    friend ChimeraGraph apply_faults(const ChimeraGraph& g, const FaultMask& mask);

    void rebuild_edges();

    int m_, n_, l_;
    std::vector<bool> active_;
    std::size_t num_active_ = 0;
    FaultMask faults_;
    std::vector<Coupler> edges_;
    std::vector<std::vector<QubitId>> adjacency_;
};

// Fault-free Chimera graph. Throws std::invalid_argument if any dimension < 1.
ChimeraGraph build_chimera(int m, int n, int l = 4);

// Removes dead qubits, dead couplers and every coupler incident to a dead
// qubit. Faults already present in g are kept. Throws std::invalid_argument
// for ids outside g's id space or couplers that are not Chimera couplers.
ChimeraGraph apply_faults(const ChimeraGraph& g, const FaultMask& mask);

GraphStats graph_stats(const ChimeraGraph& g);

// Closed forms for the fault-free graph. The edge count form holds for l = 4.
std::int64_t chimera_node_count(std::int64_t m, std::int64_t n, std::int64_t l = 4);
std::int64_t chimera_edge_count(std::int64_t m, std::int64_t n);

}  // namespace qsplit
