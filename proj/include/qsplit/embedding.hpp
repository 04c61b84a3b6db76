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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsplit/chimera.hpp"

namespace qsplit {

using Vertex = std::int32_t;
using LogicalEdge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 0..num_vertices-1.
class LogicalGraph {
  public:
    LogicalGraph() = default;
    // Duplicate and reversed edges are merged. Throws std::invalid_argument
    // on self-loops or out-of-range endpoints.
    LogicalGraph(Vertex num_vertices, std::vector<LogicalEdge> edges);

    Vertex num_vertices() const { return num_vertices_; }
    const std::vector<LogicalEdge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }

    static LogicalGraph complete(Vertex n);
    static LogicalGraph path(Vertex n);

  private:
    Vertex num_vertices_ = 0;
    std::vector<LogicalEdge> edges_;  // (u < v), sorted
    std::vector<std::vector<Vertex>> adjacency_;
};

// Vertex models (chains): logical vertex -> hardware qubits, each list sorted.
struct Embedding {
    std::map<Vertex, std::vector<QubitId>> vertex_models;

    std::size_t qubits_used() const;
    std::size_t max_chain() const;
    bool operator==(const Embedding&) const = default;
};

enum class ViolationKind {
    EmptyModel,
    Overlap,
    DisconnectedModel,
    UncoveredEdge,
    InactiveQubit,
    UnknownVertex,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string details;
};

struct EmbeddingReport {
    bool valid = false;
    std::vector<Violation> violations;
    std::size_t qubits_used = 0;
    std::size_t max_chain = 0;
    std::size_t chain_edges = 0;

    // Message listing every violation, empty when valid.
    std::string summary() const;
};

// Checks that every logical vertex maps to a nonempty connected set of
// active qubits, that models are pairwise disjoint, and that every logical
// edge is realized by at least one active coupler between the two models.
// All violations are collected.
EmbeddingReport validate_embedding(const LogicalGraph& g, const ChimeraGraph& hw, const Embedding& e);

// Number of active couplers with both endpoints in the same vertex model.
std::size_t count_chain_edges(const ChimeraGraph& hw, const Embedding& e);

struct CmrParams {
    std::uint64_t seed = 0;
    int max_tries = 10;
    int max_passes = 10;
    double penalty_base = 10.0;
};

// Randomized minor embedding by usage-penalized shortest paths. Vertex
// models are grown from a root qubit chosen to minimize the summed
// node-weighted distance to the models of placed neighbours; qubits may be
// shared while searching and are penalized by penalty_base^(usage).
// Improvement passes re-route one vertex at a time until no qubit is shared,
// then redundant qubits are pruned. Every returned embedding has passed
// validate_embedding. Returns nullopt when max_tries restarts all fail.
std::optional<Embedding> find_embedding_cmr(const LogicalGraph& g, const ChimeraGraph& hw, const CmrParams& params = {});

// Worst-case operation count (EG + NG ln NG) * 2 EH * NH * NG.
double worst_case_embedding_ops(double nh, double eh, double ng, double eg);

}  // namespace qsplit
