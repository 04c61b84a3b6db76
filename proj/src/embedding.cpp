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

#include "qsplit/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qsplit/random.hpp"

namespace qsplit {

LogicalGraph::LogicalGraph(Vertex num_vertices, std::vector<LogicalEdge> edges) : num_vertices_(num_vertices) {
    if (num_vertices < 0) throw std::invalid_argument("vertex count must be >= 0");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for " + std::to_string(num_vertices) + " vertices");
        }
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.assign(static_cast<std::size_t>(num_vertices), {});
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

LogicalGraph LogicalGraph::complete(Vertex n) {
    std::vector<LogicalEdge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return LogicalGraph(n, std::move(edges));
}

LogicalGraph LogicalGraph::path(Vertex n) {
    std::vector<LogicalEdge> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return LogicalGraph(n, std::move(edges));
}

std::size_t Embedding::qubits_used() const {
    std::set<QubitId> all;
    for (const auto& [v, chain] : vertex_models) all.insert(chain.begin(), chain.end());
    return all.size();
}

std::size_t Embedding::max_chain() const {
    std::size_t best = 0;
    for (const auto& [v, chain] : vertex_models) best = std::max(best, chain.size());
    return best;
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::EmptyModel: return "empty-model";
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::DisconnectedModel: return "disconnected-model";
        case ViolationKind::UncoveredEdge: return "uncovered-edge";
        case ViolationKind::InactiveQubit: return "inactive-qubit";
        case ViolationKind::UnknownVertex: return "unknown-vertex";
    }
    return "unknown";
}

std::string EmbeddingReport::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << to_string(violations[i].kind) << ": " << violations[i].details;
    }
    return os.str();
}

namespace {

bool model_connected(const ChimeraGraph& hw, const std::set<QubitId>& model) {
    if (model.empty()) return false;
    std::set<QubitId> seen{*model.begin()};
    std::vector<QubitId> stack{*model.begin()};
    while (!stack.empty()) {
        const QubitId q = stack.back();
        stack.pop_back();
        if (!hw.is_active(q)) continue;
        for (QubitId r : hw.neighbors(q)) {
            if (model.count(r) && seen.insert(r).second) stack.push_back(r);
        }
    }
    return seen.size() == model.size();
}

bool models_adjacent(const ChimeraGraph& hw, const std::set<QubitId>& a, const std::set<QubitId>& b) {
    for (QubitId q : a) {
        if (!hw.is_active(q)) continue;
        for (QubitId r : hw.neighbors(q)) {
            if (b.count(r)) return true;
        }
    }
    return false;
}

}  // namespace

EmbeddingReport validate_embedding(const LogicalGraph& g, const ChimeraGraph& hw, const Embedding& e) {
    EmbeddingReport report;
    auto add = [&](ViolationKind kind, std::string details) { report.violations.push_back({kind, std::move(details)}); };

    std::map<Vertex, std::set<QubitId>> models;
    for (const auto& [v, chain] : e.vertex_models) {
        if (v < 0 || v >= g.num_vertices()) {
            add(ViolationKind::UnknownVertex, "vertex " + std::to_string(v) + " is not in the logical graph");
        }
        models[v] = std::set<QubitId>(chain.begin(), chain.end());
    }

    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto it = models.find(v);
        if (it == models.end() || it->second.empty()) {
            add(ViolationKind::EmptyModel, "vertex " + std::to_string(v) + " has no qubits");
        }
    }

    std::map<QubitId, std::vector<Vertex>> holders;
    for (const auto& [v, model] : models) {
        for (QubitId q : model) {
            holders[q].push_back(v);
            if (!hw.is_active(q)) {
                add(ViolationKind::InactiveQubit,
                    "vertex " + std::to_string(v) + " uses inactive qubit " + std::to_string(q));
            }
        }
    }
    for (const auto& [q, vs] : holders) {
        if (vs.size() < 2) continue;
        std::string who;
        for (Vertex v : vs) who += (who.empty() ? "" : ",") + std::to_string(v);
        add(ViolationKind::Overlap, "qubit " + std::to_string(q) + " shared by vertices " + who);
    }

    for (const auto& [v, model] : models) {
        if (!model.empty() && !model_connected(hw, model)) {
            add(ViolationKind::DisconnectedModel, "vertex " + std::to_string(v) + " model is not connected");
        }
    }

    for (const auto& [u, v] : g.edges()) {
        auto iu = models.find(u);
        auto iv = models.find(v);
        if (iu == models.end() || iv == models.end() || iu->second.empty() || iv->second.empty()) continue;
        if (!models_adjacent(hw, iu->second, iv->second)) {
            add(ViolationKind::UncoveredEdge,
                "no coupler between models of " + std::to_string(u) + " and " + std::to_string(v));
        }
    }

    report.valid = report.violations.empty();
    report.qubits_used = holders.size();
    report.max_chain = e.max_chain();
    report.chain_edges = count_chain_edges(hw, e);
    return report;
}

std::size_t count_chain_edges(const ChimeraGraph& hw, const Embedding& e) {
    std::size_t count = 0;
    for (const auto& [v, chain] : e.vertex_models) {
        const std::set<QubitId> model(chain.begin(), chain.end());
        for (QubitId q : model) {
            for (QubitId r : hw.neighbors(q)) {
                if (q < r && model.count(r)) ++count;
            }
        }
    }
    return count;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class CmrSearch {
  public:
    CmrSearch(const LogicalGraph& g, const ChimeraGraph& hw, const CmrParams& params, Rng& rng)
        : g_(g), hw_(hw), params_(params), rng_(rng), active_(hw.active_nodes()) {}

    std::optional<Embedding> run_try() {
        const auto nv = static_cast<std::size_t>(g_.num_vertices());
        chains_.assign(nv, {});
        usage_.assign(static_cast<std::size_t>(hw_.num_ids()), 0);
        history_.assign(static_cast<std::size_t>(hw_.num_ids()), 0.0);

        std::vector<Vertex> order(nv);
        for (std::size_t i = 0; i < nv; ++i) order[i] = static_cast<Vertex>(i);

        shuffle(order.begin(), order.end(), rng_);
        for (Vertex u : order) {
            if (!place(u)) return std::nullopt;
        }
        for (int pass = 0; pass < params_.max_passes; ++pass) {
            if (overlap_free()) break;
            // Qubits that stay shared accumulate a history cost so that
            // chains walled in by their neighbours eventually get displaced.
            const double step = params_.penalty_base * params_.penalty_base;
            for (std::size_t q = 0; q < usage_.size(); ++q) {
                if (usage_[q] > 1) history_[q] += step * (usage_[q] - 1);
            }
            shuffle(order.begin(), order.end(), rng_);
            for (Vertex u : order) {
                tear_out(u);
                if (!place(u)) return std::nullopt;
            }
        }
        if (!overlap_free()) return std::nullopt;

        prune();
        Embedding e;
        for (std::size_t v = 0; v < nv; ++v) e.vertex_models[static_cast<Vertex>(v)] = chains_[v];
        if (!validate_embedding(g_, hw_, e).valid) return std::nullopt;
        return e;
    }

  private:
    double weight(QubitId q) const {
        const auto i = static_cast<std::size_t>(q);
        return (1.0 + history_[i]) * std::pow(params_.penalty_base, std::min(usage_[i], 64));
    }

    bool overlap_free() const {
        return std::all_of(usage_.begin(), usage_.end(), [](int u) { return u <= 1; });
    }

    void tear_out(Vertex u) {
        for (QubitId q : chains_[static_cast<std::size_t>(u)]) --usage_[static_cast<std::size_t>(q)];
        chains_[static_cast<std::size_t>(u)].clear();
    }

    // Node-weighted multi-source Dijkstra from the model of v. dist includes
    // the weight of the endpoint; sources have distance 0.
    void shortest_paths(Vertex v, std::vector<double>& dist, std::vector<QubitId>& parent) const {
        dist.assign(static_cast<std::size_t>(hw_.num_ids()), kInf);
        parent.assign(static_cast<std::size_t>(hw_.num_ids()), -1);
        using Item = std::pair<double, QubitId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        for (QubitId q : chains_[static_cast<std::size_t>(v)]) {
            dist[static_cast<std::size_t>(q)] = 0.0;
            heap.emplace(0.0, q);
        }
        while (!heap.empty()) {
            const auto [d, q] = heap.top();
            heap.pop();
            if (d > dist[static_cast<std::size_t>(q)]) continue;
            for (QubitId r : hw_.neighbors(q)) {
                const double nd = d + weight(r);
                if (nd < dist[static_cast<std::size_t>(r)]) {
                    dist[static_cast<std::size_t>(r)] = nd;
                    parent[static_cast<std::size_t>(r)] = q;
                    heap.emplace(nd, r);
                }
            }
        }
    }

    bool place(Vertex u) {
        std::vector<Vertex> placed;
        for (Vertex v : g_.neighbors(u)) {
            if (!chains_[static_cast<std::size_t>(v)].empty()) placed.push_back(v);
        }

        std::vector<QubitId> chain;
        if (placed.empty()) {
            if (active_.empty()) return false;
            int least = std::numeric_limits<int>::max();
            for (QubitId q : active_) least = std::min(least, usage_[static_cast<std::size_t>(q)]);
            std::vector<QubitId> pool;
            for (QubitId q : active_) {
                if (usage_[static_cast<std::size_t>(q)] == least) pool.push_back(q);
            }
            chain.push_back(pool[uniform_index(rng_, pool.size())]);
        } else {
            const std::size_t k = placed.size();
            std::vector<std::vector<double>> dist(k);
            std::vector<std::vector<QubitId>> parent(k);
            for (std::size_t i = 0; i < k; ++i) shortest_paths(placed[i], dist[i], parent[i]);

            QubitId root = -1;
            double best = kInf;
            for (QubitId q : active_) {
                const double w = weight(q);
                double total = w;
                for (std::size_t i = 0; i < k && total < kInf; ++i) {
                    const double d = dist[i][static_cast<std::size_t>(q)];
                    if (d == kInf) {
                        total = kInf;
                    } else if (d > 0.0) {
                        total += d - w;
                    }
                }
                if (total < best) {
                    best = total;
                    root = q;
                }
            }
            if (root < 0) return false;

            std::set<QubitId> nodes{root};
            for (std::size_t i = 0; i < k; ++i) {
                QubitId x = parent[i][static_cast<std::size_t>(root)];
                // Walk back until reaching the neighbour's model (parent -1).
                while (x >= 0 && parent[i][static_cast<std::size_t>(x)] >= 0) {
                    nodes.insert(x);
                    x = parent[i][static_cast<std::size_t>(x)];
                }
            }
            chain.assign(nodes.begin(), nodes.end());
        }

        for (QubitId q : chain) ++usage_[static_cast<std::size_t>(q)];
        chains_[static_cast<std::size_t>(u)] = std::move(chain);
        return true;
    }

    bool still_valid_without(Vertex u, QubitId drop) const {
        std::set<QubitId> model(chains_[static_cast<std::size_t>(u)].begin(), chains_[static_cast<std::size_t>(u)].end());
        model.erase(drop);
        if (model.empty() || !model_connected(hw_, model)) return false;
        for (Vertex v : g_.neighbors(u)) {
            const auto& other = chains_[static_cast<std::size_t>(v)];
            if (!models_adjacent(hw_, model, std::set<QubitId>(other.begin(), other.end()))) return false;
        }
        return true;
    }

    // Drops qubits that are not needed for connectivity or edge coverage.
    void prune() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex u = 0; u < g_.num_vertices(); ++u) {
                auto& chain = chains_[static_cast<std::size_t>(u)];
                for (std::size_t i = chain.size(); i-- > 0 && chain.size() > 1;) {
                    if (still_valid_without(u, chain[i])) {
                        --usage_[static_cast<std::size_t>(chain[i])];
                        chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(i));
                        changed = true;
                    }
                }
            }
        }
    }

    const LogicalGraph& g_;
    const ChimeraGraph& hw_;
    const CmrParams& params_;
    Rng& rng_;
    std::vector<QubitId> active_;
    std::vector<std::vector<QubitId>> chains_;
    std::vector<int> usage_;
    std::vector<double> history_;
};

}  // namespace

std::optional<Embedding> find_embedding_cmr(const LogicalGraph& g, const ChimeraGraph& hw, const CmrParams& params) {
    if (g.num_vertices() < 1) throw std::invalid_argument("logical graph must have at least one vertex");
    if (params.max_tries < 1 || params.max_passes < 0) throw std::invalid_argument("max_tries must be >= 1");
    if (!(params.penalty_base > 1.0)) throw std::invalid_argument("penalty_base must be > 1");
    if (hw.num_nodes() == 0) return std::nullopt;

    Rng rng(params.seed);
    CmrSearch search(g, hw, params, rng);
    for (int attempt = 0; attempt < params.max_tries; ++attempt) {
        if (auto e = search.run_try()) return e;
    }
    return std::nullopt;
}

double worst_case_embedding_ops(double nh, double eh, double ng, double eg) {
    const double ng_log_ng = ng > 0.0 ? ng * std::log(ng) : 0.0;
    return (eg + ng_log_ng) * (2.0 * eh) * nh * ng;
}

}  // namespace qsplit
