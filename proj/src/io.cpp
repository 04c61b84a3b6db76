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

#include "qsplit/io.hpp"

#include <algorithm>
#include <fstream>
#include <span>
#include <sstream>
#include <stdexcept>

namespace qsplit::io {

json chimera_to_json(const ChimeraGraph& g) {
    json dead_couplers = json::array();
    for (const auto& [a, b] : g.faults().dead_couplers) dead_couplers.push_back({a, b});
    return json{{"m", g.rows()},
                {"n", g.cols()},
                {"l", g.shore()},
                {"dead_qubits", g.faults().dead_qubits},
                {"dead_couplers", dead_couplers}};
}

ChimeraGraph chimera_from_json(const json& j) {
    const auto g = build_chimera(j.at("m").get<int>(), j.at("n").get<int>(), j.value("l", 4));
    FaultMask mask;
    if (j.contains("dead_qubits")) {
        for (const auto& q : j.at("dead_qubits")) mask.dead_qubits.insert(q.get<QubitId>());
    }
    if (j.contains("dead_couplers")) {
        for (const auto& c : j.at("dead_couplers")) {
            if (!c.is_array() || c.size() != 2) throw std::invalid_argument("dead coupler must be a pair");
            mask.dead_couplers.insert(make_coupler(c[0].get<QubitId>(), c[1].get<QubitId>()));
        }
    }
    return mask.empty() ? g : apply_faults(g, mask);
}

json ising_to_json(const IsingModel& m) {
    json couplings = json::array();
    for (const auto& [key, v] : m.j) couplings.push_back({key.first, key.second, v});
    return json{{"n", m.size()}, {"h", m.h}, {"j", couplings}, {"offset", m.offset}};
}

IsingModel ising_from_json(const json& j) {
    IsingModel m;
    m.h = j.at("h").get<std::vector<double>>();
    if (j.contains("n") && j.at("n").get<int>() != m.size()) {
        throw std::invalid_argument("Ising JSON: n does not match length of h");
    }
    if (j.contains("j")) {
        for (const auto& t : j.at("j")) {
            if (!t.is_array() || t.size() != 3) throw std::invalid_argument("Ising JSON: coupling must be [i,j,v]");
            int a = t[0].get<int>();
            int b = t[1].get<int>();
            if (a > b) std::swap(a, b);
            m.j[{a, b}] += t[2].get<double>();
        }
    }
    m.offset = j.value("offset", 0.0);
    m.validate();
    return m;
}

json embedding_to_json(const Embedding& e) {
    json models = json::object();
    for (const auto& [v, chain] : e.vertex_models) models[std::to_string(v)] = chain;
    return json{{"vertex_models", models}};
}

Embedding embedding_from_json(const json& j) {
    Embedding e;
    for (const auto& [key, chain] : j.at("vertex_models").items()) {
        std::size_t used = 0;
        const int v = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument("embedding JSON: bad vertex key '" + key + "'");
        auto qubits = chain.get<std::vector<QubitId>>();
        std::sort(qubits.begin(), qubits.end());
        e.vertex_models[v] = std::move(qubits);
    }
    return e;
}

json report_to_json(const EmbeddingReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back({{"kind", to_string(v.kind)}, {"details", v.details}});
    return json{{"valid", r.valid},
                {"violations", violations},
                {"qubits_used", r.qubits_used},
                {"max_chain", r.max_chain},
                {"chain_edges", r.chain_edges}};
}

namespace {

std::vector<std::vector<std::string>> tokenized_lines(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string t; ls >> t;) tokens.push_back(t);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

double to_number(const std::string& s) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

int to_index(const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

}  // namespace

QuboInstance read_qubo_text(std::istream& in) {
    auto lines = tokenized_lines(in);
    if (lines.empty()) throw std::invalid_argument("QUBO file is empty");
    const auto& header = lines.front();
    if (header.size() > 2 || (header.size() == 2 && header[1] != "triplets")) {
        throw std::invalid_argument("QUBO header must be 'n' or 'n triplets'");
    }
    const int n = to_index(header[0]);
    if (n < 1) throw std::invalid_argument("QUBO size must be >= 1");
    const bool force_triplets = header.size() == 2;

    const std::span<const std::vector<std::string>> body(lines.begin() + 1, lines.end());
    const bool dense = !force_triplets && body.size() == static_cast<std::size_t>(n) &&
                       std::all_of(body.begin(), body.end(), [n](const auto& l) { return l.size() == static_cast<std::size_t>(n); });

    std::vector<double> q(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    if (dense) {
        std::size_t k = 0;
        for (const auto& l : body) {
            for (const auto& t : l) q[k++] = to_number(t);
        }
    } else {
        for (const auto& l : body) {
            if (l.size() != 3) throw std::invalid_argument("QUBO triplet line must be 'i j value'");
            const int i = to_index(l[0]);
            const int j = to_index(l[1]);
            if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("QUBO triplet index out of range");
            const double v = to_number(l[2]);
            q[static_cast<std::size_t>(i * n + j)] += v;
            if (i != j) q[static_cast<std::size_t>(j * n + i)] += v;
        }
    }
    return QuboInstance(n, std::move(q));
}

LogicalGraph read_edge_list(std::istream& in) {
    std::vector<LogicalEdge> edges;
    Vertex declared = -1;
    Vertex max_id = -1;
    for (const auto& l : tokenized_lines(in)) {
        if (l.size() == 1) {
            declared = to_index(l[0]);
            continue;
        }
        if (l.size() != 2) throw std::invalid_argument("edge list lines must be 'u v'");
        const Vertex u = to_index(l[0]);
        const Vertex v = to_index(l[1]);
        max_id = std::max({max_id, u, v});
        edges.emplace_back(u, v);
    }
    const Vertex n = declared >= 0 ? declared : max_id + 1;
    return LogicalGraph(n, std::move(edges));
}

post::ReadoutSet read_readouts(std::istream& in) {
    post::ReadoutSet out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto j = json::parse(line);
        post::Readout r;
        for (const auto& v : j.at("config")) {
            const int s = v.get<int>();
            if (s != 1 && s != -1) {
                throw std::invalid_argument("readout line " + std::to_string(lineno) + ": spins must be +1 or -1");
            }
            r.config.push_back(static_cast<std::int8_t>(s));
        }
        r.energy = j.at("energy").get<double>();
        out.push_back(std::move(r));
    }
    return out;
}

void write_readouts(std::ostream& out, const post::ReadoutSet& readouts) {
    for (const auto& r : readouts) {
        std::vector<int> config(r.config.begin(), r.config.end());
        out << json{{"config", config}, {"energy", r.energy}}.dump() << '\n';
    }
}

json summary_to_json(const post::SolutionSummary& s) {
    json entries = json::array();
    for (const auto& e : s.entries) {
        entries.push_back({{"config", std::vector<int>(e.config.begin(), e.config.end())},
                           {"energy", e.energy},
                           {"multiplicity", e.multiplicity}});
    }
    json out{{"entries", entries}, {"readouts", s.total_readouts()}};
    if (!s.entries.empty()) {
        out["best_energy"] = s.best().energy;
        out["best_config"] = std::vector<int>(s.best().config.begin(), s.best().config.end());
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qsplit::io
