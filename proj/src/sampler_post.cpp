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

#include "qsplit/sampler_post.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qsplit/random.hpp"

namespace qsplit::post {

std::size_t SolutionSummary::total_readouts() const {
    std::size_t total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
}

double simulate_repetitions(double p_s, std::int64_t s, std::int64_t trials, std::uint64_t seed) {
    if (!(p_s > 0.0 && p_s < 1.0)) throw std::invalid_argument("success probability must lie in (0, 1)");
    if (s < 1) throw std::invalid_argument("repetition count must be >= 1");
    if (trials < 1) throw std::invalid_argument("trial count must be >= 1");

    Rng rng(seed);
    std::int64_t hits = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        for (std::int64_t r = 0; r < s; ++r) {
            if (uniform_unit(rng) < p_s) {
                ++hits;
                break;
            }
        }
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

double binomial_sigma(double p, std::int64_t trials) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

bool readout_less(const Readout& a, const Readout& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.config < b.config;
}

SolutionSummary heapsort_readouts(ReadoutSet readouts) {
    if (readouts.empty()) throw std::invalid_argument("cannot summarize an empty readout set");
    heapsort(readouts, readout_less);

    SolutionSummary summary;
    for (auto& r : readouts) {
        if (!summary.entries.empty()) {
            auto& last = summary.entries.back();
            if (last.energy == r.energy && last.config == r.config) {
                ++last.multiplicity;
                continue;
            }
        }
        summary.entries.push_back({std::move(r.config), r.energy, 1});
    }
    return summary;
}

SpinConfig unembed_readout(const SpinConfig& hw_config, const Embedding& e) {
    Vertex n = 0;
    for (const auto& [v, chain] : e.vertex_models) n = std::max(n, v + 1);
    SpinConfig out(static_cast<std::size_t>(n), 1);
    for (const auto& [v, chain] : e.vertex_models) {
        long vote = 0;
        for (QubitId q : chain) {
            const auto idx = static_cast<std::size_t>(q);
            if (q < 0 || idx >= hw_config.size() || (hw_config[idx] != 1 && hw_config[idx] != -1)) {
                throw std::invalid_argument("readout has no value for qubit " + std::to_string(q) +
                                            " of vertex " + std::to_string(v));
            }
            vote += hw_config[idx];
        }
        out[static_cast<std::size_t>(v)] = vote >= 0 ? 1 : -1;
    }
    return out;
}

double max_energy_mismatch(const ReadoutSet& readouts, const IsingModel& model) {
    double worst = 0.0;
    for (const auto& r : readouts) worst = std::max(worst, std::abs(r.energy - ising_energy(model, r.config)));
    return worst;
}

}  // namespace qsplit::post
