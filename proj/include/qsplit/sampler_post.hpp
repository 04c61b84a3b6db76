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
#include <functional>
#include <utility>
#include <vector>

#include "qsplit/embedding.hpp"
#include "qsplit/qubo_ising.hpp"

namespace qsplit::post {

struct Readout {
    SpinConfig config;
    double energy = 0.0;
    bool operator==(const Readout&) const = default;
};

using ReadoutSet = std::vector<Readout>;

struct SolutionEntry {
    SpinConfig config;
    double energy = 0.0;
    std::size_t multiplicity = 0;
    bool operator==(const SolutionEntry&) const = default;
};

// Distinct configurations ordered by (energy, config), each with the number
// of readouts that produced it.
struct SolutionSummary {
    std::vector<SolutionEntry> entries;

    const SolutionEntry& best() const { return entries.front(); }
    std::size_t total_readouts() const;
};

// Fraction of `trials` in which at least one of s independent
// Bernoulli(p_s) runs succeeds. Deterministic for a given seed.
double simulate_repetitions(double p_s, std::int64_t s, std::int64_t trials, std::uint64_t seed);

// Standard deviation of the estimate above for true success probability p.
double binomial_sigma(double p, std::int64_t trials);

// In-place binary-heap sort. Performs O(k log k) comparisons.
template <typename T, typename Less = std::less<T>>
void heapsort(std::vector<T>& items, Less less = {}) {
    const std::size_t n = items.size();
    auto sift_down = [&](std::size_t root, std::size_t end) {
        for (;;) {
            std::size_t child = 2 * root + 1;
            if (child >= end) return;
            if (child + 1 < end && less(items[child], items[child + 1])) ++child;
            if (!less(items[root], items[child])) return;
            std::swap(items[root], items[child]);
            root = child;
        }
    };
    for (std::size_t i = n / 2; i-- > 0;) sift_down(i, n);
    for (std::size_t end = n; end > 1; --end) {
        std::swap(items[0], items[end - 1]);
        sift_down(0, end - 1);
    }
}

// Orders by energy, then lexicographically by configuration.
bool readout_less(const Readout& a, const Readout& b);

// Heapsorts the readouts and groups identical (config, energy) pairs.
// Throws std::invalid_argument on an empty set.
SolutionSummary heapsort_readouts(ReadoutSet readouts);

// Majority vote over each vertex model; exact ties resolve to +1. Throws
// std::invalid_argument when a chain qubit has no +-1 value in hw_config.
SpinConfig unembed_readout(const SpinConfig& hw_config, const Embedding& e);

// Largest |energy - ising_energy(model, config)| over the set.
double max_energy_mismatch(const ReadoutSet& readouts, const IsingModel& model);

}  // namespace qsplit::post
