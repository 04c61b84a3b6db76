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
#include <utility>
#include <vector>

#include "qsplit/chimera.hpp"
#include "qsplit/embedding.hpp"

namespace qsplit {

using SpinConfig = std::vector<std::int8_t>;     // entries in {-1, +1}
using BinaryConfig = std::vector<std::uint8_t>;  // entries in {0, 1}

// QUBO objective b^T Q b over a symmetric matrix.
class QuboInstance {
  public:
    // Row-major n x n entries. Throws std::invalid_argument if n < 1, the
    // size is wrong, or the matrix is not exactly symmetric.
    QuboInstance(int n, std::vector<double> entries);

    static QuboInstance zero(int n);

    int size() const { return n_; }
    double operator()(int i, int j) const { return q_[static_cast<std::size_t>(i * n_ + j)]; }
    const std::vector<double>& entries() const { return q_; }

    bool operator==(const QuboInstance&) const = default;

  private:
    int n_;
    std::vector<double> q_;
};

using CouplingMap = std::map<std::pair<int, int>, double>;  // keys (i, j) with i < j

// E(z) = offset - sum_i h_i z_i - sum_{i<j} J_ij z_i z_j
struct IsingModel {
    std::vector<double> h;
    CouplingMap j;
    double offset = 0.0;

    int size() const { return static_cast<int>(h.size()); }
    // Throws std::invalid_argument when empty or when a coupling key is not
    // an in-range (i < j) pair.
    void validate() const;

    bool operator==(const IsingModel&) const = default;
};

// Spin convention used throughout: z = 2b - 1.
SpinConfig to_spin(const BinaryConfig& b);
BinaryConfig to_binary(const SpinConfig& z);

double qubo_energy(const QuboInstance& q, const BinaryConfig& b);
double ising_energy(const IsingModel& m, const SpinConfig& z);

// Translation satisfying qubo_energy(q, b) == ising_energy(m, to_spin(b))
// for every b:
//   h_i    = -1/2 sum_j Q_ij
//   J_ij   = -1/2 Q_ij            (i < j, zero couplings omitted)
//   offset =  1/2 sum_{i<=j} Q_ij
IsingModel qubo_to_ising(const QuboInstance& q);

template <typename Config>
struct ArgminResult {
    std::vector<Config> minimizers;  // lexicographic order
    double energy = 0.0;
    std::size_t multiplicity() const { return minimizers.size(); }
};

inline constexpr int kMaxBruteForceSize = 24;

// Exhaustive scan of all 2^n configurations. Configurations within tol of the
// minimum are reported as ties. Throws std::length_error for n > 24.
ArgminResult<SpinConfig> brute_force_argmin(const IsingModel& m, double tol = 1e-9);
ArgminResult<BinaryConfig> brute_force_argmin(const QuboInstance& q, double tol = 1e-9);

// Rescales h and J to max-abs 1 and rounds each value to the nearest of the
// 2^bits evenly spaced levels in [-1, 1], ties away from zero. The offset is
// kept. An all-zero model is returned unchanged.
IsingModel quantize_parameters(const IsingModel& m, int bits);

// k * max(max |h_i|, max |J_ij|, 1e-12).
double default_chain_strength(const IsingModel& m, double k = 2.0);

// Logical connectivity: one edge per nonzero coupling.
LogicalGraph logical_graph(const IsingModel& m);

// Hardware model over hw's id space. Biases are split equally over each
// vertex model, couplings equally over all couplers joining two models, and
// every coupler inside a model gets +chain_strength. For chain-aligned
// configurations the hardware energy equals the logical energy minus
// chain_strength * count_chain_edges(hw, e). Throws std::invalid_argument
// if e is not a valid embedding of logical_graph(m) or chain_strength <= 0.
IsingModel embed_parameters(const IsingModel& m, const Embedding& e, const ChimeraGraph& hw, double chain_strength);

// Copies each logical spin onto every qubit of its vertex model. Qubits
// outside the embedding are set to +1.
SpinConfig extend_to_hardware(const SpinConfig& logical, const Embedding& e, const ChimeraGraph& hw);

}  // namespace qsplit
