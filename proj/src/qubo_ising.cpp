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

#include "qsplit/qubo_ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qsplit {

QuboInstance::QuboInstance(int n, std::vector<double> entries) : n_(n), q_(std::move(entries)) {
    if (n < 1) throw std::invalid_argument("QUBO size must be >= 1");
    if (q_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw std::invalid_argument("QUBO matrix needs " + std::to_string(n * n) + " entries, got " +
                                    std::to_string(q_.size()));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                throw std::invalid_argument("QUBO matrix is not symmetric at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            }
        }
    }
}

QuboInstance QuboInstance::zero(int n) {
    return QuboInstance(n, std::vector<double>(static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n, 0))));
}

void IsingModel::validate() const {
    if (h.empty()) throw std::invalid_argument("Ising model has no spins");
    const int n = size();
    for (const auto& [key, value] : j) {
        (void)value;
        if (key.first < 0 || key.second >= n || key.first >= key.second) {
            throw std::invalid_argument("invalid coupling key (" + std::to_string(key.first) + "," +
                                        std::to_string(key.second) + ")");
        }
    }
}

SpinConfig to_spin(const BinaryConfig& b) {
    SpinConfig z(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) z[i] = b[i] ? 1 : -1;
    return z;
}

BinaryConfig to_binary(const SpinConfig& z) {
    BinaryConfig b(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) b[i] = z[i] > 0 ? 1 : 0;
    return b;
}

double qubo_energy(const QuboInstance& q, const BinaryConfig& b) {
    const int n = q.size();
    if (b.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("binary configuration length " + std::to_string(b.size()) +
                                    " does not match QUBO size " + std::to_string(n));
    }
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
        if (!b[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < n; ++j) {
            if (b[static_cast<std::size_t>(j)]) e += q(i, j);
        }
    }
    return e;
}

double ising_energy(const IsingModel& m, const SpinConfig& z) {
    if (z.size() != m.h.size()) {
        throw std::invalid_argument("spin configuration length " + std::to_string(z.size()) +
                                    " does not match model size " + std::to_string(m.h.size()));
    }
    double e = m.offset;
    for (std::size_t i = 0; i < z.size(); ++i) e -= m.h[i] * z[i];
    for (const auto& [key, coupling] : m.j) {
        e -= coupling * z[static_cast<std::size_t>(key.first)] * z[static_cast<std::size_t>(key.second)];
    }
    return e;
}

IsingModel qubo_to_ising(const QuboInstance& q) {
    const int n = q.size();
    IsingModel m;
    m.h.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += q(i, j);
        m.h[static_cast<std::size_t>(i)] = -0.5 * row;
        m.offset += 0.5 * q(i, i);
        for (int j = i + 1; j < n; ++j) {
            if (q(i, j) == 0.0) continue;
            m.j[{i, j}] = -0.5 * q(i, j);
            m.offset += 0.5 * q(i, j);
        }
    }
    // -0.0 from negating zero rows reads badly in output.
    for (auto& v : m.h) v += 0.0;
    return m;
}

namespace {

// Gray-code enumeration over n variables. Variable i lives at bit (n-1-i) of
// the mask so numeric mask order is lexicographic configuration order.
// `flip(i)` updates the model's cached fields and returns the energy change;
// `exact(mask)` recomputes from scratch.
template <typename Flip, typename Exact>
std::vector<std::uint32_t> enumerate_minimizers(int n, double tol, double scale, Flip&& flip, Exact&& exact,
                                                double& best_energy) {
    if (n > kMaxBruteForceSize) {
        throw std::length_error("brute force refused: " + std::to_string(n) + " variables exceeds limit of " +
                                std::to_string(kMaxBruteForceSize));
    }
    const double margin = tol + 1e-9 * scale;
    const std::uint64_t total = std::uint64_t{1} << n;

    std::uint32_t mask = 0;
    double energy = exact(mask);
    double best_approx = energy;
    std::vector<std::pair<std::uint32_t, double>> candidates{{mask, energy}};

    for (std::uint64_t k = 1; k < total; ++k) {
        const int bit = std::countr_zero(k);
        const int var = n - 1 - bit;
        energy += flip(var);
        mask ^= std::uint32_t{1} << bit;
        if ((k & 4095) == 0) energy = exact(mask);
        if (energy > best_approx + margin) continue;
        if (energy < best_approx) {
            best_approx = energy;
            std::erase_if(candidates, [&](const auto& c) { return c.second > best_approx + margin; });
        }
        candidates.emplace_back(mask, energy);
    }

    best_energy = std::numeric_limits<double>::infinity();
    for (auto& c : candidates) {
        c.second = exact(c.first);
        best_energy = std::min(best_energy, c.second);
    }
    std::vector<std::uint32_t> out;
    for (const auto& c : candidates) {
        if (c.second <= best_energy + tol) out.push_back(c.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ArgminResult<SpinConfig> brute_force_argmin(const IsingModel& m, double tol) {
    m.validate();
    const int n = m.size();
    if (n > kMaxBruteForceSize) {
        throw std::length_error("brute force refused: " + std::to_string(n) + " spins exceeds limit of " +
                                std::to_string(kMaxBruteForceSize));
    }
    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n));
    double scale = std::abs(m.offset);
    for (double v : m.h) scale += std::abs(v);
    for (const auto& [key, v] : m.j) {
        adj[static_cast<std::size_t>(key.first)].emplace_back(key.second, v);
        adj[static_cast<std::size_t>(key.second)].emplace_back(key.first, v);
        scale += std::abs(v);
    }

    auto decode = [n](std::uint32_t mask) {
        SpinConfig z(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1u ? 1 : -1;
        return z;
    };

    SpinConfig z(static_cast<std::size_t>(n), -1);
    auto flip = [&](int i) {
        const auto ui = static_cast<std::size_t>(i);
        double field = m.h[ui];
        for (const auto& [k, v] : adj[ui]) field += v * z[static_cast<std::size_t>(k)];
        const double delta = 2.0 * z[ui] * field;
        z[ui] = static_cast<std::int8_t>(-z[ui]);
        return delta;
    };
    auto exact = [&](std::uint32_t mask) { return ising_energy(m, decode(mask)); };

    ArgminResult<SpinConfig> result;
    for (auto mask : enumerate_minimizers(n, tol, scale, flip, exact, result.energy)) {
        result.minimizers.push_back(decode(mask));
    }
    return result;
}

ArgminResult<BinaryConfig> brute_force_argmin(const QuboInstance& q, double tol) {
    const int n = q.size();
    if (n > kMaxBruteForceSize) {
        throw std::length_error("brute force refused: " + std::to_string(n) + " variables exceeds limit of " +
                                std::to_string(kMaxBruteForceSize));
    }
    double scale = 0.0;
    for (double v : q.entries()) scale += std::abs(v);

    auto decode = [n](std::uint32_t mask) {
        BinaryConfig b(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1u;
        return b;
    };

    BinaryConfig b(static_cast<std::size_t>(n), 0);
    auto flip = [&](int i) {
        double field = q(i, i);
        for (int k = 0; k < n; ++k) {
            if (k != i && b[static_cast<std::size_t>(k)]) field += 2.0 * q(i, k);
        }
        const auto ui = static_cast<std::size_t>(i);
        const double delta = b[ui] ? -field : field;
        b[ui] ^= 1u;
        return delta;
    };
    auto exact = [&](std::uint32_t mask) { return qubo_energy(q, decode(mask)); };

    ArgminResult<BinaryConfig> result;
    for (auto mask : enumerate_minimizers(n, tol, scale, flip, exact, result.energy)) {
        result.minimizers.push_back(decode(mask));
    }
    return result;
}

namespace {

double max_abs_parameter(const IsingModel& m) {
    double s = 0.0;
    for (double v : m.h) s = std::max(s, std::abs(v));
    for (const auto& [key, v] : m.j) s = std::max(s, std::abs(v));
    return s;
}

}  // namespace

IsingModel quantize_parameters(const IsingModel& m, int bits) {
    if (bits < 1) throw std::invalid_argument("quantization needs bits >= 1");
    const double scale = max_abs_parameter(m);
    if (scale == 0.0) return m;

    // Above 52 bits the grid is finer than double spacing near 1.
    const bool exact_grid = bits <= 52;
    const double intervals = std::ldexp(1.0, std::min(bits, 52)) - 1.0;  // levels - 1

    auto quantize = [&](double v) {
        const double x = std::clamp(v / scale, -1.0, 1.0);
        if (!exact_grid) return x;
        const double t = (x + 1.0) * intervals / 2.0;
        double k = std::floor(t);
        const double frac = t - k;
        if (frac > 0.5) {
            k += 1.0;
        } else if (frac == 0.5) {
            // Tie: prefer the level farther from zero; +1 side when symmetric.
            const double lower = 2.0 * k - intervals;
            const double upper = 2.0 * (k + 1.0) - intervals;
            if (std::abs(upper) >= std::abs(lower)) k += 1.0;
        }
        k = std::clamp(k, 0.0, intervals);
        return (2.0 * k - intervals) / intervals;
    };

    IsingModel out = m;
    for (auto& v : out.h) v = quantize(v);
    for (auto& [key, v] : out.j) v = quantize(v);
    return out;
}

double default_chain_strength(const IsingModel& m, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("chain strength factor must be > 0");
    return k * std::max(max_abs_parameter(m), 1e-12);
}

LogicalGraph logical_graph(const IsingModel& m) {
    std::vector<LogicalEdge> edges;
    for (const auto& [key, v] : m.j) {
        if (v != 0.0) edges.emplace_back(key.first, key.second);
    }
    return LogicalGraph(m.size(), std::move(edges));
}

IsingModel embed_parameters(const IsingModel& m, const Embedding& e, const ChimeraGraph& hw, double chain_strength) {
    m.validate();
    if (!(chain_strength > 0.0)) throw std::invalid_argument("chain strength must be > 0");
    const auto report = validate_embedding(logical_graph(m), hw, e);
    if (!report.valid) throw std::invalid_argument("invalid embedding: " + report.summary());

    std::vector<Vertex> owner(static_cast<std::size_t>(hw.num_ids()), -1);
    for (const auto& [v, chain] : e.vertex_models) {
        for (QubitId q : chain) owner[static_cast<std::size_t>(q)] = v;
    }

    IsingModel out;
    out.h.assign(static_cast<std::size_t>(hw.num_ids()), 0.0);
    out.offset = m.offset;

    for (const auto& [v, chain] : e.vertex_models) {
        const double share = m.h[static_cast<std::size_t>(v)] / static_cast<double>(chain.size());
        for (QubitId q : chain) out.h[static_cast<std::size_t>(q)] = share;
    }

    std::map<std::pair<Vertex, Vertex>, std::vector<Coupler>> between;
    for (const auto& [a, b] : hw.edges()) {
        const Vertex oa = owner[static_cast<std::size_t>(a)];
        const Vertex ob = owner[static_cast<std::size_t>(b)];
        if (oa < 0 || ob < 0) continue;
        if (oa == ob) {
            out.j[{a, b}] = chain_strength;
        } else {
            between[{std::min(oa, ob), std::max(oa, ob)}].emplace_back(a, b);
        }
    }
    for (const auto& [key, coupling] : m.j) {
        if (coupling == 0.0) continue;
        const auto& couplers = between.at(key);
        const double share = coupling / static_cast<double>(couplers.size());
        for (const auto& c : couplers) out.j[c] = share;
    }
    return out;
}

SpinConfig extend_to_hardware(const SpinConfig& logical, const Embedding& e, const ChimeraGraph& hw) {
    SpinConfig out(static_cast<std::size_t>(hw.num_ids()), 1);
    for (const auto& [v, chain] : e.vertex_models) {
        const auto s = logical.at(static_cast<std::size_t>(v));
        for (QubitId q : chain) out.at(static_cast<std::size_t>(q)) = s;
    }
    return out;
}

}  // namespace qsplit
